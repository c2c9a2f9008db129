#include "regge/rigidity.hpp"

#include <algorithm>
#include <cmath>
#include <map>

#include "star_layout.hpp"

namespace regge {

namespace {

// Interior curvature magnitude below which a star complex counts as flat.
constexpr double kFlatTol = 1e-9;

double max_interior_kappa(const StarComplex& sc, const CurvatureField& c) {
  double worst = 0;
  for (int e : sc.complex.interior_edge_indices)
    worst = std::max(worst, std::abs(c.kappa[static_cast<size_t>(e)]));
  return worst;
}

} // namespace

StarComplex star_from_embedding(const EmbeddedPolyhedron& p) {
  if (p.faces.empty()) fail(ErrorCode::PreconditionViolation, "polyhedron has no faces");

  std::vector<VertexTriple> tris;
  std::map<VertexPair, double> lens;
  tris.reserve(p.faces.size());
  for (const auto& f : p.faces) {
    tris.push_back(make_triangle(f[0], f[1], f[2]));
    for (int i = 0; i < 3; ++i)
      for (int j = i + 1; j < 3; ++j) {
        const int u = f[static_cast<size_t>(i)], v = f[static_cast<size_t>(j)];
        lens[make_edge(u, v)] = (p.vertices[static_cast<size_t>(u)] -
                                 p.vertices[static_cast<size_t>(v)])
                                    .norm();
      }
  }
  const ConeSurface surface = build_surface(tris, lens);

  std::vector<double> radii(p.vertices.size());
  for (size_t v = 0; v < p.vertices.size(); ++v)
    radii[v] = (p.vertices[v] - p.star_point).norm();

  StarComplex sc;
  try {
    sc = cone_over(surface, radii);
  } catch (const Error& e) {
    if (e.code() == ErrorCode::PyramidInfeasible)
      fail(ErrorCode::StarPointInvalid, "star point is coplanar with a face", e.index());
    throw;
  }

  // A valid star point sees the boundary exactly once: all radial cone
  // angles are then 2*pi.
  const CurvatureField c = curvatures(sc.complex, sc.lengths);
  const double worst = max_interior_kappa(sc, c);
  if (worst > kFlatTol)
    fail(ErrorCode::StarPointInvalid,
         "interior curvature " + std::to_string(worst) + " from the chosen star point");
  return sc;
}

RigidityVerdict rigidity_verdict(const StarComplex& sc, double zero_tol_rel) {
  RigidityVerdict verdict;

  const CurvatureField c = curvatures(sc.complex, sc.lengths);
  verdict.max_interior_curvature = max_interior_kappa(sc, c);
  verdict.advisory = verdict.max_interior_curvature > kFlatTol;

  verdict.report = hessian(sc.complex, sc.lengths, sc.complex.interior_edge_indices, zero_tol_rel);
  verdict.kernel_dimension = verdict.report.zero;

  // Radial edges sorted by edge id are sorted by surface vertex (the apex is
  // the largest index), so slot v of the Hessian is surface vertex v.
  const StarLayout layout = star_layout(sc, false);
  const auto n = static_cast<Eigen::Index>(sc.base.vertex_count);
  Eigen::MatrixXd translations(n, 3);
  for (Eigen::Index v = 0; v < n; ++v)
    translations.row(v) = layout.position[static_cast<size_t>(v)].transpose() /
                          sc.radii[static_cast<size_t>(v)];

  Eigen::ColPivHouseholderQR<Eigen::MatrixXd> qr(translations);
  qr.setThreshold(1e-10);
  verdict.trivial_dimension = static_cast<int>(qr.rank());
  verdict.rigid = verdict.kernel_dimension == verdict.trivial_dimension;

  if (!verdict.rigid && verdict.kernel_dimension > verdict.trivial_dimension) {
    // Project the kernel away from the trivial subspace and keep the
    // largest remainder.
    const Eigen::MatrixXd q =
        qr.householderQ() * Eigen::MatrixXd::Identity(n, verdict.trivial_dimension);
    const Eigen::MatrixXd residual =
        verdict.report.kernel - q * (q.transpose() * verdict.report.kernel);
    Eigen::Index best = 0;
    residual.colwise().norm().maxCoeff(&best);
    if (residual.col(best).norm() > 1e-8) {
      verdict.nontrivial_flex = residual.col(best).normalized();
    }
  }
  return verdict;
}

CorankReport corank_check(const Triangulation3& t3, const EdgeLengths& l, int interior_vertices,
                          int face_interior_vertices, double zero_tol_rel, double flat_tol) {
  if (t3.interior_edge_indices.empty())
    fail(ErrorCode::PreconditionViolation, "complex has no interior edges");

  const CurvatureField c = curvatures(t3, l);
  for (int e : t3.interior_edge_indices)
    if (std::abs(c.kappa[static_cast<size_t>(e)]) > flat_tol)
      fail(ErrorCode::NotFlat,
           "interior curvature " + std::to_string(c.kappa[static_cast<size_t>(e)]) +
               " exceeds the flatness tolerance",
           e);

  CorankReport rep;
  rep.report = hessian(t3, l, t3.interior_edge_indices, zero_tol_rel);
  rep.corank = rep.report.zero;
  rep.positive_index = rep.report.positive;
  rep.pass = rep.corank == 3 * interior_vertices + face_interior_vertices &&
             rep.positive_index == interior_vertices;
  return rep;
}

} // namespace regge
