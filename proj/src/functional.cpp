#include "regge/functional.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace regge {

namespace {

// Re-raise per-tet kernel failures with the tet named.
template <class F>
auto with_tet_index(int tet, F&& f) {
  try {
    return f();
  } catch (const Error& e) {
    if (e.code() == ErrorCode::DegenerateTet || e.code() == ErrorCode::IllConditioned)
      fail(e.code(), std::string(e.what()), tet);
    throw;
  }
}

} // namespace

CurvatureField curvatures(const Triangulation3& t3, const EdgeLengths& l) {
  CurvatureField out;
  out.total_angle.assign(t3.edges.size(), 0.0);
  for (size_t t = 0; t < t3.tets.size(); ++t) {
    const DihedralSet d = with_tet_index(static_cast<int>(t), [&] {
      return dihedral_angles(tet_lengths(t3, l, static_cast<int>(t)));
    });
    for (int le = 0; le < 6; ++le)
      out.total_angle[static_cast<size_t>(t3.tet_edge_ids[t][static_cast<size_t>(le)])] += d[le];
  }
  out.kappa.resize(out.total_angle.size());
  for (size_t e = 0; e < out.kappa.size(); ++e) {
    const double full = t3.edge_on_boundary[e] ? std::numbers::pi : 2.0 * std::numbers::pi;
    out.kappa[e] = full - out.total_angle[e];
  }
  return out;
}

double energy(const Triangulation3& t3, const EdgeLengths& l) {
  const CurvatureField c = curvatures(t3, l);
  double s = 0;
  for (size_t e = 0; e < c.kappa.size(); ++e) s += l.value[e] * c.kappa[e];
  return s;
}

std::vector<double> gradient(const Triangulation3& t3, const EdgeLengths& l) {
  return curvatures(t3, l).kappa;
}

HessianReport hessian(const Triangulation3& t3, const EdgeLengths& l,
                      const std::vector<int>& free_edges, double zero_tol_rel) {
  if (free_edges.empty()) fail(ErrorCode::PreconditionViolation, "no free edges");
  if (!(zero_tol_rel > 0)) fail(ErrorCode::PreconditionViolation, "zero tolerance must be positive");

  HessianReport rep;
  rep.free_edges = free_edges;
  std::sort(rep.free_edges.begin(), rep.free_edges.end());
  if (std::adjacent_find(rep.free_edges.begin(), rep.free_edges.end()) != rep.free_edges.end())
    fail(ErrorCode::PreconditionViolation, "duplicate free edge");
  if (rep.free_edges.front() < 0 ||
      rep.free_edges.back() >= static_cast<int>(t3.edges.size()))
    fail(ErrorCode::PreconditionViolation, "free edge id out of range");

  std::vector<int> slot(t3.edges.size(), -1);
  for (size_t i = 0; i < rep.free_edges.size(); ++i)
    slot[static_cast<size_t>(rep.free_edges[i])] = static_cast<int>(i);

  const auto n = static_cast<Eigen::Index>(rep.free_edges.size());
  rep.matrix = Eigen::MatrixXd::Zero(n, n);
  for (size_t t = 0; t < t3.tets.size(); ++t) {
    const auto jac = with_tet_index(static_cast<int>(t), [&] {
      return dihedral_jacobian(tet_lengths(t3, l, static_cast<int>(t)));
    });
    for (int le = 0; le < 6; ++le) {
      const int se = slot[static_cast<size_t>(t3.tet_edge_ids[t][static_cast<size_t>(le)])];
      if (se < 0) continue;
      for (int lf = 0; lf < 6; ++lf) {
        const int sf = slot[static_cast<size_t>(t3.tet_edge_ids[t][static_cast<size_t>(lf)])];
        if (sf >= 0) rep.matrix(se, sf) -= jac(le, lf);
      }
    }
  }

  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> eig(rep.matrix);
  rep.eigenvalues = eig.eigenvalues();
  rep.zero_tolerance = zero_tol_rel;
  const double radius = rep.eigenvalues.cwiseAbs().maxCoeff();
  const double cutoff = zero_tol_rel * radius;

  std::vector<Eigen::Index> kernel_cols;
  for (Eigen::Index i = 0; i < rep.eigenvalues.size(); ++i) {
    const double lam = rep.eigenvalues(i);
    if (std::abs(lam) <= cutoff) {
      ++rep.zero;
      kernel_cols.push_back(i);
    } else {
      ++(lam > 0 ? rep.positive : rep.negative);
      rep.spectral_gap = rep.spectral_gap == 0 ? std::abs(lam)
                                               : std::min(rep.spectral_gap, std::abs(lam));
    }
  }
  rep.kernel.resize(n, static_cast<Eigen::Index>(kernel_cols.size()));
  for (size_t i = 0; i < kernel_cols.size(); ++i)
    rep.kernel.col(static_cast<Eigen::Index>(i)) = eig.eigenvectors().col(kernel_cols[i]);
  return rep;
}

} // namespace regge
