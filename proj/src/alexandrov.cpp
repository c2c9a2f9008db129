#include "regge/alexandrov.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <map>
#include <numbers>
#include <string>

#include "regge/error.hpp"
#include "regge/functional.hpp"
#include "star_layout.hpp"

namespace regge {

namespace {

constexpr double kPi = std::numbers::pi;

int third_vertex(const VertexTriple& tri, int u, int v) {
  for (int x : tri)
    if (x != u && x != v) return x;
  fail(ErrorCode::PreconditionViolation, "triangle does not span the edge");
}

double corner_angle(const ConeSurface& s, int t, int v) {
  const auto angles = s.triangle_corner_angles(t);
  for (int i = 0; i < 3; ++i)
    if (s.triangles[t][i] == v) return angles[i];
  fail(ErrorCode::PreconditionViolation, "vertex not in triangle", t);
}

// Curvature at the radial edges, indexed by surface vertex.
Eigen::VectorXd radial_curvature(const StarComplex& sc) {
  const CurvatureField c = curvatures(sc.complex, sc.lengths);
  Eigen::VectorXd kappa(sc.base.vertex_count);
  for (int v = 0; v < sc.base.vertex_count; ++v) kappa(v) = c.kappa[sc.radial_edge(v)];
  return kappa;
}

// Worst reflex boundary edge of the cone, or -1 when every dihedral is at
// most pi + theta_tol.
int worst_reflex_edge(const StarComplex& sc, double theta_tol) {
  const CurvatureField c = curvatures(sc.complex, sc.lengths);
  int worst = -1;
  double worst_excess = theta_tol;
  for (int e : sc.complex.boundary_edge_indices) {
    const double excess = c.total_angle[e] - kPi;
    if (excess > worst_excess) {
      worst_excess = excess;
      worst = e;
    }
  }
  return worst;
}

// Failures that merely mark a trial state as infeasible: the caller backs
// off instead of propagating them.
bool recoverable_trial_error(ErrorCode code) {
  return code == ErrorCode::PyramidInfeasible || code == ErrorCode::DegenerateTet ||
         code == ErrorCode::DegenerateTriangle || code == ErrorCode::IllConditioned;
}

struct CorrectorResult {
  bool converged = false;
  bool singular = false;  // Jacobian condition exceeded cond_max
  double condition = 0;   // worst condition seen in this run
  std::vector<double> radii;
  StarComplex sc;  // state at the converged radii
};

// Newton iteration for kappa(r) = target at fixed triangulation. Infeasible
// or degenerate trial states end the run as non-converged; the caller reacts
// by shrinking the continuation step.
CorrectorResult newton_correct(const ConeSurface& surface, std::vector<double> r,
                               const Eigen::VectorXd& target, double tol,
                               const SolverConfig& cfg, SolverTrace& trace) {
  CorrectorResult out;
  for (int it = 0;; ++it) {
    StarComplex sc;
    Eigen::VectorXd kappa;
    Eigen::MatrixXd jac;
    try {
      sc = cone_over(surface, r);
      std::tie(kappa, jac) = curvature_and_jacobian(sc);
    } catch (const Error& err) {
      if (recoverable_trial_error(err.code())) return out;
      throw;
    }
    if ((kappa - target).cwiseAbs().maxCoeff() <= tol) {
      out.converged = true;
      out.radii = std::move(r);
      out.sc = std::move(sc);
      return out;
    }
    if (it >= cfg.newton_max_iters) return out;
    ++trace.newton_iterations;
    const Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(jac);
    const Eigen::VectorXd& ev = es.eigenvalues();
    const double lo = ev.cwiseAbs().minCoeff();
    const double hi = ev.cwiseAbs().maxCoeff();
    const double cond = lo > 0 ? hi / lo : std::numeric_limits<double>::infinity();
    out.condition = std::max(out.condition, cond);
    trace.max_condition = std::max(trace.max_condition, cond);
    if (!(cond <= cfg.cond_max)) {
      out.singular = true;
      return out;
    }
    const Eigen::VectorXd delta =
        es.eigenvectors() * (es.eigenvectors().transpose() * (kappa - target)).cwiseQuotient(ev);
    for (int v = 0; v < static_cast<int>(r.size()); ++v) {
      r[v] -= delta(v);
      if (!(r[v] > 0)) return out;
    }
  }
}

enum class FlipOutcome { kClean, kStuck };

// Restores the weighted-Delaunay property at a frozen target, worst reflex
// edge first. Candidates whose flip is blocked (diagonal exists, unfold not
// convex, corrector diverges) are skipped for the round; when no candidate
// works the pass reports kStuck and the caller shrinks its step.
FlipOutcome restore_delaunay(ConeSurface& surface, std::vector<double>& r, StarComplex& sc,
                             const Eigen::VectorXd& target, double tol, const SolverConfig& cfg,
                             SolverTrace& trace) {
  for (int rounds = 0;; ++rounds) {
    const CurvatureField c = curvatures(sc.complex, sc.lengths);
    std::vector<std::pair<double, int>> reflex;
    for (int e : sc.complex.boundary_edge_indices) {
      const double excess = c.total_angle[e] - kPi;
      if (excess > cfg.theta_tol)
        reflex.emplace_back(-excess, surface.edge_index(sc.complex.edges[e][0],
                                                        sc.complex.edges[e][1]));
    }
    if (reflex.empty()) return FlipOutcome::kClean;
    if (rounds >= cfg.max_flips_per_step)
      fail(ErrorCode::FlipLoop, "flip count exceeded the per-step cap");
    std::sort(reflex.begin(), reflex.end());
    bool flipped = false;
    for (const auto& [neg_excess, e] : reflex) {
      ConeSurface candidate;
      try {
        candidate = flip_edge(surface, e);
      } catch (const Error& err) {
        if (err.code() == ErrorCode::NonSimplicialFlip ||
            err.code() == ErrorCode::PreconditionViolation)
          continue;
        throw;
      }
      CorrectorResult after = newton_correct(candidate, r, target, tol, cfg, trace);
      if (!after.converged) continue;
      surface = std::move(candidate);
      r = std::move(after.radii);
      sc = std::move(after.sc);
      ++trace.flips;
      flipped = true;
      break;
    }
    if (!flipped) return FlipOutcome::kStuck;
  }
}

// Failure at an exhausted step budget: a flattening image near t = 1 is the
// degenerate-polygon case; otherwise blame the Jacobian or the step size.
[[noreturn]] void report_stall(const StarComplex& sc, double t, bool singular) {
  if (t >= 0.9) {
    const StarLayout layout = star_layout(sc, false);
    Eigen::MatrixXd pts(static_cast<int>(layout.position.size()), 3);
    Eigen::Vector3d mean = Eigen::Vector3d::Zero();
    for (const auto& p : layout.position) mean += p;
    mean /= static_cast<double>(layout.position.size());
    for (int v = 0; v < pts.rows(); ++v) pts.row(v) = (layout.position[v] - mean).transpose();
    const Eigen::JacobiSVD<Eigen::MatrixXd> svd(pts);
    if (svd.singularValues()(2) < 0.02 * svd.singularValues()(0))
      fail(ErrorCode::DegeneratesToPolygon, "metric degenerates to a doubled polygon");
  }
  if (singular)
    fail(ErrorCode::JacobianSingular, "curvature Jacobian condition exceeds the bound");
  fail(ErrorCode::StepUnderflow, "continuation step fell below the minimum");
}

}  // namespace

TargetMetric make_target_metric(const ConeSurface& s) {
  TargetMetric m;
  m.surface = s;
  double total = 0;
  for (int v = 0; v < s.vertex_count; ++v) {
    const double k = s.curvatures[v];
    if (k < -kConePointTol)
      fail(ErrorCode::PreconditionViolation, "positive curvature required at every vertex", v);
    if (k > kConePointTol) m.cone_points.push_back(v);
    total += k;
  }
  if (std::abs(total - 4.0 * kPi) > 1e-9)
    fail(ErrorCode::PreconditionViolation, "total curvature must equal 4*pi");
  return m;
}

TargetMetric make_target_metric(const ConeSurface& s, const std::vector<int>& declared) {
  TargetMetric m = make_target_metric(s);
  std::vector<int> listed = declared;
  std::sort(listed.begin(), listed.end());
  for (int v : listed)
    if (!std::binary_search(m.cone_points.begin(), m.cone_points.end(), v))
      fail(ErrorCode::PreconditionViolation, "declared cone point is flat", v);
  for (int v : m.cone_points)
    if (!std::binary_search(listed.begin(), listed.end(), v))
      fail(ErrorCode::PreconditionViolation, "curved vertex missing from the declared cone points",
           v);
  return m;
}

double delaunay_excess(const ConeSurface& s, int e) {
  const auto [t1, t2] = s.edge_triangles[e];
  const int u = s.edges[e][0];
  const int v = s.edges[e][1];
  return corner_angle(s, t1, third_vertex(s.triangles[t1], u, v)) +
         corner_angle(s, t2, third_vertex(s.triangles[t2], u, v)) - kPi;
}

ConeSurface flip_edge(const ConeSurface& s, int e) {
  const int u = s.edges[e][0];
  const int v = s.edges[e][1];
  const auto [t1, t2] = s.edge_triangles[e];
  const int w1 = third_vertex(s.triangles[t1], u, v);
  const int w2 = third_vertex(s.triangles[t2], u, v);
  if (w1 == w2)
    fail(ErrorCode::NonSimplicialFlip, "opposite vertices of the flip coincide", e);
  const VertexPair diagonal = make_edge(w1, w2);
  if (std::binary_search(s.edges.begin(), s.edges.end(), diagonal))
    fail(ErrorCode::NonSimplicialFlip, "flip diagonal is already an edge", e);

  // Unfold across e: u at the origin, v at (L, 0), w1 below and w2 above.
  const double length = s.lengths[e];
  const auto place = [&](int w) {
    const double a = s.length(u, w);
    const double b = s.length(v, w);
    const double x = (length * length + a * a - b * b) / (2.0 * length);
    return Eigen::Vector2d(x, std::sqrt(std::max(0.0, a * a - x * x)));
  };
  const Eigen::Vector2d p1 = place(w1);
  const Eigen::Vector2d p2 = place(w2);
  const double heights = p1.y() + p2.y();
  const double crossing = heights > 0 ? p1.x() + (p2.x() - p1.x()) * p1.y() / heights : -1.0;
  if (!(crossing > 0.0 && crossing < length))
    fail(ErrorCode::PreconditionViolation, "flip diagonal misses the shared edge", e);

  std::vector<VertexTriple> triangles;
  triangles.reserve(s.triangles.size());
  for (int t = 0; t < static_cast<int>(s.triangles.size()); ++t)
    if (t != t1 && t != t2) triangles.push_back(s.triangles[t]);
  triangles.push_back(make_triangle(u, w1, w2));
  triangles.push_back(make_triangle(v, w1, w2));

  std::map<VertexPair, double> lengths;
  for (int i = 0; i < static_cast<int>(s.edges.size()); ++i)
    if (i != e) lengths[s.edges[i]] = s.lengths[i];
  lengths[diagonal] = std::hypot(p2.x() - p1.x(), p2.y() + p1.y());
  return build_surface(triangles, lengths);
}

ConeSurface surface_delaunay(const TargetMetric& m, double theta_tol) {
  if (static_cast<int>(m.cone_points.size()) < 4)
    fail(ErrorCode::PreconditionViolation, "realization needs at least 4 cone points");
  ConeSurface s = m.surface;
  const int cap = 1000 + 100 * static_cast<int>(s.edges.size());
  for (int flips = 0;; ++flips) {
    std::vector<std::pair<double, int>> bad;
    for (int e = 0; e < static_cast<int>(s.edges.size()); ++e) {
      const double excess = delaunay_excess(s, e);
      if (excess > theta_tol) bad.emplace_back(-excess, e);
    }
    if (bad.empty()) return s;
    if (flips >= cap) fail(ErrorCode::FlipLoop, "Delaunay flipping exceeded the iteration cap");
    std::sort(bad.begin(), bad.end());
    bool flipped = false;
    for (const auto& [neg_excess, e] : bad) {
      // A strictly non-Delaunay edge always unfolds convex, but its cross
      // diagonal may already exist as another geodesic; skip it until a
      // neighboring flip frees it.
      try {
        s = flip_edge(s, e);
      } catch (const Error& err) {
        if (err.code() == ErrorCode::NonSimplicialFlip) continue;
        throw;
      }
      flipped = true;
      break;
    }
    // Every non-Delaunay edge is blocked by an existing diagonal: the
    // Delaunay tessellation of this metric has a doubled geodesic, which a
    // simplicial complex cannot represent.
    if (!flipped)
      fail(ErrorCode::NonSimplicialFlip, "Delaunay tessellation of this metric is not simplicial");
  }
}

std::vector<double> init_radii(const ConeSurface& s, const SolverConfig& cfg) {
  // A non-Delaunay edge keeps its cone dihedral above pi at every uniform
  // radius, but the excess decays like 1/R, so the doubling loop would
  // eventually tunnel under any fixed tolerance; test the angle criterion,
  // its exact large-R limit, up front instead.
  for (int e = 0; e < static_cast<int>(s.edges.size()); ++e)
    if (delaunay_excess(s, e) > cfg.theta_tol)
      fail(ErrorCode::InitFailed, "surface is not Delaunay", e);

  double radius = 0;
  for (double l : s.lengths) radius = std::max(radius, l);
  radius *= cfg.init_radius_scale;
  for (int i = 0; i <= cfg.max_init_doublings; ++i, radius *= 2.0) {
    std::vector<double> r(static_cast<size_t>(s.vertex_count), radius);
    StarComplex sc;
    try {
      sc = cone_over(s, r);
      if (worst_reflex_edge(sc, cfg.theta_tol) < 0) return r;
    } catch (const Error& err) {
      if (!recoverable_trial_error(err.code())) throw;
    }
  }
  fail(ErrorCode::InitFailed, "no convex admissible start within the doubling budget");
}

std::pair<Eigen::VectorXd, Eigen::MatrixXd> curvature_and_jacobian(const StarComplex& sc) {
  const std::vector<int>& interior = sc.complex.interior_edge_indices;
  for (int v = 0; v < sc.base.vertex_count; ++v)
    if (interior[v] != sc.radial_edge(v))
      fail(ErrorCode::PreconditionViolation, "interior edges are not the radial edges", v);
  const HessianReport report = hessian(sc.complex, sc.lengths, interior);
  return {radial_curvature(sc), report.matrix};
}

RealizationResult homotopy_solve(const TargetMetric& m, const SolverConfig& cfg) {
  SolverTrace trace;
  ConeSurface surface = surface_delaunay(m, cfg.theta_tol);
  std::vector<double> r = init_radii(surface, cfg);
  StarComplex sc = cone_over(surface, r);

  const Eigen::VectorXd kappa0 = radial_curvature(sc);
  const double tol = std::max(cfg.newton_tol_rel * kappa0.cwiseAbs().maxCoeff(), 1e-14);

  double t = 0;
  double dt = cfg.initial_step;
  int streak = 0;
  bool saw_singular = false;
  while (t < 1.0) {
    if (trace.steps >= cfg.max_steps)
      fail(ErrorCode::StepUnderflow, "continuation exceeded the step budget");
    const double tn = std::min(1.0, t + dt);
    const Eigen::VectorXd target = (1.0 - tn) * kappa0;
    CorrectorResult step = newton_correct(surface, r, target, tol, cfg, trace);
    bool accepted = false;
    if (step.converged) {
      ConeSurface trial_surface = surface;
      std::vector<double> trial_r = std::move(step.radii);
      StarComplex trial_sc = std::move(step.sc);
      accepted = restore_delaunay(trial_surface, trial_r, trial_sc, target, tol, cfg, trace) ==
                 FlipOutcome::kClean;
      if (accepted) {
        surface = std::move(trial_surface);
        r = std::move(trial_r);
        sc = std::move(trial_sc);
        t = tn;
        ++trace.steps;
      }
    }
    if (!accepted) {
      saw_singular = step.singular;
      streak = 0;
      dt *= 0.5;
      if (dt < cfg.min_step) report_stall(sc, t, saw_singular);
      continue;
    }
    if (++streak >= 2) dt = std::min(dt * 1.5, cfg.max_step);
    if (cfg.trace)
      std::fprintf(stderr, "t=%.9f dt=%.3e steps=%d flips=%d newton=%d\n", t, dt, trace.steps,
                   trace.flips, trace.newton_iterations);
  }

  RealizationResult out;
  out.max_residual_curvature = radial_curvature(sc).cwiseAbs().maxCoeff();
  if (out.max_residual_curvature > cfg.final_tol)
    fail(ErrorCode::EmbeddingInconsistent, "residual curvature above the final tolerance");
  trace.final_residual = out.max_residual_curvature;
  out.vertices = embed(sc);
  out.triangulation = std::move(surface);
  out.radii = std::move(r);
  out.trace = trace;
  return out;
}

std::vector<Eigen::Vector3d> embed(const StarComplex& sc, double rel_tol) {
  return star_layout(sc, true, rel_tol).position;
}

}  // namespace regge
