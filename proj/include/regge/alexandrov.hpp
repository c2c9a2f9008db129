#pragma once

#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "regge/mesh.hpp"

namespace regge {

// Curvature below this magnitude counts as flat when classifying vertices.
inline constexpr double kConePointTol = 1e-10;

// Closed cone-metric eligible for convex realization: every vertex curvature
// is nonnegative and the total is 4*pi.
struct TargetMetric {
  ConeSurface surface;
  std::vector<int> cone_points;  // vertices with curvature above kConePointTol, ascending
};

// Classifies vertices by curvature. Throws PreconditionViolation when any
// vertex is negatively curved or the total misses 4*pi by more than 1e-9.
TargetMetric make_target_metric(const ConeSurface& s);
// Additionally checks a caller-supplied cone-point list: declaring a flat
// vertex or omitting a curved one is a PreconditionViolation.
TargetMetric make_target_metric(const ConeSurface& s, const std::vector<int>& declared);

struct SolverConfig {
  double theta_tol = 1e-9;        // slack over pi before an edge counts as reflex
  double newton_tol_rel = 1e-10;  // corrector tolerance relative to max |kappa(0)|
  double final_tol = 1e-8;        // residual curvature bound at t = 1
  double cond_max = 1e12;         // Jacobian condition bound
  double initial_step = 0.1;
  double max_step = 0.25;
  double min_step = 1e-7;
  double init_radius_scale = 1.0;  // multiplies the starting radius guess
  int newton_max_iters = 25;
  int max_steps = 10000;
  int max_flips_per_step = 100;
  int max_init_doublings = 60;
  bool trace = false;  // per-step progress lines on stderr
};

struct SolverTrace {
  int steps = 0;
  int flips = 0;
  int newton_iterations = 0;
  double max_condition = 0;
  double final_residual = 0;
};

struct RealizationResult {
  std::vector<Eigen::Vector3d> vertices;  // surface vertices; apex at the origin
  ConeSurface triangulation;              // final retriangulation of the target metric
  std::vector<double> radii;
  double max_residual_curvature = 0;
  SolverTrace trace;
};

// Replaces edge e by the cross diagonal of the two incident triangles,
// unfolded into the plane; lengths of all other edges are untouched. Throws
// NonSimplicialFlip when the diagonal already exists or the triangles share
// all three vertices, PreconditionViolation when the unfolded quad is not
// strictly convex at the shared edge.
ConeSurface flip_edge(const ConeSurface& s, int e);

// Opposite-angle sum at edge e minus pi; positive means non-Delaunay.
double delaunay_excess(const ConeSurface& s, int e);

// Flips worst-excess edges until every edge satisfies the Delaunay criterion
// within theta_tol (ties at exactly pi are kept). Requires at least 4 cone
// points; throws FlipLoop if flipping fails to terminate.
ConeSurface surface_delaunay(const TargetMetric& m, double theta_tol = 1e-9);

// Uniform starting radii: doubles an initial diameter guess until the cone
// over the surface is admissible and every boundary dihedral is at most
// pi + theta_tol. Throws InitFailed for non-Delaunay input or when the
// doubling budget runs out.
std::vector<double> init_radii(const ConeSurface& s, const SolverConfig& cfg = {});

// Radial curvature vector (slot v = curvature at edge (v, apex)) and its
// symmetric Jacobian in the radii.
std::pair<Eigen::VectorXd, Eigen::MatrixXd> curvature_and_jacobian(const StarComplex& sc);

// Newton path-following of kappa(t) = (1-t)*kappa(0) with weighted-Delaunay
// flips after each accepted step. Errors: JacobianSingular, StepUnderflow,
// FlipLoop, DegeneratesToPolygon near t = 1 when the image flattens.
RealizationResult homotopy_solve(const TargetMetric& m, const SolverConfig& cfg = {});

// Coordinates of the surface vertices with the apex at the origin; throws
// EmbeddingInconsistent when the layout misses any length by more than
// rel_tol relative to the largest length.
std::vector<Eigen::Vector3d> embed(const StarComplex& sc, double rel_tol = 1e-8);

}  // namespace regge
