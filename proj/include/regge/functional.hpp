#pragma once

#include <vector>

#include <Eigen/Dense>

#include "regge/mesh.hpp"

namespace regge {

// Per-edge angle data, parallel to Triangulation3::edges: total_angle is the
// sum of incident dihedral angles (the cone angle omega at interior edges,
// the boundary dihedral theta at boundary edges); kappa is 2*pi - omega
// respectively pi - theta.
struct CurvatureField {
  std::vector<double> total_angle;
  std::vector<double> kappa;
};

CurvatureField curvatures(const Triangulation3& t3, const EdgeLengths& l);

// S = sum over edges of l_e * kappa_e.
double energy(const Triangulation3& t3, const EdgeLengths& l);

// dS/dl_e; identical to curvatures(t3, l).kappa.
std::vector<double> gradient(const Triangulation3& t3, const EdgeLengths& l);

// Relative eigenvalue threshold below which an eigenvalue counts as zero.
inline constexpr double kZeroEigenRel = 1e-8;

struct HessianReport {
  std::vector<int> free_edges;   // edge ids, ascending
  Eigen::MatrixXd matrix;        // H[e][f] = d kappa_e / d l_f over free edges
  Eigen::VectorXd eigenvalues;   // ascending
  int positive = 0;
  int zero = 0;
  int negative = 0;
  Eigen::MatrixXd kernel;        // orthonormal basis of the zero eigenspace
  double zero_tolerance = kZeroEigenRel;
  // Smallest |eigenvalue| classified nonzero; 0 when the matrix has none.
  double spectral_gap = 0;
};

// Sums per-tet dihedral Jacobians with a uniform minus sign (the constants
// 2*pi and pi differentiate away), restricted to free_edges. Assembly walks
// tets in ascending index order, so results are deterministic run-to-run.
HessianReport hessian(const Triangulation3& t3, const EdgeLengths& l,
                      const std::vector<int>& free_edges, double zero_tol_rel = kZeroEigenRel);

} // namespace regge
