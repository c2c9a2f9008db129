#pragma once

#include <array>
#include <random>

#include <Eigen/Dense>

#include "regge/geom.hpp"

namespace regge::testing {

using Vec3 = Eigen::Vector3d;
using TetPoints = std::array<Vec3, 4>;

// Coordinate-based oracles, deliberately independent of the metric kernel:
// they start from explicit points, so lengths are exact forward data and
// angles/volumes come from vector algebra instead of length formulas.

TetLengths lengths_of(const TetPoints& p);

// |det(p1-p0, p2-p0, p3-p0)| / 6.
double coord_volume(const TetPoints& p);

// Dihedral angle along edge (u,v): project the two opposite vertices onto the
// plane orthogonal to the edge and measure the angle between the projections.
double coord_dihedral(const TetPoints& p, int u, int v);

DihedralSet coord_dihedrals(const TetPoints& p);

// Four points in the unit cube, rejection-sampled until the Cayley-Menger
// determinant clears cm_rel_min * (mean length)^6.
TetPoints random_tet(std::mt19937_64& rng, double cm_rel_min = 1e-6);

// Lengths after renaming vertex i to perm[i].
TetLengths relabel(const TetLengths& l, const std::array<int, 4>& perm);

// O(h^4) central difference.
template <class F>
double fd_derivative(F&& f, double x, double h) {
  return (8.0 * (f(x + h) - f(x - h)) - (f(x + 2.0 * h) - f(x - 2.0 * h))) / (12.0 * h);
}

} // namespace regge::testing
