#pragma once

#include <array>

#include <Eigen/Dense>

#include "regge/error.hpp"

namespace regge {

// Fixed edge order for a tetrahedron with vertices 0..3. Every 6-vector and
// 6x6 matrix over tet edges uses this order; it is part of the public
// contract of this module.
inline constexpr std::array<std::array<int, 2>, 6> tet_edge_vertices = {
    {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}}};

// Index into tet_edge_vertices for an unordered vertex pair.
int tet_edge_index(int u, int v);

// Edge lengths of a single tetrahedron in the fixed order (01,02,03,12,13,23).
struct TetLengths {
  std::array<double, 6> l{};

  double operator[](int e) const { return l[static_cast<size_t>(e)]; }
  double& operator[](int e) { return l[static_cast<size_t>(e)]; }
  double between(int u, int v) const { return l[static_cast<size_t>(tet_edge_index(u, v))]; }
  double mean() const;
};

// Six dihedral angles in radians, same edge order as TetLengths.
struct DihedralSet {
  std::array<double, 6> angle{};
  double operator[](int e) const { return angle[static_cast<size_t>(e)]; }
};

// Degeneracy cutoffs on the Cayley-Menger determinant, relative to
// (mean edge length)^6. The Jacobian needs a wider margin because the
// derivative formulas lose a factor ~CM^(-1/2) in conditioning.
inline constexpr double kDegenerateCmRel = 1e-12;
inline constexpr double kIllConditionedCmRel = 1e-8;

// Angles opposite to a, b, c. Throws DegenerateTriangle unless the strict
// triangle inequalities hold.
std::array<double, 3> triangle_angles(double a, double b, double c);

// Area of a triangle with the given side lengths (stable Heron form).
double triangle_area(double a, double b, double c);

// Cayley-Menger determinant of the six lengths; positive exactly for lengths
// realizable as a nondegenerate Euclidean tetrahedron.
double cayley_menger(const TetLengths& l);

bool tet_nondegenerate(const TetLengths& l);

// Volume sqrt(CM/288). Throws DegenerateTet when CM falls below the cutoff.
double tet_volume(const TetLengths& l);

// Interior dihedral angles, each in (0, pi), computed intrinsically from face
// angles via the spherical law of cosines. Throws DegenerateTet.
DihedralSet dihedral_angles(const TetLengths& l);

bool jacobian_well_conditioned(const TetLengths& l);

// J[e][f] = d theta_e / d l_f, analytic. Symmetric, and satisfies the
// Euclidean Schlaefli identity: sum_e l_e J[e][f] = 0 for every f.
// Throws DegenerateTet below the degeneracy cutoff and IllConditioned below
// the safety margin.
Eigen::Matrix<double, 6, 6> dihedral_jacobian(const TetLengths& l);

// Checks the spherical-triangle conditions at each vertex: each angle in
// (0, pi), the three incident dihedral angles summing to more than pi, and no
// angle deficient against the other two by more than pi.
bool dihedral_set_consistent(const DihedralSet& d);

} // namespace regge
