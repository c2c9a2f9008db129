#pragma once

#include <optional>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "regge/functional.hpp"
#include "regge/mesh.hpp"

namespace regge {

struct EmbeddedPolyhedron {
  std::vector<Eigen::Vector3d> vertices;
  std::vector<VertexTriple> faces;  // triangles
  Eigen::Vector3d star_point = Eigen::Vector3d::Zero();
};

// Measures radii and boundary lengths from the coordinates. Throws
// StarPointInvalid when a pyramid over the star point degenerates or the
// interior curvatures fail to vanish (the star point must see the whole
// boundary from inside).
StarComplex star_from_embedding(const EmbeddedPolyhedron& p);

struct RigidityVerdict {
  int kernel_dimension = 0;
  int trivial_dimension = 0;  // rank of the apex-translation subspace
  bool rigid = false;         // kernel_dimension == trivial_dimension
  // Interior curvatures were not ~0: the trivial subspace then depends on the
  // chosen local layout, so the verdict is informational only.
  bool advisory = false;
  double max_interior_curvature = 0;
  HessianReport report;
  // Unit kernel vector orthogonal to the trivial subspace, when one exists.
  std::optional<Eigen::VectorXd> nontrivial_flex;
};

// Hessian over the radial edges with boundary lengths held fixed. Radial
// edge slots are ordered by surface vertex. The trivial subspace is spanned
// by the radius derivatives of the three apex translations, recovered from a
// local layout of the star complex.
RigidityVerdict rigidity_verdict(const StarComplex& sc, double zero_tol_rel = kZeroEigenRel);

struct CorankReport {
  int corank = 0;
  int positive_index = 0;
  bool pass = false;
  HessianReport report;
};

// For a flat complex with i interior vertices and b face-interior boundary
// vertices: pass = (corank == 3i + b) and (positive_index == i), with free
// edges = all interior edges. Throws NotFlat when an interior curvature
// exceeds flat_tol.
CorankReport corank_check(const Triangulation3& t3, const EdgeLengths& l, int interior_vertices,
                          int face_interior_vertices, double zero_tol_rel = kZeroEigenRel,
                          double flat_tol = 1e-9);

std::vector<std::string> builtin_polyhedron_names();

// Exact-coordinate catalog: tetrahedron, cube, octahedron, icosahedron,
// schoenhardt (twist_degrees in the open interval (0, 60)), jessen.
EmbeddedPolyhedron builtin_polyhedron(const std::string& name, double twist_degrees = 30.0);

} // namespace regge
