#pragma once

#include <vector>

#include <Eigen/Dense>

#include "regge/mesh.hpp"

namespace regge {

struct StarLayout {
  std::vector<Eigen::Vector3d> position;  // surface vertices; apex at origin
  double max_rel_error = 0;  // worst relative length/radius mismatch of the layout
};

// Lays out all surface vertices of a star complex by breadth-first
// trilateration over the triangle adjacency graph: apex at the origin, first
// vertex of the first triangle on the +x axis, second in the upper xy-plane,
// first tetrahedron positively oriented. Mirror roots are resolved by least
// squared error against already-placed neighbors, falling back to the
// opposite side of the unfolding face. With strict set, throws
// EmbeddingInconsistent when the layout misses an edge length or radius by
// more than rel_tol relative to the largest length.
StarLayout star_layout(const StarComplex& sc, bool strict, double rel_tol = 1e-8);

} // namespace regge
