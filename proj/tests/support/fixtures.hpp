#pragma once

#include <utility>
#include <vector>

#include "regge/mesh.hpp"

namespace regge::testing {

// Boundary of the regular tetrahedron: 4 vertices, 4 triangles, all edges of
// the given side length. Cone angle pi at every vertex.
ConeSurface regular_tet_surface(double side = 1.0);

// Cube surface with each square face split along the diagonal through its
// lowest-index corner. 8 vertices, 12 triangles; cone angle 3*pi/2 everywhere.
ConeSurface cube_surface(double side = 1.0);

// Regular octahedron with vertices at distance 1 from the center (side
// sqrt 2). 6 vertices, 8 triangles.
ConeSurface octahedron_surface();

// Cube subdivided into the 6 tetrahedra sharing the main diagonal (0,7).
// 19 edges, 1 interior (the diagonal, cone angle 2*pi), 18 boundary.
std::pair<Triangulation3, EdgeLengths> kuhn_cube(double side = 1.0);

// Flat 3-torus: the 3x3x3 lattice quotient with every unit cube subdivided as
// in kuhn_cube. 27 vertices, 189 edges, 162 tets, no boundary, all curvatures
// zero.
std::pair<Triangulation3, EdgeLengths> flat_torus_3();

} // namespace regge::testing
