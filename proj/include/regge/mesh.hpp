#pragma once

#include <array>
#include <map>
#include <vector>

#include "regge/error.hpp"
#include "regge/geom.hpp"

namespace regge {

// Canonical (sorted) forms; every edge/triangle map in the library is keyed
// on these to rule out duplicate-key bugs.
using VertexPair = std::array<int, 2>;
using VertexTriple = std::array<int, 3>;

VertexPair make_edge(int a, int b);
VertexTriple make_triangle(int a, int b, int c);

// Simplicial 3-complex with classified interior/boundary edges. Immutable
// after build_complex.
struct Triangulation3 {
  int vertex_count = 0;
  std::vector<std::array<int, 4>> tets;

  // Derived, in deterministic order (lexicographic for edges/triangles).
  std::vector<VertexPair> edges;
  std::vector<VertexTriple> triangles;
  std::vector<int> boundary_triangle_indices;  // into triangles
  std::vector<char> edge_on_boundary;          // per edge
  std::vector<int> interior_edge_indices;      // into edges
  std::vector<int> boundary_edge_indices;
  std::vector<std::array<int, 6>> tet_edge_ids;  // per tet, local order (01,02,03,12,13,23)

  int edge_index(int u, int v) const;  // throws PreconditionViolation if absent

private:
  friend Triangulation3 build_complex(const std::vector<std::array<int, 4>>& tets);
  std::map<VertexPair, int> edge_ids_;
};

Triangulation3 build_complex(const std::vector<std::array<int, 4>>& tets);

// Length per edge, parallel to Triangulation3::edges.
struct EdgeLengths {
  std::vector<double> value;
};

EdgeLengths lengths_from_pairs(const Triangulation3& t3,
                               const std::vector<std::pair<VertexPair, double>>& pairs);

// The 6 lengths of one tet in the fixed local edge order.
TetLengths tet_lengths(const Triangulation3& t3, const EdgeLengths& l, int tet);

// First tet whose lengths fail the nondegeneracy test, or -1 if all pass.
int first_inadmissible_tet(const Triangulation3& t3, const EdgeLengths& l);

// Throws DegenerateTet naming the tet unless every tet is nondegenerate.
void check_admissible(const Triangulation3& t3, const EdgeLengths& l);

// Triangulated closed metric surface of sphere topology. Immutable.
struct ConeSurface {
  int vertex_count = 0;
  std::vector<VertexTriple> triangles;
  std::vector<VertexPair> edges;
  std::vector<double> lengths;  // per edge

  std::vector<std::array<int, 2>> edge_triangles;  // the two incident triangles
  std::vector<double> cone_angles;                 // per vertex
  std::vector<double> curvatures;                  // 2*pi - cone angle

  int edge_index(int u, int v) const;
  double length(int u, int v) const;
  // Angles of triangle t at its three vertices (in triangle-vertex order).
  std::array<double, 3> triangle_corner_angles(int t) const;

private:
  friend ConeSurface build_surface(const std::vector<VertexTriple>& triangles,
                                   const std::map<VertexPair, double>& lengths);
  std::map<VertexPair, int> edge_ids_;
};

ConeSurface build_surface(const std::vector<VertexTriple>& triangles,
                          const std::map<VertexPair, double>& lengths);

// Cone over a surface from one apex with per-vertex radii. The derived
// complex appends the apex as vertex index base.vertex_count; interior edge
// (i, apex) carries radius r_i, boundary edges carry the surface lengths.
struct StarComplex {
  ConeSurface base;
  std::vector<double> radii;
  Triangulation3 complex;
  EdgeLengths lengths;

  int apex() const { return base.vertex_count; }
  // Edge id (in complex) of the interior edge through surface vertex v.
  int radial_edge(int v) const { return complex.edge_index(v, apex()); }
};

StarComplex cone_over(const ConeSurface& surface, const std::vector<double>& radii);

// Boundary of t3 as a metric surface, vertices reindexed ascending. Throws
// NotASphere unless the boundary is a connected closed surface with
// Euler characteristic 2. boundary_vertex_out, when non-null, receives the
// original t3 index of each surface vertex.
ConeSurface boundary_surface(const Triangulation3& t3, const EdgeLengths& l,
                             std::vector<int>* boundary_vertex_out = nullptr);

} // namespace regge
