#include "regge/rigidity.hpp"

#include <cmath>
#include <numbers>

namespace regge {
namespace {

using Eigen::Vector3d;

// All 3-cliques of the near-distance graph.  Valid as a face list only when
// the edge graph has no empty triangles (true for the icosahedral solids).
std::vector<VertexTriple> clique_faces(const std::vector<Vector3d>& pts,
                                       const std::vector<double>& edge_lengths) {
  const int n = static_cast<int>(pts.size());
  auto is_edge = [&](int a, int b) {
    const double d = (pts[a] - pts[b]).norm();
    for (double e : edge_lengths)
      if (std::abs(d - e) <= 1e-9) return true;
    return false;
  };
  std::vector<VertexTriple> faces;
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b) {
      if (!is_edge(a, b)) continue;
      for (int c = b + 1; c < n; ++c)
        if (is_edge(a, c) && is_edge(b, c)) faces.push_back({a, b, c});
    }
  return faces;
}

EmbeddedPolyhedron make_tetrahedron() {
  EmbeddedPolyhedron p;
  const double s = 1.0 / (2.0 * std::sqrt(2.0));  // unit edge length
  p.vertices = {s * Vector3d(1, 1, 1), s * Vector3d(1, -1, -1),
                s * Vector3d(-1, 1, -1), s * Vector3d(-1, -1, 1)};
  p.faces = {{0, 1, 2}, {0, 1, 3}, {0, 2, 3}, {1, 2, 3}};
  return p;
}

EmbeddedPolyhedron make_cube() {
  EmbeddedPolyhedron p;
  for (int m = 0; m < 8; ++m)
    p.vertices.emplace_back((m & 1) - 0.5, ((m >> 1) & 1) - 0.5,
                            ((m >> 2) & 1) - 0.5);
  // Each square split along the diagonal through its lowest-index corner.
  p.faces = {{0, 1, 3}, {0, 3, 2}, {4, 5, 7}, {4, 7, 6}, {0, 1, 5}, {0, 5, 4},
             {2, 3, 7}, {2, 7, 6}, {0, 2, 6}, {0, 6, 4}, {1, 3, 7}, {1, 7, 5}};
  return p;
}

EmbeddedPolyhedron make_octahedron() {
  EmbeddedPolyhedron p;
  p.vertices = {Vector3d(1, 0, 0),  Vector3d(-1, 0, 0), Vector3d(0, 1, 0),
                Vector3d(0, -1, 0), Vector3d(0, 0, 1),  Vector3d(0, 0, -1)};
  for (int x : {0, 1})
    for (int y : {2, 3})
      for (int z : {4, 5}) p.faces.push_back(make_triangle(x, y, z));
  return p;
}

EmbeddedPolyhedron make_icosahedron() {
  EmbeddedPolyhedron p;
  const double phi = (1.0 + std::sqrt(5.0)) / 2.0;
  for (double a : {1.0, -1.0})
    for (double b : {phi, -phi}) {
      p.vertices.emplace_back(0, a, b);
      p.vertices.emplace_back(a, b, 0);
      p.vertices.emplace_back(b, 0, a);
    }
  p.faces = clique_faces(p.vertices, {2.0});  // edge length exactly 2
  return p;
}

// Triangular prism with the top face twisted by `tau` and each side quad
// split along the diagonal that folds inward, leaving three reflex edges.
EmbeddedPolyhedron make_schoenhardt(double twist_degrees) {
  if (!(twist_degrees > 0.0 && twist_degrees < 60.0))
    fail(ErrorCode::DegenerateTwist,
         "schoenhardt twist must lie strictly between 0 and 60 degrees");
  EmbeddedPolyhedron p;
  const double tau = twist_degrees * std::numbers::pi / 180.0;
  for (int j = 0; j < 3; ++j) {
    const double a = 2.0 * std::numbers::pi * j / 3.0;
    p.vertices.emplace_back(std::cos(a), std::sin(a), 0.0);
  }
  for (int j = 0; j < 3; ++j) {
    const double a = 2.0 * std::numbers::pi * j / 3.0 + tau;
    p.vertices.emplace_back(std::cos(a), std::sin(a), 1.0);
  }
  p.faces.push_back(make_triangle(0, 1, 2));
  p.faces.push_back(make_triangle(3, 4, 5));
  for (int j = 0; j < 3; ++j) {
    const int jn = (j + 1) % 3;
    p.faces.push_back(make_triangle(j, jn, 3 + jn));
    p.faces.push_back(make_triangle(j, 3 + j, 3 + jn));
  }
  p.star_point = Vector3d(0, 0, 0.5);
  return p;
}

// Orthogonal icosahedron: eight equilateral faces plus twelve isosceles ones
// folded inward along six reflex diagonals, every dihedral angle a right
// angle.  The origin sees all faces.
EmbeddedPolyhedron make_jessen() {
  EmbeddedPolyhedron p;
  for (double a : {2.0, -2.0})
    for (double b : {1.0, -1.0}) {
      p.vertices.emplace_back(0, a, b);
      p.vertices.emplace_back(a, b, 0);
      p.vertices.emplace_back(b, 0, a);
    }
  p.faces = clique_faces(p.vertices, {std::sqrt(6.0), 4.0});
  return p;
}

}  // namespace

std::vector<std::string> builtin_polyhedron_names() {
  return {"tetrahedron", "cube",        "octahedron",
          "icosahedron", "schoenhardt", "jessen"};
}

EmbeddedPolyhedron builtin_polyhedron(const std::string& name,
                                      double twist_degrees) {
  if (name == "tetrahedron") return make_tetrahedron();
  if (name == "cube") return make_cube();
  if (name == "octahedron") return make_octahedron();
  if (name == "icosahedron") return make_icosahedron();
  if (name == "schoenhardt") return make_schoenhardt(twist_degrees);
  if (name == "jessen") return make_jessen();
  fail(ErrorCode::ParseError, "unknown builtin polyhedron: " + name);
}

}  // namespace regge
