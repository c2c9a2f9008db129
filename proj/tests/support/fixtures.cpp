#include "fixtures.hpp"

#include <cmath>
#include <map>

#include "oracles.hpp"

namespace regge::testing {

namespace {

// Cube corner for a bitmask: bit 0 -> x, bit 1 -> y, bit 2 -> z.
Vec3 cube_corner(int mask, double side) {
  return side * Vec3(mask & 1, (mask >> 1) & 1, (mask >> 2) & 1);
}

constexpr std::array<std::array<int, 3>, 12> kCubeFaceTriangles = {{
    {0, 1, 3}, {0, 3, 2},  // z = 0
    {4, 5, 7}, {4, 7, 6},  // z = 1
    {0, 1, 5}, {0, 5, 4},  // y = 0
    {2, 3, 7}, {2, 7, 6},  // y = 1
    {0, 2, 6}, {0, 6, 4},  // x = 0
    {1, 3, 7}, {1, 7, 5},  // x = 1
}};

// The 6 bit-insertion orders of the Kuhn subdivision; each yields the chain
// 0 -> a -> a|b -> 7.
constexpr std::array<std::array<int, 3>, 6> kKuhnChains = {{
    {1, 2, 4}, {1, 4, 2}, {2, 1, 4}, {2, 4, 1}, {4, 1, 2}, {4, 2, 1},
}};

std::map<VertexPair, double> lengths_from_triangles(const std::vector<VertexTriple>& tris,
                                                    const std::vector<Vec3>& pts) {
  std::map<VertexPair, double> out;
  for (const auto& t : tris)
    for (int i = 0; i < 3; ++i)
      for (int j = i + 1; j < 3; ++j) {
        const int u = t[static_cast<size_t>(i)], v = t[static_cast<size_t>(j)];
        out[make_edge(u, v)] = (pts[static_cast<size_t>(u)] - pts[static_cast<size_t>(v)]).norm();
      }
  return out;
}

} // namespace

ConeSurface regular_tet_surface(double side) {
  std::vector<VertexTriple> tris = {{0, 1, 2}, {0, 1, 3}, {0, 2, 3}, {1, 2, 3}};
  std::map<VertexPair, double> lens;
  for (const auto& t : tris)
    for (int i = 0; i < 3; ++i)
      for (int j = i + 1; j < 3; ++j)
        lens[make_edge(t[static_cast<size_t>(i)], t[static_cast<size_t>(j)])] = side;
  return build_surface(tris, lens);
}

ConeSurface cube_surface(double side) {
  std::vector<Vec3> pts;
  for (int m = 0; m < 8; ++m) pts.push_back(cube_corner(m, side));
  std::vector<VertexTriple> tris;
  for (const auto& t : kCubeFaceTriangles) tris.push_back(make_triangle(t[0], t[1], t[2]));
  return build_surface(tris, lengths_from_triangles(tris, pts));
}

ConeSurface octahedron_surface() {
  std::vector<Vec3> pts = {Vec3(1, 0, 0),  Vec3(-1, 0, 0), Vec3(0, 1, 0),
                           Vec3(0, -1, 0), Vec3(0, 0, 1),  Vec3(0, 0, -1)};
  std::vector<VertexTriple> tris;
  for (int x : {0, 1})
    for (int y : {2, 3})
      for (int z : {4, 5}) tris.push_back(make_triangle(x, y, z));
  return build_surface(tris, lengths_from_triangles(tris, pts));
}

std::pair<Triangulation3, EdgeLengths> kuhn_cube(double side) {
  std::vector<std::array<int, 4>> tets;
  for (const auto& chain : kKuhnChains)
    tets.push_back({0, chain[0], chain[0] | chain[1], 7});
  Triangulation3 t3 = build_complex(tets);

  EdgeLengths l;
  l.value.reserve(t3.edges.size());
  for (const auto& e : t3.edges)
    l.value.push_back((cube_corner(e[0], side) - cube_corner(e[1], side)).norm());
  return {std::move(t3), std::move(l)};
}

std::pair<Triangulation3, EdgeLengths> flat_torus_3() {
  auto vid = [](int x, int y, int z) {
    return ((x % 3 + 3) % 3) + 3 * ((y % 3 + 3) % 3) + 9 * ((z % 3 + 3) % 3);
  };
  auto corner = [&](int x, int y, int z, int mask) {
    return vid(x + (mask & 1), y + ((mask >> 1) & 1), z + ((mask >> 2) & 1));
  };

  std::vector<std::array<int, 4>> tets;
  std::map<VertexPair, double> lens;
  for (int x = 0; x < 3; ++x)
    for (int y = 0; y < 3; ++y)
      for (int z = 0; z < 3; ++z)
        for (const auto& chain : kKuhnChains) {
          const std::array<int, 4> masks = {0, chain[0], chain[0] | chain[1], 7};
          std::array<int, 4> tet;
          for (int i = 0; i < 4; ++i)
            tet[static_cast<size_t>(i)] = corner(x, y, z, masks[static_cast<size_t>(i)]);
          tets.push_back(tet);
          // Unwrapped displacement inside the cube gives the metric length.
          for (int i = 0; i < 4; ++i)
            for (int j = i + 1; j < 4; ++j) {
              const Vec3 d = cube_corner(masks[static_cast<size_t>(i)], 1.0) -
                             cube_corner(masks[static_cast<size_t>(j)], 1.0);
              lens[make_edge(tet[static_cast<size_t>(i)], tet[static_cast<size_t>(j)])] = d.norm();
            }
        }

  Triangulation3 t3 = build_complex(tets);
  EdgeLengths l;
  l.value.reserve(t3.edges.size());
  for (const auto& e : t3.edges) l.value.push_back(lens.at(e));
  return {std::move(t3), std::move(l)};
}

} // namespace regge::testing
