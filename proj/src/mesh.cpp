#include "regge/mesh.hpp"

#include <algorithm>
#include <numbers>
#include <queue>
#include <set>
#include <sstream>

namespace regge {

namespace {

std::string pair_str(const VertexPair& e) {
  std::ostringstream os;
  os << "(" << e[0] << "," << e[1] << ")";
  return os.str();
}

std::string triple_str(const VertexTriple& t) {
  std::ostringstream os;
  os << "(" << t[0] << "," << t[1] << "," << t[2] << ")";
  return os.str();
}

// Reachability over the edge graph; vertices outside every simplex count as
// unreachable.
bool vertex_graph_connected(int vertex_count, const std::vector<VertexPair>& edges) {
  if (vertex_count == 0) return false;
  std::vector<std::vector<int>> adj(static_cast<size_t>(vertex_count));
  for (const auto& e : edges) {
    adj[static_cast<size_t>(e[0])].push_back(e[1]);
    adj[static_cast<size_t>(e[1])].push_back(e[0]);
  }
  std::vector<char> seen(static_cast<size_t>(vertex_count), 0);
  std::queue<int> q;
  q.push(0);
  seen[0] = 1;
  int reached = 1;
  while (!q.empty()) {
    const int v = q.front();
    q.pop();
    for (int w : adj[static_cast<size_t>(v)])
      if (!seen[static_cast<size_t>(w)]) {
        seen[static_cast<size_t>(w)] = 1;
        ++reached;
        q.push(w);
      }
  }
  return reached == vertex_count;
}

} // namespace

VertexPair make_edge(int a, int b) {
  if (a == b) fail(ErrorCode::PreconditionViolation, "edge endpoints coincide");
  return a < b ? VertexPair{a, b} : VertexPair{b, a};
}

VertexTriple make_triangle(int a, int b, int c) {
  if (a == b || b == c || a == c)
    fail(ErrorCode::PreconditionViolation, "triangle vertices coincide");
  VertexTriple t = {a, b, c};
  std::sort(t.begin(), t.end());
  return t;
}

int Triangulation3::edge_index(int u, int v) const {
  const auto it = edge_ids_.find(make_edge(u, v));
  if (it == edge_ids_.end())
    fail(ErrorCode::PreconditionViolation, "no such edge " + pair_str(make_edge(u, v)));
  return it->second;
}

Triangulation3 build_complex(const std::vector<std::array<int, 4>>& tets) {
  if (tets.empty()) fail(ErrorCode::PreconditionViolation, "empty tet list");

  Triangulation3 t3;
  t3.tets = tets;
  for (size_t t = 0; t < tets.size(); ++t) {
    const auto& tet = tets[t];
    for (int i = 0; i < 4; ++i) {
      if (tet[static_cast<size_t>(i)] < 0)
        fail(ErrorCode::ParseError, "negative vertex index in tet", static_cast<long>(t));
      for (int j = i + 1; j < 4; ++j)
        if (tet[static_cast<size_t>(i)] == tet[static_cast<size_t>(j)])
          fail(ErrorCode::DegenerateTet, "tet has a repeated vertex", static_cast<long>(t));
      t3.vertex_count = std::max(t3.vertex_count, tet[static_cast<size_t>(i)] + 1);
    }
  }

  // Triangle incidence counts; a face in three tets is not a manifold face.
  std::map<VertexTriple, std::vector<int>> tri_tets;
  for (size_t t = 0; t < tets.size(); ++t) {
    const auto& v = tets[t];
    for (int skip = 0; skip < 4; ++skip) {
      int f[3];
      int n = 0;
      for (int i = 0; i < 4; ++i)
        if (i != skip) f[n++] = v[static_cast<size_t>(i)];
      auto& owners = tri_tets[make_triangle(f[0], f[1], f[2])];
      owners.push_back(static_cast<int>(t));
      if (owners.size() > 2)
        fail(ErrorCode::NonManifoldFace,
             "triangle " + triple_str(make_triangle(f[0], f[1], f[2])) + " lies in three tets",
             static_cast<long>(t));
    }
  }

  std::set<VertexPair> edge_set;
  for (const auto& tet : tets)
    for (const auto& le : tet_edge_vertices)
      edge_set.insert(make_edge(tet[static_cast<size_t>(le[0])], tet[static_cast<size_t>(le[1])]));
  t3.edges.assign(edge_set.begin(), edge_set.end());
  for (size_t i = 0; i < t3.edges.size(); ++i) t3.edge_ids_[t3.edges[i]] = static_cast<int>(i);

  if (!vertex_graph_connected(t3.vertex_count, t3.edges))
    fail(ErrorCode::Disconnected, "complex is not connected");

  t3.triangles.reserve(tri_tets.size());
  for (const auto& [tri, owners] : tri_tets) {
    if (owners.size() == 1) t3.boundary_triangle_indices.push_back(static_cast<int>(t3.triangles.size()));
    t3.triangles.push_back(tri);
  }

  t3.edge_on_boundary.assign(t3.edges.size(), 0);
  for (int ti : t3.boundary_triangle_indices) {
    const auto& tri = t3.triangles[static_cast<size_t>(ti)];
    for (int i = 0; i < 3; ++i)
      for (int j = i + 1; j < 3; ++j)
        t3.edge_on_boundary[static_cast<size_t>(t3.edge_index(tri[static_cast<size_t>(i)],
                                                              tri[static_cast<size_t>(j)]))] = 1;
  }
  for (size_t e = 0; e < t3.edges.size(); ++e)
    (t3.edge_on_boundary[e] ? t3.boundary_edge_indices : t3.interior_edge_indices)
        .push_back(static_cast<int>(e));

  t3.tet_edge_ids.resize(tets.size());
  for (size_t t = 0; t < tets.size(); ++t)
    for (int le = 0; le < 6; ++le) {
      const auto& lv = tet_edge_vertices[static_cast<size_t>(le)];
      t3.tet_edge_ids[t][static_cast<size_t>(le)] =
          t3.edge_index(tets[t][static_cast<size_t>(lv[0])], tets[t][static_cast<size_t>(lv[1])]);
    }
  return t3;
}

EdgeLengths lengths_from_pairs(const Triangulation3& t3,
                               const std::vector<std::pair<VertexPair, double>>& pairs) {
  EdgeLengths l;
  l.value.assign(t3.edges.size(), -1.0);
  for (const auto& [uv, len] : pairs) {
    const auto canon = make_edge(uv[0], uv[1]);
    const auto it = std::lower_bound(t3.edges.begin(), t3.edges.end(), canon);
    if (it == t3.edges.end() || *it != canon)
      fail(ErrorCode::ParseError, "length given for nonexistent edge " + pair_str(canon));
    const auto e = static_cast<size_t>(it - t3.edges.begin());
    if (l.value[e] >= 0)
      fail(ErrorCode::ParseError, "duplicate length for edge " + pair_str(canon),
           static_cast<long>(e));
    if (!(len > 0))
      fail(ErrorCode::ParseError, "nonpositive length for edge " + pair_str(canon),
           static_cast<long>(e));
    l.value[e] = len;
  }
  for (size_t e = 0; e < l.value.size(); ++e)
    if (l.value[e] < 0)
      fail(ErrorCode::ParseError, "missing length for edge " + pair_str(t3.edges[e]),
           static_cast<long>(e));
  return l;
}

TetLengths tet_lengths(const Triangulation3& t3, const EdgeLengths& l, int tet) {
  TetLengths out;
  for (int le = 0; le < 6; ++le)
    out[le] = l.value[static_cast<size_t>(t3.tet_edge_ids[static_cast<size_t>(tet)][static_cast<size_t>(le)])];
  return out;
}

int first_inadmissible_tet(const Triangulation3& t3, const EdgeLengths& l) {
  for (size_t t = 0; t < t3.tets.size(); ++t)
    if (!tet_nondegenerate(tet_lengths(t3, l, static_cast<int>(t)))) return static_cast<int>(t);
  return -1;
}

void check_admissible(const Triangulation3& t3, const EdgeLengths& l) {
  const int t = first_inadmissible_tet(t3, l);
  if (t >= 0)
    fail(ErrorCode::DegenerateTet, "tet is not realizable as a Euclidean tetrahedron",
         static_cast<long>(t));
}

int ConeSurface::edge_index(int u, int v) const {
  const auto it = edge_ids_.find(make_edge(u, v));
  if (it == edge_ids_.end())
    fail(ErrorCode::PreconditionViolation, "no such surface edge " + pair_str(make_edge(u, v)));
  return it->second;
}

double ConeSurface::length(int u, int v) const {
  return lengths[static_cast<size_t>(edge_index(u, v))];
}

std::array<double, 3> ConeSurface::triangle_corner_angles(int t) const {
  const auto& tri = triangles[static_cast<size_t>(t)];
  return triangle_angles(length(tri[1], tri[2]), length(tri[0], tri[2]), length(tri[0], tri[1]));
}

ConeSurface build_surface(const std::vector<VertexTriple>& triangles,
                          const std::map<VertexPair, double>& lengths) {
  if (triangles.empty()) fail(ErrorCode::PreconditionViolation, "empty triangle list");

  ConeSurface s;
  s.triangles.reserve(triangles.size());
  for (size_t t = 0; t < triangles.size(); ++t) {
    const auto& tri = triangles[t];
    for (int v : tri)
      if (v < 0) fail(ErrorCode::ParseError, "negative vertex index", static_cast<long>(t));
    if (tri[0] == tri[1] || tri[1] == tri[2] || tri[0] == tri[2])
      fail(ErrorCode::DegenerateTriangle, "triangle has a repeated vertex", static_cast<long>(t));
    s.triangles.push_back(make_triangle(tri[0], tri[1], tri[2]));
    s.vertex_count = std::max({s.vertex_count, tri[0] + 1, tri[1] + 1, tri[2] + 1});
  }
  // Canonical storage order; makes boundary_surface(cone_over(s, r)) == s exact.
  std::sort(s.triangles.begin(), s.triangles.end());

  std::map<VertexPair, std::vector<int>> edge_tris;
  for (size_t t = 0; t < s.triangles.size(); ++t) {
    const auto& tri = s.triangles[t];
    for (int i = 0; i < 3; ++i)
      for (int j = i + 1; j < 3; ++j)
        edge_tris[make_edge(tri[static_cast<size_t>(i)], tri[static_cast<size_t>(j)])]
            .push_back(static_cast<int>(t));
  }
  for (const auto& [e, tris] : edge_tris)
    if (tris.size() != 2)
      fail(ErrorCode::NotASphere,
           "edge " + pair_str(e) + " lies in " + std::to_string(tris.size()) +
               " triangles; surface is not closed");

  s.edges.reserve(edge_tris.size());
  s.edge_triangles.reserve(edge_tris.size());
  for (const auto& [e, tris] : edge_tris) {
    s.edge_ids_[e] = static_cast<int>(s.edges.size());
    s.edges.push_back(e);
    s.edge_triangles.push_back({tris[0], tris[1]});
  }

  if (!vertex_graph_connected(s.vertex_count, s.edges))
    fail(ErrorCode::Disconnected, "surface is not connected");
  const long chi = static_cast<long>(s.vertex_count) - static_cast<long>(s.edges.size()) +
                   static_cast<long>(s.triangles.size());
  if (chi != 2)
    fail(ErrorCode::NotASphere, "Euler characteristic " + std::to_string(chi) + ", expected 2");

  s.lengths.assign(s.edges.size(), 0.0);
  for (const auto& [e, len] : lengths) {
    const auto it = s.edge_ids_.find(make_edge(e[0], e[1]));
    if (it == s.edge_ids_.end())
      fail(ErrorCode::ParseError, "length given for nonexistent edge " + pair_str(e));
    if (!(len > 0))
      fail(ErrorCode::ParseError, "nonpositive length for edge " + pair_str(e),
           it->second);
    if (s.lengths[static_cast<size_t>(it->second)] != 0.0)
      fail(ErrorCode::ParseError, "duplicate length for edge " + pair_str(e), it->second);
    s.lengths[static_cast<size_t>(it->second)] = len;
  }
  for (size_t e = 0; e < s.edges.size(); ++e)
    if (s.lengths[e] == 0.0)
      fail(ErrorCode::ParseError, "missing length for edge " + pair_str(s.edges[e]),
           static_cast<long>(e));

  s.cone_angles.assign(static_cast<size_t>(s.vertex_count), 0.0);
  for (size_t t = 0; t < s.triangles.size(); ++t) {
    std::array<double, 3> ang;
    try {
      ang = s.triangle_corner_angles(static_cast<int>(t));
    } catch (const Error& e) {
      if (e.code() == ErrorCode::DegenerateTriangle)
        fail(ErrorCode::DegenerateTriangle, "triangle violates the strict triangle inequality",
             static_cast<long>(t));
      throw;
    }
    for (int i = 0; i < 3; ++i)
      s.cone_angles[static_cast<size_t>(s.triangles[t][static_cast<size_t>(i)])] +=
          ang[static_cast<size_t>(i)];
  }
  s.curvatures.resize(s.cone_angles.size());
  for (size_t v = 0; v < s.cone_angles.size(); ++v)
    s.curvatures[v] = 2.0 * std::numbers::pi - s.cone_angles[v];
  return s;
}

StarComplex cone_over(const ConeSurface& surface, const std::vector<double>& radii) {
  if (radii.size() != static_cast<size_t>(surface.vertex_count))
    fail(ErrorCode::PreconditionViolation, "radius count does not match vertex count");
  for (size_t v = 0; v < radii.size(); ++v)
    if (!(radii[v] > 0))
      fail(ErrorCode::PreconditionViolation, "nonpositive radius", static_cast<long>(v));

  StarComplex sc;
  sc.base = surface;
  sc.radii = radii;
  const int apex = surface.vertex_count;

  std::vector<std::array<int, 4>> tets;
  tets.reserve(surface.triangles.size());
  for (const auto& tri : surface.triangles) tets.push_back({tri[0], tri[1], tri[2], apex});
  sc.complex = build_complex(tets);

  sc.lengths.value.assign(sc.complex.edges.size(), 0.0);
  for (size_t e = 0; e < sc.complex.edges.size(); ++e) {
    const auto& uv = sc.complex.edges[e];
    sc.lengths.value[e] = (uv[1] == apex) ? radii[static_cast<size_t>(uv[0])]
                                          : surface.lengths[static_cast<size_t>(
                                                surface.edge_index(uv[0], uv[1]))];
  }

  // One pyramid per surface triangle, in the same order.
  for (size_t t = 0; t < tets.size(); ++t)
    if (!tet_nondegenerate(tet_lengths(sc.complex, sc.lengths, static_cast<int>(t))))
      fail(ErrorCode::PyramidInfeasible, "pyramid over surface triangle is degenerate",
           static_cast<long>(t));

  // The cone construction makes exactly the radial edges interior.
  if (sc.complex.interior_edge_indices.size() != static_cast<size_t>(surface.vertex_count))
    fail(ErrorCode::PreconditionViolation, "cone complex has unexpected interior edges");
  return sc;
}

ConeSurface boundary_surface(const Triangulation3& t3, const EdgeLengths& l,
                             std::vector<int>* boundary_vertex_out) {
  if (t3.boundary_triangle_indices.empty())
    fail(ErrorCode::NotASphere, "complex has no boundary");

  std::set<int> bverts;
  for (int ti : t3.boundary_triangle_indices)
    for (int v : t3.triangles[static_cast<size_t>(ti)]) bverts.insert(v);
  std::vector<int> new2old(bverts.begin(), bverts.end());
  std::map<int, int> old2new;
  for (size_t i = 0; i < new2old.size(); ++i) old2new[new2old[i]] = static_cast<int>(i);

  std::vector<VertexTriple> tris;
  std::map<VertexPair, double> lens;
  tris.reserve(t3.boundary_triangle_indices.size());
  for (int ti : t3.boundary_triangle_indices) {
    const auto& tri = t3.triangles[static_cast<size_t>(ti)];
    tris.push_back({old2new[tri[0]], old2new[tri[1]], old2new[tri[2]]});
    for (int i = 0; i < 3; ++i)
      for (int j = i + 1; j < 3; ++j) {
        const int u = tri[static_cast<size_t>(i)], v = tri[static_cast<size_t>(j)];
        lens[make_edge(old2new[u], old2new[v])] =
            l.value[static_cast<size_t>(t3.edge_index(u, v))];
      }
  }

  try {
    ConeSurface s = build_surface(tris, lens);
    if (boundary_vertex_out) *boundary_vertex_out = new2old;
    return s;
  } catch (const Error& e) {
    if (e.code() == ErrorCode::Disconnected)
      fail(ErrorCode::NotASphere, "boundary is disconnected");
    throw;
  }
}

} // namespace regge
