#include "regge/io.hpp"

#include <cstdio>
#include <fstream>
#include <map>
#include <set>
#include <sstream>
#include <utility>

#include <json.hpp>

namespace regge {
namespace {

using nlohmann::json;

json parse_json(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    fail(ErrorCode::ParseError, e.what());  // carries line/column position
  }
}

const json& require_field(const json& j, const char* name) {
  if (!j.is_object() || !j.contains(name))
    fail(ErrorCode::ParseError, std::string("missing field \"") + name + "\"");
  return j.at(name);
}

// Fixed-width integer tuples ([a,b,c,d] tets, [a,b,c] triangles, [u,v] edges).
template <size_t N>
std::array<int, N> int_tuple(const json& j, const char* what) {
  if (!j.is_array() || j.size() != N)
    fail(ErrorCode::ParseError, std::string(what) + " must be an array of " + std::to_string(N) +
                                    " integers");
  std::array<int, N> out{};
  for (size_t i = 0; i < N; ++i) {
    const json& v = j[i];
    if (!v.is_number_integer())
      fail(ErrorCode::ParseError, std::string(what) + " entries must be integers");
    out[i] = v.get<int>();
    if (out[i] < 0) fail(ErrorCode::ParseError, std::string(what) + " indices must be >= 0");
  }
  return out;
}

Eigen::Vector3d point3(const json& j, const char* what) {
  if (!j.is_array() || j.size() != 3)
    fail(ErrorCode::ParseError, std::string(what) + " must be an array of 3 numbers");
  Eigen::Vector3d p;
  for (int i = 0; i < 3; ++i) {
    if (!j[i].is_number()) fail(ErrorCode::ParseError, std::string(what) + " entries must be numbers");
    p[i] = j[i].get<double>();
  }
  return p;
}

// Shared shape for the "lengths" table of both input kinds; rejects repeated
// edges so a stray duplicate can never silently win by map order.
std::vector<std::pair<VertexPair, double>> length_pairs(const json& j) {
  if (!j.is_array()) fail(ErrorCode::ParseError, "\"lengths\" must be an array");
  std::vector<std::pair<VertexPair, double>> pairs;
  std::set<VertexPair> seen;
  pairs.reserve(j.size());
  for (const json& item : j) {
    if (!item.is_object())
      fail(ErrorCode::ParseError, "\"lengths\" entries must be objects with \"edge\" and \"l\"");
    VertexPair raw = int_tuple<2>(require_field(item, "edge"), "\"edge\"");
    if (raw[0] == raw[1])
      fail(ErrorCode::ParseError, "edge endpoints coincide", raw[0]);
    const json& lj = require_field(item, "l");
    if (!lj.is_number()) fail(ErrorCode::ParseError, "\"l\" must be a number");
    double l = lj.get<double>();
    if (!(l > 0)) fail(ErrorCode::ParseError, "edge lengths must be positive");
    VertexPair e = make_edge(raw[0], raw[1]);
    if (!seen.insert(e).second)
      fail(ErrorCode::ParseError,
           "duplicate length for edge [" + std::to_string(e[0]) + "," + std::to_string(e[1]) + "]");
    pairs.emplace_back(e, l);
  }
  return pairs;
}

}  // namespace

ManifoldInput parse_manifold(const std::string& text) {
  json j = parse_json(text);
  const json& tets_j = require_field(j, "tets");
  if (!tets_j.is_array() || tets_j.empty())
    fail(ErrorCode::ParseError, "\"tets\" must be a non-empty array");
  std::vector<std::array<int, 4>> tets;
  tets.reserve(tets_j.size());
  for (const json& t : tets_j) tets.push_back(int_tuple<4>(t, "tet"));

  ManifoldInput input;
  input.complex = build_complex(tets);
  input.lengths = lengths_from_pairs(input.complex, length_pairs(require_field(j, "lengths")));
  return input;
}

SurfaceInput parse_surface(const std::string& text) {
  json j = parse_json(text);
  const json& tris_j = require_field(j, "triangles");
  if (!tris_j.is_array() || tris_j.empty())
    fail(ErrorCode::ParseError, "\"triangles\" must be a non-empty array");
  std::vector<VertexTriple> triangles;
  triangles.reserve(tris_j.size());
  for (const json& t : tris_j) triangles.push_back(int_tuple<3>(t, "triangle"));

  std::map<VertexPair, double> lengths;
  for (const auto& [edge, l] : length_pairs(require_field(j, "lengths"))) lengths[edge] = l;

  SurfaceInput input;
  input.surface = build_surface(triangles, lengths);
  if (j.contains("cone_points")) {
    const json& cp = j.at("cone_points");
    if (!cp.is_array()) fail(ErrorCode::ParseError, "\"cone_points\" must be an array");
    std::vector<int> points;
    points.reserve(cp.size());
    for (const json& v : cp) {
      if (!v.is_number_integer())
        fail(ErrorCode::ParseError, "\"cone_points\" entries must be integers");
      int p = v.get<int>();
      if (p < 0 || p >= input.surface.vertex_count)
        fail(ErrorCode::ParseError, "cone point references a vertex that does not exist", p);
      points.push_back(p);
    }
    input.cone_points = std::move(points);
  }
  return input;
}

EmbeddedPolyhedron parse_polyhedron(const std::string& text) {
  json j = parse_json(text);
  const json& verts_j = require_field(j, "vertices");
  if (!verts_j.is_array() || verts_j.size() < 4)
    fail(ErrorCode::ParseError, "\"vertices\" must be an array of at least 4 points");
  EmbeddedPolyhedron p;
  p.vertices.reserve(verts_j.size());
  for (const json& v : verts_j) p.vertices.push_back(point3(v, "vertex"));

  const json& faces_j = require_field(j, "faces");
  if (!faces_j.is_array() || faces_j.empty())
    fail(ErrorCode::ParseError, "\"faces\" must be a non-empty array");
  p.faces.reserve(faces_j.size());
  for (const json& f : faces_j) {
    VertexTriple tri = int_tuple<3>(f, "face");
    for (int v : tri)
      if (v >= static_cast<int>(p.vertices.size()))
        fail(ErrorCode::ParseError, "face references a vertex that does not exist", v);
    p.faces.push_back(tri);
  }

  if (j.contains("star_point")) {
    p.star_point = point3(j.at("star_point"), "\"star_point\"");
  } else {
    Eigen::Vector3d centroid = Eigen::Vector3d::Zero();
    for (const Eigen::Vector3d& v : p.vertices) centroid += v;
    p.star_point = centroid / static_cast<double>(p.vertices.size());
  }
  return p;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(ErrorCode::ParseError, "cannot open " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  out << content;
  if (!out) fail(ErrorCode::ParseError, "cannot write " + path);
}

std::string format_number(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

std::string obj_of(const std::vector<Eigen::Vector3d>& vertices,
                   const std::vector<VertexTriple>& faces) {
  std::string out;
  for (const Eigen::Vector3d& v : vertices) {
    out += "v " + format_number(v.x()) + " " + format_number(v.y()) + " " + format_number(v.z()) +
           "\n";
  }
  for (const VertexTriple& f : faces) {
    out += "f " + std::to_string(f[0] + 1) + " " + std::to_string(f[1] + 1) + " " +
           std::to_string(f[2] + 1) + "\n";
  }
  return out;
}

}  // namespace regge
