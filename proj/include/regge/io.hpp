#pragma once

#include <optional>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "regge/mesh.hpp"
#include "regge/rigidity.hpp"

namespace regge {

struct ManifoldInput {
  Triangulation3 complex;
  EdgeLengths lengths;
};

struct SurfaceInput {
  ConeSurface surface;
  std::optional<std::vector<int>> cone_points;  // declared list, when present
};

// {"tets":[[a,b,c,d],...],"lengths":[{"edge":[u,v],"l":x},...]}; 0-based.
ManifoldInput parse_manifold(const std::string& text);

// {"triangles":[[a,b,c],...],"lengths":[{"edge":[u,v],"l":x},...]} plus an
// optional "cone_points":[v,...].
SurfaceInput parse_surface(const std::string& text);

// {"vertices":[[x,y,z],...],"faces":[[a,b,c],...]} plus an optional
// "star_point":[x,y,z]; the star point defaults to the vertex centroid.
EmbeddedPolyhedron parse_polyhedron(const std::string& text);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& content);

// 17 significant digits, C locale: report output stays diff-stable.
std::string format_number(double x);

// Wavefront OBJ: v records then 1-based triangular f records.
std::string obj_of(const std::vector<Eigen::Vector3d>& vertices,
                   const std::vector<VertexTriple>& faces);

}  // namespace regge
