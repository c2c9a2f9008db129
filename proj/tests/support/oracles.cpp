#include "oracles.hpp"

namespace regge::testing {

TetLengths lengths_of(const TetPoints& p) {
  TetLengths l;
  for (int e = 0; e < 6; ++e) {
    const auto& ev = tet_edge_vertices[static_cast<size_t>(e)];
    l[e] = (p[static_cast<size_t>(ev[0])] - p[static_cast<size_t>(ev[1])]).norm();
  }
  return l;
}

double coord_volume(const TetPoints& p) {
  Eigen::Matrix3d m;
  m.col(0) = p[1] - p[0];
  m.col(1) = p[2] - p[0];
  m.col(2) = p[3] - p[0];
  return std::abs(m.determinant()) / 6.0;
}

double coord_dihedral(const TetPoints& p, int u, int v) {
  int rest[2];
  int n = 0;
  for (int w = 0; w < 4; ++w)
    if (w != u && w != v) rest[n++] = w;
  const Vec3 d = (p[static_cast<size_t>(v)] - p[static_cast<size_t>(u)]).normalized();
  auto project = [&](int w) {
    const Vec3 x = p[static_cast<size_t>(w)] - p[static_cast<size_t>(u)];
    return Vec3(x - d * d.dot(x));
  };
  const Vec3 w1 = project(rest[0]);
  const Vec3 w2 = project(rest[1]);
  return std::atan2(w1.cross(w2).norm(), w1.dot(w2));
}

DihedralSet coord_dihedrals(const TetPoints& p) {
  DihedralSet d;
  for (int e = 0; e < 6; ++e) {
    const auto& ev = tet_edge_vertices[static_cast<size_t>(e)];
    d.angle[static_cast<size_t>(e)] = coord_dihedral(p, ev[0], ev[1]);
  }
  return d;
}

TetPoints random_tet(std::mt19937_64& rng, double cm_rel_min) {
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  for (;;) {
    TetPoints p;
    for (auto& v : p) v = Vec3(unit(rng), unit(rng), unit(rng));
    const TetLengths l = lengths_of(p);
    const double m = l.mean();
    if (cayley_menger(l) > cm_rel_min * m * m * m * m * m * m) return p;
  }
}

TetLengths relabel(const TetLengths& l, const std::array<int, 4>& perm) {
  TetLengths out;
  for (int e = 0; e < 6; ++e) {
    const auto& ev = tet_edge_vertices[static_cast<size_t>(e)];
    out[tet_edge_index(perm[static_cast<size_t>(ev[0])], perm[static_cast<size_t>(ev[1])])] = l[e];
  }
  return out;
}

} // namespace regge::testing
