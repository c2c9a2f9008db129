#include "star_layout.hpp"

#include <algorithm>
#include <cmath>
#include <queue>

namespace regge {

namespace {

using Eigen::Vector3d;

// Intersection of three spheres: |q| = da, |q - pu| = du, |q - pv| = dv.
// Returns the two mirror solutions across the plane through 0, pu, pv.
std::array<Vector3d, 2> trilaterate(const Vector3d& pu, const Vector3d& pv, double da, double du,
                                    double dv) {
  Eigen::Matrix2d gram;
  gram << pu.dot(pu), pu.dot(pv), pu.dot(pv), pv.dot(pv);
  const Eigen::Vector2d rhs(0.5 * (da * da + pu.dot(pu) - du * du),
                            0.5 * (da * da + pv.dot(pv) - dv * dv));
  const Eigen::Vector2d ab = gram.ldlt().solve(rhs);
  const Vector3d q0 = ab(0) * pu + ab(1) * pv;
  const Vector3d n = pu.cross(pv).normalized();
  const double h2 = da * da - q0.squaredNorm();
  const double h = std::sqrt(std::max(0.0, h2));
  return {q0 + h * n, q0 - h * n};
}

} // namespace

StarLayout star_layout(const StarComplex& sc, bool strict, double rel_tol) {
  const ConeSurface& s = sc.base;
  const int nv = s.vertex_count;

  std::vector<std::vector<int>> neighbors(static_cast<size_t>(nv));
  for (const auto& e : s.edges) {
    neighbors[static_cast<size_t>(e[0])].push_back(e[1]);
    neighbors[static_cast<size_t>(e[1])].push_back(e[0]);
  }

  StarLayout out;
  out.position.assign(static_cast<size_t>(nv), Vector3d::Zero());
  std::vector<char> placed(static_cast<size_t>(nv), 0);
  auto radius = [&](int v) { return sc.radii[static_cast<size_t>(v)]; };

  // Root triangle: apex on the origin, first vertex on +x, second in the
  // upper half xy-plane, third on the positive side.
  {
    const auto& tri = s.triangles[0];
    const int i = tri[0], j = tri[1], k = tri[2];
    out.position[static_cast<size_t>(i)] = Vector3d(radius(i), 0, 0);
    const double lij = s.length(i, j);
    const double x = (radius(i) * radius(i) + radius(j) * radius(j) - lij * lij) /
                     (2.0 * radius(i));
    const double y2 = radius(j) * radius(j) - x * x;
    out.position[static_cast<size_t>(j)] = Vector3d(x, std::sqrt(std::max(0.0, y2)), 0);
    const auto qk = trilaterate(out.position[static_cast<size_t>(i)],
                                out.position[static_cast<size_t>(j)], radius(k),
                                s.length(i, k), s.length(j, k));
    out.position[static_cast<size_t>(k)] = qk[0];  // +n side: positive orientation
    placed[static_cast<size_t>(i)] = placed[static_cast<size_t>(j)] =
        placed[static_cast<size_t>(k)] = 1;
  }

  std::vector<char> visited(s.triangles.size(), 0);
  visited[0] = 1;
  std::queue<int> frontier;
  frontier.push(0);

  while (!frontier.empty()) {
    const int t = frontier.front();
    frontier.pop();
    const auto& tri = s.triangles[static_cast<size_t>(t)];
    for (int i = 0; i < 3; ++i)
      for (int j = i + 1; j < 3; ++j) {
        const int u = tri[static_cast<size_t>(i)], v = tri[static_cast<size_t>(j)];
        const auto& pair = s.edge_triangles[static_cast<size_t>(s.edge_index(u, v))];
        const int other = pair[0] == t ? pair[1] : pair[0];
        if (visited[static_cast<size_t>(other)]) continue;
        visited[static_cast<size_t>(other)] = 1;
        frontier.push(other);

        const auto& otri = s.triangles[static_cast<size_t>(other)];
        int w = -1;
        for (int x : otri)
          if (x != u && x != v) w = x;
        if (placed[static_cast<size_t>(w)]) continue;

        const Vector3d& pu = out.position[static_cast<size_t>(u)];
        const Vector3d& pv = out.position[static_cast<size_t>(v)];
        const auto cand = trilaterate(pu, pv, radius(w), s.length(u, w), s.length(v, w));

        double score[2] = {0, 0};
        for (int c = 0; c < 2; ++c)
          for (int x : neighbors[static_cast<size_t>(w)]) {
            if (!placed[static_cast<size_t>(x)]) continue;
            const double err = (cand[static_cast<size_t>(c)] -
                                out.position[static_cast<size_t>(x)])
                                   .norm() -
                               s.length(w, x);
            score[c] += err * err;
          }

        int pick;
        const double diff = std::abs(score[0] - score[1]);
        const double floor_tol = 1e-12 * (1.0 + score[0] + score[1]);
        if (diff > floor_tol) {
          pick = score[0] <= score[1] ? 0 : 1;
        } else {
          // Adjacent pyramids lie on opposite sides of their shared face
          // (apex, u, v); continue the unfolding away from the known third
          // vertex of the current triangle.
          int wprev = -1;
          for (int x : tri)
            if (x != u && x != v) wprev = x;
          const Vector3d m = pu.cross(pv);
          const double prev_side = m.dot(out.position[static_cast<size_t>(wprev)]);
          pick = m.dot(cand[0]) * prev_side <= 0 ? 0 : 1;
        }
        out.position[static_cast<size_t>(w)] = cand[static_cast<size_t>(pick)];
        placed[static_cast<size_t>(w)] = 1;
      }
  }

  double max_len = 0;
  for (double l : s.lengths) max_len = std::max(max_len, l);
  for (double r : sc.radii) max_len = std::max(max_len, r);
  double worst = 0;
  for (size_t e = 0; e < s.edges.size(); ++e) {
    const auto& uv = s.edges[e];
    const double got = (out.position[static_cast<size_t>(uv[0])] -
                        out.position[static_cast<size_t>(uv[1])])
                           .norm();
    worst = std::max(worst, std::abs(got - s.lengths[e]));
  }
  for (int v = 0; v < nv; ++v)
    worst = std::max(worst, std::abs(out.position[static_cast<size_t>(v)].norm() - radius(v)));
  out.max_rel_error = worst / max_len;
  if (strict && out.max_rel_error > rel_tol)
    fail(ErrorCode::EmbeddingInconsistent,
         "layout misses the metric by relative " + std::to_string(out.max_rel_error));
  return out;
}

} // namespace regge
