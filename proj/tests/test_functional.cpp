#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>
#include <numeric>
#include <random>

#include "fixtures.hpp"
#include "generators.hpp"
#include "oracles.hpp"
#include "regge/functional.hpp"

using namespace regge;
using namespace regge::testing;

namespace {

constexpr double kPi = std::numbers::pi;

EdgeLengths scaled(const EdgeLengths& l, double s) {
  EdgeLengths out = l;
  for (double& x : out.value) x *= s;
  return out;
}

std::vector<int> all_edges(const Triangulation3& t3) {
  std::vector<int> ids(t3.edges.size());
  std::iota(ids.begin(), ids.end(), 0);
  return ids;
}

} // namespace

TEST_CASE("single unit tet: closed-form curvature and energy") {
  const Triangulation3 t3 = build_complex({{0, 1, 2, 3}});
  EdgeLengths l;
  l.value.assign(6, 1.0);

  const double kappa = kPi - std::acos(1.0 / 3.0);
  const CurvatureField c = curvatures(t3, l);
  for (size_t e = 0; e < 6; ++e) {
    CHECK(c.total_angle[e] == doctest::Approx(std::acos(1.0 / 3.0)).epsilon(1e-14));
    CHECK(c.kappa[e] == doctest::Approx(kappa).epsilon(1e-14));
  }
  CHECK(energy(t3, l) == doctest::Approx(6.0 * kappa).epsilon(1e-14));
  CHECK(gradient(t3, l) == c.kappa);
}

TEST_CASE("Kuhn cube: flat diagonal, right cube edges, flat face diagonals") {
  const auto [t3, l] = kuhn_cube();
  const CurvatureField c = curvatures(t3, l);
  for (size_t e = 0; e < t3.edges.size(); ++e) {
    const auto& uv = t3.edges[e];
    const int dist = __builtin_popcount(static_cast<unsigned>(uv[0] ^ uv[1]));
    if (dist == 1) {
      CHECK(c.total_angle[e] == doctest::Approx(kPi / 2).epsilon(1e-13));
      CHECK(c.kappa[e] == doctest::Approx(kPi / 2).epsilon(1e-13));
    } else if (dist == 2) {
      CHECK(c.kappa[e] == doctest::Approx(0.0).scale(1.0).epsilon(1e-13));
    } else {
      CHECK(!t3.edge_on_boundary[e]);
      CHECK(c.total_angle[e] == doctest::Approx(2 * kPi).epsilon(1e-13));
      CHECK(c.kappa[e] == doctest::Approx(0.0).scale(1.0).epsilon(1e-13));
    }
  }
  CHECK(energy(t3, l) == doctest::Approx(6.0 * kPi).epsilon(1e-13));
}

TEST_CASE("flat 3-torus: zero curvature, zero energy, zero gradient") {
  const auto [t3, l] = flat_torus_3();
  const std::vector<double> g = gradient(t3, l);
  for (double k : g) CHECK(std::abs(k) <= 1e-12);
  CHECK(std::abs(energy(t3, l)) <= 1e-11);
}

TEST_CASE("energy is homogeneous of degree one") {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 10; ++trial) {
    const MetricComplex mc =
        trial % 2 ? random_stacked_complex(rng) : random_star_complex(rng);
    const double s0 = energy(mc.t3, mc.lengths);
    for (double lam : {0.5, 2.0, 10.0}) {
      CHECK(energy(mc.t3, scaled(mc.lengths, lam)) ==
            doctest::Approx(lam * s0).epsilon(1e-12));
    }
  }
}

TEST_CASE("gradient equals central finite differences of the energy") {
  std::mt19937_64 rng(37);
  int complexes = 0;
  while (complexes < 40) {
    const MetricComplex mc =
        complexes % 3 == 2 ? random_star_complex(rng) : random_stacked_complex(rng);
    ++complexes;
    const std::vector<double> g = gradient(mc.t3, mc.lengths);
    for (size_t e = 0; e < mc.t3.edges.size(); ++e) {
      const double h = 1e-5 * mc.lengths.value[e];
      const double fd = fd_derivative(
          [&](double x) {
            EdgeLengths lx = mc.lengths;
            lx.value[e] = x;
            return energy(mc.t3, lx);
          },
          mc.lengths.value[e], h);
      CHECK(std::abs(fd - g[e]) <= 1e-6 * std::max(std::abs(g[e]), 1e-3));
    }
  }
}

TEST_CASE("hessian: single tet restriction is the negated geom entry") {
  const Triangulation3 t3 = build_complex({{0, 1, 2, 3}});
  EdgeLengths l;
  l.value.assign(6, 1.0);
  TetLengths tl;
  tl.l = {1, 1, 1, 1, 1, 1};
  const auto jac = dihedral_jacobian(tl);

  for (int e = 0; e < 6; ++e) {
    const HessianReport rep = hessian(t3, l, {e});
    CHECK(rep.matrix.rows() == 1);
    // Local edge order within the tet matches the global edge order here.
    CHECK(rep.matrix(0, 0) == doctest::Approx(-jac(e, e)).epsilon(1e-14));
  }
}

TEST_CASE("hessian: symmetry, completeness, kernel residual") {
  std::mt19937_64 rng(41);
  for (int trial = 0; trial < 12; ++trial) {
    const MetricComplex mc =
        trial % 2 ? random_stacked_complex(rng) : random_star_complex(rng);
    const HessianReport rep = hessian(mc.t3, mc.lengths, all_edges(mc.t3));
    const auto n = rep.matrix.rows();
    CHECK(rep.positive + rep.zero + rep.negative == static_cast<int>(n));
    const double hmax = rep.matrix.cwiseAbs().maxCoeff();
    CHECK((rep.matrix - rep.matrix.transpose()).cwiseAbs().maxCoeff() <= 1e-9 * hmax);
    if (rep.zero > 0) {
      const double residual = (rep.matrix * rep.kernel).cwiseAbs().maxCoeff();
      CHECK(residual <= 1e-7 * hmax);
    }

    // Full-edge Hessian obeys the summed Schlaefli identity.
    Eigen::VectorXd lv(n);
    for (Eigen::Index i = 0; i < n; ++i)
      lv(i) = mc.lengths.value[static_cast<size_t>(rep.free_edges[static_cast<size_t>(i)])];
    CHECK((lv.transpose() * rep.matrix).cwiseAbs().maxCoeff() <=
          1e-9 * lv.cwiseAbs().maxCoeff() * std::max(hmax, 1.0));
  }
}

TEST_CASE("hessian matches finite differences of the gradient") {
  std::mt19937_64 rng(43);
  for (int trial = 0; trial < 8; ++trial) {
    const MetricComplex mc =
        trial % 2 ? random_stacked_complex(rng, 6) : random_star_complex(rng);
    const auto free_ids = all_edges(mc.t3);
    const HessianReport rep = hessian(mc.t3, mc.lengths, free_ids);
    const double scale = std::max(1.0, rep.matrix.cwiseAbs().maxCoeff());
    for (size_t f = 0; f < mc.t3.edges.size(); ++f) {
      const double h = 1e-5 * mc.lengths.value[f];
      for (size_t e = 0; e < mc.t3.edges.size(); ++e) {
        const double fd = fd_derivative(
            [&](double x) {
              EdgeLengths lx = mc.lengths;
              lx.value[f] = x;
              return gradient(mc.t3, lx)[e];
            },
            mc.lengths.value[f], h);
        CHECK(std::abs(fd - rep.matrix(static_cast<Eigen::Index>(e),
                                       static_cast<Eigen::Index>(f))) <= 1e-5 * scale);
      }
    }
  }
}

TEST_CASE("hessian: Kuhn cube interior edge is negative definite") {
  // No interior vertices: the interior-edge Hessian of a flat convex complex
  // must be negative definite.
  const auto [t3, l] = kuhn_cube();
  const HessianReport rep = hessian(t3, l, t3.interior_edge_indices);
  CHECK(rep.matrix.rows() == 1);
  CHECK(rep.negative == 1);
  CHECK(rep.zero == 0);
  CHECK(rep.positive == 0);
}

TEST_CASE("hessian: flat octahedron star has signature (1, 3, n-4)") {
  const StarComplex sc = cone_over(octahedron_surface(), std::vector<double>(6, 1.0));
  const std::vector<double> g = gradient(sc.complex, sc.lengths);
  for (int e : sc.complex.interior_edge_indices)
    CHECK(std::abs(g[static_cast<size_t>(e)]) <= 1e-12);

  const HessianReport rep = hessian(sc.complex, sc.lengths, sc.complex.interior_edge_indices);
  CHECK(rep.free_edges.size() == 6);
  CHECK(rep.positive == 1);
  CHECK(rep.zero == 3);
  CHECK(rep.negative == 2);
}

TEST_CASE("hessian: signature is scale-invariant") {
  const StarComplex sc = cone_over(octahedron_surface(), std::vector<double>(6, 1.1));
  const HessianReport base = hessian(sc.complex, sc.lengths, sc.complex.interior_edge_indices);
  for (double lam : {0.5, 2.0, 10.0}) {
    const HessianReport rep =
        hessian(sc.complex, scaled(sc.lengths, lam), sc.complex.interior_edge_indices);
    CHECK(rep.positive == base.positive);
    CHECK(rep.zero == base.zero);
    CHECK(rep.negative == base.negative);
  }
}

TEST_CASE("hessian: input validation") {
  const Triangulation3 t3 = build_complex({{0, 1, 2, 3}});
  EdgeLengths l;
  l.value.assign(6, 1.0);
  CHECK_THROWS_AS(hessian(t3, l, {}), Error);
  CHECK_THROWS_AS(hessian(t3, l, {0, 0}), Error);
  CHECK_THROWS_AS(hessian(t3, l, {6}), Error);
  CHECK_THROWS_AS(hessian(t3, l, {0}, 0.0), Error);
}

TEST_CASE("curvature errors carry the tet index") {
  const Triangulation3 t3 = build_complex({{0, 1, 2, 3}, {0, 1, 2, 4}});
  EdgeLengths l;
  l.value.assign(t3.edges.size(), 1.0);
  l.value[static_cast<size_t>(t3.edge_index(3, 0))] = 1e-9;  // crush the first tet
  try {
    curvatures(t3, l);
    FAIL("expected DegenerateTet");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::DegenerateTet);
    CHECK(e.index() == 0);
  }
}
