#include <doctest.h>

#include <cmath>

#include "coverlift/cusp_geometry.hpp"
#include "oracles.hpp"

using namespace coverlift;

namespace {

std::array<double, 3> arr(const Point3& p) { return {p.x, p.y, p.h}; }

double rel_err(double x, double y) { return std::fabs(x - y) / std::max(std::fabs(y), 1e-300); }

}  // namespace

TEST_SUITE("cusp_geometry") {
  TEST_CASE("Lipschitz constant") {
    CHECK(lipschitz_constant(0.3, 0.3) == 1.0);
    const long double expect = oracle::sinh_series(0.1L) / oracle::sinh_series(0.05L);
    CHECK(rel_err(lipschitz_constant(0.1, 0.05), static_cast<double>(expect)) < 1e-12);
    double last = 0;
    for (double d = 0.05; d <= 2.0; d += 0.05) {
      const double r = lipschitz_constant(d, 0.05);
      CHECK(r >= last);
      last = r;
    }
    double prev = lipschitz_constant(0.5, 0.1);
    for (double dp = 0.2; dp <= 0.5; dp += 0.1) {
      const double r = lipschitz_constant(0.5, dp);
      CHECK(r < prev);
      prev = r;
    }
    CHECK(lipschitz_constant(0.5, 0.5 - 1e-9) - 1 < 1e-8);
    CHECK_THROWS_AS(lipschitz_constant(0.1, 0.0), std::invalid_argument);
    CHECK_THROWS_AS(lipschitz_constant(0.1, 0.2), std::invalid_argument);
  }

  TEST_CASE("epsilon prime") {
    CHECK(epsilon_prime(0.7, 1) == 0.7);
    CHECK(epsilon_prime(0.6, 3) == doctest::Approx(0.2).epsilon(1e-15));
    for (int d = 1; d < 10; ++d) CHECK(epsilon_prime(0.4, d) <= 0.4);
    CHECK_THROWS_AS(epsilon_prime(0.4, 0), std::invalid_argument);
    CHECK_THROWS_AS(epsilon_prime(-1, 2), std::invalid_argument);
  }

  TEST_CASE("horosphere heights realize the ratio") {
    for (double ell : {0.5, 1.0, 3.0}) {
      const double delta = 0.4, delta_prime = 0.1;
      const double h = horosphere_height(delta, ell), hp = horosphere_height(delta_prime, ell);
      CHECK(rel_err(hp / h, lipschitz_constant(delta, delta_prime)) < 1e-12);
      // Injectivity radius is half the translation distance on the horosphere.
      CHECK(rel_err(geodesic_distance({0, 0, h}, {ell, 0, h}) / 2, delta) < 1e-12);
    }
  }

  TEST_CASE("hyperbolic length closed forms") {
    CHECK(hyperbolic_length({{0.3, 0.2, 2.0}}) == 0);
    CHECK(std::fabs(hyperbolic_length({{0, 0, 1}, {0, 0, std::exp(1.0)}}) - 1) < 1e-14);
    for (double h : {0.25, 1.0, 3.0}) {
      const Point3 p{0, 0, h}, q{1, 0, h};
      const double closed = 2 * std::asinh(1 / (2 * h));
      CHECK(rel_err(hyperbolic_length({p, q}), closed) < 1e-14);
      CHECK(rel_err(oracle::geodesic_arc_quadrature(arr(p), arr(q)), closed) < 1e-9);
    }
    CHECK_THROWS_AS(hyperbolic_length({{0, 0, 1}, {0, 0, 0}}), std::invalid_argument);
  }

  TEST_CASE("geodesic distance agrees with arc quadrature") {
    Rng rng(4);
    for (int i = 0; i < 50; ++i) {
      const Point3 p{uniform_unit(rng) * 3, uniform_unit(rng) * 3, 0.2 + uniform_unit(rng) * 3};
      const Point3 q{uniform_unit(rng) * 3, uniform_unit(rng) * 3, 0.2 + uniform_unit(rng) * 3};
      CHECK(rel_err(geodesic_distance(p, q), oracle::geodesic_arc_quadrature(arr(p), arr(q))) < 1e-8);
    }
  }

  TEST_CASE("projection") {
    const PiecewisePath single{{1, 2, 3}};
    const auto moved = project_to_height(single, 0.5);
    CHECK(moved.size() == 1);
    CHECK(moved[0].x == 1);
    CHECK(moved[0].y == 2);
    CHECK(moved[0].h == 0.5);
    const PiecewisePath flat{{0, 0, 2}, {1, 1, 2}};
    const auto same = project_to_height(flat, 2);
    CHECK(same[1].x == flat[1].x);
    CHECK(same[1].h == flat[1].h);
  }

  TEST_CASE("horospherical lengths scale by the height ratio") {
    Rng rng(9);
    const double r = lipschitz_constant(0.3, 0.1);
    for (int i = 0; i < 50; ++i) {
      const PiecewisePath path = random_slab_path(rng, r, 5);
      const auto low = project_to_height(path, 1.0), high = project_to_height(path, r);
      const double l1 = horospherical_length(low), lr = horospherical_length(high);
      CHECK(rel_err(l1, r * lr) < 1e-9);
      double q1 = 0, qr = 0;
      for (std::size_t k = 0; k + 1 < path.size(); ++k) {
        q1 += oracle::segment_length_quadrature(arr(low[k]), arr(low[k + 1]));
        qr += oracle::segment_length_quadrature(arr(high[k]), arr(high[k + 1]));
      }
      CHECK(rel_err(q1, r * qr) < 1e-6);
      CHECK(rel_err(q1, l1) < 1e-6);
    }
  }

  TEST_CASE("retraction onto the lower horosphere is R-Lipschitz") {
    Rng rng(13);
    for (auto [d, dp] : {std::pair{0.2, 0.1}, {0.5, 0.05}, {1.0, 0.3}, {0.11, 0.1}}) {
      const double r = lipschitz_constant(d, dp);
      for (int i = 0; i < 200; ++i) {
        const PiecewisePath path = random_slab_path(rng, r, 6);
        for (std::size_t k = 0; k + 1 < path.size(); ++k) REQUIRE(arc_apex(path[k], path[k + 1]) < r);
        const RetractionSample s = retract(path);
        REQUIRE(s.retracted <= r * s.geodesic * (1 + 1e-12));
      }
    }
    CHECK_THROWS_AS(retract({{0, 0, 0.5}}), std::invalid_argument);
  }
}
