#include <doctest.h>

#include "coverlift/arrangement.hpp"
#include "coverlift/mapping_class.hpp"
#include "support.hpp"

using namespace coverlift;

TEST_SUITE("mapping_class") {
  TEST_CASE("zero power and zero steps are the identity") {
    const Triangulation t = build_surface(0, 5);
    const auto [a, b] = test::standard_pair(t);
    CHECK(dehn_twist(t, a, b, 0) == a);
    CHECK(mutate(t, a, 99, 0) == a);
  }

  TEST_CASE("twisting fixes the twist curve's intersections and inverts") {
    for (auto [g, n] : {std::pair{0, 5}, {1, 2}}) {
      const Triangulation t = build_surface(g, n);
      const auto curves = enumerate_curves(t, 2);
      for (const CurveClass& a : curves) {
        for (const CurveClass& b : curves) {
          const Weight i = intersection_number(t, a.coords(), b.coords());
          for (int power : {1, -2}) {
            const CurveClass c = dehn_twist(t, a, b, power);
            CHECK(intersection_number(t, c.coords(), b.coords()) == i);
            CHECK(dehn_twist(t, c, b, -power) == a);
          }
        }
      }
    }
  }

  TEST_CASE("twist identity on the standard pair") {
    const Triangulation t = build_surface(0, 5);
    const auto [a, b] = test::standard_pair(t);
    REQUIRE(intersection_number(t, a.coords(), b.coords()) == 2);
    for (int n = 1; n <= 4; ++n) {
      const CurveClass c = dehn_twist(t, a, b, n);
      CHECK(intersection_number(t, c.coords(), a.coords()) == 4 * n);
    }
  }

  TEST_CASE("twisting about a disjoint curve does nothing") {
    const Triangulation t = build_surface(1, 2);
    const auto curves = enumerate_curves(t, 2);
    for (const CurveClass& a : curves) {
      for (const CurveClass& b : curves) {
        if (intersection_number(t, a.coords(), b.coords()) == 0) CHECK(dehn_twist(t, a, b, 3) == a);
      }
    }
  }

  TEST_CASE("mutate is a deterministic mapping class") {
    const Triangulation t = build_surface(0, 5);
    const auto curves = enumerate_curves(t, 2);
    const auto links = puncture_links(t);
    for (std::uint64_t seed : {1u, 2u, 3u}) {
      for (std::size_t x = 0; x < curves.size(); x += 4) {
        const CurveClass m = mutate(t, curves[x], seed, 3);
        CHECK(m.canonical() == mutate(t, curves[x], seed, 3).canonical());
        CHECK(is_valid(t, m.coords()));
        CHECK(classify(t, m.coords()) == CurveKind::Essential);
        CHECK(std::find(links.begin(), links.end(), m.coords()) == links.end());
        for (std::size_t y = 0; y < curves.size(); y += 5) {
          const CurveClass n = mutate(t, curves[y], seed, 3);
          CHECK(intersection_number(t, m.coords(), n.coords()) ==
                intersection_number(t, curves[x].coords(), curves[y].coords()));
        }
      }
    }
  }
}
