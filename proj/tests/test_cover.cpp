#include <doctest.h>

#include "coverlift/arrangement.hpp"
#include "coverlift/cover.hpp"
#include "coverlift/curve_complex.hpp"
#include "support.hpp"

using namespace coverlift;

namespace {

Coords project(const CoverTriangulation& c, const Coords& w) {
  Coords out(static_cast<std::size_t>(c.total.num_edges()) / c.degree, 0);
  for (std::size_t j = 0; j < w.size(); ++j) out[c.edge_base[j]] += w[j];
  return out;
}

}  // namespace

TEST_SUITE("cover") {
  TEST_CASE("degree one reproduces the base") {
    const Triangulation t = build_surface(0, 5);
    const CoverTriangulation c = build_cover(t, CoverSpec::identity(t, 1));
    CHECK(!isomorphisms(c.total, t).empty());
    const auto [a, b] = test::standard_pair(t);
    CHECK(lift_curve(c, a) == std::vector<CurveClass>{a});
    const auto w = disjoint_witness(t, a.coords(), b.coords()).value();
    CHECK(lift_path(c, {a, w, b}) == std::vector<CurveClass>{a, w, b});
    CHECK(lift_path(c, {}).empty());
  }

  TEST_CASE("bad specs are rejected") {
    const Triangulation t = build_surface(0, 5);
    CHECK_THROWS_AS(build_cover(t, CoverSpec::identity(t, 2)), TopologyError);
    CoverSpec spec = CoverSpec::identity(t, 2);
    spec.perms[0] = {0, 0};
    CHECK(!check_spec(t, spec).empty());
    spec.perms.pop_back();
    CHECK(!check_spec(t, spec).empty());
    CHECK(!check_spec(t, CoverSpec{0, {}}).empty());
  }

  TEST_CASE("Euler characteristic and punctures of random covers") {
    Rng rng(11);
    for (auto [g, n] : {std::pair{0, 5}, {1, 2}, {2, 1}}) {
      const Triangulation t = build_surface(g, n);
      for (int degree = 1; degree <= 4; ++degree) {
        for (int trial = 0; trial < 10; ++trial) {
          const CoverSpec spec = random_cover_spec(t, degree, rng);
          const CoverTriangulation c = build_cover(t, spec);
          CHECK(c.total.surface().euler_characteristic() == degree * t.surface().euler_characteristic());
          int cycles = 0;
          for (const Permutation& h : puncture_holonomy(t, spec)) cycles += cycle_count(h);
          CHECK(c.total.num_punctures() == cycles);
          for (int i = 0; i < c.total.num_triangles(); ++i) {
            CHECK(c.triangle_base[i] == i % t.num_triangles());
            CHECK(c.triangle_sheet[i] == i / t.num_triangles());
          }
        }
      }
    }
  }

  TEST_CASE("double cover of S_{0,5} with four transposition holonomies is S_{1,6}") {
    const Triangulation t = build_surface(0, 5);
    Rng rng(5);
    bool found = false;
    for (int trial = 0; trial < 500 && !found; ++trial) {
      const CoverSpec spec = random_cover_spec(t, 2, rng);
      int moved = 0;
      for (const Permutation& h : puncture_holonomy(t, spec)) moved += h[0] != 0;
      if (moved != 4) continue;
      found = true;
      const Surface s = build_cover(t, spec).total.surface();
      CHECK(s.genus == 1);
      CHECK(s.punctures == 6);
      CHECK(s.euler_characteristic() == -6);
    }
    CHECK(found);
  }

  TEST_CASE("lift components follow curve holonomy") {
    const Triangulation t = build_surface(0, 5);
    Rng rng(3);
    const auto curves = enumerate_curves(t, 3);
    int connected_lifts = 0, split_lifts = 0;
    for (int trial = 0; trial < 8; ++trial) {
      const CoverSpec spec = random_cover_spec(t, 2, rng);
      const CoverTriangulation c = build_cover(t, spec);
      for (const CurveClass& a : curves) {
        const auto lifts = lift_curve(c, a);
        const Permutation h = path_holonomy(t, spec, decompose(t, a.coords()).front().path);
        REQUIRE(static_cast<int>(lifts.size()) == cycle_count(h));
        for (const CurveClass& x : lifts) {
          Coords expected = a.coords();
          if (lifts.size() == 1) {
            for (Weight& v : expected) v *= 2;
          }
          REQUIRE(project(c, x.coords()) == expected);
        }
        (lifts.size() == 1 ? connected_lifts : split_lifts)++;
      }
    }
    CHECK(connected_lifts > 0);
    CHECK(split_lifts > 0);
  }

  TEST_CASE("disjointness lifts and intersections multiply by the degree") {
    const Triangulation t = build_surface(1, 2);
    Rng rng(8);
    const auto curves = enumerate_curves(t, 2);
    for (int degree : {2, 3}) {
      const CoverTriangulation c = build_cover(t, random_cover_spec(t, degree, rng));
      for (std::size_t x = 0; x < curves.size(); x += 2) {
        for (std::size_t y = 0; y < curves.size(); y += 3) {
          const Weight i = intersection_number(t, curves[x].coords(), curves[y].coords());
          Weight total = 0;
          for (const CurveClass& p : lift_curve(c, curves[x])) {
            for (const CurveClass& q : lift_curve(c, curves[y])) {
              const Weight j = intersection_number(c.total, p.coords(), q.coords());
              if (i == 0) REQUIRE(j == 0);
              total += j;
            }
          }
          REQUIRE(total == degree * i);
        }
      }
    }
  }

  TEST_CASE("lifting a distance-two geodesic") {
    const Triangulation t = build_surface(0, 5);
    const auto [a, b] = test::standard_pair(t);
    const CurveComplex base(t);
    const auto cert = base.distance(a, b, {});
    REQUIRE(cert.exact());
    Rng rng(21);
    const CoverTriangulation c = build_cover(t, random_cover_spec(t, 2, rng));
    const auto lifted = lift_path(c, cert.path);
    CHECK(lifted.size() == 3);
    CHECK(CurveComplex(c.total).verify_path(lifted));
    CHECK(lifted.front() == preferred_lift(c, a));
  }
}
