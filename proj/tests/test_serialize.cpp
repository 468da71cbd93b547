#include <doctest.h>

#include "coverlift/serialize.hpp"
#include "support.hpp"

using namespace coverlift;

TEST_SUITE("serialize") {
  TEST_CASE("triangulation round trip is byte-stable") {
    for (auto [g, n] : {std::pair{0, 5}, {1, 2}, {2, 3}}) {
      const Triangulation t = build_surface(g, n);
      const Json j = to_json(t);
      CHECK(j["genus"] == g);
      CHECK(j["punctures"] == n);
      CHECK(j["triangles"][0][1] == "t0.1");
      const Triangulation back = triangulation_from_json(Json::parse(j.dump()));
      CHECK(back == t);
      CHECK(to_json(back).dump() == j.dump());
    }
  }

  TEST_CASE("inconsistent triangulation files are refused") {
    Json j = to_json(build_surface(0, 5));
    j["punctures"] = 4;
    CHECK_THROWS_AS(triangulation_from_json(j), TopologyError);
    j = to_json(build_surface(0, 5));
    j["gluings"][0][0] = "t0.7";
    CHECK_THROWS(triangulation_from_json(j));
    j = to_json(build_surface(0, 5));
    j["triangles"][0][0] = "t0.1";
    CHECK_THROWS(triangulation_from_json(j));
  }

  TEST_CASE("curve files") {
    const Triangulation t = build_surface(0, 5);
    const auto [a, b] = test::standard_pair(t);
    const Json j = curve_to_json(t, a.coords());
    CHECK(j["surface"]["genus"] == 0);
    CHECK(j["weights"].size() == 9);
    CHECK(curve_from_json(t, j) == a);
    Json sparse{{"weights", {{"e1", a.coords()[1]}}}};
    for (int e = 0; e < t.num_edges(); ++e) {
      if (a.coords()[e]) sparse["weights"]["e" + std::to_string(e)] = a.coords()[e];
    }
    CHECK(coords_from_json(t, sparse) == a.coords());
    Json wrong = j;
    wrong["surface"]["punctures"] = 6;
    CHECK_THROWS(coords_from_json(t, wrong));
    Json unknown = j;
    unknown["weights"]["e99"] = 1;
    CHECK_THROWS(coords_from_json(t, unknown));
    Json peripheral = curve_to_json(t, puncture_links(t)[0]);
    CHECK_THROWS_AS(curve_from_json(t, peripheral), TopologyError);
  }

  TEST_CASE("cover specs number sheets from one") {
    const Triangulation t = build_surface(1, 2);
    Rng rng(2);
    const CoverSpec spec = random_cover_spec(t, 3, rng);
    const Json j = to_json(t, spec);
    CHECK(j["degree"] == 3);
    for (const auto& [key, p] : j["perms"].items()) {
      for (const Json& x : p) CHECK((x.get<int>() >= 1 && x.get<int>() <= 3));
    }
    const CoverSpec back = cover_spec_from_json(t, j);
    CHECK(back.degree == spec.degree);
    CHECK(back.perms == spec.perms);
  }

  TEST_CASE("certificates and arrangement dumps") {
    const Triangulation t = build_surface(0, 5);
    const auto [a, b] = test::standard_pair(t);
    const auto cert = CurveComplex(t).distance(a, b, {});
    const Json c = to_json(cert);
    CHECK(c["lower"] == 2);
    CHECK(c["upper"] == 2);
    CHECK(c["exact"] == true);
    CHECK(c["lower_reason"] == "intersecting");
    CHECK(c["path"].size() == 3);
    const Json d = to_json(minimal_position(t, a.coords(), b.coords()));
    CHECK(d["vertices"].size() == 2);
    CHECK(d["arcs"] == 4);
    CHECK(d["euler_consistent"] == true);
    int punctures = 0;
    for (const Json& f : d["faces"]) punctures += f["punctures"].get<int>();
    CHECK(punctures >= 5);
  }
}
