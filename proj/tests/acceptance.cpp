// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any
// failure.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <set>
#include <string>

#include "coverlift/cusp_geometry.hpp"
#include "coverlift/harness.hpp"
#include "coverlift/mapping_class.hpp"
#include "oracles.hpp"

using namespace coverlift;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
};

void expect(Outcome& o, bool cond, const std::string& what) {
  if (!cond && o.pass) o.detail = "first failure: " + what + "; ";
  o.pass = o.pass && cond;
}

std::vector<Coords> universe_with_links(const Triangulation& t, Weight w) {
  std::vector<Coords> out;
  for (const CurveClass& c : enumerate_curves(t, w)) out.push_back(c.coords());
  for (const Coords& l : puncture_links(t)) {
    if (*std::max_element(l.begin(), l.end()) <= w) out.push_back(l);
  }
  return out;
}

Outcome lemma_suite() {
  Outcome o;
  ExperimentConfig c;
  c.surfaces = {{0, 5}, {1, 2}};
  c.degrees = {2, 3};
  c.samples = 80;
  c.seed = 2024;
  const DistortionReport r = run_lemma_simp(c);
  int checked = 0, passed = 0;
  for (const DistortionRecord& rec : r.records) {
    if (!rec.ds_exact()) continue;
    ++checked;
    passed += rec.lifted_path_ok && rec.all_components_ok;
  }
  expect(o, checked >= 200, "fewer than 200 exact instances");
  expect(o, passed == checked, "a lifted path failed verification");
  o.detail += std::to_string(passed) + "/" + std::to_string(checked) + " lifted witness paths verified (" +
              std::to_string(r.skipped) + " pairs without an exact base distance)";
  return o;
}

Outcome intersection_oracle() {
  Outcome o;
  long pairs = 0, brute = 0;
  for (auto [g, n, w] : {std::array<int, 3>{0, 5, 6}, {1, 2, 5}}) {
    const Triangulation t = build_surface(g, n);
    const auto curves = universe_with_links(t, w);
    for (const Coords& a : curves) {
      for (const Coords& b : curves) {
        ++pairs;
        const Weight i = intersection_number(t, a, b);
        if (i != oracle::linked_lifts(t, a, b)) {
          expect(o, false, "linked-lift disagreement");
          return o;
        }
        if (oracle::interleaving_count(a, b) <= 64) {
          ++brute;
          expect(o, i == oracle::min_over_interleavings(t, a, b), "interleaving disagreement");
        }
      }
    }
  }
  o.detail += std::to_string(pairs) + " pairs agree with the linked-lift count, " + std::to_string(brute) +
              " also with exhaustive interleavings";
  return o;
}

Outcome twist_identity() {
  Outcome o;
  Rng rng(17);
  int pairs = 0;
  for (auto [g, n] : {std::pair{0, 5}, {1, 2}}) {
    const Triangulation t = build_surface(g, n);
    const auto curves = enumerate_curves(t, 3);
    int here = 0;
    while (here < 15) {
      const CurveClass& a = curves[uniform_below(rng, curves.size())];
      const CurveClass& b = curves[uniform_below(rng, curves.size())];
      const Weight i = intersection_number(t, a.coords(), b.coords());
      if (i == 0) continue;
      ++here;
      for (int k = 1; k <= 4; ++k) {
        const CurveClass c = dehn_twist(t, a, b, k);
        expect(o, intersection_number(t, c.coords(), a.coords()) == k * i * i, "twist identity");
      }
    }
    pairs += here;
  }
  o.detail += std::to_string(pairs) + " pairs, n = 1..4";
  return o;
}

Outcome distance_soundness() {
  Outcome o;
  const Triangulation t = build_surface(0, 5);
  const CurveComplex cc(t);
  const auto curves = enumerate_curves(t, 4);
  const DistanceBudget budget{3, 1, 8};
  const std::size_t n = curves.size();
  std::vector<std::vector<DistanceCertificate>> d(n, std::vector<DistanceCertificate>(n));
  int exact = 0, coarse = 0;
  std::vector<std::pair<std::size_t, std::size_t>> filling;
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      const CurveClass& a = curves[x];
      const CurveClass& b = curves[y];
      const DistanceCertificate& c = d[x][y] = cc.distance(a, b, budget);
      const Weight i = intersection_number(t, a.coords(), b.coords());
      const bool non_filling = !fills(t, a.coords(), b.coords());
      expect(o, (c.exact() && c.lower == 0) == (a == b), "d = 0 iff equal");
      expect(o, (c.exact() && c.lower == 1) == (a != b && i == 0), "d = 1 iff disjoint");
      expect(o, (c.exact() && c.lower == 2) == (i > 0 && non_filling), "d = 2 iff non-filling");
      if (c.exact() && c.lower == 2) {
        const auto w = disjoint_witness(t, a.coords(), b.coords());
        expect(o, w && cc.verify_path({a, *w, b}), "distance-2 witness");
      }
      if (c.upper) {
        expect(o, c.lower <= *c.upper, "lower <= upper");
        expect(o, cc.verify_path(c.path) && c.path.front() == a && c.path.back() == b &&
                      static_cast<int>(c.path.size()) == *c.upper + 1,
               "witness path");
      }
      if (c.exact()) {
        ++exact;
        if (i >= 1) {
          ++coarse;
          expect(o, *c.upper <= 2 * std::log2(static_cast<double>(i)) + 2, "coarse bound");
        }
      }
      if (c.lower == 3 && x < y) filling.emplace_back(x, y);
    }
  }
  // Lower bound 3 checked against a larger universe: no common neighbor.
  const auto wide = enumerate_curves(t, 6);
  int probed = 0;
  for (std::size_t k = 0; k < filling.size() && probed < 150; k += 1 + filling.size() / 150, ++probed) {
    const auto& a = curves[filling[k].first];
    const auto& b = curves[filling[k].second];
    for (const CurveClass& w : wide) {
      expect(o, !(cc.adjacent(a, w) && cc.adjacent(w, b)), "filling pair with a common neighbor");
    }
  }
  // Triangle inequality on exact triples.
  Rng rng(31);
  int triples = 0, attempts = 0;
  while (triples < 100 && attempts < 100000) {
    ++attempts;
    const std::size_t x = uniform_below(rng, n), y = uniform_below(rng, n), z = uniform_below(rng, n);
    if (!d[x][y].exact() || !d[y][z].exact() || !d[x][z].exact()) continue;
    ++triples;
    expect(o, *d[x][z].upper <= *d[x][y].upper + *d[y][z].upper, "triangle inequality");
    expect(o, *d[x][y].upper == *d[y][x].upper, "symmetry");
  }
  expect(o, triples == 100, "not enough exact triples");
  o.detail += std::to_string(n * n) + " pairs, " + std::to_string(exact) + " exact, " + std::to_string(coarse) +
              " coarse-bound checks, " + std::to_string(probed) + " filling pairs probed at weight 6, " +
              std::to_string(triples) + " triples";
  return o;
}

Outcome cover_arithmetic() {
  Outcome o;
  Rng rng(5);
  int specs = 0, pairs = 0;
  const std::array<Surface, 3> bases{Surface{0, 5}, Surface{1, 2}, Surface{2, 1}};
  for (int k = 0; k < 100; ++k) {
    const Surface s = bases[k % 3];
    const Triangulation t = build_surface(s.genus, s.punctures);
    const int degree = 2 + k % 3;
    const CoverSpec spec = random_cover_spec(t, degree, rng);
    const CoverTriangulation c = build_cover(t, spec);
    ++specs;
    expect(o, c.total.surface().euler_characteristic() == degree * t.surface().euler_characteristic(), "chi");
    int cycles = 0;
    for (const Permutation& h : puncture_holonomy(t, spec)) cycles += cycle_count(h);
    expect(o, cycles == c.total.num_punctures(), "puncture cycles");
    if (s.genus < 2) {
      const auto curves = enumerate_curves(t, 2);
      const CurveClass& a = curves[uniform_below(rng, curves.size())];
      const CurveClass& b = curves[uniform_below(rng, curves.size())];
      Weight sum = 0;
      for (const CurveClass& x : lift_curve(c, a)) {
        for (const CurveClass& y : lift_curve(c, b)) sum += intersection_number(c.total, x.coords(), y.coords());
      }
      expect(o, sum == degree * intersection_number(t, a.coords(), b.coords()), "intersection multiplicativity");
      ++pairs;
    }
  }
  expect(o, pairs >= 50, "too few lifted pairs");
  o.detail += std::to_string(specs) + " specs, " + std::to_string(pairs) + " lifted pairs";
  return o;
}

Outcome cusp_geometry() {
  Outcome o;
  auto rel = [](double x, double y) { return std::fabs(x - y) / std::fabs(y); };
  double worst_series = 0;
  for (double d = 0.05; d <= 2.0; d += 0.05) {
    for (double dp = 0.01; dp <= d; dp += 0.07) {
      const double expect_r = static_cast<double>(oracle::sinh_series(d) / oracle::sinh_series(dp));
      worst_series = std::max(worst_series, rel(lipschitz_constant(d, dp), expect_r));
    }
  }
  expect(o, worst_series <= 1e-12, "series oracle");
  Rng rng(99);
  const double r = lipschitz_constant(0.4, 0.1);
  double worst_closed = 0, worst_quad = 0;
  for (int i = 0; i < 50; ++i) {
    const PiecewisePath path = random_slab_path(rng, r, 6);
    const auto low = project_to_height(path, 1.0), high = project_to_height(path, r);
    worst_closed = std::max(worst_closed, rel(horospherical_length(low), r * horospherical_length(high)));
    double q1 = 0, qr = 0;
    for (std::size_t k = 0; k + 1 < path.size(); ++k) {
      q1 += oracle::segment_length_quadrature({low[k].x, low[k].y, low[k].h}, {low[k + 1].x, low[k + 1].y, low[k + 1].h});
      qr += oracle::segment_length_quadrature({high[k].x, high[k].y, high[k].h},
                                              {high[k + 1].x, high[k + 1].y, high[k + 1].h});
    }
    worst_quad = std::max(worst_quad, rel(q1, r * qr));
  }
  expect(o, worst_closed <= 1e-9, "closed-form projection ratio");
  expect(o, worst_quad <= 1e-6, "quadrature projection ratio");
  int configs = 0;
  double worst_ratio = 0;
  for (auto [d, dp] : {std::pair{0.2, 0.1}, {0.5, 0.05}, {1.0, 0.3}, {0.3, 0.29}, {1.5, 0.01}}) {
    const double rr = lipschitz_constant(d, dp);
    for (int i = 0; i < 400; ++i, ++configs) {
      const RetractionSample s = retract(random_slab_path(rng, rr, 2 + i % 7));
      worst_ratio = std::max(worst_ratio, s.ratio() / rr);
      expect(o, s.retracted <= rr * s.geodesic * (1 + 1e-12), "retraction inequality");
    }
  }
  char buf[256];
  std::snprintf(buf, sizeof buf,
                "series rel err %.1e, projection rel err %.1e (closed) %.1e (quadrature), %d retractions, max "
                "ratio/R %.4f",
                worst_series, worst_closed, worst_quad, configs, worst_ratio);
  o.detail += buf;
  return o;
}

Outcome distortion_report() {
  Outcome o;
  ExperimentConfig c;
  c.surfaces = {{0, 5}, {1, 2}};
  c.degrees = {2, 3};
  c.samples = 40;
  c.seed = 11;
  const DistortionReport r1 = run_qie(c);
  const DistortionReport r2 = run_qie(c);
  expect(o, to_json(r1).dump() == to_json(r2).dump(), "report not reproducible");
  expect(o, records_to_csv(r1.records) == records_to_csv(r2.records), "CSV not reproducible");
  expect(o, r1.violations == 0, "exact record with d_Sigma > d_S");
  expect(o, r1.lemma_failures == 0, "lemma failure");
  std::string cells;
  for (const DistortionGroup& g : r1.groups) {
    expect(o, g.exact_records > 0 && std::isfinite(g.k_hat()), "cell without a finite K-hat");
    char buf[96];
    std::snprintf(buf, sizeof buf, " (xi %d, deg %d): K=%d/%d over %d", g.xi_total, g.degree, g.k_num, g.k_den,
                  g.exact_records);
    cells += buf;
  }
  o.detail += std::to_string(r1.groups.size()) + " cells" + cells;
  return o;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"1 lemma suite", lemma_suite},
      {"2 intersection oracle", intersection_oracle},
      {"3 twist identity", twist_identity},
      {"4 distance soundness", distance_soundness},
      {"5 cover arithmetic", cover_arithmetic},
      {"6 cusp geometry", cusp_geometry},
      {"7 distortion report", distortion_report},
  };
  bool all = true;
  for (const auto& [name, run] : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = run();
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail = std::string("exception: ") + e.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::printf("%s criterion %s: %s [%.1fs]\n", o.pass ? "PASS" : "FAIL", name.c_str(), o.detail.c_str(), secs);
    std::fflush(stdout);
    all = all && o.pass;
  }
  return all ? 0 : 1;
}
