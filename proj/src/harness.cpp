#include "coverlift/harness.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>

#include "coverlift/mapping_class.hpp"

namespace coverlift {

bool approx_leq(double a, double b, double k) {
  if (a < 0 || b < 0) throw std::invalid_argument("approx_leq needs non-negative quantities");
  if (!(k > 0)) throw std::invalid_argument("approx_leq needs K > 0");
  return a <= k * b + k;
}

bool approx_equiv(double a, double b, double k) { return approx_leq(a, b, k) && approx_leq(b, a, k); }

void ExperimentConfig::check() const {
  auto fail = [](const std::string& why) { throw std::invalid_argument("config: " + why); };
  if (surfaces.empty()) fail("no surfaces");
  for (const Surface& s : surfaces) {
    if (s.punctures < 1 || s.genus < 0 || !s.hyperbolic()) fail("surfaces must be punctured and hyperbolic");
    if (s.complexity() < 2) fail("surface complexity must be at least 2");
  }
  if (degrees.empty()) fail("no degrees");
  for (int d : degrees) {
    if (d < 1 || d > max_degree) fail("degree " + std::to_string(d) + " outside [1, " + std::to_string(max_degree) + "]");
  }
  if (samples < 0) fail("samples must be non-negative");
  if (min_steps < 0 || min_steps > max_steps) fail("bad mutation step range");
  if (min_power < 0 || min_power > max_power) fail("bad twist power range");
  if (pool_weight < 1) fail("pool_weight must be positive");
  for (const DistanceBudget* b : {&base_budget, &cover_budget}) {
    if (b->weight_bound < 0 || b->radius < 0 || b->descent_steps < 0) fail("budgets must be non-negative");
  }
}

bool DistortionRecord::violates() const { return both_exact() && *dsig_upper > *ds_upper; }

std::vector<DistortionGroup> summarize(const std::vector<DistortionRecord>& records) {
  std::map<std::pair<int, int>, DistortionGroup> groups;
  for (const DistortionRecord& r : records) {
    DistortionGroup& g = groups[{r.xi_total, r.degree}];
    g.xi_total = r.xi_total;
    g.degree = r.degree;
    ++g.records;
    if (r.ds_exact()) {
      ++g.lemma_checked;
      if (r.lifted_path_ok && r.all_components_ok) ++g.lemma_passed;
    }
    if (r.violates()) ++g.violations;
    if (!r.both_exact()) continue;
    ++g.exact_records;
    const int ds = *r.ds_upper, dsig = *r.dsig_upper;
    g.max_ratio = std::max(g.max_ratio, static_cast<double>(ds) / std::max(dsig, 1));
    // Least K with ds <= K (dsig + 1); the reverse inequality then holds too
    // because dsig <= ds.
    const int num = std::max(ds, dsig), den = std::min(ds, dsig) + 1;
    if (num * g.k_den > g.k_num * den) {
      const int common = std::gcd(num, den);
      g.k_num = num / common;
      g.k_den = den / common;
    }
  }
  std::vector<DistortionGroup> out;
  for (auto& [key, g] : groups) out.push_back(g);
  return out;
}

namespace {

struct Sample {
  std::string id;
  CurveClass a;
  CurveClass b;
  CoverSpec spec;
};

int signed_power(Rng& rng, int lo, int hi) {
  const int p = static_cast<int>(uniform_between(rng, lo, hi));
  return (rng() >> 63) ? p : -p;
}

Sample draw(const Triangulation& t, const std::vector<CurveClass>& pool, const ExperimentConfig& c,
            std::size_t cell, int degree, int index) {
  Rng rng(derive_seed(c.seed, cell, static_cast<std::uint64_t>(degree), static_cast<std::uint64_t>(index)));
  const CurveClass a = pool[uniform_below(rng, pool.size())];
  std::optional<CurveClass> b;
  while (!b || *b == a) {
    const CurveClass start = pool[uniform_below(rng, pool.size())];
    const int steps = static_cast<int>(uniform_between(rng, c.min_steps, c.max_steps));
    b = mutate(t, start, rng(), steps);
    const int power = signed_power(rng, c.min_power, c.max_power);
    const CurveClass& around = pool[uniform_below(rng, pool.size())];
    if (power != 0) b = dehn_twist(t, *b, around, power);
  }
  const Surface s = t.surface();
  return Sample{"g" + std::to_string(s.genus) + "n" + std::to_string(s.punctures) + "/d" + std::to_string(degree) +
                    "/" + std::to_string(index),
                a, *b, random_cover_spec(t, degree, rng)};
}

DistortionRecord evaluate(const CurveComplex& base, const Sample& s, const ExperimentConfig& c, bool upstairs) {
  const Triangulation& t = base.triangulation();
  const CoverTriangulation cover = build_cover(t, s.spec);
  const CurveComplex up(cover.total);
  const auto lifts_a = lift_curve(cover, s.a);
  const auto lifts_b = lift_curve(cover, s.b);
  const CurveClass alpha = preferred_lift(cover, s.a);
  const CurveClass beta = preferred_lift(cover, s.b);

  DistortionRecord r;
  r.id = s.id;
  r.genus = t.surface().genus;
  r.punctures = t.surface().punctures;
  r.degree = s.spec.degree;
  r.xi_total = cover.total.surface().complexity();
  r.a = s.a.canonical();
  r.b = s.b.canonical();
  r.alpha = alpha.canonical();
  r.beta = beta.canonical();
  r.components_a = static_cast<int>(lifts_a.size());
  r.components_b = static_cast<int>(lifts_b.size());

  const DistanceCertificate ds = base.distance(s.a, s.b, c.base_budget);
  r.ds_lower = ds.lower;
  r.ds_upper = ds.upper;

  std::vector<CurveClass> lifted;
  if (!ds.path.empty()) lifted = lift_path(cover, ds.path);
  if (ds.exact()) {
    r.lifted_path_ok = up.verify_path(lifted) && lifted.front() == alpha && lifted.back() == beta;
    r.all_components_ok = r.lifted_path_ok;
    for (const CurveClass& x : lifts_a) {
      for (const CurveClass& y : lifts_b) {
        std::vector<CurveClass> p = lifted;
        p.front() = x;
        p.back() = y;
        r.all_components_ok = r.all_components_ok && up.verify_path(p);
      }
    }
  }
  if (upstairs) {
    const DistanceCertificate dsig = up.distance(alpha, beta, c.cover_budget, lifted.empty() ? nullptr : &lifted);
    r.dsig_lower = dsig.lower;
    r.dsig_upper = dsig.upper;
  } else if (r.lifted_path_ok) {
    r.dsig_upper = static_cast<int>(lifted.size()) - 1;
  }
  return r;
}

DistortionReport run(const ExperimentConfig& config, bool upstairs) {
  config.check();
  DistortionReport report;
  report.mode = upstairs ? "qie" : "lemma-simp";
  report.config = config;
  for (std::size_t cell = 0; cell < config.surfaces.size(); ++cell) {
    const Triangulation t = build_surface(config.surfaces[cell].genus, config.surfaces[cell].punctures);
    const CurveComplex base(t);
    const std::vector<CurveClass> pool = enumerate_curves(t, config.pool_weight);
    if (pool.empty()) throw std::invalid_argument("config: pool_weight admits no curves");
    for (int degree : config.degrees) {
      for (int i = 0; i < config.samples; ++i) {
        DistortionRecord r = evaluate(base, draw(t, pool, config, cell, degree, i), config, upstairs);
        if (!r.ds_exact()) ++report.skipped;
        if (r.ds_exact() && !(r.lifted_path_ok && r.all_components_ok)) ++report.lemma_failures;
        if (r.violates()) ++report.violations;
        report.records.push_back(std::move(r));
      }
    }
  }
  report.groups = summarize(report.records);
  return report;
}

}  // namespace

DistortionReport run_lemma_simp(const ExperimentConfig& config) { return run(config, false); }
DistortionReport run_qie(const ExperimentConfig& config) { return run(config, true); }

}  // namespace coverlift
