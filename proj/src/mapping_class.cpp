#include "coverlift/mapping_class.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>

#include "coverlift/arrangement.hpp"
#include "coverlift/random.hpp"

namespace coverlift {

namespace {

constexpr std::size_t kMaxPathLength = 50'000'000;

}  // namespace

CurveClass dehn_twist(const Triangulation& t, const CurveClass& a, const CurveClass& b, int n) {
  if (n == 0) return a;
  const Arrangement arr = minimal_position(t, a.coords(), b.coords());
  const auto a_walk = arr.passages(0);
  const auto b_walk = arr.passages(1);
  if (a_walk.size() != 1 || b_walk.size() != 1) throw TopologyError("dehn_twist expects connected curves");
  const auto& pa = a_walk.front();
  const auto& pb = b_walk.front();
  const long nb = static_cast<long>(pb.size());

  std::map<int, long> b_index;
  for (long j = 0; j < nb; ++j) b_index[pb[j].chord] = j;
  auto b_exit = [&](long j) { return pb[((j % nb) + nb) % nb].exit; };

  const std::size_t estimate = pa.size() + static_cast<std::size_t>(arr.num_vertices()) *
                                               static_cast<std::size_t>(std::abs(n)) * pb.size();
  if (estimate > kMaxPathLength) throw TopologyError("dehn_twist: result exceeds the supported weight");

  DualPath path;
  path.reserve(estimate);
  for (const auto& step : pa) {
    std::vector<int> along = arr.crossings_along(step.chord);
    if (!step.forward) std::reverse(along.begin(), along.end());
    for (int x : along) {
      const auto rot = arr.rotation_at(x);
      int out = 0;
      while (!(rot[out].first == step.chord && rot[out].second == (step.forward ? 1 : 0))) ++out;
      const auto [b_chord, b_end] = rot[(out + (n > 0 ? 3 : 1)) % 4];
      const long j = b_index.at(b_chord);
      const bool with_b = (b_end == 1) == pb[j].forward;
      for (int rep = 0; rep < std::abs(n); ++rep) {
        for (long k = 0; k < nb; ++k) path.push_back(with_b ? b_exit(j + k) : t.partner(b_exit(j - 1 - k)));
      }
    }
    path.push_back(step.exit);
  }
  return CurveClass::certify(t, coords_of_path(t, reduce_path(t, std::move(path))));
}

CurveClass mutate(const Triangulation& t, const CurveClass& c, std::uint64_t seed, int steps) {
  if (steps <= 0) return c;
  const std::vector<CurveClass> pool = enumerate_curves(t, 2);
  if (pool.empty()) return c;
  Rng rng(seed);
  CurveClass out = c;
  for (int s = 0; s < steps; ++s) {
    const auto& b = pool[uniform_below(rng, pool.size())];
    const int power = (rng() >> 63) ? 1 : -1;
    out = dehn_twist(t, out, b, power);
  }
  return out;
}

}  // namespace coverlift
