#pragma once

#include <optional>
#include <utility>

#include "coverlift/curve.hpp"

namespace coverlift::test {

/// Boundary of a neighborhood of edge `e` and its two (distinct) end
/// punctures: the curve enclosing exactly those two punctures.
inline Coords pair_curve(const Triangulation& t, int e) {
  const auto links = puncture_links(t);
  const auto [p, q] = t.edge_ends(e);
  Coords w(t.num_edges());
  for (int f = 0; f < t.num_edges(); ++f) w[f] = links[p][f] + links[q][f];
  w[e] -= 2;
  return w;
}

/// Two edges of a genus-0 triangulation joining punctures {p, q} and
/// {q, r} with p, q, r distinct.
inline std::optional<std::pair<int, int>> chained_edges(const Triangulation& t) {
  for (int e = 0; e < t.num_edges(); ++e) {
    const auto [p, q] = t.edge_ends(e);
    if (p == q) continue;
    for (int f = 0; f < t.num_edges(); ++f) {
      const auto [r, s] = t.edge_ends(f);
      if (r == s) continue;
      const bool shares_one = (r == q && s != p) || (s == q && r != p);
      if (shares_one) return std::pair{e, f};
    }
  }
  return std::nullopt;
}

/// The standard pair on S_{0,5}: curves around {p, q} and {q, r}.
inline std::pair<CurveClass, CurveClass> standard_pair(const Triangulation& t) {
  const auto edges = chained_edges(t).value();
  return {CurveClass::certify(t, pair_curve(t, edges.first)), CurveClass::certify(t, pair_curve(t, edges.second))};
}

}  // namespace coverlift::test
