#include "coverlift/curve_complex.hpp"

#include <algorithm>
#include <set>

#include "coverlift/arrangement.hpp"
#include "coverlift/mapping_class.hpp"

namespace coverlift {

std::string to_string(DistanceCertificate::Reason r) {
  switch (r) {
    case DistanceCertificate::Reason::Equal: return "equal";
    case DistanceCertificate::Reason::Distinct: return "distinct";
    case DistanceCertificate::Reason::Intersecting: return "intersecting";
    case DistanceCertificate::Reason::Filling: return "filling";
  }
  return "unknown";
}

CurveComplex::CurveComplex(const Triangulation& t) : tri_(t) {
  if (t.surface().complexity() < 2) throw TopologyError("curve complex needs complexity at least 2");
}

void CurveComplex::check_vertex(const CurveClass& c) const {
  if (static_cast<int>(c.coords().size()) != tri_.num_edges()) {
    throw TopologyError("curve does not belong to this surface");
  }
}

const std::vector<CurveClass>& CurveComplex::universe(Weight weight_bound) const {
  auto it = universes_.find(weight_bound);
  if (it == universes_.end()) it = universes_.emplace(weight_bound, enumerate_curves(tri_, weight_bound)).first;
  return it->second;
}

bool CurveComplex::adjacent(const CurveClass& a, const CurveClass& b) const {
  check_vertex(a);
  check_vertex(b);
  return a != b && intersection_number(tri_, a.coords(), b.coords()) == 0;
}

std::vector<CurveClass> CurveComplex::neighbors(const CurveClass& a, Weight weight_bound) const {
  std::vector<CurveClass> out;
  if (weight_bound <= 0) return out;
  for (const CurveClass& c : universe(weight_bound)) {
    if (adjacent(a, c)) out.push_back(c);
  }
  return out;
}

bool CurveComplex::verify_path(const std::vector<CurveClass>& path) const {
  if (path.empty()) return false;
  for (const CurveClass& c : path) check_vertex(c);
  for (std::size_t i = 0; i + 1 < path.size(); ++i) {
    if (!adjacent(path[i], path[i + 1])) return false;
  }
  return true;
}

// Twisting one neighbor of a about another keeps it disjoint from a. Starting
// from the bounded neighbors, greedily apply such twists while they lower the
// intersection with b; a result that does not fill with b closes a path
// a - c - w - b.
std::optional<std::vector<CurveClass>> CurveComplex::descend(const CurveClass& a, const CurveClass& b,
                                                             const DistanceBudget& budget) const {
  const std::vector<CurveClass> around = neighbors(a, budget.weight_bound);
  std::vector<std::pair<Weight, CurveClass>> starts;
  for (const CurveClass& c : around) starts.emplace_back(intersection_number(tri_, c.coords(), b.coords()), c);
  std::sort(starts.begin(), starts.end());
  for (auto [score, c] : starts) {
    for (int step = 0; step <= budget.descent_steps; ++step) {
      if (auto w = disjoint_witness(tri_, c.coords(), b.coords())) return std::vector<CurveClass>{a, c, *w, b};
      if (step == budget.descent_steps) break;
      std::optional<std::pair<Weight, CurveClass>> best;
      for (const CurveClass& m : around) {
        for (int power : {1, -1}) {
          CurveClass moved = dehn_twist(tri_, c, m, power);
          const Weight s = intersection_number(tri_, moved.coords(), b.coords());
          if (s < score && (!best || s < best->first)) best.emplace(s, std::move(moved));
        }
      }
      if (!best) break;
      score = best->first;
      c = std::move(best->second);
    }
  }
  return std::nullopt;
}

DistanceCertificate CurveComplex::distance(const CurveClass& a, const CurveClass& b, const DistanceBudget& budget,
                                           const std::vector<CurveClass>* hint) const {
  using Reason = DistanceCertificate::Reason;
  check_vertex(a);
  check_vertex(b);
  DistanceCertificate cert;
  auto settle = [&](int lower, Reason why, std::vector<CurveClass> path) {
    cert.lower = lower;
    cert.lower_reason = why;
    cert.upper = static_cast<int>(path.size()) - 1;
    cert.path = std::move(path);
    return cert;
  };
  if (a == b) return settle(0, Reason::Equal, {a});
  if (intersection_number(tri_, a.coords(), b.coords()) == 0) return settle(1, Reason::Distinct, {a, b});
  if (auto w = disjoint_witness(tri_, a.coords(), b.coords())) return settle(2, Reason::Intersecting, {a, *w, b});

  cert.lower = 3;
  cert.lower_reason = Reason::Filling;

  // Breadth-first levels from a through the weight-bounded universe. A level-k
  // vertex c closes a path of length k + 1 when disjoint from b, or k + 2 via
  // a witness when c and b do not fill.
  std::map<CurveClass, CurveClass> parent;
  std::set<CurveClass> seen{a};
  std::vector<CurveClass> level{a};
  auto trace = [&](CurveClass c) {
    std::vector<CurveClass> back{c};
    while (back.back() != a) back.push_back(parent.at(back.back()));
    std::reverse(back.begin(), back.end());
    return back;
  };
  for (int k = 1; k <= budget.radius && !cert.upper; ++k) {
    std::vector<CurveClass> next;
    for (const CurveClass& u : level) {
      for (const CurveClass& c : neighbors(u, budget.weight_bound)) {
        if (!seen.insert(c).second) continue;
        parent.emplace(c, u);
        next.push_back(c);
      }
    }
    std::sort(next.begin(), next.end());
    std::optional<std::vector<CurveClass>> via_witness;
    for (const CurveClass& c : next) {
      if (intersection_number(tri_, c.coords(), b.coords()) == 0) {
        auto path = trace(c);
        path.push_back(b);
        cert.upper = k + 1;
        cert.path = std::move(path);
        break;
      }
      if (!via_witness) {
        if (auto w = disjoint_witness(tri_, c.coords(), b.coords())) {
          via_witness = trace(c);
          via_witness->push_back(*w);
          via_witness->push_back(b);
        }
      }
    }
    if (!cert.upper && via_witness) {
      cert.upper = k + 2;
      cert.path = std::move(*via_witness);
    }
    level = std::move(next);
  }

  for (const bool swapped : {false, true}) {
    if (cert.upper && *cert.upper <= 3) break;
    auto path = swapped ? descend(b, a, budget) : descend(a, b, budget);
    if (!path) continue;
    if (swapped) std::reverse(path->begin(), path->end());
    cert.upper = 3;
    cert.path = std::move(*path);
  }

  if (hint && !hint->empty() && hint->front() == a && hint->back() == b && verify_path(*hint)) {
    const int len = static_cast<int>(hint->size()) - 1;
    if (!cert.upper || len < *cert.upper) {
      cert.upper = len;
      cert.path = *hint;
    }
  }
  return cert;
}

}  // namespace coverlift
