#include "coverlift/curve.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace coverlift {

namespace {

// Tracing is linear in the total weight; beyond this it is not practical.
constexpr Weight kMaxTracedPoints = 50'000'000;

Weight side_weight(const Triangulation& t, const Coords& w, int tri, int k) {
  return w[t.edge_of(Side{tri, k})];
}

// Position along the edge for position `q` counted from the start of side `s`.
Weight edge_position(const Triangulation& t, const Coords& w, Side s, Weight q) {
  return t.is_leading(s) ? q : w[t.edge_of(s)] - 1 - q;
}

struct ArcEnd {
  Side side;
  Weight pos;
};

// Other end of the normal arc entering triangle `s.tri` through side `s` at
// side position `q`.
ArcEnd follow_arc(const Triangulation& t, const Coords& w, Side s, Weight q) {
  const auto c = corner_counts(t, w, s.tri);
  const int k = s.index;
  if (q < c[k]) {
    const int prev = (k + 2) % 3;
    return {Side{s.tri, prev}, side_weight(t, w, s.tri, prev) - 1 - q};
  }
  const int next = (k + 1) % 3;
  return {Side{s.tri, next}, side_weight(t, w, s.tri, k) - 1 - q};
}

class PointUnion {
 public:
  explicit PointUnion(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }
  std::size_t find(std::size_t x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }
  void unite(std::size_t a, std::size_t b) { parent_[find(a)] = find(b); }

 private:
  std::vector<std::size_t> parent_;
};

std::vector<std::size_t> point_offsets(const Coords& w) {
  std::vector<std::size_t> offset(w.size() + 1, 0);
  for (std::size_t e = 0; e < w.size(); ++e) offset[e + 1] = offset[e] + static_cast<std::size_t>(w[e]);
  return offset;
}

void require_valid(const Triangulation& t, const Coords& w) {
  auto problems = validate(t, w);
  if (!problems.empty()) throw TopologyError("invalid normal coordinates: " + problems.front().message);
  if (std::accumulate(w.begin(), w.end(), Weight{0}) > kMaxTracedPoints) {
    throw TopologyError("weights too large to trace");
  }
}

// Union-find over all normal points, one class per component.
PointUnion link_points(const Triangulation& t, const Coords& w, const std::vector<std::size_t>& offset) {
  PointUnion uf(offset.back());
  for (int tri = 0; tri < t.num_triangles(); ++tri) {
    const auto c = corner_counts(t, w, tri);
    for (int k = 0; k < 3; ++k) {
      const int prev = (k + 2) % 3;
      const Side here{tri, k}, there{tri, prev};
      const Weight w_prev = side_weight(t, w, tri, prev);
      for (Weight r = 0; r < c[k]; ++r) {
        auto a = offset[t.edge_of(here)] + edge_position(t, w, here, r);
        auto b = offset[t.edge_of(there)] + edge_position(t, w, there, w_prev - 1 - r);
        uf.unite(a, b);
      }
    }
  }
  return uf;
}

}  // namespace

std::vector<Violation> validate(const Triangulation& t, const Coords& w) {
  std::vector<Violation> out;
  if (static_cast<int>(w.size()) != t.num_edges()) {
    out.push_back({Violation::Kind::Size, -1, "expected one weight per edge"});
    return out;
  }
  for (std::size_t e = 0; e < w.size(); ++e) {
    if (w[e] < 0) out.push_back({Violation::Kind::Negative, -1, "negative weight on edge " + std::to_string(e)});
  }
  if (!out.empty()) return out;
  for (int tri = 0; tri < t.num_triangles(); ++tri) {
    const Weight a = side_weight(t, w, tri, 0), b = side_weight(t, w, tri, 1), c = side_weight(t, w, tri, 2);
    if ((a + b + c) % 2 != 0) {
      out.push_back({Violation::Kind::Parity, tri, "odd weight sum in triangle " + std::to_string(tri)});
    }
    if (a > b + c || b > a + c || c > a + b) {
      out.push_back({Violation::Kind::TriangleInequality, tri,
                     "triangle inequality fails in triangle " + std::to_string(tri)});
    }
  }
  return out;
}

std::array<Weight, 3> corner_counts(const Triangulation& t, const Coords& w, int tri) {
  std::array<Weight, 3> s{side_weight(t, w, tri, 0), side_weight(t, w, tri, 1), side_weight(t, w, tri, 2)};
  // Corner k sits between side k-1 and side k.
  return {(s[2] + s[0] - s[1]) / 2, (s[0] + s[1] - s[2]) / 2, (s[1] + s[2] - s[0]) / 2};
}

std::vector<Component> decompose(const Triangulation& t, const Coords& w) {
  require_valid(t, w);
  const auto offset = point_offsets(w);
  PointUnion uf = link_points(t, w, offset);

  std::vector<Component> out;
  std::vector<bool> seen_root(offset.back(), false);
  for (int e = 0; e < t.num_edges(); ++e) {
    for (Weight p = 0; p < w[e]; ++p) {
      const std::size_t root = uf.find(offset[e] + p);
      if (seen_root[root]) continue;
      seen_root[root] = true;

      Component comp;
      const Side start = t.sides_of(e)[0];
      Side s = start;
      Weight q = p;
      do {
        ArcEnd end = follow_arc(t, w, s, q);
        comp.path.push_back(end.side);
        Side across = t.partner(end.side);
        q = w[t.edge_of(end.side)] - 1 - end.pos;
        s = across;
      } while (!(s == start && q == p));
      comp.coords = coords_of_path(t, comp.path);
      out.push_back(std::move(comp));
    }
  }
  std::sort(out.begin(), out.end(), [](const Component& a, const Component& b) { return a.coords < b.coords; });
  return out;
}

std::vector<Coords> components(const Triangulation& t, const Coords& w) {
  std::vector<Coords> out;
  for (auto& c : decompose(t, w)) out.push_back(std::move(c.coords));
  return out;
}

Coords coords_of_path(const Triangulation& t, const DualPath& path) {
  Coords w(t.num_edges(), 0);
  for (const Side& s : path) ++w[t.edge_of(s)];
  return w;
}

DualPath reduce_path(const Triangulation& t, DualPath path) {
  DualPath stack;
  stack.reserve(path.size());
  for (const Side& s : path) {
    if (!stack.empty() && t.partner(stack.back()) == s) {
      stack.pop_back();
    } else {
      stack.push_back(s);
    }
  }
  std::size_t lo = 0, hi = stack.size();
  while (hi - lo >= 2 && t.partner(stack[hi - 1]) == stack[lo]) {
    ++lo;
    --hi;
  }
  return DualPath(stack.begin() + static_cast<std::ptrdiff_t>(lo), stack.begin() + static_cast<std::ptrdiff_t>(hi));
}

bool is_zero(const Coords& w) {
  return std::all_of(w.begin(), w.end(), [](Weight x) { return x == 0; });
}

CurveKind classify(const Triangulation& t, const Coords& w) {
  if (decompose(t, w).size() != 1) throw TopologyError("classify expects a connected curve");
  for (const auto& link : puncture_links(t)) {
    if (link == w) return CurveKind::Peripheral;
  }
  return CurveKind::Essential;
}

CurveClass CurveClass::certify(const Triangulation& t, Coords w) {
  if (static_cast<int>(w.size()) != t.num_edges() || is_zero(w)) {
    throw TopologyError("curve class needs a nonzero weight vector");
  }
  if (classify(t, w) != CurveKind::Essential) throw TopologyError("curve is peripheral");
  return CurveClass(std::move(w));
}

std::string CurveClass::canonical() const {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < coords_.size(); ++i) os << (i ? "," : "") << coords_[i];
  os << ']';
  return os.str();
}

std::vector<CurveClass> enumerate_curves(const Triangulation& t, Weight max_weight) {
  const int n = t.num_edges();
  // Triangles become checkable once their highest-numbered edge is assigned.
  std::vector<std::vector<int>> closes(n);
  for (int tri = 0; tri < t.num_triangles(); ++tri) {
    int last = std::max({t.edge_of({tri, 0}), t.edge_of({tri, 1}), t.edge_of({tri, 2})});
    closes[last].push_back(tri);
  }
  const auto links = puncture_links(t);

  std::vector<CurveClass> out;
  Coords w(n, 0);
  auto triangle_ok = [&](int tri) {
    Weight a = side_weight(t, w, tri, 0), b = side_weight(t, w, tri, 1), c = side_weight(t, w, tri, 2);
    return (a + b + c) % 2 == 0 && a <= b + c && b <= a + c && c <= a + b;
  };
  auto connected = [&]() {
    const auto offset = point_offsets(w);
    PointUnion uf = link_points(t, w, offset);
    const std::size_t root = uf.find(0);
    for (std::size_t i = 1; i < offset.back(); ++i) {
      if (uf.find(i) != root) return false;
    }
    return true;
  };

  auto recurse = [&](auto&& self, int e) -> void {
    if (e == n) {
      if (is_zero(w)) return;
      if (std::find(links.begin(), links.end(), w) != links.end()) return;
      if (connected()) out.push_back(CurveClass::trusted(w));
      return;
    }
    for (Weight x = 0; x <= max_weight; ++x) {
      w[e] = x;
      bool ok = true;
      for (int tri : closes[e]) ok = ok && triangle_ok(tri);
      if (ok) self(self, e + 1);
    }
    w[e] = 0;
  };
  recurse(recurse, 0);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace coverlift
