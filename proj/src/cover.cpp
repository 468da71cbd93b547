#include "coverlift/cover.hpp"

#include <algorithm>
#include <numeric>

namespace coverlift {

namespace {

// Sheet reached after crossing side s from sheet k.
int cross_side(const Triangulation& t, const CoverSpec& spec, Side s, int k) {
  const Permutation& p = spec.perms[t.edge_of(s)];
  if (t.sides_of(t.edge_of(s))[0] == s) return p[k];
  return static_cast<int>(std::find(p.begin(), p.end(), k) - p.begin());
}

bool is_permutation_of_sheets(const Permutation& p, int degree) {
  if (static_cast<int>(p.size()) != degree) return false;
  std::vector<bool> hit(degree, false);
  for (int x : p) {
    if (x < 0 || x >= degree || hit[x]) return false;
    hit[x] = true;
  }
  return true;
}

}  // namespace

CoverSpec CoverSpec::identity(const Triangulation& t, int degree) {
  Permutation id(degree);
  std::iota(id.begin(), id.end(), 0);
  return CoverSpec{degree, std::vector<Permutation>(t.num_edges(), id)};
}

std::vector<std::string> check_spec(const Triangulation& t, const CoverSpec& spec) {
  std::vector<std::string> problems;
  if (spec.degree < 1) problems.push_back("degree must be at least 1");
  if (static_cast<int>(spec.perms.size()) != t.num_edges()) {
    problems.push_back("expected " + std::to_string(t.num_edges()) + " permutations, got " +
                       std::to_string(spec.perms.size()));
  }
  if (!problems.empty()) return problems;
  for (int e = 0; e < t.num_edges(); ++e) {
    if (!is_permutation_of_sheets(spec.perms[e], spec.degree)) {
      problems.push_back("permutation for e" + std::to_string(e) + " is not a bijection of the sheets");
    }
  }
  if (!problems.empty()) return problems;

  // Sheets are joined whenever an edge permutation moves one to another; the
  // dual graph is connected, so the total space is connected iff the sheets
  // form one class.
  std::vector<int> parent(spec.degree);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  int classes = spec.degree;
  for (const Permutation& p : spec.perms) {
    for (int k = 0; k < spec.degree; ++k) {
      const int r1 = find(k), r2 = find(p[k]);
      if (r1 != r2) {
        parent[r1] = r2;
        --classes;
      }
    }
  }
  if (classes != 1) problems.push_back("cover is disconnected (" + std::to_string(classes) + " components)");
  return problems;
}

CoverSpec random_cover_spec(const Triangulation& t, int degree, Rng& rng) {
  CoverSpec spec{degree, std::vector<Permutation>(t.num_edges())};
  do {
    for (Permutation& p : spec.perms) {
      p.resize(degree);
      std::iota(p.begin(), p.end(), 0);
      for (int i = degree - 1; i > 0; --i) std::swap(p[i], p[uniform_below(rng, i + 1)]);
    }
  } while (!check_spec(t, spec).empty());
  return spec;
}

CoverTriangulation build_cover(const Triangulation& t, const CoverSpec& spec) {
  if (auto problems = check_spec(t, spec); !problems.empty()) throw TopologyError("invalid cover: " + problems.front());
  const int nt = t.num_triangles();
  const int d = spec.degree;
  std::vector<std::array<Side, 2>> edges;
  std::vector<int> edge_base;
  edges.reserve(static_cast<std::size_t>(t.num_edges()) * d);
  for (int e = 0; e < t.num_edges(); ++e) {
    const auto [a, b] = t.sides_of(e);
    for (int k = 0; k < d; ++k) {
      edges.push_back({Side{k * nt + a.tri, a.index}, Side{spec.perms[e][k] * nt + b.tri, b.index}});
      edge_base.push_back(e);
    }
  }
  CoverTriangulation out{Triangulation(nt * d, std::move(edges)), d, {}, {}, std::move(edge_base)};
  for (int i = 0; i < nt * d; ++i) {
    out.triangle_base.push_back(i % nt);
    out.triangle_sheet.push_back(i / nt);
  }
  return out;
}

Permutation path_holonomy(const Triangulation& t, const CoverSpec& spec, const DualPath& path) {
  Permutation h(spec.degree);
  for (int k = 0; k < spec.degree; ++k) {
    int sheet = k;
    for (const Side& s : path) sheet = cross_side(t, spec, s, sheet);
    h[k] = sheet;
  }
  return h;
}

std::vector<Permutation> puncture_holonomy(const Triangulation& t, const CoverSpec& spec) {
  // Around a puncture, corner k of a triangle is followed by the corner
  // across side k, which is the partner side's far corner.
  std::vector<Permutation> out(t.num_punctures());
  std::vector<bool> done(t.num_punctures(), false);
  for (int tri = 0; tri < t.num_triangles(); ++tri) {
    for (int k = 0; k < 3; ++k) {
      const int p = t.puncture_at(tri, k);
      if (done[p]) continue;
      done[p] = true;
      DualPath loop;
      Side corner{tri, k};
      do {
        loop.push_back(corner);
        const Side across = t.partner(corner);
        corner = Side{across.tri, (across.index + 1) % 3};
      } while (!(corner == Side{tri, k}));
      out[p] = path_holonomy(t, spec, loop);
    }
  }
  return out;
}

int cycle_count(const Permutation& p) {
  std::vector<bool> seen(p.size(), false);
  int cycles = 0;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (seen[i]) continue;
    ++cycles;
    for (std::size_t j = i; !seen[j]; j = static_cast<std::size_t>(p[j])) seen[j] = true;
  }
  return cycles;
}

std::vector<CurveClass> lift_curve(const CoverTriangulation& c, const CurveClass& a) {
  Coords lifted(c.edge_base.size());
  for (std::size_t j = 0; j < lifted.size(); ++j) lifted[j] = a.coords()[c.edge_base[j]];
  std::vector<CurveClass> out;
  for (Coords& w : components(c.total, lifted)) out.push_back(CurveClass::certify(c.total, std::move(w)));
  std::sort(out.begin(), out.end());
  return out;
}

CurveClass preferred_lift(const CoverTriangulation& c, const CurveClass& a) {
  const std::vector<CurveClass> lifts = lift_curve(c, a);
  return *std::min_element(lifts.begin(), lifts.end(),
                           [](const CurveClass& x, const CurveClass& y) { return x.canonical() < y.canonical(); });
}

std::vector<CurveClass> lift_path(const CoverTriangulation& c, const std::vector<CurveClass>& path) {
  std::vector<CurveClass> out;
  out.reserve(path.size());
  for (const CurveClass& v : path) out.push_back(preferred_lift(c, v));
  return out;
}

}  // namespace coverlift
