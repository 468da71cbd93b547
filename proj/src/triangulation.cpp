#include "coverlift/triangulation.hpp"

#include <algorithm>
#include <numeric>

namespace coverlift {

namespace {

class UnionFind {
 public:
  explicit UnionFind(int n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }
  int find(int x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }
  void unite(int a, int b) { parent_[find(a)] = find(b); }

 private:
  std::vector<int> parent_;
};

}  // namespace

Triangulation::Triangulation(int num_triangles, std::vector<std::array<Side, 2>> edges)
    : edge_of_(num_triangles, {-1, -1, -1}), edge_sides_(std::move(edges)) {
  if (3 * num_triangles != 2 * num_edges()) {
    throw TopologyError("side count does not match edge count");
  }
  for (int e = 0; e < num_edges(); ++e) {
    for (const Side& s : edge_sides_[e]) {
      if (s.tri < 0 || s.tri >= num_triangles || s.index < 0 || s.index > 2) {
        throw TopologyError("side reference out of range");
      }
      if (edge_of_[s.tri][s.index] != -1) throw TopologyError("side glued twice");
      edge_of_[s.tri][s.index] = e;
    }
  }

  UnionFind corners(3 * num_triangles);
  for (const auto& [s0, s1] : edge_sides_) {
    corners.unite(3 * s0.tri + s0.index, 3 * s1.tri + (s1.index + 1) % 3);
    corners.unite(3 * s0.tri + (s0.index + 1) % 3, 3 * s1.tri + s1.index);
  }
  corner_puncture_.assign(num_triangles, {0, 0, 0});
  std::vector<int> label(3 * num_triangles, -1);
  for (int t = 0; t < num_triangles; ++t) {
    for (int c = 0; c < 3; ++c) {
      int root = corners.find(3 * t + c);
      if (label[root] == -1) label[root] = num_punctures_++;
      corner_puncture_[t][c] = label[root];
    }
  }
}

Surface Triangulation::surface() const {
  int chi = -num_triangles() / 2;
  return Surface{(2 - chi - num_punctures_) / 2, num_punctures_};
}

Side Triangulation::partner(Side s) const {
  const auto& pair = edge_sides_[edge_of(s)];
  return pair[0] == s ? pair[1] : pair[0];
}

std::pair<int, int> Triangulation::edge_ends(int edge) const {
  Side s = edge_sides_[edge][0];
  return {puncture_at(s.tri, s.index), puncture_at(s.tri, (s.index + 1) % 3)};
}

bool Triangulation::flippable(int edge) const {
  return edge_sides_[edge][0].tri != edge_sides_[edge][1].tri;
}

Triangulation build_surface(int genus, int punctures) {
  if (punctures < 1) throw TopologyError("closed surfaces are not supported");
  if (genus < 0) throw TopologyError("negative genus");
  if (2 - 2 * genus - punctures >= 0) throw TopologyError("surface is not hyperbolic");

  // Boundary word: letter id and whether it is traversed inverted.
  std::vector<std::pair<int, bool>> word;
  int letters = 0;
  for (int h = 0; h < genus; ++h) {
    int a = letters++, b = letters++;
    word.insert(word.end(), {{a, false}, {b, false}, {a, true}, {b, true}});
  }
  int k = punctures - 1;
  for (int i = 0; i < k; ++i) word.push_back({letters + i, false});
  for (int i = k - 1; i >= 0; --i) word.push_back({letters + i, true});
  letters += k;

  const int n = static_cast<int>(word.size());
  const int num_tri = n - 2;

  // Polygon side p lies in fan triangle tri_of(p) as side side_of(p).
  auto layout = [&](int apex, int p) -> Side {
    int rel = ((p - apex) % n + n) % n;
    if (rel == 0) return {0, 0};
    if (rel == n - 1) return {num_tri - 1, 2};
    return {rel - 1, 1};
  };

  int apex = -1;
  for (int a = 0; a < n && apex < 0; ++a) {
    bool ok = true;
    for (int p = 0; p < n && ok; ++p) {
      for (int q = p + 1; q < n; ++q) {
        if (word[p].first == word[q].first && layout(a, p).tri == layout(a, q).tri) ok = false;
      }
    }
    if (ok) apex = a;
  }
  if (apex < 0) throw TopologyError("no fan apex avoids folded triangles");

  std::vector<std::array<Side, 2>> edges;
  std::vector<int> first_pos(letters, -1);
  for (int p = 0; p < n; ++p) {
    int id = word[p].first;
    if (first_pos[id] < 0) {
      first_pos[id] = p;
    } else {
      edges.push_back({layout(apex, first_pos[id]), layout(apex, p)});
    }
  }
  // Boundary edges in order of first appearance.
  std::sort(edges.begin(), edges.end(), [&](const auto& x, const auto& y) {
    auto pos = [&](Side s) {
      for (int p = 0; p < n; ++p) {
        if (layout(apex, p) == s) return p;
      }
      return n;
    };
    return pos(x[0]) < pos(y[0]);
  });
  for (int j = 1; j < num_tri; ++j) {
    edges.push_back({Side{j - 1, 2}, Side{j, 0}});
  }
  return Triangulation(num_tri, std::move(edges));
}

std::vector<Weight> CoordinateTransport::apply(const std::vector<Weight>& w) const {
  std::vector<Weight> out = w;
  out[edge] = std::max(w[quad[0]] + w[quad[2]], w[quad[1]] + w[quad[3]]) - w[edge];
  return out;
}

std::pair<Triangulation, CoordinateTransport> flip(const Triangulation& t, int edge) {
  if (edge < 0 || edge >= t.num_edges()) throw TopologyError("edge out of range");
  if (!t.flippable(edge)) throw TopologyError("edge is not flippable");

  const Side ab = t.sides_of(edge)[0];
  const Side ba = t.sides_of(edge)[1];
  const int t1 = ab.tri, t2 = ba.tri;
  const Side bc{t1, (ab.index + 1) % 3}, ca{t1, (ab.index + 2) % 3};
  const Side ad{t2, (ba.index + 1) % 3}, db{t2, (ba.index + 2) % 3};

  CoordinateTransport transport;
  transport.edge = edge;
  transport.quad = {t.edge_of(ad), t.edge_of(db), t.edge_of(bc), t.edge_of(ca)};

  // New triangles: t1 = (C, A, D), t2 = (D, B, C); the diagonal is side 2 of both.
  const std::array<std::pair<Side, Side>, 4> moves{{
      {ca, Side{t1, 0}},
      {ad, Side{t1, 1}},
      {db, Side{t2, 0}},
      {bc, Side{t2, 1}},
  }};
  std::vector<std::array<Side, 2>> edges;
  edges.reserve(t.num_edges());
  for (int e = 0; e < t.num_edges(); ++e) {
    if (e == edge) {
      edges.push_back({Side{t1, 2}, Side{t2, 2}});
      continue;
    }
    std::array<Side, 2> sides = t.sides_of(e);
    for (Side& s : sides) {
      for (const auto& [from, to] : moves) {
        if (s == from) {
          s = to;
          break;
        }
      }
    }
    edges.push_back(sides);
  }
  return {Triangulation(t.num_triangles(), std::move(edges)), transport};
}

std::vector<std::vector<Weight>> puncture_links(const Triangulation& t) {
  std::vector<std::vector<Weight>> links(t.num_punctures(), std::vector<Weight>(t.num_edges(), 0));
  for (int e = 0; e < t.num_edges(); ++e) {
    auto [from, to] = t.edge_ends(e);
    ++links[from][e];
    ++links[to][e];
  }
  return links;
}

bool Relabeling::is_identity() const {
  for (std::size_t i = 0; i < tri.size(); ++i) {
    if (tri[i] != static_cast<int>(i) || rotation[i] != 0) return false;
  }
  return true;
}

std::vector<Relabeling> isomorphisms(const Triangulation& a, const Triangulation& b) {
  std::vector<Relabeling> found;
  const int n = a.num_triangles();
  if (n == 0 || n != b.num_triangles() || a.num_edges() != b.num_edges()) return found;

  for (int target = 0; target < n; ++target) {
    for (int rot = 0; rot < 3; ++rot) {
      Relabeling r{std::vector<int>(n, -1), std::vector<int>(n, 0)};
      std::vector<bool> used(n, false);
      r.tri[0] = target;
      r.rotation[0] = rot;
      used[target] = true;
      std::vector<int> stack{0};
      bool ok = true;
      while (ok && !stack.empty()) {
        int cur = stack.back();
        stack.pop_back();
        for (int k = 0; k < 3 && ok; ++k) {
          Side s{cur, k};
          Side s_img = r.map(s);
          Side p = a.partner(s);
          Side p_img = b.partner(s_img);
          int want_rot = ((p_img.index - p.index) % 3 + 3) % 3;
          if (r.tri[p.tri] == -1) {
            if (used[p_img.tri]) {
              ok = false;
              break;
            }
            r.tri[p.tri] = p_img.tri;
            r.rotation[p.tri] = want_rot;
            used[p_img.tri] = true;
            stack.push_back(p.tri);
          } else if (r.tri[p.tri] != p_img.tri || r.rotation[p.tri] != want_rot) {
            ok = false;
          }
        }
      }
      if (ok && std::find(r.tri.begin(), r.tri.end(), -1) == r.tri.end()) {
        found.push_back(std::move(r));
      }
    }
  }
  return found;
}

std::pair<std::vector<int>, std::vector<bool>> edge_map(const Triangulation& from,
                                                        const Triangulation& to,
                                                        const Relabeling& r) {
  std::vector<int> image(from.num_edges());
  std::vector<bool> reversed(from.num_edges());
  for (int e = 0; e < from.num_edges(); ++e) {
    Side img = r.map(from.sides_of(e)[0]);
    image[e] = to.edge_of(img);
    reversed[e] = !to.is_leading(img);
  }
  return {image, reversed};
}

}  // namespace coverlift
