#include "coverlift/arrangement.hpp"

#include <algorithm>
#include <cstdlib>

namespace coverlift {

namespace {

// Boundary keys: side index in the high bits, merged position along the side
// in the low bits, so ascending keys run counterclockwise from corner 0.
constexpr int kSideShift = 40;
constexpr std::int64_t kCycle = std::int64_t{3} << kSideShift;

}  // namespace

Arrangement::Arrangement(const Triangulation& t, Coords a, Coords b) : tri_(&t), w_{std::move(a), std::move(b)} {
  for (const Coords& w : w_) {
    auto problems = validate(t, w);
    if (!problems.empty()) throw TopologyError("invalid normal coordinates: " + problems.front().message);
  }
  const int nt = t.num_triangles();
  chord_base_.resize(nt);
  corner_count_.resize(nt);
  for (int tri = 0; tri < nt; ++tri) {
    for (int c = 0; c < 2; ++c) {
      corner_count_[tri][c] = corner_counts(t, w_[c], tri);
      for (int k = 0; k < 3; ++k) {
        chord_base_[tri][c][k] = static_cast<int>(chords_.size());
        for (Weight r = 0; r < corner_count_[tri][c][k]; ++r) chords_.push_back({tri, c, k, r});
      }
    }
  }

  const int ne = t.num_edges();
  order_.resize(ne);
  local_.resize(ne);
  merged_[0].resize(ne);
  merged_[1].resize(ne);
  for (int e = 0; e < ne; ++e) {
    const Weight wa = w_[0][e], wb = w_[1][e];
    for (Weight p = 0; p < wa; ++p) {
      order_[e].push_back(0);
      local_[e].push_back(p);
      merged_[0][e].push_back(p);
    }
    for (Weight p = 0; p < wb; ++p) {
      order_[e].push_back(1);
      local_[e].push_back(p);
      merged_[1][e].push_back(wa + p);
    }
  }
  initial_crossings_ = static_cast<int>(crossings().size());
}

Arrangement::Endpoint Arrangement::end_of(const Chord& c, int end) const {
  if (end == 0) return {c.corner, c.rank};
  const int prev = (c.corner + 2) % 3;
  const Weight w = w_[c.curve][tri_->edge_of(Side{c.tri, prev})];
  return {prev, w - 1 - c.rank};
}

Weight Arrangement::merged_side_pos(int tri, int curve, Endpoint e) const {
  const Side s{tri, e.side};
  const int edge = tri_->edge_of(s);
  const bool leading = tri_->is_leading(s);
  const Weight w = w_[curve][edge];
  const Weight local = leading ? e.local : w - 1 - e.local;
  const Weight m = merged_[curve][edge][local];
  const Weight total = w_[0][edge] + w_[1][edge];
  return leading ? m : total - 1 - m;
}

std::int64_t Arrangement::boundary_key(int tri, int curve, Endpoint e) const {
  return (std::int64_t{e.side} << kSideShift) + merged_side_pos(tri, curve, e);
}

std::int64_t Arrangement::key(int chord, int end) const {
  const Chord& c = chords_[chord];
  return boundary_key(c.tri, c.curve, end_of(c, end));
}

bool Arrangement::cross(int ca, int cb) const {
  std::int64_t x1 = key(ca, 0), x2 = key(ca, 1);
  if (x1 > x2) std::swap(x1, x2);
  const std::int64_t y1 = key(cb, 0), y2 = key(cb, 1);
  return (x1 < y1 && y1 < x2) != (x1 < y2 && y2 < x2);
}

int Arrangement::chord_at(int tri, int curve, int side, Weight local) const {
  const auto& c = corner_count_[tri][curve];
  if (local < c[side]) return chord_base_[tri][curve][side] + static_cast<int>(local);
  const Weight w = w_[curve][tri_->edge_of(Side{tri, side})];
  return chord_base_[tri][curve][(side + 1) % 3] + static_cast<int>(w - 1 - local);
}

const std::vector<Arrangement::Crossing>& Arrangement::crossings() const {
  if (crossings_valid_) return crossings_;
  crossings_.clear();
  for (int tri = 0; tri < tri_->num_triangles(); ++tri) {
    const int a_begin = chord_base_[tri][0][0], a_end = chord_base_[tri][1][0];
    const int b_begin = a_end;
    const int b_end = tri + 1 < tri_->num_triangles() ? chord_base_[tri + 1][0][0] : static_cast<int>(chords_.size());
    for (int ca = a_begin; ca < a_end; ++ca) {
      for (int cb = b_begin; cb < b_end; ++cb) {
        if (cross(ca, cb)) crossings_.push_back({tri, ca, cb});
      }
    }
  }
  crossings_valid_ = true;
  return crossings_;
}

void Arrangement::invalidate() {
  crossings_valid_ = false;
  faces_valid_ = false;
}

std::optional<std::vector<std::pair<int, Weight>>> Arrangement::find_bigon(int ca, int cb) const {
  Weight total = 0;
  for (const auto& o : order_) total += static_cast<Weight>(o.size());

  for (int start_a = 0; start_a < 2; ++start_a) {
    for (int start_b = 0; start_b < 2; ++start_b) {
      int cur_a = ca, cur_b = cb, end_a = start_a, end_b = start_b;
      std::vector<std::pair<int, Weight>> ladder;
      for (Weight step = 0; step <= total; ++step) {
        const Chord& a = chords_[cur_a];
        const Chord& b = chords_[cur_b];
        const Endpoint pa = end_of(a, end_a), pb = end_of(b, end_b);
        if (pa.side != pb.side) break;
        const Side s{a.tri, pa.side};
        const int edge = tri_->edge_of(s);
        const bool leading = tri_->is_leading(s);
        const Weight la = leading ? pa.local : w_[0][edge] - 1 - pa.local;
        const Weight lb = leading ? pb.local : w_[1][edge] - 1 - pb.local;
        const Weight ma = merged_[0][edge][la], mb = merged_[1][edge][lb];
        if (std::abs(ma - mb) != 1) break;
        ladder.emplace_back(edge, std::min(ma, mb));

        const Side p = tri_->partner(s);
        auto enter = [&](int curve, Weight edge_local) {
          const Weight w = w_[curve][edge];
          const Weight q = tri_->is_leading(p) ? edge_local : w - 1 - edge_local;
          const int ch = chord_at(p.tri, curve, p.index, q);
          return std::pair{ch, chords_[ch].corner == p.index ? 0 : 1};
        };
        const auto [na, in_a] = enter(0, la);
        const auto [nb, in_b] = enter(1, lb);
        if (cross(na, nb)) {
          if (na == ca && nb == cb) break;
          return ladder;
        }
        cur_a = na;
        end_a = 1 - in_a;
        cur_b = nb;
        end_b = 1 - in_b;
      }
    }
  }
  return std::nullopt;
}

void Arrangement::swap_adjacent(int edge, Weight m) {
  auto& order = order_[edge];
  auto& local = local_[edge];
  const int c1 = order[m], c2 = order[m + 1];
  const Weight l1 = local[m], l2 = local[m + 1];
  std::swap(order[m], order[m + 1]);
  std::swap(local[m], local[m + 1]);
  merged_[c1][edge][l1] = m + 1;
  merged_[c2][edge][l2] = m;
}

int Arrangement::remove_bigons() {
  int removed = 0;
  bool changed = true;
  while (changed) {
    changed = false;
    const std::vector<Crossing> snapshot = crossings();
    for (const Crossing& x : snapshot) {
      if (!cross(x.chord_a, x.chord_b)) continue;
      if (auto ladder = find_bigon(x.chord_a, x.chord_b)) {
        for (const auto& [edge, m] : *ladder) swap_adjacent(edge, m);
        invalidate();
        ++removed;
        changed = true;
      }
    }
  }
  bigons_removed_ += removed;
  return removed;
}

bool Arrangement::bigon_free() const {
  for (const Crossing& x : crossings()) {
    if (find_bigon(x.chord_a, x.chord_b)) return false;
  }
  return true;
}

std::vector<std::vector<Arrangement::Passage>> Arrangement::passages(int curve) const {
  std::vector<std::vector<Passage>> out;
  std::vector<bool> visited(chords_.size(), false);
  for (int start = 0; start < static_cast<int>(chords_.size()); ++start) {
    if (chords_[start].curve != curve || visited[start]) continue;
    std::vector<Passage> comp;
    int cur = start, in = 0;
    do {
      visited[cur] = true;
      const Chord& c = chords_[cur];
      const Endpoint ex = end_of(c, 1 - in);
      const Side s{c.tri, ex.side};
      comp.push_back({cur, in == 0, s});
      const int edge = tri_->edge_of(s);
      const Weight w = w_[curve][edge];
      const Weight edge_local = tri_->is_leading(s) ? ex.local : w - 1 - ex.local;
      const Side p = tri_->partner(s);
      const Weight q = tri_->is_leading(p) ? edge_local : w - 1 - edge_local;
      cur = chord_at(p.tri, curve, p.index, q);
      in = chords_[cur].corner == p.index ? 0 : 1;
    } while (!(cur == start && in == 0));
    out.push_back(std::move(comp));
  }
  return out;
}

std::vector<int> Arrangement::crossings_along(int chord) const {
  const std::int64_t k0 = key(chord, 0);
  auto dist = [&](std::int64_t x) { return ((x - k0) % kCycle + kCycle) % kCycle; };
  const std::int64_t span = dist(key(chord, 1));
  std::vector<std::pair<std::int64_t, int>> found;
  const auto& xs = crossings();
  for (int i = 0; i < static_cast<int>(xs.size()); ++i) {
    int other = -1;
    if (xs[i].chord_a == chord) other = xs[i].chord_b;
    if (xs[i].chord_b == chord) other = xs[i].chord_a;
    if (other < 0) continue;
    std::int64_t d = dist(key(other, 0));
    if (d >= span) d = dist(key(other, 1));
    found.emplace_back(d, i);
  }
  std::sort(found.begin(), found.end());
  std::vector<int> out;
  for (const auto& [d, i] : found) out.push_back(i);
  return out;
}

std::array<std::pair<int, int>, 4> Arrangement::rotation_at(int crossing) const {
  const Crossing& x = crossings()[crossing];
  std::array<std::pair<int, int>, 4> ends{{{x.chord_a, 0}, {x.chord_a, 1}, {x.chord_b, 0}, {x.chord_b, 1}}};
  std::sort(ends.begin(), ends.end(), [&](const auto& l, const auto& r) { return key(l.first, l.second) < key(r.first, r.second); });
  return ends;
}

int Arrangement::num_arcs() const {
  std::vector<int> on_chord(chords_.size(), 0);
  for (const Crossing& x : crossings()) {
    ++on_chord[x.chord_a];
    ++on_chord[x.chord_b];
  }
  int arcs = 0;
  for (int curve = 0; curve < 2; ++curve) {
    for (const auto& comp : passages(curve)) {
      for (const Passage& p : comp) arcs += on_chord[p.chord];
    }
  }
  return arcs;
}

Arrangement minimal_position(const Triangulation& t, const Coords& a, const Coords& b) {
  Arrangement arr(t, a, b);
  arr.remove_bigons();
  return arr;
}

Weight intersection_number(const Triangulation& t, const Coords& a, const Coords& b) {
  return minimal_position(t, a, b).num_vertices();
}

}  // namespace coverlift
