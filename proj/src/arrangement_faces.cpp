#include <algorithm>
#include <numeric>

#include "coverlift/arrangement.hpp"

namespace coverlift {

namespace {

enum class DartKind { Forward, Backward, Chord };

// Dart of the refined map: triangulation edges cut at every curve point,
// normal arcs cut at every crossing. Forward/Backward darts run along a
// triangle side counterclockwise/clockwise.
struct Dart {
  int origin;
  int twin;
  int tri;
  DartKind kind;
  int side;
  Weight seg;  // segment index along the side, Forward darts only
};

class CellUnion {
 public:
  explicit CellUnion(int n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }
  int find(int x) {
    while (parent_[x] != x) x = parent_[x] = parent_[parent_[x]];
    return x;
  }
  void unite(int a, int b) { parent_[find(a)] = find(b); }

 private:
  std::vector<int> parent_;
};

}  // namespace

void Arrangement::build_faces() const {
  const Triangulation& t = *tri_;
  const auto& xs = crossings();

  std::vector<Dart> darts;
  std::vector<std::vector<int>> rot;
  std::vector<int> corner_puncture;
  std::vector<int> vertex_crossing;
  std::vector<int> crossing_vertex(xs.size(), -1);

  std::vector<Weight> seg_offset(t.num_edges() + 1, 0);
  for (int e = 0; e < t.num_edges(); ++e) seg_offset[e + 1] = seg_offset[e] + w_[0][e] + w_[1][e] + 1;

  auto add_vertex = [&](int puncture, int crossing) {
    rot.emplace_back();
    corner_puncture.push_back(puncture);
    vertex_crossing.push_back(crossing);
    return static_cast<int>(rot.size()) - 1;
  };
  auto add_edge = [&](int u, int v, int tri, DartKind ku, DartKind kv) {
    const int d = static_cast<int>(darts.size());
    darts.push_back({u, d + 1, tri, ku, -1, -1});
    darts.push_back({v, d, tri, kv, -1, -1});
    return d;
  };

  for (int tri = 0; tri < t.num_triangles(); ++tri) {
    std::array<Weight, 3> n{}, base{};
    for (int k = 0; k < 3; ++k) {
      const int e = t.edge_of(Side{tri, k});
      n[k] = w_[0][e] + w_[1][e];
    }
    base[0] = 0;
    base[1] = 1 + n[0];
    base[2] = 2 + n[0] + n[1];
    const Weight nb = 3 + n[0] + n[1] + n[2];

    const int vbase = static_cast<int>(rot.size());
    for (Weight i = 0; i < nb; ++i) {
      int puncture = -1;
      for (int k = 0; k < 3; ++k) {
        if (i == base[k]) puncture = t.puncture_at(tri, k);
      }
      add_vertex(puncture, -1);
    }
    std::vector<int> fwd_from(nb), bwd_from(nb), chord_from(nb, -1);
    for (Weight i = 0; i < nb; ++i) {
      const Weight j = (i + 1) % nb;
      const int d = add_edge(vbase + static_cast<int>(i), vbase + static_cast<int>(j), tri, DartKind::Forward,
                             DartKind::Backward);
      const int k = i >= base[2] ? 2 : (i >= base[1] ? 1 : 0);
      darts[d].side = k;
      darts[d].seg = i - base[k];
      fwd_from[i] = d;
      bwd_from[j] = d + 1;
    }

    auto item_of = [&](int chord, int end) {
      const Chord& c = chords_[chord];
      const Endpoint ep = end_of(c, end);
      return base[ep.side] + 1 + merged_side_pos(tri, c.curve, ep);
    };

    // Darts leaving each crossing vertex, tagged by the chord end they head to.
    std::vector<std::vector<std::array<int, 3>>> toward(xs.size());
    const int first = chord_base_[tri][0][0];
    const int last = tri + 1 < t.num_triangles() ? chord_base_[tri + 1][0][0] : static_cast<int>(chords_.size());
    for (int ch = first; ch < last; ++ch) {
      std::vector<int> seq{vbase + static_cast<int>(item_of(ch, 0))};
      std::vector<int> seq_crossing{-1};
      for (int x : crossings_along(ch)) {
        if (crossing_vertex[x] < 0) crossing_vertex[x] = add_vertex(-1, x);
        seq.push_back(crossing_vertex[x]);
        seq_crossing.push_back(x);
      }
      seq.push_back(vbase + static_cast<int>(item_of(ch, 1)));
      seq_crossing.push_back(-1);
      for (std::size_t i = 0; i + 1 < seq.size(); ++i) {
        const int d = add_edge(seq[i], seq[i + 1], tri, DartKind::Chord, DartKind::Chord);
        if (i == 0) chord_from[seq[i] - vbase] = d;
        if (i + 2 == seq.size()) chord_from[seq[i + 1] - vbase] = d + 1;
        if (seq_crossing[i] >= 0) toward[seq_crossing[i]].push_back({ch, 1, d});
        if (seq_crossing[i + 1] >= 0) toward[seq_crossing[i + 1]].push_back({ch, 0, d + 1});
      }
    }

    for (Weight i = 0; i < nb; ++i) {
      auto& r = rot[vbase + i];
      if (chord_from[i] < 0) {
        r = {fwd_from[i], bwd_from[i]};
      } else {
        r = {fwd_from[i], chord_from[i], bwd_from[i]};
      }
    }
    for (int x = 0; x < static_cast<int>(xs.size()); ++x) {
      if (xs[x].tri != tri) continue;
      auto& r = rot[crossing_vertex[x]];
      for (const auto& [ch, end] : rotation_at(x)) {
        for (const auto& tag : toward[x]) {
          if (tag[0] == ch && tag[1] == end) r.push_back(tag[2]);
        }
      }
    }
  }

  std::vector<int> pos_in_rot(darts.size());
  for (const auto& r : rot) {
    for (std::size_t i = 0; i < r.size(); ++i) pos_in_rot[r[i]] = static_cast<int>(i);
  }
  auto next = [&](int h) {
    const int tw = darts[h].twin;
    const auto& r = rot[darts[tw].origin];
    const int deg = static_cast<int>(r.size());
    return r[(pos_in_rot[tw] + deg - 1) % deg];
  };

  // Cells: interior faces of each triangle's local map.
  std::vector<int> cell_of(darts.size(), -1);
  std::vector<std::vector<int>> cell_punctures;
  std::vector<int> seg_cell(seg_offset.back(), -1), seg_cell2(seg_offset.back(), -1);
  std::vector<int> seg_dart(seg_offset.back(), -1), seg_dart2(seg_offset.back(), -1);
  std::vector<bool> seen(darts.size(), false);
  for (int d0 = 0; d0 < static_cast<int>(darts.size()); ++d0) {
    if (seen[d0]) continue;
    std::vector<int> cycle;
    bool exterior = false;
    int h = d0;
    do {
      seen[h] = true;
      cycle.push_back(h);
      exterior = exterior || darts[h].kind == DartKind::Backward;
      h = next(h);
    } while (h != d0);
    if (exterior) continue;
    const int cell = static_cast<int>(cell_punctures.size());
    cell_punctures.emplace_back();
    for (int d : cycle) {
      cell_of[d] = cell;
      if (corner_puncture[darts[d].origin] >= 0) cell_punctures[cell].push_back(corner_puncture[darts[d].origin]);
      if (darts[d].kind != DartKind::Forward) continue;
      const Side s{darts[d].tri, darts[d].side};
      const int e = t.edge_of(s);
      const Weight n = w_[0][e] + w_[1][e];
      const Weight seg = seg_offset[e] + (t.is_leading(s) ? darts[d].seg : n - darts[d].seg);
      if (seg_cell[seg] < 0) {
        seg_cell[seg] = cell;
        seg_dart[seg] = d;
      } else {
        seg_cell2[seg] = cell;
        seg_dart2[seg] = d;
      }
    }
  }

  const int num_cells = static_cast<int>(cell_punctures.size());
  CellUnion regions(num_cells);
  std::vector<int> across(darts.size(), -1);
  for (Weight s = 0; s < seg_offset.back(); ++s) {
    regions.unite(seg_cell[s], seg_cell2[s]);
    across[seg_dart[s]] = seg_dart2[s];
    across[seg_dart2[s]] = seg_dart[s];
  }

  faces_.clear();
  std::vector<int> face_of_root(num_cells, -1);
  std::vector<std::vector<int>> face_punctures;
  auto face_of_cell = [&](int cell) {
    const int root = regions.find(cell);
    if (face_of_root[root] < 0) {
      face_of_root[root] = static_cast<int>(faces_.size());
      faces_.emplace_back();
      face_punctures.emplace_back();
    }
    return face_of_root[root];
  };
  for (int c = 0; c < num_cells; ++c) {
    const int f = face_of_cell(c);
    ++faces_[f].cells;
    face_punctures[f].insert(face_punctures[f].end(), cell_punctures[c].begin(), cell_punctures[c].end());
  }
  for (Weight s = 0; s < seg_offset.back(); ++s) ++faces_[face_of_cell(seg_cell[s])].segments;
  for (std::size_t f = 0; f < faces_.size(); ++f) {
    auto& p = face_punctures[f];
    std::sort(p.begin(), p.end());
    p.erase(std::unique(p.begin(), p.end()), p.end());
    faces_[f].punctures = static_cast<int>(p.size());
    faces_[f].euler = faces_[f].cells - faces_[f].segments + faces_[f].punctures;
  }

  // Boundary walks of the merged regions: skip every side segment by
  // stepping across it, recording the side crossed.
  std::vector<bool> walked(darts.size(), false);
  for (int h0 = 0; h0 < static_cast<int>(darts.size()); ++h0) {
    if (darts[h0].kind != DartKind::Chord || walked[h0]) continue;
    DualPath path;
    std::vector<int> vertices;
    int h = h0;
    do {
      walked[h] = true;
      if (vertex_crossing[darts[h].origin] >= 0) vertices.push_back(vertex_crossing[darts[h].origin]);
      int g = next(h);
      while (darts[g].kind == DartKind::Forward) {
        path.push_back(Side{darts[g].tri, darts[g].side});
        g = next(across[g]);
      }
      h = g;
    } while (h != h0);
    Face& f = faces_[face_of_cell(cell_of[h0])];
    f.boundaries.push_back(std::move(path));
    f.boundary_vertices.push_back(std::move(vertices));
  }
  faces_valid_ = true;
}

const std::vector<Arrangement::Face>& Arrangement::faces() const {
  if (!faces_valid_) build_faces();
  return faces_;
}

bool Arrangement::euler_consistent() const {
  int total = num_vertices() - num_arcs();
  for (const Face& f : faces()) total += f.euler;
  return total == 2 - 2 * tri_->surface().genus;
}

bool fills(const Triangulation& t, const Coords& a, const Coords& b) {
  const Arrangement arr = minimal_position(t, a, b);
  return std::all_of(arr.faces().begin(), arr.faces().end(),
                     [](const Arrangement::Face& f) { return f.is_disk() && f.punctures <= 1; });
}

std::optional<CurveClass> disjoint_witness(const Triangulation& t, const Coords& a, const Coords& b) {
  const Arrangement arr = minimal_position(t, a, b);
  const auto links = puncture_links(t);
  std::optional<CurveClass> best;
  for (const auto& face : arr.faces()) {
    if (face.is_disk() && face.punctures <= 1) continue;
    for (const DualPath& boundary : face.boundaries) {
      Coords w = coords_of_path(t, reduce_path(t, boundary));
      if (is_zero(w) || std::find(links.begin(), links.end(), w) != links.end()) continue;
      if (decompose(t, w).size() != 1) continue;
      auto candidate = CurveClass::trusted(std::move(w));
      if (!best || candidate < *best) best = std::move(candidate);
    }
  }
  return best;
}

}  // namespace coverlift
