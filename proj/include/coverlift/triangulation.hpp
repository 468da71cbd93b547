#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace coverlift {

using Weight = std::int64_t;

/// Genus and puncture count of S_{g,n}.
struct Surface {
  int genus = 0;
  int punctures = 1;

  int euler_characteristic() const { return 2 - 2 * genus - punctures; }
  int complexity() const { return 3 * genus + punctures - 3; }
  bool hyperbolic() const { return punctures >= 1 && euler_characteristic() < 0; }

  friend bool operator==(const Surface&, const Surface&) = default;
};

/// Side `index` of triangle `tri` runs from corner `index` to corner `index + 1`.
struct Side {
  int tri = 0;
  int index = 0;

  friend bool operator==(const Side&, const Side&) = default;
  friend auto operator<=>(const Side&, const Side&) = default;
};

class TopologyError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Combinatorial ideal triangulation of a punctured oriented surface.
///
/// Triangles are oriented counterclockwise by their side order. Every edge is
/// a pair of sides glued orientation-reversingly; the first side of the pair
/// fixes the edge's canonical direction, which is the direction positions
/// along the edge are counted in.
class Triangulation {
 public:
  Triangulation() = default;

  /// Builds from per-edge side pairs. Throws TopologyError if the pairing is
  /// not a perfect matching of all 3 * num_triangles sides.
  Triangulation(int num_triangles, std::vector<std::array<Side, 2>> edges);

  int num_triangles() const { return static_cast<int>(edge_of_.size()); }
  int num_edges() const { return static_cast<int>(edge_sides_.size()); }
  int num_punctures() const { return num_punctures_; }
  Surface surface() const;

  int edge_of(Side s) const { return edge_of_[s.tri][s.index]; }
  const std::array<Side, 2>& sides_of(int edge) const { return edge_sides_[edge]; }
  Side partner(Side s) const;
  /// True if `s` is the first side of its edge (runs along the edge direction).
  bool is_leading(Side s) const { return edge_sides_[edge_of(s)][0] == s; }

  /// Puncture at corner `corner` (the start vertex of side `corner`).
  int puncture_at(int tri, int corner) const { return corner_puncture_[tri][corner]; }
  /// Punctures at the start and end of the edge, in edge direction.
  std::pair<int, int> edge_ends(int edge) const;

  bool flippable(int edge) const;

  friend bool operator==(const Triangulation& a, const Triangulation& b) {
    return a.edge_sides_ == b.edge_sides_ && a.edge_of_ == b.edge_of_;
  }

 private:
  std::vector<std::array<int, 3>> edge_of_;
  std::vector<std::array<Side, 2>> edge_sides_;
  std::vector<std::array<int, 3>> corner_puncture_;
  int num_punctures_ = 0;
};

/// Canonical polygon-fan triangulation of S_{g,n}.
///
/// A polygon with side word a1 b1 a1' b1' ... ag bg ag' bg' c1 ... ck ck' ... c1'
/// (k = n - 1) is fan-triangulated from the first vertex that leaves no
/// triangle with two sides glued to each other. Triangles are numbered along
/// the fan; boundary-word edges come first (in word order of first
/// appearance), then diagonals in fan order.
Triangulation build_surface(int genus, int punctures);

/// Rewrites normal coordinates across a flip. The flipped quadrilateral has
/// sides (a, b, c, d) in cyclic order and old diagonal weight e; the new
/// diagonal gets max(a + c, b + d) - e.
struct CoordinateTransport {
  int edge = -1;
  std::array<int, 4> quad{};  // edges around the quadrilateral, cyclic order

  std::vector<Weight> apply(const std::vector<Weight>& weights) const;
};

/// Flips `edge`. The two triangles keep their indices and the new diagonal
/// keeps the edge index. Throws TopologyError for an edge whose two sides lie
/// in the same triangle.
std::pair<Triangulation, CoordinateTransport> flip(const Triangulation& t, int edge);

/// One vector per puncture: the weight of edge e counts the ends of e there.
std::vector<std::vector<Weight>> puncture_links(const Triangulation& t);

/// Orientation-preserving combinatorial isomorphism. Triangle i of the
/// source maps to triangle `tri[i]` of the target with corner c going to
/// corner (c + rotation[i]) mod 3.
struct Relabeling {
  std::vector<int> tri;
  std::vector<int> rotation;

  Side map(Side s) const { return {tri[s.tri], (s.index + rotation[s.tri]) % 3}; }
  bool is_identity() const;
  friend bool operator==(const Relabeling&, const Relabeling&) = default;
};

/// All isomorphisms from `a` to `b` (empty when none exist). Requires `a`
/// connected, which every triangulation of a surface is.
std::vector<Relabeling> isomorphisms(const Triangulation& a, const Triangulation& b);

/// Edge permutation induced by an isomorphism: edge e of the source maps to
/// the returned entry. The second vector flags edges whose direction flips.
std::pair<std::vector<int>, std::vector<bool>> edge_map(const Triangulation& from,
                                                        const Triangulation& to,
                                                        const Relabeling& r);

}  // namespace coverlift
