#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <vector>

#include "coverlift/curve.hpp"

namespace coverlift {

/// Overlay of two normal multicurves `a` (curve 0) and `b` (curve 1).
///
/// Both curves stay normal; the only freedom is how their intersection points
/// interleave along each edge. Normal arcs of a and b then cross inside a
/// triangle exactly when their endpoints alternate around it. Minimal
/// position is reached by repeatedly deleting empty bigons, each of which is
/// a strip of adjacent a/b points between two crossings.
class Arrangement {
 public:
  /// A normal arc: curve `curve` cuts corner `corner` of triangle `tri`; `rank`
  /// counts outward from the corner.
  struct Chord {
    int tri;
    int curve;
    int corner;
    Weight rank;
  };

  struct Crossing {
    int tri;
    int chord_a;  // index into chords()
    int chord_b;
  };

  /// Complementary region of a ∪ b. Euler characteristic is that of the
  /// region with its punctures filled in.
  struct Face {
    int cells = 0;
    int segments = 0;
    int punctures = 0;
    int euler = 0;
    /// One dual path per boundary component, following the region side of
    /// the boundary (not reduced).
    std::vector<DualPath> boundaries;
    /// Crossing vertices met along each boundary component, in order.
    std::vector<std::vector<int>> boundary_vertices;

    bool is_disk() const { return euler == 1; }
  };

  /// Traversal of one component of curve `curve`: the chord visited at each
  /// step and whether it is walked from its corner side to its far side.
  struct Passage {
    int chord;
    bool forward;  // entered on side `corner`, left on side `corner - 1`
    Side exit;
  };

  Arrangement(const Triangulation& t, Coords a, Coords b);

  const Triangulation& triangulation() const { return *tri_; }
  const Coords& coords(int curve) const { return w_[curve]; }

  /// Removes empty bigons until none remain; returns how many were removed.
  int remove_bigons();

  const std::vector<Chord>& chords() const { return chords_; }
  const std::vector<Crossing>& crossings() const;
  int num_vertices() const { return static_cast<int>(crossings().size()); }
  /// Edges of the 4-valent graph a ∪ b (crossing-free components excluded).
  int num_arcs() const;
  int bigons_removed() const { return bigons_removed_; }
  int initial_crossings() const { return initial_crossings_; }
  bool bigon_free() const;

  const std::vector<Face>& faces() const;
  /// Checks that V - E + Σ χ(face) equals χ of the closed-up surface.
  bool euler_consistent() const;

  /// One traversal per component of the curve.
  std::vector<std::vector<Passage>> passages(int curve) const;
  /// Crossings on a chord, ordered from its corner-side end to its far end.
  std::vector<int> crossings_along(int chord) const;
  /// The four chord ends around a crossing in counterclockwise order, each
  /// as (chord, end) with end 0 = corner-side end.
  std::array<std::pair<int, int>, 4> rotation_at(int crossing) const;

 private:
  struct Endpoint {
    int side;      // side index in the chord's triangle
    Weight local;  // position on that side among the chord's own curve, from the side start
  };

  Endpoint end_of(const Chord& c, int end) const;
  std::int64_t boundary_key(int tri, int curve, Endpoint e) const;
  std::int64_t key(int chord, int end) const;
  bool cross(int ca, int cb) const;
  int chord_at(int tri, int curve, int side, Weight local) const;
  Weight merged_side_pos(int tri, int curve, Endpoint e) const;
  std::optional<std::vector<std::pair<int, Weight>>> find_bigon(int ca, int cb) const;
  void swap_adjacent(int edge, Weight merged);
  void invalidate();
  void build_faces() const;

  const Triangulation* tri_;
  std::array<Coords, 2> w_;
  std::vector<Chord> chords_;
  // chord_base_[tri][curve][corner] = first chord index for that corner
  std::vector<std::array<std::array<int, 3>, 2>> chord_base_;
  std::vector<std::array<std::array<Weight, 3>, 2>> corner_count_;
  // order_[e][m]: curve owning merged point m along edge e
  std::vector<std::vector<std::uint8_t>> order_;
  // merged_[curve][e][p]: merged index of the curve's p-th point on e
  std::array<std::vector<std::vector<Weight>>, 2> merged_;
  // local_[e][m]: index of merged point m among its own curve's points on e
  std::vector<std::vector<Weight>> local_;
  int bigons_removed_ = 0;
  int initial_crossings_ = 0;

  mutable bool crossings_valid_ = false;
  mutable std::vector<Crossing> crossings_;
  mutable bool faces_valid_ = false;
  mutable std::vector<Face> faces_;
};

/// Overlay of `a` and `b` in minimal position.
Arrangement minimal_position(const Triangulation& t, const Coords& a, const Coords& b);

/// Geometric intersection number of two multicurves.
Weight intersection_number(const Triangulation& t, const Coords& a, const Coords& b);

/// True when every complementary region of a ∪ b is a disk with at most one
/// puncture.
bool fills(const Triangulation& t, const Coords& a, const Coords& b);

/// An essential non-peripheral curve disjoint from both, taken from the
/// boundary of a region that is not a disk with at most one puncture;
/// std::nullopt exactly when the pair fills. The smallest candidate is
/// returned.
std::optional<CurveClass> disjoint_witness(const Triangulation& t, const Coords& a, const Coords& b);

}  // namespace coverlift
