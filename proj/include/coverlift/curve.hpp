#pragma once

#include <array>
#include <compare>
#include <string>
#include <vector>

#include "coverlift/triangulation.hpp"

namespace coverlift {

/// Normal coordinates of a multicurve: one weight per edge, indexed by edge id.
using Coords = std::vector<Weight>;

struct Violation {
  enum class Kind { Size, Negative, Parity, TriangleInequality };
  Kind kind;
  int triangle = -1;  // -1 for whole-vector problems
  std::string message;
};

/// Every matching-condition failure of `w`; empty means valid.
std::vector<Violation> validate(const Triangulation& t, const Coords& w);
inline bool is_valid(const Triangulation& t, const Coords& w) { return validate(t, w).empty(); }

/// Number of normal arcs cutting off each corner of triangle `tri`.
std::array<Weight, 3> corner_counts(const Triangulation& t, const Coords& w, int tri);

/// Cyclic dual path of a connected normal curve: the side through which the
/// curve leaves each triangle it passes, in order of traversal.
using DualPath = std::vector<Side>;

struct Component {
  Coords coords;
  DualPath path;
};

/// Connected components, sorted by coordinates. Throws on invalid input.
std::vector<Component> decompose(const Triangulation& t, const Coords& w);
std::vector<Coords> components(const Triangulation& t, const Coords& w);

/// Edge weights of a dual path (each exit crosses one edge once).
Coords coords_of_path(const Triangulation& t, const DualPath& path);

/// Cancels every leave-and-return-through-the-same-edge pair, cyclically.
/// The result is the dual path of the normal representative (empty when the
/// curve bounds a disk).
DualPath reduce_path(const Triangulation& t, DualPath path);

enum class CurveKind { Essential, Peripheral };

/// Throws TopologyError unless `w` is a single connected normal curve.
CurveKind classify(const Triangulation& t, const Coords& w);

bool is_zero(const Coords& w);

/// Vertex of the curve complex: one connected essential non-peripheral curve.
/// Equality and ordering are those of the coordinate vector, which is
/// injective on isotopy classes for a fixed triangulation.
class CurveClass {
 public:
  /// Throws TopologyError unless `w` is valid, connected, nonzero and not a
  /// puncture link.
  static CurveClass certify(const Triangulation& t, Coords w);
  /// Skips certification; for data already produced by certified operations.
  static CurveClass trusted(Coords w) { return CurveClass(std::move(w)); }

  const Coords& coords() const { return coords_; }
  /// Byte-stable serialized form, e.g. "[0,1,1,2]".
  std::string canonical() const;

  friend bool operator==(const CurveClass&, const CurveClass&) = default;
  friend auto operator<=>(const CurveClass&, const CurveClass&) = default;

 private:
  explicit CurveClass(Coords w) : coords_(std::move(w)) {}
  Coords coords_;
};

/// Every curve class whose weights are all at most `max_weight`, sorted.
std::vector<CurveClass> enumerate_curves(const Triangulation& t, Weight max_weight);

}  // namespace coverlift
