#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "coverlift/curve.hpp"

namespace coverlift {

struct DistanceBudget {
  Weight weight_bound = 3;  // intermediate curves are drawn from this universe
  int radius = 1;           // search depth beyond the first vertex
  int descent_steps = 8;    // twist-descent moves per start when the search fails
};

/// Interval [lower, upper] known to contain the true distance, with the
/// evidence for each end.
struct DistanceCertificate {
  enum class Reason { Equal, Distinct, Intersecting, Filling };

  int lower = 0;
  Reason lower_reason = Reason::Equal;
  std::optional<int> upper;       // nullopt: no path found within budget
  std::vector<CurveClass> path;   // witness for upper, from a to b

  bool exact() const { return upper && *upper == lower; }
};

std::string to_string(DistanceCertificate::Reason r);

/// Curve complex of a triangulated surface with complexity at least 2.
/// Keeps the weight-bounded curve universes it has enumerated.
class CurveComplex {
 public:
  explicit CurveComplex(const Triangulation& t);

  const Triangulation& triangulation() const { return tri_; }

  bool adjacent(const CurveClass& a, const CurveClass& b) const;
  /// Every vertex disjoint from and distinct from `a` with all weights at
  /// most `weight_bound`, sorted.
  std::vector<CurveClass> neighbors(const CurveClass& a, Weight weight_bound) const;
  /// `hint`, if given, is a candidate path from a to b; it is used as an
  /// upper bound when it verifies and beats the search.
  DistanceCertificate distance(const CurveClass& a, const CurveClass& b, const DistanceBudget& budget,
                               const std::vector<CurveClass>* hint = nullptr) const;
  bool verify_path(const std::vector<CurveClass>& path) const;

 private:
  const std::vector<CurveClass>& universe(Weight weight_bound) const;
  void check_vertex(const CurveClass& c) const;
  std::optional<std::vector<CurveClass>> descend(const CurveClass& a, const CurveClass& b, const DistanceBudget& budget) const;

  Triangulation tri_;
  mutable std::map<Weight, std::vector<CurveClass>> universes_;
};

}  // namespace coverlift
