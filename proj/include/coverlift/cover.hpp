#pragma once

#include <string>
#include <vector>

#include "coverlift/curve.hpp"
#include "coverlift/random.hpp"

namespace coverlift {

/// Permutation in one-line form on sheets {0, ..., degree - 1}.
using Permutation = std::vector<int>;

/// A finite cover given by one sheet permutation per base edge: sheet k of
/// the edge's first side is glued to sheet perms[e][k] of its second side.
struct CoverSpec {
  int degree = 1;
  std::vector<Permutation> perms;

  static CoverSpec identity(const Triangulation& t, int degree);
};

/// Every problem with `spec` (bad degree, missing or non-bijective
/// permutations, disconnected total space); empty means usable.
std::vector<std::string> check_spec(const Triangulation& t, const CoverSpec& spec);

/// Uniformly random permutations, redrawn until the cover is connected.
CoverSpec random_cover_spec(const Triangulation& t, int degree, Rng& rng);

struct CoverTriangulation {
  Triangulation total;
  int degree = 1;
  // Total triangle i = sheet * base_triangles + base triangle.
  std::vector<int> triangle_base;
  std::vector<int> triangle_sheet;
  // Total edge j = base edge * degree + sheet of its first side.
  std::vector<int> edge_base;
};

/// Throws TopologyError when check_spec reports a problem.
CoverTriangulation build_cover(const Triangulation& t, const CoverSpec& spec);

/// Sheet permutation picked up by walking once around each puncture.
std::vector<Permutation> puncture_holonomy(const Triangulation& t, const CoverSpec& spec);
/// Sheet permutation picked up along a dual path.
Permutation path_holonomy(const Triangulation& t, const CoverSpec& spec, const DualPath& path);
int cycle_count(const Permutation& p);

/// The lift map: components of the full preimage of `a`, sorted. Each is
/// certified essential and non-peripheral.
std::vector<CurveClass> lift_curve(const CoverTriangulation& c, const CurveClass& a);
/// Preferred lift: the component whose canonical string is smallest.
CurveClass preferred_lift(const CoverTriangulation& c, const CurveClass& a);
/// Preferred lift of every vertex of a base path.
std::vector<CurveClass> lift_path(const CoverTriangulation& c, const std::vector<CurveClass>& path);

}  // namespace coverlift
