#pragma once

#include <vector>

#include "coverlift/random.hpp"

namespace coverlift {

/// sinh(delta) / sinh(delta_prime); requires 0 < delta_prime <= delta.
double lipschitz_constant(double delta, double delta_prime);
/// epsilon / degree; requires epsilon > 0 and degree >= 1.
double epsilon_prime(double epsilon, int degree);

/// Height of the horosphere on which a parabolic of Euclidean translation
/// length `translation` has injectivity radius `delta`:
/// asinh(translation / (2 h)) = delta.
double horosphere_height(double delta, double translation);

/// Point of the upper half-space model; h > 0.
struct Point3 {
  double x = 0;
  double y = 0;
  double h = 1;
};

/// Points joined by hyperbolic geodesic arcs.
using PiecewisePath = std::vector<Point3>;

PiecewisePath project_to_height(const PiecewisePath& path, double height);

double geodesic_distance(const Point3& p, const Point3& q);
/// Sum of geodesic distances between consecutive points. Throws
/// std::invalid_argument on a non-positive height.
double hyperbolic_length(const PiecewisePath& path);
/// Length of a path on one horosphere, each step taken along the
/// horosphere: Euclidean length over height. All heights must agree.
double horospherical_length(const PiecewisePath& path);

/// Highest point of the geodesic arc from p to q.
double arc_apex(const Point3& p, const Point3& q);

struct RetractionSample {
  double geodesic = 0;   // hyperbolic length of the path
  double retracted = 0;  // length after pushing it down onto height 1
  double ratio() const { return geodesic > 0 ? retracted / geodesic : 0; }
};

/// Compares a path lying between the horospheres at heights 1 and R with its
/// vertical retraction onto height 1. Points must have height >= 1.
RetractionSample retract(const PiecewisePath& path);

/// Random path with `points` vertices whose geodesic arcs all stay in the
/// slab 1 <= h < r.
PiecewisePath random_slab_path(Rng& rng, double r, int points);

}  // namespace coverlift
