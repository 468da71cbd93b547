#include "coverlift/cusp_geometry.hpp"

#include <cmath>
#include <stdexcept>

namespace coverlift {

double lipschitz_constant(double delta, double delta_prime) {
  if (!(delta_prime > 0) || !(delta >= delta_prime)) {
    throw std::invalid_argument("lipschitz_constant needs 0 < delta' <= delta");
  }
  return std::sinh(delta) / std::sinh(delta_prime);
}

double epsilon_prime(double epsilon, int degree) {
  if (!(epsilon > 0)) throw std::invalid_argument("epsilon must be positive");
  if (degree < 1) throw std::invalid_argument("degree must be at least 1");
  return epsilon / degree;
}

double horosphere_height(double delta, double translation) {
  if (!(delta > 0) || !(translation > 0)) throw std::invalid_argument("horosphere_height needs positive inputs");
  return translation / (2 * std::sinh(delta));
}

PiecewisePath project_to_height(const PiecewisePath& path, double height) {
  PiecewisePath out = path;
  for (Point3& p : out) p.h = height;
  return out;
}

double geodesic_distance(const Point3& p, const Point3& q) {
  if (!(p.h > 0) || !(q.h > 0)) throw std::invalid_argument("heights must be positive");
  const double dx = q.x - p.x, dy = q.y - p.y, dh = q.h - p.h;
  return 2 * std::asinh(std::sqrt(dx * dx + dy * dy + dh * dh) / (2 * std::sqrt(p.h * q.h)));
}

double hyperbolic_length(const PiecewisePath& path) {
  double total = 0;
  for (const Point3& p : path) {
    if (!(p.h > 0)) throw std::invalid_argument("heights must be positive");
  }
  for (std::size_t i = 0; i + 1 < path.size(); ++i) total += geodesic_distance(path[i], path[i + 1]);
  return total;
}

double horospherical_length(const PiecewisePath& path) {
  double total = 0;
  for (std::size_t i = 0; i + 1 < path.size(); ++i) {
    if (path[i].h != path[i + 1].h || !(path[i].h > 0)) {
      throw std::invalid_argument("horospherical_length needs a path at one positive height");
    }
    total += std::hypot(path[i + 1].x - path[i].x, path[i + 1].y - path[i].y) / path[i].h;
  }
  return total;
}

double arc_apex(const Point3& p, const Point3& q) {
  const double w = std::hypot(q.x - p.x, q.y - p.y);
  if (w == 0) return std::max(p.h, q.h);
  // Semicircle centred on the boundary at horizontal offset c from p.
  const double c = (w * w + q.h * q.h - p.h * p.h) / (2 * w);
  const double radius = std::hypot(c, p.h);
  return (c > 0 && c < w) ? radius : std::max(p.h, q.h);
}

RetractionSample retract(const PiecewisePath& path) {
  for (const Point3& p : path) {
    if (p.h < 1) throw std::invalid_argument("retract needs every point at height >= 1");
  }
  return {hyperbolic_length(path), horospherical_length(project_to_height(path, 1.0))};
}

PiecewisePath random_slab_path(Rng& rng, double r, int points) {
  if (!(r > 1)) throw std::invalid_argument("random_slab_path needs r > 1");
  // Horizontal steps short enough that most arcs stay below height r.
  const double reach = std::sqrt(r * r - 1);
  PiecewisePath path;
  Point3 last{0, 0, 1};
  while (static_cast<int>(path.size()) < points) {
    Point3 p{last.x + (2 * uniform_unit(rng) - 1) * reach, last.y + (2 * uniform_unit(rng) - 1) * reach,
             1 + uniform_unit(rng) * (r - 1)};
    if (!path.empty() && arc_apex(last, p) >= r) continue;
    path.push_back(p);
    last = p;
  }
  return path;
}

}  // namespace coverlift
