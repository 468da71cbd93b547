#pragma once

#include <cstdint>

#include "coverlift/curve.hpp"

namespace coverlift {

/// Image of `a` under the n-th power of the Dehn twist about `b`.
///
/// Computed by surgery on the minimal-position overlay: walking along a, the
/// walk turns onto b at every crossing (right for n > 0, left for n < 0),
/// runs |n| times around b and resumes a. The result is pulled tight by
/// cancelling backtracks in its dual path.
CurveClass dehn_twist(const Triangulation& t, const CurveClass& a, const CurveClass& b, int n);

/// Image of `c` under a pseudo-random mapping class determined by
/// (seed, steps) alone: a product of `steps` twists, each of power ±1, about
/// curves drawn from the weight-2 curves of `t`. steps = 0 is the identity.
CurveClass mutate(const Triangulation& t, const CurveClass& c, std::uint64_t seed, int steps);

}  // namespace coverlift
