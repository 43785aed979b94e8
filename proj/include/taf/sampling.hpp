#pragma once

#include <random>
#include <vector>

#include "taf/cantor.hpp"

namespace taf {

/// Deterministic point sampler for property tests. All draws respect the
/// digit bounds of the space and produce canonical points.
class PointSampler {
 public:
  PointSampler(const CantorSpace& space, std::uint64_t seed);

  /// Canonical point with supports bounded by the given sizes; tail kind
  /// chosen at random.
  Point point(long max_left, long max_right);

  /// A pair (x, y) with identical tails beyond the window, hence tail
  /// equivalent.
  std::pair<Point, Point> tail_equivalent_pair(long max_left, long max_right);

  long uniform(long lo, long hi);

 private:
  const CantorSpace* space_;
  std::mt19937_64 rng_;
};

}  // namespace taf
