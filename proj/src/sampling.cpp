#include "taf/sampling.hpp"

namespace taf {

PointSampler::PointSampler(const CantorSpace& space, std::uint64_t seed)
    : space_(&space), rng_(seed) {}

long PointSampler::uniform(long lo, long hi) {
  return std::uniform_int_distribution<long>(lo, hi)(rng_);
}

Point PointSampler::point(long max_left, long max_right) {
  Point x;
  const long left_len = uniform(0, max_left);
  for (long i = 1; i <= left_len; ++i) x.left.push_back(uniform(1, space_->digit_bound(-i)));
  const long right_len = uniform(0, max_right);
  for (long k = 1; k <= right_len; ++k) x.right.push_back(uniform(1, space_->digit_bound(k)));
  x.right_tail = uniform(0, 1) == 0 ? RightTail::ones : RightTail::max;
  return space_->canonical(std::move(x));
}

std::pair<Point, Point> PointSampler::tail_equivalent_pair(long max_left, long max_right) {
  Point x = point(max_left, max_right);
  Point y;
  const long left_len = uniform(0, max_left);
  for (long i = 1; i <= left_len; ++i) y.left.push_back(uniform(1, space_->digit_bound(-i)));
  const long right_len = uniform(0, max_right);
  for (long k = 1; k <= right_len; ++k) y.right.push_back(uniform(1, space_->digit_bound(k)));
  y.right_tail = x.right_tail;
  return {std::move(x), space_->canonical(std::move(y))};
}

}  // namespace taf
