#pragma once

// Independent re-computations used as oracles: each one recomputes a quantity
// from the raw coordinate function instead of the trimmed digit lists.

#include <vector>

#include "taf/cantor.hpp"
#include "taf/embeddings.hpp"
#include "taf/measure.hpp"

namespace taf::oracle {

/// Valuation by direct series summation over coordinates, with the exact
/// telescoped remainder 1/m_K for a max tail.
inline Rat nu(const CantorSpace& space, const Point& x) {
  const long depth = space.max_support(x) + 2;
  Rat total = 0;
  for (long i = 1; i <= depth; ++i)
    total += Rat(space.coord(x, -i) - 1) * Rat(space.left_weight(i));
  for (long k = 1; k <= depth; ++k) total += Rat(space.coord(x, k) - 1) / Rat(space.m(k));
  if (x.right_tail == RightTail::max) total += Rat(1) / Rat(space.m(depth));
  return total;
}

/// Lexicographic comparison over an explicit window, most significant
/// coordinate first; ties beyond the window break by tail kind.
inline bool lex_leq(const CantorSpace& space, const Point& x, const Point& y) {
  const long depth = std::max(space.max_support(x), space.max_support(y)) + 1;
  for (long i = depth; i >= 1; --i) {
    if (space.coord(x, -i) != space.coord(y, -i)) return space.coord(x, -i) < space.coord(y, -i);
  }
  for (long k = 1; k <= depth; ++k) {
    if (space.coord(x, k) != space.coord(y, k)) return space.coord(x, k) < space.coord(y, k);
  }
  return x.right_tail == RightTail::ones || y.right_tail == RightTail::max;
}

/// Position of a window word by brute enumeration of all words in
/// lexicographic order; 1-based like lex_position.
inline long position(const CantorSpace& space, const Point& x, long level) {
  const auto target = space.window_word(x, level);
  const auto words = enumerate_words(space.window_radices(level));
  for (std::size_t i = 0; i < words.size(); ++i)
    if (words[i] == target) return static_cast<long>(i) + 1;
  return -1;
}

/// Product measure of a window cylinder straight from the digit bounds.
inline Rat cylinder_measure(const CantorSpace& space, long level) {
  Rat total = 1;
  for (long b : space.window_radices(level)) total /= b;
  return total;
}

}  // namespace taf::oracle
