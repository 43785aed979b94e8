#pragma once

#include <vector>

#include "taf/cantor.hpp"

namespace taf {

/// The solution of the invariance system at one window level: one weight per
/// window word, in lexicographic word order.
class InvariantMeasure {
 public:
  InvariantMeasure(long level, std::vector<long> radices, std::vector<Rat> weights);

  long level() const { return level_; }
  long cylinder_count() const { return static_cast<long>(weights_.size()); }

  const Rat& weight_at(long lex_index) const { return weights_.at(lex_index); }
  Rat weight(const Cylinder& c) const;

 private:
  long level_;
  std::vector<long> radices_;
  std::vector<Rat> weights_;
};

/// Solves, exactly, the linear system demanding equal weight for the two
/// coordinate projections of every basic G-set pair of window-`level` words,
/// normalized to total weight 1. The solution space before normalization must
/// be one-dimensional; anything else raises Error(degenerate_system). The
/// result coincides with the product of uniform digit measures.
InvariantMeasure unique_invariant_measure(const CantorSpace& space, long level);

/// All window words of the level, in lexicographic order.
std::vector<std::vector<long>> enumerate_words(const std::vector<long>& radices);

}  // namespace taf
