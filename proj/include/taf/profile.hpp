#pragma once

#include <vector>

#include "taf/rational.hpp"

namespace taf {

/// Eventually periodic sequence of positive integers: a finite preamble followed
/// by a cycle that repeats forever. The cycle product must be at least 2, so the
/// sequence is never eventually constant 1.
class SequenceProfile {
 public:
  SequenceProfile(std::vector<long> preamble, std::vector<long> cycle);

  /// k-th term, k >= 1.
  long term(long k) const;

  /// term(1) * ... * term(k); the empty product for k = 0.
  Int partial_product(long k) const;

  Int cycle_product() const;

  const std::vector<long>& preamble() const { return preamble_; }
  const std::vector<long>& cycle() const { return cycle_; }

  bool operator==(const SequenceProfile&) const = default;

  // entries are factorized by trial division, so keep them desk-sized
  static constexpr long max_entry = 1'000'000;

 private:
  std::vector<long> preamble_;
  std::vector<long> cycle_;
};

}  // namespace taf
