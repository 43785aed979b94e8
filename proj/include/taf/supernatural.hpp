#pragma once

#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "taf/profile.hpp"

namespace taf {

/// Generalized integer: a finite map of primes to finite multiplicities together
/// with a finite set of primes of infinite multiplicity. The two key sets are
/// disjoint.
struct Supernatural {
  std::map<long, long> finite_part;
  std::set<long> infinite_primes;

  bool operator==(const Supernatural&) const = default;

  /// e.g. "2^inf * 3^2 * 7", or "1" when empty.
  std::string to_string() const;
};

/// Prime factorization by trial division, as (prime, multiplicity) pairs in
/// ascending order. n >= 1; factorize(1) is empty.
std::vector<std::pair<long, long>> factorize(long n);

/// The generalized integer term(1) * term(2) * ... of an eventually periodic
/// profile. A prime has infinite multiplicity exactly when it divides the cycle
/// product; other primes pick up their total multiplicity from the preamble.
Supernatural from_profile(const SequenceProfile& profile);

/// Componentwise multiplicity comparison, infinity dominating.
bool divides(const Supernatural& a, const Supernatural& b);

/// Ascending list of primes of infinite multiplicity in both arguments.
std::vector<long> common_infinite_primes(const Supernatural& r, const Supernatural& s);

/// True iff m*a = n*b for some positive integers m, n; for finitely supported
/// representations this is equality of the infinite parts.
bool finitely_equivalent(const Supernatural& a, const Supernatural& b);

}  // namespace taf
