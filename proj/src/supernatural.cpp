#include "taf/supernatural.hpp"

#include <algorithm>

#include "taf/error.hpp"

namespace taf {

std::string Supernatural::to_string() const {
  std::string out;
  auto append = [&out](long p, const std::string& exp) {
    if (!out.empty()) out += " * ";
    out += std::to_string(p);
    if (!exp.empty()) out += "^" + exp;
  };
  auto fin = finite_part.begin();
  auto inf = infinite_primes.begin();
  while (fin != finite_part.end() || inf != infinite_primes.end()) {
    if (inf == infinite_primes.end() || (fin != finite_part.end() && fin->first < *inf)) {
      append(fin->first, fin->second == 1 ? "" : std::to_string(fin->second));
      ++fin;
    } else {
      append(*inf, "inf");
      ++inf;
    }
  }
  return out.empty() ? "1" : out;
}

std::vector<std::pair<long, long>> factorize(long n) {
  if (n < 1) raise(Errc::invalid_profile, "factorize expects n >= 1");
  std::vector<std::pair<long, long>> factors;
  for (long p = 2; p * p <= n; ++p) {
    if (n % p) continue;
    long mult = 0;
    while (n % p == 0) {
      n /= p;
      ++mult;
    }
    factors.emplace_back(p, mult);
  }
  if (n > 1) factors.emplace_back(n, 1);
  return factors;
}

Supernatural from_profile(const SequenceProfile& profile) {
  Supernatural result;
  for (long e : profile.cycle())
    for (auto [p, mult] : factorize(e)) result.infinite_primes.insert(p);
  for (long e : profile.preamble())
    for (auto [p, mult] : factorize(e))
      if (!result.infinite_primes.contains(p)) result.finite_part[p] += mult;
  return result;
}

bool divides(const Supernatural& a, const Supernatural& b) {
  for (long p : a.infinite_primes)
    if (!b.infinite_primes.contains(p)) return false;
  for (auto [p, mult] : a.finite_part) {
    if (b.infinite_primes.contains(p)) continue;
    auto it = b.finite_part.find(p);
    if (it == b.finite_part.end() || it->second < mult) return false;
  }
  return true;
}

std::vector<long> common_infinite_primes(const Supernatural& r, const Supernatural& s) {
  std::vector<long> primes;
  std::set_intersection(r.infinite_primes.begin(), r.infinite_primes.end(),
                        s.infinite_primes.begin(), s.infinite_primes.end(),
                        std::back_inserter(primes));
  return primes;
}

bool finitely_equivalent(const Supernatural& a, const Supernatural& b) {
  return a.infinite_primes == b.infinite_primes;
}

}  // namespace taf
