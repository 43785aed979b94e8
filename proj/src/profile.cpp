#include "taf/profile.hpp"

#include <string>

#include "taf/error.hpp"

namespace taf {

namespace {

void check_entries(const std::vector<long>& v, const char* part) {
  for (long e : v) {
    if (e < 1)
      raise(Errc::invalid_profile, std::string(part) + " entry " + std::to_string(e) + " < 1");
    if (e > SequenceProfile::max_entry)
      raise(Errc::invalid_profile,
            std::string(part) + " entry " + std::to_string(e) + " exceeds the factorization bound");
  }
}

}  // namespace

SequenceProfile::SequenceProfile(std::vector<long> preamble, std::vector<long> cycle)
    : preamble_(std::move(preamble)), cycle_(std::move(cycle)) {
  check_entries(preamble_, "preamble");
  check_entries(cycle_, "cycle");
  if (cycle_.empty()) raise(Errc::invalid_profile, "empty cycle");
  if (cycle_product() < 2) raise(Errc::invalid_profile, "cycle product 1: sequence eventually constant 1");
}

long SequenceProfile::term(long k) const {
  if (k < 1) raise(Errc::invalid_profile, "term index " + std::to_string(k) + " < 1");
  const long p = static_cast<long>(preamble_.size());
  if (k <= p) return preamble_[static_cast<std::size_t>(k - 1)];
  return cycle_[static_cast<std::size_t>((k - 1 - p) % static_cast<long>(cycle_.size()))];
}

Int SequenceProfile::partial_product(long k) const {
  Int prod = 1;
  for (long i = 1; i <= k; ++i) prod *= term(i);
  return prod;
}

Int SequenceProfile::cycle_product() const {
  Int prod = 1;
  for (long e : cycle_) prod *= e;
  return prod;
}

}  // namespace taf
