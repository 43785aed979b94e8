#pragma once

#include <string>
#include <vector>

#include "taf/cantor.hpp"
#include "taf/embeddings.hpp"
#include "taf/profile.hpp"

namespace taf {

struct CheckResult {
  std::string name;
  bool passed = false;
  std::string detail;
};

struct VerifyOptions {
  long level = 3;
  std::uint64_t seed = 20260823;
  long samples = 24;
};

/// Cross-checks the structural claims of one pair of profiles at a finite
/// level: embedding commutation, the order relation against its
/// matrix-position oracle, uniqueness of the invariant measure, the gap
/// successor laws, and the zig-zag action against direct valuation scaling.
std::vector<CheckResult> run_verification(const SequenceProfile& r, const SequenceProfile& s,
                                          const VerifyOptions& opts = {});

bool all_passed(const std::vector<CheckResult>& checks);

}  // namespace taf
