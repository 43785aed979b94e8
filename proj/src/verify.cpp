#include "taf/verify.hpp"

#include <algorithm>
#include <exception>

#include "taf/autgroup.hpp"
#include "taf/matrix_units.hpp"
#include "taf/measure.hpp"
#include "taf/sampling.hpp"

namespace taf {

namespace {

CheckResult commutation_check(const SequenceProfile& r, const SequenceProfile& s, long level) {
  CheckResult result{"embedding_commutation", true, ""};
  long size = 1, stages = 0;
  for (long k = 1; k <= level; ++k) {
    const long rk = r.term(k), sk = s.term(k);
    if (size * rk * sk > 128) break;
    for (const MatrixUnit& e : all_units(size)) {
      const EmbeddingStep first[] = {refinement(rk, size), standard(sk, size * rk)};
      const EmbeddingStep flipped[] = {standard(sk, size), refinement(rk, size * sk)};
      if (compose_chain(first, e) != compose_chain(flipped, e)) {
        result.passed = false;
        result.detail = "mismatch at stage " + std::to_string(k) + " on e[" +
                        std::to_string(e.row) + "," + std::to_string(e.col) + "]";
        return result;
      }
    }
    size *= rk * sk;
    ++stages;
  }
  result.detail = std::to_string(stages) + " stage(s) checked exhaustively";
  return result;
}

CheckResult relation_check(const DirectSystem& sys, const VerifyOptions& opts) {
  CheckResult result{"relation_oracle", true, ""};
  const CantorSpace& space = sys.space();
  PointSampler sampler(space, opts.seed);
  long comparisons = 0;
  for (long trial = 0; trial < opts.samples; ++trial) {
    const auto [x, y] = sampler.tail_equivalent_pair(opts.level, opts.level);
    const long support = std::max(space.max_support(x), space.max_support(y));
    const bool forward = space.in_R(x, y), backward = space.in_R(y, x);
    for (long n = support + 1; n <= support + 3; ++n) {
      if (mu_in_R(sys, x, y, n) != forward || mu_in_R(sys, y, x, n) != backward) {
        result.passed = false;
        result.detail = "coordinate and matrix-unit relations disagree at level " + std::to_string(n);
        return result;
      }
      comparisons += 2;
    }
  }
  result.detail = std::to_string(comparisons) + " window comparisons agree";
  return result;
}

CheckResult measure_check(const CantorSpace& space, const VerifyOptions& opts) {
  CheckResult result{"measure_uniqueness", true, ""};
  long solved = 0;
  try {
    for (long n = 1; n <= std::min(opts.level, 3L); ++n) {
      Int words = 1;
      for (long b : space.window_radices(n)) words *= b;
      if (words > 2'000) break;
      const InvariantMeasure measure = unique_invariant_measure(space, n);
      Rat total = 0;
      for (long i = 0; i < measure.cylinder_count(); ++i) total += measure.weight_at(i);
      if (total != 1) {
        result.passed = false;
        result.detail = "weights at level " + std::to_string(n) + " sum to " + fraction_string(total);
        return result;
      }
      ++solved;
    }
  } catch (const Error& err) {
    result.passed = false;
    result.detail = err.what();
    return result;
  }
  if (solved == 0) {
    result.passed = false;
    result.detail = "no level small enough for the dense solver";
    return result;
  }
  result.detail = std::to_string(solved) + " level(s) with a one-dimensional solution";
  return result;
}

CheckResult gap_check(const CantorSpace& space, const VerifyOptions& opts) {
  CheckResult result{"gap_laws", true, ""};
  PointSampler sampler(space, opts.seed + 1);
  for (long trial = 0; trial < opts.samples; ++trial) {
    Point g = sampler.point(opts.level, opts.level);
    g.right_tail = RightTail::max;
    g = space.canonical(std::move(g));
    const Point succ = space.gap_successor(g);
    const bool laws = space.nu(g) == space.nu(succ) && space.gap_predecessor(succ) == g &&
                      !space.closure_member(succ, g) && space.closure_member(g, succ);
    if (!laws) {
      result.passed = false;
      result.detail = "successor laws fail near trial " + std::to_string(trial);
      return result;
    }
    std::vector<Point> probes{g, succ, ones_point()};
    for (long extra = 0; extra < 4; ++extra) probes.push_back(sampler.point(opts.level, opts.level));
    for (const Point& z : probes) {
      // the closed orbit grows by exactly the successor point
      const bool lhs = space.closure_member(z, succ);
      const bool rhs = space.closure_member(z, g) || z == succ;
      if (lhs != rhs) {
        result.passed = false;
        result.detail = "closure identity fails at trial " + std::to_string(trial);
        return result;
      }
    }
  }
  result.detail = std::to_string(opts.samples) + " gap pairs obey the laws";
  return result;
}

CheckResult zigzag_check(const SequenceProfile& r, const SequenceProfile& s,
                         const VerifyOptions& opts) {
  CheckResult result{"zigzag_alpha", true, ""};
  const auto primes = common_infinite_primes(from_profile(r), from_profile(s));
  if (primes.empty()) {
    result.detail = "no common infinite primes: no generators to check";
    return result;
  }
  long agreements = 0;
  for (long p : primes) {
    const DirectSystem sys(refactor_products(r, p), s);
    const CantorSpace& space = sys.space();
    const ExponentVector inverse_p = exponent_vector({{p, -1}});
    PointSampler sampler(space, opts.seed + 2);
    for (long n : {2L, 4L}) {
      for (long trial = 0; trial < opts.samples; ++trial) {
        Point x = sampler.point(n, n);
        x.right_tail = RightTail::ones;
        x = space.canonical(std::move(x));
        const Point via_zigzag = zigzag_image(sys, p, x, n);
        const Point via_alpha = alpha_on_point(space, inverse_p, x);
        if (via_zigzag != via_alpha || space.nu(via_zigzag) * p != space.nu(x)) {
          result.passed = false;
          result.detail = "zig-zag and valuation scaling disagree for p = " + std::to_string(p);
          return result;
        }
        ++agreements;
      }
    }
  }
  result.detail = std::to_string(agreements) + " zig-zag images match the valuation scaling";
  return result;
}

}  // namespace

std::vector<CheckResult> run_verification(const SequenceProfile& r, const SequenceProfile& s,
                                          const VerifyOptions& opts) {
  const DirectSystem sys(r, s);
  std::vector<CheckResult> checks;
  checks.push_back(commutation_check(r, s, opts.level));
  checks.push_back(relation_check(sys, opts));
  checks.push_back(measure_check(sys.space(), opts));
  checks.push_back(gap_check(sys.space(), opts));
  checks.push_back(zigzag_check(r, s, opts));
  return checks;
}

bool all_passed(const std::vector<CheckResult>& checks) {
  return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.passed; });
}

}  // namespace taf
