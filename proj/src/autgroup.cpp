#include "taf/autgroup.hpp"

#include <algorithm>
#include <string>
#include <utility>

namespace taf {

namespace {

bool is_prime(long p) {
  if (p < 2) return false;
  const auto factors = factorize(p);
  return factors.size() == 1 && factors.front().second == 1;
}

constexpr long factor_bound = 1'000'000'000'000L;  // trial division stays desk-sized

}  // namespace

Rat ExponentVector::scaling() const {
  Rat c = 1;
  for (const auto& [p, e] : exponents) c *= pow_rat(Rat(p), e);
  return c;
}

ExponentVector exponent_vector(std::map<long, long> exponents) {
  std::erase_if(exponents, [](const auto& entry) { return entry.second == 0; });
  for (const auto& [p, e] : exponents)
    if (!is_prime(p))
      raise(Errc::invalid_scaling, "exponent key " + std::to_string(p) + " is not prime");
  return ExponentVector{std::move(exponents)};
}

ExponentVector exponent_compose(const ExponentVector& a, const ExponentVector& b) {
  std::map<long, long> sum = a.exponents;
  for (const auto& [p, e] : b.exponents) sum[p] += e;
  return exponent_vector(std::move(sum));
}

ExponentVector exponents_of(const Rat& c) {
  if (c <= 0) raise(Errc::invalid_scaling, "scaling " + fraction_string(c) + " is not positive");
  const Int num = numerator(c), den = denominator(c);
  if (num > factor_bound || den > factor_bound)
    raise(Errc::invalid_scaling, "scaling " + fraction_string(c) + " is too large to factor");
  std::map<long, long> exponents;
  for (auto [p, e] : factorize(static_cast<long>(num))) exponents[p] += e;
  for (auto [p, e] : factorize(static_cast<long>(den))) exponents[p] -= e;
  return exponent_vector(std::move(exponents));
}

OutRank out_rank(const SequenceProfile& r, const SequenceProfile& s) {
  OutRank result;
  result.primes = common_infinite_primes(from_profile(r), from_profile(s));
  result.d = static_cast<long>(result.primes.size());
  return result;
}

SequenceProfile refactor_products(const SequenceProfile& profile, long p) {
  if (!from_profile(profile).infinite_primes.contains(p))
    raise(Errc::prime_not_infinite,
          std::to_string(p) + " does not have infinite multiplicity in the product");
  std::vector<long> preamble;
  for (long e : profile.preamble()) {
    preamble.push_back(p);  // extra p factors are absorbed by the infinite multiplicity
    preamble.push_back(e);
  }
  const Int q = profile.cycle_product() / p;
  std::vector<long> cycle;
  if (q == 1) {
    cycle = {p};
  } else if (q <= SequenceProfile::max_entry) {
    cycle = {p, static_cast<long>(q)};
  } else {
    for (long e : profile.cycle()) {
      cycle.push_back(p);
      cycle.push_back(e);
    }
  }
  return SequenceProfile(std::move(preamble), std::move(cycle));
}

GapChart gap_chart(const CantorSpace& space, const Point& g0, long stage) {
  const Point g = space.canonical(g0);
  if (g.right_tail != RightTail::max)
    raise(Errc::wrong_shape, "a chart needs a max-tail point");
  const long minimal = space.max_support(g) + 1;
  long t = stage == 0 ? minimal : stage;
  if (t < minimal)
    raise(Errc::wrong_shape, "stage " + std::to_string(stage) + " does not cover the support (needs " +
                                 std::to_string(minimal) + ")");
  GapChart chart;
  chart.t = t;
  chart.word = space.window_word(g, t - 1);
  chart.interval_count = word_rank(chart.word, space.window_radices(t - 1)) + 1;
  chart.scaling = Rat(chart.interval_count, space.m(t - 1));
  return chart;
}

Point alpha_on_point(const CantorSpace& space, const ExponentVector& c, const Point& x0) {
  const auto common =
      common_infinite_primes(from_profile(space.r_profile()), from_profile(space.s_profile()));
  for (const auto& [p, e] : c.exponents)
    if (e != 0 && !std::binary_search(common.begin(), common.end(), p))
      raise(Errc::invalid_scaling,
            "prime " + std::to_string(p) + " is not of infinite multiplicity in both products");
  const Point x = space.canonical(x0);
  const auto points = space.value_to_points(c.scaling() * space.nu(x));
  // ones-tail images are ones-tail; max-tail inputs have positive value, so the twin exists
  return x.right_tail == RightTail::ones ? points.front() : points.back();
}

Point zigzag_image(const DirectSystem& sys, long p, const Point& x0, long level) {
  const CantorSpace& space = sys.space();
  const Point x = space.canonical(x0);
  if (level < 2 || level % 2 != 0)
    raise(Errc::wrong_shape, "the zig-zag reroutes at even levels");
  if (x.right_tail != RightTail::ones)
    raise(Errc::wrong_shape, "the zig-zag acts on ones-tail points");
  if (space.max_support(x) > level)
    raise(Errc::level_too_small, "point support exceeds level " + std::to_string(level));
  if (space.r_profile().term(level + 1) != p)
    raise(Errc::wrong_shape, "term " + std::to_string(level + 1) + " is " +
                                 std::to_string(space.r_profile().term(level + 1)) + ", not " +
                                 std::to_string(p) + "; refactor the product first");

  const LexPosition pos = lex_position(sys, x, level);
  auto radices = space.window_radices(level);
  radices.push_back(p);

  Point best;
  bool have_best = false;
  for (long k = 0; k < p; ++k) {
    const Int rank0 = (pos.position - 1) + Int(k) * pos.stage_size;
    const auto word = decode_rank(rank0, radices);
    Point cand;
    for (long i = 1; i <= level; ++i)
      cand.left.push_back(word[static_cast<std::size_t>(level - i)]);
    for (long j = 0; j <= level; ++j)
      cand.right.push_back(word[static_cast<std::size_t>(level + j)]);
    cand = space.canonical(std::move(cand));
    if (!have_best || space.lex_leq(cand, best)) {
      best = std::move(cand);
      have_best = true;
    }
  }
  return best;
}

std::optional<DensityWitness> density_witness(const CantorSpace& space, const Rat& c,
                                              const Point& base_point, long depth,
                                              const SearchBounds& bounds) {
  if (c <= 0) raise(Errc::invalid_scaling, "scaling must be positive");
  if (depth < 0) raise(Errc::wrong_shape, "negative depth");
  const Point base = space.canonical(base_point);
  const Rat nu0 = space.nu(base);
  const Rat period = Rat(space.s_profile().partial_product(depth));
  const Rat stride = c * Rat(space.s_profile().term(1));
  for (long k = 0; k <= bounds.k_max; ++k) {
    const Rat lo = stride * k;
    Int m = ceil_rat((lo - nu0) / period);
    if (m < 0) m = 0;
    const Rat value = nu0 + Rat(m) * period;
    if (m <= bounds.m_max && value <= lo + c)
      return DensityWitness{base, depth, Int(k), m, value};
  }
  return std::nullopt;
}

bool witness_valid(const CantorSpace& space, const Rat& c, const DensityWitness& w) {
  if (c <= 0 || w.depth < 0 || w.k < 0 || w.m < 0) return false;
  const Rat nu0 = space.nu(w.base_point);
  const Rat period = Rat(space.s_profile().partial_product(w.depth));
  if (w.value != nu0 + Rat(w.m) * period) return false;
  const Rat lo = c * Rat(w.k) * Rat(space.s_profile().term(1));
  return lo <= w.value && w.value <= lo + c;
}

std::vector<std::pair<long, std::optional<DensityWitness>>> density_sweep(
    const CantorSpace& space, const Rat& c, const Point& base_point, const SearchBounds& bounds) {
  std::vector<std::pair<long, std::optional<DensityWitness>>> results;
  for (long j = 0; j <= bounds.j_max; ++j)
    results.emplace_back(j, density_witness(space, c, base_point, j, bounds));
  return results;
}

FiberTuple fiber_ones(long dim) {
  if (dim < 1) raise(Errc::wrong_shape, "fiber dimension must be positive");
  return FiberTuple(static_cast<std::size_t>(dim), Coefficient::one());
}

FiberTuple fiber_mul(const FiberTuple& x, const FiberTuple& y) {
  if (x.size() != y.size()) raise(Errc::size_mismatch, "fiber dimensions differ");
  FiberTuple prod(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) prod[i] = x[i] * y[i];
  return prod;
}

bool fiber_invertible(const FiberTuple& x) {
  return std::none_of(x.begin(), x.end(), [](const Coefficient& c) { return c.is_zero(); });
}

InnerWitness inner_witness(long size, long fiber_dim, const std::vector<FiberTuple>& offdiag) {
  if (size < 1) raise(Errc::wrong_shape, "size must be positive");
  if (static_cast<long>(offdiag.size()) != size - 1)
    raise(Errc::size_mismatch, "need exactly " + std::to_string(size - 1) + " fiber tuples");
  for (const FiberTuple& u : offdiag) {
    if (static_cast<long>(u.size()) != fiber_dim)
      raise(Errc::size_mismatch, "fiber tuple length != fiber dimension");
    if (!fiber_invertible(u)) raise(Errc::not_invertible, "fiber tuple with a zero entry");
  }

  InnerWitness w;
  w.size = size;
  w.fiber_dim = fiber_dim;
  w.diagonal.push_back(fiber_ones(fiber_dim));  // u_0 = 1
  for (long i = 1; i < size; ++i)
    w.diagonal.push_back(fiber_mul(w.diagonal.back(), offdiag[static_cast<std::size_t>(i - 1)]));
  w.max_entry_norm_sq = 0;
  for (const FiberTuple& d : w.diagonal)
    for (const Coefficient& entry : d) w.max_entry_norm_sq = std::max(w.max_entry_norm_sq, entry.norm_sq());

  // conjugation identity, checked per fiber coordinate in the unit algebra
  for (long f = 0; f < fiber_dim; ++f) {
    const TriElement u = diagonal(size, [&](long i) { return w.diagonal[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(f)]; });
    const TriElement u_inv = diagonal(size, [&](long i) {
      return w.diagonal[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(f)].inverse();
    });
    for (const MatrixUnit& e : all_units(size)) {
      const TriElement got = u_inv * TriElement::unit(e) * u;
      const FiberTuple factor = inner_gamma_factor(w, offdiag, e);
      const TriElement want = TriElement::unit(e, factor[static_cast<std::size_t>(f)]);
      if (got != want)
        raise(Errc::degenerate_system, "conjugation identity failed at fiber " + std::to_string(f));
    }
  }
  return w;
}

FiberTuple inner_gamma_factor(const InnerWitness& w, const std::vector<FiberTuple>& offdiag,
                              const MatrixUnit& e) {
  if (e.size != w.size) raise(Errc::size_mismatch, "unit size != witness size");
  FiberTuple factor = fiber_ones(w.fiber_dim);
  for (long i = e.row; i < e.col; ++i) factor = fiber_mul(factor, offdiag[static_cast<std::size_t>(i - 1)]);
  return factor;
}

TriElement root_diagonal_conjugate(const TriElement& x) {
  const long size = x.size();
  const TriElement d = diagonal(size, [](long i) { return Coefficient::omega_pow(i); });
  const TriElement d_inv = diagonal(size, [](long i) { return Coefficient::omega_pow(-i); });
  return d * x * d_inv;
}

TriElement iterate_standard_doubling(const TriElement& x, long times) {
  if (times < 0) raise(Errc::level_order, "negative iteration count");
  TriElement image = x;
  for (long i = 0; i < times; ++i) image = apply_step(standard(2, image.size()), image);
  return image;
}

StabilizationReport remark2_check(long n, long m, const MatrixUnit& a) {
  if (!(1 <= n && n < m)) raise(Errc::level_order, "need m > n >= 1");
  if (m > 20) raise(Errc::level_too_large, "2^m exceeds the supported matrix size");
  const long size_n = 1L << n;
  const long size_m = 1L << m;
  if (a.size != size_n)
    raise(Errc::size_mismatch, "unit lives in size " + std::to_string(a.size) + ", expected " +
                                   std::to_string(size_n));

  const TriElement via_small = iterate_standard_doubling(root_diagonal_conjugate(TriElement::unit(a)), m - n);
  const TriElement via_large = root_diagonal_conjugate(iterate_standard_doubling(TriElement::unit(a), m - n));
  if (via_small != via_large)
    raise(Errc::degenerate_system, "conjugation does not stabilize along the standard embeddings");

  // any period-2^n diagonal h has h_i = h_{i+2^n}, so h e h^{-1} keeps the
  // coefficient of e = e_{1,1+2^n}; the separation from we is |w - 1|^2
  const TriElement h = diagonal(size_m, [&](long i) { return Coefficient(Rat((i - 1) % size_n + 1), Rat(0)); });
  const TriElement h_inv = diagonal(size_m, [&](long i) {
    return Coefficient(Rat((i - 1) % size_n + 1), Rat(0)).inverse();
  });
  const MatrixUnit e = make_unit(1, 1 + size_n, size_m);
  const TriElement conjugated = h * TriElement::unit(e) * h_inv;
  const Coefficient difference = Coefficient::omega() - conjugated.coefficient(e);

  return StabilizationReport{via_small, difference.norm_sq()};
}

}  // namespace taf
