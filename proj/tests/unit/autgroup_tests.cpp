#include <doctest.h>

#include "taf/autgroup.hpp"
#include "taf/sampling.hpp"

using namespace taf;

namespace {

const CantorSpace& space66() {
  static const CantorSpace s(SequenceProfile({}, {6}), SequenceProfile({}, {6}));
  return s;
}

}  // namespace

TEST_CASE("exponent vectors factor and recompose scalings") {
  CHECK(exponents_of(Rat(1, 2)).exponents == std::map<long, long>{{2, -1}});
  CHECK(exponents_of(Rat(8, 9)).exponents == std::map<long, long>{{2, 3}, {3, -2}});
  CHECK(exponents_of(Rat(1)).exponents.empty());
  CHECK(exponents_of(Rat(8, 9)).scaling() == Rat(8, 9));
  CHECK_THROWS_AS(exponents_of(Rat(0)), Error);
  CHECK_THROWS_AS(exponents_of(Rat(-2)), Error);
  CHECK_THROWS_AS(exponent_vector({{4, 1}}), Error);
  CHECK(exponent_vector({{2, 0}, {3, 1}}).exponents == std::map<long, long>{{3, 1}});

  const ExponentVector a = exponents_of(Rat(2)), b = exponents_of(Rat(3, 2));
  CHECK(exponent_compose(a, b) == exponents_of(Rat(3)));
  CHECK(exponent_compose(a, b).scaling() == Rat(3));
}

TEST_CASE("outer rank counts common infinite primes") {
  CHECK(out_rank(SequenceProfile({}, {2}), SequenceProfile({}, {2})).d == 1);
  CHECK(out_rank(SequenceProfile({}, {2}), SequenceProfile({}, {3})).d == 0);
  const OutRank rank = out_rank(SequenceProfile({}, {6}), SequenceProfile({}, {2, 3}));
  CHECK(rank.d == 2);
  CHECK(rank.primes == std::vector<long>{2, 3});
  // finite preamble factors never contribute
  CHECK(out_rank(SequenceProfile({2}, {3}), SequenceProfile({}, {2})).d == 0);
}

TEST_CASE("refactored products alternate the chosen prime") {
  CHECK(refactor_products(SequenceProfile({}, {2}), 2) == SequenceProfile({}, {2}));
  CHECK(refactor_products(SequenceProfile({}, {6}), 2) == SequenceProfile({}, {2, 3}));
  CHECK(refactor_products(SequenceProfile({}, {4, 3}), 2) == SequenceProfile({}, {2, 6}));
  CHECK(refactor_products(SequenceProfile({2, 5}, {3}), 3) ==
        SequenceProfile({3, 2, 3, 5}, {3}));
  CHECK_THROWS_AS(refactor_products(SequenceProfile({}, {2}), 3), Error);
  try {
    refactor_products(SequenceProfile({}, {2}), 3);
  } catch (const Error& err) {
    CHECK(err.code() == Errc::prime_not_infinite);
  }

  SUBCASE("odd positions carry p and the supernatural is unchanged") {
    for (const SequenceProfile& p :
         {SequenceProfile({}, {6}), SequenceProfile({}, {4, 3}), SequenceProfile({2, 5}, {6})}) {
      const SequenceProfile q = refactor_products(p, 2);
      for (long k = 1; k <= 9; k += 2) CHECK(q.term(k) == 2);
      CHECK(from_profile(q) == from_profile(p));
    }
  }
}

TEST_CASE("gap charts recover the scaling from the boundary word") {
  const CantorSpace sp(SequenceProfile({}, {2}), SequenceProfile({}, {3}));
  Point g;
  g.right_tail = RightTail::max;

  const GapChart minimal = gap_chart(sp, g);
  CHECK(minimal.t == 1);
  CHECK(minimal.word.empty());
  CHECK(minimal.interval_count == 1);
  CHECK(minimal.scaling == Rat(1));

  const GapChart staged = gap_chart(sp, g, 2);
  CHECK(staged.t == 2);
  CHECK(staged.word == std::vector<long>{1, 2});
  CHECK(staged.interval_count == 2);
  CHECK(staged.scaling == Rat(1));

  Point h;
  h.left = {2};
  h.right_tail = RightTail::max;
  const GapChart two = gap_chart(sp, h);
  CHECK(two.t == 2);
  CHECK(two.word == std::vector<long>{2, 2});
  CHECK(two.interval_count == 4);
  CHECK(two.scaling == Rat(2));

  CHECK_THROWS_AS(gap_chart(sp, ones_point()), Error);
  CHECK_THROWS_AS(gap_chart(sp, h, 1), Error);
}

TEST_CASE("the chart scaling equals the valuation at every stage") {
  const CantorSpace& sp = space66();
  PointSampler sampler(sp, 47);
  for (int i = 0; i < 40; ++i) {
    Point g = sampler.point(2, 2);
    g.right_tail = RightTail::max;
    g = sp.canonical(g);
    const GapChart chart = gap_chart(sp, g);
    CHECK(chart.scaling == sp.nu(g));
    CHECK(gap_chart(sp, g, chart.t + 2).scaling == chart.scaling);
  }
}

TEST_CASE("alpha scales valuations and preserves tails") {
  const CantorSpace& sp = space66();
  const ExponentVector half = exponents_of(Rat(1, 2));
  PointSampler sampler(sp, 53);
  for (int i = 0; i < 50; ++i) {
    const Point x = sampler.point(2, 2);
    const Point y = alpha_on_point(sp, half, x);
    CHECK(sp.nu(y) == sp.nu(x) / 2);
    CHECK(y.right_tail == x.right_tail);
  }
}

TEST_CASE("alpha respects composition and inverses") {
  const CantorSpace& sp = space66();
  const ExponentVector a = exponents_of(Rat(2, 3)), b = exponents_of(Rat(3));
  PointSampler sampler(sp, 59);
  for (int i = 0; i < 30; ++i) {
    const Point x = sampler.point(2, 2);
    CHECK(alpha_on_point(sp, a, alpha_on_point(sp, b, x)) ==
          alpha_on_point(sp, exponent_compose(a, b), x));
    CHECK(alpha_on_point(sp, exponents_of(Rat(1)), x) == sp.canonical(x));
    const Point y = alpha_on_point(sp, a, x);
    CHECK(alpha_on_point(sp, exponents_of(Rat(3, 2)), y) == sp.canonical(x));
  }
}

TEST_CASE("alpha is injective on samples") {
  const CantorSpace& sp = space66();
  const ExponentVector c = exponents_of(Rat(3, 2));
  PointSampler sampler(sp, 61);
  std::vector<std::pair<Point, Point>> images;
  for (int i = 0; i < 40; ++i) {
    const Point x = sampler.point(2, 2);
    const Point y = alpha_on_point(sp, c, x);
    for (const auto& [px, py] : images)
      if (py == y) CHECK(px == sp.canonical(x));
    images.emplace_back(sp.canonical(x), y);
  }
}

TEST_CASE("alpha rejects scalings outside the common primes") {
  const CantorSpace sp(SequenceProfile({}, {2}), SequenceProfile({}, {3}));
  CHECK_THROWS_AS(alpha_on_point(sp, exponents_of(Rat(1, 2)), ones_point()), Error);
  try {
    alpha_on_point(sp, exponents_of(Rat(1, 2)), ones_point());
  } catch (const Error& err) {
    CHECK(err.code() == Errc::invalid_scaling);
  }
  CHECK_THROWS_AS(alpha_on_point(space66(), exponents_of(Rat(1, 5)), ones_point()), Error);
}

TEST_CASE("the zig-zag image halves the valuation at even levels") {
  const DirectSystem sys(SequenceProfile({}, {2}), SequenceProfile({}, {2}));
  const CantorSpace& sp = sys.space();
  Point x;
  x.right = {2};
  const Point u = zigzag_image(sys, 2, x, 2);
  CHECK(sp.nu(x) == Rat(1, 2));
  CHECK(sp.nu(u) == Rat(1, 4));
  CHECK(u == Point{{}, {1, 2}, RightTail::ones});
  CHECK(u == alpha_on_point(sp, exponents_of(Rat(1, 2)), x));

  Point y;
  y.right = {2, 2};
  const Point v = zigzag_image(sys, 2, y, 4);
  CHECK(sp.nu(y) == Rat(3, 4));
  CHECK(sp.nu(v) == Rat(3, 8));
  CHECK(v == Point{{}, {1, 2, 2}, RightTail::ones});
}

TEST_CASE("zig-zag images agree with alpha across levels") {
  const SequenceProfile r({}, {6}), s({}, {6});
  for (long p : {2L, 3L}) {
    const DirectSystem sys(refactor_products(r, p), s);
    const CantorSpace& sp = sys.space();
    const ExponentVector inv = exponent_vector({{p, -1}});
    PointSampler sampler(sp, 67);
    for (long level : {2L, 4L}) {
      for (int i = 0; i < 20; ++i) {
        Point x = sampler.point(static_cast<long>(level), static_cast<long>(level));
        x.right_tail = RightTail::ones;
        x = sp.canonical(x);
        if (sp.max_support(x) > level) continue;
        const Point u = zigzag_image(sys, p, x, level);
        CHECK(sp.nu(u) * p == sp.nu(x));
        CHECK(u == alpha_on_point(sp, inv, x));
      }
    }
  }
}

TEST_CASE("zig-zag level preconditions") {
  const DirectSystem sys(SequenceProfile({}, {2}), SequenceProfile({}, {2}));
  Point x;
  x.right = {2};
  CHECK_THROWS_AS(zigzag_image(sys, 2, x, 3), Error);
  CHECK_THROWS_AS(zigzag_image(sys, 2, x, 0), Error);
  Point far;
  far.right = {1, 1, 2};
  CHECK_THROWS_AS(zigzag_image(sys, 2, far, 2), Error);
  Point maxed;
  maxed.right_tail = RightTail::max;
  CHECK_THROWS_AS(zigzag_image(sys, 2, maxed, 2), Error);
  // profile whose odd positions do not carry p
  const DirectSystem wrong(SequenceProfile({}, {6}), SequenceProfile({}, {6}));
  CHECK_THROWS_AS(zigzag_image(wrong, 2, x, 2), Error);
  try {
    zigzag_image(wrong, 2, x, 2);
  } catch (const Error& err) {
    CHECK(err.code() == Errc::wrong_shape);
  }
}

TEST_CASE("density witnesses are found for the invalid doubling") {
  const CantorSpace sp(SequenceProfile({}, {2}), SequenceProfile({}, {3}));
  const auto sweep = density_sweep(sp, Rat(2), ones_point(), SearchBounds{100, 100, 4});
  REQUIRE(sweep.size() == 5);
  for (const auto& [depth, witness] : sweep) {
    REQUIRE(witness.has_value());
    CHECK(witness->depth == depth);
    CHECK(witness_valid(sp, Rat(2), *witness));
  }
  // a hand-picked witness revalidates even though it is not the minimal one
  const DensityWitness sample{ones_point(), 2, Int(3), Int(2), Rat(18)};
  CHECK(witness_valid(sp, Rat(2), sample));
  CHECK(sweep[2].second->k == 0);
  CHECK(sweep[2].second->m == 0);
  CHECK(sweep[2].second->value == Rat(0));
}

TEST_CASE("a nonzero base point forces nontrivial witnesses") {
  const CantorSpace sp(SequenceProfile({}, {2}), SequenceProfile({}, {2}));
  Point base;
  base.left = {2, 2};
  REQUIRE(sp.nu(base) == Rat(3));
  const auto at0 = density_witness(sp, Rat(2), base, 0);
  REQUIRE(at0.has_value());
  CHECK(at0->k == 1);
  CHECK(at0->m == 1);
  CHECK(at0->value == Rat(4));
  CHECK(witness_valid(sp, Rat(2), *at0));
  // depth 2 progression stays in residue 3 mod 4, outside every interval
  CHECK(!density_witness(sp, Rat(2), base, 2).has_value());
}

TEST_CASE("witness search bounds are honored") {
  const CantorSpace sp(SequenceProfile({}, {2}), SequenceProfile({}, {2}));
  Point base;
  base.left = {2, 2};
  const SearchBounds tight{0, 0, 1};
  CHECK(!density_witness(sp, Rat(2), base, 0, tight).has_value());
  CHECK_THROWS_AS(density_witness(sp, Rat(0), base, 0), Error);
  CHECK_THROWS_AS(density_witness(sp, Rat(-1), base, 0), Error);
  CHECK_THROWS_AS(density_witness(sp, Rat(2), base, -1), Error);
}

TEST_CASE("witness validation rejects tampered records") {
  const CantorSpace sp(SequenceProfile({}, {2}), SequenceProfile({}, {3}));
  DensityWitness w{ones_point(), 2, Int(3), Int(2), Rat(18)};
  REQUIRE(witness_valid(sp, Rat(2), w));
  w.value = Rat(19);
  CHECK(!witness_valid(sp, Rat(2), w));
  w.value = Rat(27);
  w.m = Int(3);
  CHECK(!witness_valid(sp, Rat(2), w));
}

TEST_CASE("fiber tuples multiply pointwise") {
  const FiberTuple ones = fiber_ones(2);
  CHECK(ones.size() == 2);
  const FiberTuple u{Coefficient::omega(), Coefficient(Rat(2), Rat(0))};
  CHECK(fiber_mul(ones, u) == u);
  CHECK(fiber_invertible(u));
  CHECK(!fiber_invertible(FiberTuple{Coefficient::zero()}));
}

TEST_CASE("inner witnesses accumulate the superdiagonal") {
  const std::vector<FiberTuple> offdiag{{Coefficient(Rat(2), Rat(0))},
                                        {Coefficient(Rat(3), Rat(0))}};
  const InnerWitness w = inner_witness(3, 1, offdiag);
  REQUIRE(w.diagonal.size() == 3);
  CHECK(w.diagonal[0] == fiber_ones(1));
  CHECK(w.diagonal[1] == FiberTuple{Coefficient(Rat(2), Rat(0))});
  CHECK(w.diagonal[2] == FiberTuple{Coefficient(Rat(6), Rat(0))});
  CHECK(w.max_entry_norm_sq == Rat(36));
  CHECK(inner_gamma_factor(w, offdiag, make_unit(1, 3, 3)) ==
        FiberTuple{Coefficient(Rat(6), Rat(0))});
  CHECK(inner_gamma_factor(w, offdiag, make_unit(2, 2, 3)) == fiber_ones(1));
}

TEST_CASE("inner witness validation") {
  CHECK_THROWS_AS(inner_witness(3, 1, {{Coefficient::one()}}), Error);
  CHECK_THROWS_AS(inner_witness(2, 1, {{Coefficient::zero()}}), Error);
  CHECK_THROWS_AS(inner_witness(2, 2, {{Coefficient::one()}}), Error);
  try {
    inner_witness(2, 1, {{Coefficient::zero()}});
  } catch (const Error& err) {
    CHECK(err.code() == Errc::not_invertible);
  }
}

TEST_CASE("root diagonal conjugation twists by the index difference") {
  const TriElement x = TriElement::unit(make_unit(1, 2, 2));
  const TriElement image = root_diagonal_conjugate(x);
  CHECK(image == TriElement::unit(make_unit(1, 2, 2), Coefficient::omega_pow(-1)));
  for (const MatrixUnit& e : all_units(4)) {
    const TriElement y = root_diagonal_conjugate(TriElement::unit(e));
    CHECK(y.coefficient(e) == Coefficient::omega_pow(e.row - e.col));
  }
}

TEST_CASE("standard doubling iterates") {
  const TriElement x = TriElement::unit(make_unit(1, 1, 1));
  CHECK(iterate_standard_doubling(x, 2) == TriElement::identity(4));
  CHECK(iterate_standard_doubling(x, 0) == x);
  CHECK_THROWS_AS(iterate_standard_doubling(x, -1), Error);
}

TEST_CASE("conjugation stabilizes along the standard embeddings") {
  const StabilizationReport report = remark2_check(1, 2, make_unit(1, 2, 2));
  TriElement want(4);
  want += TriElement::unit(make_unit(1, 2, 4), Coefficient::omega_pow(-1));
  want += TriElement::unit(make_unit(3, 4, 4), Coefficient::omega_pow(-1));
  CHECK(report.stabilized == want);
  CHECK(report.separation_sq == Rat(3));

  CHECK(remark2_check(2, 4, make_unit(2, 3, 4)).separation_sq == Rat(3));
  CHECK_THROWS_AS(remark2_check(2, 2, make_unit(1, 2, 4)), Error);
  CHECK_THROWS_AS(remark2_check(0, 1, make_unit(1, 1, 1)), Error);
  CHECK_THROWS_AS(remark2_check(1, 2, make_unit(1, 2, 4)), Error);
  try {
    remark2_check(1, 2, make_unit(1, 2, 4));
  } catch (const Error& err) {
    CHECK(err.code() == Errc::size_mismatch);
  }
}
