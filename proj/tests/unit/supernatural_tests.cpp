#include <doctest.h>

#include "taf/supernatural.hpp"

using namespace taf;

TEST_CASE("factorization of small integers") {
  using Factors = std::vector<std::pair<long, long>>;
  CHECK(factorize(360) == Factors{{2, 3}, {3, 2}, {5, 1}});
  CHECK(factorize(1).empty());
  CHECK(factorize(97) == Factors{{97, 1}});
}

TEST_CASE("profiles map to supernaturals") {
  const Supernatural six = from_profile(SequenceProfile({}, {6}));
  CHECK(six.finite_part.empty());
  CHECK(six.infinite_primes == std::set<long>{2, 3});
  CHECK(six.to_string() == "2^inf * 3^inf");

  const Supernatural mixed = from_profile(SequenceProfile({4}, {3}));
  CHECK(mixed.finite_part == std::map<long, long>{{2, 2}});
  CHECK(mixed.infinite_primes == std::set<long>{3});
  CHECK(mixed.to_string() == "2^2 * 3^inf");

  // preamble factors of an infinite prime are absorbed
  const Supernatural absorbed = from_profile(SequenceProfile({2}, {2}));
  CHECK(absorbed.finite_part.empty());
  CHECK(absorbed.infinite_primes == std::set<long>{2});

  CHECK(from_profile(SequenceProfile({1}, {2})).to_string() == "2^inf");
}

TEST_CASE("cycle rotation and unrolling preserve the supernatural") {
  const Supernatural a = from_profile(SequenceProfile({}, {2, 3}));
  const Supernatural b = from_profile(SequenceProfile({}, {3, 2}));
  const Supernatural c = from_profile(SequenceProfile({}, {6}));
  CHECK(a == b);
  CHECK(a == c);
}

TEST_CASE("divisibility dominates finite parts and nests infinite parts") {
  const Supernatural small = from_profile(SequenceProfile({2}, {3}));
  const Supernatural big = from_profile(SequenceProfile({}, {6}));
  CHECK(divides(small, big));
  CHECK(!divides(big, small));
  CHECK(divides(small, small));

  const Supernatural five = from_profile(SequenceProfile({5}, {3}));
  CHECK(!divides(five, big));
}

TEST_CASE("finite equivalence ignores finite parts") {
  CHECK(finitely_equivalent(from_profile(SequenceProfile({}, {2})),
                            from_profile(SequenceProfile({3}, {2}))));
  CHECK(!finitely_equivalent(from_profile(SequenceProfile({}, {2})),
                             from_profile(SequenceProfile({}, {3}))));
  CHECK(finitely_equivalent(from_profile(SequenceProfile({}, {6})),
                            from_profile(SequenceProfile({}, {2, 3}))));
}

TEST_CASE("common infinite primes intersect") {
  const Supernatural a = from_profile(SequenceProfile({}, {6}));
  const Supernatural b = from_profile(SequenceProfile({}, {15}));
  CHECK(common_infinite_primes(a, b) == std::vector<long>{3});
  CHECK(common_infinite_primes(a, a) == std::vector<long>{2, 3});
}

TEST_CASE("empty product renders as one") {
  CHECK(Supernatural{}.to_string() == "1");
}
