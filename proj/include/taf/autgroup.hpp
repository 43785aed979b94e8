#pragma once

#include <map>
#include <optional>
#include <vector>

#include "taf/cantor.hpp"
#include "taf/embeddings.hpp"
#include "taf/matrix_units.hpp"
#include "taf/supernatural.hpp"

namespace taf {

/// An element (a_p) of the free abelian group on primes, with its positive
/// rational scaling factor prod p^{a_p}. Zero exponents are not stored.
struct ExponentVector {
  std::map<long, long> exponents;

  Rat scaling() const;
  bool operator==(const ExponentVector&) const = default;
};

ExponentVector exponent_vector(std::map<long, long> exponents);

/// Pointwise sum; scaling factors multiply.
ExponentVector exponent_compose(const ExponentVector& a, const ExponentVector& b);

/// Factors a positive rational into an exponent vector. Throws
/// Error(invalid_scaling) when c <= 0 or a prime factor exceeds the trial
/// division bound.
ExponentVector exponents_of(const Rat& c);

struct OutRank {
  long d = 0;
  std::vector<long> primes;
};

/// The rank of the outer automorphism group: the number of primes of infinite
/// multiplicity in both profile products.
OutRank out_rank(const SequenceProfile& r, const SequenceProfile& s);

/// Rearranges the formal product so that every odd-position term equals p,
/// without changing the generalized integer. Throws Error(prime_not_infinite)
/// unless p has infinite multiplicity.
SequenceProfile refactor_products(const SequenceProfile& profile, long p);

/// The combinatorial chart of a left gap point at stage t: the boundary word
/// w on the window (-t+1 .. t-1), the size n of the lexicographic order
/// interval from the all-ones word to w, and the scaling c = n/m_{t-1}.
struct GapChart {
  long t = 1;
  std::vector<long> word;
  Int interval_count;  // n
  Rat scaling;         // c = n / m_{t-1}
};

/// Chart of a max-tail point whose left support fits inside the stage window.
/// stage = 0 selects the minimal stage; explicit stages must dominate it.
/// The scaling is independent of the chosen stage.
GapChart gap_chart(const CantorSpace& space, const Point& g, long stage = 0);

/// The automorphism with valuation multiplier c = prod p^{a_p}, evaluated at
/// one point: the unique point of matching tail kind whose valuation is
/// c * nu(x). The support of c must lie inside the common infinite primes
/// (Error(invalid_scaling) otherwise).
Point alpha_on_point(const CantorSpace& space, const ExponentVector& c, const Point& x);

/// Image of x under the zig-zag generator at an even level: reroutes the
/// stage-(N+1) refinement through the standard embedding of multiplicity p,
/// decodes the p fiber positions above x's diagonal unit, and returns the
/// minimal decoded point. Requires term p at position N+1 of the r-profile
/// (refactor first) and the supports of x inside [-N, N].
Point zigzag_image(const DirectSystem& sys, long p, const Point& x, long level);

struct SearchBounds {
  long k_max = 10'000;
  long m_max = 10'000;
  long j_max = 6;
};

/// A value-level demonstration that the scaled image of the clopen set
/// {y_{-1} = 1} reaches depth `depth`: a member of the valuation progression
/// of F_depth(base_point) inside one interval [c k s_1, c k s_1 + c].
struct DensityWitness {
  Point base_point;
  long depth = 0;
  Int k;
  Int m;
  Rat value;
};

/// Smallest (k, m) witness at the given depth, or nullopt when the bounds are
/// exhausted (a normal outcome: valid scalings can leave whole residue
/// classes untouched).
std::optional<DensityWitness> density_witness(const CantorSpace& space, const Rat& c,
                                              const Point& base_point, long depth,
                                              const SearchBounds& bounds = {});

/// Exact recheck of a candidate witness: progression membership and interval
/// membership.
bool witness_valid(const CantorSpace& space, const Rat& c, const DensityWitness& w);

/// One depth per entry, 0 through bounds.j_max.
std::vector<std::pair<long, std::optional<DensityWitness>>> density_sweep(
    const CantorSpace& space, const Rat& c, const Point& base_point,
    const SearchBounds& bounds = {});

/// A point of the m-fold abelian fiber: one field element per coordinate,
/// multiplied pointwise.
using FiberTuple = std::vector<Coefficient>;

FiberTuple fiber_ones(long dim);
FiberTuple fiber_mul(const FiberTuple& x, const FiberTuple& y);
bool fiber_invertible(const FiberTuple& x);

/// The conjugating element for a diagonal-fixing automorphism of T_size
/// tensored with an m-dimensional abelian fiber: diagonal(i) is the running
/// product u_0 u_1 ... u_{i-1} with u_0 = 1.
struct InnerWitness {
  long size = 1;
  long fiber_dim = 1;
  std::vector<FiberTuple> diagonal;
  Rat max_entry_norm_sq;  // squared modulus bound over all diagonal entries
};

/// Builds the witness from the superdiagonal images u_1, ..., u_{size-1} and
/// verifies the conjugation identity on every matrix unit. Throws
/// Error(not_invertible) when a fiber entry vanishes.
InnerWitness inner_witness(long size, long fiber_dim, const std::vector<FiberTuple>& offdiag);

/// The fiber factor the induced automorphism attaches to e_{row,col}:
/// u_row u_{row+1} ... u_{col-1}.
FiberTuple inner_gamma_factor(const InnerWitness& w, const std::vector<FiberTuple>& offdiag,
                              const MatrixUnit& e);

/// Conjugation by the root-of-unity diagonal d = diag(w, w^2, ..., w^size):
/// d x d^{-1}.
TriElement root_diagonal_conjugate(const TriElement& x);

/// size-fold standard embedding iterate T_{2^n} -> T_{2^m}.
TriElement iterate_standard_doubling(const TriElement& x, long times);

struct StabilizationReport {
  TriElement stabilized;
  Rat separation_sq;
};

/// Checks that conjugation by the root-of-unity diagonal stabilizes along the
/// standard embeddings: d_m sigma^{m-n}(a) d_m^{-1} = sigma^{m-n}(d_n a d_n^{-1})
/// for a unit a of T_{2^n}, and computes the exact squared separation
/// |w - h_i h_{i+2^n}^{-1}|^2 forced on any period-2^n diagonal h by the unit
/// e_{i, i+2^n}. Throws Error(level_order) unless m > n >= 1.
StabilizationReport remark2_check(long n, long m, const MatrixUnit& a);

}  // namespace taf
