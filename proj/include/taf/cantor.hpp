#pragma once

#include <optional>
#include <string>
#include <vector>

#include "taf/error.hpp"
#include "taf/profile.hpp"
#include "taf/rational.hpp"

namespace taf {

// Coordinate indices run ..., -2, -1, 1, 2, ...; there is no index 0.
long pred_index(long idx);
long succ_index(long idx);

enum class RightTail { ones, max };

/// A point of the two-sided coordinate space with finitely many deviations.
/// left[i-1] is the coordinate at index -i; right[k-1] the coordinate at
/// index k. Coordinates beyond left are 1; beyond right they are all 1
/// (right_tail = ones) or all maximal (right_tail = max).
struct Point {
  std::vector<long> left;
  std::vector<long> right;
  RightTail right_tail = RightTail::ones;

  bool operator==(const Point&) const = default;
};

inline Point ones_point() { return Point{}; }

/// A basic clopen set: the points whose coordinates on the symmetric window
/// [-window, window] spell out word = (x_{-window},...,x_{-1},x_1,...,x_window).
struct Cylinder {
  long window = 0;
  std::vector<long> word;
};

/// A basic G-set: the pairs (u.z, u'.z) of points carrying the two window
/// words over a shared tail z. Both coordinate projections are injective on it.
struct BasicGSet {
  long window = 0;
  std::vector<long> lower_word;
  std::vector<long> upper_word;
};

/// The coordinate space attached to a pair of digit-bound profiles, together
/// with its lexicographic structure: tail equivalence, the ordered relation,
/// the two-sided mixed-radix valuation, gap points and their successors, the
/// difference cocycle, and orbit-closure membership.
class CantorSpace {
 public:
  CantorSpace(SequenceProfile r, SequenceProfile s);

  const SequenceProfile& r_profile() const { return r_; }
  const SequenceProfile& s_profile() const { return s_; }

  /// Digit bound at a nonzero index: r_k for k > 0, s_{-k} for k < 0.
  long digit_bound(long idx) const;

  /// Coordinate of x at a nonzero index, including tail values beyond the
  /// explicit digits.
  long coord(const Point& x, long idx) const;

  /// Largest i such that some coordinate at index i or -i is explicit; 0 for
  /// points equal to their tails everywhere.
  long max_support(const Point& x) const;

  /// Validates digit ranges and trims trailing tail digits so that structural
  /// equality is point equality. Throws Error(invalid_point) on out-of-range
  /// digits.
  Point canonical(Point x) const;
  bool is_canonical(const Point& x) const;

  /// m_k = r_1 r_2 ... r_k.
  Int m(long k) const { return r_.partial_product(k); }

  /// s_0 s_1 ... s_{k-1} with s_0 = 1; the weight of the digit at index -k.
  Int left_weight(long k) const { return s_.partial_product(k - 1); }

  // -- relations ----------------------------------------------------------

  /// x and y agree at all large enough and small enough indices.
  bool tail_equivalent(const Point& x, const Point& y) const;

  /// Full lexicographic comparison x <= y on the two-sided order, tails
  /// included. Total on canonical points.
  bool lex_leq(const Point& x, const Point& y) const;

  /// (x, y) is in the ordered relation: tail equivalent, and x = y or the
  /// leftmost differing coordinate is smaller in x.
  bool in_R(const Point& x, const Point& y) const;

  /// y lies in the closure of the orbit {z : (z,x) in R}; equivalent to
  /// lex_leq(y, x). The for-all-windows criterion stabilizes at the window
  /// just past both supports, which is where it is evaluated.
  bool closure_member(const Point& y, const Point& x) const;

  // -- valuation ----------------------------------------------------------

  /// Two-sided mixed-radix value: sum of (x_{-k} - 1) s_0...s_{k-1} plus
  /// sum of (x_k - 1)/m_k; a max tail beyond index M contributes 1/m_M.
  Rat nu(const Point& x) const;

  /// All canonical points with value v: the ones-tail expansion, plus the
  /// max-tail twin whenever v > 0. Throws Error(not_representable) when the
  /// fractional part of v is not of the form l/m_k for any k.
  std::vector<Point> value_to_points(const Rat& v) const;

  // -- gap structure ------------------------------------------------------

  bool is_gap_point(const Point& x) const;

  /// The other member of the gap pair: increment just below the max run,
  /// ones from there on. Preserves nu. Throws Error(not_gap_point) on a
  /// ones-tail argument.
  Point gap_successor(const Point& x) const;

  /// Inverse of gap_successor; y must be a canonical ones-tail point other
  /// than the all-ones point.
  Point gap_predecessor(const Point& y) const;

  // -- cocycle ------------------------------------------------------------

  /// d(x,y): the finite signed sum of weighted coordinate differences.
  /// Throws Error(not_tail_equivalent) unless the sum is finite.
  Rat cocycle(const Point& x, const Point& y) const;

  // -- windows and cylinders ----------------------------------------------

  /// (x_{-n},...,x_{-1},x_1,...,x_n), tail values filled in.
  std::vector<long> window_word(const Point& x, long n) const;

  /// Digit bounds (s_n,...,s_1,r_1,...,r_n).
  std::vector<long> window_radices(long n) const;

  Cylinder cylinder_of(const Point& x, long n) const;

  /// Product of the reciprocal digit bounds over the window.
  Rat cylinder_measure(const Cylinder& c) const;

  /// Validates a cylinder's digit ranges and window/word consistency.
  void check_cylinder(const Cylinder& c) const;
  void check_gset(const BasicGSet& e) const;

 private:
  void check_window_word(long window, const std::vector<long>& word, const char* what) const;

  SequenceProfile r_;
  SequenceProfile s_;
};

}  // namespace taf
