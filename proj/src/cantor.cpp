#include "taf/cantor.hpp"

#include <algorithm>
#include <numeric>
#include <string>
#include <utility>

namespace taf {

long pred_index(long idx) { return idx == 1 ? -1 : idx - 1; }
long succ_index(long idx) { return idx == -1 ? 1 : idx + 1; }

CantorSpace::CantorSpace(SequenceProfile r, SequenceProfile s)
    : r_(std::move(r)), s_(std::move(s)) {}

long CantorSpace::digit_bound(long idx) const {
  if (idx == 0) raise(Errc::invalid_point, "coordinate indices skip 0");
  return idx > 0 ? r_.term(idx) : s_.term(-idx);
}

long CantorSpace::coord(const Point& x, long idx) const {
  if (idx < 0) {
    const long i = -idx;
    if (i <= static_cast<long>(x.left.size())) return x.left[static_cast<std::size_t>(i - 1)];
    return 1;
  }
  if (idx == 0) raise(Errc::invalid_point, "coordinate indices skip 0");
  if (idx <= static_cast<long>(x.right.size())) return x.right[static_cast<std::size_t>(idx - 1)];
  return x.right_tail == RightTail::ones ? 1 : digit_bound(idx);
}

long CantorSpace::max_support(const Point& x) const {
  return std::max(static_cast<long>(x.left.size()), static_cast<long>(x.right.size()));
}

Point CantorSpace::canonical(Point x) const {
  for (std::size_t i = 0; i < x.left.size(); ++i) {
    const long bound = digit_bound(-static_cast<long>(i + 1));
    if (x.left[i] < 1 || x.left[i] > bound)
      raise(Errc::invalid_point, "digit " + std::to_string(x.left[i]) + " at index -" +
                                     std::to_string(i + 1) + " outside [1, " + std::to_string(bound) + "]");
  }
  for (std::size_t k = 0; k < x.right.size(); ++k) {
    const long bound = digit_bound(static_cast<long>(k + 1));
    if (x.right[k] < 1 || x.right[k] > bound)
      raise(Errc::invalid_point, "digit " + std::to_string(x.right[k]) + " at index " +
                                     std::to_string(k + 1) + " outside [1, " + std::to_string(bound) + "]");
  }
  while (!x.left.empty() && x.left.back() == 1) x.left.pop_back();
  while (!x.right.empty()) {
    const long idx = static_cast<long>(x.right.size());
    const long tail = x.right_tail == RightTail::ones ? 1 : digit_bound(idx);
    if (x.right.back() != tail) break;
    x.right.pop_back();
  }
  return x;
}

bool CantorSpace::is_canonical(const Point& x) const {
  try {
    return canonical(x) == x;
  } catch (const Error&) {
    return false;
  }
}

bool CantorSpace::tail_equivalent(const Point& x, const Point& y) const {
  canonical(x);
  canonical(y);
  // max tails differ from ones tails at the infinitely many indices with bound >= 2
  return x.right_tail == y.right_tail;
}

bool CantorSpace::lex_leq(const Point& x, const Point& y) const {
  canonical(x);
  canonical(y);
  const long left_span = std::max(static_cast<long>(x.left.size()), static_cast<long>(y.left.size()));
  const long right_span = std::max(static_cast<long>(x.right.size()), static_cast<long>(y.right.size()));
  for (long idx = -left_span; idx <= right_span; ++idx) {
    if (idx == 0) continue;
    const long cx = coord(x, idx), cy = coord(y, idx);
    if (cx != cy) return cx < cy;
  }
  // equal through both supports: tails decide, ones below max
  if (x.right_tail == y.right_tail) return true;
  return x.right_tail == RightTail::ones;
}

bool CantorSpace::in_R(const Point& x, const Point& y) const {
  return tail_equivalent(x, y) && lex_leq(x, y);
}

bool CantorSpace::closure_member(const Point& y, const Point& x) const {
  return lex_leq(y, x);
}

Rat CantorSpace::nu(const Point& x0) const {
  const Point x = canonical(x0);
  Rat value = 0;
  for (std::size_t i = 0; i < x.left.size(); ++i)
    value += Rat((x.left[i] - 1) * left_weight(static_cast<long>(i + 1)));
  for (std::size_t k = 0; k < x.right.size(); ++k)
    value += Rat(x.right[k] - 1) / Rat(m(static_cast<long>(k + 1)));
  if (x.right_tail == RightTail::max)
    value += Rat(1) / Rat(m(static_cast<long>(x.right.size())));
  return value;
}

std::vector<Point> CantorSpace::value_to_points(const Rat& v) const {
  if (v < 0) raise(Errc::not_representable, "negative value " + fraction_string(v));
  Point y;  // ones-tail expansion
  Int n = floor_rat(v);
  for (long i = 1; n > 0; ++i) {
    const Int radix = s_.term(i);
    y.left.push_back(static_cast<long>(n % radix) + 1);
    n /= radix;
  }

  const Rat f = v - Rat(floor_rat(v));
  if (f != 0) {
    Int den = denominator(f);
    long depth = 0;
    const long preamble_len = static_cast<long>(r_.preamble().size());
    while (den != 1) {
      if (depth >= preamble_len && gcd(den, r_.cycle_product()) == 1)
        raise(Errc::not_representable,
              fraction_string(v) + " has no finite expansion: denominator " + den.str() +
                  " is coprime to every further radix");
      ++depth;
      den /= gcd(den, Int(r_.term(depth)));
    }
    Int ell = numerator(f * Rat(m(depth)));
    y.right.assign(static_cast<std::size_t>(depth), 1);
    for (long k = depth; k >= 1; --k) {
      const Int radix = r_.term(k);
      y.right[static_cast<std::size_t>(k - 1)] = static_cast<long>(ell % radix) + 1;
      ell /= radix;
    }
  }

  std::vector<Point> points;
  points.push_back(canonical(std::move(y)));
  if (v > 0) points.push_back(gap_predecessor(points.front()));
  return points;
}

bool CantorSpace::is_gap_point(const Point& x) const {
  canonical(x);
  return x.right_tail == RightTail::max;
}

Point CantorSpace::gap_successor(const Point& x0) const {
  const Point x = canonical(x0);
  if (x.right_tail != RightTail::max)
    raise(Errc::not_gap_point, "only max-tail points have gap successors");
  Point y;
  if (!x.right.empty()) {
    // canonical max points keep x_j < r_j at the last explicit digit
    const std::size_t j = x.right.size();
    y.left = x.left;
    y.right = x.right;
    y.right[j - 1] += 1;
  } else {
    long j = -1;  // every right coordinate is maximal: descend into the left side
    while (coord(x, j) == digit_bound(j)) j = pred_index(j);
    const std::size_t i = static_cast<std::size_t>(-j);
    y.left = x.left;
    if (y.left.size() < i) y.left.resize(i, 1);
    y.left[i - 1] += 1;
    for (std::size_t t = 0; t + 1 < i; ++t) y.left[t] = 1;
  }
  return canonical(std::move(y));
}

Point CantorSpace::gap_predecessor(const Point& y0) const {
  const Point y = canonical(y0);
  if (y.right_tail != RightTail::ones)
    raise(Errc::not_gap_point, "gap successors are ones-tail points");
  if (y.left.empty() && y.right.empty())
    raise(Errc::not_gap_point, "the minimum point is not a gap successor");
  Point x;
  x.right_tail = RightTail::max;
  x.left = y.left;
  x.right = y.right;
  if (!y.right.empty()) {
    x.right[x.right.size() - 1] -= 1;
  } else {
    std::size_t i = 1;
    while (y.left[i - 1] == 1) ++i;
    x.left[i - 1] -= 1;
    for (std::size_t t = 0; t + 1 < i; ++t) x.left[t] = digit_bound(-static_cast<long>(t + 1));
  }
  return canonical(std::move(x));
}

Rat CantorSpace::cocycle(const Point& x0, const Point& y0) const {
  const Point x = canonical(x0);
  const Point y = canonical(y0);
  if (x.right_tail != y.right_tail)
    raise(Errc::not_tail_equivalent, "cocycle needs a finite difference sum");
  Rat d = 0;
  const long left_span = std::max(static_cast<long>(x.left.size()), static_cast<long>(y.left.size()));
  const long right_span = std::max(static_cast<long>(x.right.size()), static_cast<long>(y.right.size()));
  for (long i = 1; i <= left_span; ++i)
    d += Rat(coord(y, -i) - coord(x, -i)) * Rat(left_weight(i));
  for (long k = 1; k <= right_span; ++k)
    d += Rat(coord(y, k) - coord(x, k)) / Rat(m(k));
  return d;
}

std::vector<long> CantorSpace::window_word(const Point& x, long n) const {
  if (n < 0) raise(Errc::invalid_point, "negative window");
  canonical(x);
  std::vector<long> word;
  word.reserve(static_cast<std::size_t>(2 * n));
  for (long idx = -n; idx <= n; ++idx) {
    if (idx == 0) continue;
    word.push_back(coord(x, idx));
  }
  return word;
}

std::vector<long> CantorSpace::window_radices(long n) const {
  if (n < 0) raise(Errc::invalid_point, "negative window");
  std::vector<long> radices;
  radices.reserve(static_cast<std::size_t>(2 * n));
  for (long idx = -n; idx <= n; ++idx) {
    if (idx == 0) continue;
    radices.push_back(digit_bound(idx));
  }
  return radices;
}

Cylinder CantorSpace::cylinder_of(const Point& x, long n) const {
  return Cylinder{n, window_word(x, n)};
}

Rat CantorSpace::cylinder_measure(const Cylinder& c) const {
  check_cylinder(c);
  Int den = 1;
  for (long b : window_radices(c.window)) den *= b;
  return Rat(Int(1), den);
}

void CantorSpace::check_cylinder(const Cylinder& c) const {
  check_window_word(c.window, c.word, "cylinder");
}

void CantorSpace::check_gset(const BasicGSet& e) const {
  check_window_word(e.window, e.lower_word, "G-set lower word");
  check_window_word(e.window, e.upper_word, "G-set upper word");
  if (!std::lexicographical_compare(e.lower_word.begin(), e.lower_word.end(),
                                    e.upper_word.begin(), e.upper_word.end()) &&
      e.lower_word != e.upper_word)
    raise(Errc::invalid_point, "G-set words out of order");
}

void CantorSpace::check_window_word(long window, const std::vector<long>& word,
                                    const char* what) const {
  if (window < 0) raise(Errc::invalid_point, std::string(what) + ": negative window");
  if (static_cast<long>(word.size()) != 2 * window)
    raise(Errc::invalid_point, std::string(what) + ": word length " +
                                   std::to_string(word.size()) + " != " + std::to_string(2 * window));
  const auto radices = window_radices(window);
  for (std::size_t i = 0; i < word.size(); ++i)
    if (word[i] < 1 || word[i] > radices[i])
      raise(Errc::invalid_point, std::string(what) + ": digit " + std::to_string(word[i]) +
                                     " outside [1, " + std::to_string(radices[i]) + "]");
}

}  // namespace taf
