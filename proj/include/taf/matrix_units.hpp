#pragma once

#include <compare>
#include <map>
#include <string>
#include <vector>

#include "taf/error.hpp"
#include "taf/rational.hpp"

namespace taf {

/// e_{row,col} inside the upper triangular algebra of the given size;
/// 1 <= row <= col <= size.
struct MatrixUnit {
  long row = 1;
  long col = 1;
  long size = 1;

  auto operator<=>(const MatrixUnit&) const = default;
};

MatrixUnit make_unit(long row, long col, long size);

/// All matrix units of the upper triangular algebra of the size, row-major.
std::vector<MatrixUnit> all_units(long size);

/// a + b*w where w is a fixed primitive cube root of unity (w^2 = -1 - w).
/// Closed under the ring operations; nonzero elements are invertible.
struct Coefficient {
  Rat a;
  Rat b;

  Coefficient() = default;
  Coefficient(Rat a_, Rat b_) : a(std::move(a_)), b(std::move(b_)) {}

  static Coefficient zero() { return {}; }
  static Coefficient one() { return {Rat(1), Rat(0)}; }
  static Coefficient omega() { return {Rat(0), Rat(1)}; }
  /// w^k for any integer k.
  static Coefficient omega_pow(long k);

  bool is_zero() const { return a == 0 && b == 0; }

  /// Squared modulus a^2 - a b + b^2; an exact nonnegative rational.
  Rat norm_sq() const;

  Coefficient inverse() const;  // throws Error(not_invertible) on zero

  bool operator==(const Coefficient&) const = default;
  std::string to_string() const;
};

Coefficient operator+(const Coefficient& x, const Coefficient& y);
Coefficient operator-(const Coefficient& x, const Coefficient& y);
Coefficient operator-(const Coefficient& x);
Coefficient operator*(const Coefficient& x, const Coefficient& y);

/// Formal linear combination of upper triangular matrix units of one size,
/// multiplied by the rule e_{ij} e_{kl} = delta_{jk} e_{il}. Zero coefficients
/// are never stored.
class TriElement {
 public:
  explicit TriElement(long size) : size_(size) {}

  static TriElement unit(const MatrixUnit& e, const Coefficient& c = Coefficient::one());
  static TriElement identity(long size);

  long size() const { return size_; }
  const std::map<MatrixUnit, Coefficient>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  void add_term(const MatrixUnit& e, const Coefficient& c);
  Coefficient coefficient(const MatrixUnit& e) const;

  TriElement& operator+=(const TriElement& other);
  TriElement& operator-=(const TriElement& other);

  bool operator==(const TriElement&) const = default;
  std::string to_string() const;

 private:
  long size_;
  std::map<MatrixUnit, Coefficient> terms_;
};

TriElement operator+(TriElement x, const TriElement& y);
TriElement operator-(TriElement x, const TriElement& y);
TriElement operator*(const TriElement& x, const TriElement& y);
TriElement operator*(const Coefficient& c, const TriElement& x);

/// diag(f(1), ..., f(size)) as a TriElement.
template <typename F>
TriElement diagonal(long size, F&& entry) {
  TriElement d(size);
  for (long i = 1; i <= size; ++i) d.add_term(make_unit(i, i, size), entry(i));
  return d;
}

}  // namespace taf
