#include "taf/matrix_units.hpp"

#include <utility>

namespace taf {

MatrixUnit make_unit(long row, long col, long size) {
  if (!(1 <= row && row <= col && col <= size))
    raise(Errc::wrong_shape, "matrix unit (" + std::to_string(row) + "," + std::to_string(col) +
                                 ") outside the upper triangle of size " + std::to_string(size));
  return MatrixUnit{row, col, size};
}

std::vector<MatrixUnit> all_units(long size) {
  std::vector<MatrixUnit> units;
  for (long i = 1; i <= size; ++i)
    for (long j = i; j <= size; ++j) units.push_back(MatrixUnit{i, j, size});
  return units;
}

Coefficient Coefficient::omega_pow(long k) {
  switch (((k % 3) + 3) % 3) {
    case 0: return one();
    case 1: return omega();
    default: return {Rat(-1), Rat(-1)};  // w^2 = -1 - w
  }
}

Rat Coefficient::norm_sq() const { return a * a - a * b + b * b; }

Coefficient Coefficient::inverse() const {
  const Rat n = norm_sq();
  if (n == 0) raise(Errc::not_invertible, "zero coefficient");
  // conjugate of a + b w is (a - b) - b w
  return {(a - b) / n, -b / n};
}

std::string Coefficient::to_string() const {
  if (is_zero()) return "0";
  std::string out;
  if (a != 0) out = fraction_string(a);
  if (b != 0) {
    if (!out.empty()) out += " + ";
    out += fraction_string(b) + "w";
  }
  return out;
}

Coefficient operator+(const Coefficient& x, const Coefficient& y) { return {x.a + y.a, x.b + y.b}; }
Coefficient operator-(const Coefficient& x, const Coefficient& y) { return {x.a - y.a, x.b - y.b}; }
Coefficient operator-(const Coefficient& x) { return {-x.a, -x.b}; }

Coefficient operator*(const Coefficient& x, const Coefficient& y) {
  // (a1 + b1 w)(a2 + b2 w) with w^2 = -1 - w
  return {x.a * y.a - x.b * y.b, x.a * y.b + x.b * y.a - x.b * y.b};
}

TriElement TriElement::unit(const MatrixUnit& e, const Coefficient& c) {
  TriElement x(e.size);
  x.add_term(e, c);
  return x;
}

TriElement TriElement::identity(long size) {
  TriElement x(size);
  for (long i = 1; i <= size; ++i) x.add_term(MatrixUnit{i, i, size}, Coefficient::one());
  return x;
}

void TriElement::add_term(const MatrixUnit& e, const Coefficient& c) {
  if (e.size != size_)
    raise(Errc::size_mismatch, "unit of size " + std::to_string(e.size) +
                                   " added to an element of size " + std::to_string(size_));
  make_unit(e.row, e.col, e.size);
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) it->second = it->second + c;
  if (it->second.is_zero()) terms_.erase(it);
}

Coefficient TriElement::coefficient(const MatrixUnit& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? Coefficient::zero() : it->second;
}

TriElement& TriElement::operator+=(const TriElement& other) {
  if (other.size_ != size_) raise(Errc::size_mismatch, "sum of elements of different sizes");
  for (const auto& [e, c] : other.terms_) add_term(e, c);
  return *this;
}

TriElement& TriElement::operator-=(const TriElement& other) {
  if (other.size_ != size_) raise(Errc::size_mismatch, "difference of elements of different sizes");
  for (const auto& [e, c] : other.terms_) add_term(e, -c);
  return *this;
}

std::string TriElement::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& [e, c] : terms_) {
    if (!out.empty()) out += " + ";
    const std::string coeff = c.to_string();
    if (coeff != "1/1") out += "(" + coeff + ")";
    out += "e[" + std::to_string(e.row) + "," + std::to_string(e.col) + "]";
  }
  return out;
}

TriElement operator+(TriElement x, const TriElement& y) { return x += y; }
TriElement operator-(TriElement x, const TriElement& y) { return x -= y; }

TriElement operator*(const TriElement& x, const TriElement& y) {
  if (x.size() != y.size()) raise(Errc::size_mismatch, "product of elements of different sizes");
  TriElement prod(x.size());
  for (const auto& [e, c] : x.terms())
    for (const auto& [f, d] : y.terms())
      if (e.col == f.row) prod.add_term(MatrixUnit{e.row, f.col, x.size()}, c * d);
  return prod;
}

TriElement operator*(const Coefficient& c, const TriElement& x) {
  TriElement scaled(x.size());
  for (const auto& [e, coeff] : x.terms()) scaled.add_term(e, c * coeff);
  return scaled;
}

}  // namespace taf
