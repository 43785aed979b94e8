#include "taf/rational.hpp"

#include <cctype>
#include <cstdlib>

#include "taf/error.hpp"

namespace taf {

std::string fraction_string(const Rat& q) {
  return numerator(q).str() + "/" + denominator(q).str();
}

namespace {

bool integer_token(const std::string& text) {
  if (text.empty()) return false;
  std::size_t i = (text[0] == '-' || text[0] == '+') ? 1 : 0;
  if (i == text.size()) return false;
  for (; i < text.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(text[i]))) return false;
  return true;
}

}  // namespace

Rat parse_fraction(const std::string& text) {
  const auto slash = text.find('/');
  try {
    if (slash == std::string::npos) {
      if (!integer_token(text)) raise(Errc::parse_error, "not a fraction: '" + text + "'");
      return Rat(Int(text));
    }
    const std::string num = text.substr(0, slash);
    const std::string den = text.substr(slash + 1);
    if (!integer_token(num) || !integer_token(den))
      raise(Errc::parse_error, "not a fraction: '" + text + "'");
    Int d(den);
    if (d == 0) raise(Errc::parse_error, "zero denominator: '" + text + "'");
    return Rat(Int(num), d);
  } catch (const Error&) {
    throw;
  } catch (const std::exception&) {
    raise(Errc::parse_error, "not a fraction: '" + text + "'");
  }
}

Int floor_rat(const Rat& q) {
  Int n = numerator(q), d = denominator(q);
  Int quot = n / d;
  if (n < 0 && quot * d != n) --quot;
  return quot;
}

Int ceil_rat(const Rat& q) { return -floor_rat(-q); }

bool is_integer(const Rat& q) { return denominator(q) == 1; }

Rat pow_rat(const Rat& base, long exp) {
  if (exp == 0) return Rat(1);
  if (exp < 0) {
    if (base == 0) raise(Errc::not_invertible, "0 to a negative power");
    return pow_rat(Rat(1) / base, -exp);
  }
  Rat acc(1), sq = base;
  for (long e = exp; e > 0; e >>= 1) {
    if (e & 1) acc *= sq;
    if (e > 1) sq *= sq;
  }
  return acc;
}

}  // namespace taf
