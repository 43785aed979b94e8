#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <string>

namespace taf {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

/// Renders q as "num/den" in lowest terms, denominator always present ("3" -> "3/1").
std::string fraction_string(const Rat& q);

/// Parses "num/den" or a bare integer "num". Throws Error(parse_error) on bad input.
Rat parse_fraction(const std::string& text);

Int floor_rat(const Rat& q);
Int ceil_rat(const Rat& q);

bool is_integer(const Rat& q);

/// base^exp for integer exp of either sign; base must be nonzero when exp < 0.
Rat pow_rat(const Rat& base, long exp);

}  // namespace taf
