#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>
#include <vector>

namespace stacky {

using Integer = mpz_class;
using Rational = mpq_class;
using IntVector = std::vector<Integer>;
using RatVector = std::vector<Rational>;

/// Floor division; b must be nonzero.
Integer floor_div(const Integer& a, const Integer& b);

/// Representative of a modulo m in [0, |m|); m must be nonzero.
Integer mod_floor(const Integer& a, const Integer& m);

Integer gcd(const Integer& a, const Integer& b);

std::string to_string(const Integer& value);
std::string to_string(const Rational& value);

/// Parses "p", "-p" or "p/q". Throws std::invalid_argument on bad input or q = 0.
Rational parse_rational(std::string_view text);
/// Parses a decimal integer. Throws std::invalid_argument.
Integer parse_integer(std::string_view text);

RatVector to_rational(const IntVector& v);

}  // namespace stacky
