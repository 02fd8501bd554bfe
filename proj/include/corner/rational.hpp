#pragma once

#include <boost/multiprecision/gmp.hpp>

#include <string>
#include <string_view>
#include <vector>

namespace corner {

using Rational = boost::multiprecision::mpq_rational;
using Integer = boost::multiprecision::mpz_int;

/// Parses "p", "-p" or "p/q" (q != 0) into a canonical rational.
/// Throws std::invalid_argument on malformed input.
Rational parse_rational(std::string_view text);

/// Exact canonical form: "3", "-1/2". Never a decimal.
std::string to_string(const Rational& value);

/// Decimal approximation for human-facing columns only.
double approximate(const Rational& value);

Integer factorial(int n);
Integer binomial(int n, int k);

/// Parses a comma-separated list such as "1,2/3,-4".
std::vector<Rational> parse_rational_list(std::string_view text);

}  // namespace corner
