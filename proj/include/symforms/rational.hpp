#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace symforms {

using Integer = mpz_class;
using Rational = mpq_class;

/// n! for n >= 0.
Integer factorial(long n);

/// 1/n! with the convention 1/n! = 0 for negative n (reciprocal Gamma at poles).
Rational inverse_factorial(long n);

/// Ordinary binomial coefficient; zero outside 0 <= k <= n.
Integer binomial(long n, long k);

/// Lowest-terms decimal form "p/q" (or "p" when q = 1).
std::string to_string(const Rational& r);

/// Parses "p", "-p", "p/q"; throws Error(ParseError) otherwise.
Rational parse_rational(std::string_view text);

}  // namespace symforms
