#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace rup {

using Integer = mpz_class;

/// Exact rational scalar. GMP keeps every value canonical (reduced, positive
/// denominator, zero as 0/1) after each arithmetic operation.
using Rational = mpq_class;

/// Parses "p" or "p/q" with an optional leading '-'. Rejects decimal points,
/// exponents, whitespace, "nan"/"inf" and zero denominators.
Rational parse_rational(std::string_view text);

/// "p" for integers, "p/q" otherwise.
std::string to_string(const Rational& q);

inline int sign(const Rational& q) { return sgn(q); }

Rational pow(const Rational& base, unsigned exponent);

Integer binomial(unsigned n, unsigned k);
Integer factorial(unsigned n);

/// Smallest dyadic m/2^bits with m/2^bits >= q.
Rational round_up_dyadic(const Rational& q, unsigned bits);
/// Nearest dyadic m/2^bits (ties round up).
Rational round_dyadic(const Rational& q, unsigned bits);

/// Exact conversion of a finite double.
Rational from_double(double value);

}  // namespace rup
