#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>

namespace cremona {

/// Exact rational number. mpq_class keeps values canonical (reduced, positive
/// denominator) after every arithmetic operation.
using Rational = mpq_class;
using Integer = mpz_class;

/// Builds num/den in canonical form. Throws PreconditionError on den == 0.
Rational make_rational(const Integer& num, const Integer& den = 1);
Rational make_rational(long num, long den = 1);

inline bool is_zero(const Rational& q) { return sgn(q) == 0; }
Rational inverse(const Rational& q);
Rational pow(const Rational& q, long e);

std::string to_string(const Rational& q);

/// Exact n-th root of an integer, if one exists (negative radicands only for odd n).
std::optional<Integer> integer_root(const Integer& x, unsigned long n);

/// c with c^n == q, if such a rational exists.
std::optional<Rational> rational_root(const Rational& q, unsigned long n);

/// c with c^3 == q, if such a rational exists.
std::optional<Rational> rational_cube_root(const Rational& q);

}  // namespace cremona
