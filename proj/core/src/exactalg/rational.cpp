#include "cremona/exactalg/rational.hpp"

#include "cremona/errors.hpp"

namespace cremona {

Rational make_rational(const Integer& num, const Integer& den) {
  if (den == 0) throw PreconditionError("rational with zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

Rational make_rational(long num, long den) { return make_rational(Integer(num), Integer(den)); }

Rational inverse(const Rational& q) {
  if (is_zero(q)) throw PreconditionError("inverse of zero");
  return Rational(1) / q;
}

Rational pow(const Rational& q, long e) {
  if (e < 0) return pow(inverse(q), -e);
  Integer num, den;
  mpz_pow_ui(num.get_mpz_t(), q.get_num_mpz_t(), static_cast<unsigned long>(e));
  mpz_pow_ui(den.get_mpz_t(), q.get_den_mpz_t(), static_cast<unsigned long>(e));
  return make_rational(num, den);
}

std::string to_string(const Rational& q) { return q.get_str(); }

std::optional<Integer> integer_root(const Integer& x, unsigned long n) {
  if (n == 0) throw PreconditionError("zeroth root");
  if (x < 0 && n % 2 == 0) return std::nullopt;
  Integer magnitude = abs(x);
  Integer root;
  if (mpz_root(root.get_mpz_t(), magnitude.get_mpz_t(), n) == 0) return std::nullopt;
  if (x < 0) root = -root;
  return root;
}

std::optional<Rational> rational_root(const Rational& q, unsigned long n) {
  const auto num = integer_root(q.get_num(), n);
  if (!num) return std::nullopt;
  const auto den = integer_root(q.get_den(), n);
  if (!den) return std::nullopt;
  return make_rational(*num, *den);
}

std::optional<Rational> rational_cube_root(const Rational& q) { return rational_root(q, 3); }

}  // namespace cremona
