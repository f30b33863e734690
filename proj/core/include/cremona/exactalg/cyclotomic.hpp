#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "cremona/exactalg/rational.hpp"
#include "cremona/exactalg/upoly.hpp"

namespace cremona {

/// The n-th cyclotomic polynomial Φ_n over ℚ. Throws PreconditionError for n == 0.
const UPoly<Rational>& cyclotomic_polynomial(std::uint32_t n);

/// An element of ℚ(ζ_n), stored as its residue modulo Φ_n in the power basis
/// 1, ζ_n, ..., ζ_n^{φ(n)-1}.
///
/// Values are kept at their minimal conductor: a value that lies in a smaller
/// cyclotomic field is re-expressed there (rationals always have conductor 1,
/// and ℚ(ζ_{2m}) = ℚ(ζ_m) for odd m). Equal field elements therefore have equal
/// representations regardless of how they were computed, which makes key()
/// usable for hashing. Arithmetic between different conductors happens in the
/// field of the lcm conductor.
class Cyclotomic {
 public:
  Cyclotomic() : n_(1), c_{Rational(0)} {}
  Cyclotomic(const Rational& q) : n_(1), c_{q} {}  // NOLINT(google-explicit-constructor)
  Cyclotomic(long v) : n_(1), c_{Rational(v)} {}   // NOLINT(google-explicit-constructor)
  Cyclotomic(int v) : Cyclotomic(static_cast<long>(v)) {}  // NOLINT(google-explicit-constructor)

  /// Residue of Σ raw[j]·ζ_n^j modulo Φ_n. Throws PreconditionError for n == 0.
  static Cyclotomic reduce(std::uint32_t n, std::span<const Rational> raw);
  /// ζ_n^k.
  static Cyclotomic zeta(std::uint32_t n, std::int64_t k = 1);

  std::uint32_t conductor() const { return n_; }
  const std::vector<Rational>& coefficients() const { return c_; }

  bool is_zero() const;
  bool is_rational() const { return n_ == 1; }
  /// The rational value; throws PreconditionError if the element is not rational.
  const Rational& to_rational() const;

  /// Coefficient vector of length `n` expressing this element as a polynomial
  /// in ζ_n (not reduced); `n` must be a multiple of conductor().
  std::vector<Rational> raw_in(std::uint32_t n) const;

  Cyclotomic operator-() const;
  friend Cyclotomic operator+(const Cyclotomic& a, const Cyclotomic& b);
  friend Cyclotomic operator-(const Cyclotomic& a, const Cyclotomic& b);
  friend Cyclotomic operator*(const Cyclotomic& a, const Cyclotomic& b);
  friend Cyclotomic operator/(const Cyclotomic& a, const Cyclotomic& b);
  Cyclotomic& operator+=(const Cyclotomic& o) { return *this = *this + o; }
  Cyclotomic& operator-=(const Cyclotomic& o) { return *this = *this - o; }
  Cyclotomic& operator*=(const Cyclotomic& o) { return *this = *this * o; }

  friend bool operator==(const Cyclotomic& a, const Cyclotomic& b) { return a.n_ == b.n_ && a.c_ == b.c_; }
  friend bool operator!=(const Cyclotomic& a, const Cyclotomic& b) { return !(a == b); }

  Cyclotomic inverse() const;
  Cyclotomic pow(std::int64_t e) const;

  /// Human-readable form, e.g. "1/2 + 3*z3"; z<n> denotes ζ_n.
  std::string to_string() const;

 private:
  Cyclotomic(std::uint32_t n, std::vector<Rational> coeffs);
  void normalize();

  std::uint32_t n_;
  std::vector<Rational> c_;
};

using Scalar = Cyclotomic;

inline bool is_zero(const Cyclotomic& x) { return x.is_zero(); }
inline Cyclotomic inverse(const Cyclotomic& x) { return x.inverse(); }
inline std::string to_string(const Cyclotomic& x) { return x.to_string(); }

/// Field automorphism ζ_n ↦ ζ_n^k of ℚ(ζ_n), gcd(k, n) = 1.
class GaloisMap {
 public:
  GaloisMap(std::uint32_t n, std::int64_t k);

  std::uint32_t conductor() const { return n_; }
  std::int64_t exponent() const { return k_; }

  /// Applying `*this` after `first` is the map with exponent k·k' mod n.
  GaloisMap after(const GaloisMap& first) const;

  friend bool operator==(const GaloisMap&, const GaloisMap&) = default;

 private:
  std::uint32_t n_;
  std::int64_t k_;
};

/// Applies g to x. x must lie in ℚ(ζ_n) for n = g.conductor(), i.e. its
/// conductor must divide n; otherwise PreconditionError.
Cyclotomic galois_apply(const GaloisMap& g, const Cyclotomic& x);

}  // namespace cremona
