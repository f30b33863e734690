#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "cremona/errors.hpp"
#include "cremona/exactalg/rational.hpp"

namespace cremona {

namespace detail {
template <class F>
bool field_is_zero(const F& x) {
  return is_zero(x);
}
template <class F>
F field_inverse(const F& x) {
  return inverse(x);
}
}  // namespace detail

/// Dense univariate polynomial over an exact field F. Coefficients are stored
/// lowest degree first with no trailing zeros; the zero polynomial is empty.
/// F must provide is_zero(F) and inverse(F) as free functions.
template <class F>
class UPoly {
 public:
  UPoly() = default;
  explicit UPoly(std::vector<F> coeffs) : c_(std::move(coeffs)) { trim(); }

  static UPoly constant(const F& value) { return UPoly(std::vector<F>{value}); }
  static UPoly monomial(const F& coeff, std::size_t degree) {
    std::vector<F> c(degree + 1, F(0));
    c[degree] = coeff;
    return UPoly(std::move(c));
  }

  bool is_zero() const { return c_.empty(); }
  /// Degree; -1 for the zero polynomial.
  long degree() const { return static_cast<long>(c_.size()) - 1; }
  const std::vector<F>& coefficients() const { return c_; }
  F coeff(std::size_t i) const { return i < c_.size() ? c_[i] : F(0); }
  const F& leading() const { return c_.back(); }

  F evaluate(const F& x) const {
    F acc(0);
    for (std::size_t i = c_.size(); i-- > 0;) acc = acc * x + c_[i];
    return acc;
  }

  UPoly operator+(const UPoly& o) const {
    std::vector<F> r(std::max(c_.size(), o.c_.size()), F(0));
    for (std::size_t i = 0; i < c_.size(); ++i) r[i] = r[i] + c_[i];
    for (std::size_t i = 0; i < o.c_.size(); ++i) r[i] = r[i] + o.c_[i];
    return UPoly(std::move(r));
  }
  UPoly operator-() const {
    std::vector<F> r;
    r.reserve(c_.size());
    for (const auto& x : c_) r.push_back(F(0) - x);
    return UPoly(std::move(r));
  }
  UPoly operator-(const UPoly& o) const { return *this + (-o); }
  UPoly operator*(const UPoly& o) const {
    if (is_zero() || o.is_zero()) return {};
    std::vector<F> r(c_.size() + o.c_.size() - 1, F(0));
    for (std::size_t i = 0; i < c_.size(); ++i) {
      if (cremona_is_zero(c_[i])) continue;
      for (std::size_t j = 0; j < o.c_.size(); ++j) r[i + j] = r[i + j] + c_[i] * o.c_[j];
    }
    return UPoly(std::move(r));
  }
  UPoly scaled(const F& s) const {
    std::vector<F> r;
    r.reserve(c_.size());
    for (const auto& x : c_) r.push_back(x * s);
    return UPoly(std::move(r));
  }
  bool operator==(const UPoly& o) const { return c_ == o.c_; }

  /// Quotient and remainder of Euclidean division by a nonzero divisor.
  std::pair<UPoly, UPoly> divmod(const UPoly& divisor) const {
    if (divisor.is_zero()) throw PreconditionError("polynomial division by zero");
    std::vector<F> rem = c_;
    const long dd = divisor.degree();
    if (degree() < dd) return {UPoly(), *this};
    std::vector<F> quot(static_cast<std::size_t>(degree() - dd + 1), F(0));
    const F lead_inv = cremona_inverse(divisor.leading());
    for (long i = degree(); i >= dd; --i) {
      const F& top = rem[static_cast<std::size_t>(i)];
      if (cremona_is_zero(top)) continue;
      const F factor = top * lead_inv;
      quot[static_cast<std::size_t>(i - dd)] = factor;
      for (long j = 0; j <= dd; ++j) {
        auto& slot = rem[static_cast<std::size_t>(i - dd + j)];
        slot = slot - factor * divisor.c_[static_cast<std::size_t>(j)];
      }
    }
    return {UPoly(std::move(quot)), UPoly(std::move(rem))};
  }
  UPoly operator%(const UPoly& divisor) const { return divmod(divisor).second; }

  UPoly monic() const {
    if (is_zero()) return {};
    return scaled(cremona_inverse(leading()));
  }

  UPoly derivative() const {
    std::vector<F> r;
    for (std::size_t i = 1; i < c_.size(); ++i) r.push_back(c_[i] * F(static_cast<long>(i)));
    return UPoly(std::move(r));
  }

 private:
  static bool cremona_is_zero(const F& x) { return detail::field_is_zero(x); }
  static F cremona_inverse(const F& x) { return detail::field_inverse(x); }

  void trim() {
    while (!c_.empty() && cremona_is_zero(c_.back())) c_.pop_back();
  }

  std::vector<F> c_;
};

/// Monic greatest common divisor; gcd(0, 0) is the zero polynomial.
template <class F>
UPoly<F> poly_gcd(UPoly<F> a, UPoly<F> b) {
  while (!b.is_zero()) {
    UPoly<F> r = a % b;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

/// Inverse of a modulo m, assuming gcd(a, m) = 1.
template <class F>
UPoly<F> poly_inverse_mod(const UPoly<F>& a, const UPoly<F>& m) {
  UPoly<F> old_r = m, r = a % m;
  UPoly<F> old_s, s = UPoly<F>::constant(F(1));
  while (!r.is_zero()) {
    auto [q, rem] = old_r.divmod(r);
    old_r = std::move(r);
    r = std::move(rem);
    UPoly<F> next = old_s - q * s;
    old_s = std::move(s);
    s = std::move(next);
  }
  if (old_r.degree() != 0) throw PreconditionError("polynomial not invertible modulo the given modulus");
  return (old_s.scaled(detail::field_inverse(old_r.leading()))) % m;
}

}  // namespace cremona
