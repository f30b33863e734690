#include "cremona/exactalg/cyclotomic.hpp"

#include <map>
#include <mutex>
#include <sstream>

#include "cremona/errors.hpp"
#include "cremona/exactalg/numtheory.hpp"

namespace cremona {

namespace {

using QPoly = UPoly<Rational>;

// Residue of a raw power-basis vector modulo Φ_n, padded to length φ(n).
std::vector<Rational> reduce_raw(std::uint32_t n, std::vector<Rational> raw) {
  const auto& phi_poly = cyclotomic_polynomial(n);
  QPoly r = QPoly(std::move(raw)) % phi_poly;
  std::vector<Rational> out = r.coefficients();
  out.resize(static_cast<std::size_t>(phi_poly.degree()), Rational(0));
  return out;
}

// Solves basis * y = target over ℚ where basis is given column-wise.
// Returns nullopt when the system is inconsistent.
std::optional<std::vector<Rational>> solve_columns(const std::vector<std::vector<Rational>>& columns,
                                                   const std::vector<Rational>& target) {
  const std::size_t rows = target.size();
  const std::size_t cols = columns.size();
  std::vector<std::vector<Rational>> a(rows, std::vector<Rational>(cols + 1));
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t j = 0; j < cols; ++j) a[i][j] = columns[j][i];
    a[i][cols] = target[i];
  }
  std::vector<std::size_t> pivot_col;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && is_zero(a[p][c])) ++p;
    if (p == rows) continue;
    std::swap(a[p], a[r]);
    const Rational inv = Rational(1) / a[r][c];
    for (std::size_t j = c; j <= cols; ++j) a[r][j] *= inv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || is_zero(a[i][c])) continue;
      const Rational f = a[i][c];
      for (std::size_t j = c; j <= cols; ++j) a[i][j] -= f * a[r][j];
    }
    pivot_col.push_back(c);
    ++r;
  }
  for (std::size_t i = r; i < rows; ++i) {
    if (!is_zero(a[i][cols])) return std::nullopt;
  }
  std::vector<Rational> y(cols, Rational(0));
  for (std::size_t i = 0; i < pivot_col.size(); ++i) y[pivot_col[i]] = a[i][cols];
  return y;
}

}  // namespace

const UPoly<Rational>& cyclotomic_polynomial(std::uint32_t n) {
  if (n == 0) throw PreconditionError("cyclotomic polynomial of conductor 0");
  static std::mutex mutex;
  static std::map<std::uint32_t, QPoly> cache;
  {
    std::lock_guard lock(mutex);
    if (auto it = cache.find(n); it != cache.end()) return it->second;
  }
  // x^n - 1 divided by Φ_d for every proper divisor d.
  QPoly poly = QPoly::monomial(Rational(1), n) - QPoly::constant(Rational(1));
  for (auto d : divisors(n)) {
    if (d == n) continue;
    poly = poly.divmod(cyclotomic_polynomial(static_cast<std::uint32_t>(d))).first;
  }
  std::lock_guard lock(mutex);
  return cache.emplace(n, std::move(poly)).first->second;
}

Cyclotomic::Cyclotomic(std::uint32_t n, std::vector<Rational> coeffs) : n_(n), c_(std::move(coeffs)) {
  normalize();
}

Cyclotomic Cyclotomic::reduce(std::uint32_t n, std::span<const Rational> raw) {
  if (n == 0) throw PreconditionError("cyclotomic conductor must be positive");
  return Cyclotomic(n, reduce_raw(n, std::vector<Rational>(raw.begin(), raw.end())));
}

Cyclotomic Cyclotomic::zeta(std::uint32_t n, std::int64_t k) {
  if (n == 0) throw PreconditionError("cyclotomic conductor must be positive");
  std::vector<Rational> raw(n, Rational(0));
  raw[static_cast<std::size_t>(mod(k, n))] = 1;
  return reduce(n, raw);
}

void Cyclotomic::normalize() {
  for (;;) {
    if (n_ == 1) return;
    if (n_ % 4 == 2) {
      // ζ_{2m} = -ζ_m^{(m+1)/2} for odd m.
      const std::uint32_t m = n_ / 2;
      std::vector<Rational> raw(m, Rational(0));
      for (std::size_t j = 0; j < c_.size(); ++j) {
        const auto e = static_cast<std::size_t>((j * ((m + 1) / 2)) % m);
        if (j % 2 == 0) {
          raw[e] += c_[j];
        } else {
          raw[e] -= c_[j];
        }
      }
      n_ = m;
      c_ = reduce_raw(m, std::move(raw));
      continue;
    }
    bool rational = true;
    for (std::size_t j = 1; j < c_.size(); ++j) {
      if (!cremona::is_zero(c_[j])) {
        rational = false;
        break;
      }
    }
    if (rational) {
      c_.resize(1);
      n_ = 1;
      return;
    }
    bool moved = false;
    for (auto d64 : divisors(n_)) {
      const auto d = static_cast<std::uint32_t>(d64);
      if (d == 1 || d == n_ || d % 4 == 2) continue;
      std::vector<std::vector<Rational>> basis;
      const auto phi_d = static_cast<std::size_t>(euler_phi(d));
      for (std::size_t j = 0; j < phi_d; ++j) {
        std::vector<Rational> raw(n_, Rational(0));
        raw[(j * (n_ / d)) % n_] = 1;
        basis.push_back(reduce_raw(n_, std::move(raw)));
      }
      if (auto y = solve_columns(basis, c_)) {
        n_ = d;
        c_ = std::move(*y);
        moved = true;
        break;
      }
    }
    if (!moved) return;
  }
}

bool Cyclotomic::is_zero() const { return n_ == 1 && cremona::is_zero(c_[0]); }

const Rational& Cyclotomic::to_rational() const {
  if (n_ != 1) throw PreconditionError("cyclotomic element is not rational: " + to_string());
  return c_[0];
}

std::vector<Rational> Cyclotomic::raw_in(std::uint32_t n) const {
  if (n == 0 || n % n_ != 0) {
    throw PreconditionError("conductor " + std::to_string(n_) + " does not divide " + std::to_string(n));
  }
  std::vector<Rational> raw(n, Rational(0));
  const std::uint32_t step = n / n_;
  for (std::size_t j = 0; j < c_.size(); ++j) raw[j * step] = c_[j];
  return raw;
}

namespace {

struct Aligned {
  std::uint32_t n;
  std::vector<Rational> a;
  std::vector<Rational> b;
};

Aligned align(const Cyclotomic& a, const Cyclotomic& b) {
  if (a.conductor() == b.conductor()) return {a.conductor(), a.coefficients(), b.coefficients()};
  const auto n = static_cast<std::uint32_t>(lcm(a.conductor(), b.conductor()));
  return {n, reduce_raw(n, a.raw_in(n)), reduce_raw(n, b.raw_in(n))};
}

}  // namespace

Cyclotomic Cyclotomic::operator-() const {
  std::vector<Rational> c = c_;
  for (auto& x : c) x = -x;
  return Cyclotomic(n_, std::move(c));
}

Cyclotomic operator+(const Cyclotomic& a, const Cyclotomic& b) {
  if (a.n_ == 1 && b.n_ == 1) return Cyclotomic(Rational(a.c_[0] + b.c_[0]));
  auto [n, x, y] = align(a, b);
  for (std::size_t i = 0; i < x.size(); ++i) x[i] += y[i];
  return Cyclotomic(n, std::move(x));
}

Cyclotomic operator-(const Cyclotomic& a, const Cyclotomic& b) {
  if (a.n_ == 1 && b.n_ == 1) return Cyclotomic(Rational(a.c_[0] - b.c_[0]));
  auto [n, x, y] = align(a, b);
  for (std::size_t i = 0; i < x.size(); ++i) x[i] -= y[i];
  return Cyclotomic(n, std::move(x));
}

Cyclotomic operator*(const Cyclotomic& a, const Cyclotomic& b) {
  if (a.n_ == 1 && b.n_ == 1) return Cyclotomic(Rational(a.c_[0] * b.c_[0]));
  if (a.n_ == 1 || b.n_ == 1) {
    const Cyclotomic& q = a.n_ == 1 ? a : b;
    const Cyclotomic& x = a.n_ == 1 ? b : a;
    std::vector<Rational> c = x.c_;
    for (auto& v : c) v *= q.c_[0];
    return Cyclotomic(x.n_, std::move(c));
  }
  auto [n, x, y] = align(a, b);
  const QPoly prod = QPoly(std::move(x)) * QPoly(std::move(y));
  return Cyclotomic(n, reduce_raw(n, prod.coefficients()));
}

Cyclotomic operator/(const Cyclotomic& a, const Cyclotomic& b) { return a * b.inverse(); }

Cyclotomic Cyclotomic::inverse() const {
  if (is_zero()) throw PreconditionError("inverse of zero");
  if (n_ == 1) return Cyclotomic(Rational(Rational(1) / c_[0]));
  const QPoly inv = poly_inverse_mod(QPoly(c_), cyclotomic_polynomial(n_));
  std::vector<Rational> c = inv.coefficients();
  c.resize(c_.size(), Rational(0));
  return Cyclotomic(n_, std::move(c));
}

Cyclotomic Cyclotomic::pow(std::int64_t e) const {
  if (e < 0) return inverse().pow(-e);
  Cyclotomic result(1L);
  Cyclotomic base = *this;
  while (e > 0) {
    if (e & 1) result = result * base;
    e >>= 1;
    if (e > 0) base = base * base;
  }
  return result;
}

std::string Cyclotomic::to_string() const {
  std::ostringstream out;
  bool first = true;
  for (std::size_t j = 0; j < c_.size(); ++j) {
    if (cremona::is_zero(c_[j])) continue;
    Rational coeff = c_[j];
    if (first) {
      if (sgn(coeff) < 0) {
        out << "-";
        coeff = -coeff;
      }
    } else {
      out << (sgn(coeff) < 0 ? " - " : " + ");
      coeff = abs(coeff);
    }
    first = false;
    if (j == 0) {
      out << coeff.get_str();
      continue;
    }
    if (coeff != 1) out << coeff.get_str() << "*";
    out << "z" << n_;
    if (j > 1) out << "^" << j;
  }
  if (first) out << "0";
  return out.str();
}

GaloisMap::GaloisMap(std::uint32_t n, std::int64_t k) : n_(n), k_(0) {
  if (n == 0) throw PreconditionError("Galois map with conductor 0");
  if (gcd(k, n) != 1) throw PreconditionError("Galois exponent must be coprime to the conductor");
  k_ = mod(k, n);
}

GaloisMap GaloisMap::after(const GaloisMap& first) const {
  if (first.n_ != n_) throw PreconditionError("Galois map conductor mismatch");
  return GaloisMap(n_, mod(k_ * first.k_, n_));
}

Cyclotomic galois_apply(const GaloisMap& g, const Cyclotomic& x) {
  const std::uint32_t n = g.conductor();
  if (n % x.conductor() != 0) {
    throw PreconditionError("element of conductor " + std::to_string(x.conductor()) +
                            " does not lie in Q(zeta_" + std::to_string(n) + ")");
  }
  const std::vector<Rational> raw = x.raw_in(n);
  std::vector<Rational> image(n, Rational(0));
  for (std::size_t i = 0; i < raw.size(); ++i) {
    if (is_zero(raw[i])) continue;
    image[static_cast<std::size_t>(mod(static_cast<std::int64_t>(i) * g.exponent(), n))] += raw[i];
  }
  return Cyclotomic::reduce(n, image);
}

}  // namespace cremona
