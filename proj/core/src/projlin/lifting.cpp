#include "cremona/projlin/lifting.hpp"

#include <random>

#include "cremona/errors.hpp"
#include "cremona/exactalg/numtheory.hpp"

namespace cremona {

namespace {

// The scalar c with m = c * I, or nullopt.
std::optional<Scalar> scalar_part(const Matrix& m) {
  if (!m.is_scalar_multiple_of_identity()) return std::nullopt;
  return m(0, 0);
}

Matrix companion(const Rational& lambda) {
  return Matrix{{0, 0, Scalar(lambda)}, {1, 0, 0}, {0, 1, 0}};
}

std::optional<Matrix> krylov_conjugator(const Matrix& a, const std::vector<Scalar>& v) {
  const std::vector<Scalar> av = a * v;
  const std::vector<Scalar> a2v = a * av;
  Matrix m = Matrix::from_columns({v, av, a2v});
  if (m.determinant().is_zero()) return std::nullopt;
  return m;
}

void require_order(const ProjMap& alpha, std::size_t r) {
  const auto ord = proj_order(alpha, r);
  if (!ord || *ord != r) throw PreconditionError("class does not have projective order " + std::to_string(r));
}

// Closed-form conjugators for order-3 elements fixing e1 with a normalized
// lower 2x2 block; returns nullopt when the shape does not apply.
std::optional<CompanionForm> closed_form_companion(const Matrix& a) {
  if (!a(1, 0).is_zero() || !a(2, 0).is_zero() || a(0, 0).is_zero()) return std::nullopt;
  const Matrix n = a.scaled(a(0, 0).inverse());
  const Scalar& a1 = n(0, 1);
  const Scalar& a2 = n(0, 2);
  const Scalar one(1L);
  std::optional<Matrix> m;
  if (n(1, 1) == Scalar(0L) && n(1, 2) == Scalar(-1L) && n(2, 1) == one && n(2, 2) == Scalar(-1L)) {
    m = Matrix{{a1 + Scalar(2L) * a2 - one, Scalar(-2L) * a1 - a2 - one, a1 - a2 - one},
               {-3, 3, 0},
               {-3, 0, 3}};
  } else if (n(1, 1) == Scalar(-1L) && n(1, 2) == one && n(2, 1) == Scalar(-1L) && n(2, 2) == Scalar(0L)) {
    const Scalar q = a1 * a1 + a1 * a2 + a2 * a2;
    m = Matrix{{q + one, one - q, one},
               {Scalar(-2L) * a1 - a2, a1 - a2, a1 + Scalar(2L) * a2},
               {-a1 - Scalar(2L) * a2, Scalar(2L) * a1 + a2, a2 - a1}};
  }
  if (!m || m->determinant().is_zero()) return std::nullopt;
  const auto cube = scalar_part(n.pow(3));
  if (!cube || !cube->is_rational()) return std::nullopt;
  const Rational lambda = cube->to_rational();
  const Matrix b = companion(lambda);
  if (m->inverse() * n * *m != b) return std::nullopt;
  return CompanionForm{n, lambda, b, *m};
}

}  // namespace

Scalar coprime_root(const Scalar& a, const Scalar& b, long m, long n) {
  if (m <= 0 || n <= 0) throw PreconditionError("exponents must be positive");
  if (gcd(m, n) != 1) throw PreconditionError("exponents must be coprime");
  if (a.is_zero() || b.is_zero()) throw PreconditionError("coprime_root needs nonzero arguments");
  if (a.pow(m) != b.pow(n)) throw PreconditionError("coprime_root needs a^m = b^n");
  const Bezout bz = extended_gcd(n, m);  // n x + m y = 1
  return a.pow(bz.x) * b.pow(bz.y);
}

Matrix lift_to_sl(const ProjMap& alpha, long r) {
  const auto n = static_cast<long>(alpha.dimension());
  if (r <= 0) throw PreconditionError("order must be positive");
  require_order(alpha, static_cast<std::size_t>(r));
  const Matrix& b = alpha.matrix();
  const Scalar lambda = *scalar_part(b.pow(static_cast<std::size_t>(r)));
  const Scalar det = b.determinant();
  // Want mu with mu^n = det B and mu^r = lambda; then B / mu is the lift.
  // With g = gcd(r, n), nu = mu^g solves the coprime problem and mu is a g-th root of nu.
  const long g = gcd(r, n);
  if (det.pow(r / g) != lambda.pow(n / g)) throw PreconditionError("no lift to SL over the coefficient field");
  const Scalar nu = coprime_root(det, lambda, r / g, n / g);
  Scalar mu = nu;
  if (g > 1) {
    std::optional<Rational> root;
    if (nu.is_rational()) root = rational_root(nu.to_rational(), static_cast<unsigned long>(g));
    if (!root) throw PreconditionError("no lift to SL over the coefficient field");
    mu = Scalar(*root);
  }
  const Matrix a = b.scaled(mu.inverse());
  if (a.determinant() != Scalar(1L) || !a.pow(static_cast<std::size_t>(r)).is_scalar_multiple_of_identity() ||
      a.pow(static_cast<std::size_t>(r))(0, 0) != Scalar(1L)) {
    throw PreconditionError("no lift to SL over the coefficient field");
  }
  return a;
}

std::pair<Matrix, Matrix> lift_form_preserving(const ProjMap& alpha, const MultiPoly& f) {
  const auto n = static_cast<long>(alpha.dimension());
  const auto d = static_cast<long>(f.degree());
  if (f.num_variables() != alpha.dimension()) throw PreconditionError("form and map dimensions differ");
  if (!f.homogeneous_degree() || d <= 0) throw PreconditionError("form must be homogeneous of positive degree");
  if (gcd(d, n) != 1) throw PreconditionError("form degree must be coprime to the dimension");
  const Matrix& m = alpha.matrix();
  const auto lambda = form_multiplier(f, m);
  if (!lambda) throw PreconditionError("map does not preserve the form up to a scalar");
  const auto order = proj_order(alpha);
  if (!order) throw PreconditionError("map has no finite order below the cap");
  // M^k = mu I with mu^n = det(M)^k and mu^d = lambda^k; c = det^x lambda^y
  // (n x + d y = 1) satisfies c^k = mu.
  const Bezout bz = extended_gcd(n, d);
  const Scalar c = m.determinant().pow(bz.x) * lambda->pow(bz.y);
  const Matrix lift = m.scaled(c.inverse());
  return {lift, -lift};
}

CompanionForm companion_order3_pgl3(const ProjMap& alpha) {
  if (alpha.dimension() != 3) throw PreconditionError("companion form needs a 3x3 class");
  require_order(alpha, 3);
  if (auto closed = closed_form_companion(alpha.matrix())) return *closed;

  const Matrix& a = alpha.matrix();
  const auto cube = scalar_part(a.pow(3));
  if (!cube->is_rational()) throw PreconditionError("companion form needs a rational representative");
  const Rational lambda = cube->to_rational();

  std::vector<std::vector<Scalar>> candidates;
  for (std::size_t i = 0; i < 3; ++i) {
    std::vector<Scalar> e(3);
    e[i] = 1;
    candidates.push_back(e);
  }
  for (std::size_t i = 0; i < 3; ++i) {
    for (std::size_t j = i + 1; j < 3; ++j) {
      std::vector<Scalar> e(3);
      e[i] = 1;
      e[j] = 1;
      candidates.push_back(e);
    }
  }
  for (const auto& v : candidates) {
    if (auto m = krylov_conjugator(a, v)) return CompanionForm{a, lambda, companion(lambda), *m};
  }
  std::mt19937_64 rng(0x5eed);
  std::uniform_int_distribution<long> entry(-10, 10);
  for (int attempt = 0; attempt < 1000; ++attempt) {
    std::vector<Scalar> v{Scalar(entry(rng)), Scalar(entry(rng)), Scalar(entry(rng))};
    if (auto m = krylov_conjugator(a, v)) return CompanionForm{a, lambda, companion(lambda), *m};
  }
  throw PreconditionError("no cyclic vector found");
}

Matrix order3_pgl2_normal_form() { return Matrix{{0, -1}, {1, -1}}; }

Order3Pgl2Form canonical_order3_pgl2(const ProjMap& alpha) {
  if (alpha.dimension() != 2) throw PreconditionError("expected a 2x2 class");
  const Matrix s = order3_pgl2_normal_form();
  for (bool use_inverse : {false, true}) {
    const Matrix a = lift_to_sl(use_inverse ? alpha.inverse() : alpha, 3);
    // A^3 = I, A != I, det A = 1: characteristic polynomial t^2 + t + 1, so
    // any v with v, Av independent gives the companion matrix S.
    for (std::size_t i = 0; i < 2; ++i) {
      std::vector<Scalar> v(2);
      v[i] = 1;
      const Matrix m = Matrix::from_columns({v, a * v});
      if (m.determinant().is_zero()) continue;
      if (m.inverse() * a * m == s) return {use_inverse, a, m};
    }
  }
  throw PreconditionError("order-3 class is not conjugate to S");
}

}  // namespace cremona
