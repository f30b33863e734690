#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "cremona/exactalg/cyclotomic.hpp"
#include "cremona/exactalg/matrix.hpp"

namespace cremona {

/// A polynomial variable with a positive grading weight (1 for ordinary
/// projective coordinates).
struct Variable {
  std::string name;
  int weight = 1;

  friend bool operator==(const Variable&, const Variable&) = default;
};

/// Builds weight-1 variables from names.
std::vector<Variable> plain_variables(std::initializer_list<std::string_view> names);

/// Sparse multivariate polynomial over Scalar. Terms are kept in a std::map
/// keyed by exponent vector, so iteration order, printing and equality are
/// canonical. Zero coefficients are never stored.
class MultiPoly {
 public:
  using Exponents = std::vector<int>;

  MultiPoly() = default;
  explicit MultiPoly(std::vector<Variable> vars) : vars_(std::move(vars)) {}

  static MultiPoly constant(std::vector<Variable> vars, const Scalar& c);
  static MultiPoly variable(std::vector<Variable> vars, std::size_t index);
  static MultiPoly variable(std::vector<Variable> vars, std::string_view name);

  /// Parses an expression such as "3*w^2 - (x1^4 + x2^4)/5". Supports + - * /
  /// (division by constants only), ^ with nonnegative integer exponents,
  /// parentheses, integer literals, the variables in `vars` and any named
  /// constants supplied in `constants`.
  static MultiPoly parse(std::string_view text, std::vector<Variable> vars,
                         const std::map<std::string, Scalar>& constants = {});

  const std::vector<Variable>& variables() const { return vars_; }
  std::size_t num_variables() const { return vars_.size(); }
  std::optional<std::size_t> variable_index(std::string_view name) const;
  const std::map<Exponents, Scalar>& terms() const { return terms_; }

  bool is_zero() const { return terms_.empty(); }
  Scalar coefficient(const Exponents& e) const;
  void add_term(const Exponents& e, const Scalar& c);

  /// Weighted degree Σ weight_i·e_i of a monomial.
  int weighted_degree(const Exponents& e) const;
  /// Largest weighted degree of a term; -1 for zero.
  int degree() const;
  /// The common weighted degree when every term has the same one.
  std::optional<int> homogeneous_degree() const;

  MultiPoly operator+(const MultiPoly& o) const;
  MultiPoly operator-(const MultiPoly& o) const;
  MultiPoly operator-() const;
  MultiPoly operator*(const MultiPoly& o) const;
  MultiPoly scaled(const Scalar& s) const;
  MultiPoly pow(unsigned e) const;

  friend bool operator==(const MultiPoly& a, const MultiPoly& b) {
    return a.vars_ == b.vars_ && a.terms_ == b.terms_;
  }

  /// Replaces each variable by the polynomial it maps to. All images must share
  /// one variable list, which becomes the variable list of the result. Throws
  /// PreconditionError for an unassigned variable.
  MultiPoly substitute(const std::map<std::string, MultiPoly>& assignment) const;
  MultiPoly substitute(const std::vector<MultiPoly>& images) const;

  /// Applies a coefficient map (e.g. a Galois automorphism) to every coefficient.
  template <class Fn>
  MultiPoly map_coefficients(Fn&& fn) const {
    MultiPoly out(vars_);
    for (const auto& [e, c] : terms_) out.add_term(e, fn(c));
    return out;
  }

  std::string to_string() const;

 private:
  void check_same_variables(const MultiPoly& o) const;

  std::vector<Variable> vars_;
  std::map<Exponents, Scalar> terms_;
};

/// F ∘ M: the weight-1 variables x_0..x_{k-1} (in order) are replaced by the
/// linear forms (M·x)_i; variables of other weights are left unchanged.
/// Throws PreconditionError unless M is k×k.
MultiPoly poly_compose_linear(const MultiPoly& f, const Matrix& m);

/// Like poly_compose_linear, but acts on every variable; M may only mix
/// variables of equal weight (a graded linear substitution).
MultiPoly poly_compose_graded(const MultiPoly& f, const Matrix& m);

/// λ with f ∘ M = λ·f (graded substitution over all variables), if one exists.
std::optional<Scalar> form_multiplier(const MultiPoly& f, const Matrix& m);

/// True iff two homogeneous binary forms share a root in P^1 over the
/// algebraic closure, i.e. gcd(f, g) has positive degree. Throws for zero or
/// non-binary input.
bool binary_form_common_root(const MultiPoly& f, const MultiPoly& g);

/// True iff all the given binary forms vanish at one point of P^1. Zero forms
/// impose no condition; a list of only zero forms has a common root.
bool binary_forms_common_root(const std::vector<MultiPoly>& forms);

/// Discriminant of a monic cubic t^3 + a t^2 + b t + c, given as a univariate
/// MultiPoly. Throws PreconditionError unless the input is a monic cubic in one
/// variable with rational coefficients.
Rational cubic_discriminant(const MultiPoly& p);

/// Rational roots of a nonzero polynomial with rational coefficients (lowest
/// degree first), found with the rational-root theorem. Sorted, without
/// repetition.
std::vector<Rational> rational_roots(const std::vector<Rational>& coeffs);

/// True iff there exist rational n, m with b^2 = n^3 and b = m^3 - 3mn (the
/// reducibility criterion for x^6 + b x^3 + b^2). Throws for b == 0.
bool sextic_reducibility_criterion(const Rational& b);

}  // namespace cremona
