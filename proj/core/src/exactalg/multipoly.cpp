#include "cremona/exactalg/multipoly.hpp"

#include <algorithm>
#include <cctype>
#include <set>
#include <sstream>

#include "cremona/errors.hpp"

namespace cremona {

std::vector<Variable> plain_variables(std::initializer_list<std::string_view> names) {
  std::vector<Variable> out;
  for (auto n : names) out.push_back({std::string(n), 1});
  return out;
}

MultiPoly MultiPoly::constant(std::vector<Variable> vars, const Scalar& c) {
  MultiPoly p(std::move(vars));
  p.add_term(Exponents(p.vars_.size(), 0), c);
  return p;
}

MultiPoly MultiPoly::variable(std::vector<Variable> vars, std::size_t index) {
  if (index >= vars.size()) throw PreconditionError("variable index out of range");
  MultiPoly p(std::move(vars));
  Exponents e(p.vars_.size(), 0);
  e[index] = 1;
  p.add_term(e, Scalar(1L));
  return p;
}

MultiPoly MultiPoly::variable(std::vector<Variable> vars, std::string_view name) {
  MultiPoly probe(vars);
  const auto idx = probe.variable_index(name);
  if (!idx) throw PreconditionError("unknown variable '" + std::string(name) + "'");
  return variable(std::move(vars), *idx);
}

std::optional<std::size_t> MultiPoly::variable_index(std::string_view name) const {
  for (std::size_t i = 0; i < vars_.size(); ++i) {
    if (vars_[i].name == name) return i;
  }
  return std::nullopt;
}

Scalar MultiPoly::coefficient(const Exponents& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? Scalar(0L) : it->second;
}

void MultiPoly::add_term(const Exponents& e, const Scalar& c) {
  if (e.size() != vars_.size()) throw PreconditionError("exponent vector has wrong length");
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (inserted) return;
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

int MultiPoly::weighted_degree(const Exponents& e) const {
  int d = 0;
  for (std::size_t i = 0; i < e.size(); ++i) d += vars_[i].weight * e[i];
  return d;
}

int MultiPoly::degree() const {
  int d = -1;
  for (const auto& [e, c] : terms_) d = std::max(d, weighted_degree(e));
  return d;
}

std::optional<int> MultiPoly::homogeneous_degree() const {
  std::optional<int> d;
  for (const auto& [e, c] : terms_) {
    const int td = weighted_degree(e);
    if (d && *d != td) return std::nullopt;
    d = td;
  }
  return d;
}

void MultiPoly::check_same_variables(const MultiPoly& o) const {
  if (vars_ != o.vars_) throw PreconditionError("polynomials over different variable lists");
}

MultiPoly MultiPoly::operator+(const MultiPoly& o) const {
  check_same_variables(o);
  MultiPoly out = *this;
  for (const auto& [e, c] : o.terms_) out.add_term(e, c);
  return out;
}

MultiPoly MultiPoly::operator-() const { return scaled(Scalar(-1L)); }

MultiPoly MultiPoly::operator-(const MultiPoly& o) const { return *this + (-o); }

MultiPoly MultiPoly::operator*(const MultiPoly& o) const {
  check_same_variables(o);
  MultiPoly out(vars_);
  Exponents e(vars_.size());
  for (const auto& [ea, ca] : terms_) {
    for (const auto& [eb, cb] : o.terms_) {
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
      out.add_term(e, ca * cb);
    }
  }
  return out;
}

MultiPoly MultiPoly::scaled(const Scalar& s) const {
  MultiPoly out(vars_);
  if (s.is_zero()) return out;
  for (const auto& [e, c] : terms_) out.terms_.emplace(e, c * s);
  return out;
}

MultiPoly MultiPoly::pow(unsigned e) const {
  MultiPoly result = constant(vars_, Scalar(1L));
  MultiPoly base = *this;
  while (e > 0) {
    if (e & 1U) result = result * base;
    e >>= 1U;
    if (e > 0) base = base * base;
  }
  return result;
}

MultiPoly MultiPoly::substitute(const std::vector<MultiPoly>& images) const {
  if (images.size() != vars_.size()) throw PreconditionError("substitution must assign every variable");
  if (images.empty()) return *this;
  const auto& target_vars = images.front().variables();
  for (const auto& img : images) {
    if (img.variables() != target_vars) throw PreconditionError("substitution images over different variables");
  }
  // powers[i][k] = images[i]^k, filled lazily.
  std::vector<std::vector<MultiPoly>> powers(images.size());
  auto power_of = [&](std::size_t i, int k) -> const MultiPoly& {
    auto& cache = powers[i];
    if (cache.empty()) cache.push_back(constant(target_vars, Scalar(1L)));
    while (static_cast<int>(cache.size()) <= k) cache.push_back(cache.back() * images[i]);
    return cache[static_cast<std::size_t>(k)];
  };
  MultiPoly out(target_vars);
  for (const auto& [e, c] : terms_) {
    MultiPoly term = constant(target_vars, c);
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] > 0) term = term * power_of(i, e[i]);
    }
    out = out + term;
  }
  return out;
}

MultiPoly MultiPoly::substitute(const std::map<std::string, MultiPoly>& assignment) const {
  std::vector<MultiPoly> images;
  images.reserve(vars_.size());
  for (const auto& v : vars_) {
    auto it = assignment.find(v.name);
    if (it == assignment.end()) throw PreconditionError("unassigned variable '" + v.name + "'");
    images.push_back(it->second);
  }
  return substitute(images);
}

std::string MultiPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [e, c] = *it;
    std::string coeff;
    bool negative = false;
    if (c.is_rational()) {
      Rational q = c.to_rational();
      negative = sgn(q) < 0;
      coeff = Rational(abs(q)).get_str();
    } else {
      coeff = "(" + c.to_string() + ")";
    }
    if (first) {
      if (negative) out << "-";
    } else {
      out << (negative ? " - " : " + ");
    }
    first = false;
    std::string mono;
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += vars_[i].name;
      if (e[i] > 1) mono += "^" + std::to_string(e[i]);
    }
    if (mono.empty()) {
      out << coeff;
    } else if (coeff == "1") {
      out << mono;
    } else {
      out << coeff << "*" << mono;
    }
  }
  return out.str();
}

namespace {

class Parser {
 public:
  Parser(std::string_view text, const std::vector<Variable>& vars, const std::map<std::string, Scalar>& constants)
      : text_(text), vars_(vars), constants_(constants) {}

  MultiPoly parse() {
    MultiPoly p = expr();
    skip_space();
    if (pos_ != text_.size()) fail("unexpected character");
    return p;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw PreconditionError("polynomial parse error at offset " + std::to_string(pos_) + ": " + what + " in \"" +
                            std::string(text_) + "\"");
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char ch) {
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == ch) {
      ++pos_;
      return true;
    }
    return false;
  }

  MultiPoly expr() {
    MultiPoly acc = term();
    for (;;) {
      if (accept('+')) {
        acc = acc + term();
      } else if (accept('-')) {
        acc = acc - term();
      } else {
        return acc;
      }
    }
  }

  MultiPoly term() {
    MultiPoly acc = unary();
    for (;;) {
      if (accept('*')) {
        acc = acc * unary();
      } else if (accept('/')) {
        MultiPoly d = unary();
        if (d.degree() > 0 || d.is_zero()) fail("division by a non-constant or zero");
        acc = acc.scaled(d.terms().begin()->second.inverse());
      } else {
        return acc;
      }
    }
  }

  MultiPoly unary() {
    if (accept('-')) return -unary();
    if (accept('+')) return unary();
    return power();
  }

  MultiPoly power() {
    MultiPoly base = atom();
    if (accept('^')) {
      skip_space();
      const std::size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      if (start == pos_) fail("expected exponent");
      base = base.pow(static_cast<unsigned>(std::stoul(std::string(text_.substr(start, pos_ - start)))));
    }
    return base;
  }

  MultiPoly atom() {
    skip_space();
    if (accept('(')) {
      MultiPoly inner = expr();
      if (!accept(')')) fail("expected ')'");
      return inner;
    }
    if (pos_ >= text_.size()) fail("unexpected end of input");
    const char ch = text_[pos_];
    if (std::isdigit(static_cast<unsigned char>(ch))) {
      const std::size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      return MultiPoly::constant(vars_, Scalar(Rational(Integer(std::string(text_.substr(start, pos_ - start))))));
    }
    if (std::isalpha(static_cast<unsigned char>(ch)) || ch == '_') {
      const std::size_t start = pos_;
      while (pos_ < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) {
        ++pos_;
      }
      const std::string name(text_.substr(start, pos_ - start));
      for (std::size_t i = 0; i < vars_.size(); ++i) {
        if (vars_[i].name == name) return MultiPoly::variable(vars_, i);
      }
      if (auto it = constants_.find(name); it != constants_.end()) return MultiPoly::constant(vars_, it->second);
      fail("unknown identifier '" + name + "'");
    }
    fail("unexpected character");
  }

  std::string_view text_;
  const std::vector<Variable>& vars_;
  const std::map<std::string, Scalar>& constants_;
  std::size_t pos_ = 0;
};

std::vector<std::size_t> weight_one_indices(const MultiPoly& f) {
  std::vector<std::size_t> idx;
  for (std::size_t i = 0; i < f.num_variables(); ++i) {
    if (f.variables()[i].weight == 1) idx.push_back(i);
  }
  return idx;
}

// Dehomogenizes a binary form at the second variable: coefficient of x^i y^j
// goes to t^i.
UPoly<Scalar> dehomogenize(const MultiPoly& f) {
  std::vector<Scalar> c(static_cast<std::size_t>(std::max(f.degree(), 0)) + 1);
  for (const auto& [e, coeff] : f.terms()) c[static_cast<std::size_t>(e[0])] += coeff;
  return UPoly<Scalar>(std::move(c));
}

}  // namespace

MultiPoly MultiPoly::parse(std::string_view text, std::vector<Variable> vars,
                           const std::map<std::string, Scalar>& constants) {
  return Parser(text, vars, constants).parse();
}

MultiPoly poly_compose_linear(const MultiPoly& f, const Matrix& m) {
  const auto idx = weight_one_indices(f);
  if (m.rows() != idx.size() || m.cols() != idx.size()) {
    throw PreconditionError("matrix size " + std::to_string(m.rows()) + "x" + std::to_string(m.cols()) +
                            " does not match " + std::to_string(idx.size()) + " weight-1 variables");
  }
  std::vector<MultiPoly> images;
  for (std::size_t i = 0; i < f.num_variables(); ++i) images.push_back(MultiPoly::variable(f.variables(), i));
  for (std::size_t i = 0; i < idx.size(); ++i) {
    MultiPoly form(f.variables());
    for (std::size_t j = 0; j < idx.size(); ++j) {
      form = form + MultiPoly::variable(f.variables(), idx[j]).scaled(m(i, j));
    }
    images[idx[i]] = std::move(form);
  }
  return f.substitute(images);
}

MultiPoly poly_compose_graded(const MultiPoly& f, const Matrix& m) {
  const std::size_t n = f.num_variables();
  if (m.rows() != n || m.cols() != n) throw PreconditionError("matrix size does not match variable count");
  std::vector<MultiPoly> images;
  for (std::size_t i = 0; i < n; ++i) {
    MultiPoly form(f.variables());
    for (std::size_t j = 0; j < n; ++j) {
      if (m(i, j).is_zero()) continue;
      if (f.variables()[i].weight != f.variables()[j].weight) {
        throw PreconditionError("graded substitution mixes variables of different weights");
      }
      form = form + MultiPoly::variable(f.variables(), j).scaled(m(i, j));
    }
    images.push_back(std::move(form));
  }
  return f.substitute(images);
}

std::optional<Scalar> form_multiplier(const MultiPoly& f, const Matrix& m) {
  if (f.is_zero()) throw PreconditionError("zero form");
  const MultiPoly g = poly_compose_graded(f, m);
  const auto& [e, c] = *f.terms().begin();
  const Scalar lambda = g.coefficient(e) / c;
  if (g == f.scaled(lambda)) return lambda;
  return std::nullopt;
}

bool binary_form_common_root(const MultiPoly& f, const MultiPoly& g) {
  for (const auto* p : {&f, &g}) {
    if (p->num_variables() != 2) throw PreconditionError("binary form expected");
    if (p->is_zero()) throw PreconditionError("zero binary form");
    if (!p->homogeneous_degree()) throw PreconditionError("binary form is not homogeneous");
  }
  const UPoly<Scalar> uf = dehomogenize(f);
  const UPoly<Scalar> ug = dehomogenize(g);
  // Root at [1:0] iff the y-free coefficient vanishes (degree drops).
  const bool f_at_infinity = uf.degree() < f.degree();
  const bool g_at_infinity = ug.degree() < g.degree();
  if (f_at_infinity && g_at_infinity) return true;
  return poly_gcd(uf, ug).degree() > 0;
}

bool binary_forms_common_root(const std::vector<MultiPoly>& forms) {
  bool all_at_infinity = true;
  bool any = false;
  UPoly<Scalar> g;
  for (const auto& f : forms) {
    if (f.num_variables() != 2) throw PreconditionError("binary form expected");
    if (f.is_zero()) continue;
    if (!f.homogeneous_degree()) throw PreconditionError("binary form is not homogeneous");
    const UPoly<Scalar> u = dehomogenize(f);
    all_at_infinity = all_at_infinity && u.degree() < f.degree();
    g = any ? poly_gcd(g, u) : u;
    any = true;
  }
  if (!any || all_at_infinity) return true;
  return g.degree() > 0;
}

Rational cubic_discriminant(const MultiPoly& p) {
  if (p.num_variables() != 1) throw PreconditionError("cubic must be univariate");
  if (p.degree() != 3) throw PreconditionError("polynomial is not a cubic");
  std::vector<Rational> c(4, Rational(0));
  for (const auto& [e, coeff] : p.terms()) c[static_cast<std::size_t>(e[0])] = coeff.to_rational();
  if (c[3] != 1) throw PreconditionError("cubic is not monic");
  const Rational& a = c[2];
  const Rational& b = c[1];
  const Rational& d = c[0];
  // Depress t = s - a/3: s^3 + P s + Q.
  const Rational P = b - a * a / 3;
  const Rational Q = Rational(2) * a * a * a / 27 - a * b / 3 + d;
  return Rational(-4 * P * P * P - 27 * Q * Q);
}

namespace {

std::vector<Integer> positive_divisors(Integer n) {
  n = abs(n);
  std::vector<Integer> small, large;
  for (Integer d = 1; d * d <= n; ++d) {
    if (n % d == 0) {
      small.push_back(d);
      if (d * d != n) large.push_back(n / d);
    }
  }
  small.insert(small.end(), large.rbegin(), large.rend());
  return small;
}

}  // namespace

std::vector<Rational> rational_roots(const std::vector<Rational>& coeffs) {
  UPoly<Rational> p(coeffs);
  if (p.is_zero()) throw PreconditionError("rational roots of the zero polynomial");
  std::set<Rational> roots;
  // Clear denominators.
  Integer den_lcm = 1;
  for (const auto& c : p.coefficients()) mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.get_den_mpz_t());
  std::vector<Integer> ic;
  for (const auto& c : p.coefficients()) ic.push_back(Integer(c * den_lcm));
  std::size_t shift = 0;
  while (shift < ic.size() && ic[shift] == 0) ++shift;
  if (shift > 0) roots.insert(Rational(0));
  ic.erase(ic.begin(), ic.begin() + static_cast<std::ptrdiff_t>(shift));
  if (ic.size() > 1) {
    const UPoly<Rational> reduced(std::vector<Rational>(ic.begin(), ic.end()));
    for (const auto& num : positive_divisors(ic.front())) {
      for (const auto& den : positive_divisors(ic.back())) {
        for (int sign : {1, -1}) {
          const Rational cand = make_rational(Integer(sign * num), den);
          if (is_zero(reduced.evaluate(cand))) roots.insert(cand);
        }
      }
    }
  }
  return {roots.begin(), roots.end()};
}

bool sextic_reducibility_criterion(const Rational& b) {
  if (is_zero(b)) throw PreconditionError("sextic criterion requires b != 0");
  // b^2 = n^3 forces n = (b^2)^{1/3}; then s = b/n satisfies s^3 = b.
  const auto n = rational_cube_root(Rational(b * b));
  if (!n) return false;
  const Rational s = b / *n;
  // b = m^3 - 3 m n with n = s^2: rational roots of m^3 - 3 s^2 m - b.
  const std::vector<Rational> cubic{Rational(-b), Rational(-3 * s * s), Rational(0), Rational(1)};
  for (const auto& m : rational_roots(cubic)) {
    if (m * m * m - 3 * m * *n == b && (*n) * (*n) * (*n) == b * b) return true;
  }
  return false;
}

}  // namespace cremona
