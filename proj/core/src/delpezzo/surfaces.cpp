#include "cremona/delpezzo/surfaces.hpp"

#include <algorithm>

#include "cremona/errors.hpp"

namespace cremona {

WeightedHypersurface::WeightedHypersurface(MultiPoly f) : f_(std::move(f)) {
  if (f_.is_zero()) throw PreconditionError("defining polynomial is zero");
  const auto d = f_.homogeneous_degree();
  if (!d) throw PreconditionError("defining polynomial is not weighted-homogeneous");
  degree_ = *d;
}

std::vector<int> WeightedHypersurface::weights() const {
  std::vector<int> w;
  for (const auto& v : f_.variables()) w.push_back(v.weight);
  return w;
}

std::vector<Variable> curve_parameters() { return plain_variables({"a", "b"}); }

ParamCurve::ParamCurve(std::vector<int> weights, std::vector<MultiPoly> components)
    : weights_(std::move(weights)), components_(std::move(components)) {
  if (weights_.size() != components_.size()) throw PreconditionError("one component per ambient coordinate");
  if (weights_.empty()) throw PreconditionError("empty curve");
  bool have_degree = false;
  for (std::size_t i = 0; i < components_.size(); ++i) {
    const auto& c = components_[i];
    if (weights_[i] <= 0) throw PreconditionError("weights must be positive");
    if (c.num_variables() != 2) throw PreconditionError("components must be binary forms");
    if (c.is_zero()) continue;
    const auto deg = c.homogeneous_degree();
    if (!deg || *deg % weights_[i] != 0) throw PreconditionError("component degree incompatible with weight");
    const int d = *deg / weights_[i];
    if (have_degree && d != d_) throw PreconditionError("components have inconsistent degrees");
    d_ = d;
    have_degree = true;
  }
  if (!have_degree) throw PreconditionError("all components vanish");
  if (binary_forms_common_root(components_)) throw PreconditionError("components share a zero on P^1");
}

ParamCurve ParamCurve::parse(std::vector<int> weights, const std::vector<std::string>& components) {
  std::vector<MultiPoly> polys;
  for (const auto& text : components) polys.push_back(MultiPoly::parse(text, curve_parameters()));
  return {std::move(weights), std::move(polys)};
}

bool surface_contains_curve(const WeightedHypersurface& s, const ParamCurve& c) {
  if (s.weights() != c.weights()) throw PreconditionError("curve and surface live in different ambients");
  return s.equation().substitute(c.components()).is_zero();
}

namespace {

bool is_parameter_pair(const MultiPoly& u, const MultiPoly& v) {
  if (u.degree() != 1 || v.degree() != 1) return false;
  const Scalar det = u.coefficient({1, 0}) * v.coefficient({0, 1}) - u.coefficient({0, 1}) * v.coefficient({1, 0});
  return !is_zero(det);
}

// Coordinates i, j of weight 1 on which both curves agree and restrict to an
// isomorphism P^1 -> P^1.
std::optional<std::pair<std::size_t, std::size_t>> shared_base(const ParamCurve& c1, const ParamCurve& c2) {
  if (c1.parameter_degree() != 1 || c2.parameter_degree() != 1) return std::nullopt;
  const auto& w = c1.weights();
  for (std::size_t i = 0; i < w.size(); ++i) {
    for (std::size_t j = i + 1; j < w.size(); ++j) {
      if (w[i] != 1 || w[j] != 1) continue;
      const auto& u = c1.components();
      const auto& v = c2.components();
      if (u[i] == v[i] && u[j] == v[j] && is_parameter_pair(u[i], u[j])) return std::pair{i, j};
    }
  }
  return std::nullopt;
}

bool is_unweighted_line(const ParamCurve& c) {
  for (int w : c.weights()) {
    if (w != 1) return false;
  }
  return c.parameter_degree() == 1;
}

// Meets iff every 3x3 minor of [u | v | other(t)] vanishes at a common t,
// where u, v span the line.
bool line_meets(const ParamCurve& line, const ParamCurve& other) {
  const std::size_t n = line.weights().size();
  std::vector<Scalar> u, v;
  for (const auto& c : line.components()) {
    u.push_back(c.coefficient({1, 0}));
    v.push_back(c.coefficient({0, 1}));
  }
  const auto vars = curve_parameters();
  std::vector<MultiPoly> minors;
  const auto& w = other.components();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      for (std::size_t k = j + 1; k < n; ++k) {
        // Cofactor expansion along the third column.
        const Scalar cij = u[i] * v[j] - u[j] * v[i];
        const Scalar cik = u[i] * v[k] - u[k] * v[i];
        const Scalar cjk = u[j] * v[k] - u[k] * v[j];
        MultiPoly m = w[k].scaled(cij) - w[j].scaled(cik) + w[i].scaled(cjk);
        if (m.variables().empty()) m = MultiPoly(vars);
        minors.push_back(std::move(m));
      }
    }
  }
  return binary_forms_common_root(minors);
}

}  // namespace

bool curves_disjoint(const ParamCurve& c1, const ParamCurve& c2) {
  if (c1.weights() != c2.weights()) throw PreconditionError("curves live in different ambients");
  if (shared_base(c1, c2)) {
    std::vector<MultiPoly> diffs;
    for (std::size_t i = 0; i < c1.components().size(); ++i) diffs.push_back(c1.components()[i] - c2.components()[i]);
    return !binary_forms_common_root(diffs);
  }
  if (is_unweighted_line(c1)) return !line_meets(c1, c2);
  if (is_unweighted_line(c2)) return !line_meets(c2, c1);
  throw PreconditionError("curve pair outside the supported cases");
}

std::optional<Scalar> form_invariant_under(const MultiPoly& f, const ProjMap& m) {
  if (m.dimension() != f.num_variables()) throw PreconditionError("map and form have different dimensions");
  return form_multiplier(f, m.matrix());
}

FiniteGroup<ProjMap> weighted_aut_group(const WeightedHypersurface& s, const std::vector<ProjMap>& generators,
                                        std::size_t cap) {
  const auto w = s.weights();
  const bool flat = std::all_of(w.begin(), w.end(), [](int x) { return x == 1; });
  for (const auto& g : generators) {
    const bool same_weights = g.is_unweighted() ? flat : g.weights() == w;
    if (!same_weights) throw PreconditionError("generator acts on a different weighted space");
    const auto lambda = form_invariant_under(s.equation(), g);
    if (!lambda || is_zero(*lambda)) throw PreconditionError("generator does not preserve the surface");
  }
  if (generators.empty()) return closure(std::vector<ProjMap>{}, ProjMap::identity(w.size(), flat ? std::vector<int>{} : w), cap);
  return closure(generators, cap);
}

bool dp1_stabilizer_check(const Matrix& a, const MultiPoly& f4, const MultiPoly& f6) {
  if (a.rows() != 2 || a.cols() != 2 || is_zero(a.determinant())) {
    throw PreconditionError("an invertible 2x2 matrix is required");
  }
  return poly_compose_linear(f4, a) == f4 && poly_compose_linear(f6, a) == f6;
}

}  // namespace cremona
