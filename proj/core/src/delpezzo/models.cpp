#include "cremona/delpezzo/models.hpp"

#include "cremona/errors.hpp"

namespace cremona {

namespace {

std::vector<Variable> dp1_variables() { return {{"w", 3}, {"x", 1}, {"y", 1}, {"z", 2}}; }
std::vector<Variable> dp2_variables() { return {{"w", 2}, {"x1", 1}, {"x2", 1}, {"x3", 1}}; }

ProjMap weighted(Matrix m, std::vector<int> weights) { return ProjMap(std::move(m), std::move(weights)); }

Matrix embed_binary(const Matrix& a) {
  Matrix m = Matrix::identity(4);
  for (std::size_t i = 0; i < 2; ++i) {
    for (std::size_t j = 0; j < 2; ++j) m(i + 1, j + 1) = a(i, j);
  }
  return m;
}

// Permutation of x1, x2, x3 fixing w.
ProjMap dp2_permutation(const Perm& sigma) {
  Matrix m = Matrix::identity(4);
  const Matrix p = permutation_matrix(sigma);
  for (std::size_t i = 0; i < 3; ++i) {
    for (std::size_t j = 0; j < 3; ++j) m(i + 1, j + 1) = p(i, j);
  }
  return weighted(m, {2, 1, 1, 1});
}

Rational param(const std::map<std::string, Rational>& params, const std::string& key, const Rational& fallback) {
  auto it = params.find(key);
  return it == params.end() ? fallback : it->second;
}

}  // namespace

Matrix permutation_matrix(const Perm& sigma) {
  const std::size_t n = sigma.size();
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(sigma(i), i) = Scalar(1);
  return m;
}

Dp1Forms dp1_forms(const Rational& lambda, const Rational& mu, Dp1Sextic reading) {
  const auto xy = plain_variables({"x", "y"});
  const std::map<std::string, Scalar> k{{"lambda", Scalar(lambda)}, {"mu", Scalar(mu)}};
  const char* f6 = reading == Dp1Sextic::printed
                       ? "lambda*(x^2*y^4 + 2*x^3*y^3 + x^4*y^2) + (3*x^5*y + 3*x*y^5 - 5*x^3*y^3 + x^6 + y^6)"
                       : "lambda*(x^2*y^4 + 2*x^3*y^3 + x^4*y^2 + 3*x^5*y + 3*x*y^5 - 5*x^3*y^3 + x^6 + y^6)";
  return {MultiPoly::parse("mu*(x^2 + x*y + y^2)^2", xy, k), MultiPoly::parse(f6, xy, k)};
}

WeightedHypersurface dp1_surface(const Rational& lambda, const Rational& mu, Dp1Sextic reading) {
  const auto forms = dp1_forms(lambda, mu, reading);
  const auto vars = dp1_variables();
  const MultiPoly x = MultiPoly::variable(vars, "x");
  const MultiPoly y = MultiPoly::variable(vars, "y");
  const MultiPoly z = MultiPoly::variable(vars, "z");
  const MultiPoly w = MultiPoly::variable(vars, "w");
  const MultiPoly f4 = forms.f4.substitute(std::vector<MultiPoly>{x, y});
  const MultiPoly f6 = forms.f6.substitute(std::vector<MultiPoly>{x, y});
  return WeightedHypersurface(w * w - z.pow(3) - f4 * z - f6);
}

Matrix dp1_alpha_matrix() { return Matrix{{0, -1}, {1, 1}}; }
Matrix dp1_beta_matrix() { return Matrix{{-1, -1}, {0, 1}}; }

std::vector<ProjMap> dp1_generators() {
  return {weighted(embed_binary(dp1_alpha_matrix()), {3, 1, 1, 2}),
          weighted(embed_binary(dp1_beta_matrix()), {3, 1, 1, 2})};
}

std::vector<ParamCurve> dp1_curves() {
  const std::vector<int> w{3, 1, 1, 2};
  return {ParamCurve::parse(w, {"a^2*b + a*b^2", "a", "b", "-a^2 - a*b - b^2"}),
          ParamCurve::parse(w, {"-a^2*b - a*b^2", "a", "b", "-a^2 - a*b - b^2"}),
          ParamCurve::parse(w, {"a*b*(a + b)", "a", "b", "-a^2 - a*b - b^2"}),
          ParamCurve::parse(w, {"-a*b*(a + b)", "a", "b", "-a^2 - a*b - b^2"})};
}

WeightedHypersurface dp2_surface() {
  return WeightedHypersurface(MultiPoly::parse(
      "3*w^2 + x1^4 + x2^4 + x3^4 - 5*(x1^2*x2^2 + x1^2*x3^2 + x2^2*x3^2)", dp2_variables()));
}

ProjMap geiser_involution() { return weighted(Matrix::diagonal({-1, 1, 1, 1}), {2, 1, 1, 1}); }

std::vector<ProjMap> dp2_generators() {
  return {geiser_involution(),
          weighted(Matrix::diagonal({1, -1, 1, 1}), {2, 1, 1, 1}),
          weighted(Matrix::diagonal({1, 1, -1, 1}), {2, 1, 1, 1}),
          dp2_permutation(Perm::from_cycles(3, {{0, 1}})),
          dp2_permutation(Perm::from_cycles(3, {{0, 1, 2}}))};
}

std::vector<ParamCurve> dp2_curves() {
  const std::vector<int> w{2, 1, 1, 1};
  return {ParamCurve::parse(w, {"a^2 + a*b + b^2", "a", "b", "-a - b"}),
          ParamCurve::parse(w, {"-a^2 - a*b - b^2", "a", "b", "a + b"}),
          ParamCurve::parse(w, {"a^2 + 2*a*b - b^2", "a", "b", "2*a - b"})};
}

std::vector<WeightedHypersurface> clebsch_equations() {
  const auto vars = plain_variables({"X0", "X1", "X2", "X3", "X4"});
  return {WeightedHypersurface(MultiPoly::parse("X0 + X1 + X2 + X3 + X4", vars)),
          WeightedHypersurface(MultiPoly::parse("X0^3 + X1^3 + X2^3 + X3^3 + X4^3", vars))};
}

std::vector<ParamCurve> clebsch_curves() {
  const std::vector<int> w(5, 1);
  return {ParamCurve::parse(w, {"0", "a", "-a", "b", "-b"}), ParamCurve::parse(w, {"a", "0", "b", "-a", "-b"})};
}

std::vector<ProjMap> clebsch_generators() {
  return {ProjMap(permutation_matrix(Perm::from_cycles(5, {{0, 1}}))),
          ProjMap(permutation_matrix(Perm::from_cycles(5, {{0, 1, 2, 3, 4}})))};
}

WeightedHypersurface fermat_cubic_surface() {
  return WeightedHypersurface(MultiPoly::parse("t0^3 + t1^3 + t2^3 + t3^3", plain_variables({"t0", "t1", "t2", "t3"})));
}

std::vector<ProjMap> fermat_generators() {
  return {ProjMap(Matrix::diagonal({Cyclotomic::zeta(3), 1, 1, 1})),
          ProjMap(permutation_matrix(Perm::from_cycles(4, {{0, 1}}))),
          ProjMap(permutation_matrix(Perm::from_cycles(4, {{0, 1, 2, 3}})))};
}

PointConfig conjugate_points_config() {
  const Scalar w = Cyclotomic::zeta(3);
  const Scalar w2 = w * w;
  return PointConfig({{1, w, w2}, {1, w2, w}, {1, 0, 0}, {0, 1, 0}, {0, 0, 1}});
}

std::vector<PermVectorElement> conjugate_points_generators() {
  std::vector<PermVectorElement> gens;
  const auto h = realizable_point_permutations(conjugate_points_config());
  for (const auto& sigma : h.elements()) {
    if (!sigma.is_identity()) gens.emplace_back(0, sigma);
  }
  for (std::uint32_t i = 0; i + 1 < 5; ++i) gens.emplace_back((1U << i) | (1U << (i + 1)), Perm::identity(5));
  return gens;
}

PermVectorElement conjugate_points_galois_element() { return {bits_from_list({1, 1, 0, 0, 0}), Perm::identity(5)}; }

std::vector<WeightedHypersurface> hexagon_equations() {
  const auto vars = plain_variables({"x0", "x1", "x2", "y0", "y1", "y2"});
  return {WeightedHypersurface(MultiPoly::parse("x0*y0 - x1*y1", vars)),
          WeightedHypersurface(MultiPoly::parse("x1*y1 - x2*y2", vars))};
}

std::vector<std::string> named_model_names() {
  return {"hexagon_X", "clebsch_p4", "fermat_cubic", "dp2_example", "dp1_example", "conjugate_points_group"};
}

NamedModel build_named_model(std::string_view name, const std::map<std::string, Rational>& params) {
  NamedModel m;
  m.name = std::string(name);
  if (name == "hexagon_X") {
    m.equations = hexagon_equations();
    m.hex_generators = hexagon_symmetries(6);
    m.hex_generators.push_back(HexAut::torus(6, 1, 0));
    m.hex_generators.push_back(HexAut::torus(6, 0, 1));
  } else if (name == "clebsch_p4") {
    m.equations = clebsch_equations();
    m.curves = clebsch_curves();
    m.linear_generators = clebsch_generators();
  } else if (name == "fermat_cubic") {
    m.equations = {fermat_cubic_surface()};
    m.linear_generators = fermat_generators();
  } else if (name == "dp2_example") {
    m.equations = {dp2_surface()};
    m.curves = dp2_curves();
    m.linear_generators = dp2_generators();
  } else if (name == "dp1_example") {
    const Rational lambda = param(params, "lambda", kDp1CurveLambda);
    const Rational mu = param(params, "mu", kDp1CurveMu);
    if (lambda == 0 || mu == 0) throw PreconditionError("lambda and mu must be nonzero");
    const auto reading = param(params, "scaled_whole", Rational(0)) != 0 ? Dp1Sextic::scaled_whole : Dp1Sextic::printed;
    m.equations = {dp1_surface(lambda, mu, reading)};
    m.curves = dp1_curves();
    m.linear_generators = dp1_generators();
  } else if (name == "conjugate_points_group") {
    m.abstract_generators = conjugate_points_generators();
  } else {
    throw PreconditionError("unknown model: " + std::string(name));
  }
  return m;
}

std::size_t model_group_order(const NamedModel& model, std::size_t cap) {
  if (!model.hex_generators.empty()) return closure(model.hex_generators, cap).order();
  if (!model.abstract_generators.empty()) return closure(model.abstract_generators, cap).order();
  if (!model.linear_generators.empty()) return closure(model.linear_generators, cap).order();
  return 1;
}

}  // namespace cremona
