#include <numeric>
#include <random>
#include <set>

#include "cremona/delpezzo/hexagon.hpp"
#include "cremona/delpezzo/models.hpp"
#include "cremona/delpezzo/points.hpp"
#include "cremona/delpezzo/surfaces.hpp"
#include "cremona/errors.hpp"
#include "doctest.h"
#include "test_support.hpp"

using namespace cremona;
using cremona::testing::kSeed;

namespace {

Point pt(long x, long y, long z) { return {Scalar(x), Scalar(y), Scalar(z)}; }

std::vector<Point> standard_frame() { return {pt(1, 0, 0), pt(0, 1, 0), pt(0, 0, 1), pt(1, 1, 1)}; }

Point random_point(std::mt19937_64& rng) {
  std::uniform_int_distribution<long> c(-20, 20);
  for (;;) {
    Point p = pt(c(rng), c(rng), c(rng));
    if (!(is_zero(p[0]) && is_zero(p[1]) && is_zero(p[2]))) return p;
  }
}

// Seeded general-position five-point configurations.
std::vector<PointConfig> random_configs(std::size_t count) {
  std::mt19937_64 rng(kSeed);
  std::vector<PointConfig> out;
  while (out.size() < count) {
    std::vector<Point> pts;
    for (int i = 0; i < 5; ++i) pts.push_back(random_point(rng));
    try {
      PointConfig cfg(pts);
      if (general_position(cfg)) out.push_back(cfg);
    } catch (const PreconditionError&) {
    }
  }
  return out;
}

bool is_double_transposition(const Perm& p) { return p.cycle_type() == std::vector<std::size_t>{2, 2}; }

// Explicit action of a HexAut on a point of P^2 x P^2 over Q(zeta_n); oracle
// for the composition law.
using PointPair = std::pair<Point, Point>;

PointPair act(const HexAut& u, const PointPair& p) {
  const auto n = u.conductor();
  const GaloisMap g(n, u.galois());
  PointPair q = p;
  for (auto& c : q.first) c = galois_apply(g, c);
  for (auto& c : q.second) c = galois_apply(g, c);
  PointPair r{Point(3), Point(3)};
  for (std::size_t i = 0; i < 3; ++i) {
    r.first[u.delta()(i)] = q.first[i];
    r.second[u.delta()(i)] = q.second[i];
  }
  if (u.exchange()) std::swap(r.first, r.second);
  const auto [a, b] = u.torus_part();
  const auto nn = static_cast<std::int64_t>(n);
  r.first[1] *= Cyclotomic::zeta(n, a);
  r.first[2] *= Cyclotomic::zeta(n, b);
  r.second[1] *= Cyclotomic::zeta(n, nn - a);
  r.second[2] *= Cyclotomic::zeta(n, nn - b);
  return r;
}

bool same_pair(const PointPair& p, const PointPair& q) {
  return same_point(p.first, q.first) && same_point(p.second, q.second);
}

PointPair random_pair(std::mt19937_64& rng, std::uint32_t n) {
  auto coord = [&] {
    for (;;) {
      Scalar c = cremona::testing::random_cyclotomic(rng, n);
      if (!is_zero(c)) return c;
    }
  };
  return {{coord(), coord(), coord()}, {coord(), coord(), coord()}};
}

HexAut random_hexaut(std::mt19937_64& rng, std::uint32_t n) {
  std::uniform_int_distribution<long> e(0, static_cast<long>(n) - 1);
  std::uniform_int_distribution<std::size_t> s(0, 5);
  std::bernoulli_distribution coin(0.5);
  long k = 0;
  do {
    k = e(rng);
  } while (std::gcd(k, static_cast<long>(n)) != 1);
  return {n, e(rng), e(rng), sym3_elements()[s(rng)], coin(rng), k};
}

std::vector<long> units(long n) {
  std::vector<long> out;
  for (long k = 1; k < n; ++k) {
    if (std::gcd(k, n) == 1) out.push_back(k);
  }
  return out;
}

ParamCurve random_line(std::mt19937_64& rng, std::size_t dim, const std::vector<Scalar>& shared = {}) {
  std::uniform_int_distribution<long> c(-4, 4);
  for (;;) {
    std::vector<Scalar> u(dim), v(dim);
    for (auto& x : u) x = Scalar(c(rng));
    for (auto& x : v) x = Scalar(c(rng));
    if (!shared.empty()) u = shared;
    std::vector<MultiPoly> comps;
    const auto vars = curve_parameters();
    for (std::size_t i = 0; i < dim; ++i) {
      MultiPoly p(vars);
      p.add_term({1, 0}, u[i]);
      p.add_term({0, 1}, v[i]);
      comps.push_back(p);
    }
    try {
      return ParamCurve(std::vector<int>(dim, 1), comps);
    } catch (const PreconditionError&) {
    }
  }
}

// Two lines are disjoint iff their four spanning vectors are independent.
bool lines_disjoint_by_rank(const ParamCurve& l1, const ParamCurve& l2) {
  std::vector<std::vector<Scalar>> cols(4);
  for (std::size_t i = 0; i < l1.components().size(); ++i) {
    cols[0].push_back(l1.components()[i].coefficient({1, 0}));
    cols[1].push_back(l1.components()[i].coefficient({0, 1}));
    cols[2].push_back(l2.components()[i].coefficient({1, 0}));
    cols[3].push_back(l2.components()[i].coefficient({0, 1}));
  }
  return Matrix::from_columns(cols).rank() == 4;
}

}  // namespace

TEST_SUITE("points") {
  TEST_CASE("collinearity") {
    CHECK(collinear(pt(1, 0, 0), pt(0, 1, 0), pt(1, 1, 0)));
    CHECK_FALSE(collinear(pt(1, 0, 0), pt(0, 1, 0), pt(0, 0, 1)));
    CHECK(collinear(pt(1, 1, 1), pt(1, 0, 0), pt(0, 1, 1)));
    CHECK_THROWS_AS(collinear(pt(1, 2, 3), pt(2, 4, 6), pt(0, 0, 1)), PreconditionError);
    CHECK_THROWS_AS(collinear(pt(0, 0, 0), pt(1, 0, 0), pt(0, 0, 1)), PreconditionError);
  }

  TEST_CASE("six points on a conic") {
    std::vector<Point> on_conic;
    for (long t = 0; t < 6; ++t) on_conic.push_back(pt(1, t * t, t));  // x y = z^2
    CHECK(six_on_conic(on_conic));

    CHECK_FALSE(six_on_conic({pt(1, 0, 0), pt(0, 1, 0), pt(0, 0, 1), pt(1, 1, 1), pt(1, 2, 3), pt(1, 3, 5)}));

    // z (x + y - z) vanishes on all six: three on each line.
    const std::vector<Point> two_lines{pt(1, 0, 0), pt(0, 1, 0), pt(1, 1, 0), pt(0, 1, 1), pt(1, 0, 1), pt(1, 2, 3)};
    for (const auto& p : two_lines) CHECK(is_zero(p[2] * (p[0] + p[1] - p[2])));
    CHECK(six_on_conic(two_lines));

    CHECK_THROWS_AS(six_on_conic({pt(1, 0, 0), pt(0, 1, 0)}), PreconditionError);
  }

  TEST_CASE("general position") {
    auto frame = standard_frame();
    CHECK(general_position(PointConfig(frame)));
    auto bad = frame;
    bad.push_back(pt(1, 1, 0));
    CHECK_FALSE(general_position(PointConfig(bad)));
    auto good = frame;
    good.push_back(pt(2, 3, 5));
    CHECK(general_position(PointConfig(good)));

    std::vector<Point> conic;
    for (long t = 1; t <= 6; ++t) conic.push_back(pt(1, t * t, t));
    CHECK(general_position(PointConfig(conic)));
    CHECK_FALSE(general_position(PointConfig(conic), {true, true}));
    CHECK_THROWS_AS(PointConfig({pt(1, 2, 3), pt(-1, -2, -3)}), PreconditionError);
  }

  TEST_CASE("unique projectivity") {
    const auto frame = standard_frame();
    CHECK(unique_projectivity(frame, frame).is_identity());

    const auto swapped = std::vector<Point>{frame[1], frame[0], frame[2], frame[3]};
    CHECK(unique_projectivity(frame, swapped) == ProjMap(Matrix{{0, 1, 0}, {1, 0, 0}, {0, 0, 1}}));

    // A1 -> A3 -> A2 -> A4 -> A1.
    const auto cyc = std::vector<Point>{frame[2], frame[3], frame[1], frame[0]};
    CHECK(unique_projectivity(frame, cyc) == ProjMap(Matrix{{0, 1, 0}, {0, 1, -1}, {-1, 1, 0}}));

    CHECK_THROWS_AS(unique_projectivity(frame, {pt(1, 0, 0), pt(0, 1, 0), pt(1, 1, 0), pt(0, 0, 1)}),
                    PreconditionError);
  }

  TEST_CASE("projectivities send frames to frames") {
    const auto cfgs = random_configs(30);
    for (std::size_t i = 0; i + 1 < cfgs.size(); ++i) {
      const std::vector<Point> src(cfgs[i].points().begin(), cfgs[i].points().begin() + 4);
      const std::vector<Point> dst(cfgs[i + 1].points().begin(), cfgs[i + 1].points().begin() + 4);
      const ProjMap m = unique_projectivity(src, dst);
      for (std::size_t j = 0; j < 4; ++j) CHECK(same_point(apply(m, src[j]), dst[j]));
    }
  }
}

TEST_SUITE("realizable permutations") {
  TEST_CASE("random rational configurations admit only double transpositions") {
    const auto cfgs = random_configs(100);
    for (const auto& cfg : cfgs) {
      const auto h = realizable_point_permutations(cfg);
      CHECK(h.identity().is_identity());
      for (const auto& s : h.elements()) {
        if (!s.is_identity()) CHECK(is_double_transposition(s));
      }
      // Closed under composition.
      for (const auto& x : h.elements()) {
        for (const auto& y : h.elements()) CHECK(h.contains(x * y));
      }
    }
  }

  TEST_CASE("a fixed point of an involution realises a double transposition") {
    // [x:y:z] -> [z-y : z-x : z] swaps A1, A2 and A3, A4 and fixes x + y = z.
    const PointConfig cfg({pt(1, 0, 0), pt(0, 1, 0), pt(0, 0, 1), pt(1, 1, 1), pt(3, -2, 1)});
    const auto h = realizable_point_permutations(cfg);
    CHECK(h.contains(Perm::from_cycles(5, {{0, 1}, {2, 3}})));
    for (const auto& s : h.elements()) {
      if (!s.is_identity()) CHECK(is_double_transposition(s));
    }
    CHECK(h.order() == 2);
  }

  TEST_CASE("conjugate points over Q(omega)") {
    const auto h = realizable_point_permutations(conjugate_points_config());
    CHECK(h.order() == 6);
    CHECK(h.contains(Perm::from_cycles(5, {{0, 1}, {3, 4}})));
    CHECK(h.contains(Perm::from_cycles(5, {{2, 3, 4}})));
    CHECK_FALSE(is_abelian(h));
  }

  TEST_CASE("degenerate configurations are rejected") {
    CHECK_THROWS_AS(realizable_point_permutations(PointConfig(standard_frame())), PreconditionError);
    auto bad = standard_frame();
    bad.push_back(pt(1, 1, 0));
    CHECK_THROWS_AS(realizable_point_permutations(PointConfig(bad)), PreconditionError);
  }
}

TEST_SUITE("hexagon") {
  TEST_CASE("composition examples") {
    const Perm id = Perm::identity(3);
    CHECK(HexAut::torus(6, 1, 2) * HexAut::torus(6, 3, 5) == HexAut::torus(6, 4, 1));
    const HexAut h3 = HexAut::hex(6, id, true);
    CHECK(h3 * h3 == HexAut::identity(6));
    CHECK(h3 * HexAut::torus(6, 1, 2) * h3 == HexAut::torus(6, -1, -2));
    CHECK_THROWS_AS(HexAut::torus(6, 1, 0) * HexAut::torus(4, 1, 0), PreconditionError);
    CHECK_THROWS_AS(HexAut(6, 0, 0, id, false, 2), PreconditionError);
  }

  TEST_CASE("character matrices form a faithful representation of D6") {
    std::set<CharacterMatrix> images;
    for (const auto& d : sym3_elements()) {
      for (bool e : {false, true}) {
        const auto m = hex_character_matrix(d, e);
        images.insert(m);
        CHECK(m[0][0] * m[1][1] - m[0][1] * m[1][0] != 0);
        for (const auto& d2 : sym3_elements()) {
          for (bool e2 : {false, true}) {
            const auto m2 = hex_character_matrix(d2, e2);
            const auto prod = hex_character_matrix(d * d2, e != e2);
            for (std::size_t i = 0; i < 2; ++i) {
              for (std::size_t j = 0; j < 2; ++j) CHECK(prod[i][j] == m[i][0] * m2[0][j] + m[i][1] * m2[1][j]);
            }
          }
        }
      }
    }
    CHECK(images.size() == 12);
  }

  TEST_CASE("composition matches the action on points") {
    std::mt19937_64 rng(kSeed);
    for (std::uint32_t n : {3U, 4U, 6U}) {
      for (int trial = 0; trial < 40; ++trial) {
        const HexAut u = random_hexaut(rng, n);
        const HexAut v = random_hexaut(rng, n);
        const PointPair p = random_pair(rng, n);
        CHECK(same_pair(act(u * v, p), act(u, act(v, p))));
      }
    }
  }

  TEST_CASE("composition is associative") {
    std::mt19937_64 rng(kSeed + 1);
    for (int trial = 0; trial < 300; ++trial) {
      const HexAut a = random_hexaut(rng, 18);
      const HexAut b = random_hexaut(rng, 18);
      const HexAut c = random_hexaut(rng, 18);
      CHECK((a * b) * c == a * (b * c));
    }
  }

  TEST_CASE("linear elements form a subgroup of order dividing 12 n^2") {
    for (std::uint32_t n : {2U, 3U, 4U}) {
      std::vector<HexAut> gens = hexagon_symmetries(n);
      gens.push_back(HexAut::torus(n, 1, 0));
      const auto g = closure(gens);
      CHECK(g.order() == 12 * n * n);
      for (const auto& x : g.elements()) CHECK(x.is_linear());
    }
  }

  TEST_CASE("semilinear commutation") {
    const HexAut twist = hexagon_galois_twist();
    CHECK(semilinear_commutes(hexagon_symmetries(6)[0], twist));
    for (long a = 0; a < 6; ++a) {
      for (long b = 0; b < 6; ++b) CHECK(semilinear_commutes(HexAut::torus(6, a, b), twist));
    }
    const HexAut swap_twist(4, 0, 0, Perm::from_cycles(3, {{1, 2}}), true, 3);
    CHECK_FALSE(semilinear_commutes(HexAut::torus(4, 1, 0), swap_twist));
    CHECK_THROWS_AS(semilinear_commutes(twist, twist), PreconditionError);
  }

  TEST_CASE("group of order 432") {
    const auto g = build_hexagon_group();
    CHECK(g.order() == 432);
    const auto t = torus_subgroup(g);
    const auto report = analyze_subgroup(g, t);
    CHECK(report.is_subgroup);
    CHECK(report.is_normal);
    CHECK(report.is_abelian);
    CHECK(report.order == 36);
    CHECK(report.exponent == 6);
    CHECK(report.quotient_order == 12);
    const HexAut twist = hexagon_galois_twist();
    for (const auto& x : g.elements()) CHECK(semilinear_commutes(x, twist));
  }

  TEST_CASE("torus centralizers") {
    CHECK(torus_centralizer(6, hexagon_galois_twist()).count == 36);

    std::size_t cases = 0;
    for (std::uint32_t n : {2U, 3U, 4U, 6U, 9U, 18U}) {
      for (long k : units(n)) {
        for (const auto& d : sym3_elements()) {
          if (d.is_identity()) continue;
          for (bool e : {false, true}) {
            const auto r = torus_centralizer(n, HexAut(n, 0, 0, d, e, k));
            CAPTURE(n);
            CAPTURE(k);
            CAPTURE(d.to_string());
            CHECK(r.count <= n);
            CHECK(r.within_bound);
            ++cases;
          }
        }
      }
    }
    CHECK(cases > 0);
    CHECK_THROWS_AS(torus_centralizer(19, HexAut::identity(19)), PreconditionError);
    CHECK_THROWS_AS(torus_centralizer(1, HexAut::identity(1)), PreconditionError);
    CHECK_THROWS_AS(torus_centralizer(6, HexAut::identity(4)), PreconditionError);
  }

  TEST_CASE("centralizer agrees with the action on points") {
    std::mt19937_64 rng(kSeed + 2);
    for (long k : units(6)) {
      for (const auto& d : sym3_elements()) {
        const HexAut g(6, 0, 0, d, true, k);
        const auto r = torus_centralizer(6, g);
        std::set<std::pair<long, long>> sols(r.solutions.begin(), r.solutions.end());
        for (long a = 0; a < 6; ++a) {
          for (long b = 0; b < 6; ++b) {
            const HexAut tau = HexAut::torus(6, a, b);
            const PointPair p = random_pair(rng, 6);
            const bool commutes = same_pair(act(tau, act(g, p)), act(g, act(tau, p)));
            CHECK(commutes == (sols.count({a, b}) == 1));
          }
        }
      }
    }
  }
}

TEST_SUITE("curves and forms") {
  TEST_CASE("Clebsch lines") {
    const auto eqs = clebsch_equations();
    const auto curves = clebsch_curves();
    for (const auto& s : eqs) {
      for (const auto& c : curves) CHECK(surface_contains_curve(s, c));
    }
    CHECK(curves_disjoint(curves[0], curves[1]));
    CHECK_FALSE(curves_disjoint(curves[0], curves[0]));
    CHECK(lines_disjoint_by_rank(curves[0], curves[1]));
  }

  TEST_CASE("quartic del Pezzo curves") {
    const auto s = dp2_surface();
    const auto curves = dp2_curves();
    for (const auto& c : curves) CHECK(surface_contains_curve(s, c));
    for (std::size_t i = 0; i < curves.size(); ++i) {
      for (std::size_t j = i + 1; j < curves.size(); ++j) CHECK(curves_disjoint(curves[i], curves[j]));
      CHECK_FALSE(curves_disjoint(curves[i], curves[i]));
    }
    // Differences vanishing at [1:1]: w - w' = (a - b)(a + b), x3 - x3' = a - b.
    const auto meeting = ParamCurve::parse({2, 1, 1, 1}, {"2*a^2 + a*b", "a", "b", "-2*b"});
    CHECK_FALSE(curves_disjoint(curves[0], meeting));
  }

  TEST_CASE("random curves are not contained") {
    std::mt19937_64 rng(kSeed);
    std::uniform_int_distribution<long> c(-5, 5);
    for (int trial = 0; trial < 20; ++trial) {
      const std::string w = std::to_string(c(rng)) + "*a^2 + " + std::to_string(c(rng)) + "*a*b + b^2";
      const std::string x3 = std::to_string(c(rng)) + "*a + " + std::to_string(c(rng)) + "*b";
      const auto curve = ParamCurve::parse({2, 1, 1, 1}, {w, "a", "b", x3});
      CHECK_FALSE(surface_contains_curve(dp2_surface(), curve));
    }
    CHECK_THROWS_AS(surface_contains_curve(dp2_surface(), clebsch_curves()[0]), PreconditionError);
  }

  TEST_CASE("line intersections agree with a rank test") {
    std::mt19937_64 rng(kSeed);
    for (int trial = 0; trial < 60; ++trial) {
      const ParamCurve l1 = random_line(rng, 4);
      std::vector<Scalar> shared;
      if (trial % 2 == 0) {
        for (const auto& comp : l1.components()) shared.push_back(comp.coefficient({1, 0}) + comp.coefficient({0, 1}));
      }
      const ParamCurve l2 = random_line(rng, 4, shared);
      CHECK(curves_disjoint(l1, l2) == lines_disjoint_by_rank(l1, l2));
      if (trial % 2 == 0) CHECK_FALSE(curves_disjoint(l1, l2));
    }
  }

  TEST_CASE("malformed curves") {
    CHECK_THROWS_AS(ParamCurve::parse({1, 1, 1}, {"a", "a", "a"}), PreconditionError);
    CHECK_THROWS_AS(ParamCurve::parse({2, 1, 1, 1}, {"a", "a", "b", "b"}), PreconditionError);
    CHECK_THROWS_AS(ParamCurve::parse({1, 1}, {"a", "b", "a"}), PreconditionError);
    const auto conic = ParamCurve::parse({1, 1, 1}, {"a^2", "a*b", "b^2"});
    CHECK_THROWS_AS(curves_disjoint(conic, conic), PreconditionError);
  }

  TEST_CASE("forms and their multipliers") {
    const auto cubic = clebsch_equations()[1].equation();
    for (const auto& g : clebsch_generators()) CHECK(form_invariant_under(cubic, g) == Scalar(1));

    const auto quartic = MultiPoly::parse("-(x1^4 + x2^4 + x3^4) + 5*(x1^2*x2^2 + x1^2*x3^2 + x2^2*x3^2)",
                                          plain_variables({"x1", "x2", "x3"}));
    for (int signs = 0; signs < 8; ++signs) {
      const Matrix d = Matrix::diagonal({signs & 1 ? -1 : 1, signs & 2 ? -1 : 1, signs & 4 ? -1 : 1});
      CHECK(form_invariant_under(quartic, ProjMap(d)) == Scalar(1));
    }

    const auto forms = dp1_forms(Rational(3), Rational(2));
    for (const auto& a : {dp1_alpha_matrix(), dp1_beta_matrix()}) {
      CHECK(form_invariant_under(forms.f4, ProjMap(a)) == Scalar(1));
      CHECK(form_invariant_under(forms.f6, ProjMap(a)) == Scalar(1));
    }
    CHECK(form_invariant_under(forms.f4, ProjMap(Matrix::diagonal({2, 2}))) == Scalar(16));
    CHECK_FALSE(form_invariant_under(forms.f4, ProjMap(Matrix::diagonal({2, 1}))).has_value());
  }

  TEST_CASE("Geiser flip") {
    CHECK(form_invariant_under(dp2_surface().equation(), geiser_involution()) == Scalar(1));
    CHECK_FALSE(geiser_involution().is_identity());
  }

  TEST_CASE("degree one stabilizer") {
    const auto forms = dp1_forms(kDp1CurveLambda, kDp1CurveMu);
    CHECK(dp1_stabilizer_check(dp1_alpha_matrix(), forms.f4, forms.f6));
    CHECK(dp1_stabilizer_check(dp1_beta_matrix(), forms.f4, forms.f6));
    CHECK(dp1_stabilizer_check(Matrix::identity(2), forms.f4, forms.f6));
    CHECK_FALSE(dp1_stabilizer_check(Matrix::diagonal({2, 1}), forms.f4, forms.f6));
    CHECK_THROWS_AS(dp1_stabilizer_check(Matrix{{1, 1}, {1, 1}}, forms.f4, forms.f6), PreconditionError);
  }

  TEST_CASE("degree one curve list") {
    const auto curves = dp1_curves();
    const auto printed = dp1_surface(kDp1CurveLambda, kDp1CurveMu, Dp1Sextic::printed);
    const auto whole = dp1_surface(kDp1CurveLambda, kDp1CurveMu, Dp1Sextic::scaled_whole);
    for (const auto& c : curves) {
      CHECK(surface_contains_curve(whole, c));
      CHECK_FALSE(surface_contains_curve(printed, c));
    }
    CHECK(curves[0].components() == curves[2].components());
    CHECK(curves[1].components() == curves[3].components());
    CHECK_FALSE(curves_disjoint(curves[0], curves[1]));
  }
}

TEST_SUITE("weighted automorphism groups") {
  TEST_CASE("quartic del Pezzo group of order 48") {
    const auto g = weighted_aut_group(dp2_surface(), dp2_generators());
    CHECK(g.order() == 48);
    CHECK(g.contains(geiser_involution()));
    CHECK(center(g).contains(geiser_involution()));
    // (w, x) -> (w, -x) is the identity class.
    CHECK(ProjMap(Matrix::diagonal({1, -1, -1, -1}), {2, 1, 1, 1}).is_identity());
  }

  TEST_CASE("degree one group of order 12") {
    const auto gens = dp1_generators();
    const auto g = weighted_aut_group(dp1_surface(Rational(3), Rational(2)), gens);
    CHECK(g.order() == 12);
    CHECK(element_order(gens[0]) == 6U);
    CHECK(element_order(gens[1]) == 2U);
    const std::map<std::string, ProjMap> named{{"a", gens[0]}, {"b", gens[1]}};
    CHECK(verify_presentation(named, {"a^6", "b^2", "(ba)^2"}, 12));
    CHECK(evaluate_word("bab", named) == element_inverse(gens[0]));
  }

  TEST_CASE("trivial and invalid generators") {
    CHECK(weighted_aut_group(dp2_surface(), {}).order() == 1);
    CHECK(weighted_aut_group(dp2_surface(), {ProjMap::identity(4, {2, 1, 1, 1})}).order() == 1);
    CHECK_THROWS_AS(weighted_aut_group(dp2_surface(), {ProjMap(Matrix::diagonal({1, 2, 1, 1}), {2, 1, 1, 1})}),
                    PreconditionError);
    CHECK_THROWS_AS(weighted_aut_group(dp2_surface(), dp1_generators()), PreconditionError);
  }
}

TEST_SUITE("named models") {
  TEST_CASE("Fermat cubic over Q(zeta_3)") {
    const auto m = build_named_model("fermat_cubic");
    for (const auto& g : m.linear_generators) CHECK(form_invariant_under(m.equations[0].equation(), g).has_value());
    CHECK(model_group_order(m) == 648);
  }

  TEST_CASE("Clebsch surface") {
    const auto m = build_named_model("clebsch_p4");
    for (const auto& eq : m.equations) {
      for (const auto& g : m.linear_generators) CHECK(form_invariant_under(eq.equation(), g) == Scalar(1));
    }
    CHECK(model_group_order(m) == 120);
    CHECK(m.curves.size() == 2);
  }

  TEST_CASE("abstract degree four group") {
    const auto m = build_named_model("conjugate_points_group");
    const auto g = closure(m.abstract_generators);
    CHECK(g.order() == 96);
    const auto galois = conjugate_points_galois_element();
    CHECK(g.contains(galois));
    for (const auto& x : g.elements()) CHECK(commute(x, galois));
  }

  TEST_CASE("remaining models") {
    CHECK(model_group_order(build_named_model("hexagon_X")) == 432);
    CHECK(model_group_order(build_named_model("dp2_example")) == 48);
    CHECK(build_named_model("dp2_example").linear_generators.size() == 5);
    CHECK(model_group_order(build_named_model("dp1_example")) == 12);
    const auto alt = build_named_model("dp1_example", {{"scaled_whole", Rational(1)}});
    for (const auto& c : alt.curves) CHECK(surface_contains_curve(alt.equations[0], c));
    CHECK_THROWS_AS(build_named_model("dp1_example", {{"mu", Rational(0)}}), PreconditionError);
    CHECK_THROWS_AS(build_named_model("nosuch"), PreconditionError);
    CHECK(named_model_names().size() == 6);
  }

  TEST_CASE("hexagon equations hold on the torus orbit of [1:1:1][1:1:1]") {
    const auto eqs = hexagon_equations();
    const auto vars = eqs[0].equation().variables();
    for (long a = 0; a < 6; ++a) {
      for (long b = 0; b < 6; ++b) {
        const auto p = act(HexAut::torus(6, a, b), {pt(1, 1, 1), pt(1, 1, 1)});
        std::vector<MultiPoly> vals;
        for (const auto& c : {p.first[0], p.first[1], p.first[2], p.second[0], p.second[1], p.second[2]}) {
          vals.push_back(MultiPoly::constant(plain_variables({"u"}), c));
        }
        for (const auto& eq : eqs) CHECK(eq.equation().substitute(vals).is_zero());
      }
    }
  }
}
