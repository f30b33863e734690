// Runs the acceptance criteria and prints one PASS/FAIL line for each.
// Usage: acceptance [path-to-cremona-verify]
#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <map>
#include <random>
#include <regex>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "cremona/delpezzo/hexagon.hpp"
#include "cremona/delpezzo/models.hpp"
#include "cremona/delpezzo/points.hpp"
#include "cremona/delpezzo/surfaces.hpp"
#include "cremona/exactalg/multipoly.hpp"
#include "cremona/exactalg/numtheory.hpp"
#include "cremona/exactalg/rational.hpp"
#include "cremona/groupkit/elements.hpp"
#include "cremona/picard/lattice.hpp"
#include "cremona/projlin/lifting.hpp"
#include "cremona/projlin/minkowski.hpp"
#include "cremona/projlin/projmap.hpp"
#include "cremona/verifier/report.hpp"
#include "cremona/verifier/suites.hpp"

using namespace cremona;

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

// Collects failed sub-checks and timing violations for one criterion.
class Criterion {
 public:
  void expect(bool ok, const std::string& what) {
    if (!ok) problems_.push_back(what);
  }

  // Runs f and requires it to finish within limit_ms.
  template <class F>
  void timed(const std::string& what, double limit_ms, F&& f) {
    const auto start = Clock::now();
    f();
    const double t = ms_since(start);
    if (t >= limit_ms) problems_.push_back(what + " took " + std::to_string(t) + " ms");
  }

  const std::vector<std::string>& problems() const { return problems_; }

 private:
  std::vector<std::string> problems_;
};

struct Entry {
  int number;
  std::string title;
  double limit_ms;  // for the criterion as a whole
  std::function<void(Criterion&)> body;
};

std::mt19937_64 seeded(std::uint64_t offset) { return std::mt19937_64(20240601 + offset); }

Rational random_rational(std::mt19937_64& rng, long bound, long den_bound) {
  std::uniform_int_distribution<long> num(-bound, bound);
  std::uniform_int_distribution<long> den(1, den_bound);
  return make_rational(num(rng), den(rng));
}

Rational random_nonzero(std::mt19937_64& rng, long bound, long den_bound) {
  for (;;) {
    Rational q = random_rational(rng, bound, den_bound);
    if (!is_zero(q)) return q;
  }
}

Matrix random_invertible(std::mt19937_64& rng, std::size_t n) {
  for (;;) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) m(i, j) = Scalar(random_rational(rng, 6, 4));
    }
    if (!is_zero(m.determinant())) return m;
  }
}

Matrix companion(const Rational& lambda) { return Matrix{{0, 0, Scalar(lambda)}, {1, 0, 0}, {0, 1, 0}}; }

FiniteGroup<ProjMap> dihedral12() {
  return closure(std::vector<ProjMap>{ProjMap(Matrix{{2, -1}, {1, 1}}), ProjMap(Matrix{{0, 1}, {1, 0}})});
}

std::vector<ProjMap> rho_sigma_tau() {
  return {ProjMap(Matrix::diagonal({-1, -1, 1})), ProjMap(Matrix{{0, 1, 0}, {1, 0, 0}, {0, 0, 1}}),
          ProjMap(Matrix{{0, 1, 0}, {0, 0, 1}, {1, 0, 0}})};
}

void minkowski(Criterion& c) {
  c.expect(minkowski_bound(3) == 48, "M(3) = 48");
  c.expect(minkowski_bound(4) == 5760, "M(4) = 5760");
  const auto t = minkowski_table(4);
  c.expect(t.exponents == std::map<long, int>{{2, 7}, {3, 2}, {5, 1}}, "M(4) = 2^7 3^2 5");
}

void table_orders(Criterion& c) {
  constexpr double kLimit = 2000.0;
  c.timed("conic bundle closure", kLimit, [&] {
    c.expect(product_with_swap(dihedral12(), false).order() == 144, "conic bundle order 144");
  });
  c.timed("dP9 closure", kLimit, [&] { c.expect(closure(rho_sigma_tau()).order() == 24, "dP9 order 24"); });
  c.timed("dP8 closure", kLimit, [&] { c.expect(product_with_swap(dihedral12()).order() == 288, "dP8 order 288"); });
  c.timed("dP6 closure", kLimit, [&] { c.expect(build_hexagon_group().order() == 432, "dP6 order 432"); });
  c.timed("dP5 graph automorphisms", kLimit, [&] {
    const auto g = graph_automorphisms(IntersectionGraph::from_classes(enumerate_minus_one(4)));
    c.expect(g.order() == 120, "dP5 order 120");
  });
  c.timed("dP4 closure", kLimit, [&] { c.expect(closure(conjugate_points_generators()).order() == 96, "dP4 order 96"); });
  c.timed("dP3 closure", kLimit, [&] {
    const auto eqs = clebsch_equations();
    const auto gens = clebsch_generators();
    for (const auto& g : gens) c.expect(form_invariant_under(eqs[0].equation(), g) == Scalar(1), "hyperplane fixed");
    c.expect(weighted_aut_group(eqs[1], gens).order() == 120, "dP3 order 120");
  });
  c.timed("dP2 closure", kLimit, [&] {
    c.expect(weighted_aut_group(dp2_surface(), dp2_generators()).order() == 48, "dP2 order 48");
  });
  c.timed("dP1 closure", kLimit, [&] {
    const auto gens = dp1_generators();
    c.expect(weighted_aut_group(dp1_surface(kDp1CurveLambda, kDp1CurveMu), gens).order() == 12, "dP1 order 12");
    const std::map<std::string, ProjMap> named{{"a", gens[0]}, {"b", gens[1]}};
    c.expect(verify_presentation(named, {"a^6", "b^2", "(ba)^2"}, 12), "D6 presentation");
  });
}

void lattice(Criterion& c) {
  const std::vector<std::pair<std::size_t, std::size_t>> counts{{3, 6}, {4, 10}, {5, 16}, {6, 27}};
  for (const auto& [r, n] : counts) {
    c.expect(enumerate_minus_one(r).size() == n, "(-1)-classes for r = " + std::to_string(r));
  }
  std::set<std::pair<PicClass, PicClass>> expected;
  for (std::size_t i = 0; i < 5; ++i) {
    PicClass b = hyperplane_class(5) + hyperplane_class(5);
    for (std::size_t j = 0; j < 5; ++j) {
      if (j != i) b = b - exceptional_class(5, j);
    }
    expected.insert(std::minmax(hyperplane_class(5) - exceptional_class(5, i), b));
  }
  std::set<std::pair<PicClass, PicClass>> found;
  for (const auto& [a, b] : exceptional_pairs(5)) found.insert(std::minmax(a, b));
  c.expect(exceptional_pairs(5).size() == 5, "five exceptional pairs");
  c.expect(found == expected, "exceptional pairs are {L - Ei, 2L - sum Ej}");
  c.expect(skew_quadruples(4).size() == 5, "five skew quadruples");
}

void fermat(Criterion& c) {
  c.expect(weighted_aut_group(fermat_cubic_surface(), fermat_generators()).order() == 648, "Fermat order 648");
}

void element_orders(Criterion& c) {
  c.expect(proj_order(ProjMap(Matrix{{2, -1}, {1, 1}})) == 6U, "order of [[2,-1],[1,1]]");
  std::vector<std::size_t> orders;
  for (const auto& g : rho_sigma_tau()) orders.push_back(proj_order(g).value_or(0));
  c.expect(orders == std::vector<std::size_t>{2, 2, 3}, "orders 2, 2, 3");
  const Matrix a{{0, -1, 0, 0}, {1, -1, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 1}};
  const Matrix b{{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 0, -1}, {0, 0, 1, -1}};
  const auto g = closure(std::vector<ProjMap>{ProjMap(a), ProjMap(b)});
  c.expect(g.order() == 9 && is_abelian(g), "abelian of order 9");
  c.expect(order_histogram(g) == std::map<std::size_t, std::size_t>{{1, 1}, {3, 8}}, "histogram {1:1, 3:8}");
}

void canonical_forms(Criterion& c) {
  auto rng = seeded(6);
  std::size_t good = 0;
  for (int i = 0; i < 200; ++i) {
    const Rational lambda = random_nonzero(rng, 9, 4);
    const Matrix g = random_invertible(rng, 3);
    const Matrix a = g * companion(lambda) * g.inverse();
    const CompanionForm f = companion_order3_pgl3(ProjMap(a));
    if (f.conjugator.inverse() * f.representative * f.conjugator == f.companion && ProjMap(f.representative) == ProjMap(a)) {
      ++good;
    }
  }
  c.expect(good == 200, "companion form for 200 conjugates (" + std::to_string(good) + ")");

  const CompanionForm fixed = companion_order3_pgl3(ProjMap(Matrix{{1, 0, 0}, {0, 0, -1}, {0, 1, -1}}));
  c.expect(fixed.conjugator == Matrix{{-1, -1, -1}, {-3, 3, 0}, {-3, 0, 3}}, "closed-form conjugator at a1 = a2 = 0");
  c.expect(fixed.conjugator.inverse() * fixed.representative * fixed.conjugator == fixed.companion,
           "closed-form conjugation");

  const Matrix s = order3_pgl2_normal_form();
  c.expect(s == Matrix{{0, -1}, {1, -1}}, "S = [[0,-1],[1,-1]]");
  good = 0;
  for (int i = 0; i < 200; ++i) {
    const Matrix g = random_invertible(rng, 2);
    const ProjMap alpha((g * s * g.inverse()).scaled(Scalar(random_nonzero(rng, 20, 7))));
    const Order3Pgl2Form f = canonical_order3_pgl2(alpha);
    if (f.conjugator.inverse() * f.lift * f.conjugator == s) ++good;
  }
  c.expect(good == 200, "PGL_2 normal form for 200 conjugates (" + std::to_string(good) + ")");
}

void torus(Criterion& c) {
  c.expect(torus_centralizer(6, hexagon_galois_twist()).count == 36, "n = 6 twist count 36");
  std::size_t cases = 0;
  for (long k = 1; k < 18; ++k) {
    if (gcd(k, 18) != 1) continue;
    for (const auto& d : sym3_elements()) {
      if (d.is_identity()) continue;
      for (bool e : {false, true}) {
        const auto r = torus_centralizer(18, HexAut(18, 0, 0, d, e, k));
        ++cases;
        c.expect(r.count <= 18, "n = 18 count " + std::to_string(r.count) + " at k = " + std::to_string(k));
      }
    }
  }
  c.expect(cases == 60, "60 cases at n = 18");
}

void geometry(Criterion& c) {
  const auto clebsch = clebsch_equations();
  const auto lines = clebsch_curves();
  for (const auto& s : clebsch) {
    for (const auto& l : lines) c.expect(surface_contains_curve(s, l), "Clebsch line on surface");
  }
  c.expect(curves_disjoint(lines[0], lines[1]), "Clebsch lines disjoint");

  const auto dp2 = dp2_surface();
  const auto curves = dp2_curves();
  for (const auto& cv : curves) c.expect(surface_contains_curve(dp2, cv), "degree 2 curve on surface");
  for (std::size_t i = 0; i < curves.size(); ++i) {
    for (std::size_t j = i + 1; j < curves.size(); ++j) c.expect(curves_disjoint(curves[i], curves[j]), "degree 2 curves disjoint");
  }
  c.expect(form_invariant_under(dp2.equation(), geiser_involution()) == Scalar(1), "Geiser flip");

  for (auto reading : {Dp1Sextic::printed, Dp1Sextic::scaled_whole}) {
    const auto f = dp1_forms(kDp1CurveLambda, kDp1CurveMu, reading);
    c.expect(dp1_stabilizer_check(dp1_alpha_matrix(), f.f4, f.f6), "F4, F6 fixed by alpha");
    c.expect(dp1_stabilizer_check(dp1_beta_matrix(), f.f4, f.f6), "F4, F6 fixed by beta");
  }
  const auto gens = dp1_generators();
  const std::map<std::string, ProjMap> named{{"a", gens[0]}, {"b", gens[1]}};
  c.expect(verify_presentation(named, {"a^6", "b^2", "(ba)^2"}, 12), "presentation at order 12");
}

void double_transpositions(Criterion& c) {
  auto rng = seeded(9);
  std::uniform_int_distribution<long> coord(-20, 20);
  std::size_t configs = 0;
  while (configs < 100) {
    std::vector<Point> pts;
    for (int i = 0; i < 5; ++i) pts.push_back({Scalar(coord(rng)), Scalar(coord(rng)), Scalar(coord(rng))});
    std::optional<PointConfig> cfg;
    try {
      cfg.emplace(pts);
    } catch (const std::exception&) {
      continue;
    }
    if (!general_position(*cfg)) continue;
    ++configs;
    const auto h = realizable_point_permutations(*cfg);
    for (const auto& s : h.elements()) {
      c.expect(s.is_identity() || s.cycle_type() == std::vector<std::size_t>{2, 2}, "double transposition " + s.to_string());
    }
  }
  c.expect(realizable_point_permutations(conjugate_points_config()).order() == 6, "conjugate-point configuration order 6");
}

void misc(Criterion& c) {
  const auto t = plain_variables({"t"});
  c.expect(cubic_discriminant(MultiPoly::parse("t^3 - 2*t^2 - 1", t)) == -59, "discriminant -59");
  auto rng = seeded(10);
  for (int i = 0; i < 100; ++i) {
    const Rational q = random_rational(rng, 50, 30);
    c.expect(rational_cube_root(pow(q, 3)) == q, "cube root round trip");
    const Scalar base(random_nonzero(rng, 9, 5));
    const Scalar a = base * base * base;  // n = 3
    const Scalar b = base * base;         // m = 2
    const Scalar r = coprime_root(a, b, 2, 3);
    c.expect(r * r * r == a && r * r == b, "coprime root round trip");
  }
  for (long b : {1L, -2L, 8L}) c.expect(!sextic_reducibility_criterion(Rational(b)), "sextic criterion b = " + std::to_string(b));
}

std::string strip_timings(const std::string& json) {
  static const std::regex kRuntime("\"runtime_ms\": [-0-9.eE+]+");
  return std::regex_replace(json, kRuntime, "\"runtime_ms\": 0");
}

std::optional<std::string> capture(const std::string& command) {
  std::FILE* pipe = popen(command.c_str(), "r");
  if (!pipe) return std::nullopt;
  std::string out;
  char buf[4096];
  std::size_t n = 0;
  while ((n = std::fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, n);
  if (pclose(pipe) != 0) return std::nullopt;
  return out;
}

std::function<void(Criterion&)> determinism(const std::string& cli) {
  return [cli](Criterion& c) {
    if (cli.empty()) {
      const auto a = render_report(run_suite("all", 1), ReportFormat::json);
      const auto b = render_report(run_suite("all", 1), ReportFormat::json);
      c.expect(strip_timings(a) == strip_timings(b), "in-process reports identical");
      return;
    }
    const std::string cmd = "'" + cli + "' run --suite all --seed 1 --format json";
    const auto a = capture(cmd);
    const auto b = capture(cmd);
    c.expect(a.has_value() && b.has_value(), "both runs exit 0");
    if (a && b) c.expect(strip_timings(*a) == strip_timings(*b), "reports identical apart from runtime_ms");
  };
}

}  // namespace

int main(int argc, char** argv) {
  const std::string cli = argc > 1 ? argv[1] : "";
  const std::vector<Entry> entries{
      {1, "Minkowski bounds M(3), M(4)", 1.0, minkowski},
      {2, "table orders by closure", 9 * 2000.0, table_orders},
      {3, "lattice counts", 1000.0, lattice},
      {4, "Fermat cubic order 648", 2000.0, fermat},
      {5, "element orders", 100.0, element_orders},
      {6, "order-3 canonical forms", 5000.0, canonical_forms},
      {7, "torus centralizers", 1000.0, torus},
      {8, "geometry", 1000.0, geometry},
      {9, "realizable permutations", 5000.0, double_transpositions},
      {10, "misc exact checks", 100.0, misc},
      {11, "determinism of the json report", 60000.0, determinism(cli)},
  };

  int failures = 0;
  const auto total_start = Clock::now();
  for (const auto& e : entries) {
    Criterion c;
    const auto start = Clock::now();
    try {
      e.body(c);
    } catch (const std::exception& ex) {
      c.expect(false, std::string("exception: ") + ex.what());
    }
    const double t = ms_since(start);
    c.expect(t < e.limit_ms, "runtime " + std::to_string(t) + " ms over " + std::to_string(e.limit_ms) + " ms");
    const bool ok = c.problems().empty();
    failures += ok ? 0 : 1;
    std::ostringstream line;
    line << (ok ? "PASS" : "FAIL") << "  " << e.number << ". " << e.title << " (" << t << " ms)";
    if (!ok) {
      line << ":";
      for (const auto& p : c.problems()) line << " [" << p << "]";
    }
    std::cout << line.str() << "\n";
  }
  std::cout << (failures == 0 ? "all criteria passed" : std::to_string(failures) + " criteria failed") << " in "
            << ms_since(total_start) << " ms\n";
  return failures == 0 ? 0 : 1;
}
