#include "cremona/verifier/suites.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <numeric>
#include <random>
#include <set>

#include "cremona/delpezzo/hexagon.hpp"
#include "cremona/delpezzo/models.hpp"
#include "cremona/delpezzo/points.hpp"
#include "cremona/delpezzo/surfaces.hpp"
#include "cremona/errors.hpp"
#include "cremona/exactalg/multipoly.hpp"
#include "cremona/exactalg/rational.hpp"
#include "cremona/groupkit/elements.hpp"
#include "cremona/picard/lattice.hpp"
#include "cremona/projlin/lifting.hpp"
#include "cremona/projlin/minkowski.hpp"
#include "cremona/projlin/projmap.hpp"

namespace cremona {

namespace {

struct RunContext {
  std::uint64_t seed;
  std::size_t cap;
};

struct Outcome {
  std::string expected;
  std::string actual;
  bool erratum = false;  // a mismatch is a documented discrepancy, not a failure
};

struct CheckDef {
  std::string id;
  std::string reference;
  std::function<Outcome(const RunContext&)> run;
};

std::string count_of(std::size_t good, std::size_t total) { return std::to_string(good) + "/" + std::to_string(total); }

std::string yes_no(bool b, std::string_view yes, std::string_view no) { return std::string(b ? yes : no); }

Rational random_rational(std::mt19937_64& rng, long bound, long den_bound) {
  std::uniform_int_distribution<long> num(-bound, bound);
  std::uniform_int_distribution<long> den(1, den_bound);
  return make_rational(num(rng), den(rng));
}

Rational random_nonzero_rational(std::mt19937_64& rng, long bound, long den_bound) {
  for (;;) {
    Rational q = random_rational(rng, bound, den_bound);
    if (!is_zero(q)) return q;
  }
}

Matrix random_invertible_matrix(std::mt19937_64& rng, std::size_t n) {
  for (;;) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) m(i, j) = Scalar(random_rational(rng, 5, 3));
    }
    if (!is_zero(m.determinant())) return m;
  }
}

Matrix companion(const Rational& lambda) { return Matrix{{0, 0, Scalar(lambda)}, {1, 0, 0}, {0, 1, 0}}; }

// Five rational points in general position with coordinates in [-20, 20].
PointConfig random_config(std::mt19937_64& rng) {
  std::uniform_int_distribution<long> c(-20, 20);
  for (;;) {
    std::vector<Point> pts;
    for (int i = 0; i < 5; ++i) pts.push_back({Scalar(c(rng)), Scalar(c(rng)), Scalar(c(rng))});
    try {
      PointConfig cfg(pts);
      if (general_position(cfg)) return cfg;
    } catch (const PreconditionError&) {
    }
  }
}

FiniteGroup<ProjMap> dihedral12(std::size_t cap) {
  return closure(std::vector<ProjMap>{ProjMap(Matrix{{2, -1}, {1, 1}}), ProjMap(Matrix{{0, 1}, {1, 0}})}, cap);
}

std::vector<ProjMap> dp9_generators() {
  return {ProjMap(Matrix::diagonal({-1, -1, 1})), ProjMap(Matrix{{0, 1, 0}, {1, 0, 0}, {0, 0, 1}}),
          ProjMap(Matrix{{0, 1, 0}, {0, 0, 1}, {1, 0, 0}})};
}

// E_i or l_ij for a (-1)-class of the blow-up at four points.
std::string line_label(const PicClass& c) {
  std::string out = c.d == 0 ? "E" : "l";
  for (std::size_t i = 0; i < c.m.size(); ++i) {
    if (c.m[i] != 0) out += std::to_string(i + 1);
  }
  return out;
}

std::string factorization(const MinkowskiTable& t) {
  std::string out;
  for (const auto& [p, e] : t.exponents) {
    if (!out.empty()) out += "*";
    out += std::to_string(p);
    if (e > 1) out += "^" + std::to_string(e);
  }
  return out;
}

Outcome order_outcome(std::size_t expected, std::size_t actual) { return {std::to_string(expected), std::to_string(actual)}; }

std::vector<long> units_mod(long n) {
  std::vector<long> out;
  for (long k = 1; k < n; ++k) {
    if (std::gcd(k, n) == 1) out.push_back(k);
  }
  return out;
}

std::vector<CheckDef> minkowski_checks() {
  return {
      {"minkowski.m3", "Minkowski bound for GL_3(Q)",
       [](const RunContext&) { return Outcome{"48", minkowski_bound(3).get_str()}; }},
      {"minkowski.m4", "Minkowski bound for GL_4(Q)",
       [](const RunContext&) { return Outcome{"5760", minkowski_bound(4).get_str()}; }},
      {"minkowski.m4_factorization", "prime factorization of the GL_4(Q) bound",
       [](const RunContext&) { return Outcome{"2^7*3^2*5", factorization(minkowski_table(4))}; }},
  };
}

std::vector<CheckDef> pgl3_checks() {
  return {
      {"pgl3.proj_order", "order of [[2,-1],[1,1]] in PGL_2(Q)",
       [](const RunContext&) {
         const auto ord = proj_order(ProjMap(Matrix{{2, -1}, {1, 1}}));
         return Outcome{"6", ord ? std::to_string(*ord) : "infinite"};
       }},
      {"pgl3.pgl4_order9", "abelian subgroup of order 9 in PGL_4(Q)",
       [](const RunContext& ctx) {
         const Matrix a{{0, -1, 0, 0}, {1, -1, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 1}};
         const Matrix b{{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 0, -1}, {0, 0, 1, -1}};
         const auto g = closure(std::vector<ProjMap>{ProjMap(a), ProjMap(b)}, ctx.cap);
         std::string hist;
         for (const auto& [ord, n] : order_histogram(g)) {
           hist += (hist.empty() ? "" : ", ") + std::to_string(ord) + ":" + std::to_string(n);
         }
         return Outcome{"order 9, abelian, {1:1, 3:8}", "order " + std::to_string(g.order()) + ", " +
                                                            yes_no(is_abelian(g), "abelian", "nonabelian") + ", {" +
                                                            hist + "}"};
       }},
      {"pgl3.companion_random", "order-3 classes of PGL_3(Q) are conjugate to companion form",
       [](const RunContext& ctx) {
         std::mt19937_64 rng(ctx.seed);
         std::size_t good = 0;
         constexpr std::size_t kTrials = 200;
         for (std::size_t i = 0; i < kTrials; ++i) {
           const Rational lambda = random_nonzero_rational(rng, 9, 4);
           const Matrix g = random_invertible_matrix(rng, 3);
           const Matrix a = g * companion(lambda) * g.inverse();
           const CompanionForm f = companion_order3_pgl3(ProjMap(a));
           if (f.conjugator.inverse() * f.representative * f.conjugator == f.companion &&
               ProjMap(f.representative) == ProjMap(a)) {
             ++good;
           }
         }
         return Outcome{count_of(kTrials, kTrials), count_of(good, kTrials)};
       }},
      {"pgl3.companion_fixed_point_case", "closed-form conjugator for an order-3 class fixing a point, a1 = a2 = 0",
       [](const RunContext&) {
         const Matrix expected{{-1, -1, -1}, {-3, 3, 0}, {-3, 0, 3}};
         const CompanionForm f = companion_order3_pgl3(ProjMap(Matrix{{1, 0, 0}, {0, 0, -1}, {0, 1, -1}}));
         const bool conj = f.conjugator.inverse() * f.representative * f.conjugator == f.companion;
         return Outcome{expected.to_string(), conj ? f.conjugator.to_string() : "conjugation fails"};
       }},
      {"pgl3.pgl2_normal_form", "order-3 classes of PGL_2(Q) are conjugate to [[0,-1],[1,-1]]",
       [](const RunContext& ctx) {
         std::mt19937_64 rng(ctx.seed + 1);
         const Matrix s = order3_pgl2_normal_form();
         std::size_t good = 0;
         constexpr std::size_t kTrials = 200;
         for (std::size_t i = 0; i < kTrials; ++i) {
           const Matrix g = random_invertible_matrix(rng, 2);
           const ProjMap alpha((g * s * g.inverse()).scaled(Scalar(random_nonzero_rational(rng, 20, 7))));
           const Order3Pgl2Form f = canonical_order3_pgl2(alpha);
           if (f.conjugator.inverse() * f.lift * f.conjugator == s) ++good;
         }
         return Outcome{count_of(kTrials, kTrials), count_of(good, kTrials)};
       }},
      {"pgl3.cubic_discriminant", "discriminant of t^3 - 2t^2 - 1",
       [](const RunContext&) {
         const auto t = plain_variables({"t"});
         return Outcome{"-59", to_string(cubic_discriminant(MultiPoly::parse("t^3 - 2*t^2 - 1", t)))};
       }},
      {"pgl3.cube_root_roundtrip", "rational cube roots",
       [](const RunContext& ctx) {
         std::mt19937_64 rng(ctx.seed + 2);
         std::size_t good = 0;
         constexpr std::size_t kTrials = 100;
         for (std::size_t i = 0; i < kTrials; ++i) {
           const Rational q = random_rational(rng, 50, 30);
           const Rational cube = pow(q, 3);
           if (rational_cube_root(cube) == q) ++good;
         }
         return Outcome{count_of(kTrials, kTrials), count_of(good, kTrials)};
       }},
      {"pgl3.coprime_root_roundtrip", "common root c with c^n = a, c^m = b",
       [](const RunContext& ctx) {
         std::mt19937_64 rng(ctx.seed + 3);
         const std::vector<std::pair<long, long>> exps{{2, 3}, {3, 2}, {3, 4}, {4, 3}, {2, 5}, {5, 3}};
         std::uniform_int_distribution<std::size_t> pick(0, exps.size() - 1);
         std::size_t good = 0;
         constexpr std::size_t kTrials = 100;
         for (std::size_t i = 0; i < kTrials; ++i) {
           const auto [m, n] = exps[pick(rng)];
           const Scalar c(random_nonzero_rational(rng, 9, 5));
           Scalar a(1), b(1);
           for (long k = 0; k < n; ++k) a *= c;
           for (long k = 0; k < m; ++k) b *= c;
           const Scalar r = coprime_root(a, b, m, n);
           Scalar rn(1), rm(1);
           for (long k = 0; k < n; ++k) rn *= r;
           for (long k = 0; k < m; ++k) rm *= r;
           if (rn == a && rm == b) ++good;
         }
         return Outcome{count_of(kTrials, kTrials), count_of(good, kTrials)};
       }},
      {"pgl3.sextic_criterion", "reducibility criterion for the sextic at b = 1, -2, 8",
       [](const RunContext&) {
         std::string actual;
         for (long b : {1L, -2L, 8L}) {
           if (!actual.empty()) actual += ", ";
           actual += "b=" + std::to_string(b) + ":" + yes_no(sextic_reducibility_criterion(Rational(b)), "true", "false");
         }
         return Outcome{"b=1:false, b=-2:false, b=8:false", actual};
       }},
  };
}

std::vector<CheckDef> lattice_checks() {
  std::vector<CheckDef> out;
  const std::vector<std::pair<std::size_t, std::size_t>> counts{{3, 6}, {4, 10}, {5, 16}, {6, 27}};
  for (const auto& [r, n] : counts) {
    out.push_back({"lattice.minus_one_r" + std::to_string(r), "number of (-1)-classes for r = " + std::to_string(r),
                   [r = r, n = n](const RunContext&) { return order_outcome(n, enumerate_minus_one(r).size()); }});
  }
  out.push_back({"lattice.exceptional_pairs_r5", "exceptional pairs for r = 5",
                 [](const RunContext&) { return order_outcome(5, exceptional_pairs(5).size()); }});
  out.push_back({"lattice.exceptional_pairs_r5_classes", "exceptional pairs are {L - Ei, 2L - sum_{j!=i} Ej}",
                 [](const RunContext&) {
                   std::set<std::pair<PicClass, PicClass>> expected;
                   for (std::size_t i = 0; i < 5; ++i) {
                     PicClass a = hyperplane_class(5) - exceptional_class(5, i);
                     PicClass b = hyperplane_class(5) + hyperplane_class(5);
                     for (std::size_t j = 0; j < 5; ++j) {
                       if (j != i) b = b - exceptional_class(5, j);
                     }
                     expected.insert(std::minmax(a, b));
                   }
                   std::set<std::pair<PicClass, PicClass>> found;
                   for (const auto& [a, b] : exceptional_pairs(5)) found.insert(std::minmax(a, b));
                   return Outcome{"matches", yes_no(found == expected, "matches", "differs")};
                 }});
  out.push_back({"lattice.skew_quadruples_r4", "sets of four disjoint (-1)-classes for r = 4",
                 [](const RunContext&) { return order_outcome(5, skew_quadruples(4).size()); }});
  return out;
}

std::vector<CheckDef> product_checks() {
  return {
      {"conic.order144", "D6 x D6 on P^1 x P^1 preserving a ruling",
       [](const RunContext& ctx) { return order_outcome(144, product_with_swap(dihedral12(ctx.cap), false, ctx.cap).order()); }},
      {"dp8.order288", "(D6 x D6) x| Z/2 on P^1 x P^1",
       [](const RunContext& ctx) { return order_outcome(288, product_with_swap(dihedral12(ctx.cap), true, ctx.cap).order()); }},
      {"dp9.order24", "(Z/2)^2 x| Sym3 in PGL_3(Q)",
       [](const RunContext& ctx) { return order_outcome(24, closure(dp9_generators(), ctx.cap).order()); }},
      {"dp9.generator_orders", "orders of rho, sigma, tau",
       [](const RunContext&) {
         std::string actual;
         for (const auto& g : dp9_generators()) {
           const auto ord = proj_order(g);
           actual += (actual.empty() ? "" : ",") + (ord ? std::to_string(*ord) : std::string("inf"));
         }
         return Outcome{"2,2,3", actual};
       }},
  };
}

std::vector<CheckDef> dp6_checks() {
  return {
      {"dp6.order432", "automorphisms of the degree 6 surface commuting with the Galois twist",
       [](const RunContext& ctx) { return order_outcome(432, build_hexagon_group(ctx.cap).order()); }},
      {"dp6.torus_normal", "the torus part is a normal (Z/6)^2 with quotient D6",
       [](const RunContext& ctx) {
         const auto g = build_hexagon_group(ctx.cap);
         const auto r = analyze_subgroup(g, torus_subgroup(g));
         return Outcome{"order 36, exponent 6, normal, quotient 12",
                        "order " + std::to_string(r.order) + ", exponent " + std::to_string(r.exponent) + ", " +
                            yes_no(r.is_normal, "normal", "not normal") + ", quotient " +
                            std::to_string(r.quotient_order)};
       }},
      {"dp6.twist_commutes", "every element commutes with the twist",
       [](const RunContext& ctx) {
         const auto g = build_hexagon_group(ctx.cap);
         const HexAut twist = hexagon_galois_twist();
         const auto good = static_cast<std::size_t>(std::count_if(
             g.elements().begin(), g.elements().end(), [&](const HexAut& x) { return semilinear_commutes(x, twist); }));
         return Outcome{count_of(g.order(), g.order()), count_of(good, g.order())};
       }},
      {"dp6.torus_twist_n6", "torus elements commuting with the twist, n = 6",
       [](const RunContext&) { return order_outcome(36, torus_centralizer(6, hexagon_galois_twist()).count); }},
      {"dp6.torus_bound_n18", "torus centralizer of a transposition or 3-cycle has at most n elements, n = 18",
       [](const RunContext&) {
         constexpr std::uint32_t n = 18;
         std::size_t cases = 0;
         std::string worst;
         for (long k : units_mod(n)) {
           for (const auto& d : sym3_elements()) {
             if (d.is_identity()) continue;
             for (bool e : {false, true}) {
               const auto r = torus_centralizer(n, HexAut(n, 0, 0, d, e, k));
               ++cases;
               if (r.count > n && worst.empty()) {
                 worst = "count " + std::to_string(r.count) + " at k=" + std::to_string(k) + ", " + d.to_string() +
                         (e ? " with exchange" : "");
               }
             }
           }
         }
         const std::string ok = "all <= 18 (" + std::to_string(cases) + " cases)";
         return Outcome{ok, worst.empty() ? ok : worst};
       }},
  };
}

std::vector<CheckDef> dp5_checks() {
  return {
      {"dp5.order120", "automorphisms of the intersection graph of the ten (-1)-classes, r = 4",
       [](const RunContext&) {
         return order_outcome(120, graph_automorphisms(IntersectionGraph::from_classes(enumerate_minus_one(4))).order());
       }},
      {"dp5.quadruple_action", "graph automorphisms act on the five skew quadruples as Sym5",
       [](const RunContext&) {
         const auto classes = enumerate_minus_one(4);
         const auto g = graph_automorphisms(IntersectionGraph::from_classes(classes));
         const auto quads = skew_quadruple_indices(classes);
         std::set<std::string> images;
         for (const auto& p : g.elements()) images.insert(group_key(action_on_quadruples(p, quads)));
         return order_outcome(120, images.size());
       }},
      {"dp5.quadruple_list", "listed skew quadruple containing E4",
       [](const RunContext&) {
         const auto e4 = exceptional_class(4, 3);
         std::string actual = "not found";
         for (const auto& q : skew_quadruples(4)) {
           const bool has_e4 = std::find(q.begin(), q.end(), e4) != q.end();
           const bool all_exceptional = std::all_of(q.begin(), q.end(), [](const PicClass& c) { return c.d == 0; });
           if (!has_e4 || all_exceptional) continue;
           std::vector<std::string> labels;
           for (const auto& c : q) labels.push_back(line_label(c));
           std::sort(labels.begin(), labels.end(), [](const std::string& a, const std::string& b) {
             return std::pair(a[0] == 'l', a) < std::pair(b[0] == 'l', b);
           });
           actual = "{";
           for (std::size_t i = 0; i < labels.size(); ++i) actual += (i ? ", " : "") + labels[i];
           actual += "}";
         }
         return Outcome{"{E4, l23, l13, l23}", actual, true};
       }},
  };
}

std::vector<CheckDef> dp4_checks() {
  return {
      {"dp4.order96", "(Z/2)^4 x| Sym3 from the conjugate-point configuration",
       [](const RunContext& ctx) { return order_outcome(96, closure(conjugate_points_generators(), ctx.cap).order()); }},
      {"dp4.realizable_conjugate_config", "realizable permutations of the conjugate-point configuration",
       [](const RunContext&) { return order_outcome(6, realizable_point_permutations(conjugate_points_config()).order()); }},
      {"dp4.galois_central", "the Galois element is central",
       [](const RunContext& ctx) {
         const auto g = closure(conjugate_points_generators(), ctx.cap);
         const auto z = conjugate_points_galois_element();
         const bool central = g.contains(z) && std::all_of(g.elements().begin(), g.elements().end(),
                                                           [&](const PermVectorElement& x) { return commute(x, z); });
         return Outcome{"central", yes_no(central, "central", "not central")};
       }},
      {"dp4.random_double_transpositions", "realizable permutations of five rational points are double transpositions",
       [](const RunContext& ctx) {
         std::mt19937_64 rng(ctx.seed + 4);
         std::size_t good = 0;
         constexpr std::size_t kTrials = 100;
         for (std::size_t i = 0; i < kTrials; ++i) {
           const auto h = realizable_point_permutations(random_config(rng));
           const bool ok = std::all_of(h.elements().begin(), h.elements().end(), [](const Perm& s) {
             return s.is_identity() || s.cycle_type() == std::vector<std::size_t>{2, 2};
           });
           if (ok) ++good;
         }
         return Outcome{count_of(kTrials, kTrials), count_of(good, kTrials)};
       }},
  };
}

std::vector<CheckDef> dp3_checks() {
  return {
      {"dp3.order120", "Sym5 on the Clebsch cubic preserving both equations",
       [](const RunContext& ctx) {
         const auto eqs = clebsch_equations();
         const auto gens = clebsch_generators();
         const auto g = weighted_aut_group(eqs[1], gens, ctx.cap);
         for (const auto& x : gens) {
           if (form_invariant_under(eqs[0].equation(), x) != Scalar(1)) return Outcome{"120", "hyperplane not preserved"};
         }
         return order_outcome(120, g.order());
       }},
      {"dp3.clebsch_lines", "the two listed lines lie on the Clebsch cubic and are disjoint",
       [](const RunContext&) {
         const auto eqs = clebsch_equations();
         const auto lines = clebsch_curves();
         std::size_t on = 0;
         for (const auto& s : eqs) {
           for (const auto& l : lines) on += surface_contains_curve(s, l) ? 1 : 0;
         }
         return Outcome{"4/4 incidences, disjoint",
                        count_of(on, 4) + " incidences, " + yes_no(curves_disjoint(lines[0], lines[1]), "disjoint", "meeting")};
       }},
      {"dp3.fermat648", "automorphisms of the Fermat cubic over Q(zeta_3)",
       [](const RunContext& ctx) {
         return order_outcome(648, weighted_aut_group(fermat_cubic_surface(), fermat_generators(), ctx.cap).order());
       }},
      {"dp3.minkowski_divisibility", "120 divides the GL_4(Q) bound",
       [](const RunContext&) {
         const Integer rem = minkowski_bound(4) % 120;
         return Outcome{"0", rem.get_str()};
       }},
      {"dp3.printed_constant", "2^3 * 3^2 as printed in the degree 3 bound",
       [](const RunContext&) { return Outcome{"48", std::to_string(8 * 9), true}; }},
  };
}

std::vector<CheckDef> dp2_checks() {
  return {
      {"dp2.order48", "(Z/2)^3 x| Sym3 on the quartic double plane",
       [](const RunContext& ctx) { return order_outcome(48, weighted_aut_group(dp2_surface(), dp2_generators(), ctx.cap).order()); }},
      {"dp2.curves_on_surface", "listed curves lie on the surface",
       [](const RunContext&) {
         const auto s = dp2_surface();
         const auto curves = dp2_curves();
         const auto on = static_cast<std::size_t>(std::count_if(
             curves.begin(), curves.end(), [&](const ParamCurve& c) { return surface_contains_curve(s, c); }));
         return Outcome{count_of(curves.size(), curves.size()), count_of(on, curves.size())};
       }},
      {"dp2.curves_disjoint", "listed curves are pairwise disjoint",
       [](const RunContext&) {
         const auto curves = dp2_curves();
         std::size_t pairs = 0, disjoint = 0;
         for (std::size_t i = 0; i < curves.size(); ++i) {
           for (std::size_t j = i + 1; j < curves.size(); ++j) {
             ++pairs;
             if (curves_disjoint(curves[i], curves[j])) ++disjoint;
           }
         }
         return Outcome{count_of(pairs, pairs), count_of(disjoint, pairs)};
       }},
      {"dp2.geiser", "w -> -w preserves the equation",
       [](const RunContext&) {
         const auto lambda = form_invariant_under(dp2_surface().equation(), geiser_involution());
         return Outcome{"1", lambda ? to_string(*lambda) : "not preserved"};
       }},
  };
}

std::vector<CheckDef> dp1_checks() {
  return {
      {"dp1.order12", "D6 on the degree 1 surface",
       [](const RunContext& ctx) {
         const auto s = dp1_surface(kDp1CurveLambda, kDp1CurveMu);
         return order_outcome(12, weighted_aut_group(s, dp1_generators(), ctx.cap).order());
       }},
      {"dp1.presentation", "<a, b | a^6, b^2, (ba)^2> at order 12",
       [](const RunContext& ctx) {
         const auto gens = dp1_generators();
         const std::map<std::string, ProjMap> named{{"a", gens[0]}, {"b", gens[1]}};
         return Outcome{"holds", yes_no(verify_presentation(named, {"a^6", "b^2", "(ba)^2"}, 12, ctx.cap), "holds", "fails")};
       }},
      {"dp1.forms_invariant", "F4 and F6 are fixed by alpha and beta",
       [](const RunContext&) {
         std::size_t good = 0;
         for (auto reading : {Dp1Sextic::printed, Dp1Sextic::scaled_whole}) {
           const auto f = dp1_forms(kDp1CurveLambda, kDp1CurveMu, reading);
           for (const auto& a : {dp1_alpha_matrix(), dp1_beta_matrix()}) good += dp1_stabilizer_check(a, f.f4, f.f6) ? 1 : 0;
         }
         return Outcome{"4/4", count_of(good, 4)};
       }},
      {"dp1.curves_printed_sextic", "listed curves on the surface with F6 = lambda P + S",
       [](const RunContext&) {
         const auto s = dp1_surface(kDp1CurveLambda, kDp1CurveMu, Dp1Sextic::printed);
         const auto curves = dp1_curves();
         const auto on = static_cast<std::size_t>(std::count_if(
             curves.begin(), curves.end(), [&](const ParamCurve& c) { return surface_contains_curve(s, c); }));
         return Outcome{count_of(curves.size(), curves.size()), count_of(on, curves.size()), true};
       }},
      {"dp1.curves_scaled_sextic", "listed curves on the surface with F6 = lambda (P + S)",
       [](const RunContext&) {
         const auto s = dp1_surface(kDp1CurveLambda, kDp1CurveMu, Dp1Sextic::scaled_whole);
         const auto curves = dp1_curves();
         const auto on = static_cast<std::size_t>(std::count_if(
             curves.begin(), curves.end(), [&](const ParamCurve& c) { return surface_contains_curve(s, c); }));
         return Outcome{count_of(curves.size(), curves.size()), count_of(on, curves.size()), true};
       }},
      {"dp1.curve_list", "the four listed curves are distinct",
       [](const RunContext&) {
         const auto curves = dp1_curves();
         std::set<std::string> distinct;
         for (const auto& c : curves) {
           std::string key;
           for (const auto& p : c.components()) key += p.to_string() + ";";
           distinct.insert(key);
         }
         std::string actual = std::to_string(distinct.size()) + " distinct";
         if (curves[0].components() == curves[2].components()) actual += ", E1 = E3";
         if (curves[1].components() == curves[3].components()) actual += ", E2 = E4";
         if (!curves_disjoint(curves[0], curves[1])) actual += ", E1 meets E2";
         return Outcome{"4 distinct", actual, true};
       }},
  };
}

const std::vector<CheckDef>& registry() {
  static const std::vector<CheckDef> all = [] {
    std::vector<CheckDef> out;
    for (auto part : {minkowski_checks(), pgl3_checks(), lattice_checks(), product_checks(), dp6_checks(),
                      dp5_checks(), dp4_checks(), dp3_checks(), dp2_checks(), dp1_checks()}) {
      for (auto& c : part) out.push_back(std::move(c));
    }
    std::sort(out.begin(), out.end(), [](const CheckDef& a, const CheckDef& b) { return a.id < b.id; });
    return out;
  }();
  return all;
}

struct RowDef {
  std::string surface;
  std::string structure;
  std::vector<std::string> check_ids;  // the first one carries the order
};

const std::vector<RowDef>& table_rows() {
  static const std::vector<RowDef> rows{
      {"conic bundle", "D₆×D₆", {"conic.order144"}},
      {"dP9", "(Z/2Z)²⋊Sym₃", {"dp9.order24", "dp9.generator_orders"}},
      {"dP8", "(D₆×D₆)⋊Z/2Z", {"dp8.order288"}},
      {"dP6", "(Z/6Z)²⋊D₆", {"dp6.order432", "dp6.torus_normal"}},
      {"dP5", "Sym₅", {"dp5.order120", "dp5.quadruple_action"}},
      {"dP4", "(Z/2Z)⁴⋊Sym₃", {"dp4.order96"}},
      {"dP3", "Sym₅", {"dp3.order120"}},
      {"dP2", "(Z/2Z)³⋊Sym₃", {"dp2.order48"}},
      {"dP1", "D₆", {"dp1.order12", "dp1.presentation"}},
  };
  return rows;
}

std::string suite_of(const std::string& id) { return id.substr(0, id.find('.')); }

CheckResult execute(const CheckDef& def, const RunContext& ctx) {
  CheckResult r;
  r.id = def.id;
  r.reference = def.reference;
  const auto start = std::chrono::steady_clock::now();
  try {
    const Outcome o = def.run(ctx);
    r.expected = o.expected;
    r.actual = o.actual;
    if (o.expected == o.actual) r.status = CheckStatus::pass;
    else r.status = o.erratum ? CheckStatus::erratum_note : CheckStatus::fail;
  } catch (const std::exception& e) {
    r.actual = std::string("error: ") + e.what();
    r.status = CheckStatus::fail;
  }
  r.runtime_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return r;
}

std::optional<long> parse_order(const std::string& s) {
  if (s.empty() || !std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isdigit(c); })) return std::nullopt;
  return std::stol(s);
}

}  // namespace

std::vector<std::string> suite_names() {
  std::vector<std::string> out{"all", "minkowski", "pgl3", "lattice", "conic"};
  for (int d = 1; d <= 9; ++d) out.push_back("dp" + std::to_string(d));
  return out;
}

VerificationReport run_suite(std::string_view selection, std::uint64_t seed, std::size_t cap) {
  const auto names = suite_names();
  if (std::find(names.begin(), names.end(), selection) == names.end()) {
    throw PreconditionError("unknown suite: " + std::string(selection));
  }
  VerificationReport report;
  report.suite = std::string(selection);
  report.seed = seed;
  const RunContext ctx{seed, cap};
  for (const auto& def : registry()) {
    if (selection == "all" || suite_of(def.id) == selection) report.checks.push_back(execute(def, ctx));
  }
  for (const auto& row : table_rows()) {
    std::vector<const CheckResult*> backing;
    for (const auto& id : row.check_ids) {
      auto it = std::find_if(report.checks.begin(), report.checks.end(), [&](const CheckResult& c) { return c.id == id; });
      if (it != report.checks.end()) backing.push_back(&*it);
    }
    if (backing.size() != row.check_ids.size()) continue;
    TableRow t;
    t.surface = row.surface;
    t.structure = row.structure;
    t.check_ids = row.check_ids;
    t.order = parse_order(backing.front()->actual);
    const bool ok = std::all_of(backing.begin(), backing.end(),
                                [](const CheckResult* c) { return c->status == CheckStatus::pass; });
    t.status = ok ? CheckStatus::pass : CheckStatus::fail;
    report.table.push_back(std::move(t));
  }
  return report;
}

}  // namespace cremona
