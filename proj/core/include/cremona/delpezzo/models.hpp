#pragma once

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "cremona/delpezzo/hexagon.hpp"
#include "cremona/delpezzo/points.hpp"
#include "cremona/delpezzo/surfaces.hpp"
#include "cremona/groupkit/elements.hpp"

namespace cremona {

/// Permutation matrix with M e_i = e_sigma(i).
Matrix permutation_matrix(const Perm& sigma);

// Degree 1: w^2 - z^3 - F4 z - F6 in P(3,1,1,2).

/// How the sextic F6 = lambda*P + S is read: `printed` keeps lambda on P only,
/// `scaled_whole` takes lambda*(P + S).
enum class Dp1Sextic { printed, scaled_whole };

struct Dp1Forms {
  MultiPoly f4;
  MultiPoly f6;
};

/// Binary forms in x, y.
Dp1Forms dp1_forms(const Rational& lambda, const Rational& mu, Dp1Sextic reading = Dp1Sextic::printed);
WeightedHypersurface dp1_surface(const Rational& lambda, const Rational& mu,
                                 Dp1Sextic reading = Dp1Sextic::printed);
/// The binary parts of alpha: (x, y) -> (-y, x + y) and beta: (x, y) -> (-x - y, y).
Matrix dp1_alpha_matrix();
Matrix dp1_beta_matrix();
/// alpha and beta on P(3,1,1,2).
std::vector<ProjMap> dp1_generators();
/// The four listed curves E1..E4, parametrised by (x, y) = (a, b).
std::vector<ParamCurve> dp1_curves();
inline const Rational kDp1CurveLambda{-1, 5};
inline const Rational kDp1CurveMu{-6, 5};

// Degree 2: 3 w^2 + (x1^4 + x2^4 + x3^4) - 5 (x1^2 x2^2 + x1^2 x3^2 + x2^2 x3^2)
// in P(2,1,1,1).

WeightedHypersurface dp2_surface();
/// Geiser flip, two sign changes, a transposition and a 3-cycle of the x_i.
std::vector<ProjMap> dp2_generators();
ProjMap geiser_involution();
std::vector<ParamCurve> dp2_curves();

// Degree 3.

/// sum X_i = 0 and sum X_i^3 = 0 in P^4.
std::vector<WeightedHypersurface> clebsch_equations();
/// The two lines [0:a:-a:b:-b] and [a:0:b:-a:-b].
std::vector<ParamCurve> clebsch_curves();
/// A transposition and a 5-cycle of the coordinates.
std::vector<ProjMap> clebsch_generators();

WeightedHypersurface fermat_cubic_surface();
/// diag(zeta_3, 1, 1, 1), a transposition and a 4-cycle, over Q(zeta_3).
std::vector<ProjMap> fermat_generators();

// Degree 4.

/// [1:w:w^2], [1:w^2:w] and the coordinate points, w = zeta_3.
PointConfig conjugate_points_config();
/// Realizable permutations of conjugate_points_config() with zero vectors, together with
/// the even-weight vectors e_i + e_{i+1}.
std::vector<PermVectorElement> conjugate_points_generators();
/// The Galois element: swapping the two conjugate points.
PermVectorElement conjugate_points_galois_element();

// Degree 6.

/// x0 y0 - x1 y1 and x1 y1 - x2 y2 in P^2 x P^2.
std::vector<WeightedHypersurface> hexagon_equations();

/// A model with its equations, curves and generator lists; only the generator
/// list matching the model's group is nonempty.
struct NamedModel {
  std::string name;
  std::vector<WeightedHypersurface> equations;
  std::vector<ParamCurve> curves;
  std::vector<ProjMap> linear_generators;
  std::vector<HexAut> hex_generators;
  std::vector<PermVectorElement> abstract_generators;
};

std::vector<std::string> named_model_names();

/// Recognised names: hexagon_X, clebsch_p4, fermat_cubic, dp2_example,
/// dp1_example (parameters "lambda", "mu", "scaled_whole"), conjugate_points_group.
/// Throws PreconditionError for an unknown name.
NamedModel build_named_model(std::string_view name, const std::map<std::string, Rational>& params = {});

/// Order of the closure of the model's generators.
std::size_t model_group_order(const NamedModel& model, std::size_t cap = kDefaultClosureCap);

}  // namespace cremona
