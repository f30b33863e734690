#pragma once

#include <optional>
#include <vector>

#include "cremona/exactalg/multipoly.hpp"
#include "cremona/groupkit/group.hpp"
#include "cremona/projlin/projmap.hpp"

namespace cremona {

/// V(f) in a weighted projective space; the grading comes from the weights
/// of f's variables.
class WeightedHypersurface {
 public:
  /// Throws PreconditionError unless f is nonzero and weighted-homogeneous.
  explicit WeightedHypersurface(MultiPoly f);

  const MultiPoly& equation() const { return f_; }
  std::vector<int> weights() const;
  int degree() const { return degree_; }

 private:
  MultiPoly f_;
  int degree_ = 0;
};

/// A map P^1 -> P(w) given by one form in (a, b) per ambient coordinate, the
/// form for a coordinate of weight w having degree w * d for a common d.
class ParamCurve {
 public:
  /// Throws PreconditionError on mismatched degrees, non-binary components or
  /// components with a common zero on P^1.
  ParamCurve(std::vector<int> weights, std::vector<MultiPoly> components);

  /// Parses each component in the parameters a, b.
  static ParamCurve parse(std::vector<int> weights, const std::vector<std::string>& components);

  const std::vector<int>& weights() const { return weights_; }
  const std::vector<MultiPoly>& components() const { return components_; }
  int parameter_degree() const { return d_; }

 private:
  std::vector<int> weights_;
  std::vector<MultiPoly> components_;
  int d_ = 0;
};

/// The parameter variables a, b.
std::vector<Variable> curve_parameters();

/// Whether f vanishes identically on the curve. Throws on weight mismatch.
bool surface_contains_curve(const WeightedHypersurface& s, const ParamCurve& c);

/// Whether the images of two curves are disjoint. Decided exactly in two
/// situations: both curves are graphs over the same pair of weight-1
/// coordinates (then they meet iff all component differences share a root),
/// or the ambient is unweighted and one curve is a line (then they meet iff
/// the 3x3 minors against the line share a root). Throws PreconditionError
/// for other pairs and for ambient mismatch.
bool curves_disjoint(const ParamCurve& c1, const ParamCurve& c2);

/// lambda with F o M = lambda F, if any.
std::optional<Scalar> form_invariant_under(const MultiPoly& f, const ProjMap& m);

/// Closure of the generators under weighted-projective equivalence. Throws
/// PreconditionError if a generator does not preserve the surface.
FiniteGroup<ProjMap> weighted_aut_group(const WeightedHypersurface& s, const std::vector<ProjMap>& generators,
                                        std::size_t cap = kDefaultClosureCap);

/// Whether F4 o A = F4 and F6 o A = F6 exactly.
bool dp1_stabilizer_check(const Matrix& a, const MultiPoly& f4, const MultiPoly& f6);

}  // namespace cremona
