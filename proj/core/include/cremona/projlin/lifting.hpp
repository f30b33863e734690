#pragma once

#include <utility>

#include "cremona/exactalg/multipoly.hpp"
#include "cremona/projlin/projmap.hpp"

namespace cremona {

/// c = a^x b^y for Bezout n x + m y = 1, so that c^n = a and c^m = b.
/// Requires gcd(m, n) = 1, nonzero a and b, and a^m = b^n.
Scalar coprime_root(const Scalar& a, const Scalar& b, long m, long n);

/// Lift of an order-r class of PGL_n to a matrix A with det A = 1 and A^r = I.
/// Requires that alpha has projective order exactly r. When gcd(r, n) = 1 the
/// lift always exists; otherwise it needs a gcd(r, n)-th root of a rational
/// scalar and PreconditionError is thrown if there is none.
Matrix lift_to_sl(const ProjMap& alpha, long r);

/// The two lifts +-M/c of a class preserving the form F up to a scalar, where
/// the first satisfies (M/c)^m = I for m the order of alpha and both have
/// determinant +-1 over Q. Requires gcd(deg F, n) = 1.
std::pair<Matrix, Matrix> lift_form_preserving(const ProjMap& alpha, const MultiPoly& f);

/// Result of putting an order-3 class of PGL_3 into companion form.
struct CompanionForm {
  Matrix representative;  // A, with A^3 = lambda * I
  Rational lambda;
  Matrix companion;       // B = [[0,0,lambda],[1,0,0],[0,1,0]]
  Matrix conjugator;      // M with M^-1 A M = B
};

/// Conjugates an order-3 element of PGL_3(Q) to companion form. Elements
/// fixing e1 with the block shapes [[1,a1,a2],[0,0,-1],[0,1,-1]] or
/// [[1,a1,a2],[0,-1,1],[0,-1,0]] use a closed-form conjugator; all others use
/// M = [v | Av | A^2 v] for a cyclic vector v found by a deterministic search.
CompanionForm companion_order3_pgl3(const ProjMap& alpha);

/// Result of conjugating an order-3 class of PGL_2 to S = [[0,-1],[1,-1]].
struct Order3Pgl2Form {
  bool used_inverse;  // true when the returned data refers to alpha^-1
  Matrix lift;        // A in SL_2 with A^3 = I
  Matrix conjugator;  // M with M^-1 A M = S
};

Order3Pgl2Form canonical_order3_pgl2(const ProjMap& alpha);

/// The matrix S = [[0,-1],[1,-1]].
Matrix order3_pgl2_normal_form();

}  // namespace cremona
