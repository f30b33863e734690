#pragma once

#include <map>

#include "cremona/exactalg/rational.hpp"

namespace cremona {

/// Exponent of p in the Minkowski bound for GL_n(Q):
/// sum over k >= 0 of floor(n / (p^k (p - 1))).
int minkowski_exponent(int n, long p);

/// Product of p^{M(n,p)} over the primes p <= n + 1.
Integer minkowski_bound(int n);

struct MinkowskiTable {
  int n = 0;
  std::map<long, int> exponents;  // only primes with nonzero exponent
  Integer bound;
};

MinkowskiTable minkowski_table(int n);

}  // namespace cremona
