#include "cremona/projlin/minkowski.hpp"

#include "cremona/errors.hpp"
#include "cremona/exactalg/numtheory.hpp"

namespace cremona {

int minkowski_exponent(int n, long p) {
  if (n < 1) throw PreconditionError("dimension must be positive");
  if (!is_prime(p)) throw PreconditionError(std::to_string(p) + " is not prime");
  int total = 0;
  for (long denom = p - 1; denom <= n; denom *= p) total += static_cast<int>(n / denom);
  return total;
}

MinkowskiTable minkowski_table(int n) {
  if (n < 1) throw PreconditionError("dimension must be positive");
  MinkowskiTable t;
  t.n = n;
  t.bound = 1;
  for (long p = 2; p <= n + 1; ++p) {
    if (!is_prime(p)) continue;
    const int e = minkowski_exponent(n, p);
    if (e == 0) continue;
    t.exponents[p] = e;
    Integer pe;
    mpz_ui_pow_ui(pe.get_mpz_t(), static_cast<unsigned long>(p), static_cast<unsigned long>(e));
    t.bound *= pe;
  }
  return t;
}

Integer minkowski_bound(int n) { return minkowski_table(n).bound; }

}  // namespace cremona
