#pragma once

#include <cstdint>
#include <vector>

namespace cremona {

/// Result of the extended Euclidean algorithm: gcd = a*x + b*y.
struct Bezout {
  std::int64_t gcd;
  std::int64_t x;
  std::int64_t y;
};

Bezout extended_gcd(std::int64_t a, std::int64_t b);
std::int64_t gcd(std::int64_t a, std::int64_t b);
std::int64_t lcm(std::int64_t a, std::int64_t b);

/// Least nonnegative residue of a modulo m (m > 0).
std::int64_t mod(std::int64_t a, std::int64_t m);

bool is_prime(std::int64_t n);
std::int64_t euler_phi(std::int64_t n);

/// Divisors of n in increasing order.
std::vector<std::int64_t> divisors(std::int64_t n);

}  // namespace cremona
