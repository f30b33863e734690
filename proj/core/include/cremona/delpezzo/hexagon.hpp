#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "cremona/groupkit/elements.hpp"
#include "cremona/groupkit/group.hpp"

namespace cremona {

/// Integer matrix acting on torus characters (a, b).
using CharacterMatrix = std::array<std::array<long, 2>, 2>;

/// A (semilinear) automorphism t o h o g_k of the sextic del Pezzo surface
/// x0 y0 = x1 y1 = x2 y2 in P^2 x P^2, with torus part, hexagon part and Galois
/// part over Q(zeta_n):
///   t = (a, b): x -> [x0 : z^a x1 : z^b x2], y -> [y0 : z^-a y1 : z^-b y2];
///   h = (delta, eps): coordinate i of x and of y moves to slot delta(i), then
///       X and Y are exchanged when eps is set;
///   g_k: zeta_n -> zeta_n^k on every coordinate.
class HexAut {
 public:
  /// Throws PreconditionError unless n >= 1, delta has degree 3 and
  /// gcd(k, n) = 1. Exponents are reduced mod n.
  HexAut(std::uint32_t n, long a, long b, Perm delta, bool exchange, long k = 1);

  static HexAut identity(std::uint32_t n);
  static HexAut torus(std::uint32_t n, long a, long b);
  static HexAut hex(std::uint32_t n, const Perm& delta, bool exchange);

  std::uint32_t conductor() const { return n_; }
  std::pair<long, long> torus_part() const { return {a_, b_}; }
  const Perm& delta() const { return delta_; }
  bool exchange() const { return eps_; }
  long galois() const { return k_; }
  bool is_linear() const { return k_ == 1 % static_cast<long>(n_); }
  bool is_torus() const { return delta_.is_identity() && !eps_ && is_linear(); }

  /// Throws PreconditionError on a conductor mismatch.
  HexAut operator*(const HexAut& o) const;
  friend bool operator==(const HexAut&, const HexAut&) = default;

  std::string to_string() const;

 private:
  std::uint32_t n_;
  long a_;
  long b_;
  Perm delta_;
  bool eps_;
  long k_;
};

/// The action h t h^-1 of a hexagon symmetry on torus characters.
CharacterMatrix hex_character_matrix(const Perm& delta, bool exchange);

HexAut hexaut_compose(const HexAut& u, const HexAut& v);

/// Whether h commutes with g. Requires h linear and g not linear.
bool semilinear_commutes(const HexAut& h, const HexAut& g);

std::string group_key(const HexAut& x);
HexAut group_identity(const HexAut& x);

/// Coordinate 3-cycle, coordinate transposition and factor exchange.
std::vector<HexAut> hexagon_symmetries(std::uint32_t n);

/// The Galois twist [x][y] -> [g(y)][g(x)] with g: zeta_6 -> zeta_6^5.
HexAut hexagon_galois_twist();

/// Hexagon symmetries together with the full torus mu_6^2.
FiniteGroup<HexAut> build_hexagon_group(std::size_t cap = kDefaultClosureCap);

/// The pure torus elements of a group.
FiniteGroup<HexAut> torus_subgroup(const FiniteGroup<HexAut>& g);

struct TorusCentralizer {
  std::uint32_t n = 0;
  std::vector<std::pair<long, long>> solutions;
  std::size_t count = 0;
  bool within_bound = false;  // count <= n
};

inline constexpr std::uint32_t kMaxTorusConductor = 18;

/// Every torus element tau of mu_n^2 with tau g = g tau. Requires
/// 2 <= n <= kMaxTorusConductor and g of conductor n.
TorusCentralizer torus_centralizer(std::uint32_t n, const HexAut& g);

/// The six elements of Sym3 in a fixed order, for enumerating hexagon images.
std::vector<Perm> sym3_elements();

}  // namespace cremona
