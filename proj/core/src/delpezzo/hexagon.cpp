#include "cremona/delpezzo/hexagon.hpp"

#include <numeric>

#include "cremona/errors.hpp"

namespace cremona {

namespace {

long mod(long x, long n) {
  const long r = x % n;
  return r < 0 ? r + n : r;
}

}  // namespace

HexAut::HexAut(std::uint32_t n, long a, long b, Perm delta, bool exchange, long k)
    : n_(n), delta_(std::move(delta)), eps_(exchange) {
  if (n == 0) throw PreconditionError("conductor must be positive");
  if (delta_.size() != 3) throw PreconditionError("hexagon permutation must act on three coordinates");
  const auto nn = static_cast<long>(n);
  a_ = mod(a, nn);
  b_ = mod(b, nn);
  k_ = mod(k, nn);
  if (std::gcd(k_, nn) != 1 && nn != 1) throw PreconditionError("Galois exponent must be a unit mod n");
}

HexAut HexAut::identity(std::uint32_t n) { return {n, 0, 0, Perm::identity(3), false, 1}; }

HexAut HexAut::torus(std::uint32_t n, long a, long b) { return {n, a, b, Perm::identity(3), false, 1}; }

HexAut HexAut::hex(std::uint32_t n, const Perm& delta, bool exchange) { return {n, 0, 0, delta, exchange, 1}; }

CharacterMatrix hex_character_matrix(const Perm& delta, bool exchange) {
  if (delta.size() != 3) throw PreconditionError("hexagon permutation must act on three coordinates");
  const Perm inv = delta.inverse();
  // Exponent vector (0, a, b) on x; slot j receives the exponent of coordinate
  // delta^-1(j), renormalised so that slot 0 has exponent 0.
  auto image = [&](long a, long b) {
    const std::array<long, 3> e{0, a, b};
    std::array<long, 2> out{};
    for (std::size_t j = 1; j < 3; ++j) out[j - 1] = e[inv(j)] - e[inv(0)];
    if (exchange) {
      out[0] = -out[0];
      out[1] = -out[1];
    }
    return out;
  };
  const auto c0 = image(1, 0);
  const auto c1 = image(0, 1);
  return {{{c0[0], c1[0]}, {c0[1], c1[1]}}};
}

HexAut HexAut::operator*(const HexAut& o) const {
  if (n_ != o.n_) throw PreconditionError("conductor mismatch");
  const auto m = hex_character_matrix(delta_, eps_);
  const long ta = k_ * o.a_;
  const long tb = k_ * o.b_;
  return {n_,
          a_ + m[0][0] * ta + m[0][1] * tb,
          b_ + m[1][0] * ta + m[1][1] * tb,
          delta_ * o.delta_,
          eps_ != o.eps_,
          k_ * o.k_};
}

std::string HexAut::to_string() const {
  return "t(" + std::to_string(a_) + "," + std::to_string(b_) + ") h(" + delta_.to_string() + (eps_ ? ",x" : "") +
         ") k=" + std::to_string(k_) + " mod " + std::to_string(n_);
}

HexAut hexaut_compose(const HexAut& u, const HexAut& v) { return u * v; }

bool semilinear_commutes(const HexAut& h, const HexAut& g) {
  if (!h.is_linear()) throw PreconditionError("first argument must be linear");
  if (g.is_linear()) throw PreconditionError("second argument must be semilinear");
  return h * g == g * h;
}

std::string group_key(const HexAut& x) {
  const auto [a, b] = x.torus_part();
  return std::to_string(x.conductor()) + ":" + std::to_string(a) + "," + std::to_string(b) + ":" +
         group_key(x.delta()) + (x.exchange() ? "x" : "-") + ":" + std::to_string(x.galois());
}

HexAut group_identity(const HexAut& x) { return HexAut::identity(x.conductor()); }

std::vector<HexAut> hexagon_symmetries(std::uint32_t n) {
  return {HexAut::hex(n, Perm::from_cycles(3, {{0, 2, 1}}), false),
          HexAut::hex(n, Perm::from_cycles(3, {{1, 2}}), false),
          HexAut::hex(n, Perm::identity(3), true)};
}

HexAut hexagon_galois_twist() { return {6, 0, 0, Perm::identity(3), true, 5}; }

FiniteGroup<HexAut> build_hexagon_group(std::size_t cap) {
  std::vector<HexAut> gens = hexagon_symmetries(6);
  gens.push_back(HexAut::torus(6, 1, 0));
  gens.push_back(HexAut::torus(6, 0, 1));
  return closure(gens, cap);
}

FiniteGroup<HexAut> torus_subgroup(const FiniteGroup<HexAut>& g) {
  std::vector<HexAut> t;
  for (const auto& x : g.elements()) {
    if (x.is_torus()) t.push_back(x);
  }
  return FiniteGroup<HexAut>::from_elements(std::move(t), {});
}

TorusCentralizer torus_centralizer(std::uint32_t n, const HexAut& g) {
  if (n < 2 || n > kMaxTorusConductor) {
    throw PreconditionError("torus conductor must lie in [2, " + std::to_string(kMaxTorusConductor) + "]");
  }
  if (g.conductor() != n) throw PreconditionError("conductor mismatch");
  TorusCentralizer out;
  out.n = n;
  for (long a = 0; a < static_cast<long>(n); ++a) {
    for (long b = 0; b < static_cast<long>(n); ++b) {
      const HexAut tau = HexAut::torus(n, a, b);
      if (tau * g == g * tau) out.solutions.emplace_back(a, b);
    }
  }
  out.count = out.solutions.size();
  out.within_bound = out.count <= n;
  return out;
}

std::vector<Perm> sym3_elements() {
  return {Perm::identity(3),
          Perm::from_cycles(3, {{0, 1}}),
          Perm::from_cycles(3, {{0, 2}}),
          Perm::from_cycles(3, {{1, 2}}),
          Perm::from_cycles(3, {{0, 1, 2}}),
          Perm::from_cycles(3, {{0, 2, 1}})};
}

}  // namespace cremona
