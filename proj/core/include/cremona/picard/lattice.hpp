#pragma once

#include <string>
#include <utility>
#include <vector>

#include "cremona/groupkit/elements.hpp"

namespace cremona {

/// The class d L - sum m_i E_i on the blow-up of P^2 at r points.
/// E_i itself is d = 0, m_i = -1; the line through points i and j is
/// d = 1, m_i = m_j = 1.
struct PicClass {
  int d = 0;
  std::vector<int> m;

  std::size_t rank() const { return m.size(); }
  PicClass operator+(const PicClass& o) const;
  PicClass operator-(const PicClass& o) const;
  PicClass operator-() const;
  /// E.g. "2L - E1 - E2 - E3 - E4" or "E3".
  std::string to_string() const;

  friend bool operator==(const PicClass&, const PicClass&) = default;
  friend auto operator<=>(const PicClass&, const PicClass&) = default;
};

/// d d' - sum m_i m'_i.
int pairing(const PicClass& a, const PicClass& b);

PicClass hyperplane_class(std::size_t r);
PicClass exceptional_class(std::size_t r, std::size_t i);
/// Strict transform of the line through points i and j.
PicClass line_class(std::size_t r, std::size_t i, std::size_t j);
/// K = -3L + sum E_i, i.e. d = -3 and every m_i = -1.
PicClass canonical_class(std::size_t r);

/// Coefficient box for exhaustive searches.
struct ClassBox {
  int d_min = 0;
  int d_max = 6;
  int m_min = -1;
  int m_max = 3;
};

/// Every class with c.c = -1 and c.K = -1 inside the box, sorted by
/// (d, m) lexicographically. Requires 1 <= r <= 8.
std::vector<PicClass> enumerate_minus_one(std::size_t r, const ClassBox& box = {});

/// Every class with c.c = self and c.K = canonical inside the box.
std::vector<PicClass> enumerate_classes(std::size_t r, int self, int canonical, const ClassBox& box = {});

/// Unordered pairs {A, B} with A.A = B.B = 0 and A + B = -K, each listed once
/// with A < B.
std::vector<std::pair<PicClass, PicClass>> exceptional_pairs(std::size_t r = 5, const ClassBox& box = {});

/// All sets of four pairwise disjoint (-1)-classes, as index sets into
/// `classes` in increasing order.
std::vector<std::vector<std::size_t>> skew_quadruple_indices(const std::vector<PicClass>& classes);

/// The skew quadruples among the (-1)-classes of the rank-r lattice.
std::vector<std::vector<PicClass>> skew_quadruples(std::size_t r = 4);

/// Vertex set with its symmetric matrix of pairings.
struct IntersectionGraph {
  std::vector<PicClass> vertices;
  std::vector<std::vector<int>> adjacency;

  static IntersectionGraph from_classes(std::vector<PicClass> classes);
  /// A plain graph given by its adjacency matrix (vertices left empty).
  static IntersectionGraph from_adjacency(std::vector<std::vector<int>> adjacency);
  std::size_t size() const { return adjacency.size(); }
};

inline constexpr std::size_t kMaxAutomorphismVertices = 16;

/// All vertex permutations preserving the adjacency matrix, found by
/// backtracking with vertex-invariant pruning. The returned group lists every
/// automorphism. Throws PreconditionError above kMaxAutomorphismVertices.
FiniteGroup<Perm> graph_automorphisms(const IntersectionGraph& g);

/// The permutation of the quadruples induced by a vertex permutation.
/// Throws PreconditionError if some quadruple is not mapped to a quadruple.
Perm action_on_quadruples(const Perm& perm, const std::vector<std::vector<std::size_t>>& quads);

}  // namespace cremona
