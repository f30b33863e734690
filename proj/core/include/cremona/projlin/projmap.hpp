#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "cremona/exactalg/matrix.hpp"

namespace cremona {

/// An invertible matrix acting on a (weighted) projective space, compared up
/// to the weighted scaling that multiplies row i by s^{w_i}. With all weights
/// equal to 1 this is ordinary scalar equivalence in PGL_n.
///
/// The matrix must be graded: entries may only mix coordinates of equal weight.
class ProjMap {
 public:
  ProjMap() = default;
  explicit ProjMap(Matrix m, std::vector<int> weights = {});

  static ProjMap identity(std::size_t n, std::vector<int> weights = {});

  std::size_t dimension() const { return m_.rows(); }
  const Matrix& matrix() const { return m_; }
  const std::vector<int>& weights() const { return w_; }
  bool is_unweighted() const;

  /// The unique representative of the equivalence class (see proj_canonical).
  ProjMap canonical() const;
  /// Text key of the canonical representative, suitable for hashing.
  std::string key() const;

  ProjMap operator*(const ProjMap& o) const;
  ProjMap inverse() const;
  ProjMap pow(std::size_t e) const;
  bool is_identity() const;

  /// Equivalence of classes, not equality of representatives.
  friend bool operator==(const ProjMap& a, const ProjMap& b);

 private:
  friend ProjMap proj_canonical(const ProjMap& m);
  // Skips validation for products and rescalings of valid maps.
  static ProjMap unchecked(Matrix m, std::vector<int> weights);

  Matrix m_;
  std::vector<int> w_;
};

/// Canonical representative. Unweighted maps are divided by their first
/// nonzero entry in row-major order. Weighted maps are scaled by the unique s
/// that makes the first nonzero entry in a weight-1 row equal to 1; weights
/// are first divided by their gcd. Throws PreconditionError when no weight-1
/// coordinate remains after that reduction.
ProjMap proj_canonical(const ProjMap& m);

/// Least k <= cap with m^k equivalent to the identity; nullopt when the cap is
/// reached first.
std::optional<std::size_t> proj_order(const ProjMap& m, std::size_t cap = 720);

// Group-element interface used by closure().
inline std::string group_key(const ProjMap& m) { return m.key(); }
inline ProjMap group_identity(const ProjMap& m) { return ProjMap::identity(m.dimension(), m.weights()); }

}  // namespace cremona
