#pragma once

#include <vector>

#include "cremona/exactalg/cyclotomic.hpp"
#include "cremona/groupkit/elements.hpp"
#include "cremona/groupkit/group.hpp"
#include "cremona/projlin/projmap.hpp"

namespace cremona {

/// Homogeneous coordinates of a point of P^2.
using Point = std::vector<Scalar>;

/// True iff p and q are the same point of P^2. Throws on the zero vector.
bool same_point(const Point& p, const Point& q);

/// Projectively distinct points of P^2.
class PointConfig {
 public:
  PointConfig() = default;
  /// Throws PreconditionError on a zero vector, a wrong length or a repeated
  /// point.
  explicit PointConfig(std::vector<Point> points);

  std::size_t size() const { return points_.size(); }
  const Point& operator[](std::size_t i) const { return points_[i]; }
  const std::vector<Point>& points() const { return points_; }

 private:
  std::vector<Point> points_;
};

/// Vanishing of det[p q r]. Throws if two of the points coincide.
bool collinear(const Point& p, const Point& q, const Point& r);

/// Vanishing of the determinant of the Veronese images
/// (x^2, xy, y^2, xz, yz, z^2). Throws unless exactly six points are given.
bool six_on_conic(const std::vector<Point>& points);

struct PositionChecks {
  bool no3collinear = true;
  bool no6onconic = false;
};

bool general_position(const PointConfig& config, PositionChecks checks = {});

/// The projectivity sending src[i] to dst[i] for i = 0..3. Throws if either
/// quadruple has three collinear points.
ProjMap unique_projectivity(const std::vector<Point>& src, const std::vector<Point>& dst);

/// Applies a 3x3 projective map to a point.
Point apply(const ProjMap& m, const Point& p);

/// All sigma in Sym5 such that the projectivity A_i -> A_sigma(i) (i < 4)
/// also sends A_4 to A_sigma(4). Requires five points with no three collinear.
FiniteGroup<Perm> realizable_point_permutations(const PointConfig& config);

}  // namespace cremona
