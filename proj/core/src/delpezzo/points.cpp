#include "cremona/delpezzo/points.hpp"

#include <algorithm>
#include <numeric>

#include "cremona/errors.hpp"

namespace cremona {

namespace {

void check_point(const Point& p) {
  if (p.size() != 3) throw PreconditionError("points of P^2 need three coordinates");
  if (std::all_of(p.begin(), p.end(), [](const Scalar& x) { return is_zero(x); })) {
    throw PreconditionError("zero vector is not a point");
  }
}

Scalar det3(const Point& p, const Point& q, const Point& r) {
  return Matrix::from_columns({p, q, r}).determinant();
}

std::vector<Scalar> veronese(const Point& p) {
  const Scalar& x = p[0];
  const Scalar& y = p[1];
  const Scalar& z = p[2];
  return {x * x, x * y, y * y, x * z, y * z, z * z};
}

// Columns lambda_i p_i with sum lambda_i p_i = p_4: the frame matrix sending
// e1, e2, e3, e1+e2+e3 to the four points.
Matrix frame_matrix(const std::vector<Point>& pts) {
  const Matrix base = Matrix::from_columns({pts[0], pts[1], pts[2]});
  const std::vector<Scalar> lambda = base.inverse() * pts[3];
  std::vector<std::vector<Scalar>> cols;
  for (std::size_t i = 0; i < 3; ++i) {
    Point c = pts[i];
    for (auto& x : c) x = x * lambda[i];
    cols.push_back(std::move(c));
  }
  return Matrix::from_columns(cols);
}

void check_frame(const std::vector<Point>& pts) {
  if (pts.size() != 4) throw PreconditionError("a projective frame has four points");
  for (const auto& p : pts) check_point(p);
  for (std::size_t i = 0; i < 4; ++i) {
    for (std::size_t j = i + 1; j < 4; ++j) {
      for (std::size_t k = j + 1; k < 4; ++k) {
        if (is_zero(det3(pts[i], pts[j], pts[k]))) throw PreconditionError("degenerate quadruple");
      }
    }
  }
}

}  // namespace

bool same_point(const Point& p, const Point& q) {
  check_point(p);
  check_point(q);
  for (std::size_t i = 0; i < 3; ++i) {
    for (std::size_t j = i + 1; j < 3; ++j) {
      if (!is_zero(p[i] * q[j] - p[j] * q[i])) return false;
    }
  }
  return true;
}

PointConfig::PointConfig(std::vector<Point> points) : points_(std::move(points)) {
  for (std::size_t i = 0; i < points_.size(); ++i) {
    check_point(points_[i]);
    for (std::size_t j = 0; j < i; ++j) {
      if (same_point(points_[i], points_[j])) throw PreconditionError("repeated point in configuration");
    }
  }
}

bool collinear(const Point& p, const Point& q, const Point& r) {
  if (same_point(p, q) || same_point(p, r) || same_point(q, r)) throw PreconditionError("coincident points");
  return is_zero(det3(p, q, r));
}

bool six_on_conic(const std::vector<Point>& points) {
  if (points.size() != 6) throw PreconditionError("six points expected");
  std::vector<std::vector<Scalar>> rows;
  for (const auto& p : points) {
    check_point(p);
    rows.push_back(veronese(p));
  }
  return is_zero(Matrix::from_columns(rows).determinant());
}

bool general_position(const PointConfig& config, PositionChecks checks) {
  const std::size_t n = config.size();
  if (checks.no3collinear) {
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i + 1; j < n; ++j) {
        for (std::size_t k = j + 1; k < n; ++k) {
          if (collinear(config[i], config[j], config[k])) return false;
        }
      }
    }
  }
  if (checks.no6onconic && n >= 6) {
    std::vector<bool> mask(n, false);
    std::fill(mask.begin(), mask.begin() + 6, true);
    do {
      std::vector<Point> six;
      for (std::size_t i = 0; i < n; ++i) {
        if (mask[i]) six.push_back(config[i]);
      }
      if (six_on_conic(six)) return false;
    } while (std::prev_permutation(mask.begin(), mask.end()));
  }
  return true;
}

ProjMap unique_projectivity(const std::vector<Point>& src, const std::vector<Point>& dst) {
  check_frame(src);
  check_frame(dst);
  return ProjMap(frame_matrix(dst) * frame_matrix(src).inverse());
}

Point apply(const ProjMap& m, const Point& p) {
  if (m.dimension() != 3) throw PreconditionError("map of P^2 expected");
  check_point(p);
  return m.matrix() * p;
}

FiniteGroup<Perm> realizable_point_permutations(const PointConfig& config) {
  if (config.size() != 5) throw PreconditionError("five points expected");
  if (!general_position(config)) throw PreconditionError("configuration is not in general position");
  std::vector<std::uint8_t> sigma(5);
  std::iota(sigma.begin(), sigma.end(), 0);
  const std::vector<Point> src(config.points().begin(), config.points().begin() + 4);
  // A5 in the frame of A1..A4; its image under the candidate map is F_dst * c.
  const Point c = frame_matrix(src).inverse() * config[4];
  std::vector<Perm> found;
  do {
    std::vector<Point> dst;
    for (std::size_t i = 0; i < 4; ++i) dst.push_back(config[sigma[i]]);
    if (same_point(frame_matrix(dst) * c, config[sigma[4]])) found.emplace_back(sigma);
  } while (std::next_permutation(sigma.begin(), sigma.end()));
  // The identity is the first permutation in lexicographic order.
  return FiniteGroup<Perm>::from_elements(std::move(found), {});
}

}  // namespace cremona
