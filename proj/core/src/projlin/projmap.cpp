#include "cremona/projlin/projmap.hpp"

#include <algorithm>
#include <numeric>

#include "cremona/errors.hpp"

namespace cremona {

ProjMap::ProjMap(Matrix m, std::vector<int> weights) : m_(std::move(m)), w_(std::move(weights)) {
  if (!m_.is_square() || m_.rows() == 0) throw PreconditionError("projective map needs a nonempty square matrix");
  if (w_.empty()) w_.assign(m_.rows(), 1);
  if (w_.size() != m_.rows()) throw PreconditionError("weight vector length differs from dimension");
  for (int w : w_) {
    if (w <= 0) throw PreconditionError("weights must be positive");
  }
  for (std::size_t i = 0; i < m_.rows(); ++i) {
    for (std::size_t j = 0; j < m_.cols(); ++j) {
      if (w_[i] != w_[j] && !m_(i, j).is_zero()) {
        throw PreconditionError("matrix mixes coordinates of different weights");
      }
    }
  }
  if (m_.determinant().is_zero()) throw PreconditionError("singular matrix");
}

ProjMap ProjMap::unchecked(Matrix m, std::vector<int> weights) {
  ProjMap p;
  p.m_ = std::move(m);
  p.w_ = std::move(weights);
  return p;
}

ProjMap ProjMap::identity(std::size_t n, std::vector<int> weights) {
  return ProjMap(Matrix::identity(n), std::move(weights));
}

bool ProjMap::is_unweighted() const {
  return std::all_of(w_.begin(), w_.end(), [](int w) { return w == 1; });
}

ProjMap proj_canonical(const ProjMap& m) {
  const Matrix& a = m.matrix();
  const std::size_t n = a.rows();
  int g = 0;
  for (int w : m.weights()) g = std::gcd(g, w);
  std::vector<int> reduced(m.weights());
  for (int& w : reduced) w /= g;

  // Pivot: first nonzero entry (row-major) in a weight-1 row.
  std::optional<Scalar> pivot;
  for (std::size_t i = 0; i < n && !pivot; ++i) {
    if (reduced[i] != 1) continue;
    for (std::size_t j = 0; j < n; ++j) {
      if (!a(i, j).is_zero()) {
        pivot = a(i, j);
        break;
      }
    }
  }
  if (!pivot) throw PreconditionError("canonical form needs a weight-1 coordinate");
  const Scalar s = pivot->inverse();

  Matrix out = a;
  std::vector<Scalar> row_scale;
  for (int w : reduced) row_scale.push_back(s.pow(w));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (!out(i, j).is_zero()) out(i, j) = out(i, j) * row_scale[i];
    }
  }
  return ProjMap::unchecked(std::move(out), m.weights());
}

ProjMap ProjMap::canonical() const { return proj_canonical(*this); }

std::string ProjMap::key() const {
  std::string k = canonical().matrix().to_string();
  if (!is_unweighted()) {
    k += " w=";
    for (int w : w_) k += std::to_string(w) + ",";
  }
  return k;
}

ProjMap ProjMap::operator*(const ProjMap& o) const {
  if (w_ != o.w_) throw PreconditionError("composing maps on different weighted spaces");
  return unchecked(m_ * o.m_, w_);
}

ProjMap ProjMap::inverse() const { return ProjMap(m_.inverse(), w_); }

ProjMap ProjMap::pow(std::size_t e) const { return unchecked(m_.pow(e), w_); }

bool ProjMap::is_identity() const {
  if (is_unweighted()) return m_.is_scalar_multiple_of_identity();
  return canonical().matrix() == Matrix::identity(dimension());
}

bool operator==(const ProjMap& a, const ProjMap& b) {
  return a.w_ == b.w_ && a.canonical().matrix() == b.canonical().matrix();
}

std::optional<std::size_t> proj_order(const ProjMap& m, std::size_t cap) {
  if (cap == 0) throw PreconditionError("order cap must be positive");
  ProjMap power = m;
  for (std::size_t k = 1; k <= cap; ++k) {
    if (power.is_identity()) return k;
    power = power * m;
  }
  return std::nullopt;
}

}  // namespace cremona
