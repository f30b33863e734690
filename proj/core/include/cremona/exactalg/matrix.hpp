#pragma once

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <string>
#include <vector>

#include "cremona/exactalg/cyclotomic.hpp"

namespace cremona {

/// Dense row-major matrix over Scalar.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  Matrix(std::initializer_list<std::initializer_list<Scalar>> rows);

  static Matrix identity(std::size_t n);
  static Matrix diagonal(const std::vector<Scalar>& diag);
  /// Matrix whose j-th column is columns[j].
  static Matrix from_columns(const std::vector<std::vector<Scalar>>& columns);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  Scalar& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Scalar& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }
  const std::vector<Scalar>& data() const { return data_; }

  std::vector<Scalar> column(std::size_t j) const;
  std::vector<Scalar> row(std::size_t i) const;

  Matrix operator*(const Matrix& o) const;
  std::vector<Scalar> operator*(const std::vector<Scalar>& v) const;
  Matrix operator+(const Matrix& o) const;
  Matrix operator-(const Matrix& o) const;
  Matrix operator-() const;
  Matrix scaled(const Scalar& s) const;
  Matrix transpose() const;
  Matrix pow(std::size_t e) const;

  friend bool operator==(const Matrix&, const Matrix&) = default;

  Scalar determinant() const;
  std::size_t rank() const;
  /// Throws PreconditionError when singular.
  Matrix inverse() const;
  /// Basis of the right kernel {v : A v = 0}.
  std::vector<std::vector<Scalar>> kernel() const;

  /// Conductor of the smallest cyclotomic field containing every entry.
  std::uint32_t conductor() const;
  bool is_scalar_multiple_of_identity() const;

  /// Deterministic text form "[[a, b], [c, d]]".
  std::string to_string() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Scalar> data_;
};

}  // namespace cremona
