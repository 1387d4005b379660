#pragma once

#include <string>
#include <vector>

#include "unideal/scalar.hpp"

namespace unideal {

/// Dense row-major matrix of scalars from a single field.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols, Field f);

  static Matrix identity(std::size_t n, Field f);
  /// All rows must have the same length.
  static Matrix from_rows(Field f, const std::vector<std::vector<Scalar>>& rows);
  static Matrix from_ints(Field f, const std::vector<std::vector<long long>>& rows);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  const Field& field() const noexcept { return field_; }
  bool is_square() const noexcept { return rows_ == cols_; }

  Scalar& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Scalar& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }
  std::vector<Scalar> row(std::size_t i) const;

  Matrix transpose() const;
  bool is_symmetric() const;
  Matrix embedded(const Field& f) const;

  friend Matrix operator*(const Matrix& a, const Matrix& b);
  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

  std::string to_string() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  Field field_;
  std::vector<Scalar> data_;
};

}  // namespace unideal
