#include "unideal/matrix.hpp"

#include <sstream>
#include <stdexcept>

namespace unideal {

Matrix::Matrix(std::size_t rows, std::size_t cols, Field f)
    : rows_(rows), cols_(cols), field_(f), data_(rows * cols, f.zero()) {}

Matrix Matrix::identity(std::size_t n, Field f) {
  Matrix m(n, n, f);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = f.one();
  return m;
}

Matrix Matrix::from_rows(Field f, const std::vector<std::vector<Scalar>>& rows) {
  const std::size_t cols = rows.empty() ? 0 : rows.front().size();
  Matrix m(rows.size(), cols, f);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != cols) throw std::invalid_argument("ragged matrix rows");
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = f.embed(rows[i][j]);
  }
  return m;
}

Matrix Matrix::from_ints(Field f, const std::vector<std::vector<long long>>& rows) {
  std::vector<std::vector<Scalar>> s;
  for (const auto& r : rows) {
    std::vector<Scalar> row;
    for (auto x : r) row.push_back(f.from_int(x));
    s.push_back(std::move(row));
  }
  return from_rows(f, s);
}

std::vector<Scalar> Matrix::row(std::size_t i) const {
  return std::vector<Scalar>(data_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
                             data_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_));
}

Matrix Matrix::transpose() const {
  Matrix t(cols_, rows_, field_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

bool Matrix::is_symmetric() const {
  if (!is_square()) return false;
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = i + 1; j < cols_; ++j)
      if (!((*this)(i, j) == (*this)(j, i))) return false;
  return true;
}

Matrix Matrix::embedded(const Field& f) const {
  Matrix m(rows_, cols_, f);
  for (std::size_t i = 0; i < data_.size(); ++i) m.data_[i] = f.embed(data_[i]);
  return m;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  if (a.cols_ != b.rows_) throw std::invalid_argument("matrix dimension mismatch");
  Matrix c(a.rows_, b.cols_, a.field_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Scalar& x = a(i, k);
      if (x.is_zero()) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) c(i, j) += x * b(k, j);
    }
  return c;
}

std::string Matrix::to_string() const {
  std::ostringstream os;
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) os << (j ? " " : "") << (*this)(i, j);
    os << "\n";
  }
  return os.str();
}

}  // namespace unideal
