#include "unideal/linalg.hpp"

#include <stdexcept>
#include <utility>

namespace unideal {

namespace {

struct Echelon {
  Matrix rref;
  std::vector<std::size_t> pivots;
};

Echelon reduce(Matrix m) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
    std::size_t sel = row;
    while (sel < m.rows() && m(sel, col).is_zero()) ++sel;
    if (sel == m.rows()) continue;
    if (sel != row)
      for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(sel, j), m(row, j));
    const Scalar inv = m(row, col).inverse();
    for (std::size_t j = col; j < m.cols(); ++j) m(row, j) *= inv;
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == row || m(i, col).is_zero()) continue;
      const Scalar c = m(i, col);
      for (std::size_t j = col; j < m.cols(); ++j) m(i, j) -= c * m(row, j);
    }
    pivots.push_back(col);
    ++row;
  }
  return {std::move(m), std::move(pivots)};
}

}  // namespace

RowBasis rank_and_row_basis(const Matrix& m) {
  Echelon e = reduce(m);
  RowBasis out;
  out.rank = e.pivots.size();
  for (std::size_t i = 0; i < out.rank; ++i) out.basis.emplace_back(m.field(), e.rref.row(i), m.field().zero());
  out.coords = Matrix(m.rows(), out.rank, m.field());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < out.rank; ++j) out.coords(i, j) = m(i, e.pivots[j]);
  return out;
}

std::size_t rank(const Matrix& m) { return reduce(m).pivots.size(); }

Scalar determinant(const Matrix& m0) {
  if (!m0.is_square()) throw std::invalid_argument("determinant of a non-square matrix");
  Matrix m = m0;
  const std::size_t n = m.rows();
  Scalar det = m.field().one();
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t sel = col;
    while (sel < n && m(sel, col).is_zero()) ++sel;
    if (sel == n) return m.field().zero();
    if (sel != col) {
      for (std::size_t j = 0; j < n; ++j) std::swap(m(sel, j), m(col, j));
      det = -det;
    }
    det *= m(col, col);
    const Scalar inv = m(col, col).inverse();
    for (std::size_t i = col + 1; i < n; ++i) {
      if (m(i, col).is_zero()) continue;
      const Scalar c = m(i, col) * inv;
      for (std::size_t j = col; j < n; ++j) m(i, j) -= c * m(col, j);
    }
  }
  return det;
}

Matrix inverse(const Matrix& m) {
  if (!m.is_square()) throw std::invalid_argument("inverse of a non-square matrix");
  const std::size_t n = m.rows();
  Matrix aug(n, 2 * n, m.field());
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
    aug(i, n + i) = m.field().one();
  }
  Echelon e = reduce(std::move(aug));
  if (e.pivots.size() < n || e.pivots[n - 1] != n - 1) throw std::domain_error("matrix is singular");
  Matrix inv(n, n, m.field());
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv(i, j) = e.rref(i, n + j);
  return inv;
}

Matrix forms_to_matrix(const std::vector<LinearForm>& forms, std::size_t n, const Field& f) {
  Matrix m(forms.size(), n, f);
  for (std::size_t i = 0; i < forms.size(); ++i) {
    if (forms[i].nvars() != n) throw std::invalid_argument("linear form length mismatch");
    for (std::size_t j = 0; j < n; ++j) m(i, j) = forms[i].coeff(j);
  }
  return m;
}

Matrix complete_invertible(const std::vector<LinearForm>& rows, std::size_t n) {
  const Field f = rows.empty() ? Field{} : rows.front().field();
  if (rows.size() > n) throw std::invalid_argument("more rows than columns");
  const Matrix partial = forms_to_matrix(rows, n, f);
  const Echelon e = reduce(partial);
  if (e.pivots.size() != rows.size()) throw std::invalid_argument("rows are linearly dependent");
  Matrix out(n, n, f);
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < n; ++j) out(i, j) = partial(i, j);
  std::size_t next = rows.size();
  std::size_t p = 0;
  for (std::size_t col = 0; col < n; ++col) {
    if (p < e.pivots.size() && e.pivots[p] == col) {
      ++p;
      continue;
    }
    out(next++, col) = f.one();
  }
  return out;
}

Congruence congruence_diagonalize(const Matrix& a) {
  if (!a.is_symmetric()) throw std::invalid_argument("congruence diagonalization needs a symmetric matrix");
  const Field f = a.field();
  if (f.characteristic() == 2) throw std::invalid_argument("characteristic 2 is not supported");
  const std::size_t n = a.rows();
  Matrix m = a;
  Matrix q = Matrix::identity(n, f);

  // Row op on q plus the matching symmetric row/column op on m.
  auto add_multiple = [&](std::size_t dst, std::size_t src, const Scalar& c) {
    for (std::size_t j = 0; j < n; ++j) m(dst, j) += c * m(src, j);
    for (std::size_t i = 0; i < n; ++i) m(i, dst) += c * m(i, src);
    for (std::size_t j = 0; j < n; ++j) q(dst, j) += c * q(src, j);
  };
  auto swap_index = [&](std::size_t x, std::size_t y) {
    for (std::size_t j = 0; j < n; ++j) std::swap(m(x, j), m(y, j));
    for (std::size_t i = 0; i < n; ++i) std::swap(m(i, x), m(i, y));
    for (std::size_t j = 0; j < n; ++j) std::swap(q(x, j), q(y, j));
  };

  const Scalar two = f.from_int(2);
  for (std::size_t i = 0; i < n; ++i) {
    if (m(i, i).is_zero()) {
      bool fixed = false;
      std::size_t diag = n;
      for (std::size_t j = i + 1; j < n && !fixed; ++j) {
        if (m(i, j).is_zero()) continue;
        if (!(two * m(i, j) + m(j, j)).is_zero()) {
          add_multiple(i, j, f.one());
          fixed = true;
        } else if (diag == n) {
          diag = j;
        }
      }
      if (!fixed && diag != n) swap_index(i, diag);
      if (m(i, i).is_zero()) continue;  // row i is zero beyond the diagonal
    }
    const Scalar inv = m(i, i).inverse();
    for (std::size_t j = i + 1; j < n; ++j) {
      if (m(j, i).is_zero()) continue;
      add_multiple(j, i, -(m(j, i) * inv));
    }
  }
  return {std::move(q), std::move(m)};
}

}  // namespace unideal
