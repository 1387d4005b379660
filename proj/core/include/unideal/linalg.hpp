#pragma once

#include <vector>

#include "unideal/linear_form.hpp"
#include "unideal/matrix.hpp"

namespace unideal {

struct RowBasis {
  std::size_t rank = 0;
  /// Nonzero rows of the reduced row echelon form.
  std::vector<LinearForm> basis;
  /// rows(M) x rank; row i of M equals sum_j coords(i, j) * basis[j].
  Matrix coords;
};

RowBasis rank_and_row_basis(const Matrix& m);
std::size_t rank(const Matrix& m);
Scalar determinant(const Matrix& m);
/// Throws std::domain_error for a singular matrix.
Matrix inverse(const Matrix& m);

/// Stacks the coefficient vectors of homogeneous forms as rows.
Matrix forms_to_matrix(const std::vector<LinearForm>& forms, std::size_t n, const Field& f);

/// An invertible n x n matrix whose leading rows are `rows` (constant terms
/// are ignored). Throws std::invalid_argument on dependent rows.
Matrix complete_invertible(const std::vector<LinearForm>& rows, std::size_t n);

struct Congruence {
  Matrix q;
  Matrix d;
};

/// Invertible Q and diagonal D with Q A Q^T = D. Rejects non-symmetric input
/// and characteristic 2.
Congruence congruence_diagonalize(const Matrix& a);

}  // namespace unideal
