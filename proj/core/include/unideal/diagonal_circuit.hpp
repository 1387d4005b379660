#pragma once

#include <vector>

#include "unideal/linear_form.hpp"
#include "unideal/sparse_poly.hpp"

namespace unideal {

struct DiagonalSummand {
  Scalar coeff;
  LinearForm form;  // homogeneous
};

/// sum_j c_j * lambda_j^k with homogeneous linear forms lambda_j.
class DiagonalCircuit {
 public:
  DiagonalCircuit() = default;
  DiagonalCircuit(Field f, std::size_t n, unsigned degree) : field_(f), n_(n), degree_(degree) {}

  const Field& field() const noexcept { return field_; }
  std::size_t nvars() const noexcept { return n_; }
  unsigned degree() const noexcept { return degree_; }
  const std::vector<DiagonalSummand>& summands() const noexcept { return summands_; }
  std::size_t fan_in() const noexcept { return summands_.size(); }

  /// Throws std::invalid_argument for a form with a constant term or wrong length.
  void add(const Scalar& coeff, const LinearForm& form);
  void append(const DiagonalCircuit& other);

  Scalar eval(const std::vector<Scalar>& point) const;
  SparsePoly expand() const;
  DiagonalCircuit embedded(const Field& f) const;

 private:
  Field field_;
  std::size_t n_ = 0;
  unsigned degree_ = 0;
  std::vector<DiagonalSummand> summands_;
};

}  // namespace unideal
