#pragma once

#include <string>
#include <vector>

#include "unideal/scalar.hpp"

namespace unideal {

/// c_0 + c_1 x_1 + ... + c_n x_n.
class LinearForm {
 public:
  LinearForm() = default;
  LinearForm(Field f, std::size_t n);
  /// coeffs must be nonempty; the field is taken from them.
  explicit LinearForm(std::vector<Scalar> coeffs);
  LinearForm(Field f, std::vector<Scalar> coeffs, Scalar constant);

  static LinearForm variable(Field f, std::size_t n, std::size_t var);

  const Field& field() const noexcept { return field_; }
  std::size_t nvars() const noexcept { return coeffs_.size(); }
  const std::vector<Scalar>& coeffs() const noexcept { return coeffs_; }
  const Scalar& coeff(std::size_t i) const { return coeffs_[i]; }
  Scalar& coeff(std::size_t i) { return coeffs_[i]; }
  const Scalar& constant() const noexcept { return constant_; }
  void set_constant(const Scalar& c) { constant_ = c; }

  bool is_homogeneous() const noexcept { return constant_.is_zero(); }
  /// True when every variable coefficient is zero (the constant is ignored).
  bool is_linear_zero() const noexcept;
  std::vector<std::size_t> support() const;

  Scalar eval(const std::vector<Scalar>& point) const;

  LinearForm& operator+=(const LinearForm& o);
  LinearForm& operator-=(const LinearForm& o);
  LinearForm& operator*=(const Scalar& c);
  friend LinearForm operator+(LinearForm a, const LinearForm& b) { return a += b; }
  friend LinearForm operator-(LinearForm a, const LinearForm& b) { return a -= b; }
  friend LinearForm operator*(LinearForm a, const Scalar& c) { return a *= c; }
  friend bool operator==(const LinearForm& a, const LinearForm& b) {
    return a.coeffs_ == b.coeffs_ && a.constant_ == b.constant_;
  }

  LinearForm embedded(const Field& f) const;
  std::string to_string() const;

 private:
  Field field_;
  std::vector<Scalar> coeffs_;
  Scalar constant_;
};

}  // namespace unideal
