#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "unideal/scalar.hpp"

namespace unideal {

using Exponents = std::vector<std::uint32_t>;

/// Multivariate polynomial over n variables as a map from exponent vectors to
/// nonzero coefficients.
class SparsePoly {
 public:
  using Terms = std::map<Exponents, Scalar>;

  SparsePoly() = default;
  SparsePoly(std::size_t n, Field f) : n_(n), field_(f) {}

  static SparsePoly constant(std::size_t n, Field f, const Scalar& c);
  static SparsePoly variable(std::size_t n, Field f, std::size_t var);

  std::size_t nvars() const noexcept { return n_; }
  const Field& field() const noexcept { return field_; }
  const Terms& terms() const noexcept { return terms_; }
  std::size_t size() const noexcept { return terms_.size(); }
  bool is_zero() const noexcept { return terms_.empty(); }

  /// Adds c * x^e; zero sums are dropped.
  void add_term(const Exponents& e, const Scalar& c);
  Scalar coeff(const Exponents& e) const;

  /// Total degree; -1 for the zero polynomial.
  int degree() const;
  std::uint32_t degree_in(std::size_t var) const;

  Scalar eval(const std::vector<Scalar>& point) const;

  /// Only the terms of total degree k.
  SparsePoly homogeneous_part(unsigned k) const;

  SparsePoly& operator+=(const SparsePoly& o);
  SparsePoly& operator-=(const SparsePoly& o);
  SparsePoly& operator*=(const Scalar& c);
  friend SparsePoly operator+(SparsePoly a, const SparsePoly& b) { return a += b; }
  friend SparsePoly operator-(SparsePoly a, const SparsePoly& b) { return a -= b; }
  friend SparsePoly operator*(SparsePoly a, const Scalar& c) { return a *= c; }
  friend SparsePoly operator*(const SparsePoly& a, const SparsePoly& b);
  friend bool operator==(const SparsePoly& a, const SparsePoly& b) { return a.n_ == b.n_ && a.terms_ == b.terms_; }

  std::string to_string() const;

 private:
  std::size_t n_ = 0;
  Field field_;
  Terms terms_;
};

/// Product of factorials of the exponents.
Scalar exponent_factorial(const Exponents& e, const Field& f);

}  // namespace unideal
