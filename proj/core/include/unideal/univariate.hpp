#pragma once

#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

#include "unideal/scalar.hpp"

namespace unideal {

/// Dense univariate polynomial c_0 + c_1 x + ... + c_d x^d with c_d != 0.
/// The zero polynomial has no coefficients and degree -1.
class UnivariatePoly {
 public:
  UnivariatePoly() = default;
  explicit UnivariatePoly(Field f) : field_(f) {}
  UnivariatePoly(Field f, std::vector<Scalar> coeffs);

  static UnivariatePoly from_ints(Field f, std::initializer_list<long long> coeffs);
  static UnivariatePoly from_ints(Field f, const std::vector<long long>& coeffs);
  static UnivariatePoly constant(Field f, const Scalar& c);
  /// c * x^e
  static UnivariatePoly monomial(Field f, const Scalar& c, std::size_t e);
  /// x - a
  static UnivariatePoly linear_root(Field f, const Scalar& a);

  const Field& field() const noexcept { return field_; }
  int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const noexcept { return coeffs_.empty(); }
  const std::vector<Scalar>& coeffs() const noexcept { return coeffs_; }
  /// Zero beyond the degree.
  Scalar coeff(std::size_t i) const;
  /// Requires a nonzero polynomial.
  const Scalar& leading() const;

  Scalar eval(const Scalar& x) const;
  UnivariatePoly derivative() const;
  UnivariatePoly monic() const;
  UnivariatePoly scaled(const Scalar& c) const;

  /// Euclidean division; the divisor must be nonzero.
  std::pair<UnivariatePoly, UnivariatePoly> divmod(const UnivariatePoly& divisor) const;

  UnivariatePoly& operator+=(const UnivariatePoly& o);
  UnivariatePoly& operator-=(const UnivariatePoly& o);
  friend UnivariatePoly operator+(UnivariatePoly a, const UnivariatePoly& b) { return a += b; }
  friend UnivariatePoly operator-(UnivariatePoly a, const UnivariatePoly& b) { return a -= b; }
  friend UnivariatePoly operator*(const UnivariatePoly& a, const UnivariatePoly& b);
  friend UnivariatePoly operator%(const UnivariatePoly& a, const UnivariatePoly& b) { return a.divmod(b).second; }
  friend bool operator==(const UnivariatePoly& a, const UnivariatePoly& b) { return a.coeffs_ == b.coeffs_; }

  std::string to_string(const std::string& var = "x") const;

 private:
  void trim();

  Field field_;
  std::vector<Scalar> coeffs_;
};

/// Monic gcd; gcd(0, 0) = 0.
UnivariatePoly gcd(UnivariatePoly a, UnivariatePoly b);

/// gcd(p, p') is constant. The zero polynomial is not squarefree.
bool is_squarefree(const UnivariatePoly& p);

/// Resultant via the Euclidean remainder sequence.
Scalar resultant(const UnivariatePoly& a, const UnivariatePoly& b);

/// disc(p) = (-1)^{d(d-1)/2} res(p, p') / lc(p). Requires degree >= 1.
Scalar discriminant(const UnivariatePoly& p);

}  // namespace unideal
