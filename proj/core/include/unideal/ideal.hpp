#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "unideal/circuit.hpp"
#include "unideal/sparse_poly.hpp"
#include "unideal/univariate.hpp"

namespace unideal {

struct Generator {
  std::size_t var;
  UnivariatePoly poly;
};

/// <p_1(x_{v_1}), ..., p_m(x_{v_m})> with distinct variables and
/// nonconstant generators over one field.
class UnivariateIdeal {
 public:
  UnivariateIdeal() = default;
  explicit UnivariateIdeal(Field f) : field_(f) {}

  /// x_i^2 - x_i for i < n.
  static UnivariateIdeal boolean(std::size_t n, Field f);
  /// x_i^{e_i}.
  static UnivariateIdeal powers(const std::vector<unsigned>& exponents, Field f);

  /// Throws std::invalid_argument on a constant generator, a repeated
  /// variable, or a field mismatch.
  void add(std::size_t var, UnivariatePoly p);

  const Field& field() const noexcept { return field_; }
  const std::vector<Generator>& generators() const noexcept { return gens_; }
  std::size_t size() const noexcept { return gens_.size(); }
  const UnivariatePoly* find(std::size_t var) const;
  /// Largest variable index plus one, 0 when empty.
  std::size_t var_span() const;

  /// Exponents e_i when every generator is c * x^{e_i}; variables without a
  /// generator get 0.
  std::optional<std::vector<unsigned>> power_exponents(std::size_t n) const;

  UnivariateIdeal embedded(const Field& f) const;

 private:
  Field field_;
  std::vector<Generator> gens_;
};

/// Entry e is x^e mod p for e = 0..max_e.
std::vector<UnivariatePoly> power_table(const UnivariatePoly& p, std::size_t max_e);

/// The unique remainder of f modulo I: deg_{x_v} < deg p_v for every
/// generator variable v.
SparsePoly divide(const SparsePoly& f, const UnivariateIdeal& ideal);

SparsePoly remainder_brute(const Circuit& c, const UnivariateIdeal& ideal, std::size_t monomial_cap = 1'000'000);
bool is_member_brute(const Circuit& c, const UnivariateIdeal& ideal, std::size_t monomial_cap = 1'000'000);

}  // namespace unideal
