#pragma once

#include <cstdint>
#include <vector>

#include "unideal/circuit.hpp"
#include "unideal/diagonal_circuit.hpp"
#include "unideal/ideal.hpp"
#include "unideal/random.hpp"

namespace unideal {

/// The power ideal <x_1^{e_1}, ..., x_n^{e_n}> together with the degree k of
/// the polynomials tested against it.
struct PowerIdealSpec {
  std::vector<unsigned> exponents;
  unsigned k = 0;

  std::size_t nvars() const noexcept { return exponents.size(); }
  /// sum_i (e_i - 1): the largest degree of a monomial outside the ideal.
  unsigned m() const;
  /// Throws std::invalid_argument when some e_i is 0.
  void validate() const;
  UnivariateIdeal ideal(const Field& f = Field{}) const;
};

/// (f o_s D)(b) where o_s multiplies matching coefficients and the factorial
/// m! of the exponent vector. Computed per summand (c, l) as
/// c * j! * f_j(l (.) b) with j = deg D and (.) the coordinatewise product.
/// `degree_bound` (default deg D) must be at least C's syntactic degree
/// bound; std::invalid_argument otherwise.
Scalar scaled_hadamard_eval(const Circuit& c, const DiagonalCircuit& d, const std::vector<Scalar>& b,
                            unsigned degree_bound = 0);

/// Number of colours used for degree k: ceil(1.5 k).
unsigned colour_count(unsigned k);

/// Probability that a uniformly random colouring with colour_count(k) colours
/// gives k fixed items pairwise distinct colours.
double coverage_probability(unsigned k);

/// ceil(4 k ln 2 / coverage_probability(k)): the colouring count that misses a
/// fixed multilinear monomial with probability <= 2^{-4k}.
std::size_t coverage_trials(unsigned k);

/// Colourings needed for a miss probability <= 2^{-bits} on a fixed monomial.
std::size_t trials_for_budget(unsigned k, unsigned bits);

/// Sum over `trials` random colourings of the degree-k part of
/// prod_j (L_j + 1), where L_j sums the copies of x_i (e_i - 1 of them) that
/// received colour j, as a sum of k-th powers. Fan-in is exactly
/// trials * 2^{colour_count(k) - 1} for k >= 1; k = 0 gives the constant 1.
/// Requires k <= m.
DiagonalCircuit build_detection_circuit(const PowerIdealSpec& spec, std::size_t trials, Rng& rng,
                                        const Field& f = Field{});

struct PowersOptions {
  /// Colourings per degree; 0 selects trials_for_budget(j, budget_bits).
  std::size_t trials = 0;
  std::size_t zt_trials = 2;
  unsigned budget_bits = 20;
  unsigned prime_bits = 64;
  /// Primes tried before a zero answer is accepted.
  unsigned primes = 3;
  /// Points are drawn from {1, ..., sample_size}.
  std::uint64_t sample_size = 1ULL << 32;
  /// Assumed bit size of the numerators of the tested polynomial's
  /// coefficients; only enters the bad-prime term of the error bound.
  unsigned coefficient_bits = 4096;
};

struct PowersResult {
  /// "Not in the ideal" is always correct.
  bool not_member = false;
  /// Degree whose test first came out nonzero.
  unsigned witness_degree = 0;
  /// Upper bound on the probability that "in the ideal" is wrong.
  double error_bound = 0.0;
  std::size_t total_fan_in = 0;
  std::vector<std::size_t> trials_per_degree;
  std::vector<std::uint64_t> primes_used;
};

/// Randomized membership test for a power ideal. Each degree j <= min(k, m)
/// is tested separately with its own detection circuit, evaluated modulo
/// random primes. C's degree bound must not exceed spec.k.
PowersResult membership_powers(const Circuit& c, const PowerIdealSpec& spec, Rng& rng, const PowersOptions& options = {});

/// Exact check by expansion: f is in the ideal iff every monomial has some
/// exponent a_i >= e_i.
bool power_ideal_member_brute(const Circuit& c, const std::vector<unsigned>& exponents,
                              std::size_t monomial_cap = 1'000'000);

}  // namespace unideal
