#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "unideal/circuit.hpp"
#include "unideal/graph.hpp"
#include "unideal/ideal.hpp"

namespace unideal {

/// A membership question: is the circuit's polynomial in the ideal?
struct MembershipInstance {
  Circuit circuit;
  UnivariateIdeal ideal;
};

/// k-Lin-Eq: is there x in {0,1}^n with A x = b? A is k x n with entries >= 0.
struct KLinEqInstance {
  std::vector<std::vector<std::uint64_t>> a;
  std::vector<std::uint64_t> b;

  std::size_t rows() const noexcept { return a.size(); }
  std::size_t cols() const noexcept { return a.empty() ? 0 : a.front().size(); }
  /// Throws std::invalid_argument on ragged rows or a length mismatch.
  void validate() const;
};

/// Positive 3-SAT where each clause must have exactly one true variable.
/// `columns` (>= 2, >= vars) is the column count of the packed matrix.
struct OneInThreeInstance {
  std::size_t vars = 0;
  std::size_t columns = 0;
  std::vector<std::array<std::size_t, 3>> clauses;

  /// Throws std::invalid_argument on repeated or out-of-range variables.
  void validate() const;
};

/// Generators p_i = prod_{j=1}^n (x_i - j) for i < k and the product over
/// ordered pairs i != j of (x_i - x_j) and, for every edge {u, v} (vertices
/// numbered from 1), [(x_i-u)^2 + (x_j-v)^2][(x_j-u)^2 + (x_i-v)^2]. The
/// polynomial lies outside the ideal iff G has an independent set of size k.
MembershipInstance reduce_independent_set(const Graph& g, std::size_t k);

/// P_A = prod_j (y^{a_j} + x^{a_j}) over variables x_1..x_k, y_1..y_k
/// (indices 0..k-1 and k..2k-1) with the ideal
/// <x_i^{b_i+1}, y_i^{mu_i-b_i+1}>, mu_i the row sums. P_A lies outside the
/// ideal iff the instance has a solution. When some b_i > mu_i the circuit
/// is the constant 0.
MembershipInstance reduce_klineq(const KLinEqInstance& inst);

/// Clause rows interleaved with zero rows, packed 2 ceil(log2 columns) rows
/// per entry, so that 0/1 solutions of A x = b are exactly the assignments
/// with one true variable per clause (padded with zeros to `columns`).
KLinEqInstance reduce_one_in_three(const OneInThreeInstance& inst);

/// Rows per packed entry: 2 ceil(log2 columns).
std::size_t one_in_three_block(std::size_t columns);

/// f_G = prod over edges u < v of (x_u - x_v) with the ideal <x_i^k - 1>.
/// f_G is in the ideal iff G is not k-colourable.
MembershipInstance graph_coloring_instance(const Graph& g, std::size_t k, const Field& f = Field{});

/// The k distinct k-th roots of unity in GF(p); requires p = 1 mod k.
std::vector<Scalar> roots_of_unity(std::size_t k, std::uint64_t p);

/// True when the circuit vanishes on every point of the product grid.
bool vanishes_on_grid(const Circuit& c, const std::vector<std::vector<Scalar>>& axes);

}  // namespace unideal
