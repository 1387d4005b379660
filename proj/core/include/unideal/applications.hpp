#pragma once

#include <cstdint>

#include "unideal/graph.hpp"
#include "unideal/ideal.hpp"
#include "unideal/lowrank.hpp"
#include "unideal/matrix.hpp"
#include "unideal/random.hpp"

namespace unideal {

/// Exact permanent by inclusion-exclusion over column subsets (Gray code
/// order, O(2^n n)). Throws std::invalid_argument for n > 20 or non-square.
Scalar ryser_permanent(const Matrix& a);

/// prod_i (sum_j a_ij x_j) written over a row basis of a, with the ideal
/// <x_1^2, ..., x_n^2>.
LowRankInput permanent_input(const Matrix& a);

/// Perm(a) as the remainder of the row-product polynomial modulo
/// <x_1^2, ..., x_n^2>, evaluated at the all-ones point.
Scalar permanent_lowrank(const Matrix& a, RemStats* stats = nullptr);

struct VcInstance {
  LowRankInput input;
  UnivariateIdeal ideal;
  unsigned degree_bound = 0;
  /// Nonzero diagonal entries after congruence diagonalization.
  std::size_t quadratic_rank = 0;
  /// Largest s in the product over (q - s).
  std::size_t s_max = 0;
};

/// f = prod_{s=1}^{s_max} (q(x) - s) * prod_{t=0}^{n-k-1} (sum_i x_i - t) with
/// q(x) = sum over edges of x_u x_v, written in rank(A)+1 forms, and the
/// ideal <x_i^2 - x_i>. s_max = C(n,2), or |E| when `tight`.
VcInstance build_vc_instance(const Graph& g, std::size_t k, const Field& f = Field{}, bool tight = false);

struct VcOptions {
  Field field = Field::prime((1ULL << 61) - 1);
  bool tight = false;
};

struct VcResult {
  bool has_cover = false;
  std::size_t trials_run = 0;
  /// Probability bound for a wrong "no cover" answer; 0 when a cover exists.
  double error_bound = 1.0;
  std::uint64_t sample_size = 0;
  unsigned degree_bound = 0;
};

/// One-sided randomized test for a vertex cover of size <= k. "true" is
/// always correct.
VcResult vertex_cover_lowrank(const Graph& g, std::size_t k, std::size_t trials, Rng& rng,
                              const VcOptions& options = {});

}  // namespace unideal
