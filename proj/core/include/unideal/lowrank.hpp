#pragma once

#include <memory>
#include <vector>

#include "unideal/circuit.hpp"
#include "unideal/ideal.hpp"
#include "unideal/linear_form.hpp"
#include "unideal/matrix.hpp"

namespace unideal {

/// f = outer(l_1, ..., l_r) for an outer circuit over r formal variables and
/// r linear forms over x_1..x_n.
struct LowRankInput {
  Circuit outer;
  std::vector<LinearForm> forms;
  unsigned degree_bound = 0;

  std::size_t nvars() const { return forms.empty() ? 0 : forms.front().nvars(); }
  /// Throws std::invalid_argument when the pieces do not fit together.
  void validate() const;
};

/// The composed circuit over x_1..x_n (forms substituted for the inputs).
Circuit compose(const LowRankInput& input);

/// Variable separation for one recursion level. The fixed variables are the
/// r lowest-indexed variables in the support of the forms; each form splits
/// into its part on the fixed variables (plus constant) and a residual part.
struct Transform {
  std::vector<std::size_t> live;
  std::vector<std::size_t> fixed;
  std::vector<LinearForm> fixed_parts;
  /// Indices of a maximal independent subset of the nonzero residual parts.
  std::vector<std::size_t> chosen;
  std::vector<LinearForm> residual_forms;
  /// r x r'; residual part of form i = sum_t coords(i, t) * residual_forms[t].
  Matrix coords;
  std::size_t r_prime = 0;
  /// n x n invertible map: rows are e_v for fixed v, then the residual forms,
  /// then a completion. Empty unless requested.
  Matrix t;
};

Transform build_transform(const std::vector<LinearForm>& forms, std::size_t n, bool with_matrix = true);

struct RemStats {
  std::size_t depth = 0;
  std::size_t max_terms = 0;
  std::vector<std::size_t> fixed_per_level;
};

/// Evaluates (f mod I) at points without expanding f over all n variables.
/// Each level expands over at most 2r variables with the fixed variables
/// reduced modulo their generators; the first level does not depend on the
/// point and is computed once at construction.
class RemEvaluator {
 public:
  /// Throws std::invalid_argument if a variable in the support of the forms
  /// has no generator, and CapExceeded if an expansion exceeds (d+1)^{#vars}.
  RemEvaluator(const LowRankInput& input, const UnivariateIdeal& ideal);
  ~RemEvaluator();
  RemEvaluator(RemEvaluator&&) noexcept;
  RemEvaluator& operator=(RemEvaluator&&) noexcept;

  Scalar operator()(const std::vector<Scalar>& alpha, RemStats* stats = nullptr) const;
  const Field& field() const;

  class Impl;

 private:
  std::unique_ptr<Impl> impl_;
};

Scalar rem_eval(const LowRankInput& input, const UnivariateIdeal& ideal, const std::vector<Scalar>& alpha,
                RemStats* stats = nullptr);

}  // namespace unideal
