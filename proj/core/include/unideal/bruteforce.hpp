#pragma once

#include <cstdint>
#include <array>
#include <optional>
#include <vector>

#include "unideal/graph.hpp"

namespace unideal::brute {

/// Size of a minimum vertex cover by exhaustive search (n <= 24).
std::size_t min_vertex_cover(const Graph& g);
bool has_vertex_cover(const Graph& g, std::size_t k);
bool has_independent_set(const Graph& g, std::size_t k);
/// Proper coloring with at most k colors by backtracking.
bool is_colorable(const Graph& g, std::size_t k);

/// Some x in {0,1}^n with A x = b (A is k x n with nonnegative entries).
std::optional<std::vector<int>> klineq_solution(const std::vector<std::vector<std::uint64_t>>& a,
                                                const std::vector<std::uint64_t>& b);

/// All assignments (bitmask over variables) with exactly one true literal in
/// every clause.
std::vector<std::uint64_t> one_in_three_solutions(std::size_t vars, const std::vector<std::array<std::size_t, 3>>& clauses);

}  // namespace unideal::brute
