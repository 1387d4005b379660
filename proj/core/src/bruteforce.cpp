#include "unideal/bruteforce.hpp"

#include <bit>
#include <functional>
#include <stdexcept>

namespace unideal::brute {

std::size_t min_vertex_cover(const Graph& g) {
  const std::size_t n = g.order();
  if (n > 24) throw std::invalid_argument("exhaustive vertex cover is limited to 24 vertices");
  std::size_t best = n;
  for (std::uint64_t mask = 0; mask < (1ULL << n); ++mask) {
    const auto size = static_cast<std::size_t>(std::popcount(mask));
    if (size >= best) continue;
    bool covers = true;
    for (const auto& [u, v] : g.edges()) covers = covers && (((mask >> u) | (mask >> v)) & 1);
    if (covers) best = size;
  }
  return best;
}

bool has_vertex_cover(const Graph& g, std::size_t k) { return min_vertex_cover(g) <= k; }

bool has_independent_set(const Graph& g, std::size_t k) { return g.order() - min_vertex_cover(g) >= k; }

bool is_colorable(const Graph& g, std::size_t k) {
  const std::size_t n = g.order();
  if (n == 0) return true;
  if (k == 0) return false;
  std::vector<std::vector<std::size_t>> adj(n);
  for (const auto& [u, v] : g.edges()) {
    adj[u].push_back(v);
    adj[v].push_back(u);
  }
  std::vector<std::size_t> color(n, k);
  std::function<bool(std::size_t)> place = [&](std::size_t v) {
    if (v == n) return true;
    for (std::size_t c = 0; c < k; ++c) {
      bool ok = true;
      for (auto u : adj[v]) ok = ok && color[u] != c;
      if (!ok) continue;
      color[v] = c;
      if (place(v + 1)) return true;
      color[v] = k;
    }
    return false;
  };
  return place(0);
}

std::optional<std::vector<int>> klineq_solution(const std::vector<std::vector<std::uint64_t>>& a,
                                                const std::vector<std::uint64_t>& b) {
  const std::size_t n = a.empty() ? 0 : a.front().size();
  if (n > 30) throw std::invalid_argument("exhaustive k-Lin-Eq is limited to 30 variables");
  for (std::uint64_t mask = 0; mask < (1ULL << n); ++mask) {
    bool ok = true;
    for (std::size_t i = 0; i < a.size() && ok; ++i) {
      std::uint64_t s = 0;
      for (std::size_t j = 0; j < n; ++j)
        if ((mask >> j) & 1) s += a[i][j];
      ok = s == b[i];
    }
    if (ok) {
      std::vector<int> x(n);
      for (std::size_t j = 0; j < n; ++j) x[j] = static_cast<int>((mask >> j) & 1);
      return x;
    }
  }
  return std::nullopt;
}

std::vector<std::uint64_t> one_in_three_solutions(std::size_t vars, const std::vector<std::array<std::size_t, 3>>& clauses) {
  if (vars > 30) throw std::invalid_argument("exhaustive 1-in-3 is limited to 30 variables");
  std::vector<std::uint64_t> out;
  for (std::uint64_t mask = 0; mask < (1ULL << vars); ++mask) {
    bool ok = true;
    for (const auto& cl : clauses) {
      int t = 0;
      for (auto v : cl) t += static_cast<int>((mask >> v) & 1);
      ok = ok && t == 1;
    }
    if (ok) out.push_back(mask);
  }
  return out;
}

}  // namespace unideal::brute
