#include "unideal/graph.hpp"

#include <algorithm>
#include <stdexcept>

namespace unideal {

void Graph::add_edge(std::size_t u, std::size_t v) {
  if (u >= n_ || v >= n_) throw std::invalid_argument("edge endpoint out of range");
  if (u == v) throw std::invalid_argument("self-loops are not allowed");
  if (u > v) std::swap(u, v);
  if (has_edge(u, v)) throw std::invalid_argument("duplicate edge");
  edges_.emplace_back(u, v);
}

bool Graph::has_edge(std::size_t u, std::size_t v) const {
  if (u > v) std::swap(u, v);
  return std::find(edges_.begin(), edges_.end(), std::make_pair(u, v)) != edges_.end();
}

Matrix Graph::adjacency(const Field& f) const {
  Matrix a(n_, n_, f);
  for (const auto& [u, v] : edges_) a(u, v) = a(v, u) = f.one();
  return a;
}

Graph Graph::complete(std::size_t n) {
  Graph g(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) g.add_edge(i, j);
  return g;
}

Graph Graph::complete_bipartite(std::size_t a, std::size_t b) {
  Graph g(a + b);
  for (std::size_t i = 0; i < a; ++i)
    for (std::size_t j = 0; j < b; ++j) g.add_edge(i, a + j);
  return g;
}

Graph Graph::cycle(std::size_t n) {
  Graph g(n);
  for (std::size_t i = 0; i < n; ++i) g.add_edge(i, (i + 1) % n);
  return g;
}

Graph Graph::path(std::size_t n) {
  Graph g(n);
  for (std::size_t i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1);
  return g;
}

Graph Graph::star(std::size_t leaves) { return complete_bipartite(1, leaves); }

}  // namespace unideal
