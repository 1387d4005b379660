#pragma once

#include <string>
#include <utility>
#include <vector>

#include "unideal/matrix.hpp"

namespace unideal {

/// Simple undirected graph on vertices 0..n-1.
class Graph {
 public:
  Graph() = default;
  explicit Graph(std::size_t n) : n_(n) {}

  /// Throws std::invalid_argument on a self-loop, duplicate, or bad index.
  void add_edge(std::size_t u, std::size_t v);
  bool has_edge(std::size_t u, std::size_t v) const;

  std::size_t order() const noexcept { return n_; }
  std::size_t size() const noexcept { return edges_.size(); }
  /// Each edge stored once with first < second.
  const std::vector<std::pair<std::size_t, std::size_t>>& edges() const noexcept { return edges_; }

  Matrix adjacency(const Field& f = Field{}) const;

  static Graph complete(std::size_t n);
  static Graph complete_bipartite(std::size_t a, std::size_t b);
  static Graph cycle(std::size_t n);
  static Graph path(std::size_t n);
  static Graph star(std::size_t leaves);

 private:
  std::size_t n_ = 0;
  std::vector<std::pair<std::size_t, std::size_t>> edges_;
};

}  // namespace unideal
