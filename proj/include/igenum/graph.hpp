#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

namespace igenum {

/// Simple undirected graph on vertices 0..n-1 with a dense adjacency matrix.
class Graph {
 public:
  using Edge = std::pair<int, int>;

  Graph() = default;
  explicit Graph(int n);

  int vertex_count() const noexcept { return n_; }
  std::size_t edge_count() const noexcept { return edges_; }

  bool adjacent(int u, int v) const noexcept {
    return adj_[static_cast<std::size_t>(u) * n_ + v] != 0;
  }
  /// Idempotent; self-loops are rejected with std::invalid_argument.
  void add_edge(int u, int v);

  int degree(int v) const;
  bool is_connected() const;

  /// Edges as (u, v) with u < v in lexicographic order.
  std::vector<Edge> edges() const;

  Graph complement() const;

  /// "n <vertices>" followed by one "u v" line per edge, 1-based.
  std::string to_edge_list() const;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  int n_ = 0;
  std::size_t edges_ = 0;
  std::vector<unsigned char> adj_;
};

/// Interval and permutation-diagram decoders all produce plain graphs.
using IntervalGraph = Graph;

}  // namespace igenum
