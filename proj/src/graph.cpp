#include "igenum/graph.hpp"

#include <sstream>
#include <stdexcept>

namespace igenum {

Graph::Graph(int n) : n_(n) {
  if (n < 0) throw std::invalid_argument("vertex count must be non-negative");
  adj_.assign(static_cast<std::size_t>(n) * n, 0);
}

void Graph::add_edge(int u, int v) {
  if (u < 0 || v < 0 || u >= n_ || v >= n_) {
    throw std::out_of_range("edge endpoint out of range");
  }
  if (u == v) throw std::invalid_argument("self-loops are not allowed");
  auto& a = adj_[static_cast<std::size_t>(u) * n_ + v];
  if (a == 0) {
    a = 1;
    adj_[static_cast<std::size_t>(v) * n_ + u] = 1;
    ++edges_;
  }
}

int Graph::degree(int v) const {
  int d = 0;
  for (int u = 0; u < n_; ++u) d += adjacent(v, u) ? 1 : 0;
  return d;
}

bool Graph::is_connected() const {
  if (n_ <= 1) return true;
  std::vector<char> seen(n_, 0);
  std::vector<int> stack{0};
  seen[0] = 1;
  int reached = 1;
  while (!stack.empty()) {
    const int v = stack.back();
    stack.pop_back();
    for (int u = 0; u < n_; ++u) {
      if (!seen[u] && adjacent(v, u)) {
        seen[u] = 1;
        ++reached;
        stack.push_back(u);
      }
    }
  }
  return reached == n_;
}

std::vector<Graph::Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(edges_);
  for (int u = 0; u < n_; ++u) {
    for (int v = u + 1; v < n_; ++v) {
      if (adjacent(u, v)) out.emplace_back(u, v);
    }
  }
  return out;
}

Graph Graph::complement() const {
  Graph g(n_);
  for (int u = 0; u < n_; ++u) {
    for (int v = u + 1; v < n_; ++v) {
      if (!adjacent(u, v)) g.add_edge(u, v);
    }
  }
  return g;
}

std::string Graph::to_edge_list() const {
  std::ostringstream os;
  os << "n " << n_ << '\n';
  for (const auto& [u, v] : edges()) os << u + 1 << ' ' << v + 1 << '\n';
  return os.str();
}

}  // namespace igenum
