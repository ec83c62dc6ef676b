#include "igenum/threshold.hpp"

#include <stdexcept>

#include "igenum/hash.hpp"

namespace igenum {

IntervalGraph thr_decode(const BinaryString& ops) {
  const int n = static_cast<int>(ops.size()) + 1;
  IntervalGraph g(n);
  for (int v = 1; v < n; ++v) {
    if (ops[v - 1] != Symbol::R) continue;
    for (int u = 0; u < v; ++u) g.add_edge(u, v);
  }
  return g;
}

std::size_t ThresholdMachine::State::hash() const noexcept {
  return hash_fields({universal, edges});
}

ThresholdMachine::ThresholdMachine(int n, std::optional<int> max_clique, std::optional<int> edges)
    : n_(n), max_clique_(max_clique), edges_(edges) {
  if (n < 1) throw std::invalid_argument("threshold machine needs n >= 1");
  if (max_clique && *max_clique < 1) throw std::invalid_argument("clique bound must be >= 1");
  if (edges && *edges < 0) throw std::invalid_argument("edge count must be >= 0");
}

std::optional<ThresholdMachine::State> ThresholdMachine::step(const State& s, std::size_t level,
                                                              Symbol c) const {
  if (c == Symbol::L) return s;
  State next = s;
  if (max_clique_) {
    next.universal += 1;
    if (next.universal + 1 > *max_clique_) return std::nullopt;
  }
  if (edges_) {
    next.edges += static_cast<int>(level) + 1;
    if (next.edges > *edges_) return std::nullopt;
  }
  return next;
}

bool ThresholdMachine::accept(const State& s) const noexcept {
  return !edges_ || s.edges == *edges_;
}

ThresholdMachine thr_machine(int n) { return ThresholdMachine(n); }
ThresholdMachine thr_machine_clique(int n, int k) { return ThresholdMachine(n, k); }
ThresholdMachine thr_machine_edges(int n, int m) { return ThresholdMachine(n, std::nullopt, m); }

}  // namespace igenum
