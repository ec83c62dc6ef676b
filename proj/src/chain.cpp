#include "igenum/chain.hpp"

#include <algorithm>
#include <stdexcept>

#include "igenum/errors.hpp"

namespace igenum {

namespace {

void require_valid(const BinaryString& c) {
  if (!chain_valid(c)) throw std::invalid_argument("chain code must not end with R");
}

}  // namespace

bool chain_valid(const BinaryString& c) { return chain_code_valid(c); }

bool chain_canonical(const BinaryString& c) { return chain_code_canonical(c); }

IntervalGraph chain_decode(const BinaryString& c) {
  require_valid(c);
  const int n = static_cast<int>(c.size());
  IntervalGraph g(n);
  for (int i = 0; i < n; ++i) {
    if (c[i] != Symbol::R) continue;
    for (int j = i + 1; j < n; ++j) {
      if (c[j] == Symbol::L) g.add_edge(i, j);
    }
  }
  return g;
}

int chain_edge_count(const BinaryString& c) {
  require_valid(c);
  int seen_r = 0, edges = 0;
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (c[i] == Symbol::R) {
      ++seen_r;
    } else {
      edges += seen_r;
    }
  }
  return edges;
}

int chain_biclique_number(const BinaryString& c) {
  require_valid(c);
  const int n = static_cast<int>(c.size());
  const int total_l = static_cast<int>(c.count(Symbol::L));
  int best = 0, prefix_r = 0, prefix_l = 0;
  for (int i = 0; i + 1 < n; ++i) {
    (c[i] == Symbol::R ? prefix_r : prefix_l) += 1;
    const int suffix_l = total_l - prefix_l;
    if (prefix_r > 0 && suffix_l > 0) best = std::max(best, prefix_r + suffix_l);
  }
  if (best == 0) throw UndefinedBicliqueError("edgeless chain graph has no biclique");
  return best;
}

ChainCodeMachine chain_machine(int n) { return ChainCodeMachine(n); }

ChainCodeBoundedMachine chain_machine_biclique(int n, int k) {
  if (k < 2) throw std::invalid_argument("biclique bound must be >= 2");
  return ChainCodeBoundedMachine(n, ChainCodeBound::ChainBiclique, k);
}

ChainCodeBoundedMachine chain_machine_edges(int n, int m) {
  if (m < 0) throw std::invalid_argument("edge count must be >= 0");
  return ChainCodeBoundedMachine(n, ChainCodeBound::ChainEdges, m);
}

}  // namespace igenum
