#include "igenum/cochain.hpp"

#include <stdexcept>

#include "igenum/proper_interval.hpp"

namespace igenum {

bool cochain_valid(const BinaryString& c) { return chain_code_valid(c); }

bool cochain_canonical(const BinaryString& c) { return chain_code_canonical(c); }

BinaryString cochain_expand(const BinaryString& c) {
  if (!cochain_valid(c)) throw std::invalid_argument("cochain code must not end with R");
  return BinaryString::repeat(Symbol::L, c.count(Symbol::R)) + c +
         BinaryString::repeat(Symbol::R, c.count(Symbol::L));
}

ChainCodeMachine cochain_machine(int n) { return ChainCodeMachine(n); }

ChainCodeBoundedMachine cochain_machine_clique(int n, int k) {
  if (k < 1) throw std::invalid_argument("clique bound must be >= 1");
  return ChainCodeBoundedMachine(n, ChainCodeBound::CochainClique, k);
}

ChainCodeBoundedMachine cochain_machine_edges(int n, int m) {
  if (m < 0) throw std::invalid_argument("edge count must be >= 0");
  return ChainCodeBoundedMachine(n, ChainCodeBound::CochainEdges, m);
}

IntervalGraph cochain_decode(const BinaryString& c) {
  return pi_decode(cochain_expand(c), SweepCheck::Relaxed);
}

int cochain_edge_count(const BinaryString& c) { return pi_edge_count(cochain_expand(c)); }

int cochain_clique_number(const BinaryString& c) { return pi_clique_number(cochain_expand(c)); }

}  // namespace igenum
