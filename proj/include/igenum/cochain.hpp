#pragma once

#include "igenum/bitstring.hpp"
#include "igenum/chain_code.hpp"
#include "igenum/graph.hpp"

namespace igenum {

/// n-bit cochain code: R marks an X vertex, L a Y vertex. Nonempty codes must
/// not end with R.
bool cochain_valid(const BinaryString& c);

/// One code per unlabeled cochain graph; see chain_code_canonical.
bool cochain_canonical(const BinaryString& c);

/// L^{#R} c R^{#L}: the sweep of the proper interval model in which both
/// sides are cliques. Throws std::invalid_argument on a trailing R.
BinaryString cochain_expand(const BinaryString& c);

ChainCodeMachine cochain_machine(int n);
ChainCodeBoundedMachine cochain_machine_clique(int n, int k);
ChainCodeBoundedMachine cochain_machine_edges(int n, int m);

/// Relaxed proper interval decode of the expansion. Vertices 0..#R-1 are X.
IntervalGraph cochain_decode(const BinaryString& c);

int cochain_edge_count(const BinaryString& c);
int cochain_clique_number(const BinaryString& c);

}  // namespace igenum
