#pragma once

#include "igenum/bitstring.hpp"
#include "igenum/chain_code.hpp"
#include "igenum/graph.hpp"

namespace igenum {

/// n-bit sweep code of a chain graph: L marks an X vertex, R a Y vertex.
bool chain_valid(const BinaryString& c);

/// Leading isolated X block, then a body canonical under reverse complement.
bool chain_canonical(const BinaryString& c);

/// Vertex i is position i; an R at i and an L at j > i are adjacent.
/// Throws std::invalid_argument on a trailing R.
IntervalGraph chain_decode(const BinaryString& c);

/// Number of (R, L) position pairs with the R first.
int chain_edge_count(const BinaryString& c);

/// Largest #R(prefix) + #L(suffix) over splits with both parts contributing.
/// Throws UndefinedBicliqueError when the graph has no edge.
int chain_biclique_number(const BinaryString& c);

ChainCodeMachine chain_machine(int n);
ChainCodeBoundedMachine chain_machine_biclique(int n, int k);
ChainCodeBoundedMachine chain_machine_edges(int n, int m);

}  // namespace igenum
