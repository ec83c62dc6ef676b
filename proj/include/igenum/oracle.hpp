#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <set>
#include <vector>

#include "igenum/bdd.hpp"
#include "igenum/enumeration.hpp"
#include "igenum/graph.hpp"

// Brute-force ground truth for small graphs. Nothing here calls a class
// decoder or machine except cross_check and string_language, which exist to
// compare against them.

namespace igenum {

inline constexpr int kOracleMaxVertices = 8;
inline constexpr std::size_t kStringLanguageMaxLength = 12;

/// Minimal upper-triangle adjacency code of a graph.
///
/// Bits are ordered column by column, (0,1), (0,2), (1,2), (0,3), ..., most
/// significant first, so numeric order is lexicographic order.
struct CanonicalGraph {
  int n = 0;
  std::uint64_t canon = 0;

  friend auto operator<=>(const CanonicalGraph&, const CanonicalGraph&) = default;
};

/// Minimum over vertex orders that list vertices by non-decreasing degree.
/// Throws ResourceLimitError above 11 vertices.
CanonicalGraph canonical_form(const Graph& g);

/// Minimum over all n! orders. Not equal in value to canonical_form, but
/// induces the same isomorphism classes; kept as a self-check.
CanonicalGraph canonical_form_exhaustive(const Graph& g);

/// The graph whose adjacency code is c.canon in the identity order.
Graph from_canonical(const CanonicalGraph& c);

/// Every unlabeled graph on n vertices, sorted. Built by adding a vertex
/// with every neighbourhood to each graph on n - 1 vertices.
/// Throws ResourceLimitError unless 1 <= n <= 8.
const std::vector<CanonicalGraph>& enumerate_unlabeled(int n);

/// Membership by exhaustive witness search. Throws ResourceLimitError above
/// eight vertices.
bool recognize(const Graph& g, GraphClass cls);

int clique_number(const Graph& g);
/// Largest |A| + |B| over disjoint nonempty A, B with all A-B pairs adjacent;
/// std::nullopt without edges.
std::optional<int> biclique_number(const Graph& g);

/// Oracle graphs of a spec: members of the class under its connectivity
/// convention that pass the optional k or m filter.
std::vector<CanonicalGraph> oracle_graphs(const EnumerationSpec& spec);

/// Natural-order strings that are valid and canonical for the class and
/// meet the optional bound, found by filtering without any machine. Throws ResourceLimitError
/// when the encoding is longer than 12.
std::set<BinaryString> string_language(const EnumerationSpec& spec);

struct OracleReport {
  EnumerationSpec spec;
  BigInt oracle_count = 0;
  BigInt bdd_count = 0;
  std::vector<CanonicalGraph> mismatches;  // present on one side only
  std::vector<CanonicalGraph> duplicates;  // decoded from several accepted strings
  bool string_checked = false;
  bool string_equal = true;

  bool ok() const noexcept {
    return mismatches.empty() && duplicates.empty() && oracle_count == bdd_count && string_equal;
  }
};

/// Compares the decoded diagram of one spec with the oracle, plus
/// string_language when the encoding is short enough.
OracleReport cross_check(const EnumerationSpec& spec);

/// Largest feasible k and m for a class on n vertices, for sweeping every
/// constrained variant.
int max_edges(int n);

// Formula findings -----------------------------------------------------------

struct FormulaFindings {
  int k2_edges = 0;
  int k2_interval_height_sum = 0;     // sum of h over L positions of "LLRR"
  int k2_permutation_height_sum = 0;  // sum of h(2i) of "LLRR"
  std::size_t interval_strings = 0;
  std::size_t interval_corrected_mismatches = 0;
  std::size_t interval_literal_mismatches = 0;
  std::size_t permutation_strings = 0;
  std::size_t permutation_corrected_mismatches = 0;
  std::size_t permutation_literal_mismatches = 0;
  std::size_t permutation_split_disagreements = 0;  // split sum != full sum
};

/// Checks the edge formulas on every valid string with 1..max_n vertices.
FormulaFindings formula_findings(int max_n);

struct ReadingFinding {
  GraphClass cls;
  int n = 0;
  std::size_t literal_strings = 0;   // strings accepted by the plain rule
  std::size_t literal_distinct = 0;  // distinct graphs among them
  std::size_t oracle_count = 0;
};

/// Literal readings of the n-bit codes. Cochain: every string without a
/// trailing R. Chain: strings without a trailing R, one per plain reversal
/// pair (a string whose reversal ends with R is kept). Both are compared with
/// the oracle count.
std::vector<ReadingFinding> reading_findings(int max_n);

}  // namespace igenum
