#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <variant>

#include "igenum/bdd.hpp"
#include "igenum/bipartite_permutation.hpp"
#include "igenum/chain_code.hpp"
#include "igenum/graph.hpp"
#include "igenum/proper_interval.hpp"
#include "igenum/threshold.hpp"

namespace igenum {

enum class GraphClass { ProperInterval, Cochain, BipartitePermutation, Chain, Threshold };

inline constexpr std::array<GraphClass, 5> kAllClasses = {
    GraphClass::ProperInterval, GraphClass::Cochain, GraphClass::BipartitePermutation,
    GraphClass::Chain, GraphClass::Threshold};

/// "proper-interval", "cochain", "bipartite-permutation", "chain", "threshold".
std::string_view class_name(GraphClass cls) noexcept;
std::optional<GraphClass> parse_class(std::string_view name) noexcept;

/// Proper interval and bipartite permutation graphs are enumerated connected
/// only.
bool requires_connected(GraphClass cls) noexcept;

/// Length of the natural-order encoding on n vertices.
std::size_t encoded_length(GraphClass cls, int n) noexcept;

struct EnumerationSpec {
  GraphClass cls = GraphClass::ProperInterval;
  int n = 1;
  std::optional<int> k;  // max clique; max biclique for chain
  std::optional<int> m;  // exact edge count
  std::optional<std::uint64_t> seed;
};

/// Throws std::invalid_argument: n < 1, k with m, k on bipartite
/// permutation, k below the class minimum, negative m.
void validate(const EnumerationSpec& spec);

/// Decodes a natural-order string of the class. Throws on invalid input.
Graph decode(GraphClass cls, const BinaryString& natural);

/// The machine selected by a spec.
class ClassMachine {
 public:
  using Variant = std::variant<PiMachine, ChainCodeMachine, ChainCodeBoundedMachine, BpMachine,
                               ThresholdMachine>;

  /// Validates the spec first.
  explicit ClassMachine(const EnumerationSpec& spec);

  const EnumerationSpec& spec() const noexcept { return spec_; }
  std::size_t length() const;
  LevelledBdd build() const;
  BinaryString to_natural(const BinaryString& labels) const;
  BinaryString to_labels(const BinaryString& natural) const;
  /// Runs the machine on a natural-order string.
  bool accepts(const BinaryString& natural) const;
  Graph decode(const BinaryString& natural) const { return igenum::decode(spec_.cls, natural); }

 private:
  EnumerationSpec spec_;
  Variant machine_;
};

}  // namespace igenum
