#pragma once

#include <cstddef>
#include <optional>

#include "igenum/bitstring.hpp"
#include "igenum/graph.hpp"

namespace igenum {

/// A 2n-character sweep of a connected proper interval model: balanced,
/// with L first and every interior prefix height positive. Throws std::invalid_argument on odd
/// length.
bool pi_valid(const BinaryString& s);

/// Balanced with non-negative prefix heights: the sweep of any proper
/// interval model, connected or not.
bool is_sweep_string(const BinaryString& s);

/// `s` is at least its reverse complement in the height order.
/// Throws std::invalid_argument unless pi_valid(s).
bool pi_canonical(const BinaryString& s);

/// Machine over the alternate order of 2n-character sweeps.
///
/// Odd levels read the front half left to right and track its height;
/// even levels read the back half right to left and track the height of its
/// reverse complement. `decided` records that an earlier front/back pair
/// already made the string strictly larger than its reverse complement.
class PiMachine {
 public:
  struct State {
    int front_height = 0;
    int back_height = 0;
    bool decided = false;
    int edges = 0;  // sum of (height - 1) over opening positions seen so far

    friend bool operator==(const State&, const State&) = default;
    std::size_t hash() const noexcept;
  };

  explicit PiMachine(int n, std::optional<int> max_clique = std::nullopt,
                     std::optional<int> edges = std::nullopt);

  int vertex_count() const noexcept { return n_; }
  std::size_t length() const noexcept { return 2 * static_cast<std::size_t>(n_); }
  State initial() const noexcept { return {}; }
  std::optional<State> step(const State& state, std::size_t level, Symbol c) const;
  bool accept(const State& state) const noexcept;

  BinaryString to_natural(const BinaryString& labels) const { return inverse_alternate(labels); }
  BinaryString to_labels(const BinaryString& natural) const { return alternate(natural); }

 private:
  int n_;
  std::optional<int> max_clique_;
  std::optional<int> edges_;
};

PiMachine pi_machine(int n);
PiMachine pi_machine_clique(int n, int k);
PiMachine pi_machine_edges(int n, int m);

enum class SweepCheck {
  Strict,   // pi_valid
  Relaxed,  // is_sweep_string (possibly disconnected models)
};

/// Vertex j (0-based) is the interval opened by the j-th L and closed by the
/// j-th R; i < j are adjacent iff the i-th R comes after the j-th L.
IntervalGraph pi_decode(const BinaryString& s, SweepCheck check = SweepCheck::Strict);

/// Sum of h_s(i) over positions holding L, without any correction. On K2
/// ("LLRR") this is 3 while the graph has one edge.
int height_sum_at_openings(const BinaryString& s);

/// Edge count of the decoded graph: sum of (h_s(i) - 1) over L positions.
int pi_edge_count(const BinaryString& s);

/// Maximum height, which equals the clique number of the decoded graph.
int pi_clique_number(const BinaryString& s);

}  // namespace igenum
