#pragma once

#include <cstddef>
#include <optional>

#include "igenum/bitstring.hpp"
#include "igenum/graph.hpp"

namespace igenum {

/// Start from one vertex; L adds an isolated vertex, R a universal one.
IntervalGraph thr_decode(const BinaryString& ops);

/// Construction sequences of length n - 1 in natural order. Every sequence
/// is a distinct graph; the bounds count universal additions (clique number
/// minus one) or edges (an R at 1-based position j adds j).
class ThresholdMachine {
 public:
  struct State {
    int universal = 0;  // only tracked under a clique bound
    int edges = 0;      // only tracked under an edge target

    friend bool operator==(const State&, const State&) = default;
    std::size_t hash() const noexcept;
  };

  explicit ThresholdMachine(int n, std::optional<int> max_clique = std::nullopt,
                            std::optional<int> edges = std::nullopt);

  std::size_t length() const noexcept { return static_cast<std::size_t>(n_ - 1); }
  State initial() const noexcept { return {}; }
  std::optional<State> step(const State& state, std::size_t level, Symbol c) const;
  bool accept(const State& state) const noexcept;

  BinaryString to_natural(const BinaryString& labels) const { return labels; }
  BinaryString to_labels(const BinaryString& natural) const { return natural; }

 private:
  int n_;
  std::optional<int> max_clique_;
  std::optional<int> edges_;
};

ThresholdMachine thr_machine(int n);
ThresholdMachine thr_machine_clique(int n, int k);
ThresholdMachine thr_machine_edges(int n, int m);

}  // namespace igenum
