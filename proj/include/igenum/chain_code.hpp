#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>

#include "igenum/bitstring.hpp"

// n-character codes shared by chain and cochain graphs.
//
// A code c = L^t w lists vertices in sweep order: L for one side, R for the
// other. For chain graphs an R before an L is an edge; the cochain graph of
// the same code is the complement. The canonical code of an unlabeled graph
// has w empty or w = R...L with w >= reverse_complement(w).

namespace igenum {

/// Nonempty codes must not end with R.
bool chain_code_valid(const BinaryString& c);

/// Number of leading L characters.
std::size_t leading_l_count(const BinaryString& c);

/// chain_code_valid and the body after the leading L block is at least its
/// reverse complement in the height order.
bool chain_code_canonical(const BinaryString& c);

/// Linear-size machine for canonical codes.
///
/// Labels are reverse(alternate(w)) followed by the leading L block, so the
/// body is read from its center outwards and the last R marks its end. The
/// parity of |w| is unknown while reading, so the comparison of w against
/// its reverse complement is tracked for both parities at once.
class ChainCodeMachine {
 public:
  enum Status : std::int8_t { kEqual = 0, kGreater = 1, kLess = 2 };

  struct State {
    std::int8_t even_status = kEqual;
    std::int8_t odd_status = kEqual;
    std::int8_t prev = -1;  // previous label, -1 at the start
    bool candidate = true;  // accept if the body ended at the last R read

    friend bool operator==(const State&, const State&) = default;
    std::size_t hash() const noexcept;
  };

  explicit ChainCodeMachine(int n);

  std::size_t length() const noexcept { return static_cast<std::size_t>(n_); }
  State initial() const noexcept { return {}; }
  std::optional<State> step(const State& state, std::size_t level, Symbol c) const;
  bool accept(const State& state) const noexcept { return state.candidate; }

  BinaryString to_natural(const BinaryString& labels) const;
  BinaryString to_labels(const BinaryString& natural) const;

 private:
  int n_;
};

enum class ChainCodeBound {
  ChainEdges,     // R-before-L pairs == m
  ChainBiclique,  // max biclique (vertex count) <= k, edgeless passes
  CochainEdges,   // edges of the cochain graph == m
  CochainClique,  // clique number of the cochain graph <= k
};

/// Canonical codes under one counting constraint.
///
/// Labels are the leading L block followed by alternate(w); the first R
/// fixes |w|, after which w is read outside-in with front and back character
/// counts from which edge counts and clique/biclique walks are maintained.
class ChainCodeBoundedMachine {
 public:
  struct State {
    bool in_body = false;
    int isolated = 0;  // leading L count, fixed once the body starts
    bool greater = false;
    std::int8_t pending = -1;  // front character awaiting its back partner
    int front_l = 0, front_r = 0, back_l = 0, back_r = 0;
    int pairs = 0;
    int front_max = 0, back_max = 0;

    friend bool operator==(const State&, const State&) = default;
    std::size_t hash() const noexcept;
  };

  ChainCodeBoundedMachine(int n, ChainCodeBound bound, int limit);

  ChainCodeBound bound() const noexcept { return bound_; }
  int limit() const noexcept { return limit_; }

  std::size_t length() const noexcept { return static_cast<std::size_t>(n_); }
  State initial() const noexcept { return {}; }
  std::optional<State> step(const State& state, std::size_t level, Symbol c) const;
  bool accept(const State& state) const noexcept;

  BinaryString to_natural(const BinaryString& labels) const;
  BinaryString to_labels(const BinaryString& natural) const;

 private:
  bool add(State& s, Symbol c, bool front) const;
  bool within_bound(const State& s) const;
  long long cochain_edges(const State& s) const;

  int n_;
  ChainCodeBound bound_;
  int limit_;
};

}  // namespace igenum
