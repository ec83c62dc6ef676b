#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "igenum/bitstring.hpp"
#include "igenum/graph.hpp"

namespace igenum {

/// Two orderings of the same vertex set on parallel lines. pi1[v] and pi2[v]
/// are 1-based positions of vertex v on the top and bottom line.
struct PermutationDiagram {
  std::vector<int> pi1;
  std::vector<int> pi2;

  int vertex_count() const noexcept { return static_cast<int>(pi1.size()); }
  /// Pairs whose segments cross.
  Graph graph() const;
};

/// x1 y1 x2 y2 ... xn yn. xi = L iff the segment at top position i leans
/// right (pi1 < pi2); yi = R iff the segment at bottom position i leans
/// right. A single vertex is "LR". Throws std::invalid_argument on a
/// vertical segment when n > 1 or on malformed permutations.
BinaryString bp_string(const PermutationDiagram& d);

struct BpFlips {
  BinaryString vertical;    // (pi2, pi1): each pair xi yi swapped
  BinaryString horizontal;  // both lines reversed
  BinaryString rotational;  // reverse complement
};

/// Throws std::invalid_argument on odd length.
BpFlips bp_flips(const BinaryString& s);

/// Starts with L, ends with R, balanced, positive interior heights.
/// Throws std::invalid_argument on odd length.
bool bp_valid(const BinaryString& s);

/// At least each of its three flips in the height order.
/// Throws std::invalid_argument unless bp_valid(s).
bool bp_canonical(const BinaryString& s);

/// Machine over the alternate order of x1 y1 ... xn yn.
///
/// Heights and the rotational comparison work as for proper interval
/// strings. The last front and back characters are kept for the vertical
/// (xi against yi) and horizontal comparisons; fields that can no longer
/// influence acceptance are cleared so equivalent states merge.
class BpMachine {
 public:
  enum Cmp : std::int8_t { kEqual = 0, kGreater = 1, kLess = 2 };

  struct State {
    int front_height = 0;
    int back_height = 0;
    std::int8_t front1 = -1;  // latest front character
    std::int8_t front2 = -1;  // the one before it
    std::int8_t back1 = -1;   // latest back character
    bool rot_greater = false;
    bool hor_greater = false;
    bool ver_front_greater = false;
    std::int8_t ver_back = kEqual;  // decided by the innermost unequal back pair
    int doubled_edges = 0;

    friend bool operator==(const State&, const State&) = default;
    std::size_t hash() const noexcept;
  };

  explicit BpMachine(int n, std::optional<int> edges = std::nullopt);

  int vertex_count() const noexcept { return n_; }
  std::size_t length() const noexcept { return 2 * static_cast<std::size_t>(n_); }
  State initial() const noexcept { return {}; }
  std::optional<State> step(const State& state, std::size_t level, Symbol c) const;
  bool accept(const State& state) const noexcept;

  BinaryString to_natural(const BinaryString& labels) const { return inverse_alternate(labels); }
  BinaryString to_labels(const BinaryString& natural) const { return alternate(natural); }

 private:
  std::optional<State> front_step(const State& s, int a, Symbol c) const;
  std::optional<State> back_step(const State& s, int b, Symbol c) const;
  void normalize(State& s, int a, int b) const;

  int n_;
  std::optional<int> edges_;
};

BpMachine bp_machine(int n);
BpMachine bp_machine_edges(int n, int m);

/// Rebuilds a diagram: the k-th X position on top joins the k-th X position
/// on the bottom, likewise for Y. Throws std::invalid_argument when the class
/// counts of the two lines disagree or the length is odd.
PermutationDiagram bp_diagram(const BinaryString& s);

IntervalGraph bp_decode(const BinaryString& s);

/// h_s(2) + h_s(4) + ... + h_s(2n), no correction. On K2 ("LLRR") this is 2.
int even_height_sum(const BinaryString& s);

/// The same sum split into ceil(n/2) terms of s and floor(n/2) terms of its
/// reverse complement. For n >= 2 the middle term (h_s(n) for even n,
/// h_s(n+1) for odd n) is counted twice, so it overshoots.
int split_even_height_sum(const BinaryString& s);

/// Half of even_height_sum. Throws InternalInconsistencyError on an odd sum.
int bp_edge_count(const BinaryString& s);

}  // namespace igenum
