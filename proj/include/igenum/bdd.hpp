#pragma once

#include <array>
#include <chrono>
#include <concepts>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <string>
#include <unordered_map>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "igenum/bitstring.hpp"

namespace igenum {

using BigInt = boost::multiprecision::cpp_int;
using NodeId = std::uint32_t;

/// Terminal ids. Internal nodes are numbered from 2 in level order.
inline constexpr NodeId kRejectNode = 0;
inline constexpr NodeId kAcceptNode = 1;

/// A deterministic automaton over {L, R}-strings of one fixed length.
///
/// `step` returns std::nullopt for REJECT. States are compared and hashed
/// only; the builder never looks inside them.
template <class M>
concept StateMachine = requires(const M& m, const typename M::State& s,
                                std::size_t level, Symbol c) {
  { m.length() } -> std::convertible_to<std::size_t>;
  { m.initial() } -> std::convertible_to<typename M::State>;
  { m.step(s, level, c) } -> std::same_as<std::optional<typename M::State>>;
  { m.accept(s) } -> std::convertible_to<bool>;
  { s.hash() } -> std::convertible_to<std::size_t>;
  requires std::equality_comparable<typename M::State>;
};

/// Runs a machine directly on a string, without building a diagram.
template <StateMachine M>
bool run(const M& machine, const BinaryString& labels) {
  if (labels.size() != machine.length()) return false;
  auto state = machine.initial();
  for (std::size_t level = 0; level < labels.size(); ++level) {
    auto next = machine.step(state, level, labels[level]);
    if (!next) return false;
    state = std::move(*next);
  }
  return machine.accept(state);
}

struct BuildStats {
  std::vector<std::size_t> nodes_per_level;
  std::size_t total_nodes = 0;  // internal nodes plus both terminals
  std::chrono::nanoseconds build_time{0};
};

/// Quasi-reduced levelled BDD: every arc out of level i enters level i+1
/// or a terminal, and each level keeps exactly one node per machine state.
class LevelledBdd {
 public:
  using Arcs = std::array<NodeId, 2>;

  LevelledBdd(std::size_t length, NodeId root, std::vector<Arcs> arcs,
              std::vector<NodeId> level_begin,
              std::chrono::nanoseconds build_time = {});

  std::size_t length() const noexcept { return length_; }
  NodeId root() const noexcept { return root_; }

  static constexpr bool is_terminal(NodeId id) noexcept { return id <= kAcceptNode; }

  /// Number of non-terminal nodes.
  std::size_t internal_node_count() const noexcept { return arcs_.size() - 2; }

  /// Node ids of 0-based `level` occupy [level_begin(level), level_end(level)).
  NodeId level_begin(std::size_t level) const { return level_begin_.at(level); }
  NodeId level_end(std::size_t level) const { return level_begin_.at(level + 1); }
  std::size_t level_size(std::size_t level) const {
    return level_end(level) - level_begin(level);
  }
  std::size_t level_of(NodeId id) const;

  NodeId child(NodeId id, Symbol c) const {
    return arcs_[id][static_cast<std::size_t>(c)];
  }

  std::chrono::nanoseconds build_time() const noexcept { return build_time_; }

  /// Structural equality; build time is ignored.
  friend bool operator==(const LevelledBdd& a, const LevelledBdd& b) {
    return a.length_ == b.length_ && a.root_ == b.root_ && a.arcs_ == b.arcs_ &&
           a.level_begin_ == b.level_begin_;
  }

 private:
  std::size_t length_;
  NodeId root_;
  std::vector<Arcs> arcs_;
  std::vector<NodeId> level_begin_;  // length_ + 1 entries
  std::chrono::nanoseconds build_time_;
};

/// Breadth-first construction with per-level state sharing. Arcs whose
/// successor is REJECT, and last-level arcs whose successor is not accepted,
/// point at the 0-terminal.
template <StateMachine M>
LevelledBdd build(const M& machine) {
  using State = typename M::State;
  struct Hasher {
    std::size_t operator()(const State& s) const noexcept { return s.hash(); }
  };
  const auto start = std::chrono::steady_clock::now();
  const std::size_t length = machine.length();
  std::vector<LevelledBdd::Arcs> arcs(2, LevelledBdd::Arcs{kRejectNode, kRejectNode});

  if (length == 0) {
    const NodeId root = machine.accept(machine.initial()) ? kAcceptNode : kRejectNode;
    return LevelledBdd(0, root, std::move(arcs), {2},
                       std::chrono::steady_clock::now() - start);
  }

  std::vector<NodeId> level_begin;
  level_begin.reserve(length + 1);
  std::vector<State> current{machine.initial()};
  std::vector<State> next;
  std::unordered_map<State, NodeId, Hasher> index;
  NodeId first = 2;

  for (std::size_t level = 0; level < length; ++level) {
    level_begin.push_back(first);
    const NodeId next_first = first + static_cast<NodeId>(current.size());
    const bool last = level + 1 == length;
    next.clear();
    index.clear();
    index.reserve(current.size() * 2);
    for (const State& state : current) {
      LevelledBdd::Arcs out{kRejectNode, kRejectNode};
      for (Symbol c : {Symbol::L, Symbol::R}) {
        auto succ = machine.step(state, level, c);
        NodeId target = kRejectNode;
        if (succ) {
          if (last) {
            target = machine.accept(*succ) ? kAcceptNode : kRejectNode;
          } else {
            auto [it, inserted] =
                index.try_emplace(*succ, next_first + static_cast<NodeId>(next.size()));
            if (inserted) next.push_back(std::move(*succ));
            target = it->second;
          }
        }
        out[static_cast<std::size_t>(c)] = target;
      }
      arcs.push_back(out);
    }
    first = next_first;
    std::swap(current, next);
  }
  level_begin.push_back(first);
  return LevelledBdd(length, 2, std::move(arcs), std::move(level_begin),
                     std::chrono::steady_clock::now() - start);
}

/// Number of accepted strings.
BigInt count(const LevelledBdd& d);

/// Accepted completions below every node, indexed by NodeId (terminals
/// included: 0 and 1).
std::vector<BigInt> completion_counts(const LevelledBdd& d);

/// Nodes from which the 1-terminal is reachable, indexed by NodeId.
std::vector<bool> live_nodes(const LevelledBdd& d);

/// Uniform sampler over the accepted strings. Holds a reference to the
/// diagram, which must outlive it.
class Sampler {
 public:
  explicit Sampler(const LevelledBdd& d);

  const BigInt& total() const noexcept { return counts_[diagram_->root()]; }

  /// Throws EmptyLanguageError when nothing is accepted.
  BinaryString draw(std::mt19937_64& rng) const;

  /// The accepted string of 0-based rank `index` in L < R lexicographic order.
  BinaryString unrank(BigInt index) const;

 private:
  const LevelledBdd* diagram_;
  std::vector<BigInt> counts_;
};

/// One uniform sample from a fresh generator seeded with `seed`.
BinaryString sample(const LevelledBdd& d, std::uint64_t seed);

/// Uniform integer in [0, bound) built from 64-bit draws by rejection.
BigInt uniform_below(const BigInt& bound, std::mt19937_64& rng);

/// Streams accepted strings in L < R lexicographic order.
class AcceptedStrings {
 public:
  explicit AcceptedStrings(const LevelledBdd& d);

  std::optional<BinaryString> next();

 private:
  struct Frame {
    NodeId node;
    std::uint8_t next_symbol;
  };
  const LevelledBdd* diagram_;
  std::vector<bool> live_;
  std::vector<Frame> stack_;
  std::vector<Symbol> path_;
  bool started_ = false;
};

/// Calls `visit` for each accepted string in enumeration order; stops early
/// when `visit` returns false.
void for_each_accepted(const LevelledBdd& d,
                       const std::function<bool(const BinaryString&)>& visit);

/// All accepted strings, in enumeration order.
std::vector<BinaryString> accepted_strings(const LevelledBdd& d);

/// DOT text: terminals t0/t1, internal nodes n<id> labelled with their
/// 1-based level, one rank group per level, solid L-arcs and dashed R-arcs.
std::string export_dot(const LevelledBdd& d);

/// Inverse of export_dot. Throws std::invalid_argument on malformed input.
LevelledBdd parse_dot(const std::string& text);

BuildStats stats(const LevelledBdd& d);

}  // namespace igenum
