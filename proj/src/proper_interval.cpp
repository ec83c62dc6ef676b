#include "igenum/proper_interval.hpp"

#include <stdexcept>
#include <vector>

#include "igenum/hash.hpp"

namespace igenum {

bool pi_valid(const BinaryString& s) {
  if (s.size() % 2 != 0) {
    throw std::invalid_argument("proper interval strings have even length");
  }
  if (s.empty() || s.front() != Symbol::L || s.back() != Symbol::R) return false;
  const auto h = height_profile(s);
  if (h.back() != 0) return false;
  for (std::size_t i = 1; i + 1 < h.size(); ++i) {
    if (h[i] <= 0) return false;
  }
  return true;
}

bool is_sweep_string(const BinaryString& s) {
  int h = 0;
  for (std::size_t i = 0; i < s.size(); ++i) {
    h += s[i] == Symbol::L ? 1 : -1;
    if (h < 0) return false;
  }
  return h == 0;
}

bool pi_canonical(const BinaryString& s) {
  if (!pi_valid(s)) throw std::invalid_argument("not a valid proper interval string");
  return height_greater_equal(s, reverse_complement(s));
}

std::size_t PiMachine::State::hash() const noexcept {
  return hash_fields({front_height, back_height, decided, edges});
}

PiMachine::PiMachine(int n, std::optional<int> max_clique, std::optional<int> edges)
    : n_(n), max_clique_(max_clique), edges_(edges) {
  if (n < 1) throw std::invalid_argument("proper interval machine needs n >= 1");
  if (max_clique && *max_clique < 1) throw std::invalid_argument("clique bound must be >= 1");
  if (edges && *edges < 0) throw std::invalid_argument("edge count must be >= 0");
}

std::optional<PiMachine::State> PiMachine::step(const State& s, std::size_t level,
                                                Symbol c) const {
  State next = s;
  if (level % 2 == 0) {
    // Front character; the first one must be L, which the height rule forces.
    if (c == Symbol::L) {
      next.edges += s.front_height;
      next.front_height += 1;
    } else {
      if (s.front_height - 1 <= 0) return std::nullopt;
      next.front_height -= 1;
    }
  } else {
    // Back character, folded in through its complement.
    if (c == Symbol::R) {
      next.back_height += 1;
    } else {
      if (s.back_height - 1 <= 0) return std::nullopt;
      next.edges += s.back_height - 1;
      next.back_height -= 1;
    }
    if (!s.decided) {
      // Earlier pairs matched, so both heights were equal before this pair.
      const Symbol front = s.front_height == s.back_height + 1 ? Symbol::L : Symbol::R;
      if (front != complement(c)) {
        if (front == Symbol::R) return std::nullopt;
        next.decided = true;
      }
    }
  }
  if (max_clique_ && (next.front_height > *max_clique_ || next.back_height > *max_clique_)) {
    return std::nullopt;
  }
  if (edges_) {
    if (next.edges > *edges_) return std::nullopt;
  } else {
    next.edges = 0;
  }
  return next;
}

bool PiMachine::accept(const State& s) const noexcept {
  return s.front_height == s.back_height && (!edges_ || s.edges == *edges_);
}

PiMachine pi_machine(int n) { return PiMachine(n); }
PiMachine pi_machine_clique(int n, int k) { return PiMachine(n, k); }
PiMachine pi_machine_edges(int n, int m) { return PiMachine(n, std::nullopt, m); }

namespace {

void require_sweep(const BinaryString& s) {
  if (!is_sweep_string(s)) {
    throw std::invalid_argument("string is not balanced with non-negative heights");
  }
}

}  // namespace

IntervalGraph pi_decode(const BinaryString& s, SweepCheck check) {
  if (check == SweepCheck::Strict) {
    if (!pi_valid(s)) throw std::invalid_argument("not a valid proper interval string");
  } else {
    require_sweep(s);
  }
  std::vector<std::size_t> open, close;
  for (std::size_t i = 0; i < s.size(); ++i) {
    (s[i] == Symbol::L ? open : close).push_back(i);
  }
  const int n = static_cast<int>(open.size());
  IntervalGraph g(n);
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n && open[j] < close[i]; ++j) g.add_edge(i, j);
  }
  return g;
}

int height_sum_at_openings(const BinaryString& s) {
  require_sweep(s);
  const auto h = height_profile(s);
  int sum = 0;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s[i] == Symbol::L) sum += h[i + 1];
  }
  return sum;
}

int pi_edge_count(const BinaryString& s) {
  return height_sum_at_openings(s) - static_cast<int>(s.size() / 2);
}

int pi_clique_number(const BinaryString& s) {
  require_sweep(s);
  return max_height(s);
}

}  // namespace igenum
