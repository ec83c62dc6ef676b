#include "igenum/chain_code.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "igenum/hash.hpp"

namespace igenum {

namespace {

BinaryString reversed(const BinaryString& s) {
  std::string r = s.str();
  std::reverse(r.begin(), r.end());
  return BinaryString(r);
}

long long choose2(long long x) { return x * (x - 1) / 2; }

}  // namespace

bool chain_code_valid(const BinaryString& c) { return c.empty() || c.back() == Symbol::L; }

std::size_t leading_l_count(const BinaryString& c) {
  std::size_t t = 0;
  while (t < c.size() && c[t] == Symbol::L) ++t;
  return t;
}

bool chain_code_canonical(const BinaryString& c) {
  if (!chain_code_valid(c)) return false;
  const BinaryString w = c.substr(leading_l_count(c));
  return w.empty() || height_greater_equal(w, reverse_complement(w));
}

// ---------------------------------------------------------------------------

std::size_t ChainCodeMachine::State::hash() const noexcept {
  return hash_fields({even_status, odd_status, prev, candidate});
}

ChainCodeMachine::ChainCodeMachine(int n) : n_(n) {
  if (n < 0) throw std::invalid_argument("vertex count must be >= 0");
}

std::optional<ChainCodeMachine::State> ChainCodeMachine::step(const State& s, std::size_t level,
                                                              Symbol c) const {
  // Position q of reverse(alternate(w)): the middle character for odd |w|,
  // then (back, front) pairs moving outwards. Outer pairs compare first in
  // w versus its reverse complement, so they override inner results.
  const std::size_t q = level + 1;
  State next = s;
  const auto pair_result = [&](std::int8_t old) -> std::int8_t {
    const Symbol back = static_cast<Symbol>(s.prev);
    if (c != back) return old;
    return c == Symbol::L ? kGreater : kLess;
  };
  if (q == 1) {
    next.odd_status = c == Symbol::L ? kGreater : kLess;
  } else if (q % 2 == 0) {
    next.even_status = pair_result(s.even_status);
  } else {
    next.odd_status = pair_result(s.odd_status);
  }
  if (c == Symbol::R) {
    // The body may end here: w1 = R, wl = L needs an L right before, and
    // |w| = q fixes which hypothesis applies.
    const std::int8_t status = q % 2 == 0 ? next.even_status : next.odd_status;
    next.candidate = q >= 2 && s.prev == static_cast<std::int8_t>(Symbol::L) && status != kLess;
  }
  next.prev = static_cast<std::int8_t>(c);
  return next;
}

BinaryString ChainCodeMachine::to_natural(const BinaryString& labels) const {
  std::size_t end = labels.size();
  while (end > 0 && labels[end - 1] == Symbol::L) --end;
  if (end == 0) return labels;
  const BinaryString w = inverse_alternate(reversed(labels.substr(0, end)));
  return BinaryString::repeat(Symbol::L, labels.size() - end) + w;
}

BinaryString ChainCodeMachine::to_labels(const BinaryString& natural) const {
  const std::size_t t = leading_l_count(natural);
  if (t == natural.size()) return natural;
  return reversed(alternate(natural.substr(t))) + BinaryString::repeat(Symbol::L, t);
}

// ---------------------------------------------------------------------------

std::size_t ChainCodeBoundedMachine::State::hash() const noexcept {
  return hash_fields({in_body, isolated, greater, pending, front_l, front_r, back_l, back_r, pairs,
                      front_max, back_max});
}

ChainCodeBoundedMachine::ChainCodeBoundedMachine(int n, ChainCodeBound bound, int limit)
    : n_(n), bound_(bound), limit_(limit) {
  if (n < 0) throw std::invalid_argument("vertex count must be >= 0");
  if (limit < 0) throw std::invalid_argument("bound must be >= 0");
}

long long ChainCodeBoundedMachine::cochain_edges(const State& s) const {
  // Cliques on the R side and on the isolated-plus-L side, all pairs between
  // isolated vertices and R vertices, and the L-before-R pairs of the body.
  const long long r = s.front_r + s.back_r;
  const long long l = s.isolated + s.front_l + s.back_l;
  return choose2(r) + choose2(l) + static_cast<long long>(s.isolated) * r + s.pairs;
}

bool ChainCodeBoundedMachine::within_bound(const State& s) const {
  const int l = s.front_l + s.back_l;
  const int r = s.front_r + s.back_r;
  switch (bound_) {
    case ChainCodeBound::ChainEdges:
      return s.pairs <= limit_;
    case ChainCodeBound::CochainEdges:
      return cochain_edges(s) <= limit_;
    case ChainCodeBound::ChainBiclique:
      return l + s.front_max <= limit_ && r + s.back_max <= limit_;
    case ChainCodeBound::CochainClique:
      return s.isolated + r + s.front_max <= limit_ && s.isolated + l + s.back_max <= limit_;
  }
  return false;
}

bool ChainCodeBoundedMachine::add(State& s, Symbol c, bool front) const {
  const bool is_l = c == Symbol::L;
  // Front characters precede, and back characters follow, everything read
  // so far on the other side; the same rule therefore serves both sides.
  if (bound_ == ChainCodeBound::ChainEdges) {
    s.pairs += is_l ? s.front_r : s.back_l;  // R before L
  } else if (bound_ == ChainCodeBound::CochainEdges) {
    s.pairs += is_l ? s.back_r : s.front_l;  // L before R
  }
  int& slot = front ? (is_l ? s.front_l : s.front_r) : (is_l ? s.back_l : s.back_r);
  ++slot;
  if (bound_ == ChainCodeBound::ChainBiclique) {
    s.front_max = std::max(s.front_max, s.front_r - s.front_l);
    s.back_max = std::max(s.back_max, s.back_l - s.back_r);
  } else if (bound_ == ChainCodeBound::CochainClique) {
    s.front_max = std::max(s.front_max, s.front_l - s.front_r);
    s.back_max = std::max(s.back_max, s.back_r - s.back_l);
  }
  return within_bound(s);
}

std::optional<ChainCodeBoundedMachine::State> ChainCodeBoundedMachine::step(
    const State& s, std::size_t level, Symbol c) const {
  State next = s;
  if (!s.in_body) {
    if (c == Symbol::L) {
      // Still in the leading block; only the cochain bounds see it.
      State probe;
      probe.isolated = static_cast<int>(level) + 1;
      if (!within_bound(probe)) return std::nullopt;
      return next;
    }
    next.in_body = true;
    next.isolated = static_cast<int>(level);
    if (n_ - next.isolated < 2) return std::nullopt;  // w = R...L needs two characters
    next.pending = static_cast<std::int8_t>(Symbol::R);
    if (!add(next, c, true)) return std::nullopt;
    return next;
  }

  const int body = n_ - s.isolated;
  const int j = static_cast<int>(level) - s.isolated;
  if (j % 2 == 1) {
    if (j == 1 && c != Symbol::L) return std::nullopt;  // w ends with L
    if (!s.greater) {
      const auto f = static_cast<Symbol>(s.pending);
      if (f == c) {
        if (c == Symbol::R) return std::nullopt;
        next.greater = true;
      }
    }
    next.pending = -1;
    if (!add(next, c, false)) return std::nullopt;
  } else {
    if (body % 2 == 1 && j == body - 1) {
      // Middle character; it pairs with its own complement.
      if (!s.greater) {
        if (c == Symbol::R) return std::nullopt;
        next.greater = true;
      }
    } else if (!s.greater) {
      next.pending = static_cast<std::int8_t>(c);
    }
    if (!add(next, c, true)) return std::nullopt;
  }
  return next;
}

bool ChainCodeBoundedMachine::accept(const State& s) const noexcept {
  State full = s;
  if (!s.in_body) full.isolated = n_;
  switch (bound_) {
    case ChainCodeBound::ChainEdges:
      return full.pairs == limit_;
    case ChainCodeBound::CochainEdges:
      return cochain_edges(full) == limit_;
    default:
      return within_bound(full);
  }
}

BinaryString ChainCodeBoundedMachine::to_natural(const BinaryString& labels) const {
  const std::size_t t = leading_l_count(labels);
  return BinaryString::repeat(Symbol::L, t) + inverse_alternate(labels.substr(t));
}

BinaryString ChainCodeBoundedMachine::to_labels(const BinaryString& natural) const {
  const std::size_t t = leading_l_count(natural);
  return BinaryString::repeat(Symbol::L, t) + alternate(natural.substr(t));
}

}  // namespace igenum
