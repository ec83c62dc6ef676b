#include "igenum/bipartite_permutation.hpp"

#include <stdexcept>
#include <string>

#include "igenum/errors.hpp"
#include "igenum/hash.hpp"

namespace igenum {

namespace {

void require_even(const BinaryString& s) {
  if (s.size() % 2 != 0) {
    throw std::invalid_argument("bipartite permutation strings have even length");
  }
}

// (pi1(u) - pi1(v)) * (pi2(u) - pi2(v)) < 0
Graph crossing_graph(const std::vector<int>& pi1, const std::vector<int>& pi2) {
  const int n = static_cast<int>(pi1.size());
  Graph g(n);
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      if ((pi1[u] - pi1[v]) * (pi2[u] - pi2[v]) < 0) g.add_edge(u, v);
    }
  }
  return g;
}

std::vector<int> inverse_of(const std::vector<int>& pi) {
  const int n = static_cast<int>(pi.size());
  std::vector<int> inv(n, -1);
  for (int v = 0; v < n; ++v) {
    if (pi[v] < 1 || pi[v] > n || inv[pi[v] - 1] != -1) {
      throw std::invalid_argument("diagram lines are not permutations of 1..n");
    }
    inv[pi[v] - 1] = v;
  }
  return inv;
}

}  // namespace

Graph PermutationDiagram::graph() const {
  if (pi1.size() != pi2.size()) throw std::invalid_argument("diagram lines differ in length");
  return crossing_graph(pi1, pi2);
}

BinaryString bp_string(const PermutationDiagram& d) {
  const int n = d.vertex_count();
  if (static_cast<int>(d.pi2.size()) != n) {
    throw std::invalid_argument("diagram lines differ in length");
  }
  const auto top = inverse_of(d.pi1);
  const auto bottom = inverse_of(d.pi2);
  if (n == 1) return BinaryString("LR");
  std::string out;
  out.reserve(2 * n);
  for (int i = 0; i < n; ++i) {
    const int u = top[i];
    const int v = bottom[i];
    if (d.pi1[u] == d.pi2[u] || d.pi1[v] == d.pi2[v]) {
      throw std::invalid_argument("vertical segment in a diagram with more than one vertex");
    }
    out += d.pi1[u] < d.pi2[u] ? 'L' : 'R';
    out += d.pi2[v] > d.pi1[v] ? 'R' : 'L';
  }
  return BinaryString(out);
}

BpFlips bp_flips(const BinaryString& s) {
  require_even(s);
  std::string v = s.str();
  for (std::size_t i = 0; i + 1 < v.size(); i += 2) std::swap(v[i], v[i + 1]);
  BpFlips f;
  f.vertical = BinaryString(v);
  f.horizontal = reverse_complement(f.vertical);
  f.rotational = reverse_complement(s);
  return f;
}

bool bp_valid(const BinaryString& s) {
  require_even(s);
  if (s.empty() || s.front() != Symbol::L || s.back() != Symbol::R) return false;
  const auto h = height_profile(s);
  if (h.back() != 0) return false;
  for (std::size_t i = 1; i + 1 < h.size(); ++i) {
    if (h[i] <= 0) return false;
  }
  return true;
}

bool bp_canonical(const BinaryString& s) {
  if (!bp_valid(s)) throw std::invalid_argument("not a valid bipartite permutation string");
  const BpFlips f = bp_flips(s);
  return height_greater_equal(s, f.vertical) && height_greater_equal(s, f.horizontal) &&
         height_greater_equal(s, f.rotational);
}

// ---------------------------------------------------------------------------

std::size_t BpMachine::State::hash() const noexcept {
  return hash_fields({front_height, back_height, front1, front2, back1, rot_greater, hor_greater,
                      ver_front_greater, ver_back, doubled_edges});
}

BpMachine::BpMachine(int n, std::optional<int> edges) : n_(n), edges_(edges) {
  if (n < 1) throw std::invalid_argument("bipartite permutation machine needs n >= 1");
  if (edges && *edges < 0) throw std::invalid_argument("edge count must be >= 0");
}

std::optional<BpMachine::State> BpMachine::step(const State& s, std::size_t level,
                                                Symbol c) const {
  const int a = static_cast<int>(level / 2) + 1;  // 1-based round
  return level % 2 == 0 ? front_step(s, a, c) : back_step(s, a, c);
}

// Front character c = s_a.
std::optional<BpMachine::State> BpMachine::front_step(const State& s, int a, Symbol c) const {
  State next = s;
  if (c == Symbol::L) {
    next.front_height += 1;
  } else {
    if (s.front_height - 1 <= 0) return std::nullopt;
    next.front_height -= 1;
  }
  // xj against yj for pairs inside the front half; the first unequal pair
  // decides.
  if (a % 2 == 0 && !s.ver_front_greater) {
    const auto x = static_cast<Symbol>(s.front1);
    if (x != c) {
      if (x == Symbol::R) return std::nullopt;
      next.ver_front_greater = true;
    }
  }
  // For odd n, position n is compared against its own complement.
  if (n_ % 2 == 1 && a == n_ && !s.hor_greater) {
    if (c == Symbol::R) return std::nullopt;
    next.hor_greater = true;
  }
  next.front2 = s.front1;
  next.front1 = static_cast<std::int8_t>(c);
  if (edges_ && a % 2 == 0) next.doubled_edges += next.front_height;
  normalize(next, a, a - 1);
  if (edges_ && next.doubled_edges > 2 * *edges_) return std::nullopt;
  return next;
}

// Back character c = s_q with q = 2n + 1 - b.
std::optional<BpMachine::State> BpMachine::back_step(const State& s, int b, Symbol c) const {
  State next = s;
  if (c == Symbol::R) {
    next.back_height += 1;
  } else {
    if (s.back_height - 1 <= 0) return std::nullopt;
    next.back_height -= 1;
  }
  const auto cmp = [](Symbol mine, Symbol theirs, bool& greater) {
    if (mine == theirs) return true;
    if (mine == Symbol::R) return false;
    greater = true;
    return true;
  };
  // Rotational flip: s_b against the complement of s_q.
  if (!s.rot_greater && !cmp(static_cast<Symbol>(s.front1), complement(c), next.rot_greater)) {
    return std::nullopt;
  }
  // Horizontal flip: index i meets the complement of s_{2n-i} (odd i) or
  // s_{2n+2-i} (even i); indices b-1 and b become comparable together.
  if (b % 2 == 0 && !s.hor_greater) {
    if (!cmp(static_cast<Symbol>(s.front2), complement(c), next.hor_greater)) return std::nullopt;
    if (!next.hor_greater &&
        !cmp(static_cast<Symbol>(s.front1), complement(static_cast<Symbol>(s.back1)),
             next.hor_greater)) {
      return std::nullopt;
    }
  }
  // Vertical flip, pairs read from the back: inner pairs override outer ones.
  if (!s.ver_front_greater) {
    const int q = 2 * n_ + 1 - b;
    const auto judge = [&](Symbol x, Symbol y) {
      if (x != y) next.ver_back = x == Symbol::L ? kGreater : kLess;
    };
    if (q % 2 == 1 && q >= n_ + 1) judge(c, static_cast<Symbol>(s.back1));
    if (n_ % 2 == 1 && b == n_) judge(static_cast<Symbol>(s.front1), c);
  }
  next.back1 = static_cast<std::int8_t>(c);
  if (edges_ && b % 2 == 0 && b <= n_ - 1) next.doubled_edges += next.back_height;
  normalize(next, b, b);
  if (edges_ && next.doubled_edges > 2 * *edges_) return std::nullopt;
  return next;
}

void BpMachine::normalize(State& s, int a, int b) const {
  const bool hor_open = !s.hor_greater;
  const bool ver_open = !s.ver_front_greater;
  const bool back_next = a == b + 1;

  bool keep_front1 = a + 1 <= n_ && (a + 1) % 2 == 0 && (ver_open || hor_open);
  if (back_next) {
    keep_front1 = keep_front1 || !s.rot_greater || (a % 2 == 0 && hor_open) ||
                  (n_ % 2 == 1 && a == n_ && ver_open);
  }
  if (!keep_front1) s.front1 = -1;
  if (!(back_next && a % 2 == 0 && hor_open)) s.front2 = -1;

  const bool keep_back1 =
      b + 1 <= n_ && (((b + 1) % 2 == 0 && hor_open) || (b % 2 == 1 && b <= n_ - 1 && ver_open));
  if (!keep_back1) s.back1 = -1;

  if (!ver_open) s.ver_back = kEqual;
  if (!edges_) s.doubled_edges = 0;
}

bool BpMachine::accept(const State& s) const noexcept {
  return s.front_height == s.back_height && (s.ver_front_greater || s.ver_back != kLess) &&
         (!edges_ || s.doubled_edges == 2 * *edges_);
}

BpMachine bp_machine(int n) { return BpMachine(n); }
BpMachine bp_machine_edges(int n, int m) { return BpMachine(n, m); }

// ---------------------------------------------------------------------------

PermutationDiagram bp_diagram(const BinaryString& s) {
  require_even(s);
  const int n = static_cast<int>(s.size() / 2);
  std::vector<int> top_x, top_y, bottom_x, bottom_y;
  for (int i = 0; i < n; ++i) {
    (s[2 * i] == Symbol::L ? top_x : top_y).push_back(i + 1);
    (s[2 * i + 1] == Symbol::R ? bottom_x : bottom_y).push_back(i + 1);
  }
  if (top_x.size() != bottom_x.size()) {
    throw std::invalid_argument("top and bottom lines disagree on the class sizes");
  }
  PermutationDiagram d;
  d.pi1.assign(n, 0);
  d.pi2.assign(n, 0);
  // Vertices are numbered by their top position.
  for (std::size_t k = 0; k < top_x.size(); ++k) {
    d.pi1[top_x[k] - 1] = top_x[k];
    d.pi2[top_x[k] - 1] = bottom_x[k];
  }
  for (std::size_t k = 0; k < top_y.size(); ++k) {
    d.pi1[top_y[k] - 1] = top_y[k];
    d.pi2[top_y[k] - 1] = bottom_y[k];
  }
  return d;
}

IntervalGraph bp_decode(const BinaryString& s) { return bp_diagram(s).graph(); }

int even_height_sum(const BinaryString& s) {
  require_even(s);
  const auto h = height_profile(s);
  int sum = 0;
  for (std::size_t i = 2; i < h.size(); i += 2) sum += h[i];
  return sum;
}

int split_even_height_sum(const BinaryString& s) {
  require_even(s);
  const int n = static_cast<int>(s.size() / 2);
  const auto h = height_profile(s);
  const auto hr = height_profile(reverse_complement(s));
  int sum = 0;
  for (int i = 1; i <= (n + 1) / 2; ++i) sum += h[2 * i];
  for (int i = 1; i <= n / 2; ++i) sum += hr[2 * i];
  return sum;
}

int bp_edge_count(const BinaryString& s) {
  const int sum = even_height_sum(s);
  if (sum % 2 != 0) {
    throw InternalInconsistencyError("odd even-height sum: not a bipartite permutation string");
  }
  return sum / 2;
}

}  // namespace igenum
