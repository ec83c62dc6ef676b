#include "igenum/oracle.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <limits>
#include <map>
#include <mutex>
#include <numeric>
#include <string>
#include <utility>

#include "igenum/bipartite_permutation.hpp"
#include "igenum/chain.hpp"
#include "igenum/cochain.hpp"
#include "igenum/errors.hpp"
#include "igenum/proper_interval.hpp"
#include "igenum/threshold.hpp"

namespace igenum {

namespace {

constexpr int kCanonicalMaxVertices = 11;  // 55 pair bits

void require_oracle_size(int n) {
  if (n < 1 || n > kOracleMaxVertices) {
    throw ResourceLimitError("oracle supports 1.." + std::to_string(kOracleMaxVertices) +
                             " vertices, got " + std::to_string(n));
  }
}

int pair_bits(int n) { return n * (n - 1) / 2; }

std::vector<std::uint32_t> neighbour_masks(const Graph& g) {
  const int n = g.vertex_count();
  std::vector<std::uint32_t> nbr(n, 0);
  for (int u = 0; u < n; ++u) {
    for (int v = 0; v < n; ++v) {
      if (u != v && g.adjacent(u, v)) nbr[u] |= 1u << v;
    }
  }
  return nbr;
}

// Branch and bound over vertex orders. Placing the vertex at position p fixes
// the bits (0,p) .. (p-1,p), so a prefix larger than the best one is cut.
class Canonizer {
 public:
  explicit Canonizer(const Graph& g) : g_(g), n_(g.vertex_count()), used_(n_, false) {
    total_ = pair_bits(n_);
    std::vector<int> degrees(n_);
    for (int v = 0; v < n_; ++v) degrees[v] = g.degree(v);
    slot_degree_ = degrees;
    std::sort(slot_degree_.begin(), slot_degree_.end());
    degree_ = std::move(degrees);
  }

  std::uint64_t run() {
    order_.clear();
    dfs(0, 0);
    return best_;
  }

 private:
  void dfs(int pos, std::uint64_t prefix) {
    if (pos == n_) {
      if (!found_ || prefix < best_) best_ = prefix;
      found_ = true;
      return;
    }
    const int bits = pair_bits(pos + 1);
    for (int v = 0; v < n_; ++v) {
      if (used_[v] || degree_[v] != slot_degree_[pos]) continue;
      std::uint64_t p = prefix;
      for (int i = 0; i < pos; ++i) p = (p << 1) | (g_.adjacent(order_[i], v) ? 1u : 0u);
      if (found_ && p > (best_ >> (total_ - bits))) continue;
      used_[v] = true;
      order_.push_back(v);
      dfs(pos + 1, p);
      order_.pop_back();
      used_[v] = false;
    }
  }

  const Graph& g_;
  int n_;
  int total_ = 0;
  std::vector<bool> used_;
  std::vector<int> degree_;
  std::vector<int> slot_degree_;
  std::vector<int> order_;
  std::uint64_t best_ = 0;
  bool found_ = false;
};

std::uint64_t code_in_order(const Graph& g, const std::vector<int>& order) {
  std::uint64_t code = 0;
  for (std::size_t j = 1; j < order.size(); ++j) {
    for (std::size_t i = 0; i < j; ++i) code = (code << 1) | (g.adjacent(order[i], order[j]) ? 1 : 0);
  }
  return code;
}

void require_canonical_size(int n) {
  if (n > kCanonicalMaxVertices) {
    throw ResourceLimitError("canonical forms support at most " +
                             std::to_string(kCanonicalMaxVertices) + " vertices");
  }
}

// Interval overlap graph of a sweep: the i-th L opens and the i-th R closes
// interval i.
Graph sweep_graph(const std::string& sweep) {
  std::vector<int> open, close;
  for (int i = 0; i < static_cast<int>(sweep.size()); ++i) {
    (sweep[i] == 'L' ? open : close).push_back(i);
  }
  const int n = static_cast<int>(open.size());
  Graph g(n);
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (open[j] < close[i] && open[i] < close[j]) g.add_edge(i, j);
    }
  }
  return g;
}

void dyck_words(int n, std::string& cur, int open, int close,
                const std::function<void(const std::string&)>& visit) {
  if (open == n && close == n) {
    visit(cur);
    return;
  }
  if (open < n) {
    cur.push_back('L');
    dyck_words(n, cur, open + 1, close, visit);
    cur.pop_back();
  }
  if (close < open) {
    cur.push_back('R');
    dyck_words(n, cur, open, close + 1, visit);
    cur.pop_back();
  }
}

std::set<CanonicalGraph> interval_witnesses(int n) {
  std::set<CanonicalGraph> out;
  std::string cur;
  dyck_words(n, cur, 0, 0, [&](const std::string& w) { out.insert(canonical_form(sweep_graph(w))); });
  return out;
}

bool is_bipartite(const Graph& g) {
  const int n = g.vertex_count();
  std::vector<int> colour(n, -1);
  for (int s = 0; s < n; ++s) {
    if (colour[s] != -1) continue;
    colour[s] = 0;
    std::vector<int> stack{s};
    while (!stack.empty()) {
      const int u = stack.back();
      stack.pop_back();
      for (int v = 0; v < n; ++v) {
        if (u == v || !g.adjacent(u, v)) continue;
        if (colour[v] == -1) {
          colour[v] = 1 - colour[u];
          stack.push_back(v);
        } else if (colour[v] == colour[u]) {
          return false;
        }
      }
    }
  }
  return true;
}

std::set<CanonicalGraph> permutation_witnesses(int n) {
  std::set<CanonicalGraph> out;
  std::vector<int> pi2(n);
  std::iota(pi2.begin(), pi2.end(), 0);
  do {
    Graph g(n);
    for (int i = 0; i < n; ++i) {
      for (int j = i + 1; j < n; ++j) {
        if (pi2[i] > pi2[j]) g.add_edge(i, j);
      }
    }
    if (is_bipartite(g)) out.insert(canonical_form(g));
  } while (std::next_permutation(pi2.begin(), pi2.end()));
  return out;
}

enum class Side { Clique, Independent };

// Some split V = X + Y with the given side types whose X-to-Y
// neighbourhoods are nested.
bool nested_split(const Graph& g, Side x_side, Side y_side) {
  const int n = g.vertex_count();
  const auto nbr = neighbour_masks(g);
  const std::uint32_t all = n == 32 ? ~0u : (1u << n) - 1;
  const auto fits = [&](std::uint32_t set, Side side) {
    for (int u = 0; u < n; ++u) {
      if (!(set >> u & 1)) continue;
      const std::uint32_t inside = nbr[u] & set & ~(1u << u);
      const std::uint32_t want = side == Side::Clique ? (set & ~(1u << u)) : 0u;
      if (inside != want) return false;
    }
    return true;
  };
  for (std::uint32_t x = 0; x <= all; ++x) {
    const std::uint32_t y = all & ~x;
    if (!fits(x, x_side) || !fits(y, y_side)) continue;
    bool nested = true;
    for (int u = 0; u < n && nested; ++u) {
      if (!(x >> u & 1)) continue;
      for (int v = u + 1; v < n && nested; ++v) {
        if (!(x >> v & 1)) continue;
        const std::uint32_t a = nbr[u] & y, b = nbr[v] & y;
        nested = (a & ~b) == 0 || (b & ~a) == 0;
      }
    }
    if (nested) return true;
  }
  return false;
}

struct WitnessCache {
  std::mutex lock;
  std::map<std::pair<int, int>, std::set<CanonicalGraph>> sets;
  std::map<int, std::vector<CanonicalGraph>> unlabeled;
};

WitnessCache& cache() {
  static WitnessCache c;
  return c;
}

const std::set<CanonicalGraph>& witness_set(GraphClass cls, int n) {
  auto& c = cache();
  const auto key = std::make_pair(static_cast<int>(cls), n);
  {
    std::lock_guard<std::mutex> guard(c.lock);
    if (auto it = c.sets.find(key); it != c.sets.end()) return it->second;
  }
  auto built = cls == GraphClass::ProperInterval ? interval_witnesses(n) : permutation_witnesses(n);
  std::lock_guard<std::mutex> guard(c.lock);
  return c.sets.try_emplace(key, std::move(built)).first->second;
}

}  // namespace

// ---------------------------------------------------------------------------

CanonicalGraph canonical_form(const Graph& g) {
  require_canonical_size(g.vertex_count());
  return {g.vertex_count(), Canonizer(g).run()};
}

CanonicalGraph canonical_form_exhaustive(const Graph& g) {
  require_canonical_size(g.vertex_count());
  std::vector<int> order(g.vertex_count());
  std::iota(order.begin(), order.end(), 0);
  std::uint64_t best = std::numeric_limits<std::uint64_t>::max();
  do {
    best = std::min(best, code_in_order(g, order));
  } while (std::next_permutation(order.begin(), order.end()));
  return {g.vertex_count(), g.vertex_count() < 2 ? 0 : best};
}

Graph from_canonical(const CanonicalGraph& c) {
  Graph g(c.n);
  int bit = pair_bits(c.n);
  for (int j = 1; j < c.n; ++j) {
    for (int i = 0; i < j; ++i) {
      --bit;
      if (c.canon >> bit & 1) g.add_edge(i, j);
    }
  }
  return g;
}

const std::vector<CanonicalGraph>& enumerate_unlabeled(int n) {
  require_oracle_size(n);
  auto& c = cache();
  {
    std::lock_guard<std::mutex> guard(c.lock);
    if (auto it = c.unlabeled.find(n); it != c.unlabeled.end()) return it->second;
  }
  std::set<CanonicalGraph> found;
  if (n == 1) {
    found.insert(canonical_form(Graph(1)));
  } else {
    for (const CanonicalGraph& smaller : enumerate_unlabeled(n - 1)) {
      const Graph base = from_canonical(smaller);
      for (std::uint32_t mask = 0; mask < (1u << (n - 1)); ++mask) {
        Graph g(n);
        for (const auto& [u, v] : base.edges()) g.add_edge(u, v);
        for (int u = 0; u < n - 1; ++u) {
          if (mask >> u & 1) g.add_edge(u, n - 1);
        }
        found.insert(canonical_form(g));
      }
    }
  }
  std::lock_guard<std::mutex> guard(c.lock);
  return c.unlabeled.try_emplace(n, found.begin(), found.end()).first->second;
}

bool recognize(const Graph& g, GraphClass cls) {
  const int n = g.vertex_count();
  if (n > kOracleMaxVertices) {
    throw ResourceLimitError("recognize supports at most " + std::to_string(kOracleMaxVertices) +
                             " vertices");
  }
  if (n == 0) return true;
  switch (cls) {
    case GraphClass::ProperInterval:
    case GraphClass::BipartitePermutation:
      return witness_set(cls, n).count(canonical_form(g)) > 0;
    case GraphClass::Cochain: return nested_split(g, Side::Clique, Side::Clique);
    case GraphClass::Chain: return nested_split(g, Side::Independent, Side::Independent);
    case GraphClass::Threshold: return nested_split(g, Side::Clique, Side::Independent);
  }
  return false;
}

int clique_number(const Graph& g) {
  const auto nbr = neighbour_masks(g);
  const int n = g.vertex_count();
  int best = 0;
  for (std::uint32_t set = 1; set < (1u << n); ++set) {
    const int size = std::popcount(set);
    if (size <= best) continue;
    bool clique = true;
    for (int u = 0; u < n && clique; ++u) {
      if (set >> u & 1) clique = (nbr[u] | (1u << u) | ~set) == ~0u;
    }
    if (clique) best = size;
  }
  return best;
}

std::optional<int> biclique_number(const Graph& g) {
  const auto nbr = neighbour_masks(g);
  const int n = g.vertex_count();
  int best = 0;
  for (std::uint32_t a = 1; a < (1u << n); ++a) {
    std::uint32_t common = (1u << n) - 1;
    for (int u = 0; u < n; ++u) {
      if (a >> u & 1) common &= nbr[u];
    }
    if (common != 0) best = std::max(best, std::popcount(a) + std::popcount(common));
  }
  if (best == 0) return std::nullopt;
  return best;
}

int max_edges(int n) { return n * (n - 1) / 2; }

std::vector<CanonicalGraph> oracle_graphs(const EnumerationSpec& spec) {
  validate(spec);
  std::vector<CanonicalGraph> out;
  for (const CanonicalGraph& c : enumerate_unlabeled(spec.n)) {
    const Graph g = from_canonical(c);
    if (!recognize(g, spec.cls)) continue;
    if (requires_connected(spec.cls) && !g.is_connected()) continue;
    if (spec.m && static_cast<int>(g.edge_count()) != *spec.m) continue;
    if (spec.k) {
      if (spec.cls == GraphClass::Chain) {
        const auto b = biclique_number(g);
        if (b && *b > *spec.k) continue;
      } else if (clique_number(g) > *spec.k) {
        continue;
      }
    }
    out.push_back(c);
  }
  return out;
}

std::set<BinaryString> string_language(const EnumerationSpec& spec) {
  validate(spec);
  const std::size_t length = encoded_length(spec.cls, spec.n);
  if (length > kStringLanguageMaxLength) {
    throw ResourceLimitError("string language limited to length " +
                             std::to_string(kStringLanguageMaxLength));
  }
  const auto k = spec.k;
  const auto m = spec.m;
  std::set<BinaryString> out;
  std::string text(length, 'L');
  for (std::uint32_t bits = 0; bits < (1u << length); ++bits) {
    for (std::size_t i = 0; i < length; ++i) text[i] = (bits >> (length - 1 - i) & 1) ? 'R' : 'L';
    const BinaryString s(text);
    bool keep = false;
    switch (spec.cls) {
      case GraphClass::ProperInterval:
        keep = pi_valid(s) && pi_canonical(s) && (!k || pi_clique_number(s) <= *k) &&
               (!m || pi_edge_count(s) == *m);
        break;
      case GraphClass::BipartitePermutation:
        keep = bp_valid(s) && bp_canonical(s) && (!m || bp_edge_count(s) == *m);
        break;
      case GraphClass::Cochain:
        keep = cochain_canonical(s) && (!k || cochain_clique_number(s) <= *k) &&
               (!m || cochain_edge_count(s) == *m);
        break;
      case GraphClass::Chain:
        keep = chain_canonical(s) && (!m || chain_edge_count(s) == *m);
        if (keep && k && chain_edge_count(s) > 0) keep = chain_biclique_number(s) <= *k;
        break;
      case GraphClass::Threshold: {
        int universal = 0, edges = 0;
        for (std::size_t j = 0; j < s.size(); ++j) {
          if (s[j] == Symbol::R) {
            ++universal;
            edges += static_cast<int>(j) + 1;
          }
        }
        keep = (!k || universal + 1 <= *k) && (!m || edges == *m);
        break;
      }
    }
    if (keep) out.insert(s);
  }
  return out;
}

OracleReport cross_check(const EnumerationSpec& spec) {
  OracleReport report;
  report.spec = spec;
  const auto oracle = oracle_graphs(spec);
  report.oracle_count = oracle.size();

  const ClassMachine machine(spec);
  const LevelledBdd d = machine.build();
  report.bdd_count = count(d);

  std::vector<CanonicalGraph> decoded;
  std::set<BinaryString> language;
  const bool with_strings = machine.length() <= kStringLanguageMaxLength;
  for_each_accepted(d, [&](const BinaryString& labels) {
    const BinaryString natural = machine.to_natural(labels);
    decoded.push_back(canonical_form(machine.decode(natural)));
    if (with_strings) language.insert(natural);
    return true;
  });
  std::sort(decoded.begin(), decoded.end());
  for (std::size_t i = 1; i < decoded.size(); ++i) {
    if (decoded[i] == decoded[i - 1] &&
        (report.duplicates.empty() || report.duplicates.back() != decoded[i])) {
      report.duplicates.push_back(decoded[i]);
    }
  }
  decoded.erase(std::unique(decoded.begin(), decoded.end()), decoded.end());
  std::set_symmetric_difference(decoded.begin(), decoded.end(), oracle.begin(), oracle.end(),
                                std::back_inserter(report.mismatches));
  if (with_strings) {
    report.string_checked = true;
    report.string_equal = language == string_language(spec);
  }
  return report;
}

// ---------------------------------------------------------------------------

namespace {

template <class Visit>
void all_strings(std::size_t length, Visit visit) {
  std::string text(length, 'L');
  for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << length); ++bits) {
    for (std::size_t i = 0; i < length; ++i) text[i] = (bits >> (length - 1 - i) & 1) ? 'R' : 'L';
    visit(BinaryString(text));
  }
}

}  // namespace

FormulaFindings formula_findings(int max_n) {
  FormulaFindings f;
  const BinaryString k2("LLRR");
  f.k2_edges = static_cast<int>(pi_decode(k2).edge_count());
  f.k2_interval_height_sum = height_sum_at_openings(k2);
  f.k2_permutation_height_sum = even_height_sum(k2);
  for (int n = 1; n <= max_n; ++n) {
    all_strings(2 * static_cast<std::size_t>(n), [&](const BinaryString& s) {
      if (pi_valid(s)) {
        ++f.interval_strings;
        const int edges = static_cast<int>(pi_decode(s).edge_count());
        if (pi_edge_count(s) != edges) ++f.interval_corrected_mismatches;
        if (height_sum_at_openings(s) != edges) ++f.interval_literal_mismatches;
      }
      if (bp_valid(s)) {
        ++f.permutation_strings;
        const int edges = static_cast<int>(bp_decode(s).edge_count());
        const int sum = even_height_sum(s);
        if (sum % 2 != 0 || sum / 2 != edges) ++f.permutation_corrected_mismatches;
        if (sum != edges) ++f.permutation_literal_mismatches;
        if (split_even_height_sum(s) != sum) ++f.permutation_split_disagreements;
      }
    });
  }
  return f;
}

std::vector<ReadingFinding> reading_findings(int max_n) {
  std::vector<ReadingFinding> out;
  for (int n = 1; n <= max_n; ++n) {
    ReadingFinding cochain{GraphClass::Cochain, n, 0, 0, 0};
    ReadingFinding chain{GraphClass::Chain, n, 0, 0, 0};
    std::set<CanonicalGraph> cochain_graphs, chain_graphs;
    all_strings(static_cast<std::size_t>(n), [&](const BinaryString& s) {
      if (!chain_code_valid(s)) return;
      ++cochain.literal_strings;
      cochain_graphs.insert(canonical_form(cochain_decode(s)));
      std::string reversed = s.str();
      std::reverse(reversed.begin(), reversed.end());
      const BinaryString r(reversed);
      if (!chain_code_valid(r) || height_greater_equal(s, r)) {
        ++chain.literal_strings;
        chain_graphs.insert(canonical_form(chain_decode(s)));
      }
    });
    cochain.literal_distinct = cochain_graphs.size();
    chain.literal_distinct = chain_graphs.size();
    EnumerationSpec spec;
    spec.n = n;
    spec.cls = GraphClass::Cochain;
    cochain.oracle_count = oracle_graphs(spec).size();
    spec.cls = GraphClass::Chain;
    chain.oracle_count = oracle_graphs(spec).size();
    out.push_back(cochain);
    out.push_back(chain);
  }
  return out;
}

}  // namespace igenum
