#include "igenum/bdd.hpp"

#include <algorithm>
#include <regex>
#include <sstream>
#include <stdexcept>

#include "igenum/errors.hpp"

namespace igenum {

LevelledBdd::LevelledBdd(std::size_t length, NodeId root, std::vector<Arcs> arcs,
                         std::vector<NodeId> level_starts,
                         std::chrono::nanoseconds build_time)
    : length_(length),
      root_(root),
      arcs_(std::move(arcs)),
      level_begin_(std::move(level_starts)),
      build_time_(build_time) {
  if (arcs_.size() < 2 || level_begin_.size() != length_ + 1 ||
      level_begin_.front() != 2 || level_begin_.back() != arcs_.size()) {
    throw std::invalid_argument("inconsistent levelled BDD layout");
  }
  if (length_ > 0 && (root_ != 2 || level_size(0) != 1)) {
    throw std::invalid_argument("a levelled BDD has exactly one root at level 1");
  }
  for (std::size_t level = 0; level < length_; ++level) {
    const NodeId lo = level_end(level);
    const NodeId hi = level + 1 < length_ ? level_end(level + 1) : lo;
    for (NodeId id = level_begin(level); id < level_end(level); ++id) {
      for (NodeId target : arcs_[id]) {
        if (!is_terminal(target) && (target < lo || target >= hi)) {
          throw std::invalid_argument("arc skips a level");
        }
      }
    }
  }
}

std::size_t LevelledBdd::level_of(NodeId id) const {
  if (is_terminal(id)) return length_;
  auto it = std::upper_bound(level_begin_.begin(), level_begin_.end(), id);
  return static_cast<std::size_t>(it - level_begin_.begin()) - 1;
}

BigInt count(const LevelledBdd& d) {
  if (d.length() == 0) return d.root() == kAcceptNode ? 1 : 0;
  // Rolling per-level vectors keep memory proportional to the widest level.
  std::vector<BigInt> below;
  NodeId below_first = d.level_end(d.length() - 1);
  for (std::size_t level = d.length(); level-- > 0;) {
    std::vector<BigInt> here(d.level_size(level));
    const NodeId first = d.level_begin(level);
    for (NodeId id = first; id < d.level_end(level); ++id) {
      BigInt& c = here[id - first];
      for (Symbol s : {Symbol::L, Symbol::R}) {
        const NodeId t = d.child(id, s);
        if (t == kAcceptNode) {
          c += 1;
        } else if (t != kRejectNode) {
          c += below[t - below_first];
        }
      }
    }
    below = std::move(here);
    below_first = first;
  }
  return below.front();
}

std::vector<BigInt> completion_counts(const LevelledBdd& d) {
  std::vector<BigInt> counts(d.internal_node_count() + 2);
  counts[kAcceptNode] = 1;
  for (NodeId id = static_cast<NodeId>(counts.size()); id-- > 2;) {
    counts[id] = counts[d.child(id, Symbol::L)] + counts[d.child(id, Symbol::R)];
  }
  return counts;
}

std::vector<bool> live_nodes(const LevelledBdd& d) {
  std::vector<bool> live(d.internal_node_count() + 2, false);
  live[kAcceptNode] = true;
  for (NodeId id = static_cast<NodeId>(live.size()); id-- > 2;) {
    live[id] = live[d.child(id, Symbol::L)] || live[d.child(id, Symbol::R)];
  }
  return live;
}

BigInt uniform_below(const BigInt& bound, std::mt19937_64& rng) {
  if (bound <= 0) throw std::invalid_argument("uniform_below needs a positive bound");
  const unsigned bits = static_cast<unsigned>(boost::multiprecision::msb(bound)) + 1;
  const BigInt mask = (BigInt(1) << bits) - 1;
  for (;;) {
    BigInt r = 0;
    for (unsigned got = 0; got < bits; got += 64) {
      r <<= 64;
      r |= BigInt(rng());
    }
    r &= mask;
    if (r < bound) return r;
  }
}

Sampler::Sampler(const LevelledBdd& d) : diagram_(&d), counts_(completion_counts(d)) {}

BinaryString Sampler::draw(std::mt19937_64& rng) const {
  if (total() == 0) throw EmptyLanguageError("cannot sample from an empty language");
  return unrank(uniform_below(total(), rng));
}

BinaryString Sampler::unrank(BigInt index) const {
  if (index < 0 || index >= total()) throw std::out_of_range("rank out of range");
  std::vector<Symbol> out;
  out.reserve(diagram_->length());
  NodeId node = diagram_->root();
  while (!LevelledBdd::is_terminal(node)) {
    const NodeId lo = diagram_->child(node, Symbol::L);
    if (index < counts_[lo]) {
      out.push_back(Symbol::L);
      node = lo;
    } else {
      index -= counts_[lo];
      out.push_back(Symbol::R);
      node = diagram_->child(node, Symbol::R);
    }
  }
  return BinaryString(out);
}

BinaryString sample(const LevelledBdd& d, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  return Sampler(d).draw(rng);
}

AcceptedStrings::AcceptedStrings(const LevelledBdd& d)
    : diagram_(&d), live_(live_nodes(d)) {}

std::optional<BinaryString> AcceptedStrings::next() {
  if (!started_) {
    started_ = true;
    const NodeId root = diagram_->root();
    if (root == kAcceptNode) return BinaryString();
    if (!live_[root]) return std::nullopt;
    stack_.push_back({root, 0});
  }
  while (!stack_.empty()) {
    Frame& top = stack_.back();
    if (top.next_symbol == 2) {
      stack_.pop_back();
      if (!path_.empty()) path_.pop_back();
      continue;
    }
    const auto symbol = static_cast<Symbol>(top.next_symbol++);
    const NodeId child = diagram_->child(top.node, symbol);
    if (child == kAcceptNode) {
      path_.push_back(symbol);
      BinaryString out(path_);
      path_.pop_back();
      return out;
    }
    if (child == kRejectNode || !live_[child]) continue;
    path_.push_back(symbol);
    stack_.push_back({child, 0});
  }
  return std::nullopt;
}

void for_each_accepted(const LevelledBdd& d,
                       const std::function<bool(const BinaryString&)>& visit) {
  AcceptedStrings it(d);
  while (auto s = it.next()) {
    if (!visit(*s)) return;
  }
}

std::vector<BinaryString> accepted_strings(const LevelledBdd& d) {
  std::vector<BinaryString> out;
  for_each_accepted(d, [&](const BinaryString& s) {
    out.push_back(s);
    return true;
  });
  return out;
}

namespace {

std::string node_name(NodeId id) {
  if (id == kRejectNode) return "t0";
  if (id == kAcceptNode) return "t1";
  return "n" + std::to_string(id);
}

NodeId parse_node_name(const std::string& name) {
  if (name == "t0") return kRejectNode;
  if (name == "t1") return kAcceptNode;
  if (name.size() < 2 || name[0] != 'n') {
    throw std::invalid_argument("unknown node name in DOT text: " + name);
  }
  return static_cast<NodeId>(std::stoul(name.substr(1)));
}

}  // namespace

std::string export_dot(const LevelledBdd& d) {
  std::ostringstream os;
  os << "digraph bdd {\n";
  os << "  graph [comment=\"levelled bdd length=" << d.length()
     << " root=" << node_name(d.root()) << "\"];\n";
  os << "  node [shape=circle];\n";
  os << "  t0 [shape=box,label=\"0\"];\n";
  os << "  t1 [shape=box,label=\"1\"];\n";
  for (std::size_t level = 0; level < d.length(); ++level) {
    for (NodeId id = d.level_begin(level); id < d.level_end(level); ++id) {
      os << "  " << node_name(id) << " [label=\"" << level + 1 << "\"];\n";
    }
  }
  for (std::size_t level = 0; level < d.length(); ++level) {
    if (d.level_size(level) == 0) continue;
    os << "  { rank=same;";
    for (NodeId id = d.level_begin(level); id < d.level_end(level); ++id) {
      os << ' ' << node_name(id) << ';';
    }
    os << " }\n";
  }
  for (NodeId id = 2; id < d.internal_node_count() + 2; ++id) {
    os << "  " << node_name(id) << " -> " << node_name(d.child(id, Symbol::L))
       << " [label=\"L\"];\n";
    os << "  " << node_name(id) << " -> " << node_name(d.child(id, Symbol::R))
       << " [label=\"R\",style=dashed];\n";
  }
  os << "}\n";
  return os.str();
}

LevelledBdd parse_dot(const std::string& text) {
  static const std::regex header(R"re(comment="levelled bdd length=(\d+) root=(\w+)")re");
  static const std::regex node_decl(R"re(^\s*(n\d+) \[label="(\d+)"\];\s*$)re");
  static const std::regex arc(R"re(^\s*(\w+) -> (\w+) \[label="([LR])"[^\]]*\];\s*$)re");

  std::smatch m;
  if (!std::regex_search(text, m, header)) {
    throw std::invalid_argument("DOT text lacks the levelled bdd header");
  }
  const std::size_t length = std::stoul(m[1]);
  const NodeId root = parse_node_name(m[2]);

  std::vector<std::size_t> level_of;  // indexed by id - 2
  std::vector<LevelledBdd::Arcs> arcs(2, LevelledBdd::Arcs{kRejectNode, kRejectNode});
  std::vector<std::array<bool, 2>> seen;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    if (std::regex_match(line, m, node_decl)) {
      const NodeId id = parse_node_name(m[1]);
      if (id != arcs.size()) throw std::invalid_argument("node ids must be dense and ordered");
      arcs.push_back({kRejectNode, kRejectNode});
      seen.push_back({false, false});
      level_of.push_back(std::stoul(m[2]) - 1);
    } else if (std::regex_match(line, m, arc)) {
      const NodeId from = parse_node_name(m[1]);
      const NodeId to = parse_node_name(m[2]);
      if (from < 2 || from >= arcs.size()) throw std::invalid_argument("arc from unknown node");
      const std::size_t s = m[3] == "L" ? 0 : 1;
      arcs[from][s] = to;
      seen[from - 2][s] = true;
    }
  }
  for (const auto& both : seen) {
    if (!both[0] || !both[1]) throw std::invalid_argument("node without both arcs");
  }
  std::vector<NodeId> level_begin(length + 1, static_cast<NodeId>(arcs.size()));
  level_begin[0] = 2;
  for (std::size_t level = 0, i = 0; level < length; ++level) {
    level_begin[level] = static_cast<NodeId>(i + 2);
    while (i < level_of.size() && level_of[i] == level) ++i;
    level_begin[level + 1] = static_cast<NodeId>(i + 2);
  }
  if (level_begin.back() != arcs.size()) {
    throw std::invalid_argument("node levels are not contiguous");
  }
  return LevelledBdd(length, root, std::move(arcs), std::move(level_begin));
}

BuildStats stats(const LevelledBdd& d) {
  BuildStats out;
  out.nodes_per_level.reserve(d.length());
  for (std::size_t level = 0; level < d.length(); ++level) {
    out.nodes_per_level.push_back(d.level_size(level));
  }
  out.total_nodes = d.internal_node_count() + 2;
  out.build_time = d.build_time();
  return out;
}

}  // namespace igenum
