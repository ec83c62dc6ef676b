#include "igenum/enumeration.hpp"

#include <stdexcept>

#include "igenum/chain.hpp"
#include "igenum/cochain.hpp"

namespace igenum {

std::string_view class_name(GraphClass cls) noexcept {
  switch (cls) {
    case GraphClass::ProperInterval: return "proper-interval";
    case GraphClass::Cochain: return "cochain";
    case GraphClass::BipartitePermutation: return "bipartite-permutation";
    case GraphClass::Chain: return "chain";
    case GraphClass::Threshold: return "threshold";
  }
  return "?";
}

std::optional<GraphClass> parse_class(std::string_view name) noexcept {
  for (GraphClass cls : kAllClasses) {
    if (class_name(cls) == name) return cls;
  }
  return std::nullopt;
}

bool requires_connected(GraphClass cls) noexcept {
  return cls == GraphClass::ProperInterval || cls == GraphClass::BipartitePermutation;
}

std::size_t encoded_length(GraphClass cls, int n) noexcept {
  const auto size = static_cast<std::size_t>(n);
  switch (cls) {
    case GraphClass::ProperInterval:
    case GraphClass::BipartitePermutation: return 2 * size;
    case GraphClass::Cochain:
    case GraphClass::Chain: return size;
    case GraphClass::Threshold: return size == 0 ? 0 : size - 1;
  }
  return 0;
}

void validate(const EnumerationSpec& spec) {
  if (spec.n < 1) throw std::invalid_argument("n must be >= 1");
  if (spec.k && spec.m) throw std::invalid_argument("k and m cannot be combined");
  if (spec.m && *spec.m < 0) throw std::invalid_argument("m must be >= 0");
  if (spec.k) {
    if (spec.cls == GraphClass::BipartitePermutation) {
      throw std::invalid_argument("bipartite permutation graphs take no k");
    }
    const int minimum = spec.cls == GraphClass::Chain ? 2 : 1;
    if (*spec.k < minimum) {
      throw std::invalid_argument("k must be >= " + std::to_string(minimum) + " for " +
                                  std::string(class_name(spec.cls)));
    }
  }
}

Graph decode(GraphClass cls, const BinaryString& natural) {
  switch (cls) {
    case GraphClass::ProperInterval: return pi_decode(natural);
    case GraphClass::Cochain: return cochain_decode(natural);
    case GraphClass::BipartitePermutation: return bp_decode(natural);
    case GraphClass::Chain: return chain_decode(natural);
    case GraphClass::Threshold: return thr_decode(natural);
  }
  throw std::invalid_argument("unknown graph class");
}

namespace {

ClassMachine::Variant make_machine(const EnumerationSpec& s) {
  switch (s.cls) {
    case GraphClass::ProperInterval:
      if (s.k) return pi_machine_clique(s.n, *s.k);
      if (s.m) return pi_machine_edges(s.n, *s.m);
      return pi_machine(s.n);
    case GraphClass::Cochain:
      if (s.k) return cochain_machine_clique(s.n, *s.k);
      if (s.m) return cochain_machine_edges(s.n, *s.m);
      return cochain_machine(s.n);
    case GraphClass::BipartitePermutation:
      if (s.m) return bp_machine_edges(s.n, *s.m);
      return bp_machine(s.n);
    case GraphClass::Chain:
      if (s.k) return chain_machine_biclique(s.n, *s.k);
      if (s.m) return chain_machine_edges(s.n, *s.m);
      return chain_machine(s.n);
    case GraphClass::Threshold:
      if (s.k) return thr_machine_clique(s.n, *s.k);
      if (s.m) return thr_machine_edges(s.n, *s.m);
      return thr_machine(s.n);
  }
  throw std::invalid_argument("unknown graph class");
}

const EnumerationSpec& validated(const EnumerationSpec& spec) {
  validate(spec);
  return spec;
}

}  // namespace

ClassMachine::ClassMachine(const EnumerationSpec& spec)
    : spec_(validated(spec)), machine_(make_machine(spec)) {}

std::size_t ClassMachine::length() const {
  return std::visit([](const auto& m) { return static_cast<std::size_t>(m.length()); }, machine_);
}

LevelledBdd ClassMachine::build() const {
  return std::visit([](const auto& m) { return igenum::build(m); }, machine_);
}

BinaryString ClassMachine::to_natural(const BinaryString& labels) const {
  return std::visit([&](const auto& m) { return m.to_natural(labels); }, machine_);
}

BinaryString ClassMachine::to_labels(const BinaryString& natural) const {
  return std::visit([&](const auto& m) { return m.to_labels(natural); }, machine_);
}

bool ClassMachine::accepts(const BinaryString& natural) const {
  if (natural.size() != length()) return false;
  return std::visit([&](const auto& m) { return run(m, m.to_labels(natural)); }, machine_);
}

}  // namespace igenum
