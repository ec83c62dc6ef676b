#pragma once

#include <cstdint>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "igenum/bdd.hpp"
#include "igenum/bitstring.hpp"

namespace testing {

inline igenum::BinaryString bs(const char* text) { return igenum::BinaryString(text); }

// Every string of the given length, L < R lexicographic.
inline std::vector<igenum::BinaryString> all_strings(std::size_t length) {
  std::vector<igenum::BinaryString> out;
  std::string text(length, 'L');
  for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << length); ++bits) {
    for (std::size_t i = 0; i < length; ++i) text[i] = (bits >> (length - 1 - i) & 1) ? 'R' : 'L';
    out.emplace_back(text);
  }
  return out;
}

inline igenum::BinaryString random_string(std::mt19937_64& rng, std::size_t length) {
  std::string text(length, 'L');
  for (auto& ch : text) ch = (rng() & 1) ? 'R' : 'L';
  return igenum::BinaryString(text);
}

// Accepted strings of a machine's diagram, mapped back to natural order.
template <class M>
std::set<igenum::BinaryString> natural_language(const M& machine) {
  std::set<igenum::BinaryString> out;
  const auto d = igenum::build(machine);
  igenum::for_each_accepted(d, [&](const igenum::BinaryString& s) {
    out.insert(machine.to_natural(s));
    return true;
  });
  return out;
}

template <class M>
std::size_t language_size(const M& machine) {
  return static_cast<std::size_t>(igenum::count(igenum::build(machine)));
}

}  // namespace testing
