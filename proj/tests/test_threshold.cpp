#include <doctest.h>

#include <set>
#include <stdexcept>

#include "helpers.hpp"
#include "igenum/oracle.hpp"
#include "igenum/threshold.hpp"

using namespace igenum;
using testing::bs;

TEST_CASE("decode") {
  const auto k1 = thr_decode(bs(""));
  CHECK(k1.vertex_count() == 1);
  const auto k3 = thr_decode(bs("RR"));
  CHECK(k3.edge_count() == 3);
  const auto p3 = thr_decode(bs("LR"));
  CHECK(p3.edge_count() == 2);
  CHECK(p3.degree(2) == 2);
  CHECK_FALSE(p3.adjacent(0, 1));
}

TEST_CASE("machine counts") {
  CHECK(testing::language_size(thr_machine(1)) == 1);
  CHECK(testing::language_size(thr_machine(3)) == 4);
  CHECK(testing::language_size(thr_machine(7)) == 64);
  CHECK(testing::natural_language(thr_machine_clique(3, 1)) == std::set<BinaryString>{bs("LL")});
  CHECK(testing::language_size(thr_machine_clique(3, 2)) == 3);
  CHECK(testing::language_size(thr_machine_clique(3, 3)) == 4);
  CHECK(testing::natural_language(thr_machine_edges(3, 3)) == std::set<BinaryString>{bs("RR")});
  CHECK(testing::natural_language(thr_machine_edges(3, 2)) == std::set<BinaryString>{bs("LR")});
  CHECK(testing::natural_language(thr_machine_edges(3, 0)) == std::set<BinaryString>{bs("LL")});
  CHECK_THROWS_AS(thr_machine(0), std::invalid_argument);
  CHECK_THROWS_AS(thr_machine_clique(3, 0), std::invalid_argument);
  CHECK_THROWS_AS(thr_machine_edges(3, -1), std::invalid_argument);
}

TEST_CASE("count is a power of two") {
  for (int n = 1; n <= 64; ++n) {
    CHECK(count(build(thr_machine(n))) == BigInt(1) << (n - 1));
  }
}

TEST_CASE("distinct sequences give distinct graphs and the formulas hold") {
  for (std::size_t n = 1; n <= 8; ++n) {
    std::set<CanonicalGraph> seen;
    for (const auto& t : testing::all_strings(n - 1)) {
      const auto g = thr_decode(t);
      seen.insert(canonical_form(g));
      int edges = 0;
      for (std::size_t j = 0; j < t.size(); ++j) {
        if (t[j] == Symbol::R) edges += static_cast<int>(j) + 1;
      }
      CHECK(static_cast<int>(g.edge_count()) == edges);
      CHECK(clique_number(g) == static_cast<int>(t.count(Symbol::R)) + 1);
    }
    CHECK(seen.size() == std::size_t{1} << (n - 1));
  }
}

TEST_CASE("constrained machines filter all sequences") {
  for (int n = 1; n <= 8; ++n) {
    const auto all = testing::natural_language(thr_machine(n));
    for (int k = 1; k <= n; ++k) {
      std::set<BinaryString> expected;
      for (const auto& t : all) {
        if (clique_number(thr_decode(t)) <= k) expected.insert(t);
      }
      CHECK(testing::natural_language(thr_machine_clique(n, k)) == expected);
    }
    for (int m = 0; m <= n * (n - 1) / 2 + 1; ++m) {
      std::set<BinaryString> expected;
      for (const auto& t : all) {
        if (static_cast<int>(thr_decode(t).edge_count()) == m) expected.insert(t);
      }
      CHECK(testing::natural_language(thr_machine_edges(n, m)) == expected);
    }
  }
}
