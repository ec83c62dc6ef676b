#include <doctest.h>

#include <map>
#include <stdexcept>

#include "helpers.hpp"
#include "igenum/oracle.hpp"
#include "igenum/proper_interval.hpp"

using namespace igenum;
using testing::bs;

namespace {
const char* const kFigure = "LLLRLRLLRRLRRLRR";
}

TEST_CASE("validity") {
  CHECK(pi_valid(bs("LLRR")));
  CHECK_FALSE(pi_valid(bs("LRLR")));
  CHECK(pi_valid(bs(kFigure)));
  CHECK(pi_valid(bs("LR")));
  CHECK_FALSE(pi_valid(bs("")));
  CHECK_THROWS_AS(pi_valid(bs("LLR")), std::invalid_argument);
}

TEST_CASE("canonicity") {
  CHECK(pi_canonical(bs("LLRR")));
  CHECK(pi_canonical(bs(kFigure)));
  CHECK(reverse_complement(bs(kFigure)) == bs("LLRLLRLLRRLRLRRR"));
  CHECK_FALSE(pi_canonical(bs("LLRLLRLLRRLRLRRR")));
  CHECK_THROWS_AS(pi_canonical(bs("LRLR")), std::invalid_argument);
}

TEST_CASE("machine counts") {
  CHECK(testing::natural_language(pi_machine(2)) == std::set<BinaryString>{bs("LLRR")});
  CHECK(testing::language_size(pi_machine(1)) == 1);
  CHECK(testing::language_size(pi_machine(3)) == 2);
  CHECK(testing::language_size(pi_machine_clique(4, 2)) == 1);
  CHECK(testing::language_size(pi_machine_clique(3, 3)) == 2);
  CHECK(testing::language_size(pi_machine_clique(3, 1)) == 0);
  CHECK(testing::language_size(pi_machine_edges(2, 1)) == 1);
  CHECK(testing::language_size(pi_machine_edges(4, 3)) == 1);
  CHECK_THROWS_AS(pi_machine(0), std::invalid_argument);
  CHECK_THROWS_AS(pi_machine_clique(3, 0), std::invalid_argument);
  CHECK_THROWS_AS(pi_machine_edges(3, -1), std::invalid_argument);
}

TEST_CASE("figure string") {
  const auto s = bs(kFigure);
  const auto g = pi_decode(s);
  CHECK(g.vertex_count() == 8);
  CHECK(g.edge_count() == 13);
  CHECK(clique_number(g) == 4);
  CHECK(pi_edge_count(s) == 13);
  CHECK(height_sum_at_openings(s) == 21);
  CHECK(pi_clique_number(s) == 4);
  CHECK(run(pi_machine_edges(8, 13), alternate(s)));
  CHECK_FALSE(run(pi_machine_edges(8, 12), alternate(s)));
}

TEST_CASE("decode") {
  const auto k2 = pi_decode(bs("LLRR"));
  CHECK(k2.vertex_count() == 2);
  CHECK(k2.edge_count() == 1);
  const auto two = pi_decode(bs("LRLR"), SweepCheck::Relaxed);
  CHECK(two.vertex_count() == 2);
  CHECK(two.edge_count() == 0);
  CHECK_THROWS_AS(pi_decode(bs("LRLR")), std::invalid_argument);
  CHECK_THROWS_AS(pi_decode(bs("RL"), SweepCheck::Relaxed), std::invalid_argument);
  CHECK(pi_edge_count(bs("LLRR")) == 1);
  CHECK(pi_edge_count(bs("LRLR")) == 0);
  CHECK(pi_clique_number(bs("LLRR")) == 2);
  CHECK(pi_clique_number(bs("LRLR")) == 1);
}

TEST_CASE("machine equals the string filter") {
  for (int n = 1; n <= 6; ++n) {
    std::set<BinaryString> expected;
    for (const auto& s : testing::all_strings(2 * static_cast<std::size_t>(n))) {
      if (pi_valid(s) && pi_canonical(s)) expected.insert(s);
    }
    CHECK(testing::natural_language(pi_machine(n)) == expected);
  }
}

TEST_CASE("formulas agree with the decoded graph") {
  for (int n = 1; n <= 8; ++n) {
    for (const auto& s : testing::natural_language(pi_machine(n))) {
      const auto g = pi_decode(s);
      CHECK(pi_edge_count(s) == static_cast<int>(g.edge_count()));
      CHECK(pi_clique_number(s) == clique_number(g));
    }
  }
}

TEST_CASE("constrained machines filter the unconstrained language") {
  for (int n = 1; n <= 6; ++n) {
    const auto all = testing::natural_language(pi_machine(n));
    for (int k = 1; k <= n; ++k) {
      std::set<BinaryString> expected;
      for (const auto& s : all) {
        if (pi_clique_number(s) <= k) expected.insert(s);
      }
      CHECK(testing::natural_language(pi_machine_clique(n, k)) == expected);
    }
    for (int m = 0; m <= n * (n - 1) / 2; ++m) {
      std::set<BinaryString> expected;
      for (const auto& s : all) {
        if (pi_edge_count(s) == m) expected.insert(s);
      }
      CHECK(testing::natural_language(pi_machine_edges(n, m)) == expected);
    }
  }
}

TEST_CASE("states per level stay within the quadratic bound") {
  for (int n : {5, 10, 20, 40}) {
    const auto s = stats(build(pi_machine(n)));
    for (auto size : s.nodes_per_level) {
      CHECK(size <= static_cast<std::size_t>((n + 1) * (n + 1) * 2));
    }
  }
  for (int m : {3, 8}) {
    const auto s = stats(build(pi_machine_edges(10, m)));
    for (auto size : s.nodes_per_level) {
      CHECK(size <= static_cast<std::size_t>(11 * 11 * 2 * (m + 1)));
    }
  }
}
