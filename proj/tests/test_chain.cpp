#include <doctest.h>

#include <algorithm>
#include <stdexcept>

#include "helpers.hpp"
#include "igenum/chain.hpp"
#include "igenum/errors.hpp"
#include "igenum/oracle.hpp"

using namespace igenum;
using testing::bs;

TEST_CASE("decode and formulas") {
  CHECK(chain_decode(bs("RL")).edge_count() == 1);
  const auto star = chain_decode(bs("RRL"));
  CHECK(star.edge_count() == 2);
  CHECK(star.degree(2) == 2);
  CHECK(chain_decode(bs("LLL")).edge_count() == 0);
  CHECK_THROWS_AS(chain_decode(bs("LR")), std::invalid_argument);
  CHECK(chain_edge_count(bs("RL")) == 1);
  CHECK(chain_edge_count(bs("RRL")) == 2);
  CHECK(chain_edge_count(bs("LLL")) == 0);
  CHECK(chain_biclique_number(bs("RL")) == 2);
  CHECK(chain_biclique_number(bs("RRL")) == 3);
  CHECK(chain_biclique_number(bs("RRLL")) == 4);
  CHECK_THROWS_AS(chain_biclique_number(bs("LLL")), UndefinedBicliqueError);
}

TEST_CASE("machine counts") {
  CHECK(testing::natural_language(chain_machine(1)) == std::set<BinaryString>{bs("L")});
  CHECK(testing::natural_language(chain_machine(2)) == std::set<BinaryString>{bs("LL"), bs("RL")});
  CHECK(testing::language_size(chain_machine(3)) == 3);
  CHECK(testing::language_size(chain_machine_biclique(3, 2)) == 2);
  CHECK(testing::language_size(chain_machine_biclique(3, 3)) == 3);
  CHECK(testing::language_size(chain_machine_biclique(2, 2)) == 2);
  CHECK(testing::natural_language(chain_machine_edges(3, 2)) == std::set<BinaryString>{bs("RLL")});
  CHECK(testing::language_size(chain_machine_edges(3, 0)) == 1);
  CHECK(testing::language_size(chain_machine_edges(3, 3)) == 0);
  CHECK_THROWS_AS(chain_machine_biclique(3, 1), std::invalid_argument);
  CHECK_THROWS_AS(chain_machine_edges(3, -1), std::invalid_argument);
}

TEST_CASE("formulas agree with brute force") {
  for (std::size_t n = 1; n <= 8; ++n) {
    for (const auto& c : testing::all_strings(n)) {
      if (!chain_valid(c)) continue;
      const auto g = chain_decode(c);
      CHECK(chain_edge_count(c) == static_cast<int>(g.edge_count()));
      if (g.edge_count() == 0) {
        CHECK_THROWS_AS(chain_biclique_number(c), UndefinedBicliqueError);
      } else {
        CHECK(chain_biclique_number(c) == biclique_number(g).value());
      }
    }
  }
}

TEST_CASE("X/Y swap is the reverse complement") {
  CHECK(canonical_form(chain_decode(bs("RRL"))) == canonical_form(chain_decode(bs("RLL"))));
  for (std::size_t n = 2; n <= 7; ++n) {
    for (const auto& w : testing::all_strings(n)) {
      if (!chain_valid(w) || !chain_valid(reverse_complement(w))) continue;
      const auto g = chain_decode(w);
      if (!g.is_connected()) continue;
      CHECK(canonical_form(g) == canonical_form(chain_decode(reverse_complement(w))));
    }
  }
}

TEST_CASE("constrained machines filter the unconstrained language") {
  for (int n = 1; n <= 7; ++n) {
    const auto all = testing::natural_language(chain_machine(n));
    for (int k = 2; k <= n + 1; ++k) {
      std::set<BinaryString> expected;
      for (const auto& c : all) {
        if (chain_edge_count(c) == 0 || chain_biclique_number(c) <= k) expected.insert(c);
      }
      CHECK(testing::natural_language(chain_machine_biclique(n, k)) == expected);
    }
    for (int m = 0; m <= n * n / 4 + 1; ++m) {
      std::set<BinaryString> expected;
      for (const auto& c : all) {
        if (chain_edge_count(c) == m) expected.insert(c);
      }
      CHECK(testing::natural_language(chain_machine_edges(n, m)) == expected);
    }
  }
}

TEST_CASE("machine accepts exactly the canonical codes") {
  for (int n = 0; n <= 12; ++n) {
    std::set<BinaryString> expected;
    for (const auto& c : testing::all_strings(static_cast<std::size_t>(n))) {
      if (chain_canonical(c)) expected.insert(c);
    }
    const auto machine = chain_machine(n);
    CHECK(testing::natural_language(machine) == expected);
    for (const auto& c : expected) CHECK(machine.to_natural(machine.to_labels(c)) == c);
  }
}
