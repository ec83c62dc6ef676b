#include <doctest.h>

#include <algorithm>
#include <random>
#include <stdexcept>

#include "helpers.hpp"
#include "igenum/bitstring.hpp"

using namespace igenum;
using testing::bs;

TEST_CASE("text round trip and validation") {
  CHECK(bs("LRRL").str() == "LRRL");
  CHECK(BinaryString().empty());
  CHECK_THROWS_AS(BinaryString("LXR"), std::invalid_argument);
  CHECK_THROWS_AS(BinaryString("lr"), std::invalid_argument);
  CHECK(BinaryString::repeat(Symbol::R, 3) == bs("RRR"));
  CHECK(bs("LLR").count(Symbol::L) == 2);
  CHECK(bs("LL") + bs("RR") == bs("LLRR"));
  CHECK(bs("LLRR").substr(1, 2) == bs("LR"));
}

TEST_CASE("height profile") {
  CHECK(height_profile(bs("LLRR")) == std::vector<int>{0, 1, 2, 1, 0});
  CHECK(height_profile(BinaryString()) == std::vector<int>{0});
  CHECK(max_height(bs("LLLRLRLLRRLRRLRR")) == 4);
  CHECK(is_balanced(bs("LRLR")));
  CHECK_FALSE(is_balanced(bs("LLR")));
}

TEST_CASE("reverse complement") {
  CHECK(reverse_complement(bs("LLRR")) == bs("LLRR"));
  CHECK(reverse_complement(bs("LLRLRR")) == bs("LLRLRR"));
  CHECK(reverse_complement(bs("LRRR")) == bs("LLLR"));
  CHECK(reverse_complement(BinaryString()) == BinaryString());
}

TEST_CASE("alternate order") {
  CHECK(alternate(bs("LLRR")) == bs("LRLR"));
  CHECK(alternate(bs("LLRLRR")) == bs("LRLRRL"));
  CHECK(alternate(bs("L")) == bs("L"));
  CHECK(inverse_alternate(bs("LRLR")) == bs("LLRR"));
  CHECK(inverse_alternate(bs("LRLRRL")) == bs("LLRLRR"));
  CHECK(inverse_alternate(bs("L")) == bs("L"));
  for (std::size_t len = 0; len < 9; ++len) {
    for (std::size_t level = 0; level < len; ++level) {
      const auto s = testing::all_strings(len)[std::min<std::size_t>(level * 7, (1u << len) - 1)];
      CHECK(alternate(s)[level] == s[alternate_position(level, len)]);
    }
  }
}

TEST_CASE("height order") {
  CHECK(height_greater(bs("LLRR"), bs("LRLR")));
  CHECK_FALSE(height_greater(bs("LLRR"), bs("LLRR")));
  CHECK_FALSE(height_greater(bs("LRRR"), bs("LLLR")));
  CHECK(height_greater_equal(bs("LLRR"), bs("LLRR")));
  CHECK_THROWS_AS(height_greater(bs("LR"), bs("LRL")), std::invalid_argument);
}

TEST_CASE("alternate is a character-preserving bijection") {
  for (std::size_t len = 0; len <= 10; ++len) {
    std::set<BinaryString> images;
    for (const auto& s : testing::all_strings(len)) {
      const auto a = alternate(s);
      CHECK(inverse_alternate(a) == s);
      CHECK(a.count(Symbol::L) == s.count(Symbol::L));
      images.insert(a);
    }
    CHECK(images.size() == (std::size_t{1} << len));
  }
}

TEST_CASE("reverse complement mirrors heights of balanced strings") {
  std::mt19937_64 rng(11);
  int checked = 0;
  while (checked < 300) {
    const auto s = testing::random_string(rng, 2 * (1 + rng() % 10));
    if (!is_balanced(s)) continue;
    ++checked;
    const auto h = height_profile(s);
    const auto hr = height_profile(reverse_complement(s));
    const std::size_t n2 = s.size();
    for (std::size_t j = 0; j <= n2; ++j) CHECK(hr[j] == h[n2 - j]);
    CHECK(reverse_complement(reverse_complement(s)) == s);
  }
}

TEST_CASE("first-L-wins equals the height formulation") {
  // s > t iff at the first index where the height profiles differ, s is higher.
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 2000; ++trial) {
    const std::size_t len = 1 + rng() % 12;
    const auto s = testing::random_string(rng, len);
    const auto t = testing::random_string(rng, len);
    const auto hs = height_profile(s);
    const auto ht = height_profile(t);
    bool expected = false;
    for (std::size_t i = 0; i <= len; ++i) {
      if (hs[i] != ht[i]) {
        expected = hs[i] > ht[i];
        break;
      }
    }
    CHECK(height_greater(s, t) == expected);
    // Strict total order together with equality.
    CHECK(int(height_greater(s, t)) + int(height_greater(t, s)) + int(s == t) == 1);
  }
}
