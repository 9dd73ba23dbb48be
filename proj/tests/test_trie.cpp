#include <algorithm>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "doctest.h"
#include "sdmin/trie.hpp"

using namespace sdmin;

namespace {

const std::vector<std::string> kSampleStrings = {
    "ACC", "ACT", "ATT", "ATCACG", "ATCACT", "ATCAAG", "ATCAATAG", "ATCAATAA"};

}  // namespace

TEST_CASE("trie construction gives canonical preorder ids") {
  Trie t = Trie::from_strings(kSampleStrings);
  CHECK(t.node_count() == 18);
  CHECK(t.edge_count() == 17);
  CHECK(t.max_depth() == 8);

  CHECK(t.walk("") == 0);
  CHECK(t.walk("A") == 1);  // preorder: root's first child
  CHECK(t.walk("ATCA") > 0);
  CHECK(t.walk("G") == -1);
  CHECK(t.walk("ATCACGT") == -1);

  for (int u = 1; u < t.node_count(); ++u) {
    CHECK(t.parent(u) >= 0);
    CHECK(t.parent(u) < u);  // preorder: parents come first
    CHECK(t.depth(u) == t.depth(t.parent(u)) + 1);
    const std::vector<int>& siblings = t.children(t.parent(u));
    CHECK(std::find(siblings.begin(), siblings.end(), u) != siblings.end());
  }
  // Children are sorted by edge letter, so ids are insertion-order free.
  Trie shuffled = Trie::from_strings(
      {"ATCAATAA", "ACT", "ATCACT", "ATT", "ACC", "ATCAATAG", "ATCACG", "ATCAAG"});
  CHECK(shuffled.node_count() == t.node_count());
  for (int u = 0; u < t.node_count(); ++u) {
    CHECK(shuffled.parent(u) == t.parent(u));
    CHECK(shuffled.letter(u) == t.letter(u));
  }
}

TEST_CASE("trie construction edge cases") {
  CHECK(Trie::from_strings({}).node_count() == 1);
  CHECK(Trie::from_strings({""}).node_count() == 1);
  CHECK(Trie::from_strings({"AB", "AC"}).node_count() == 4);
  CHECK(Trie::from_strings({"A", "A"}).node_count() == 2);
  CHECK(Trie::from_strings({"AB", "A"}).node_count() == 3);
  CHECK(Trie::from_strings({"AB", "A"}).max_depth() == 2);
}

TEST_CASE("worked example: window of five letters up from each node") {
  // For the node reached by ATCACG the window reads GCACT (up from the node);
  // its smallest 2-fragment AC sits two letters up, at the ATCA node.
  Trie t = Trie::from_strings(kSampleStrings);
  std::vector<int> result = trie_path_minimizers(t, 5, 2, EngineKind::TwoStack,
                                                 OrderMode::Lex, 1);
  REQUIRE(result.size() == static_cast<std::size_t>(t.node_count()));
  CHECK(result[static_cast<std::size_t>(t.walk("ATCACG"))] == t.walk("ATCA"));
  for (int u = 0; u < t.node_count(); ++u) {
    if (t.depth(u) < 5) {
      CHECK(result[static_cast<std::size_t>(u)] == -1);
    } else {
      int r = result[static_cast<std::size_t>(u)];
      CHECK(r >= 0);
      // The reported node is u or an ancestor within the window: a fragment
      // at window offset j starts at depth(u) - j, with j in [0, ell-k].
      CHECK(t.depth(r) <= t.depth(u));
      CHECK(t.depth(r) >= t.depth(u) - (5 - 2));
      int a = u;
      while (a != -1 && a != r) a = t.parent(a);
      CHECK(a == r);
    }
  }
  CHECK(result == trie_path_minimizers_brute(t, 5, 2, OrderMode::Lex, 1));
}

TEST_CASE("the monotonic queue cannot follow a trie traversal") {
  Trie t = Trie::from_strings(kSampleStrings);
  CHECK_THROWS_AS(trie_path_minimizers(t, 5, 2, EngineKind::Deque, OrderMode::Lex, 1),
                  unsupported_operation);
  CHECK_THROWS_AS(trie_path_minimizers(t, 0, 0, EngineKind::Heap, OrderMode::Lex, 1),
                  std::invalid_argument);
  CHECK_THROWS_AS(trie_path_minimizers(t, 2, 3, EngineKind::Heap, OrderMode::Lex, 1),
                  std::invalid_argument);
}

TEST_CASE("traversal cost stays within four operations per edge") {
  Trie t = Trie::from_strings(kSampleStrings);
  EngineStats stats;
  trie_path_minimizers(t, 5, 2, EngineKind::TwoStack, OrderMode::Lex, 1,
                       BlockScheme::progressing(), &stats);
  CHECK(stats.ops <= 4 * static_cast<std::uint64_t>(t.edge_count()));
  // The window never holds more than ell letters, so no engine state can
  // exceed ell - k + 1 pairs.
  CHECK(stats.peak_live_pairs <= 5 - 2 + 1);
  CHECK(stats.witness_violations == 0);
}

TEST_CASE("a trie shallower than the window reports nothing") {
  Trie t = Trie::from_strings({"ACG", "AT", "GG"});
  std::vector<int> result = trie_path_minimizers(t, 6, 2, EngineKind::Heap,
                                                 OrderMode::Lex, 1);
  for (int r : result) CHECK(r == -1);
  CHECK(result == trie_path_minimizers_brute(t, 6, 2, OrderMode::Lex, 1));
}

TEST_CASE("engines agree with the reference on random tries") {
  std::mt19937_64 rng(90210);
  for (int round = 0; round < 10; ++round) {
    int count = 1 + static_cast<int>(rng() % 40);
    std::vector<std::string> strings;
    strings.reserve(static_cast<std::size_t>(count));
    for (int i = 0; i < count; ++i) {
      int len = 1 + static_cast<int>(rng() % 24);
      std::string s;
      for (int j = 0; j < len; ++j) s.push_back("ACGT"[rng() % 4]);
      strings.push_back(std::move(s));
    }
    Trie t = Trie::from_strings(strings);
    for (int ell : {4, 8}) {
      for (int k : {2, 3}) {
        OrderMode mode = (round + ell + k) % 2 == 0 ? OrderMode::Lex : OrderMode::Krf;
        std::uint64_t seed = 40 + static_cast<std::uint64_t>(round);
        std::vector<int> expected = trie_path_minimizers_brute(t, ell, k, mode, seed);
        for (EngineKind kind :
             {EngineKind::Oracle, EngineKind::Heap, EngineKind::TwoStack, EngineKind::TwoLayer}) {
          INFO("round ", round, " ell ", ell, " k ", k, " engine ", engine_name(kind));
          CHECK(trie_path_minimizers(t, ell, k, kind, mode, seed) == expected);
        }
        CHECK(trie_path_minimizers(t, ell, k, EngineKind::TwoLayer, mode, seed,
                                   BlockScheme::fixed(3)) == expected);
      }
    }
  }
}
