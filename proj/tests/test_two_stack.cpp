#include <random>
#include <string>
#include <vector>

#include "doctest.h"
#include "sdmin/oracle_engine.hpp"
#include "sdmin/two_stack_engine.hpp"
#include "validators.hpp"

using namespace sdmin;
using sdmin::testing::validate_two_stack;

namespace {

void append_string(MinimizerEngine& e, const std::string& s) {
  for (char c : s) e.append(static_cast<Letter>(c));
}

std::vector<Pos> stack_positions(const std::vector<FragmentPair>& v) {
  std::vector<Pos> out;
  for (const FragmentPair& p : v) out.push_back(p.pos);
  return out;
}

}  // namespace

TEST_CASE("worked example: stacks after a mid-string rebuild") {
  // AAGGAGGCTCCTCCTA, k=3: after rebuilding around the midpoint the left
  // stack keeps, bottom to top, the fragments with no smaller value between
  // them and the pivot, and the right stack the strictly decreasing chain.
  HashConfig cfg = HashConfig::from_seed(3, 1);
  TwoStackEngine e(cfg, OrderMode::Lex);
  append_string(e, "AAGGAGGCTCCTCCTA");
  CHECK(e.fragment_count() == 14);
  e.rebuild_now();
  CHECK(e.pivot() == 7);
  CHECK(stack_positions(e.left_stack()) == std::vector<Pos>{6, 4, 1, 0});
  CHECK(stack_positions(e.right_stack()) == std::vector<Pos>{7, 9});
  CHECK(e.text().fragment_string(e.left_stack().back().pos) == "AAG");   // top (0, rank 0)
  CHECK(e.text().fragment_string(e.right_stack().back().pos) == "CCT");  // top (9, rank 2)
  auto m = e.minimizer();
  REQUIRE(m.has_value());
  CHECK(m->pos == 0);
  CHECK(e.text().fragment_string(m->pos) == "AAG");
  CHECK(validate_two_stack(e).empty());

  // Removing the first letter removes (0, "AAG"); the minimizer moves to the
  // equal-valued fragment at 1.
  auto gone = e.delete_first();
  REQUIRE(gone.has_value());
  CHECK(gone->pos == 0);
  m = e.minimizer();
  REQUIRE(m.has_value());
  CHECK(m->pos == 1);
  CHECK(e.text().fragment_string(1) == "AGG");
  CHECK(validate_two_stack(e).empty());
}

TEST_CASE("lazy anchoring and emptying reset") {
  HashConfig cfg = HashConfig::from_seed(2, 4);
  TwoStackEngine e(cfg, OrderMode::Krf);
  CHECK_FALSE(e.anchored());
  CHECK_FALSE(e.minimizer().has_value());
  e.append('A');
  CHECK_FALSE(e.anchored());  // no fragment yet
  e.append('B');
  CHECK(e.anchored());
  e.delete_last();
  CHECK_FALSE(e.anchored());  // fragment count dropped to zero
  CHECK(e.left_stack().empty());
  CHECK(e.right_stack().empty());
  e.append('C');
  CHECK(e.anchored());
  auto m = e.minimizer();
  REQUIRE(m.has_value());
  CHECK(m->pos == 0);
  e.delete_first();
  e.delete_first();
  CHECK(e.size() == 0);
  CHECK_THROWS_AS(e.delete_first(), std::logic_error);
  CHECK_THROWS_AS(e.delete_last(), std::logic_error);
}

TEST_CASE("draining one side triggers rebuilds, never witness violations") {
  std::mt19937_64 rng(99);
  HashConfig cfg = HashConfig::from_seed(3, 17);
  TwoStackEngine e(cfg, OrderMode::Krf);
  OracleEngine oracle(cfg, OrderMode::Krf);
  for (int i = 0; i < 200; ++i) {
    Letter a = static_cast<Letter>('A' + rng() % 4);
    e.append(a);
    oracle.append(a);
  }
  // Alternate deletions so each side drains repeatedly.
  for (int i = 0; i < 190; ++i) {
    if (i % 2 == 0) {
      e.delete_first();
      oracle.delete_first();
    } else {
      e.delete_last();
      oracle.delete_last();
    }
    auto m = e.minimizer();
    auto r = oracle.minimizer();
    REQUIRE(m.has_value() == r.has_value());
    if (m) REQUIRE(m->pos == r->pos);
    std::string err = validate_two_stack(e);
    REQUIRE_MESSAGE(err.empty(), err);
  }
  CHECK(e.stats().rebuilds > 0);
  CHECK(e.stats().witness_violations == 0);
}

TEST_CASE("random mixed workloads match the oracle with exact stacks") {
  std::mt19937_64 rng(2718);
  for (int round = 0; round < 40; ++round) {
    int k = 1 + static_cast<int>(rng() % 6);
    int alphabet = round % 2 == 0 ? 2 : 8;
    OrderMode mode = round % 2 == 0 ? OrderMode::Lex : OrderMode::Krf;
    HashConfig cfg = HashConfig::from_seed(k, 500 + static_cast<std::uint64_t>(round));
    TwoStackEngine e(cfg, mode);
    OracleEngine oracle(cfg, mode);
    for (int step = 0; step < 500; ++step) {
      Letter a = static_cast<Letter>('A' + rng() % static_cast<unsigned>(alphabet));
      int choice = oracle.size() == 0 ? static_cast<int>(rng() % 2)
                                      : static_cast<int>(rng() % 4);
      std::optional<FragmentPair> c0, c1;
      switch (choice) {
        case 0: c0 = e.append(a); c1 = oracle.append(a); break;
        case 1: c0 = e.prepend(a); c1 = oracle.prepend(a); break;
        case 2: c0 = e.delete_first(); c1 = oracle.delete_first(); break;
        default: c0 = e.delete_last(); c1 = oracle.delete_last(); break;
      }
      REQUIRE(c0.has_value() == c1.has_value());
      if (c0) REQUIRE(c0->pos == c1->pos);
      auto m = e.minimizer();
      auto r = oracle.minimizer();
      REQUIRE(m.has_value() == r.has_value());
      if (m) {
        REQUIRE(m->pos == r->pos);
        REQUIRE(order_compare(m->value, r->value) == 0);
      }
      std::string err = validate_two_stack(e);
      REQUIRE_MESSAGE(err.empty(), err);
    }
    CHECK(e.stats().witness_violations == 0);
  }
}

TEST_CASE("rebuild cost is covered by the ops since the previous rebuild") {
  // A pure front drain is the tight case: every rebuild re-centers, the next
  // floor(f/2) deletions eat the left half, and the cycle repeats with half
  // the fragments, so the rebuild count is logarithmic and every rebuild of
  // f fragments follows at least f earlier operations.
  HashConfig cfg = HashConfig::from_seed(2, 31);
  TwoStackEngine e(cfg, OrderMode::Krf);
  for (int i = 0; i < 512; ++i) e.append(static_cast<Letter>('A' + (i * 7) % 4));
  while (e.fragment_count() > 0) e.delete_first();
  CHECK(e.stats().rebuilds > 1);
  CHECK(e.stats().witness_violations == 0);
}
