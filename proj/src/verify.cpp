#include "sdmin/verify.hpp"

#include <memory>
#include <random>
#include <sstream>
#include <vector>

#include "sdmin/engine_factory.hpp"
#include "sdmin/scan.hpp"
#include "sdmin/trie.hpp"
#include "sdmin/two_layer_engine.hpp"
#include "sdmin/two_stack_engine.hpp"

namespace sdmin {

namespace {

std::uint64_t derive_seed(std::uint64_t base, std::uint64_t salt) {
  std::uint64_t state = base + salt * 0x9e3779b97f4a7c15ull;
  return splitmix64(state);
}

std::vector<Letter> random_letters(std::mt19937_64& rng, std::size_t n, int alphabet) {
  std::vector<Letter> out(n);
  for (Letter& a : out) a = static_cast<Letter>('A' + rng() % static_cast<unsigned>(alphabet));
  return out;
}

bool same_pair(const std::optional<FragmentPair>& a, const std::optional<FragmentPair>& b) {
  if (a.has_value() != b.has_value()) return false;
  if (!a) return true;
  return a->pos == b->pos && order_compare(a->value, b->value) == 0;
}

// Deletions return the removed fragment, whose letters are no longer in the
// text: a Lex value can't be recompared through its handle, so removals are
// checked by position (plus the residue in Krf mode, where the value is a
// plain number).  Creations return a live fragment and get the full check.
bool same_change(OpKind op, const std::optional<FragmentPair>& a,
                 const std::optional<FragmentPair>& b) {
  if (a.has_value() != b.has_value()) return false;
  if (!a) return true;
  if (a->pos != b->pos) return false;
  if (op == OpKind::DeleteFirst || op == OpKind::DeleteLast) {
    if (a->value.mode == OrderMode::Krf) return a->value.krf == b->value.krf;
    return true;
  }
  return order_compare(a->value, b->value) == 0;
}

std::string describe_pair(const std::optional<FragmentPair>& p) {
  if (!p) return "none";
  std::ostringstream out;
  out << "(pos " << p->pos;
  if (p->value.mode == OrderMode::Krf) out << ", krf " << p->value.krf;
  out << ")";
  return out.str();
}

struct Party {
  std::string label;
  std::unique_ptr<MinimizerEngine> engine;
};

// Applies one operation to every party and checks they agree with party 0 on
// the affected fragment and on the minimizer.  Returns false on mismatch and
// fills `detail`.
bool step_parties(std::vector<Party>& parties, OpKind op, Letter letter, std::string& detail) {
  std::optional<FragmentPair> reference_change;
  std::optional<FragmentPair> reference_min;
  for (std::size_t i = 0; i < parties.size(); ++i) {
    MinimizerEngine& e = *parties[i].engine;
    std::optional<FragmentPair> change;
    switch (op) {
      case OpKind::Prepend: change = e.prepend(letter); break;
      case OpKind::Append: change = e.append(letter); break;
      case OpKind::DeleteFirst: change = e.delete_first(); break;
      case OpKind::DeleteLast: change = e.delete_last(); break;
    }
    std::optional<FragmentPair> min = e.minimizer();
    if (i == 0) {
      reference_change = change;
      reference_min = min;
      continue;
    }
    if (!same_change(op, change, reference_change)) {
      detail = parties[i].label + " " + op_name(op) + " changed " + describe_pair(change) +
               ", reference changed " + describe_pair(reference_change);
      return false;
    }
    if (!same_pair(min, reference_min)) {
      detail = parties[i].label + " minimizer " + describe_pair(min) + ", reference " +
               describe_pair(reference_min);
      return false;
    }
  }
  return true;
}

void collect_witness(const std::vector<Party>& parties, SuiteResult& result) {
  for (const Party& p : parties) result.witness_violations += p.engine->stats().witness_violations;
}

}  // namespace

SuiteResult run_border_suite(const BorderSuiteOptions& options) {
  SuiteResult result;
  result.name = "border";
  const int alphabets[] = {2, 4, 26};
  const int ks[] = {1, 2, 4, 8};
  const std::int64_t fixed_lens[] = {2, 3, 5, 16};
  for (int case_id = 0; case_id < options.sequences; ++case_id) {
    std::mt19937_64 rng(derive_seed(options.seed, static_cast<std::uint64_t>(case_id)));
    int alphabet = alphabets[case_id % 3];
    int k = ks[(case_id / 3) % 4];
    OrderMode mode = (case_id / 12) % 2 == 0 ? OrderMode::Krf : OrderMode::Lex;
    HashConfig cfg = HashConfig::from_seed(k, derive_seed(options.seed, 77 + case_id));
    int ops = case_id % 100 == 99 ? options.max_ops
                                  : 200 + static_cast<int>(rng() % 1200);

    // family 0: all four operations on the fully general engines;
    // family 1/2: the three operations each queue orientation supports.
    int family = case_id % 3;
    std::vector<Party> parties;
    parties.push_back(Party{"oracle", make_engine(EngineKind::Oracle, cfg, mode)});
    if (family == 0) {
      parties.push_back(Party{"heap", make_engine(EngineKind::Heap, cfg, mode)});
      parties.push_back(Party{"two-stack", make_engine(EngineKind::TwoStack, cfg, mode)});
      parties.push_back(Party{"two-layer/progressing",
                              make_engine(EngineKind::TwoLayer, cfg, mode)});
      parties.push_back(
          Party{"two-layer/fixed",
                make_engine(EngineKind::TwoLayer, cfg, mode,
                            BlockScheme::fixed(fixed_lens[(case_id / 3) % 4]))});
    } else {
      DequeOrientation orientation = family == 1 ? DequeOrientation::LeftToRight
                                                 : DequeOrientation::RightToLeft;
      parties.push_back(Party{"deque", make_engine(EngineKind::Deque, cfg, mode,
                                                   BlockScheme::progressing(), orientation)});
      parties.push_back(Party{"heap", make_engine(EngineKind::Heap, cfg, mode)});
    }

    ++result.cases;
    std::vector<BorderOp> history;
    for (int step = 0; step < ops; ++step) {
      std::int64_t size = parties[0].engine->size();
      bool remove;
      if (size == 0) {
        remove = false;
      } else if (size >= options.soft_cap) {
        remove = rng() % 4 != 0;  // shrink three times out of four
      } else {
        remove = rng() % 2 == 0;
      }
      OpKind op;
      if (remove) {
        if (family == 1) op = OpKind::DeleteFirst;
        else if (family == 2) op = OpKind::DeleteLast;
        else op = rng() % 2 == 0 ? OpKind::DeleteFirst : OpKind::DeleteLast;
      } else {
        op = rng() % 2 == 0 ? OpKind::Prepend : OpKind::Append;
      }
      Letter letter = static_cast<Letter>('A' + rng() % static_cast<unsigned>(alphabet));
      history.push_back(BorderOp{op, letter});
      std::string detail;
      ++result.ops;
      if (!step_parties(parties, op, letter, detail)) {
        ++result.mismatches;
        if (result.first_mismatch.empty()) {
          std::ostringstream out;
          out << "suite seed " << options.seed << " case " << case_id << " step " << step
              << " (alphabet " << alphabet << ", k " << k << ", " << order_mode_name(mode)
              << ", hash seed " << cfg.seed << "): " << detail << "; ops:";
          for (const BorderOp& h : history) {
            out << ' ';
            switch (h.kind) {
              case OpKind::Prepend: out << "P(" << static_cast<char>(h.letter) << ')'; break;
              case OpKind::Append: out << "A(" << static_cast<char>(h.letter) << ')'; break;
              case OpKind::DeleteFirst: out << "DF"; break;
              case OpKind::DeleteLast: out << "DL"; break;
            }
          }
          result.first_mismatch = out.str();
        }
        break;
      }
    }
    collect_witness(parties, result);
  }
  return result;
}

SuiteResult run_oscillation_suite(const OscillationSuiteOptions& options) {
  SuiteResult result;
  result.name = "oscillation";
  const int lengths[] = {64, 256, 1024};
  const int ks[] = {1, 3, 8};
  for (int case_id = 0; case_id < 27; ++case_id) {
    std::mt19937_64 rng(derive_seed(options.seed, static_cast<std::uint64_t>(case_id)));
    int n = lengths[case_id % 3];
    int k = ks[(case_id / 3) % 3];
    int pattern = case_id / 9;  // 0 drain, 1 sweep, 2 boundary oscillation
    OrderMode mode = case_id % 2 == 0 ? OrderMode::Krf : OrderMode::Lex;
    HashConfig cfg = HashConfig::from_seed(k, derive_seed(options.seed, 31 + case_id));
    std::vector<Letter> s = random_letters(rng, static_cast<std::size_t>(n + 2 * k), 4);

    std::vector<Party> parties;
    parties.push_back(Party{"oracle", make_engine(EngineKind::Oracle, cfg, mode)});
    parties.push_back(Party{"two-stack", make_engine(EngineKind::TwoStack, cfg, mode)});
    parties.push_back(Party{"two-layer/progressing",
                            make_engine(EngineKind::TwoLayer, cfg, mode)});
    parties.push_back(Party{"two-layer/fixed",
                            make_engine(EngineKind::TwoLayer, cfg, mode, BlockScheme::fixed(5))});

    ++result.cases;
    std::size_t cursor = 0;
    auto next_letter = [&] { return s[cursor++ % s.size()]; };
    auto apply = [&](OpKind op, Letter letter) {
      std::string detail;
      ++result.ops;
      if (!step_parties(parties, op, letter, detail)) {
        ++result.mismatches;
        if (result.first_mismatch.empty()) {
          std::ostringstream out;
          out << "oscillation suite seed " << options.seed << " case " << case_id << ": " << detail;
          result.first_mismatch = out.str();
        }
        return false;
      }
      return true;
    };
    bool live = true;
    for (int i = 0; live && i < n; ++i) live = apply(OpKind::Append, next_letter());
    if (pattern == 0) {
      // Alternate end deletions until empty, forcing repeated re-centering.
      bool front = true;
      while (live && parties[0].engine->size() > 0) {
        live = apply(front ? OpKind::DeleteFirst : OpKind::DeleteLast, 0);
        front = !front;
      }
    } else if (pattern == 1) {
      // Sweep right, then sweep back left across fresh letters.
      for (int i = 0; live && i < n; ++i) {
        live = apply(OpKind::Append, next_letter()) && apply(OpKind::DeleteFirst, 0);
      }
      for (int i = 0; live && i < n; ++i) {
        live = apply(OpKind::Prepend, next_letter()) && apply(OpKind::DeleteLast, 0);
      }
    } else {
      // Rock back and forth at each end without net movement, then drain.
      for (int round = 0; live && round < n; ++round) {
        Letter a = next_letter();
        live = apply(OpKind::Append, a) && apply(OpKind::DeleteLast, 0) &&
               apply(OpKind::Prepend, a) && apply(OpKind::DeleteFirst, 0);
      }
      while (live && parties[0].engine->size() > 0) live = apply(OpKind::DeleteLast, 0);
    }
    collect_witness(parties, result);
  }
  return result;
}

SuiteResult run_scan_suite(const ScanSuiteOptions& options) {
  SuiteResult result;
  result.name = "scan";
  const int ws[] = {2, 4, 16, 64};
  const int ks[] = {1, 3, 8};
  for (int case_id = 0; case_id < options.cases; ++case_id) {
    std::mt19937_64 rng(derive_seed(options.seed, static_cast<std::uint64_t>(case_id)));
    int w = ws[case_id % 4];
    int k = ks[(case_id / 4) % 3];
    OrderMode mode = (case_id / 12) % 2 == 0 ? OrderMode::Krf : OrderMode::Lex;
    int alphabet = case_id % 5 == 0 ? 2 : 4;
    int min_len = w + k - 1;
    int n = min_len + static_cast<int>(rng() % static_cast<unsigned>(options.max_len - min_len + 1));
    std::uint64_t hash_seed = derive_seed(options.seed, 99 + case_id);
    std::vector<Letter> s = random_letters(rng, static_cast<std::size_t>(n), alphabet);

    ++result.cases;
    result.ops += static_cast<std::uint64_t>(n);
    std::vector<Pos> expected = minimizer_set_brute(s, w, k, mode, hash_seed);
    auto check = [&](const char* label, const std::vector<Pos>& got) {
      if (got == expected) return;
      ++result.mismatches;
      if (result.first_mismatch.empty()) {
        std::ostringstream out;
        out << "scan suite seed " << options.seed << " case " << case_id << " (n " << n << ", w " << w
            << ", k " << k << ", " << order_mode_name(mode) << "): " << label << " returned " << got.size()
            << " positions, reference " << expected.size();
        result.first_mismatch = out.str();
      }
    };
    for (EngineKind kind : {EngineKind::Oracle, EngineKind::Heap, EngineKind::Deque,
                            EngineKind::TwoStack, EngineKind::TwoLayer}) {
      check(engine_name(kind), minimizer_set(s, w, k, kind, mode, hash_seed));
    }
    check("two-layer/fixed",
          minimizer_set(s, w, k, EngineKind::TwoLayer, mode, hash_seed, BlockScheme::fixed(16)));
    check("borrowed-window", minimizer_set_space_efficient(s, w, k, mode, hash_seed));
  }
  return result;
}

SuiteResult run_trie_suite(const TrieSuiteOptions& options) {
  SuiteResult result;
  result.name = "trie";
  const int ells[] = {4, 8, 16};
  const int ks[] = {2, 3, 4};
  for (int case_id = 0; case_id < options.cases; ++case_id) {
    std::mt19937_64 rng(derive_seed(options.seed, static_cast<std::uint64_t>(case_id)));
    int ell = ells[case_id % 3];
    int k = ks[(case_id / 3) % 3];
    OrderMode mode = case_id % 2 == 0 ? OrderMode::Krf : OrderMode::Lex;
    int alphabet = case_id % 4 < 2 ? 2 : 4;
    std::uint64_t hash_seed = derive_seed(options.seed, 55 + case_id);
    int string_count = 1 + static_cast<int>(rng() % 200);
    std::vector<std::string> strings;
    strings.reserve(static_cast<std::size_t>(string_count));
    for (int i = 0; i < string_count; ++i) {
      std::size_t len = 1 + rng() % 64;
      std::string s(len, 'A');
      for (char& c : s) c = static_cast<char>('A' + rng() % static_cast<unsigned>(alphabet));
      strings.push_back(std::move(s));
    }
    Trie trie = Trie::from_strings(strings);

    ++result.cases;
    result.ops += static_cast<std::uint64_t>(trie.edge_count());
    std::vector<int> expected = trie_path_minimizers_brute(trie, ell, k, mode, hash_seed);
    auto check = [&](const char* label, const std::vector<int>& got) {
      if (got == expected) return;
      ++result.mismatches;
      if (result.first_mismatch.empty()) {
        std::ostringstream out;
        out << "trie suite seed " << options.seed << " case " << case_id << " (nodes "
            << trie.node_count() << ", ell " << ell << ", k " << k << ", "
            << order_mode_name(mode) << "): " << label << " disagrees";
        result.first_mismatch = out.str();
      }
    };
    for (EngineKind kind : {EngineKind::Heap, EngineKind::TwoStack, EngineKind::TwoLayer}) {
      EngineStats stats;
      check(engine_name(kind),
            trie_path_minimizers(trie, ell, k, kind, mode, hash_seed,
                                 BlockScheme::progressing(), &stats));
      result.witness_violations += stats.witness_violations;
    }
    check("two-layer/fixed",
          trie_path_minimizers(trie, ell, k, EngineKind::TwoLayer, mode, hash_seed,
                               BlockScheme::fixed(3)));
  }
  return result;
}

SuiteResult run_hash_suite(const HashSuiteOptions& options) {
  SuiteResult result;
  result.name = "hash";
  for (int case_id = 0; case_id < options.cases; ++case_id) {
    std::mt19937_64 rng(derive_seed(options.seed, static_cast<std::uint64_t>(case_id)));
    int k = 1 + static_cast<int>(rng() % static_cast<unsigned>(options.max_k));
    int n = k + static_cast<int>(rng() % static_cast<unsigned>(options.max_len - k + 1));
    int alphabet = case_id % 2 == 0 ? 4 : 26;
    HashConfig cfg = HashConfig::from_seed(k, derive_seed(options.seed, 13 + case_id));
    std::vector<Letter> s = random_letters(rng, static_cast<std::size_t>(n), alphabet);
    std::span<const Letter> sp(s);

    ++result.cases;
    result.ops += static_cast<std::uint64_t>(n);
    std::vector<std::uint64_t> direct;
    for (int p = 0; p + k <= n; ++p)
      direct.push_back(krf_direct(sp.subspan(static_cast<std::size_t>(p),
                                             static_cast<std::size_t>(k)), cfg));
    auto fail = [&](const char* which, int p) {
      ++result.mismatches;
      if (result.first_mismatch.empty()) {
        std::ostringstream out;
        out << "hash suite seed " << options.seed << " case " << case_id << " (n " << n
            << ", k " << k << "): " << which
            << " disagrees with the direct fingerprint at position " << p;
        result.first_mismatch = out.str();
      }
    };
    std::uint64_t rolled = direct.front();
    for (int p = 1; p < static_cast<int>(direct.size()); ++p) {
      rolled = roll_right(rolled, s[static_cast<std::size_t>(p - 1)],
                          s[static_cast<std::size_t>(p - 1 + k)], cfg);
      if (rolled != direct[static_cast<std::size_t>(p)]) {
        fail("roll_right", p);
        break;
      }
    }
    rolled = direct.back();
    for (int p = static_cast<int>(direct.size()) - 2; p >= 0; --p) {
      rolled = roll_left(rolled, s[static_cast<std::size_t>(p)],
                         s[static_cast<std::size_t>(p + k)], cfg);
      if (rolled != direct[static_cast<std::size_t>(p)]) {
        fail("roll_left", p);
        break;
      }
    }
  }
  return result;
}

}  // namespace sdmin
