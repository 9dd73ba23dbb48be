#include "sdmin/trie.hpp"

#include <algorithm>
#include <stdexcept>

#include "sdmin/engine_factory.hpp"

namespace sdmin {

Trie Trie::from_strings(const std::vector<std::string>& strings) {
  // Build with ad-hoc ids first, then renumber in preorder.
  Trie raw;
  for (const std::string& s : strings) {
    int u = 0;
    for (char ch : s) {
      Letter a = static_cast<Letter>(static_cast<unsigned char>(ch));
      const std::vector<int>& kids = raw.nodes_[static_cast<std::size_t>(u)].children;
      auto it = std::find_if(kids.begin(), kids.end(),
                             [&](int v) { return raw.letter(v) == a; });
      if (it != kids.end()) {
        u = *it;
        continue;
      }
      int v = raw.node_count();
      raw.nodes_.push_back(Node{u, a, raw.depth(u) + 1, {}});
      auto& mutable_kids = raw.nodes_[static_cast<std::size_t>(u)].children;
      mutable_kids.insert(std::upper_bound(mutable_kids.begin(), mutable_kids.end(), v,
                                           [&](int lhs, int rhs) {
                                             return raw.letter(lhs) < raw.letter(rhs);
                                           }),
                          v);
      u = v;
    }
  }

  Trie out;
  out.nodes_.clear();
  std::vector<int> remap(static_cast<std::size_t>(raw.node_count()), -1);
  std::vector<int> stack{0};
  while (!stack.empty()) {
    int u = stack.back();
    stack.pop_back();
    int id = out.node_count();
    remap[static_cast<std::size_t>(u)] = id;
    const Node& n = raw.nodes_[static_cast<std::size_t>(u)];
    int parent = n.parent < 0 ? -1 : remap[static_cast<std::size_t>(n.parent)];
    out.nodes_.push_back(Node{parent, n.letter, n.depth, {}});
    if (parent >= 0) out.nodes_[static_cast<std::size_t>(parent)].children.push_back(id);
    // Reverse order so the smallest letter is visited (and numbered) first.
    for (auto it = n.children.rbegin(); it != n.children.rend(); ++it) stack.push_back(*it);
  }
  return out;
}

int Trie::max_depth() const {
  int best = 0;
  for (const Node& n : nodes_) best = std::max(best, n.depth);
  return best;
}

int Trie::walk(std::string_view s) const {
  int u = 0;
  for (char ch : s) {
    Letter a = static_cast<Letter>(static_cast<unsigned char>(ch));
    const std::vector<int>& kids = children(u);
    int next = -1;
    for (int v : kids)
      if (letter(v) == a) {
        next = v;
        break;
      }
    if (next < 0) return -1;
    u = next;
  }
  return u;
}

namespace {

void check_trie_args(int ell, int k) {
  if (k < 1) throw std::invalid_argument("fragment length must be at least 1");
  if (ell < k) throw std::invalid_argument("window must be at least as long as a fragment");
}

}  // namespace

std::vector<int> trie_path_minimizers(const Trie& trie, int ell, int k, EngineKind kind,
                                      OrderMode mode, std::uint64_t seed,
                                      const BlockScheme& scheme, EngineStats* stats_out) {
  check_trie_args(ell, k);
  if (kind == EngineKind::Deque)
    throw unsupported_operation(
        "trie traversal needs deletions at both window ends; the monotonic queue supports one");
  HashConfig cfg = HashConfig::from_seed(k, seed);
  auto engine = make_engine(kind, cfg, mode, scheme);

  std::vector<int> result(static_cast<std::size_t>(trie.node_count()), -1);
  // The engine holds the last min(depth, ell) path letters read from the
  // current node upward: entering node u prepends its letter, so position
  // start_pos()+j corresponds to the ancestor of depth depth(u)-j.
  std::vector<int> path_nodes{0};       // path_nodes[d] = node at depth d
  std::vector<Letter> path_letters;     // path_letters[d-1] = letter of depth-d node

  struct Frame {
    int node;
    std::size_t next_child = 0;
  };
  std::vector<Frame> frames{Frame{0}};
  auto enter = [&](int u) {
    path_nodes.push_back(u);
    path_letters.push_back(trie.letter(u));
    engine->prepend(trie.letter(u));
    int d = trie.depth(u);
    if (engine->size() > ell) engine->delete_last();
    if (d >= ell) {
      auto m = engine->minimizer();
      assert(m.has_value());
      auto j = m->pos - engine->start_pos();
      result[static_cast<std::size_t>(u)] =
          path_nodes[static_cast<std::size_t>(d - static_cast<int>(j))];
    }
  };
  auto leave = [&](int u) {
    int d = trie.depth(u);
    engine->delete_first();
    if (d > ell) engine->append(path_letters[static_cast<std::size_t>(d - ell - 1)]);
    path_nodes.pop_back();
    path_letters.pop_back();
  };
  while (!frames.empty()) {
    Frame& top = frames.back();
    const std::vector<int>& kids = trie.children(top.node);
    if (top.next_child < kids.size()) {
      int child = kids[top.next_child++];
      enter(child);
      frames.push_back(Frame{child});
    } else {
      int u = top.node;
      frames.pop_back();
      if (u != 0) leave(u);
    }
  }
  if (stats_out) *stats_out = engine->stats();
  return result;
}

std::vector<int> trie_path_minimizers_brute(const Trie& trie, int ell, int k, OrderMode mode,
                                            std::uint64_t seed) {
  check_trie_args(ell, k);
  HashConfig cfg = HashConfig::from_seed(k, seed);
  std::vector<int> result(static_cast<std::size_t>(trie.node_count()), -1);
  std::vector<Letter> window(static_cast<std::size_t>(ell));
  for (int u = 0; u < trie.node_count(); ++u) {
    if (trie.depth(u) < ell) continue;
    int v = u;
    for (int j = 0; j < ell; ++j) {
      window[static_cast<std::size_t>(j)] = trie.letter(v);
      v = trie.parent(v);
    }
    std::span<const Letter> win(window);
    int best = 0;
    auto less_at = [&](int a, int b) {
      if (mode == OrderMode::Krf)
        return krf_direct(win.subspan(static_cast<std::size_t>(a), static_cast<std::size_t>(k)),
                          cfg) <
               krf_direct(win.subspan(static_cast<std::size_t>(b), static_cast<std::size_t>(k)),
                          cfg);
      return std::lexicographical_compare(win.begin() + a, win.begin() + a + k, win.begin() + b,
                                          win.begin() + b + k);
    };
    for (int j = 1; j + k <= ell; ++j)
      if (less_at(j, best)) best = j;
    int anc = u;
    for (int j = 0; j < best; ++j) anc = trie.parent(anc);
    result[static_cast<std::size_t>(u)] = anc;
  }
  return result;
}

}  // namespace sdmin
