#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "sdmin/block_scheme.hpp"
#include "sdmin/engine.hpp"

namespace sdmin {

// Letter-labelled trie with canonical node ids: nodes are numbered in
// depth-first preorder with children visited in letter order, so the same
// string set always yields the same ids.  Node 0 is the root (no letter).
class Trie {
 public:
  static Trie from_strings(const std::vector<std::string>& strings);

  int node_count() const { return static_cast<int>(nodes_.size()); }
  int edge_count() const { return node_count() - 1; }
  int parent(int u) const { return nodes_[static_cast<std::size_t>(u)].parent; }
  Letter letter(int u) const { return nodes_[static_cast<std::size_t>(u)].letter; }
  int depth(int u) const { return nodes_[static_cast<std::size_t>(u)].depth; }
  const std::vector<int>& children(int u) const {
    return nodes_[static_cast<std::size_t>(u)].children;
  }
  int max_depth() const;

  // Node reached from the root by the letters of `s`, or -1 if absent.
  int walk(std::string_view s) const;

 private:
  struct Node {
    int parent = -1;
    Letter letter = 0;
    int depth = 0;
    std::vector<int> children;  // sorted by letter
  };

  std::vector<Node> nodes_{Node{}};
};

// For every node u of depth >= ell, considers the window made of the last
// ell letters on the root-to-u path, read from u upward, and finds its
// minimizing length-k fragment (leftmost on ties, i.e. nearest to u).  The
// result maps u to the ancestor where that fragment starts: a fragment at
// window offset j starts at the ancestor of depth depth(u) - j.  Nodes
// shallower than ell map to -1.
//
// One engine follows a depth-first traversal of the trie: entering an edge
// prepends the child's letter (and trims the far end once the window is
// full), leaving an edge undoes both, so the whole trie costs at most four
// engine operations per edge.  The engine must support all four border
// operations; the monotonic-queue engine is rejected with
// unsupported_operation.
std::vector<int> trie_path_minimizers(const Trie& trie, int ell, int k, EngineKind kind,
                                      OrderMode mode, std::uint64_t seed,
                                      const BlockScheme& scheme = BlockScheme::progressing(),
                                      EngineStats* stats_out = nullptr);

// Independent reference: materializes each node's window and scans it.
std::vector<int> trie_path_minimizers_brute(const Trie& trie, int ell, int k, OrderMode mode,
                                            std::uint64_t seed);

}  // namespace sdmin
