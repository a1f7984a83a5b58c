#ifndef MTD_ENUMERATE_HPP
#define MTD_ENUMERATE_HPP

#include <optional>
#include <string>
#include <unordered_set>
#include <vector>

#include "mtd/tree.hpp"

namespace mtd {

inline constexpr int kEnumerationCap = 14;

namespace detail {

/// Canonical level-sequence successor (Beyer-Hedetniemi). Sequences are
/// visited in decreasing lexicographic order, starting from the path
/// [1,2,...,n] and ending at the star [1,2,2,...,2]; each rooted tree
/// isomorphism class appears exactly once.
inline bool level_seq_successor(std::vector<int>& levels) {
  const int n = static_cast<int>(levels.size());
  int p = -1;
  for (int i = n - 1; i >= 0; --i)
    if (levels[i] > 2) {
      p = i;
      break;
    }
  if (p < 0) return false;
  int q = -1;
  for (int i = p - 1; i >= 0; --i)
    if (levels[i] == levels[p] - 1) {
      q = i;
      break;
    }
  std::vector<int> block(levels.begin() + q, levels.begin() + p);
  for (int i = p; i < n; ++i) levels[i] = block[(i - p) % block.size()];
  return true;
}

inline Tree tree_from_level_seq(const std::vector<int>& levels) {
  const int n = static_cast<int>(levels.size());
  std::vector<std::pair<Vertex, Vertex>> edges;
  std::vector<int> stack;  // vertices on the current root path
  for (int i = 0; i < n; ++i) {
    while (!stack.empty() && levels[stack.back()] != levels[i] - 1) stack.pop_back();
    if (!stack.empty()) edges.emplace_back(stack.back(), i);
    stack.push_back(i);
  }
  return Tree::from_edges(n, edges);
}

/// AHU canonical string of the tree rooted at `root` (children sorted).
inline std::string canonical_rooted_string(const Tree& tree, Vertex root) {
  RootedTree rt = root_at(tree, root);
  std::vector<std::string> label(tree.n());
  auto order = rt.preorder();
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    std::vector<std::string> subs;
    for (Vertex c : rt.children[*it]) subs.push_back(std::move(label[c]));
    std::sort(subs.begin(), subs.end(), std::greater<>());
    std::string s = "(";
    for (auto& x : subs) s += x;
    s += ")";
    label[*it] = std::move(s);
  }
  return label[root];
}

inline std::vector<Vertex> centroids(const Tree& tree) {
  const int n = tree.n();
  RootedTree rt = root_at(tree, 0);
  std::vector<Vertex> out;
  for (Vertex v = 0; v < n; ++v) {
    int mx = (v == 0) ? 0 : n - rt.subtree_size[v];
    for (Vertex c : rt.children[v]) mx = std::max(mx, rt.subtree_size[c]);
    if (2 * mx <= n) out.push_back(v);
  }
  return out;
}

/// Isomorphism invariant of the underlying free tree: minimum canonical
/// rooted string over the (one or two) centroids.
inline std::string canonical_free_string(const Tree& tree) {
  std::string best;
  for (Vertex c : centroids(tree)) {
    std::string s = canonical_rooted_string(tree, c);
    if (best.empty() || s < best) best = std::move(s);
  }
  return best;
}

}  // namespace detail

/// Streams one representative per rooted-tree isomorphism class, rooted at
/// vertex 0 with preorder labels and canonical child order.
class RootedTreeEnumerator {
public:
  explicit RootedTreeEnumerator(int n) : n_(n) {
    if (n < 1 || n > kEnumerationCap)
      throw std::invalid_argument("enumerate: n must be in [1, 14]");
    levels_.resize(n);
    for (int i = 0; i < n; ++i) levels_[i] = i + 1;
  }

  std::optional<RootedTree> next() {
    if (done_) return std::nullopt;
    Tree t = detail::tree_from_level_seq(levels_);
    done_ = !detail::level_seq_successor(levels_);
    return root_at(t, 0);
  }

private:
  int n_;
  std::vector<int> levels_;
  bool done_ = false;
};

/// Streams one representative per free-tree isomorphism class, obtained by
/// deduplicating the rooted stream on the canonical centroid rooting.
class FreeTreeEnumerator {
public:
  explicit FreeTreeEnumerator(int n) : inner_(n) {}

  std::optional<Tree> next() {
    while (auto rt = inner_.next()) {
      std::string key = detail::canonical_free_string(rt->tree);
      if (seen_.insert(std::move(key)).second) return rt->tree;
    }
    return std::nullopt;
  }

private:
  RootedTreeEnumerator inner_;
  std::unordered_set<std::string> seen_;
};

}  // namespace mtd

#endif
