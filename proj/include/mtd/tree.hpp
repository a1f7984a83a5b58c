#ifndef MTD_TREE_HPP
#define MTD_TREE_HPP

#include <algorithm>
#include <cstdint>
#include <queue>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace mtd {

using Vertex = int;

/// Unrooted tree with per-vertex ordered adjacency. The adjacency order of
/// each vertex defines the combinatorial embedding used by the ordered-tree
/// drawing algorithms.
class Tree {
public:
  /// Builds a tree from an edge list. The position of an edge in the list
  /// fixes the adjacency order of both endpoints (first appearance wins).
  /// Throws std::invalid_argument unless the input is a tree on n vertices.
  static Tree from_edges(int n, const std::vector<std::pair<Vertex, Vertex>>& edges) {
    if (n < 1) throw std::invalid_argument("tree: n must be >= 1");
    if (static_cast<int>(edges.size()) != n - 1)
      throw std::invalid_argument("tree: expected exactly n-1 edges");
    Tree t;
    t.n_ = n;
    t.adj_.assign(n, {});
    for (auto [u, v] : edges) {
      if (u < 0 || u >= n || v < 0 || v >= n || u == v)
        throw std::invalid_argument("tree: bad edge endpoint");
      for (Vertex w : t.adj_[u])
        if (w == v) throw std::invalid_argument("tree: duplicate edge");
      t.adj_[u].push_back(v);
      t.adj_[v].push_back(u);
    }
    // n-1 edges + connected => acyclic
    std::vector<char> seen(n, 0);
    std::queue<Vertex> q;
    q.push(0);
    seen[0] = 1;
    int reached = 1;
    while (!q.empty()) {
      Vertex u = q.front();
      q.pop();
      for (Vertex v : t.adj_[u])
        if (!seen[v]) {
          seen[v] = 1;
          ++reached;
          q.push(v);
        }
    }
    if (reached != n) throw std::invalid_argument("tree: not connected");
    return t;
  }

  /// Builds a tree directly from ordered adjacency lists (the embedding).
  static Tree from_adjacency(std::vector<std::vector<Vertex>> adj) {
    const int n = static_cast<int>(adj.size());
    Tree t;
    t.n_ = n;
    t.adj_ = std::move(adj);
    std::vector<std::pair<Vertex, Vertex>> edges;
    for (Vertex u = 0; u < n; ++u)
      for (Vertex v : t.adj_[u]) {
        if (v < 0 || v >= n || v == u) throw std::invalid_argument("tree: bad neighbor id");
        if (u < v) edges.emplace_back(u, v);
        if (std::find(t.adj_[v].begin(), t.adj_[v].end(), u) == t.adj_[v].end())
          throw std::invalid_argument("tree: asymmetric adjacency");
      }
    // reuse the edge-list validation for counts/connectivity/duplicates
    Tree check = from_edges(n, edges);
    (void)check;
    return t;
  }

  int n() const { return n_; }
  const std::vector<Vertex>& neighbors(Vertex v) const { return adj_[v]; }

  std::vector<std::pair<Vertex, Vertex>> edge_list() const {
    std::vector<std::pair<Vertex, Vertex>> out;
    out.reserve(n_ - 1);
    for (Vertex u = 0; u < n_; ++u)
      for (Vertex v : adj_[u])
        if (u < v) out.emplace_back(u, v);
    return out;
  }

private:
  int n_ = 0;
  std::vector<std::vector<Vertex>> adj_;
};

/// Tree plus a root: ordered children lists (adjacency order with the parent
/// removed) and cached subtree sizes.
struct RootedTree {
  Tree tree;
  Vertex root = 0;
  std::vector<Vertex> parent;                 // -1 at the root
  std::vector<std::vector<Vertex>> children;  // adjacency order, parent removed
  std::vector<int> subtree_size;

  /// Vertices in a root-first order (every parent precedes its children).
  std::vector<Vertex> preorder() const {
    std::vector<Vertex> order;
    order.reserve(tree.n());
    std::vector<Vertex> stack{root};
    while (!stack.empty()) {
      Vertex u = stack.back();
      stack.pop_back();
      order.push_back(u);
      for (auto it = children[u].rbegin(); it != children[u].rend(); ++it)
        stack.push_back(*it);
    }
    return order;
  }
};

inline RootedTree root_at(const Tree& tree, Vertex root) {
  const int n = tree.n();
  if (root < 0 || root >= n) throw std::invalid_argument("root_at: root out of range");
  RootedTree rt;
  rt.tree = tree;
  rt.root = root;
  rt.parent.assign(n, -1);
  rt.children.assign(n, {});
  rt.subtree_size.assign(n, 1);
  std::vector<Vertex> order;
  order.reserve(n);
  std::vector<Vertex> stack{root};
  std::vector<char> seen(n, 0);
  seen[root] = 1;
  while (!stack.empty()) {
    Vertex u = stack.back();
    stack.pop_back();
    order.push_back(u);
    for (Vertex v : tree.neighbors(u))
      if (!seen[v]) {
        seen[v] = 1;
        rt.parent[v] = u;
        rt.children[u].push_back(v);
        stack.push_back(v);
      }
  }
  for (auto it = order.rbegin(); it != order.rend(); ++it)
    for (Vertex c : rt.children[*it]) rt.subtree_size[*it] += rt.subtree_size[c];
  return rt;
}

/// Walks from `start` toward the largest component of T \ r until every
/// component has at most n/2 vertices. When several components are jointly
/// largest, steps to the neighbor with the smallest id.
inline Vertex gravity_root(const Tree& tree, Vertex start = 0) {
  const int n = tree.n();
  Vertex r = start;
  for (int iter = 0; iter <= n; ++iter) {
    RootedTree rt = root_at(tree, r);
    Vertex best = -1;
    int best_size = 0;
    for (Vertex c : rt.children[r])
      if (rt.subtree_size[c] > best_size || (rt.subtree_size[c] == best_size && c < best)) {
        best_size = rt.subtree_size[c];
        best = c;
      }
    if (2 * best_size <= n) return r;
    r = best;
  }
  throw std::logic_error("gravity_root: did not converge");  // unreachable
}

/// Split of a gravity-rooted tree into two subtrees sharing only the root,
/// each of at most (2n+1)/3 vertices.
struct Partition {
  std::vector<Vertex> t1_vertices;  // sorted; |t1| >= |t2|
  std::vector<Vertex> t2_vertices;  // sorted
  Vertex shared_root = 0;
};

inline Partition partition_at_gravity_root(const Tree& tree) {
  const int n = tree.n();
  if (n < 3) throw std::invalid_argument("partition: n must be >= 3");
  const Vertex r = gravity_root(tree);
  RootedTree rt = root_at(tree, r);
  const auto& kids = rt.children[r];

  auto collect = [&](Vertex c, std::vector<Vertex>& out) {
    std::vector<Vertex> stack{c};
    while (!stack.empty()) {
      Vertex u = stack.back();
      stack.pop_back();
      out.push_back(u);
      for (Vertex w : rt.children[u]) stack.push_back(w);
    }
  };

  int m = 0;
  std::size_t m_index = 0;
  for (std::size_t i = 0; i < kids.size(); ++i)
    if (rt.subtree_size[kids[i]] > m) {
      m = rt.subtree_size[kids[i]];
      m_index = i;
    }

  std::vector<Vertex> t1{r}, t2{r};
  if (3 * m >= n - 1 && 2 * m <= n) {
    // the subtree of maximum size alone on one side
    collect(kids[m_index], t1);
    for (std::size_t i = 0; i < kids.size(); ++i)
      if (i != m_index) collect(kids[i], t2);
  } else {
    // greedy: subtrees in increasing size order, each to the smaller side;
    // equal side sizes go to t1, equal subtree sizes keep child order
    std::vector<std::size_t> order(kids.size());
    for (std::size_t i = 0; i < kids.size(); ++i) order[i] = i;
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
      return rt.subtree_size[kids[a]] < rt.subtree_size[kids[b]];
    });
    for (std::size_t i : order)
      collect(kids[i], t1.size() <= t2.size() ? t1 : t2);
  }
  if (t1.size() < t2.size()) std::swap(t1, t2);
  std::sort(t1.begin(), t1.end());
  std::sort(t2.begin(), t2.end());
  return Partition{std::move(t1), std::move(t2), r};
}

// ---- generators ----

inline Tree gen_path(int n) {
  std::vector<std::pair<Vertex, Vertex>> edges;
  for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
  return Tree::from_edges(n, edges);
}

/// Complete binary tree with `levels` levels (2^levels - 1 vertices), heap
/// labeling: children of i are 2i+1 and 2i+2.
inline Tree gen_complete_binary(int levels) {
  if (levels < 1) throw std::invalid_argument("gen_complete_binary: levels must be >= 1");
  int n = (1 << levels) - 1;
  std::vector<std::pair<Vertex, Vertex>> edges;
  for (int i = 1; i < n; ++i) edges.emplace_back((i - 1) / 2, i);
  return Tree::from_edges(n, edges);
}

inline Tree gen_star(int n) {
  std::vector<std::pair<Vertex, Vertex>> edges;
  for (int i = 1; i < n; ++i) edges.emplace_back(0, i);
  return Tree::from_edges(n, edges);
}

/// Uniform random labeled tree (Pruefer decoding), deterministic per seed.
inline Tree gen_random(int n, std::uint64_t seed) {
  if (n < 1) throw std::invalid_argument("gen_random: n must be >= 1");
  if (n == 1) return Tree::from_edges(1, {});
  // splitmix64 keeps the sequence identical across platforms
  auto next = [state = seed]() mutable {
    state += 0x9e3779b97f4a7c15ULL;
    std::uint64_t z = state;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  };
  std::vector<int> prufer(n - 2);
  for (int& x : prufer) x = static_cast<int>(next() % static_cast<std::uint64_t>(n));
  std::vector<int> degree(n, 1);
  for (int x : prufer) ++degree[x];
  std::vector<std::pair<Vertex, Vertex>> edges;
  // smallest-leaf decode
  std::priority_queue<int, std::vector<int>, std::greater<>> leaves;
  for (int v = 0; v < n; ++v)
    if (degree[v] == 1) leaves.push(v);
  for (int x : prufer) {
    int leaf = leaves.top();
    leaves.pop();
    edges.emplace_back(leaf, x);
    if (--degree[x] == 1) leaves.push(x);
  }
  int a = leaves.top();
  leaves.pop();
  int b = leaves.top();
  edges.emplace_back(a, b);
  return Tree::from_edges(n, edges);
}

}  // namespace mtd

#endif
