#include <catch2/catch_amalgamated.hpp>

#include "mtd/enumerate.hpp"
#include "mtd/tree.hpp"

using namespace mtd;

TEST_CASE("tree construction validates input") {
  CHECK_THROWS_AS(Tree::from_edges(0, {}), std::invalid_argument);
  CHECK_THROWS_AS(Tree::from_edges(3, {{0, 1}}), std::invalid_argument);  // too few edges
  CHECK_THROWS_AS(Tree::from_edges(2, {{0, 0}}), std::invalid_argument);  // self loop
  CHECK_THROWS_AS(Tree::from_edges(3, {{0, 1}, {0, 1}}), std::invalid_argument);  // duplicate
  CHECK_THROWS_AS(Tree::from_edges(4, {{0, 1}, {2, 3}, {0, 1}}), std::invalid_argument);
  CHECK_THROWS_AS(Tree::from_edges(3, {{0, 1}, {1, 5}}), std::invalid_argument);  // bad id
  CHECK_NOTHROW(Tree::from_edges(1, {}));
}

TEST_CASE("edge order fixes adjacency order") {
  Tree t = Tree::from_edges(4, {{1, 0}, {1, 2}, {3, 1}});
  CHECK(t.neighbors(1) == std::vector<Vertex>{0, 2, 3});
  CHECK(t.neighbors(0) == std::vector<Vertex>{1});
}

TEST_CASE("from_adjacency keeps the given order and validates symmetry") {
  Tree t = Tree::from_adjacency({{2, 1}, {0}, {0}});
  CHECK(t.neighbors(0) == std::vector<Vertex>{2, 1});
  CHECK_THROWS_AS(Tree::from_adjacency({{1}, {}}), std::invalid_argument);
}

TEST_CASE("root_at on the 3-path") {
  Tree p3 = gen_path(3);
  RootedTree mid = root_at(p3, 1);
  CHECK(mid.children[1] == std::vector<Vertex>{0, 2});
  CHECK(mid.subtree_size == std::vector<int>{1, 3, 1});
  RootedTree end = root_at(p3, 0);
  CHECK(end.children[0] == std::vector<Vertex>{1});
  CHECK(end.children[1] == std::vector<Vertex>{2});
  CHECK(end.subtree_size == std::vector<int>{3, 2, 1});
}

TEST_CASE("root_at star re-rooted at a leaf") {
  Tree star = gen_star(5);
  RootedTree rt = root_at(star, 2);
  CHECK(rt.children[2] == std::vector<Vertex>{0});
  CHECK(rt.children[0] == std::vector<Vertex>{1, 3, 4});
  CHECK(rt.subtree_size[0] == 4);
  CHECK(rt.subtree_size[2] == 5);
}

TEST_CASE("gravity root on canonical shapes") {
  CHECK(gravity_root(gen_path(3)) == 1);
  CHECK(gravity_root(gen_path(15)) == 7);
  CHECK(gravity_root(gen_star(6)) == 0);
  CHECK(gravity_root(Tree::from_edges(2, {{0, 1}})) == 0);  // tie broken to smallest id
}

TEST_CASE("gravity root property: every component at most n/2") {
  for (int n = 1; n <= 9; ++n) {
    FreeTreeEnumerator en(n);
    while (auto t = en.next()) {
      Vertex r = gravity_root(*t);
      RootedTree rt = root_at(*t, r);
      for (Vertex c : rt.children[r]) CHECK(2 * rt.subtree_size[c] <= n);
      if (n > 2) CHECK(rt.children[r].size() >= 2);
    }
  }
}

TEST_CASE("partition on the 15-path: the max subtree alone on one side") {
  Partition p = partition_at_gravity_root(gen_path(15));
  CHECK(p.shared_root == 7);
  CHECK(p.t1_vertices.size() == 8);
  CHECK(p.t2_vertices.size() == 8);
}

TEST_CASE("partition on the 31-vertex complete binary tree") {
  Partition p = partition_at_gravity_root(gen_complete_binary(5));
  CHECK(p.t1_vertices.size() == 16);
  CHECK(p.t2_vertices.size() == 16);
}

TEST_CASE("partition greedy alternation on a 7-star") {
  Partition p = partition_at_gravity_root(gen_star(7));
  CHECK(p.t1_vertices.size() == 4);
  CHECK(p.t2_vertices.size() == 4);
}

TEST_CASE("partition invariants, exhaustive to n = 12") {
  for (int n = 3; n <= 12; ++n) {
    FreeTreeEnumerator en(n);
    while (auto t = en.next()) {
      Partition p = partition_at_gravity_root(*t);
      CHECK(p.t1_vertices.size() >= p.t2_vertices.size());
      CHECK(3 * static_cast<int>(p.t1_vertices.size()) <= 2 * n + 1);
      // t1 and t2 cover all vertices and overlap only in the shared root
      std::vector<int> count(n, 0);
      for (Vertex v : p.t1_vertices) ++count[v];
      for (Vertex v : p.t2_vertices) ++count[v];
      for (Vertex v = 0; v < n; ++v) CHECK(count[v] == (v == p.shared_root ? 2 : 1));
    }
  }
  CHECK_THROWS_AS(partition_at_gravity_root(gen_path(2)), std::invalid_argument);
}

TEST_CASE("generators") {
  CHECK(gen_complete_binary(5).n() == 31);
  CHECK(gen_path(15).edge_list().size() == 14);
  Tree a = gen_random(10, 42), b = gen_random(10, 42);
  CHECK(a.edge_list() == b.edge_list());
  CHECK(gen_random(10, 43).edge_list() != a.edge_list());
  for (int n : {2, 3, 17, 100}) CHECK(gen_random(n, 7).n() == n);
}
