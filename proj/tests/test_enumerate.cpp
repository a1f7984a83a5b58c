#include <catch2/catch_amalgamated.hpp>
#include <set>

#include "mtd/enumerate.hpp"

using namespace mtd;

namespace {

int count_rooted(int n) {
  RootedTreeEnumerator en(n);
  int c = 0;
  while (en.next()) ++c;
  return c;
}

int count_free(int n) {
  FreeTreeEnumerator en(n);
  int c = 0;
  while (en.next()) ++c;
  return c;
}

/// Brute-force class counts: every rooted tree on n vertices has a labeling
/// where each vertex's parent has a smaller id, so walking all parent
/// sequences and deduplicating by canonical string covers every class.
std::pair<int, int> brute_force_counts(int n) {
  std::set<std::string> rooted, free_trees;
  std::vector<int> parent(n, -1);
  auto rec = [&](auto&& self, int i) -> void {
    if (i == n) {
      std::vector<std::pair<Vertex, Vertex>> edges;
      for (int v = 1; v < n; ++v) edges.emplace_back(parent[v], v);
      Tree t = Tree::from_edges(n, edges);
      rooted.insert(detail::canonical_rooted_string(t, 0));
      free_trees.insert(detail::canonical_free_string(t));
      return;
    }
    for (int p = 0; p < i; ++p) {
      parent[i] = p;
      self(self, i + 1);
    }
  };
  rec(rec, 1);
  return {static_cast<int>(rooted.size()), static_cast<int>(free_trees.size())};
}

}  // namespace

TEST_CASE("rooted class counts for n up to 10") {
  const int expected[] = {1, 1, 2, 4, 9, 20, 48, 115, 286, 719};
  for (int n = 1; n <= 10; ++n) CHECK(count_rooted(n) == expected[n - 1]);
}

TEST_CASE("free class counts for n up to 10") {
  const int expected[] = {1, 1, 1, 2, 3, 6, 11, 23, 47, 106};
  for (int n = 1; n <= 10; ++n) CHECK(count_free(n) == expected[n - 1]);
}

TEST_CASE("enumerators agree with brute force for n up to 7") {
  for (int n = 1; n <= 7; ++n) {
    auto [r, f] = brute_force_counts(n);
    CHECK(count_rooted(n) == r);
    CHECK(count_free(n) == f);
  }
}

TEST_CASE("no duplicate classes in either stream") {
  std::set<std::string> seen;
  RootedTreeEnumerator en(8);
  while (auto rt = en.next())
    CHECK(seen.insert(detail::canonical_rooted_string(rt->tree, rt->root)).second);
  std::set<std::string> seen_free;
  FreeTreeEnumerator fe(9);
  while (auto t = fe.next()) CHECK(seen_free.insert(detail::canonical_free_string(*t)).second);
}

TEST_CASE("size cap enforced") {
  CHECK_THROWS_AS(RootedTreeEnumerator(15), std::invalid_argument);
  CHECK_THROWS_AS(RootedTreeEnumerator(0), std::invalid_argument);
  CHECK(count_rooted(1) == 1);
}
