#include <doctest.h>

#include <random>
#include <set>

#include "hospec/census.hpp"
#include "hospec/errors.hpp"
#include "oracles.hpp"

using namespace hospec;

namespace {
std::uint64_t count_connected(const Graph& g, int max_edges) {
  std::uint64_t n = 0;
  for_each_connected_edge_subset(g, max_edges, [&](EdgeMask) { ++n; });
  return n;
}
}  // namespace

TEST_CASE("connected edge subsets of small graphs") {
  CHECK(count_connected(path_graph(3), 64) == 3);
  CHECK(count_connected(cycle_graph(4), 64) == 13);
  CHECK(count_connected(star_graph(5), 64) == 15);
}

TEST_CASE("edge subset enumeration matches brute force") {
  std::mt19937 rng(21);
  for (int i = 0; i < 25; ++i) {
    const Graph g = oracle::random_graph(rng, 4 + i % 5, 0.45);
    if (g.edge_count() > 14) continue;
    std::set<std::uint64_t> fast, slow;
    for_each_connected_edge_subset(g, 64, [&](EdgeMask m) { CHECK(fast.insert(m).second); });
    oracle::for_each_connected_subset(g, [&](std::uint64_t m) { slow.insert(m); });
    CHECK(fast == slow);
  }
}

TEST_CASE("vertex subset enumeration yields connected induced sets once") {
  std::mt19937 rng(22);
  for (int i = 0; i < 15; ++i) {
    const Graph g = oracle::random_graph(rng, 7, 0.4);
    std::set<std::uint64_t> seen;
    for_each_connected_vertex_subset(g, 7, [&](VertexMask m) { CHECK(seen.insert(m).second); });
    std::size_t expected = 0;
    for (std::uint64_t m = 1; m < (1u << 7); ++m) {
      std::vector<Vertex> vs;
      for (int v = 0; v < 7; ++v) {
        if (m >> v & 1) vs.push_back(v);
      }
      if (g.induced(vs).is_connected()) ++expected;
    }
    CHECK(seen.size() == expected);
  }
}

TEST_CASE("budget is enforced") {
  CHECK_THROWS_AS(
      for_each_connected_edge_subset(complete_graph(8), 10, [](EdgeMask) {}, 1000),
      BudgetExceeded);
  CHECK_THROWS_AS(subtree_census(star_graph(30), 5, 100), BudgetExceeded);
  CHECK_NOTHROW(subtree_census(star_graph(6), 5, 100));
}

TEST_CASE("canonical codes") {
  CHECK(tree_canonical_code(path_graph(4)) != tree_canonical_code(star_graph(4)));
  std::mt19937 rng(23);
  for (int i = 0; i < 40; ++i) {
    const int n = 2 + i % 12;
    const Graph t = oracle::random_tree(rng, n);
    const auto perm = oracle::random_permutation(rng, n);
    const auto code = tree_canonical_code(t);
    CHECK(tree_canonical_code(t.relabeled(perm)) == code);
    CHECK(CanonicalTreeCode::from_hex(code.hex()) == code);
    CHECK(CanonicalTreeCode::from_parens(code.parens()) == code);
    const Graph back = tree_from_code(code);
    CHECK(back.vertex_count() == n);
    CHECK(tree_canonical_code(back) == code);
  }
  std::set<CanonicalTreeCode> six;
  for (const auto& t : generate_free_trees(5)) six.insert(tree_canonical_code(t));
  CHECK(six.size() == 6);
}

TEST_CASE("canonical codes separate exactly the isomorphism classes") {
  for (int n = 2; n <= 10; ++n) {
    const auto trees = oracle::free_trees(n);
    std::set<CanonicalTreeCode> codes;
    for (const auto& t : trees) codes.insert(tree_canonical_code(t));
    CHECK(codes.size() == trees.size());
  }
}

TEST_CASE("free tree generation counts") {
  const int expected[] = {1, 1, 1, 2, 3, 6, 11, 23, 47, 106};
  CHECK_THROWS_AS(generate_free_trees(0), DomainError);
  for (int m = 1; m < 10; ++m) {
    const auto trees = generate_free_trees(m);
    CHECK(trees.size() == static_cast<std::size_t>(expected[m]));
    std::set<CanonicalTreeCode> codes;
    for (const auto& t : trees) {
      CHECK(t.is_tree());
      CHECK(t.edge_count() == m);
      codes.insert(tree_canonical_code(t));
    }
    CHECK(codes.size() == trees.size());
    CHECK(trees.size() == oracle::free_trees(m + 1).size());
  }
}

TEST_CASE("named small trees") {
  std::set<CanonicalTreeCode> codes;
  for (int m = 1; m <= 5; ++m) {
    const auto names = small_tree_names(m);
    CHECK(names.size() == generate_free_trees(m).size());
    for (const auto& name : names) {
      const Graph t = small_tree(name);
      CHECK(t.edge_count() == m);
      CHECK(codes.insert(tree_canonical_code(t)).second);
      CHECK(small_tree_name(tree_canonical_code(t)) == name);
    }
  }
}

TEST_CASE("subtree census examples") {
  const Graph s5 = star_graph(5);
  const auto c2 = subtree_census(s5, 2);
  CHECK(c2.total() == 6);
  CHECK(c2.count(tree_canonical_code(path_graph(3))) == 6);
  const auto c3 = subtree_census(path_graph(6), 3);
  CHECK(c3.total() == 3);
  CHECK(c3.count(tree_canonical_code(path_graph(4))) == 3);
  CHECK(c3.count(tree_canonical_code(star_graph(4))) == 0);
  CHECK(count_pattern(star_graph(6), star_graph(4)) == 10);
  const auto j = c3.to_json();
  CHECK(j["m"] == 3);
  CHECK(j["counts"].size() == 1);
}

TEST_CASE("census matches brute force pattern counts") {
  std::mt19937 rng(24);
  for (int i = 0; i < 10; ++i) {
    const Graph t = oracle::random_tree(rng, 9);
    for (int m = 1; m <= 4; ++m) {
      const auto census = subtree_census(t, m);
      std::map<std::string, std::uint64_t> slow;
      oracle::for_each_connected_subset(t, [&](std::uint64_t mask) {
        const Graph sub = edge_subgraph(t, mask);
        if (sub.edge_count() == m) ++slow[oracle::all_roots_form(sub)];
      });
      std::map<std::string, std::uint64_t> fast;
      for (const auto& [code, n] : census.counts) fast[oracle::all_roots_form(tree_from_code(code))] = n;
      CHECK(fast == slow);
    }
  }
}
