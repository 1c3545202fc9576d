#include <doctest.h>

#include <random>

#include "hospec/errors.hpp"
#include "hospec/graph.hpp"
#include "oracles.hpp"

using namespace hospec;

TEST_CASE("graph6 small examples") {
  const Graph k2 = parse_graph6("A_");
  CHECK(k2.vertex_count() == 2);
  CHECK(k2.edge_count() == 1);
  const Graph e2 = parse_graph6("A?");
  CHECK(e2.vertex_count() == 2);
  CHECK(e2.edge_count() == 0);
  CHECK(to_graph6(k2) == "A_");
  CHECK(to_graph6(Graph(0)) == "?");
  CHECK(parse_graph6(">>graph6<<A_\n") == k2);
}

TEST_CASE("graph6 round trip on random graphs") {
  std::mt19937 rng(20261016);
  std::uniform_int_distribution<int> size(0, 70);
  for (int i = 0; i < 100; ++i) {
    const Graph g = oracle::random_graph(rng, size(rng), 0.3);
    const std::string text = to_graph6(g);
    CHECK(parse_graph6(text) == g);
  }
}

TEST_CASE("graph6 long header") {
  const Graph p = path_graph(63);
  const std::string text = to_graph6(p);
  CHECK(text[0] == '~');
  CHECK(parse_graph6(text) == p);
}

TEST_CASE("graph6 rejects malformed input with an offset") {
  CHECK_THROWS_AS(parse_graph6(""), ParseError);
  CHECK_THROWS_AS(parse_graph6("A"), ParseError);
  CHECK_THROWS_AS(parse_graph6("A_?"), ParseError);  // trailing byte
  CHECK_THROWS_AS(parse_graph6("A`"), ParseError);   // nonzero padding
  try {
    parse_graph6("B\x01");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.offset() == 1);
  }
}

TEST_CASE("graph constructors") {
  CHECK(path_graph(4).edge_count() == 3);
  CHECK(cycle_graph(5).edge_count() == 5);
  CHECK(star_graph(5).degree(0) == 4);
  CHECK(complete_graph(5).edge_count() == 10);
  CHECK(empty_graph(3).edge_count() == 0);
  CHECK_THROWS_AS(Graph(3, {{0, 0}}), DomainError);
  CHECK_THROWS_AS(Graph(3, {{0, 1}, {1, 0}}), DomainError);
  CHECK_THROWS_AS(Graph(3, {{0, 3}}), DomainError);
}

TEST_CASE("structural queries") {
  CHECK(path_graph(5).is_tree());
  CHECK_FALSE(cycle_graph(5).is_tree());
  CHECK(cycle_graph(6).is_bipartite());
  CHECK_FALSE(cycle_graph(5).is_bipartite());
  const Graph u = disjoint_union(cycle_graph(4), Graph(1));
  CHECK(u.vertex_count() == 5);
  CHECK(u.components().size() == 2);
  CHECK_FALSE(u.is_connected());
  CHECK(path_graph(5).without_vertex(2).components().size() == 2);
}

TEST_CASE("edge_subgraph relabels densely") {
  const Graph p = path_graph(5);  // edges 0-1,1-2,2-3,3-4
  const Graph mid = edge_subgraph(p, 0b0110);
  CHECK(mid.vertex_count() == 3);
  CHECK(mid.edge_count() == 2);
  CHECK(mid.is_tree());
}

TEST_CASE("relabeling preserves isomorphism type") {
  std::mt19937 rng(7);
  for (int i = 0; i < 20; ++i) {
    const Graph g = oracle::random_graph(rng, 6, 0.5);
    const auto perm = oracle::random_permutation(rng, 6);
    CHECK(oracle::isomorphic(g, g.relabeled(perm)));
  }
}

TEST_CASE("json round trip") {
  const Graph g = cycle_graph(5);
  const auto j = to_json(g);
  CHECK(j["n"] == 5);
  CHECK(graph_from_json(j) == g);
}
