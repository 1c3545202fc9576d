#include <doctest.h>

#include <numeric>
#include <random>

#include "hospec/census.hpp"
#include "hospec/constructions.hpp"
#include "hospec/errors.hpp"
#include "hospec/spectrum.hpp"
#include "oracles.hpp"

using namespace hospec;

namespace {

// Searches all permutations for an automorphism sending u to v.
bool brute_force_similar(const Graph& t, Vertex u, Vertex v) {
  std::vector<Vertex> perm(t.vertex_count());
  std::iota(perm.begin(), perm.end(), 0);
  do {
    if (perm[u] == v && is_automorphism(t, perm)) return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

}  // namespace

TEST_CASE("Smith graphs have the right spectral radius") {
  const SmithFamily tilde[] = {SmithFamily::C, SmithFamily::DTilde, SmithFamily::E6Tilde,
                               SmithFamily::E7Tilde, SmithFamily::E8Tilde};
  for (auto f : tilde) {
    CHECK(is_tilde(f));
    const int v = smith_min_vertices(f);
    const bool open_ended = f == SmithFamily::C || f == SmithFamily::DTilde;
    const Graph g = smith_graph(f, open_ended ? v + 2 : v);
    CHECK(g.is_connected());
    CHECK(eigenvalues(g).radius() == doctest::Approx(2.0).epsilon(1e-12));
  }
  const SmithFamily plain[] = {SmithFamily::P, SmithFamily::D, SmithFamily::E6, SmithFamily::E7,
                               SmithFamily::E8};
  for (auto f : plain) {
    CHECK_FALSE(is_tilde(f));
    const Graph g = smith_graph(f, f == SmithFamily::P || f == SmithFamily::D ? 8 : smith_min_vertices(f));
    CHECK(g.is_tree());
    CHECK(eigenvalues(g).radius() < 2.0);
  }
  for (int v = 5; v <= 12; ++v) {
    const Graph dt = smith_graph(SmithFamily::DTilde, v);
    CHECK(dt.vertex_count() == v);
    CHECK(dt.is_tree());
  }
  CHECK(parse_smith_family("Et7") == SmithFamily::E7Tilde);
  CHECK_FALSE(parse_smith_family("X9").has_value());
  CHECK_THROWS_AS(smith_graph(SmithFamily::E6, 7), DomainError);
}

TEST_CASE("Saltire pair") {
  const auto [a, b] = saltire_pair();
  CHECK(is_cospectral(a, b));
  CHECK(a.vertex_count() == 5);
  CHECK(b.vertex_count() == 5);
  CHECK_FALSE(oracle::isomorphic(a, b));
}

TEST_CASE("cospectral vertices of small trees are similar") {
  const auto p3 = cospectral_vertex_pairs(path_graph(3));
  REQUIRE(p3.size() == 1);
  CHECK(p3[0].similar);
  const auto star = cospectral_vertex_pairs(star_graph(4));
  CHECK(star.size() == 3);
  for (const auto& p : star) {
    CHECK(p.similar);
    const auto map = tree_automorphism_mapping(p.tree, p.u, p.v);
    REQUIRE(map.has_value());
    CHECK(is_automorphism(p.tree, *map));
    CHECK((*map)[p.u] == p.v);
  }
}

TEST_CASE("similarity flag matches brute force on small trees") {
  int non_similar = 0;
  for (int n = 2; n <= 9; ++n) {
    for (const auto& t : generate_free_trees(n - 1)) {
      for (const auto& p : cospectral_vertex_pairs(t)) {
        CHECK(is_cospectral(t.without_vertex(p.u), t.without_vertex(p.v)));
        CHECK(p.similar == brute_force_similar(t, p.u, p.v));
        if (!p.similar) ++non_similar;
      }
    }
  }
  CHECK(non_similar == 1);
}

TEST_CASE("coalescence") {
  // P2 rooted at an end, glued to an end of P3, gives P4.
  const Graph g = coalesce(RootedGraph{path_graph(2), 0}, RootedGraph{path_graph(3), 0});
  CHECK(g.vertex_count() == 4);
  CHECK(g.is_tree());
  CHECK(tree_canonical_code(g) == tree_canonical_code(path_graph(4)));
  std::mt19937 rng(51);
  for (int i = 0; i < 10; ++i) {
    const Graph f = oracle::random_tree(rng, 4);
    const Graph t = oracle::random_tree(rng, 6);
    const Graph c = coalesce(RootedGraph{f, 0}, RootedGraph{t, 3});
    CHECK(c.vertex_count() == 9);
    CHECK(c.edge_count() == f.edge_count() + t.edge_count());
    CHECK(c.degree(0) == f.degree(0) + t.degree(3));
  }
}

TEST_CASE("Schwenk pairs") {
  for (const auto& fixture : schwenk_fixtures()) {
    const auto& pair = fixture.pair;
    CHECK_FALSE(pair.similar);
    CHECK(is_cospectral(pair.tree.without_vertex(pair.u), pair.tree.without_vertex(pair.v)));
    for (int legs = 1; legs <= 3; ++legs) {
      const RootedGraph f{star_graph(legs + 1), 0};
      const auto [a, b] = schwenk_pair(f, pair);
      CHECK(is_cospectral(a, b));
      CHECK(tree_canonical_code(a) != tree_canonical_code(b));
      CHECK(subtree_census(a, 5).counts != subtree_census(b, 5).counts);
    }
  }
  const auto p3 = cospectral_vertex_pairs(path_graph(3))[0];
  CHECK_THROWS_AS(schwenk_pair(RootedGraph{path_graph(2), 0}, p3), SimilarPairWarning);
}

TEST_CASE("R6 difference equals the root degree on the designated witness") {
  const auto pair = oriented_for_r6(r6_witness().pair);
  for (int legs = 1; legs <= 4; ++legs) {
    CHECK(verify_r6_difference(RootedGraph{star_graph(legs + 1), 0}, pair) == legs);
  }
  // Root of degree 2 in the middle of a path, with a longer tail elsewhere.
  const RootedGraph f{path_graph(5), 2};
  CHECK(verify_r6_difference(f, pair) == 2);
}

TEST_CASE("graph resolution") {
  CHECK(resolve_graph("P4") == path_graph(4));
  CHECK(resolve_graph("K1,4").edge_count() == 4);
  CHECK(resolve_graph("C4+K1").vertex_count() == 5);
  CHECK(resolve_graph("A_") == path_graph(2));
  CHECK(resolve_graph("Q5").edge_count() == 4);
  CHECK(resolve_graph("schwenk11").vertex_count() == 11);
  CHECK_THROWS_AS(resolve_graph("not a graph"), ParseError);
}
