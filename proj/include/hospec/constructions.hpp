#pragma once

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "hospec/graph.hpp"

namespace hospec {

// Connected graphs with spectral radius at most 2. The tilde families have
// radius exactly 2; the others strictly less.
enum class SmithFamily { P, C, D, E6, E7, E8, DTilde, E6Tilde, E7Tilde, E8Tilde };

std::string to_string(SmithFamily f);
std::optional<SmithFamily> parse_smith_family(std::string_view name);
bool is_tilde(SmithFamily f);

// Tree with a centre vertex 0 and one path of each given length hanging
// off it.
Graph spider(std::span<const int> legs);

// `vertex_count` is the number of vertices for every family; the E
// families only accept their own size (6, 7, 8 or 7, 8, 9).
//   P: path;  C: cycle (>= 3);  D (>= 4): path on v-2 vertices with two
//   pendants at one end;  DTilde (>= 5): path on v-4 vertices with two
//   pendants at each end (v = 5 is K_{1,4});  E6/E7/E8: spiders (1,2,2),
//   (1,2,3), (1,2,4);  E6Tilde/E7Tilde/E8Tilde: spiders (2,2,2), (1,3,3),
//   (1,2,5).
// The spectral radius is checked on construction.
Graph smith_graph(SmithFamily family, int vertex_count);
// Smallest valid vertex count of a family (E families: their only size).
int smith_min_vertices(SmithFamily family);

// (C4 + K1, K_{1,4})
std::pair<Graph, Graph> saltire_pair();

struct RootedGraph {
  Graph graph;
  Vertex root = 0;
};

struct CospectralVertexPair {
  Graph tree;
  Vertex u = 0;
  Vertex v = 0;
  bool similar = false;
};

// An automorphism of tree t mapping u to v (perm[x] is the image of x), or
// nullopt when none exists.
std::optional<std::vector<Vertex>> tree_automorphism_mapping(const Graph& t, Vertex u, Vertex v);
bool is_automorphism(const Graph& g, std::span<const Vertex> perm);

// All unordered pairs u < v with charpoly(t - u) == charpoly(t - v).
std::vector<CospectralVertexPair> cospectral_vertex_pairs(const Graph& t);

// Identifies f.root with t.root. Labels: f keeps 0..|f|-1, t's other
// vertices follow in increasing order.
Graph coalesce(const RootedGraph& f, const RootedGraph& t);

// (F . T_u, F . T_v). Throws SimilarPairWarning for a similar pair.
std::pair<Graph, Graph> schwenk_pair(const RootedGraph& f, const CospectralVertexPair& pair);

// N_{F.T_v}(R6) - N_{F.T_u}(R6), computed by subtree census.
long verify_r6_difference(const RootedGraph& f, const CospectralVertexPair& pair);

// Cospectral vertex pair oriented so that a pendant edge attached at v
// yields more R6 subtrees than one attached at u (swaps u and v otherwise).
CospectralVertexPair oriented_for_r6(CospectralVertexPair pair);

// Catalog of frozen fixtures (data/fixtures.json, compiled in).
struct SchwenkFixture {
  std::string name;
  CospectralVertexPair pair;
};
std::vector<SchwenkFixture> schwenk_fixtures();
// Throws DomainError for an unknown name.
SchwenkFixture schwenk_fixture(std::string_view name);
// The fixture whose coalescences realize the R6 count difference equal to
// the root degree of F.
SchwenkFixture r6_witness();

// Resolves a CLI graph argument: catalog names (P<n>, C<n>, S<n>, K<n>,
// K1,<n>, D<n>, Dt<n>, E6..E8, Et6..Et8, Q5, Q6, R6, H6, J6, and the
// Schwenk fixture names),
// unions joined with '+', or a graph6 string.
Graph resolve_graph(std::string_view spec);

}  // namespace hospec
