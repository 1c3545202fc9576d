#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "hospec/graph.hpp"

namespace hospec {

using EdgeMask = std::uint64_t;
using VertexMask = std::uint64_t;

// Default cap on the number of subgraphs any single enumeration may visit.
inline constexpr std::uint64_t kDefaultBudget = 10'000'000;

// A connected edge subset of a host graph together with the vertices it
// touches (host labels).
class EdgeSubgraph {
 public:
  EdgeSubgraph(const Graph& host, EdgeMask mask);

  EdgeMask mask() const noexcept { return mask_; }
  const std::vector<Edge>& edges() const noexcept { return edges_; }
  const std::vector<Vertex>& support() const noexcept { return support_; }
  int edge_count() const noexcept { return static_cast<int>(edges_.size()); }
  // Densely relabeled copy (support order).
  Graph graph() const;

 private:
  EdgeMask mask_;
  std::vector<Edge> edges_;
  std::vector<Vertex> support_;
};

// Visits every connected edge subset with min_edges..max_edges edges exactly
// once. Host graphs are limited to 64 edges. Throws BudgetExceeded once more
// than `budget` subsets would be visited.
void for_each_connected_edge_subset(const Graph& g, int max_edges,
                                    const std::function<void(EdgeMask)>& visit,
                                    std::uint64_t budget = kDefaultBudget, int min_edges = 1);

std::vector<EdgeSubgraph> connected_edge_subgraphs(const Graph& g, int max_edges,
                                                   std::uint64_t budget = kDefaultBudget);

// Same walk over vertices: every connected vertex subset of size
// 1..max_vertices (host graphs up to 64 vertices).
void for_each_connected_vertex_subset(const Graph& g, int max_vertices,
                                      const std::function<void(VertexMask)>& visit,
                                      std::uint64_t budget = kDefaultBudget);

// Isomorphism-invariant encoding of a free tree: the AHU parenthesis string
// of the tree rooted at its centroid (lexicographic minimum over the two
// roots of a bicentroidal tree), packed one bit per parenthesis, open = 1,
// MSB first, zero padded.
class CanonicalTreeCode {
 public:
  CanonicalTreeCode() = default;
  static CanonicalTreeCode from_parens(std::string_view parens);
  static CanonicalTreeCode from_hex(std::string_view hex);

  const std::string& bytes() const noexcept { return bytes_; }
  std::string hex() const;
  std::string parens() const;

  friend auto operator<=>(const CanonicalTreeCode&, const CanonicalTreeCode&) = default;

 private:
  std::string bytes_;
};

CanonicalTreeCode tree_canonical_code(const Graph& t);
// AHU string of t rooted at `root` (parentheses). Equal strings for roots u
// and v mean some automorphism maps u to v.
std::string rooted_tree_code(const Graph& t, Vertex root);
// Inverse of the encoding, up to isomorphism: vertex 0 is the root used by
// the code, children numbered in preorder.
Graph tree_from_code(const CanonicalTreeCode& code);

struct SubtreeCensus {
  int m = 0;
  std::map<CanonicalTreeCode, std::uint64_t> counts;

  std::uint64_t count(const CanonicalTreeCode& code) const;
  std::uint64_t total() const;
  // {"m": m, "counts": {"<hex>": n, ...}}
  nlohmann::json to_json() const;
};

SubtreeCensus subtree_census(const Graph& t, int m, std::uint64_t budget = kDefaultBudget);

// Number of subtrees of t isomorphic to pattern.
std::uint64_t count_pattern(const Graph& t, const Graph& pattern,
                            std::uint64_t budget = kDefaultBudget);

// One representative per isomorphism class of trees with m edges, in the
// order produced by the level-sequence generator of Wright, Richmond,
// Odlyzko and McKay.
std::vector<Graph> generate_free_trees(int m);

// The small trees named by their vertex count: P2..P6, S4..S6 (stars),
// Q5 (spider 1,1,2), Q6 (spider 1,1,3), R6 (spider 1,2,2), H6 (two adjacent
// degree-3 vertices), J6 (spider 1,1,1,2). Throws DomainError for unknown
// names.
Graph small_tree(std::string_view name);
// Names above with exactly m edges, in table column order.
std::vector<std::string> small_tree_names(int m);
std::optional<std::string> small_tree_name(const CanonicalTreeCode& code);

}  // namespace hospec
