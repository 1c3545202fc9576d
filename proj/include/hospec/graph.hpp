#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <json.hpp>

namespace hospec {

using Vertex = int;
using Edge = std::pair<Vertex, Vertex>;

// Labeled simple undirected graph on vertices 0..n-1. Edges are stored
// normalized (u < v) and sorted, so the position of an edge in edges() is a
// stable index used by the edge-subset enumerators.
class Graph {
 public:
  Graph() = default;
  explicit Graph(int vertex_count);
  // Throws DomainError on self-loops, duplicates or out-of-range endpoints.
  Graph(int vertex_count, std::vector<Edge> edges);

  int vertex_count() const noexcept { return n_; }
  int edge_count() const noexcept { return static_cast<int>(edges_.size()); }
  const std::vector<Edge>& edges() const noexcept { return edges_; }
  const std::vector<Vertex>& neighbors(Vertex v) const { return adj_[v]; }
  int degree(Vertex v) const { return static_cast<int>(adj_[v].size()); }
  bool has_edge(Vertex u, Vertex v) const;

  bool is_connected() const;
  bool is_tree() const { return n_ >= 1 && edge_count() == n_ - 1 && is_connected(); }
  bool is_bipartite() const;

  // Vertex sets of the connected components, each sorted, ordered by
  // smallest member.
  std::vector<std::vector<Vertex>> components() const;

  // Induced subgraph on `vertices`, relabeled densely in the given order.
  Graph induced(std::span<const Vertex> vertices) const;
  Graph without_vertex(Vertex v) const;
  // Applies new_label[v] to every vertex.
  Graph relabeled(std::span<const Vertex> new_label) const;

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.n_ == b.n_ && a.edges_ == b.edges_;
  }

 private:
  int n_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::vector<Vertex>> adj_;
};

// The "+" of two graphs: g2's labels are shifted by g1's size.
Graph disjoint_union(const Graph& g1, const Graph& g2);

// Subgraph spanned by a subset of g's edges (by index), relabeled densely
// over the touched vertices in increasing host-label order.
Graph edge_subgraph(const Graph& g, std::uint64_t edge_mask);

Graph path_graph(int n);
Graph cycle_graph(int n);
Graph star_graph(int n);  // K_{1,n-1}: centre 0 and n-1 leaves
Graph complete_graph(int n);
Graph empty_graph(int n);

// graph6, exact standard encoding (optional ">>graph6<<" header accepted,
// trailing newline ignored).
Graph parse_graph6(std::string_view text);
std::string to_graph6(const Graph& g);

// {"n": int, "edges": [[u, v], ...]}
nlohmann::json to_json(const Graph& g);
Graph graph_from_json(const nlohmann::json& j);

}  // namespace hospec
