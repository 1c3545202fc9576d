#include "hospec/graph.hpp"

#include <algorithm>
#include <numeric>

#include "hospec/errors.hpp"

namespace hospec {

Graph::Graph(int vertex_count) : Graph(vertex_count, {}) {}

Graph::Graph(int vertex_count, std::vector<Edge> edges) : n_(vertex_count) {
  if (vertex_count < 0) throw DomainError("negative vertex count");
  for (auto& [u, v] : edges) {
    if (u < 0 || v < 0 || u >= n_ || v >= n_) {
      throw DomainError("edge endpoint out of range: (" + std::to_string(u) + ", " +
                        std::to_string(v) + ")");
    }
    if (u == v) throw DomainError("self-loop at vertex " + std::to_string(u));
    if (u > v) std::swap(u, v);
  }
  std::sort(edges.begin(), edges.end());
  if (std::adjacent_find(edges.begin(), edges.end()) != edges.end()) {
    throw DomainError("duplicate edge");
  }
  edges_ = std::move(edges);
  adj_.assign(static_cast<std::size_t>(n_), {});
  for (const auto& [u, v] : edges_) {
    adj_[u].push_back(v);
    adj_[v].push_back(u);
  }
  for (auto& a : adj_) std::sort(a.begin(), a.end());
}

bool Graph::has_edge(Vertex u, Vertex v) const {
  const auto& a = adj_[u];
  return std::binary_search(a.begin(), a.end(), v);
}

std::vector<std::vector<Vertex>> Graph::components() const {
  std::vector<std::vector<Vertex>> out;
  std::vector<char> seen(static_cast<std::size_t>(n_), 0);
  for (Vertex s = 0; s < n_; ++s) {
    if (seen[s]) continue;
    std::vector<Vertex> comp{s};
    seen[s] = 1;
    for (std::size_t i = 0; i < comp.size(); ++i) {
      for (Vertex w : adj_[comp[i]]) {
        if (!seen[w]) {
          seen[w] = 1;
          comp.push_back(w);
        }
      }
    }
    std::sort(comp.begin(), comp.end());
    out.push_back(std::move(comp));
  }
  return out;
}

bool Graph::is_connected() const { return n_ <= 1 || components().size() == 1; }

bool Graph::is_bipartite() const {
  std::vector<int> side(static_cast<std::size_t>(n_), -1);
  for (Vertex s = 0; s < n_; ++s) {
    if (side[s] >= 0) continue;
    side[s] = 0;
    std::vector<Vertex> queue{s};
    for (std::size_t i = 0; i < queue.size(); ++i) {
      const Vertex x = queue[i];
      for (Vertex w : adj_[x]) {
        if (side[w] < 0) {
          side[w] = 1 - side[x];
          queue.push_back(w);
        } else if (side[w] == side[x]) {
          return false;
        }
      }
    }
  }
  return true;
}

Graph Graph::induced(std::span<const Vertex> vertices) const {
  std::vector<int> label(static_cast<std::size_t>(n_), -1);
  for (std::size_t i = 0; i < vertices.size(); ++i) label[vertices[i]] = static_cast<int>(i);
  std::vector<Edge> es;
  for (const auto& [u, v] : edges_) {
    if (label[u] >= 0 && label[v] >= 0) es.emplace_back(label[u], label[v]);
  }
  return Graph(static_cast<int>(vertices.size()), std::move(es));
}

Graph Graph::without_vertex(Vertex v) const {
  std::vector<Vertex> keep;
  keep.reserve(static_cast<std::size_t>(n_));
  for (Vertex x = 0; x < n_; ++x) {
    if (x != v) keep.push_back(x);
  }
  return induced(keep);
}

Graph Graph::relabeled(std::span<const Vertex> new_label) const {
  std::vector<Edge> es;
  es.reserve(edges_.size());
  for (const auto& [u, v] : edges_) es.emplace_back(new_label[u], new_label[v]);
  return Graph(n_, std::move(es));
}

Graph disjoint_union(const Graph& g1, const Graph& g2) {
  std::vector<Edge> es = g1.edges();
  const int shift = g1.vertex_count();
  for (const auto& [u, v] : g2.edges()) es.emplace_back(u + shift, v + shift);
  return Graph(g1.vertex_count() + g2.vertex_count(), std::move(es));
}

Graph edge_subgraph(const Graph& g, std::uint64_t edge_mask) {
  std::vector<int> label(static_cast<std::size_t>(g.vertex_count()), -1);
  const auto& all = g.edges();
  for (std::size_t i = 0; i < all.size(); ++i) {
    if (edge_mask >> i & 1U) {
      label[all[i].first] = 0;
      label[all[i].second] = 0;
    }
  }
  int next = 0;
  for (auto& l : label) {
    if (l == 0) l = next++;
  }
  std::vector<Edge> es;
  for (std::size_t i = 0; i < all.size(); ++i) {
    if (edge_mask >> i & 1U) es.emplace_back(label[all[i].first], label[all[i].second]);
  }
  return Graph(next, std::move(es));
}

Graph path_graph(int n) {
  std::vector<Edge> es;
  for (int i = 0; i + 1 < n; ++i) es.emplace_back(i, i + 1);
  return Graph(n, std::move(es));
}

Graph cycle_graph(int n) {
  if (n < 3) throw DomainError("cycle needs at least 3 vertices");
  std::vector<Edge> es;
  for (int i = 0; i < n; ++i) es.emplace_back(i, (i + 1) % n);
  return Graph(n, std::move(es));
}

Graph star_graph(int n) {
  std::vector<Edge> es;
  for (int i = 1; i < n; ++i) es.emplace_back(0, i);
  return Graph(n, std::move(es));
}

Graph complete_graph(int n) {
  std::vector<Edge> es;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) es.emplace_back(i, j);
  }
  return Graph(n, std::move(es));
}

Graph empty_graph(int n) { return Graph(n); }

// graph6: N(n) followed by the upper triangle of A in column order
// (0,1),(0,2),(1,2),(0,3),... six bits per byte, each byte offset by 63.
Graph parse_graph6(std::string_view text) {
  std::size_t pos = 0;
  constexpr std::string_view header = ">>graph6<<";
  if (text.starts_with(header)) pos = header.size();
  while (!text.empty() && (text.back() == '\n' || text.back() == '\r')) text.remove_suffix(1);

  auto byte_at = [&](std::size_t i) -> int {
    if (i >= text.size()) throw ParseError("truncated graph6 input", i);
    const int c = static_cast<unsigned char>(text[i]);
    if (c < 63 || c > 126) throw ParseError("byte out of graph6 range", i);
    return c - 63;
  };

  if (pos >= text.size()) throw ParseError("empty graph6 input", pos);
  long long n = 0;
  if (static_cast<unsigned char>(text[pos]) != 126) {
    n = byte_at(pos);
    pos += 1;
  } else if (pos + 1 < text.size() && static_cast<unsigned char>(text[pos + 1]) == 126) {
    for (std::size_t i = 0; i < 6; ++i) n = (n << 6) | byte_at(pos + 2 + i);
    if (n <= 258047) throw ParseError("non-minimal graph6 size header", pos);
    pos += 8;
  } else {
    for (std::size_t i = 0; i < 3; ++i) n = (n << 6) | byte_at(pos + 1 + i);
    if (n <= 62) throw ParseError("non-minimal graph6 size header", pos);
    pos += 4;
  }
  if (n > (1LL << 20)) throw ParseError("graph6 vertex count too large", pos);

  const long long bits = n * (n - 1) / 2;
  const long long need = (bits + 5) / 6;
  const auto available = static_cast<long long>(text.size() - pos);
  if (available < need) throw ParseError("truncated graph6 bit vector", text.size());
  if (available > need) {
    throw ParseError("trailing bytes after graph6 bit vector", pos + static_cast<std::size_t>(need));
  }

  std::vector<Edge> es;
  long long k = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i, ++k) {
      const int byte = byte_at(pos + static_cast<std::size_t>(k / 6));
      if (byte >> (5 - k % 6) & 1) es.emplace_back(i, j);
    }
  }
  if (k % 6 != 0) {
    const std::size_t last = pos + static_cast<std::size_t>(k / 6);
    const int byte = byte_at(last);
    if ((byte & ((1 << (6 - k % 6)) - 1)) != 0) {
      throw ParseError("nonzero padding bits in graph6", last);
    }
  }
  return Graph(static_cast<int>(n), std::move(es));
}

std::string to_graph6(const Graph& g) {
  const long long n = g.vertex_count();
  std::string out;
  if (n <= 62) {
    out.push_back(static_cast<char>(n + 63));
  } else if (n <= 258047) {
    out.push_back(static_cast<char>(126));
    for (int s = 12; s >= 0; s -= 6) out.push_back(static_cast<char>(((n >> s) & 63) + 63));
  } else {
    out.append(2, static_cast<char>(126));
    for (int s = 30; s >= 0; s -= 6) out.push_back(static_cast<char>(((n >> s) & 63) + 63));
  }
  int acc = 0;
  int filled = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.has_edge(i, j) ? 1 : 0);
      if (++filled == 6) {
        out.push_back(static_cast<char>(acc + 63));
        acc = 0;
        filled = 0;
      }
    }
  }
  if (filled > 0) out.push_back(static_cast<char>((acc << (6 - filled)) + 63));
  return out;
}

nlohmann::json to_json(const Graph& g) {
  nlohmann::json edges = nlohmann::json::array();
  for (const auto& [u, v] : g.edges()) edges.push_back({u, v});
  return {{"n", g.vertex_count()}, {"edges", std::move(edges)}};
}

Graph graph_from_json(const nlohmann::json& j) {
  std::vector<Edge> es;
  for (const auto& e : j.at("edges")) es.emplace_back(e.at(0).get<int>(), e.at(1).get<int>());
  return Graph(j.at("n").get<int>(), std::move(es));
}

}  // namespace hospec
