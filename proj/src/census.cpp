#include "hospec/census.hpp"

#include <algorithm>
#include <array>

#include "hospec/errors.hpp"

namespace hospec {

EdgeSubgraph::EdgeSubgraph(const Graph& host, EdgeMask mask) : mask_(mask) {
  const auto& all = host.edges();
  for (std::size_t i = 0; i < all.size(); ++i) {
    if (mask >> i & 1U) {
      edges_.push_back(all[i]);
      support_.push_back(all[i].first);
      support_.push_back(all[i].second);
    }
  }
  std::sort(support_.begin(), support_.end());
  support_.erase(std::unique(support_.begin(), support_.end()), support_.end());
}

Graph EdgeSubgraph::graph() const {
  std::vector<Edge> es;
  es.reserve(edges_.size());
  auto label = [&](Vertex v) {
    return static_cast<Vertex>(std::lower_bound(support_.begin(), support_.end(), v) -
                               support_.begin());
  };
  for (const auto& [u, v] : edges_) es.emplace_back(label(u), label(v));
  return Graph(static_cast<int>(support_.size()), std::move(es));
}

namespace {

// ESU (Wernicke) over an arbitrary neighbourhood relation given as bitmasks.
// A set is extended only by elements above its root (its smallest member)
// that are exclusive neighbours of the newly added element, so every
// connected set is reached along exactly one path.
class ConnectedSetWalker {
 public:
  ConnectedSetWalker(std::vector<std::uint64_t> adjacency, int min_size, int max_size,
                     std::uint64_t budget, const std::function<void(std::uint64_t)>& visit)
      : adjacency_(std::move(adjacency)),
        min_size_(min_size),
        max_size_(max_size),
        budget_(budget),
        visit_(visit) {}

  void run() {
    const int count = static_cast<int>(adjacency_.size());
    for (int root = 0; root < count; ++root) {
      const std::uint64_t bit = std::uint64_t{1} << root;
      above_root_ = root == 63 ? 0 : ~((bit << 1) - 1);
      extend(bit, 1, adjacency_[root] & above_root_, adjacency_[root] | bit);
    }
  }

 private:
  void extend(std::uint64_t set, int size, std::uint64_t extension, std::uint64_t closed) {
    if (size >= min_size_) {
      if (++visited_ > budget_) {
        throw BudgetExceeded("subgraph enumeration exceeded budget of " +
                             std::to_string(budget_));
      }
      visit_(set);
    }
    if (size == max_size_) return;
    while (extension) {
      const std::uint64_t w = extension & (~extension + 1);
      extension &= extension - 1;
      const int wi = __builtin_ctzll(w);
      const std::uint64_t fresh = adjacency_[wi] & ~closed & above_root_;
      extend(set | w, size + 1, extension | fresh, closed | adjacency_[wi]);
    }
  }

  std::vector<std::uint64_t> adjacency_;
  int min_size_;
  int max_size_;
  std::uint64_t budget_;
  const std::function<void(std::uint64_t)>& visit_;
  std::uint64_t above_root_ = 0;
  std::uint64_t visited_ = 0;
};

}  // namespace

void for_each_connected_edge_subset(const Graph& g, int max_edges,
                                    const std::function<void(EdgeMask)>& visit,
                                    std::uint64_t budget, int min_edges) {
  if (max_edges < 1) throw DomainError("max_edges must be at least 1");
  const auto& es = g.edges();
  if (es.size() > 64) throw DomainError("edge-subset enumeration supports at most 64 edges");
  std::vector<std::uint64_t> line(es.size(), 0);
  for (std::size_t i = 0; i < es.size(); ++i) {
    for (std::size_t j = i + 1; j < es.size(); ++j) {
      const bool touch = es[i].first == es[j].first || es[i].first == es[j].second ||
                         es[i].second == es[j].first || es[i].second == es[j].second;
      if (touch) {
        line[i] |= std::uint64_t{1} << j;
        line[j] |= std::uint64_t{1} << i;
      }
    }
  }
  ConnectedSetWalker(std::move(line), std::max(1, min_edges), max_edges, budget, visit).run();
}

std::vector<EdgeSubgraph> connected_edge_subgraphs(const Graph& g, int max_edges,
                                                   std::uint64_t budget) {
  std::vector<EdgeSubgraph> out;
  for_each_connected_edge_subset(
      g, max_edges, [&](EdgeMask mask) { out.emplace_back(g, mask); }, budget);
  return out;
}

void for_each_connected_vertex_subset(const Graph& g, int max_vertices,
                                      const std::function<void(VertexMask)>& visit,
                                      std::uint64_t budget) {
  if (max_vertices < 1) throw DomainError("max_vertices must be at least 1");
  if (g.vertex_count() > 64) {
    throw DomainError("vertex-subset enumeration supports at most 64 vertices");
  }
  std::vector<std::uint64_t> adjacency(static_cast<std::size_t>(g.vertex_count()), 0);
  for (const auto& [u, v] : g.edges()) {
    adjacency[u] |= std::uint64_t{1} << v;
    adjacency[v] |= std::uint64_t{1} << u;
  }
  ConnectedSetWalker(std::move(adjacency), 1, max_vertices, budget, visit).run();
}

// ---------------------------------------------------------------------------
// Canonical codes

CanonicalTreeCode CanonicalTreeCode::from_parens(std::string_view parens) {
  CanonicalTreeCode c;
  c.bytes_.assign((parens.size() + 7) / 8, '\0');
  for (std::size_t i = 0; i < parens.size(); ++i) {
    if (parens[i] == '(') c.bytes_[i / 8] = static_cast<char>(c.bytes_[i / 8] | (0x80 >> (i % 8)));
  }
  return c;
}

CanonicalTreeCode CanonicalTreeCode::from_hex(std::string_view hex) {
  if (hex.size() % 2 != 0) throw DomainError("odd-length hex tree code");
  auto nibble = [](char ch) -> int {
    if (ch >= '0' && ch <= '9') return ch - '0';
    if (ch >= 'a' && ch <= 'f') return ch - 'a' + 10;
    if (ch >= 'A' && ch <= 'F') return ch - 'A' + 10;
    throw DomainError("invalid hex digit in tree code");
  };
  CanonicalTreeCode c;
  for (std::size_t i = 0; i < hex.size(); i += 2) {
    c.bytes_.push_back(static_cast<char>(nibble(hex[i]) << 4 | nibble(hex[i + 1])));
  }
  if (!c.bytes_.empty() && !(static_cast<unsigned char>(c.bytes_[0]) & 0x80)) {
    throw DomainError("tree code must start with an open parenthesis");
  }
  return c;
}

std::string CanonicalTreeCode::hex() const {
  static constexpr char digits[] = "0123456789abcdef";
  std::string out;
  for (char b : bytes_) {
    const auto u = static_cast<unsigned char>(b);
    out.push_back(digits[u >> 4]);
    out.push_back(digits[u & 15]);
  }
  return out;
}

std::string CanonicalTreeCode::parens() const {
  std::string out;
  int depth = 0;
  for (std::size_t i = 0; i < bytes_.size() * 8; ++i) {
    const bool open = static_cast<unsigned char>(bytes_[i / 8]) & (0x80 >> (i % 8));
    if (!open && depth == 0) break;
    out.push_back(open ? '(' : ')');
    depth += open ? 1 : -1;
    if (depth == 0) break;
  }
  if (depth != 0) throw DomainError("unbalanced tree code");
  return out;
}

namespace {

std::string ahu(const Graph& t, Vertex v, Vertex parent) {
  std::vector<std::string> kids;
  for (Vertex w : t.neighbors(v)) {
    if (w != parent) kids.push_back(ahu(t, w, v));
  }
  std::sort(kids.begin(), kids.end());
  std::string out = "(";
  for (const auto& k : kids) out += k;
  out += ")";
  return out;
}

std::vector<Vertex> centroids(const Graph& t) {
  const int n = t.vertex_count();
  std::vector<Vertex> order{0};
  std::vector<Vertex> parent(static_cast<std::size_t>(n), -1);
  parent[0] = 0;
  for (std::size_t i = 0; i < order.size(); ++i) {
    for (Vertex w : t.neighbors(order[i])) {
      if (parent[w] < 0) {
        parent[w] = order[i];
        order.push_back(w);
      }
    }
  }
  std::vector<int> size(static_cast<std::size_t>(n), 1);
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    if (*it != 0) size[parent[*it]] += size[*it];
  }
  std::vector<Vertex> out;
  for (Vertex v = 0; v < n; ++v) {
    int heaviest = n - size[v];
    for (Vertex w : t.neighbors(v)) {
      if (parent[w] == v) heaviest = std::max(heaviest, size[w]);
    }
    if (2 * heaviest <= n) out.push_back(v);
  }
  return out;
}

void require_tree(const Graph& t) {
  if (!t.is_tree()) throw DomainError("input graph is not a tree");
}

}  // namespace

std::string rooted_tree_code(const Graph& t, Vertex root) {
  require_tree(t);
  return ahu(t, root, -1);
}

CanonicalTreeCode tree_canonical_code(const Graph& t) {
  require_tree(t);
  std::string best;
  for (Vertex c : centroids(t)) {
    std::string code = ahu(t, c, -1);
    if (best.empty() || code < best) best = std::move(code);
  }
  return CanonicalTreeCode::from_parens(best);
}

Graph tree_from_code(const CanonicalTreeCode& code) {
  const std::string parens = code.parens();
  std::vector<Edge> es;
  std::vector<Vertex> stack;
  int next = 0;
  for (char ch : parens) {
    if (ch == '(') {
      const Vertex v = next++;
      if (!stack.empty()) es.emplace_back(stack.back(), v);
      stack.push_back(v);
    } else {
      stack.pop_back();
    }
  }
  return Graph(next, std::move(es));
}

// ---------------------------------------------------------------------------
// Census

std::uint64_t SubtreeCensus::count(const CanonicalTreeCode& code) const {
  const auto it = counts.find(code);
  return it == counts.end() ? 0 : it->second;
}

std::uint64_t SubtreeCensus::total() const {
  std::uint64_t s = 0;
  for (const auto& [code, n] : counts) s += n;
  return s;
}

nlohmann::json SubtreeCensus::to_json() const {
  nlohmann::json c = nlohmann::json::object();
  for (const auto& [code, n] : counts) c[code.hex()] = n;
  return {{"m", m}, {"counts", std::move(c)}};
}

SubtreeCensus subtree_census(const Graph& t, int m, std::uint64_t budget) {
  require_tree(t);
  if (m < 1) throw DomainError("census size must be positive");
  if (m > t.edge_count()) throw DomainError("census size exceeds the tree's edge count");
  SubtreeCensus census;
  census.m = m;
  for_each_connected_edge_subset(
      t, m, [&](EdgeMask mask) { ++census.counts[tree_canonical_code(edge_subgraph(t, mask))]; },
      budget, m);
  return census;
}

std::uint64_t count_pattern(const Graph& t, const Graph& pattern, std::uint64_t budget) {
  require_tree(pattern);
  require_tree(t);
  const int m = pattern.edge_count();
  if (m == 0) return static_cast<std::uint64_t>(t.vertex_count());
  if (m > t.edge_count()) return 0;
  return subtree_census(t, m, budget).count(tree_canonical_code(pattern));
}

// ---------------------------------------------------------------------------
// Free tree generation (WROP level sequences)

namespace {

using Layout = std::vector<int>;

Layout next_rooted_tree(const Layout& pred, int p = -1) {
  if (p < 0) {
    p = static_cast<int>(pred.size()) - 1;
    while (pred[p] == 1) --p;
  }
  if (p == 0) return {};
  int q = p - 1;
  while (pred[q] != pred[p] - 1) --q;
  Layout result = pred;
  for (std::size_t i = static_cast<std::size_t>(p); i < result.size(); ++i) {
    result[i] = result[i - static_cast<std::size_t>(p - q)];
  }
  return result;
}

// Splits a level sequence into the first subtree of the root (levels
// shifted down by one) and the rest of the tree.
std::pair<Layout, Layout> split_tree(const Layout& layout) {
  bool one_found = false;
  std::size_t m = layout.size();
  for (std::size_t i = 0; i < layout.size(); ++i) {
    if (layout[i] == 1) {
      if (one_found) {
        m = i;
        break;
      }
      one_found = true;
    }
  }
  Layout left;
  for (std::size_t i = 1; i < m; ++i) left.push_back(layout[i] - 1);
  Layout rest{0};
  for (std::size_t i = m; i < layout.size(); ++i) rest.push_back(layout[i]);
  return {left, rest};
}

Layout next_tree(const Layout& candidate) {
  auto [left, rest] = split_tree(candidate);
  const int left_height = *std::max_element(left.begin(), left.end());
  const int rest_height = *std::max_element(rest.begin(), rest.end());
  bool valid = rest_height >= left_height;
  if (valid && rest_height == left_height) {
    if (left.size() > rest.size()) {
      valid = false;
    } else if (left.size() == rest.size() && left > rest) {
      valid = false;
    }
  }
  if (valid) return candidate;
  const int p = static_cast<int>(left.size());
  Layout fresh = next_rooted_tree(candidate, p);
  if (candidate[static_cast<std::size_t>(p)] > 2) {
    auto [new_left, new_rest] = split_tree(fresh);
    const int new_left_height = *std::max_element(new_left.begin(), new_left.end());
    const std::size_t suffix = static_cast<std::size_t>(new_left_height) + 1;
    for (std::size_t i = 0; i < suffix; ++i) {
      fresh[fresh.size() - suffix + i] = static_cast<int>(i) + 1;
    }
  }
  return fresh;
}

Graph layout_to_graph(const Layout& layout) {
  std::vector<Edge> es;
  std::vector<int> stack;
  for (std::size_t i = 0; i < layout.size(); ++i) {
    if (!stack.empty()) {
      while (layout[static_cast<std::size_t>(stack.back())] >= layout[i]) stack.pop_back();
      es.emplace_back(stack.back(), static_cast<int>(i));
    }
    stack.push_back(static_cast<int>(i));
  }
  return Graph(static_cast<int>(layout.size()), std::move(es));
}

}  // namespace

std::vector<Graph> generate_free_trees(int m) {
  if (m < 1) throw DomainError("free tree generation needs at least one edge");
  const int order = m + 1;
  Layout layout;
  for (int i = 0; i <= order / 2; ++i) layout.push_back(i);
  for (int i = 1; i < (order + 1) / 2; ++i) layout.push_back(i);
  std::vector<Graph> out;
  while (!layout.empty()) {
    layout = next_tree(layout);
    if (layout.empty()) break;
    out.push_back(layout_to_graph(layout));
    layout = next_rooted_tree(layout);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Named small trees

namespace {

Graph spider_tree(std::initializer_list<int> legs) {
  std::vector<Edge> es;
  int next = 1;
  for (int len : legs) {
    Vertex prev = 0;
    for (int i = 0; i < len; ++i) {
      es.emplace_back(prev, next);
      prev = next++;
    }
  }
  return Graph(next, std::move(es));
}

}  // namespace

Graph small_tree(std::string_view name) {
  if (name == "P2") return path_graph(2);
  if (name == "P3") return path_graph(3);
  if (name == "P4") return path_graph(4);
  if (name == "P5") return path_graph(5);
  if (name == "P6") return path_graph(6);
  if (name == "S4") return star_graph(4);
  if (name == "S5") return star_graph(5);
  if (name == "S6") return star_graph(6);
  if (name == "Q5") return spider_tree({1, 1, 2});
  if (name == "Q6") return spider_tree({1, 1, 3});
  if (name == "R6") return spider_tree({1, 2, 2});
  if (name == "H6") return Graph(6, {{0, 1}, {0, 2}, {0, 3}, {1, 4}, {1, 5}});
  if (name == "J6") return spider_tree({1, 1, 1, 2});
  throw DomainError("unknown small tree name: " + std::string(name));
}

std::vector<std::string> small_tree_names(int m) {
  switch (m) {
    case 1: return {"P2"};
    case 2: return {"P3"};
    case 3: return {"P4", "S4"};
    case 4: return {"P5", "Q5", "S5"};
    case 5: return {"P6", "Q6", "R6", "H6", "J6", "S6"};
    default: return {};
  }
}

std::optional<std::string> small_tree_name(const CanonicalTreeCode& code) {
  for (int m = 1; m <= 5; ++m) {
    for (const auto& name : small_tree_names(m)) {
      if (tree_canonical_code(small_tree(name)) == code) return name;
    }
  }
  return std::nullopt;
}

}  // namespace hospec
