#include "hospec/constructions.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <map>
#include <stdexcept>

#include <json.hpp>

#include "fixtures_data.hpp"
#include "hospec/census.hpp"
#include "hospec/errors.hpp"
#include "hospec/spectrum.hpp"

namespace hospec {

std::string to_string(SmithFamily f) {
  switch (f) {
    case SmithFamily::P: return "P";
    case SmithFamily::C: return "C";
    case SmithFamily::D: return "D";
    case SmithFamily::E6: return "E6";
    case SmithFamily::E7: return "E7";
    case SmithFamily::E8: return "E8";
    case SmithFamily::DTilde: return "Dt";
    case SmithFamily::E6Tilde: return "Et6";
    case SmithFamily::E7Tilde: return "Et7";
    case SmithFamily::E8Tilde: return "Et8";
  }
  return "?";
}

std::optional<SmithFamily> parse_smith_family(std::string_view name) {
  for (auto f : {SmithFamily::P, SmithFamily::C, SmithFamily::D, SmithFamily::E6, SmithFamily::E7,
                 SmithFamily::E8, SmithFamily::DTilde, SmithFamily::E6Tilde, SmithFamily::E7Tilde,
                 SmithFamily::E8Tilde}) {
    if (to_string(f) == name) return f;
  }
  return std::nullopt;
}

bool is_tilde(SmithFamily f) {
  return f == SmithFamily::C || f == SmithFamily::DTilde || f == SmithFamily::E6Tilde ||
         f == SmithFamily::E7Tilde || f == SmithFamily::E8Tilde;
}

Graph spider(std::span<const int> legs) {
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

int smith_min_vertices(SmithFamily family) {
  switch (family) {
    case SmithFamily::P: return 1;
    case SmithFamily::C: return 3;
    case SmithFamily::D: return 4;
    case SmithFamily::E6: return 6;
    case SmithFamily::E7: return 7;
    case SmithFamily::E8: return 8;
    case SmithFamily::DTilde: return 5;
    case SmithFamily::E6Tilde: return 7;
    case SmithFamily::E7Tilde: return 8;
    case SmithFamily::E8Tilde: return 9;
  }
  return 1;
}

namespace {

Graph build_smith(SmithFamily family, int v) {
  auto legs = [](std::initializer_list<int> l) { return spider(std::vector<int>(l)); };
  auto fixed = [&](int size) {
    if (v != size) {
      throw DomainError(to_string(family) + " has exactly " + std::to_string(size) + " vertices");
    }
  };
  switch (family) {
    case SmithFamily::P:
      return path_graph(v);
    case SmithFamily::C:
      return cycle_graph(v);
    case SmithFamily::D: {
      Graph p = path_graph(v - 2);
      std::vector<Edge> es = p.edges();
      es.emplace_back(0, v - 2);
      es.emplace_back(0, v - 1);
      return Graph(v, std::move(es));
    }
    case SmithFamily::DTilde: {
      const int len = v - 4;
      std::vector<Edge> es = path_graph(len).edges();
      es.emplace_back(0, len);
      es.emplace_back(0, len + 1);
      es.emplace_back(len - 1, len + 2);
      es.emplace_back(len - 1, len + 3);
      return Graph(v, std::move(es));
    }
    case SmithFamily::E6: fixed(6); return legs({1, 2, 2});
    case SmithFamily::E7: fixed(7); return legs({1, 2, 3});
    case SmithFamily::E8: fixed(8); return legs({1, 2, 4});
    case SmithFamily::E6Tilde: fixed(7); return legs({2, 2, 2});
    case SmithFamily::E7Tilde: fixed(8); return legs({1, 3, 3});
    case SmithFamily::E8Tilde: fixed(9); return legs({1, 2, 5});
  }
  throw DomainError("unknown Smith family");
}

}  // namespace

Graph smith_graph(SmithFamily family, int vertex_count) {
  if (vertex_count < smith_min_vertices(family)) {
    throw DomainError(to_string(family) + " needs at least " +
                      std::to_string(smith_min_vertices(family)) + " vertices");
  }
  Graph g = build_smith(family, vertex_count);
  const double radius = eigenvalues(g).radius();
  const bool ok = is_tilde(family) ? std::abs(radius - 2.0) <= 1e-9 : radius < 2.0 - 1e-6;
  if (!ok) {
    throw std::logic_error("Smith constructor " + to_string(family) + std::to_string(vertex_count) +
                           " has spectral radius " + std::to_string(radius));
  }
  return g;
}

std::pair<Graph, Graph> saltire_pair() {
  return {disjoint_union(cycle_graph(4), Graph(1)), star_graph(5)};
}

// ---------------------------------------------------------------------------
// Automorphisms and cospectral vertices

namespace {

struct RootedCodes {
  std::vector<std::string> code;
  std::vector<std::vector<Vertex>> children;
};

std::string fill_codes(const Graph& t, Vertex x, Vertex parent, RootedCodes& rc) {
  std::vector<std::string> kids;
  for (Vertex w : t.neighbors(x)) {
    if (w == parent) continue;
    rc.children[x].push_back(w);
    kids.push_back(fill_codes(t, w, x, rc));
  }
  std::sort(kids.begin(), kids.end());
  std::string out = "(";
  for (const auto& k : kids) out += k;
  out += ")";
  rc.code[x] = out;
  return out;
}

RootedCodes rooted_codes(const Graph& t, Vertex root) {
  RootedCodes rc;
  rc.code.resize(static_cast<std::size_t>(t.vertex_count()));
  rc.children.resize(static_cast<std::size_t>(t.vertex_count()));
  fill_codes(t, root, -1, rc);
  for (auto& ch : rc.children) {
    std::sort(ch.begin(), ch.end(),
              [&](Vertex a, Vertex b) { return rc.code[a] < rc.code[b]; });
  }
  return rc;
}

void match(const RootedCodes& a, const RootedCodes& b, Vertex x, Vertex y,
           std::vector<Vertex>& perm) {
  perm[x] = y;
  const auto& cx = a.children[x];
  const auto& cy = b.children[y];
  for (std::size_t i = 0; i < cx.size(); ++i) match(a, b, cx[i], cy[i], perm);
}

}  // namespace

bool is_automorphism(const Graph& g, std::span<const Vertex> perm) {
  if (static_cast<int>(perm.size()) != g.vertex_count()) return false;
  std::vector<char> hit(perm.size(), 0);
  for (Vertex p : perm) {
    if (p < 0 || p >= g.vertex_count() || hit[p]) return false;
    hit[p] = 1;
  }
  for (const auto& [u, v] : g.edges()) {
    if (!g.has_edge(perm[u], perm[v])) return false;
  }
  return true;
}

std::optional<std::vector<Vertex>> tree_automorphism_mapping(const Graph& t, Vertex u, Vertex v) {
  if (!t.is_tree()) throw DomainError("automorphism search requires a tree");
  const RootedCodes a = rooted_codes(t, u);
  const RootedCodes b = rooted_codes(t, v);
  if (a.code[u] != b.code[v]) return std::nullopt;
  std::vector<Vertex> perm(static_cast<std::size_t>(t.vertex_count()), -1);
  match(a, b, u, v, perm);
  if (!is_automorphism(t, perm)) {
    throw std::logic_error("rooted code match produced a non-automorphism");
  }
  return perm;
}

std::vector<CospectralVertexPair> cospectral_vertex_pairs(const Graph& t) {
  if (!t.is_tree()) throw DomainError("cospectral_vertex_pairs requires a tree");
  std::vector<IntPolynomial> deleted;
  deleted.reserve(static_cast<std::size_t>(t.vertex_count()));
  for (Vertex x = 0; x < t.vertex_count(); ++x) {
    deleted.push_back(characteristic_polynomial(t.without_vertex(x)));
  }
  std::vector<CospectralVertexPair> out;
  for (Vertex u = 0; u < t.vertex_count(); ++u) {
    for (Vertex v = u + 1; v < t.vertex_count(); ++v) {
      if (deleted[u] == deleted[v]) {
        out.push_back({t, u, v, tree_automorphism_mapping(t, u, v).has_value()});
      }
    }
  }
  return out;
}

Graph coalesce(const RootedGraph& f, const RootedGraph& t) {
  const int nf = f.graph.vertex_count();
  if (f.root < 0 || f.root >= nf || t.root < 0 || t.root >= t.graph.vertex_count()) {
    throw DomainError("root out of range");
  }
  std::vector<Vertex> label(static_cast<std::size_t>(t.graph.vertex_count()));
  int next = nf;
  for (Vertex x = 0; x < t.graph.vertex_count(); ++x) label[x] = x == t.root ? f.root : next++;
  std::vector<Edge> es = f.graph.edges();
  for (const auto& [a, b] : t.graph.edges()) es.emplace_back(label[a], label[b]);
  return Graph(next, std::move(es));
}

std::pair<Graph, Graph> schwenk_pair(const RootedGraph& f, const CospectralVertexPair& pair) {
  if (pair.similar) {
    throw SimilarPairWarning("vertices " + std::to_string(pair.u) + " and " +
                             std::to_string(pair.v) + " are similar; coalescences are isomorphic");
  }
  if (!f.graph.is_tree()) throw DomainError("the attached graph F must be a tree");
  return {coalesce(f, {pair.tree, pair.u}), coalesce(f, {pair.tree, pair.v})};
}

long verify_r6_difference(const RootedGraph& f, const CospectralVertexPair& pair) {
  const auto [at_u, at_v] = schwenk_pair(f, pair);
  const Graph r6 = small_tree("R6");
  return static_cast<long>(count_pattern(at_v, r6)) - static_cast<long>(count_pattern(at_u, r6));
}

CospectralVertexPair oriented_for_r6(CospectralVertexPair pair) {
  const RootedGraph pendant{path_graph(2), 0};
  if (verify_r6_difference(pendant, pair) < 0) std::swap(pair.u, pair.v);
  return pair;
}

// ---------------------------------------------------------------------------
// Fixture catalog

std::vector<SchwenkFixture> schwenk_fixtures() {
  const auto doc = nlohmann::json::parse(detail::kFixturesJson);
  std::vector<SchwenkFixture> out;
  for (const auto& entry : doc.at("schwenk_witnesses")) {
    CospectralVertexPair pair;
    pair.tree = parse_graph6(entry.at("graph6").get<std::string>());
    pair.u = entry.at("u").get<int>();
    pair.v = entry.at("v").get<int>();
    pair.similar = tree_automorphism_mapping(pair.tree, pair.u, pair.v).has_value();
    out.push_back({entry.at("name").get<std::string>(), std::move(pair)});
  }
  return out;
}

SchwenkFixture schwenk_fixture(std::string_view name) {
  for (auto& f : schwenk_fixtures()) {
    if (f.name == name) return f;
  }
  throw DomainError("unknown Schwenk fixture: " + std::string(name));
}

SchwenkFixture r6_witness() {
  const auto doc = nlohmann::json::parse(detail::kFixturesJson);
  return schwenk_fixture(doc.at("r6_witness").get<std::string>());
}

namespace {

std::optional<int> parse_int(std::string_view s) {
  int value = 0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc() || ptr != s.data() + s.size() || s.empty()) return std::nullopt;
  return value;
}

std::optional<Graph> named_graph(std::string_view name) {
  if (name.starts_with("schwenk")) {
    for (auto& f : schwenk_fixtures()) {
      if (f.name == name) return f.pair.tree;
    }
  }
  for (auto n : {"Q5", "Q6", "R6", "H6", "J6"}) {
    if (name == n) return small_tree(name);
  }
  for (auto f : {SmithFamily::E6, SmithFamily::E7, SmithFamily::E8, SmithFamily::E6Tilde,
                 SmithFamily::E7Tilde, SmithFamily::E8Tilde}) {
    if (name == to_string(f)) return smith_graph(f, smith_min_vertices(f));
  }
  if (name.starts_with("K1,")) {
    if (auto n = parse_int(name.substr(3))) return star_graph(*n + 1);
  }
  if (name.starts_with("Dt")) {
    if (auto n = parse_int(name.substr(2))) return smith_graph(SmithFamily::DTilde, *n);
  }
  if (name.size() >= 2) {
    const auto n = parse_int(name.substr(1));
    if (n && *n >= 0) {
      switch (name[0]) {
        case 'P': return path_graph(*n);
        case 'C': return cycle_graph(*n);
        case 'S': return star_graph(*n);
        case 'K': return complete_graph(*n);
        case 'D': return smith_graph(SmithFamily::D, *n);
        default: break;
      }
    }
  }
  return std::nullopt;
}

}  // namespace

Graph resolve_graph(std::string_view spec) {
  const auto plus = spec.find('+');
  if (plus != std::string_view::npos) {
    return disjoint_union(resolve_graph(spec.substr(0, plus)), resolve_graph(spec.substr(plus + 1)));
  }
  if (auto g = named_graph(spec)) return *g;
  return parse_graph6(spec);
}

}  // namespace hospec
