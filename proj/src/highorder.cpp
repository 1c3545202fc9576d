#include "hospec/highorder.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numbers>
#include <sstream>

#include "hospec/constructions.hpp"
#include "hospec/errors.hpp"
#include "hospec/moments.hpp"

namespace hospec {

BaseRegime regime_for_order(int k) {
  if (k < 3) throw DomainError("power order must be at least 3 for the subgraph reduction");
  return k == 3 ? BaseRegime::InducedK3 : BaseRegime::AllSubgraphsKGT3;
}

std::string to_string(BaseRegime r) {
  return r == BaseRegime::InducedK3 ? "k3-induced" : "kGT3-all";
}

std::vector<double> EigenBase::plain() const {
  std::vector<double> out;
  out.reserve(values.size());
  for (const auto& v : values) out.push_back(v.value);
  return out;
}

bool EigenBase::contains(double x, double tol) const {
  return std::any_of(values.begin(), values.end(),
                     [&](const BaseValue& v) { return std::abs(v.value - x) <= tol; });
}

nlohmann::json EigenBase::to_json() const {
  nlohmann::json vs = nlohmann::json::array();
  for (const auto& v : values) {
    nlohmann::json e = {{"value", v.value}, {"witness", to_graph6(v.witness)}};
    if (!v.closed_form.empty()) e["closed_form"] = v.closed_form;
    vs.push_back(std::move(e));
  }
  return {{"regime", to_string(regime)}, {"tolerance", tolerance}, {"values", std::move(vs)}};
}

namespace {

struct Candidate {
  double value;
  int witness_edges;
  std::uint64_t witness_mask;
  Graph witness;
};

bool is_path_graph(const Graph& g) {
  if (!g.is_tree()) return false;
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    if (g.degree(v) > 2) return false;
  }
  return true;
}

bool is_cycle(const Graph& g) {
  if (g.vertex_count() < 3 || g.edge_count() != g.vertex_count() || !g.is_connected()) return false;
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    if (g.degree(v) != 2) return false;
  }
  return true;
}

bool is_star(const Graph& g) {
  if (!g.is_tree() || g.vertex_count() < 3) return false;
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    if (g.degree(v) == g.vertex_count() - 1) return true;
  }
  return false;
}

std::string closed_form_for(const Graph& w, double value) {
  constexpr double match = 1e-7;
  const int n = w.vertex_count();
  if (n == 1) return "0";
  if (is_path_graph(w)) {
    for (int t = 1; t <= n; ++t) {
      const double b = 2.0 * std::cos(std::numbers::pi * t / (n + 1));
      if (std::abs(b * b - value) <= match) {
        return "(2cos(" + std::to_string(t) + "pi/" + std::to_string(n + 1) + "))^2";
      }
    }
  }
  if (is_cycle(w)) {
    for (int r = 1; r <= n; ++r) {
      const double b = 2.0 * std::cos(2.0 * std::numbers::pi * r / n);
      if (std::abs(b * b - value) <= match) {
        return "(2cos(2pi*" + std::to_string(r) + "/" + std::to_string(n) + "))^2";
      }
    }
  }
  if (is_star(w)) {
    const int leaves = n - 1;
    if (std::abs(value - leaves) <= match) return std::to_string(leaves);
    if (std::abs(value) <= match) return "0";
  }
  return {};
}

// Tolerance-aware dedup in one pass over the sorted values: a run of values
// each within tol of its predecessor collapses to one entry, witnessed by
// the smallest subgraph in the run.
std::vector<BaseValue> dedup(std::vector<Candidate> all, double tol) {
  std::stable_sort(all.begin(), all.end(),
                   [](const Candidate& a, const Candidate& b) { return a.value < b.value; });
  std::vector<BaseValue> out;
  std::size_t i = 0;
  while (i < all.size()) {
    std::size_t j = i + 1;
    std::size_t best = i;
    while (j < all.size() && all[j].value - all[j - 1].value <= tol) {
      if (std::tie(all[j].witness_edges, all[j].witness_mask) <
          std::tie(all[best].witness_edges, all[best].witness_mask)) {
        best = j;
      }
      ++j;
    }
    BaseValue bv;
    bv.value = all[i].value;
    bv.witness = all[best].witness;
    bv.closed_form = closed_form_for(bv.witness, bv.value);
    out.push_back(std::move(bv));
    i = j;
  }
  return out;
}

std::vector<double> squared_eigenvalues(const Graph& g, double tol) {
  std::vector<double> out;
  for (double b : eigenvalues(g, tol).eigenvalues) {
    const double sq = b * b;
    out.push_back(sq < tol ? 0.0 : sq);
  }
  return out;
}

}  // namespace

EigenBase eigen_base_set(const Graph& g, BaseRegime regime, double tol, std::uint64_t budget) {
  if (!(tol > 0.0)) throw DomainError("tolerance must be positive");
  EigenBase base;
  base.regime = regime;
  base.tolerance = tol;
  std::vector<Candidate> all;
  // Subtrees recur under many labelings; their spectra are shared by code.
  std::map<CanonicalTreeCode, std::vector<double>> tree_cache;
  auto spectrum_of = [&](const Graph& sub) {
    if (sub.is_tree()) {
      auto code = tree_canonical_code(sub);
      auto it = tree_cache.find(code);
      if (it == tree_cache.end()) it = tree_cache.emplace(code, squared_eigenvalues(sub, tol)).first;
      return it->second;
    }
    return squared_eigenvalues(sub, tol);
  };
  auto add = [&](const Graph& sub, std::uint64_t mask) {
    for (double sq : spectrum_of(sub)) {
      all.push_back({sq, sub.edge_count(), mask, sub});
    }
  };

  if (regime == BaseRegime::AllSubgraphsKGT3) {
    if (g.edge_count() > 0) {
      for_each_connected_edge_subset(
          g, g.edge_count(), [&](EdgeMask mask) { add(edge_subgraph(g, mask), mask); }, budget);
    }
  } else if (g.vertex_count() > 0) {
    for_each_connected_vertex_subset(
        g, g.vertex_count(),
        [&](VertexMask mask) {
          std::vector<Vertex> vs;
          for (Vertex v = 0; v < g.vertex_count(); ++v) {
            if (mask >> v & 1U) vs.push_back(v);
          }
          add(g.induced(vs), mask);
        },
        budget);
  }
  base.values = dedup(std::move(all), tol);
  return base;
}

std::complex<double> PowerEigenvalue::value() const {
  return std::polar(std::pow(base, 1.0 / k), 2.0 * std::numbers::pi * phase / k);
}

namespace {

std::vector<double> dedup_plain(std::vector<double> values, double tol) {
  std::sort(values.begin(), values.end());
  std::vector<double> out;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i == 0 || values[i] - values[i - 1] > tol) out.push_back(values[i]);
  }
  return out;
}

std::vector<PowerEigenvalue> with_phases(const std::vector<double>& bases, int k, double tol) {
  std::vector<PowerEigenvalue> out;
  for (double b : bases) {
    if (b <= tol) {
      out.push_back({0.0, k, k});
      continue;
    }
    for (int theta = 1; theta <= k; ++theta) out.push_back({b, theta, k});
  }
  return out;
}

}  // namespace

std::vector<PowerEigenvalue> power_distinct_eigenvalues(const Graph& g, int k, double tol,
                                                        std::uint64_t budget) {
  const auto base = eigen_base_set(g, regime_for_order(k), tol, budget);
  return with_phases(base.plain(), k, tol);
}

std::vector<PowerEigenvalue> hyperpath_distinct_eigenvalues(int n, int k, double tol) {
  if (n < 2) throw DomainError("hyperpath needs n >= 2");
  if (k < 2) throw DomainError("power order must be at least 2");
  std::vector<double> bases;
  for (int j = 1; j <= n; ++j) {
    for (int t = 1; t <= j; ++t) {
      const double b = 2.0 * std::cos(std::numbers::pi * t / (j + 1));
      bases.push_back(std::abs(b * b) < tol ? 0.0 : b * b);
    }
  }
  return with_phases(dedup_plain(std::move(bases), tol), k, tol);
}

std::vector<PowerEigenvalue> hypercycle_distinct_eigenvalues(int n, int k, double tol) {
  if (n < 3) throw DomainError("hypercycle needs n >= 3");
  if (k <= 3) throw DomainError("the hypercycle closed form is stated for k > 3");
  std::vector<double> bases;
  for (int j = 1; j <= n - 1; ++j) {
    for (int t = 1; t <= j; ++t) {
      const double b = 2.0 * std::cos(std::numbers::pi * t / (j + 1));
      bases.push_back(b * b < tol ? 0.0 : b * b);
    }
  }
  for (int r = 1; r <= n; ++r) {
    const double b = 2.0 * std::cos(2.0 * std::numbers::pi * r / n);
    bases.push_back(b * b < tol ? 0.0 : b * b);
  }
  return with_phases(dedup_plain(std::move(bases), tol), k, tol);
}

std::vector<double> distinct_bases(const std::vector<PowerEigenvalue>& values, double tol) {
  std::vector<double> bases;
  for (const auto& v : values) bases.push_back(v.base);
  return dedup_plain(std::move(bases), tol);
}

BaseComparison compare_bases(const std::vector<double>& first, const std::vector<double>& second,
                             double tol) {
  auto near_any = [tol](double x, const std::vector<double>& pool) {
    return std::any_of(pool.begin(), pool.end(), [&](double y) { return std::abs(x - y) <= tol; });
  };
  BaseComparison c;
  for (double x : first) {
    if (!near_any(x, second)) c.only_first.push_back(x);
  }
  for (double y : second) {
    if (!near_any(y, first)) c.only_second.push_back(y);
  }
  return c;
}

BaseComparison check_hyperpath_closed_form(int n, int k, double tol) {
  const auto formula = distinct_bases(hyperpath_distinct_eigenvalues(n, k, tol), tol);
  const auto truth = eigen_base_set(path_graph(n), regime_for_order(k), tol).plain();
  return compare_bases(formula, truth, tol);
}

BaseComparison check_hypercycle_closed_form(int n, int k, double tol) {
  const auto formula = distinct_bases(hypercycle_distinct_eigenvalues(n, k, tol), tol);
  const auto truth = eigen_base_set(cycle_graph(n), regime_for_order(k), tol).plain();
  return compare_bases(formula, truth, tol);
}

long cr_invariant(const Graph& g) {
  long p3 = 0;
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    const long d = g.degree(v);
    p3 += d * (d - 1) / 2;
  }
  // Each 4-cycle is seen once from each of its two diagonals.
  long c4_twice = 0;
  for (Vertex u = 0; u < g.vertex_count(); ++u) {
    for (Vertex v = u + 1; v < g.vertex_count(); ++v) {
      long common = 0;
      for (Vertex w : g.neighbors(u)) {
        if (g.has_edge(w, v)) ++common;
      }
      c4_twice += common * (common - 1) / 2;
    }
  }
  return p3 + c4_twice;  // 2 N_{C4} = c4_twice
}

// ---------------------------------------------------------------------------
// Tree verdict

std::string to_string(VerdictStage s) {
  switch (s) {
    case VerdictStage::None: return "undistinguished";
    case VerdictStage::Spectrum: return "spectrum";
    case VerdictStage::SubtreeCensus: return "subtree-census";
    case VerdictStage::InvariantVector: return "invariant-vector";
    case VerdictStage::BaseSet: return "base-set";
  }
  return "?";
}

nlohmann::json HighOrderVerdict::to_json() const {
  nlohmann::json j = {{"cospectral_k2", cospectral_k2},
                      {"base_sets_equal", base_sets_equal},
                      {"distinguished", distinguished()},
                      {"first_failure", to_string(first_failure)}};
  j["census_equal"] = census_equal ? nlohmann::json(*census_equal) : nlohmann::json(nullptr);
  j["tree_invariants_equal"] =
      tree_invariants_equal ? nlohmann::json(*tree_invariants_equal) : nlohmann::json(nullptr);
  if (!first_witness.empty()) j["first_witness"] = first_witness;
  return j;
}

namespace {

std::string describe_code(const CanonicalTreeCode& code) {
  if (auto name = small_tree_name(code)) return *name;
  return "tree " + code.hex() + " (" + to_graph6(tree_from_code(code)) + ")";
}

std::string fmt(double x) {
  std::ostringstream os;
  os.precision(12);
  os << x;
  return os.str();
}

}  // namespace

HighOrderVerdict high_order_tree_test(const Graph& t1, const Graph& t2, int m_max, int d_max,
                                      double tol) {
  if (!t1.is_tree() || !t2.is_tree()) throw DomainError("high_order_tree_test requires trees");
  HighOrderVerdict verdict;
  auto fail = [&](VerdictStage stage, std::string witness) {
    if (verdict.first_failure == VerdictStage::None) {
      verdict.first_failure = stage;
      verdict.first_witness = std::move(witness);
    }
  };

  const auto p1 = characteristic_polynomial(t1);
  const auto p2 = characteristic_polynomial(t2);
  verdict.cospectral_k2 = p1 == p2;
  if (!verdict.cospectral_k2) {
    for (int i = std::max(p1.degree(), p2.degree()); i >= 0; --i) {
      if (p1.coefficient(i) != p2.coefficient(i)) {
        fail(VerdictStage::Spectrum, "characteristic polynomial coefficient of x^" +
                                         std::to_string(i) + ": " + p1.coefficient(i).get_str() +
                                         " vs " + p2.coefficient(i).get_str());
        break;
      }
    }
  }

  const int common_edges = std::min(t1.edge_count(), t2.edge_count());
  bool census_equal = true;
  const int census_top = std::min({kDefaultCensusEdges, m_max, common_edges});
  for (int m = 1; m <= census_top; ++m) {
    const auto c1 = subtree_census(t1, m);
    const auto c2 = subtree_census(t2, m);
    if (c1.counts == c2.counts) continue;
    census_equal = false;
    std::map<CanonicalTreeCode, std::pair<std::uint64_t, std::uint64_t>> both;
    for (const auto& [code, n] : c1.counts) both[code].first = n;
    for (const auto& [code, n] : c2.counts) both[code].second = n;
    for (const auto& [code, n] : both) {
      if (n.first != n.second) {
        fail(VerdictStage::SubtreeCensus, "subtree " + describe_code(code) + " occurs " +
                                              std::to_string(n.first) + " vs " +
                                              std::to_string(n.second) + " times");
        break;
      }
    }
  }
  if (census_top >= 1) verdict.census_equal = census_equal;

  bool vectors_equal = true;
  TreeCoefficientCache cache;
  for (int m = 1; m <= std::min(m_max, common_edges); ++m) {
    for (int d = 2 * m; d <= d_max; d += 2) {
      const auto y1 = invariant_vector(t1, m, d, &cache);
      const auto y2 = invariant_vector(t2, m, d, &cache);
      if (y1.value != y2.value) {
        vectors_equal = false;
        fail(VerdictStage::InvariantVector, "weighted subtree sum (m=" + std::to_string(m) +
                                                ", d=" + std::to_string(d) +
                                                "): " + y1.value.get_str() + " vs " +
                                                y2.value.get_str());
      }
    }
  }
  if (common_edges >= 1) verdict.tree_invariants_equal = census_equal && vectors_equal;

  verdict.base_sets_equal = true;
  for (auto regime : {BaseRegime::AllSubgraphsKGT3, BaseRegime::InducedK3}) {
    const auto b1 = eigen_base_set(t1, regime, tol).plain();
    const auto b2 = eigen_base_set(t2, regime, tol).plain();
    const auto cmp = compare_bases(b1, b2, tol);
    if (cmp.equal()) continue;
    verdict.base_sets_equal = false;
    const bool in_first = !cmp.only_first.empty();
    const double w = in_first ? cmp.only_first.front() : cmp.only_second.front();
    fail(VerdictStage::BaseSet, "beta^2 = " + fmt(w) + " (" + to_string(regime) + ") only in " +
                                    (in_first ? "first" : "second") + " tree");
  }
  return verdict;
}

// ---------------------------------------------------------------------------
// Smith mates

namespace {

struct SmithComponent {
  std::string label;
  Graph graph;
  IntPolynomial charpoly;
  std::string key;
};

std::string component_key(const Graph& c) {
  if (c.is_tree()) return "T" + tree_canonical_code(c).hex();
  if (is_cycle(c)) return "C" + std::to_string(c.vertex_count());
  throw DomainError("component is neither a tree nor a cycle");
}

std::vector<std::string> component_keys(const Graph& g) {
  std::vector<std::string> keys;
  for (const auto& comp : g.components()) keys.push_back(component_key(g.induced(comp)));
  std::sort(keys.begin(), keys.end());
  return keys;
}

std::vector<SmithComponent> smith_catalog(int max_vertices) {
  std::vector<SmithComponent> out;
  std::vector<std::string> seen;
  auto add = [&](SmithFamily f, int v) {
    Graph g = smith_graph(f, v);
    std::string key = component_key(g);
    if (std::find(seen.begin(), seen.end(), key) != seen.end()) return;
    seen.push_back(key);
    std::string label = to_string(f);
    if (f == SmithFamily::P || f == SmithFamily::C || f == SmithFamily::D ||
        f == SmithFamily::DTilde) {
      label += std::to_string(v);
    }
    auto poly = characteristic_polynomial(g);
    out.push_back({std::move(label), std::move(g), std::move(poly), std::move(key)});
  };
  for (int v = 1; v <= max_vertices; ++v) {
    for (auto f : {SmithFamily::P, SmithFamily::C, SmithFamily::D, SmithFamily::DTilde}) {
      if (v >= smith_min_vertices(f)) add(f, v);
    }
    for (auto f : {SmithFamily::E6, SmithFamily::E7, SmithFamily::E8, SmithFamily::E6Tilde,
                   SmithFamily::E7Tilde, SmithFamily::E8Tilde}) {
      if (v == smith_min_vertices(f)) add(f, v);
    }
  }
  return out;
}

}  // namespace

std::vector<Graph> smith_mate_search(const Graph& target, double tol) {
  const double radius = eigenvalues(target, tol).radius();
  if (radius > 2.0 + tol) {
    throw DomainError("target is outside the Smith regime: spectral radius " + fmt(radius));
  }
  const int n = target.vertex_count();
  const int e = target.edge_count();
  const auto goal = characteristic_polynomial(target);
  const auto target_keys = component_keys(target);
  const auto catalog = smith_catalog(n);

  std::vector<Graph> mates;
  std::vector<std::size_t> chosen;
  auto search = [&](auto&& self, std::size_t from, int v_left, int e_left) -> void {
    if (v_left == 0) {
      if (e_left != 0) return;
      IntPolynomial poly = IntPolynomial::constant(1);
      std::vector<std::string> keys;
      for (std::size_t i : chosen) {
        poly = poly * catalog[i].charpoly;
        keys.push_back(catalog[i].key);
      }
      if (poly != goal) return;
      std::sort(keys.begin(), keys.end());
      if (keys == target_keys) return;
      Graph g(0);
      for (std::size_t i : chosen) g = disjoint_union(g, catalog[i].graph);
      mates.push_back(std::move(g));
      return;
    }
    for (std::size_t i = from; i < catalog.size(); ++i) {
      const int cv = catalog[i].graph.vertex_count();
      const int ce = catalog[i].graph.edge_count();
      if (cv > v_left || ce > e_left) continue;
      // Every component has at most as many edges as vertices.
      if (e_left - ce > v_left - cv) continue;
      chosen.push_back(i);
      self(self, i, v_left - cv, e_left - ce);
      chosen.pop_back();
    }
  };
  search(search, 0, n, e);
  return mates;
}

}  // namespace hospec
