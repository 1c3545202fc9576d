// Command-line front end for the hospec library.
#include <cmath>
#include <iostream>
#include <numbers>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "hospec/census.hpp"
#include "hospec/constructions.hpp"
#include "hospec/errors.hpp"
#include "hospec/highorder.hpp"
#include "hospec/moments.hpp"
#include "hospec/reports.hpp"
#include "hospec/spectrum.hpp"

using namespace hospec;
using nlohmann::json;

namespace {

enum ExitCode { kOk = 0, kMismatch = 1, kUsage = 2, kBudget = 3 };

struct Options {
  std::string format = "text";
  double tol = kDefaultTolerance;
  std::uint64_t budget = kDefaultBudget;
  int k = 4;
  int d = 0;
  int m = 0;
  int n = 0;
  std::vector<std::string> graphs;
  std::string family;
  int size = 0;
  std::string fixture;
  std::string attach;
  int root = 0;
  bool oracle = false;
};

json envelope(const std::string& command) {
  return {{"schema_version", kSchemaVersion}, {"command", command}};
}

void emit(const Options& o, const json& j, const std::string& text) {
  if (o.format == "json") {
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << text;
  }
}

std::string describe_code(const CanonicalTreeCode& c) {
  if (auto name = small_tree_name(c)) return *name;
  return c.hex();
}

int cmd_spectrum(const Options& o) {
  const Graph g = resolve_graph(o.graphs.at(0));
  const Spectrum s = eigenvalues(g, o.tol);
  json j = envelope("spectrum");
  j["graph6"] = to_graph6(g);
  j["eigenvalues"] = s.eigenvalues;
  j["tolerance"] = s.tolerance;
  std::ostringstream os;
  os.precision(12);
  for (double x : s.eigenvalues) os << x << "\n";
  emit(o, j, os.str());
  return kOk;
}

int cmd_charpoly(const Options& o) {
  const Graph g = resolve_graph(o.graphs.at(0));
  const auto p = characteristic_polynomial(g);
  json j = envelope("charpoly");
  j["graph6"] = to_graph6(g);
  j["coefficients"] = p.to_strings();
  j["polynomial"] = p.to_string();
  emit(o, j, p.to_string() + "\n");
  return kOk;
}

int cmd_cospectral(const Options& o) {
  const Graph a = resolve_graph(o.graphs.at(0));
  const Graph b = resolve_graph(o.graphs.at(1));
  const bool same = is_cospectral(a, b);
  json j = envelope("cospectral");
  j["first"] = to_graph6(a);
  j["second"] = to_graph6(b);
  j["cospectral"] = same;
  j["charpoly_first"] = characteristic_polynomial(a).to_string();
  j["charpoly_second"] = characteristic_polynomial(b).to_string();
  emit(o, j, std::string(same ? "cospectral" : "not cospectral") + "\n");
  return kOk;
}

int cmd_census(const Options& o) {
  const Graph t = resolve_graph(o.graphs.at(0));
  if (o.m < 1) throw CLI::ValidationError("--m", "census needs --m >= 1");
  const auto c = subtree_census(t, o.m, o.budget);
  json j = envelope("census");
  j.update(c.to_json());
  std::ostringstream os;
  for (const auto& [code, n] : c.counts) os << describe_code(code) << " " << n << "\n";
  os << "total " << c.total() << "\n";
  if (o.format == "csv") {
    std::ostringstream csv;
    csv << "code,name,count\n";
    for (const auto& [code, n] : c.counts) {
      csv << code.hex() << "," << small_tree_name(code).value_or("") << "," << n << "\n";
    }
    std::cout << csv.str();
    return kOk;
  }
  emit(o, j, os.str());
  return kOk;
}

int cmd_coeff(const Options& o) {
  const Graph g = resolve_graph(o.graphs.at(0));
  if (o.d < 1) throw CLI::ValidationError("--d", "coeff needs --d >= 1");
  json j = envelope("coeff");
  j["graph6"] = to_graph6(g);
  j["d"] = o.d;
  std::ostringstream os;
  int rc = kOk;
  const auto walk = coeff_cd_walk_oracle(g, o.d);
  j["walk_oracle"] = walk.get_str();
  if (g.is_tree()) {
    const auto formula = coeff_cd_tree(g, o.d);
    j["formula"] = formula.get_str();
    j["agree"] = formula == walk;
    os << "c_" << o.d << " = " << formula.get_str() << " (walk oracle " << walk.get_str() << ")\n";
    if (formula != walk) rc = kMismatch;
  } else {
    os << "c_" << o.d << " = " << walk.get_str() << " (walk oracle; graph is not a tree)\n";
  }
  emit(o, j, os.str());
  return rc;
}

int cmd_moments(const Options& o) {
  const Graph g = resolve_graph(o.graphs.at(0));
  if (o.d < 0) throw CLI::ValidationError("--d", "moments needs --d >= 0");
  const auto trace = spectral_moment(g, o.d);
  json j = envelope("moments");
  j["graph6"] = to_graph6(g);
  j["d"] = o.d;
  j["trace"] = trace.get_str();
  std::ostringstream os;
  os << "S_" << o.d << " = " << trace.get_str() << "\n";
  int rc = kOk;
  if (g.is_tree() && o.d >= 1) {
    const auto via_subtrees = tree_spectral_moment(g, o.d);
    j["subtree_sum"] = via_subtrees.get_str();
    j["agree"] = via_subtrees == trace;
    os << "subtree sum = " << via_subtrees.get_str() << "\n";
    if (via_subtrees != trace) rc = kMismatch;
  }
  emit(o, j, os.str());
  return rc;
}

int cmd_hyper_moment(const Options& o) {
  const Graph t = resolve_graph(o.graphs.at(0));
  if (o.d < 1) throw CLI::ValidationError("--d", "hyper-moment needs --d >= 1");
  const auto s = power_hypertree_moment(t, o.k, o.d);
  json j = envelope("hyper-moment");
  j["graph6"] = to_graph6(t);
  j["k"] = o.k;
  j["d"] = o.d;
  j["moment"] = s.get_str();
  emit(o, j, "S_" + std::to_string(o.d) + "(T^(" + std::to_string(o.k) + ")) = " + s.get_str() + "\n");
  return kOk;
}

int cmd_base_set(const Options& o) {
  const Graph g = resolve_graph(o.graphs.at(0));
  const auto base = eigen_base_set(g, regime_for_order(o.k), o.tol, o.budget);
  json j = envelope("base-set");
  j["graph6"] = to_graph6(g);
  j["k"] = o.k;
  j.update(base.to_json());
  std::ostringstream os;
  os.precision(12);
  for (const auto& v : base.values) {
    os << v.value << "  witness " << to_graph6(v.witness);
    if (!v.closed_form.empty()) os << "  = " << v.closed_form;
    os << "\n";
  }
  emit(o, j, os.str());
  return kOk;
}

int cmd_high_order_test(const Options& o) {
  const Graph a = resolve_graph(o.graphs.at(0));
  const Graph b = resolve_graph(o.graphs.at(1));
  const int m_max = o.m > 0 ? o.m : kDefaultCensusEdges;
  const int d_max = o.d > 0 ? o.d : kDefaultMaxOrder;
  const auto v = high_order_tree_test(a, b, m_max, d_max, o.tol);
  json j = envelope("high-order-test");
  j["first"] = to_graph6(a);
  j["second"] = to_graph6(b);
  j.update(v.to_json());
  std::string text = v.distinguished()
                         ? "distinguished at " + to_string(v.first_failure) + ": " + v.first_witness + "\n"
                         : "not distinguished by the implemented necessary conditions\n";
  emit(o, j, text);
  return kOk;
}

int cmd_smith(const Options& o) {
  const auto family = parse_smith_family(o.family);
  if (!family) throw CLI::ValidationError("family", "unknown Smith family " + o.family);
  const int size = o.size > 0 ? o.size : smith_min_vertices(*family);
  const Graph g = smith_graph(*family, size);
  const double radius = eigenvalues(g, o.tol).radius();
  json j = envelope("smith");
  j["family"] = to_string(*family);
  j["vertices"] = size;
  j["graph6"] = to_graph6(g);
  j["graph"] = to_json(g);
  j["spectral_radius"] = radius;
  std::ostringstream os;
  os.precision(12);
  os << to_graph6(g) << "  spectral radius " << radius << "\n";
  emit(o, j, os.str());
  return kOk;
}

int cmd_saltire(const Options& o) {
  const auto [c4k1, star] = saltire_pair();
  const bool cospectral = is_cospectral(c4k1, star);
  const auto cmp = compare_bases(eigen_base_set(c4k1, BaseRegime::AllSubgraphsKGT3, o.tol).plain(),
                                 eigen_base_set(star, BaseRegime::AllSubgraphsKGT3, o.tol).plain(),
                                 o.tol);
  json j = envelope("saltire");
  j["first"] = to_graph6(c4k1);
  j["second"] = to_graph6(star);
  j["cospectral"] = cospectral;
  j["base_only_first"] = cmp.only_first;
  j["base_only_second"] = cmp.only_second;
  std::ostringstream os;
  os.precision(12);
  os << "C4+K1 " << to_graph6(c4k1) << ", K1,4 " << to_graph6(star) << "\n";
  os << (cospectral ? "cospectral" : "NOT cospectral") << "\n";
  os << "beta^2 only in C4+K1:";
  for (double x : cmp.only_first) os << " " << x;
  os << "\nbeta^2 only in K1,4:";
  for (double x : cmp.only_second) os << " " << x;
  os << "\n";
  emit(o, j, os.str());
  return cospectral && !cmp.equal() ? kOk : kMismatch;
}

int cmd_schwenk(const Options& o) {
  const SchwenkFixture fixture = o.fixture.empty() ? r6_witness() : schwenk_fixture(o.fixture);
  const CospectralVertexPair pair = oriented_for_r6(fixture.pair);
  const RootedGraph f{o.attach.empty() ? path_graph(2) : resolve_graph(o.attach), o.root};
  const auto [at_u, at_v] = schwenk_pair(f, pair);
  const bool cospectral = is_cospectral(at_u, at_v);
  const bool distinct = tree_canonical_code(at_u) != tree_canonical_code(at_v);
  const auto verdict = high_order_tree_test(at_u, at_v, kDefaultCensusEdges, kDefaultMaxOrder, o.tol);
  const bool census_differs = verdict.census_equal.has_value() && !*verdict.census_equal;
  const long r6 = verify_r6_difference(f, pair);
  const int degree = f.graph.degree(f.root);
  json j = envelope("schwenk");
  j["fixture"] = fixture.name;
  j["tree"] = to_graph6(pair.tree);
  j["u"] = pair.u;
  j["v"] = pair.v;
  j["attached"] = to_graph6(f.graph);
  j["root"] = f.root;
  j["root_degree"] = degree;
  j["at_u"] = to_graph6(at_u);
  j["at_v"] = to_graph6(at_v);
  j["cospectral"] = cospectral;
  j["non_isomorphic"] = distinct;
  j["census_differs"] = census_differs;
  j["r6_difference"] = r6;
  j["r6_matches_root_degree"] = r6 == degree;
  j["verdict"] = verdict.to_json();
  std::ostringstream os;
  os << "F.T_u " << to_graph6(at_u) << "\nF.T_v " << to_graph6(at_v) << "\n"
     << "cospectral: " << (cospectral ? "yes" : "NO") << "\n"
     << "non-isomorphic: " << (distinct ? "yes" : "NO") << "\n"
     << "subtree censuses (<= 5 edges) differ: " << (census_differs ? "yes" : "NO") << "\n"
     << "N(R6) difference " << r6 << ", root degree " << degree
     << (r6 == degree ? "" : "  MISMATCH") << "\n";
  emit(o, j, os.str());
  return cospectral && distinct && census_differs && r6 == degree ? kOk : kMismatch;
}

int cmd_mate_search(const Options& o) {
  const Graph g = resolve_graph(o.graphs.at(0));
  const auto mates = smith_mate_search(g, o.tol);
  json j = envelope("mate-search");
  j["graph6"] = to_graph6(g);
  json ms = json::array();
  std::ostringstream os;
  for (const auto& m : mates) {
    ms.push_back(to_graph6(m));
    os << to_graph6(m) << "\n";
  }
  j["mates"] = ms;
  if (mates.empty()) os << "no cospectral mates among Smith component unions\n";
  emit(o, j, os.str());
  return kOk;
}

int cmd_tables(const Options& o) {
  const auto report = reproduce_tables();
  if (o.format == "json") {
    json j = envelope("tables");
    j.update(report.to_json());
    std::cout << j.dump(2) << "\n";
  } else if (o.format == "csv") {
    std::cout << report.to_csv();
  } else {
    std::cout << report.to_text();
  }
  return report.all_match() ? kOk : kMismatch;
}

int cmd_hunt(const Options& o) {
  const int m_max = o.m > 0 ? o.m : kDefaultCensusEdges;
  const int d_max = o.d > 0 ? o.d : kDefaultMaxOrder;
  const auto report = hunt(o.n, m_max, d_max, o.tol);
  json j = envelope("hunt");
  j.update(report.to_json());
  emit(o, j, report.to_text());
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact ordinary and high-ordered spectral invariants of graphs and trees"};
  app.require_subcommand(1);
  Options o;
  app.add_option("--format", o.format, "Output format")
      ->check(CLI::IsMember({"json", "csv", "text"}))
      ->capture_default_str();
  app.add_option("--tol", o.tol, "Numeric tolerance")->capture_default_str();
  app.add_option("--budget", o.budget, "Subgraph enumeration cap")->capture_default_str();

  auto graphs = [&](CLI::App* sub, int count) {
    sub->add_option("graphs", o.graphs, "graph6 strings or catalog names")
        ->required()
        ->expected(count);
  };

  struct Entry {
    CLI::App* app;
    int (*run)(const Options&);
  };
  std::vector<Entry> entries;
  auto add = [&](const char* name, const char* help, int (*run)(const Options&)) {
    CLI::App* sub = app.add_subcommand(name, help);
    // Global flags are accepted after the subcommand too.
    sub->fallthrough();
    entries.push_back({sub, run});
    return sub;
  };

  graphs(add("spectrum", "Numeric adjacency eigenvalues", cmd_spectrum), 1);
  graphs(add("charpoly", "Exact characteristic polynomial", cmd_charpoly), 1);
  graphs(add("cospectral", "Exact cospectrality of two graphs", cmd_cospectral), 2);

  auto* census = add("census", "Subtree census of a tree", cmd_census);
  graphs(census, 1);
  census->add_option("--m", o.m, "Subtree edge count")->required();

  auto* coeff = add("coeff", "Spectral moment coefficient c_d", cmd_coeff);
  graphs(coeff, 1);
  coeff->add_option("--d", o.d, "Order")->required();

  auto* moments = add("moments", "Spectral moment S_d", cmd_moments);
  graphs(moments, 1);
  moments->add_option("--d", o.d, "Order")->required();

  auto* hyper = add("hyper-moment", "Spectral moment of the k-power hypertree", cmd_hyper_moment);
  graphs(hyper, 1);
  hyper->add_option("--k", o.k, "Power order")->required();
  hyper->add_option("--d", o.d, "Order")->required();

  auto* base = add("base-set", "beta^2 base set of G^(k)", cmd_base_set);
  graphs(base, 1);
  base->add_option("--k", o.k, "Power order (3: induced subgraphs, >3: all)")->capture_default_str();

  auto* hot = add("high-order-test", "Compare two trees by high-ordered invariants",
                  cmd_high_order_test);
  graphs(hot, 2);
  hot->add_option("--m", o.m, "Largest subtree size (default 5)");
  hot->add_option("--d", o.d, "Largest even order (default 20)");

  auto* smith = add("smith", "Construct a Smith graph", cmd_smith);
  smith->add_option("family", o.family, "P C D E6 E7 E8 Dt Et6 Et7 Et8")->required();
  smith->add_option("size", o.size, "Vertex count");

  add("saltire", "The Saltire pair and its base-set witness", cmd_saltire);

  auto* schwenk = add("schwenk", "Schwenk coalescence pair and R6 check", cmd_schwenk);
  schwenk->add_option("--fixture", o.fixture, "Fixture name (default: R6 witness)");
  schwenk->add_option("--attach", o.attach, "Rooted tree F (graph spec, default P2)");
  schwenk->add_option("--root", o.root, "Root of F")->capture_default_str();

  graphs(add("mate-search", "Cospectral mates among Smith component unions", cmd_mate_search), 1);
  add("tables", "Reproduce the coefficient tables", cmd_tables);

  auto* hunt_cmd = add("hunt", "Bucket all trees on n vertices by spectrum and separate", cmd_hunt);
  hunt_cmd->add_option("--n", o.n, "Vertex count")->required();
  hunt_cmd->add_option("--m", o.m, "Largest subtree size (default 5)");
  hunt_cmd->add_option("--d", o.d, "Largest even order (default 20)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kOk : kUsage;
  }

  try {
    for (const auto& e : entries) {
      if (e.app->parsed()) return e.run(o);
    }
  } catch (const BudgetExceeded& e) {
    std::cerr << "budget exceeded: " << e.what() << "\n";
    return kBudget;
  } catch (const CLI::ValidationError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kUsage;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::logic_error& e) {
    std::cerr << "internal verification failed: " << e.what() << "\n";
    return kMismatch;
  }
  return kUsage;
}
