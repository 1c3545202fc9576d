// Acceptance suite: one PASS/FAIL line per criterion; nonzero exit if any fails.
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <sstream>
#include <string>

#include "hospec/census.hpp"
#include "hospec/constructions.hpp"
#include "hospec/highorder.hpp"
#include "hospec/moments.hpp"
#include "hospec/reports.hpp"
#include "hospec/spectrum.hpp"
#include "oracles.hpp"

using namespace hospec;

namespace {

struct Outcome {
  bool pass = false;
  std::string detail;
};

int failures = 0;

void criterion(int id, const char* title, const std::function<Outcome()>& body) {
  const auto start = std::chrono::steady_clock::now();
  Outcome o;
  try {
    o = body();
  } catch (const std::exception& e) {
    o = {false, std::string("exception: ") + e.what()};
  }
  const double secs =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  std::printf("[%s] %d. %s: %s (%.1fs)\n", o.pass ? "PASS" : "FAIL", id, title, o.detail.c_str(),
              secs);
  std::fflush(stdout);
  if (!o.pass) ++failures;
}

std::vector<Graph> trees_up_to(int vertices) {
  std::vector<Graph> all{Graph(1)};
  for (int n = 2; n <= vertices; ++n) {
    for (auto& t : generate_free_trees(n - 1)) all.push_back(std::move(t));
  }
  return all;
}

// Distance from x to the nearest value of a base set.
double gap(double x, const std::vector<double>& base) {
  double best = INFINITY;
  for (double y : base) best = std::min(best, std::abs(x - y));
  return best;
}

bool is_c4_plus_path(const Graph& g, int path_vertices) {
  const auto parts = g.components();
  if (parts.size() != 2) return false;
  int cycles = 0, paths = 0;
  for (const auto& p : parts) {
    const Graph c = g.induced(p);
    bool max_deg2 = true;
    for (Vertex v = 0; v < c.vertex_count(); ++v) max_deg2 = max_deg2 && c.degree(v) <= 2;
    if (!max_deg2) return false;
    if (c.vertex_count() == 4 && c.edge_count() == 4) ++cycles;
    if (c.vertex_count() == path_vertices && c.is_tree()) ++paths;
  }
  return cycles == 1 && paths == 1;
}

}  // namespace

int main() {
  criterion(1, "table reproduction", [] {
    const auto report = reproduce_tables();
    std::ostringstream os;
    os << report.cell_count() << " published cells, " << report.mismatches.size() << " mismatches";
    for (const auto& m : report.mismatches) os << "; " << m;
    return Outcome{report.all_match() && report.cell_count() > 0, os.str()};
  });

  criterion(2, "formula vs walk oracle, trees <= 5 edges, even d <= 20", [] {
    int checked = 0, bad = 0;
    for (int m = 1; m <= 5; ++m) {
      for (const auto& t : generate_free_trees(m)) {
        for (int d = 2; d <= 20; d += 2) {
          ++checked;
          if (coeff_cd_tree(t, d) != coeff_cd_walk_oracle(t, d)) ++bad;
        }
      }
    }
    return Outcome{bad == 0, std::to_string(checked) + " pairs, " + std::to_string(bad) + " differ"};
  });

  criterion(3, "moment identities", [] {
    TreeCoefficientCache cache;
    int checked = 0, bad = 0;
    const auto corpus = trees_up_to(10);
    for (const auto& t : corpus) {
      for (int d = 2; d <= 12; d += 2) {
        ++checked;
        if (tree_spectral_moment(t, d, &cache) != spectral_moment(t, d)) ++bad;
      }
    }
    int graphs = 0;
    for (int n = 1; n <= 6; ++n) {
      for (const auto& g : oracle::connected_graphs(n)) {
        ++graphs;
        const auto split = moments_from_subgraphs(g, 8);
        for (int d = 0; d <= 8; ++d) {
          ++checked;
          if (split[d] != spectral_moment(g, d)) ++bad;
        }
      }
    }
    return Outcome{bad == 0, std::to_string(corpus.size()) + " trees, " + std::to_string(graphs) +
                                 " connected graphs, " + std::to_string(checked) + " identities, " +
                                 std::to_string(bad) + " fail"};
  });

  criterion(4, "k=2 collapse", [] {
    TreeCoefficientCache cache;
    int checked = 0, bad = 0;
    for (const auto& t : trees_up_to(10)) {
      for (int d = 2; d <= 12; d += 2) {
        ++checked;
        if (power_hypertree_moment(t, 2, d, &cache) != spectral_moment(t, d)) ++bad;
      }
    }
    return Outcome{bad == 0, std::to_string(checked) + " moments, " + std::to_string(bad) + " differ"};
  });

  criterion(5, "Vandermonde round trip, ks = {2,3,4,5,6}", [] {
    const int ks[] = {2, 3, 4, 5, 6};
    bool ok = true;
    int systems = 0;
    for (int edges = 5; edges <= 12; ++edges) {
      const auto a = hypertree_moment_system(edges, ks);
      if (determinant(a) == 0) ok = false;
      for (int seed = 0; seed < 5; ++seed) {
        std::vector<Rational> y(5);
        for (int i = 0; i < 5; ++i) {
          y[i] = Rational((seed + 1) * (i * 7 - 13), i + 1 + seed);
          y[i].canonicalize();
        }
        std::vector<Rational> diffs(5, 0);
        for (int i = 0; i < 5; ++i) {
          for (int j = 0; j < 5; ++j) diffs[i] += a[i][j] * y[j];
        }
        ok = ok && vandermonde_recover(diffs, edges, ks) == y;
        ++systems;
      }
    }
    return Outcome{ok, std::to_string(systems) + " systems recovered exactly, determinants nonzero"};
  });

  criterion(6, "Saltire pair", [] {
    const auto [c4k1, star] = saltire_pair();
    const bool cospectral = is_cospectral(c4k1, star);
    const auto a = eigen_base_set(c4k1, BaseRegime::AllSubgraphsKGT3).plain();
    const auto b = eigen_base_set(star, BaseRegime::AllSubgraphsKGT3).plain();
    const double witness = (3 + std::sqrt(5.0)) / 2;
    const double in_a = gap(witness, a);
    const double sep = gap(witness, b);
    std::ostringstream os;
    os << "cospectral=" << cospectral << ", witness (3+sqrt5)/2 in base(C4+K1) within " << in_a
       << ", separation from base(K1,4) " << sep;
    return Outcome{cospectral && in_a < 1e-9 && sep > 0.1, os.str()};
  });

  criterion(7, "Smith graphs: Dt_v (v=8..12) and Et6", [] {
    bool ok = true;
    std::ostringstream os;
    double worst = INFINITY;
    for (int v = 8; v <= 12; ++v) {
      const Graph dt = smith_graph(SmithFamily::DTilde, v);
      const Graph mate = disjoint_union(cycle_graph(4), path_graph(v - 4));
      ok = ok && is_cospectral(dt, mate);
      const auto found = smith_mate_search(dt);
      ok = ok && found.size() == 1 && is_c4_plus_path(found[0], v - 4);
      const double b = 2 * std::cos(std::numbers::pi / (2 * (v - 4) + 2));
      const double w = b * b;
      ok = ok && gap(w, eigen_base_set(dt, BaseRegime::AllSubgraphsKGT3).plain()) < 1e-9;
      const double margin = gap(w, eigen_base_set(mate, BaseRegime::AllSubgraphsKGT3).plain());
      worst = std::min(worst, margin);
      ok = ok && margin > 1e-6;
    }
    const Graph et6 = smith_graph(SmithFamily::E6Tilde, 7);
    const Graph c6k1 = disjoint_union(cycle_graph(6), Graph(1));
    ok = ok && is_cospectral(et6, c6k1);
    const auto found = smith_mate_search(et6);
    ok = ok && found.size() == 1 && is_cospectral(found[0], c6k1) && found[0].components().size() == 2;
    const double w = 2 + std::sqrt(2.0);
    ok = ok && gap(w, eigen_base_set(et6, BaseRegime::AllSubgraphsKGT3).plain()) < 1e-9;
    const double margin = gap(w, eigen_base_set(c6k1, BaseRegime::AllSubgraphsKGT3).plain());
    ok = ok && margin > 1e-6;
    os << "unique mates found; smallest Dt margin " << worst << ", Et6 margin " << margin;
    return Outcome{ok, os.str()};
  });

  criterion(8, "Schwenk pairs with root degree 1, 2, 3", [] {
    const auto fixture = r6_witness();
    const auto pair = oriented_for_r6(fixture.pair);
    bool ok = true;
    std::ostringstream os;
    os << "fixture " << fixture.name << ", R6 differences";
    for (int deg = 1; deg <= 3; ++deg) {
      const RootedGraph f{star_graph(deg + 1), 0};
      const auto [a, b] = schwenk_pair(f, pair);
      ok = ok && is_cospectral(a, b);
      ok = ok && tree_canonical_code(a) != tree_canonical_code(b);
      ok = ok && subtree_census(a, 5).counts != subtree_census(b, 5).counts;
      const long r6 = verify_r6_difference(f, pair);
      ok = ok && r6 == deg;
      os << " " << r6;
    }
    return Outcome{ok, os.str()};
  });

  criterion(9, "hunt n = 7..10", [] {
    bool ok = true;
    std::ostringstream os;
    for (int n = 7; n <= 10; ++n) {
      const auto r = hunt(n, kDefaultCensusEdges, kDefaultMaxOrder);
      if (n == 7) ok = ok && r.nonsingleton_buckets() == 0;
      if (n == 8) ok = ok && r.nonsingleton_buckets() > 0;
      ok = ok && r.undistinguished_pairs() == 0;
      os << "n=" << n << ": " << r.tree_count << " trees, " << r.nonsingleton_buckets()
         << " shared spectra, " << r.separations.size() << " pairs, " << r.undistinguished_pairs()
         << " undistinguished; ";
    }
    os << "finite check only, not a proof";
    return Outcome{ok, os.str()};
  });

  std::printf("%s: %d criteria failed\n", failures == 0 ? "ALL PASS" : "FAILURES", failures);
  return failures == 0 ? 0 : 1;
}
