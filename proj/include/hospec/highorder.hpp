#pragma once

#include <complex>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "hospec/census.hpp"
#include "hospec/graph.hpp"
#include "hospec/spectrum.hpp"

namespace hospec {

// Which subgraphs feed the eigenvalues of G^(k): connected induced subgraphs
// including single vertices for k = 3, connected edge subsets for k > 3.
enum class BaseRegime { InducedK3, AllSubgraphsKGT3 };

BaseRegime regime_for_order(int k);
std::string to_string(BaseRegime r);

struct BaseValue {
  double value = 0.0;   // beta^2
  Graph witness;        // a subgraph with eigenvalue beta, densely relabeled
  std::string closed_form;  // filled when the witness is a path, cycle or star
};

// Distinct beta^2 values, ascending; neighbours differ by more than the
// tolerance.
struct EigenBase {
  BaseRegime regime = BaseRegime::AllSubgraphsKGT3;
  double tolerance = kDefaultTolerance;
  std::vector<BaseValue> values;

  std::vector<double> plain() const;
  bool contains(double x, double tol) const;
  nlohmann::json to_json() const;
};

EigenBase eigen_base_set(const Graph& g, BaseRegime regime, double tol = kDefaultTolerance,
                         std::uint64_t budget = kDefaultBudget);

// (base)^{1/k} e^{2 pi i phase / k}; phase in 1..k. Base 0 is kept once with
// phase k.
struct PowerEigenvalue {
  double base = 0.0;
  int phase = 0;
  int k = 0;

  std::complex<double> value() const;
};

std::vector<PowerEigenvalue> power_distinct_eigenvalues(const Graph& g, int k,
                                                        double tol = kDefaultTolerance,
                                                        std::uint64_t budget = kDefaultBudget);

// Verbatim instantiation of the published closed-form sets for the power
// hyperpath (j in [n], t in [j]) and power hypercycle (paths j in [n-1]
// plus cycle values r in [n]); all phases in [k].
std::vector<PowerEigenvalue> hyperpath_distinct_eigenvalues(int n, int k,
                                                            double tol = kDefaultTolerance);
std::vector<PowerEigenvalue> hypercycle_distinct_eigenvalues(int n, int k,
                                                             double tol = kDefaultTolerance);

// Distinct bases carried by a set of power eigenvalues.
std::vector<double> distinct_bases(const std::vector<PowerEigenvalue>& values, double tol);

struct BaseComparison {
  std::vector<double> only_first;
  std::vector<double> only_second;
  bool equal() const { return only_first.empty() && only_second.empty(); }
};

BaseComparison compare_bases(const std::vector<double>& first, const std::vector<double>& second,
                             double tol);

// Closed-form hyperpath / hypercycle sets against subgraph enumeration of the
// path (n vertices) or cycle (n vertices). Discrepancies are reported, not
// corrected: first = closed form, second = enumeration.
BaseComparison check_hyperpath_closed_form(int n, int k, double tol = kDefaultTolerance);
BaseComparison check_hypercycle_closed_form(int n, int k, double tol = kDefaultTolerance);

// N_{P3}(G) + 2 N_{C4}(G)
long cr_invariant(const Graph& g);

enum class VerdictStage { None, Spectrum, SubtreeCensus, InvariantVector, BaseSet };
std::string to_string(VerdictStage s);

struct HighOrderVerdict {
  bool cospectral_k2 = false;
  std::optional<bool> census_equal;
  std::optional<bool> tree_invariants_equal;
  bool base_sets_equal = false;
  VerdictStage first_failure = VerdictStage::None;
  std::string first_witness;

  // true when some implemented necessary condition fails. The converse is
  // not a proof of high-ordered cospectrality.
  bool distinguished() const { return first_failure != VerdictStage::None; }
  nlohmann::json to_json() const;
};

inline constexpr int kDefaultCensusEdges = 5;
inline constexpr int kDefaultMaxOrder = 20;

// Stages, in order: exact cospectrality; subtree censuses for
// m <= min(5, m_max); invariant vectors on m <= m_max, even 2m <= d <= d_max;
// base sets in both regimes. The first failing stage supplies the witness.
HighOrderVerdict high_order_tree_test(const Graph& t1, const Graph& t2,
                                      int m_max = kDefaultCensusEdges,
                                      int d_max = kDefaultMaxOrder,
                                      double tol = kDefaultTolerance);

// All graphs cospectral with target but not isomorphic to it, taken from
// disjoint unions of Smith components with the same vertex and edge
// counts. Throws DomainError (with the radius) outside the Smith regime.
std::vector<Graph> smith_mate_search(const Graph& target, double tol = kDefaultTolerance);

}  // namespace hospec
