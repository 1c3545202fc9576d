#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <span>
#include <unordered_map>
#include <utility>
#include <vector>

#include "hospec/census.hpp"
#include "hospec/graph.hpp"
#include "hospec/polynomial.hpp"
#include "hospec/spectrum.hpp"

namespace hospec {

// Visits the compositions of `total` into `parts` positive parts in
// lexicographic order. There are C(total-1, parts-1) of them.
void for_each_composition(int total, int parts,
                          const std::function<void(std::span<const int>)>& visit);

class FactorialTable {
 public:
  explicit FactorialTable(int max = 1);
  // Grows on demand.
  const BigInt& operator()(int n);

 private:
  std::vector<BigInt> values_;
};

// Closed d-walks of a tree that traverse every edge, from the weighted
// composition formula. Odd d gives 0, as does d/2 < |E|.
MomentValue coeff_cd_tree(const Graph& tree, int d);

// Memoizes c_d by canonical tree code. Not thread-safe; use one per thread.
class TreeCoefficientCache {
 public:
  const MomentValue& get(const CanonicalTreeCode& code, int d);

 private:
  std::map<std::pair<CanonicalTreeCode, int>, MomentValue> values_;
};

// Same coefficient for any connected graph by inclusion-exclusion over edge
// subsets: sum over S of (-1)^{|E|-|S|} trace(A_S^d).
inline constexpr int kDefaultOracleEdgeLimit = 20;
MomentValue coeff_cd_walk_oracle(const Graph& sub, int d,
                                 int max_edges = kDefaultOracleEdgeLimit);

// Inclusion-exclusion against one host graph, with the subset traces shared
// between all connected subgraphs queried. Orders 0..max_d.
class ClosedWalkOracle {
 public:
  ClosedWalkOracle(const Graph& host, int max_d);

  // c_0..c_max_d of the connected edge subset `sub` of the host.
  std::vector<MomentValue> coefficients(EdgeMask sub);

 private:
  const std::vector<MomentValue>& traces(EdgeMask subset);

  const Graph& host_;
  int max_d_;
  std::unordered_map<EdgeMask, std::vector<MomentValue>> traces_;
};

// S_d(G) for d = 0..max_d reassembled as a sum of walk-oracle coefficients
// over every connected subgraph with at most max_d edges.
std::vector<MomentValue> moments_from_subgraphs(const Graph& g, int max_d,
                                                std::uint64_t budget = kDefaultBudget);

// Sum over m <= min(d/2, |E|) and subtree classes of c_d times the census
// count. Equals trace(A^d).
MomentValue tree_spectral_moment(const Graph& t, int d, TreeCoefficientCache* cache = nullptr);

// f_m(k) = 1/2 (k-1)^{(|E|-m)(k-1)} k^{m(k-2)+1}
Rational hypertree_factor(int edge_count, int k, int m);

// d-th spectral moment of the k-power hypertree of t; zero unless k | d.
MomentValue power_hypertree_moment(const Graph& t, int k, int d,
                                   TreeCoefficientCache* cache = nullptr);

struct InvariantVector {
  int m = 0;
  int d = 0;
  MomentValue value;
};

// Sum over trees with m edges of c_d times their subtree count in t.
InvariantVector invariant_vector(const Graph& t, int m, int d,
                                 TreeCoefficientCache* cache = nullptr);

using RationalMatrix = std::vector<std::vector<Rational>>;

// Row i belongs to ks[i], column j to m = j + 1:
// f_1(k) * (k^{k-2} / (k-1)^{k-1})^{j}.
RationalMatrix hypertree_moment_system(int edge_count, std::span<const int> ks);

Rational determinant(RationalMatrix a);

// Solves the hypertree moment system for y_1..y_z (z = ks.size()) given the
// per-k differences S_{kz}(T^(k)) - S_{kz}(T*^(k)).
std::vector<Rational> vandermonde_recover(std::span<const Rational> moment_differences,
                                          int edge_count, std::span<const int> ks);

}  // namespace hospec
