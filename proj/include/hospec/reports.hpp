#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "hospec/highorder.hpp"
#include "hospec/polynomial.hpp"

namespace hospec {

// Carried by every JSON document the CLI emits.
inline constexpr int kSchemaVersion = 1;

// Rows are orders d, columns named trees.
struct CoefficientTable {
  std::string title;
  std::vector<std::string> columns;
  std::vector<int> orders;
  std::vector<std::vector<BigInt>> expected;
  std::vector<std::vector<BigInt>> computed;
};

struct TablesReport {
  std::vector<CoefficientTable> tables;
  std::vector<std::string> mismatches;  // "table: c_d(name) expected X got Y"

  bool all_match() const { return mismatches.empty(); }
  std::size_t cell_count() const;
  nlohmann::json to_json() const;
  std::string to_csv() const;
  std::string to_text() const;
};

// Recomputes the published coefficient tables for trees with 3, 4 and 5
// edges and diffs them against the frozen values.
TablesReport reproduce_tables();

struct HuntBucket {
  IntPolynomial charpoly;
  std::vector<std::string> members;  // graph6, sorted
};

struct HuntSeparation {
  std::string first;
  std::string second;
  HighOrderVerdict verdict;
};

struct HuntReport {
  int n = 0;
  int m_max = 0;
  int d_max = 0;
  std::size_t tree_count = 0;
  std::vector<HuntBucket> buckets;
  std::vector<HuntSeparation> separations;

  std::size_t nonsingleton_buckets() const;
  std::size_t undistinguished_pairs() const;
  nlohmann::json to_json() const;
  std::string to_text() const;
};

// All free trees on n vertices, bucketed by exact characteristic polynomial;
// every pair inside a bucket is run through high_order_tree_test.
HuntReport hunt(int n, int m_max = kDefaultCensusEdges, int d_max = kDefaultMaxOrder,
                double tol = kDefaultTolerance);

}  // namespace hospec
