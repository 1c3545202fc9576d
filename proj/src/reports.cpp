#include "hospec/reports.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "hospec/census.hpp"
#include "hospec/errors.hpp"
#include "hospec/moments.hpp"

namespace hospec {

namespace {

struct FrozenTable {
  const char* title;
  std::vector<std::string> columns;
  std::vector<int> orders;
  std::vector<std::vector<long>> values;
};

const std::vector<FrozenTable>& frozen_tables() {
  static const std::vector<FrozenTable> tables = {
      {"trees with 3 edges", {"P4", "S4"}, {6, 8}, {{6, 12}, {32, 72}}},
      {"trees with 4 edges",
       {"P5", "Q5", "S5"},
       {8, 10, 12},
       {{8, 16, 48}, {60, 140, 480}, {300, 804, 3120}}},
      {"trees with 5 edges",
       {"P6", "Q6", "R6", "H6", "J6", "S6"},
       {10, 12, 14, 16, 18, 20},
       {{10, 20, 20, 40, 60, 240},
        {96, 216, 228, 504, 792, 3600},
        {588, 1484, 1652, 3976, 6552, 33600},
        {2944, 8304, 9728, 25216, 43680, 252000},
        {13158, 41328, 50832, 140832, 257184, 1668240},
        {54730, 190800, 245880, 724320, 1398600, 10206000}}},
  };
  return tables;
}

}  // namespace

std::size_t TablesReport::cell_count() const {
  std::size_t n = 0;
  for (const auto& t : tables) n += t.columns.size() * t.orders.size();
  return n;
}

TablesReport reproduce_tables() {
  TablesReport report;
  for (const auto& frozen : frozen_tables()) {
    CoefficientTable t;
    t.title = frozen.title;
    t.columns = frozen.columns;
    t.orders = frozen.orders;
    for (std::size_t r = 0; r < frozen.orders.size(); ++r) {
      std::vector<BigInt> expected_row;
      std::vector<BigInt> computed_row;
      for (std::size_t c = 0; c < frozen.columns.size(); ++c) {
        const BigInt expected = frozen.values[r][c];
        const BigInt got = coeff_cd_tree(small_tree(frozen.columns[c]), frozen.orders[r]);
        if (got != expected) {
          report.mismatches.push_back(t.title + ": c_" + std::to_string(frozen.orders[r]) + "(" +
                                      frozen.columns[c] + ") expected " + expected.get_str() +
                                      " got " + got.get_str());
        }
        expected_row.push_back(expected);
        computed_row.push_back(got);
      }
      t.expected.push_back(std::move(expected_row));
      t.computed.push_back(std::move(computed_row));
    }
    report.tables.push_back(std::move(t));
  }
  return report;
}

nlohmann::json TablesReport::to_json() const {
  nlohmann::json ts = nlohmann::json::array();
  for (const auto& t : tables) {
    nlohmann::json rows = nlohmann::json::array();
    for (std::size_t r = 0; r < t.orders.size(); ++r) {
      nlohmann::json cells = nlohmann::json::object();
      for (std::size_t c = 0; c < t.columns.size(); ++c) {
        cells[t.columns[c]] = t.computed[r][c].get_str();
      }
      rows.push_back({{"d", t.orders[r]}, {"c", std::move(cells)}});
    }
    ts.push_back({{"title", t.title}, {"columns", t.columns}, {"rows", std::move(rows)}});
  }
  return {{"schema_version", kSchemaVersion},
          {"tables", std::move(ts)},
          {"cells", cell_count()},
          {"all_match", all_match()},
          {"mismatches", mismatches}};
}

std::string TablesReport::to_csv() const {
  std::ostringstream os;
  for (const auto& t : tables) {
    os << "# " << t.title << "\nd";
    for (const auto& c : t.columns) os << "," << c;
    os << "\n";
    for (std::size_t r = 0; r < t.orders.size(); ++r) {
      os << t.orders[r];
      for (const auto& v : t.computed[r]) os << "," << v.get_str();
      os << "\n";
    }
  }
  return os.str();
}

std::string TablesReport::to_text() const {
  std::ostringstream os;
  for (const auto& t : tables) {
    os << "c_d for " << t.title << "\n";
    os << "  d   ";
    for (const auto& c : t.columns) os << std::string(12 - std::min<std::size_t>(12, c.size()), ' ') << c;
    os << "\n";
    for (std::size_t r = 0; r < t.orders.size(); ++r) {
      std::string d = std::to_string(t.orders[r]);
      os << "  " << d << std::string(4 - std::min<std::size_t>(4, d.size()), ' ');
      for (const auto& v : t.computed[r]) {
        const std::string s = v.get_str();
        os << std::string(12 - std::min<std::size_t>(12, s.size()), ' ') << s;
      }
      os << "\n";
    }
    os << "\n";
  }
  os << cell_count() << " cells, " << mismatches.size() << " mismatches\n";
  for (const auto& m : mismatches) os << "  MISMATCH " << m << "\n";
  return os.str();
}

// ---------------------------------------------------------------------------

std::size_t HuntReport::nonsingleton_buckets() const {
  return static_cast<std::size_t>(std::count_if(
      buckets.begin(), buckets.end(), [](const HuntBucket& b) { return b.members.size() > 1; }));
}

std::size_t HuntReport::undistinguished_pairs() const {
  return static_cast<std::size_t>(
      std::count_if(separations.begin(), separations.end(),
                    [](const HuntSeparation& s) { return !s.verdict.distinguished(); }));
}

HuntReport hunt(int n, int m_max, int d_max, double tol) {
  if (n < 2) throw DomainError("hunt needs at least 2 vertices");
  if (n > 14) throw DomainError("hunt is limited to 14 vertices");
  HuntReport report;
  report.n = n;
  report.m_max = m_max;
  report.d_max = d_max;

  std::map<std::vector<std::string>, HuntBucket> by_poly;
  const auto trees = generate_free_trees(n - 1);
  report.tree_count = trees.size();
  for (const auto& t : trees) {
    auto poly = characteristic_polynomial(t);
    auto& bucket = by_poly[poly.to_strings()];
    bucket.charpoly = std::move(poly);
    bucket.members.push_back(to_graph6(t));
  }
  for (auto& [key, bucket] : by_poly) {
    std::sort(bucket.members.begin(), bucket.members.end());
    report.buckets.push_back(std::move(bucket));
  }
  std::sort(report.buckets.begin(), report.buckets.end(),
            [](const HuntBucket& a, const HuntBucket& b) { return a.members[0] < b.members[0]; });

  for (const auto& bucket : report.buckets) {
    for (std::size_t i = 0; i < bucket.members.size(); ++i) {
      for (std::size_t j = i + 1; j < bucket.members.size(); ++j) {
        const Graph a = parse_graph6(bucket.members[i]);
        const Graph b = parse_graph6(bucket.members[j]);
        report.separations.push_back(
            {bucket.members[i], bucket.members[j], high_order_tree_test(a, b, m_max, d_max, tol)});
      }
    }
  }
  return report;
}

nlohmann::json HuntReport::to_json() const {
  nlohmann::json bs = nlohmann::json::array();
  for (const auto& b : buckets) {
    bs.push_back({{"charpoly", b.charpoly.to_strings()}, {"members", b.members}});
  }
  nlohmann::json ss = nlohmann::json::array();
  for (const auto& s : separations) {
    ss.push_back({{"first", s.first},
                  {"second", s.second},
                  {"separated_by", s.verdict.distinguished() ? to_string(s.verdict.first_failure)
                                                             : "undistinguished"},
                  {"verdict", s.verdict.to_json()}});
  }
  return {{"schema_version", kSchemaVersion},
          {"n", n},
          {"m_max", m_max},
          {"d_max", d_max},
          {"trees", tree_count},
          {"buckets", std::move(bs)},
          {"nonsingleton_buckets", nonsingleton_buckets()},
          {"separations", std::move(ss)},
          {"undistinguished_pairs", undistinguished_pairs()}};
}

std::string HuntReport::to_text() const {
  std::ostringstream os;
  os << "trees on " << n << " vertices: " << tree_count << "\n";
  os << "characteristic polynomial buckets: " << buckets.size() << " ("
     << nonsingleton_buckets() << " with cospectral mates)\n";
  for (const auto& b : buckets) {
    if (b.members.size() < 2) continue;
    os << "  " << b.charpoly.to_string() << ":";
    for (const auto& m : b.members) os << " " << m;
    os << "\n";
  }
  for (const auto& s : separations) {
    os << "  " << s.first << " vs " << s.second << ": ";
    if (s.verdict.distinguished()) {
      os << "separated by " << to_string(s.verdict.first_failure) << " (" << s.verdict.first_witness
         << ")\n";
    } else {
      os << "UNDISTINGUISHED by the implemented invariants\n";
    }
  }
  os << "undistinguished cospectral pairs: " << undistinguished_pairs() << "\n";
  if (undistinguished_pairs() == 0 && !separations.empty()) {
    os << "every cospectral pair at this size is separated; this is a finite check, not a proof\n";
  }
  return os.str();
}

}  // namespace hospec
