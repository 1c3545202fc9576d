#include "hospec/moments.hpp"

#include <cmath>
#include <stdexcept>

#include "hospec/errors.hpp"

namespace hospec {

namespace {

void compose(int remaining, int parts_left, std::vector<int>& prefix,
             const std::function<void(std::span<const int>)>& visit) {
  if (parts_left == 1) {
    prefix.push_back(remaining);
    visit(prefix);
    prefix.pop_back();
    return;
  }
  for (int first = 1; first <= remaining - (parts_left - 1); ++first) {
    prefix.push_back(first);
    compose(remaining - first, parts_left - 1, prefix, visit);
    prefix.pop_back();
  }
}

BigInt require_integer(const Rational& q, const char* what) {
  if (q.get_den() != 1) {
    throw std::logic_error(std::string("integrality violated in ") + what + ": " + q.get_str());
  }
  return q.get_num();
}

}  // namespace

void for_each_composition(int total, int parts,
                          const std::function<void(std::span<const int>)>& visit) {
  if (parts < 1 || total < parts) return;
  std::vector<int> prefix;
  prefix.reserve(static_cast<std::size_t>(parts));
  compose(total, parts, prefix, visit);
}

FactorialTable::FactorialTable(int max) : values_{1} { (*this)(max); }

const BigInt& FactorialTable::operator()(int n) {
  while (static_cast<int>(values_.size()) <= n) {
    values_.push_back(values_.back() * static_cast<unsigned long>(values_.size()));
  }
  return values_[static_cast<std::size_t>(n)];
}

// c_d = d * sum_w prod_e w(e) * prod_v (d_v - 1)! / r_v, where d_v is the
// weight at v and r_v the product of w(e)! over edges at v. Each edge
// contributes w(e)! to r_v at both endpoints, so the denominator of a term
// is prod_e (w(e)!)^2.
MomentValue coeff_cd_tree(const Graph& tree, int d) {
  if (!tree.is_tree()) throw DomainError("coeff_cd_tree requires a tree");
  if (d < 1) throw DomainError("moment order must be positive");
  const int m = tree.edge_count();
  const int half = d / 2;
  if (d % 2 != 0 || m == 0 || half < m) return 0;

  FactorialTable fact(d);
  const auto& edges = tree.edges();
  std::vector<int> weight_at(static_cast<std::size_t>(tree.vertex_count()));
  Rational sum = 0;
  for_each_composition(half, m, [&](std::span<const int> w) {
    std::fill(weight_at.begin(), weight_at.end(), 0);
    BigInt num = 1;
    BigInt den = 1;
    for (std::size_t i = 0; i < edges.size(); ++i) {
      weight_at[edges[i].first] += w[i];
      weight_at[edges[i].second] += w[i];
      num *= w[i];
      den *= fact(w[i]) * fact(w[i]);
    }
    for (int dv : weight_at) num *= fact(dv - 1);
    sum += Rational(num, den);
  });
  sum.canonicalize();
  return require_integer(sum * d, "coefficient formula");
}

const MomentValue& TreeCoefficientCache::get(const CanonicalTreeCode& code, int d) {
  auto key = std::make_pair(code, d);
  auto it = values_.find(key);
  if (it == values_.end()) {
    it = values_.emplace(std::move(key), coeff_cd_tree(tree_from_code(code), d)).first;
  }
  return it->second;
}

// ---------------------------------------------------------------------------
// Walk oracle

ClosedWalkOracle::ClosedWalkOracle(const Graph& host, int max_d) : host_(host), max_d_(max_d) {
  if (max_d < 0) throw DomainError("moment order must be non-negative");
  if (host.edge_count() > 64) throw DomainError("walk oracle supports at most 64 host edges");
}

const std::vector<MomentValue>& ClosedWalkOracle::traces(EdgeMask subset) {
  auto it = traces_.find(subset);
  if (it != traces_.end()) return it->second;

  std::vector<MomentValue> out;
  if (subset == 0) {
    out.assign(static_cast<std::size_t>(max_d_) + 1, 0);
  } else {
    const Graph part = edge_subgraph(host_, subset);
    std::vector<std::vector<Vertex>> adjacency;
    int max_degree = 0;
    for (Vertex v = 0; v < part.vertex_count(); ++v) {
      adjacency.push_back(part.neighbors(v));
      max_degree = std::max(max_degree, part.degree(v));
    }
    const double log_bound =
        std::log2(part.vertex_count()) + max_d_ * std::log2(std::max(1, max_degree));
    if (log_bound < 60.0) {
      for (long t : detail::closed_walk_traces<long>(adjacency, max_d_)) out.emplace_back(t);
    } else {
      out = detail::closed_walk_traces<BigInt>(adjacency, max_d_);
    }
  }
  // Untouched host vertices only matter for the empty walk.
  out[0] = 0;
  return traces_.emplace(subset, std::move(out)).first->second;
}

std::vector<MomentValue> ClosedWalkOracle::coefficients(EdgeMask sub) {
  std::vector<MomentValue> c(static_cast<std::size_t>(max_d_) + 1, 0);
  const int full = __builtin_popcountll(sub);
  for (EdgeMask s = sub;; s = (s - 1) & sub) {
    const auto& t = traces(s);
    const bool negative = (full - __builtin_popcountll(s)) % 2 != 0;
    for (std::size_t j = 1; j < c.size(); ++j) {
      if (negative) {
        c[j] -= t[j];
      } else {
        c[j] += t[j];
      }
    }
    if (s == 0) break;
  }
  return c;
}

MomentValue coeff_cd_walk_oracle(const Graph& sub, int d, int max_edges) {
  if (d < 1) throw DomainError("moment order must be positive");
  if (sub.edge_count() == 0) return 0;
  if (!sub.is_connected()) throw DomainError("walk oracle requires a connected graph");
  if (sub.edge_count() > max_edges) {
    throw BudgetExceeded("walk oracle limited to " + std::to_string(max_edges) + " edges, got " +
                         std::to_string(sub.edge_count()));
  }
  ClosedWalkOracle oracle(sub, d);
  const EdgeMask all = sub.edge_count() == 64 ? ~EdgeMask{0}
                                              : (EdgeMask{1} << sub.edge_count()) - 1;
  return oracle.coefficients(all)[static_cast<std::size_t>(d)];
}

std::vector<MomentValue> moments_from_subgraphs(const Graph& g, int max_d, std::uint64_t budget) {
  std::vector<MomentValue> s(static_cast<std::size_t>(std::max(0, max_d)) + 1, 0);
  if (max_d < 0) throw DomainError("moment order must be non-negative");
  s[0] = g.vertex_count();
  if (max_d == 0 || g.edge_count() == 0) return s;
  ClosedWalkOracle oracle(g, max_d);
  for_each_connected_edge_subset(
      g, max_d,
      [&](EdgeMask mask) {
        const auto c = oracle.coefficients(mask);
        for (std::size_t j = 1; j < s.size(); ++j) s[j] += c[j];
      },
      budget);
  return s;
}

// ---------------------------------------------------------------------------
// Tree and hypertree moments

namespace {

MomentValue weighted_census(const Graph& t, int m, int d, TreeCoefficientCache& cache) {
  if (m > t.edge_count()) return 0;
  MomentValue total = 0;
  for (const auto& [code, count] : subtree_census(t, m).counts) {
    total += cache.get(code, d) * static_cast<unsigned long>(count);
  }
  return total;
}

}  // namespace

MomentValue tree_spectral_moment(const Graph& t, int d, TreeCoefficientCache* cache) {
  if (!t.is_tree()) throw DomainError("tree_spectral_moment requires a tree");
  if (d < 1) throw DomainError("moment order must be positive");
  if (d % 2 != 0) return 0;
  TreeCoefficientCache local;
  TreeCoefficientCache& c = cache ? *cache : local;
  MomentValue total = 0;
  const int top = std::min(d / 2, t.edge_count());
  for (int m = 1; m <= top; ++m) total += weighted_census(t, m, d, c);
  return total;
}

Rational hypertree_factor(int edge_count, int k, int m) {
  if (k < 2) throw DomainError("power order k must be at least 2");
  Rational f(1, 2);
  BigInt km1 = k - 1;
  const long e1 = static_cast<long>(edge_count - m) * (k - 1);
  BigInt p;
  mpz_pow_ui(p.get_mpz_t(), km1.get_mpz_t(), static_cast<unsigned long>(std::labs(e1)));
  if (e1 >= 0) {
    f *= p;
  } else {
    f /= p;
  }
  BigInt q;
  const long e2 = static_cast<long>(m) * (k - 2) + 1;
  mpz_ui_pow_ui(q.get_mpz_t(), static_cast<unsigned long>(k), static_cast<unsigned long>(e2));
  f *= q;
  f.canonicalize();
  return f;
}

MomentValue power_hypertree_moment(const Graph& t, int k, int d, TreeCoefficientCache* cache) {
  if (!t.is_tree()) throw DomainError("power_hypertree_moment requires a tree");
  if (k < 2) throw DomainError("power order k must be at least 2");
  if (d < 1) throw DomainError("moment order must be positive");
  if (d % k != 0) return 0;
  TreeCoefficientCache local;
  TreeCoefficientCache& c = cache ? *cache : local;
  const int z = d / k;
  Rational total = 0;
  for (int m = 1; m <= std::min(z, t.edge_count()); ++m) {
    total += hypertree_factor(t.edge_count(), k, m) * Rational(weighted_census(t, m, 2 * z, c));
  }
  total.canonicalize();
  return require_integer(total, "hypertree moment");
}

InvariantVector invariant_vector(const Graph& t, int m, int d, TreeCoefficientCache* cache) {
  if (!t.is_tree()) throw DomainError("invariant_vector requires a tree");
  if (m < 1) throw DomainError("subtree size must be positive");
  if (d % 2 != 0 || d < 2 * m) throw DomainError("invariant_vector needs even d >= 2m");
  TreeCoefficientCache local;
  return {m, d, weighted_census(t, m, d, cache ? *cache : local)};
}

// ---------------------------------------------------------------------------
// Exact linear algebra for the hypertree moment system

RationalMatrix hypertree_moment_system(int edge_count, std::span<const int> ks) {
  for (std::size_t i = 0; i < ks.size(); ++i) {
    if (ks[i] < 2) throw DomainError("every k must be at least 2");
    for (std::size_t j = 0; j < i; ++j) {
      if (ks[i] == ks[j]) throw DomainError("ks must be pairwise distinct");
    }
  }
  const std::size_t z = ks.size();
  RationalMatrix a(z, std::vector<Rational>(z));
  for (std::size_t i = 0; i < z; ++i) {
    const int k = ks[i];
    BigInt num;
    BigInt den;
    mpz_ui_pow_ui(num.get_mpz_t(), static_cast<unsigned long>(k), static_cast<unsigned long>(k - 2));
    mpz_ui_pow_ui(den.get_mpz_t(), static_cast<unsigned long>(k - 1),
                  static_cast<unsigned long>(k - 1));
    Rational ratio(num, den);
    ratio.canonicalize();
    Rational entry = hypertree_factor(edge_count, k, 1);
    for (std::size_t j = 0; j < z; ++j) {
      a[i][j] = entry;
      entry *= ratio;
    }
  }
  return a;
}

Rational determinant(RationalMatrix a) {
  const std::size_t n = a.size();
  Rational det = 1;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && a[pivot][col] == 0) ++pivot;
    if (pivot == n) return 0;
    if (pivot != col) {
      std::swap(a[pivot], a[col]);
      det = -det;
    }
    det *= a[col][col];
    for (std::size_t r = col + 1; r < n; ++r) {
      if (a[r][col] == 0) continue;
      const Rational factor = a[r][col] / a[col][col];
      for (std::size_t c = col; c < n; ++c) a[r][c] -= factor * a[col][c];
    }
  }
  return det;
}

std::vector<Rational> vandermonde_recover(std::span<const Rational> moment_differences,
                                          int edge_count, std::span<const int> ks) {
  if (moment_differences.size() != ks.size()) {
    throw DomainError("need one moment difference per k");
  }
  RationalMatrix a = hypertree_moment_system(edge_count, ks);
  const std::size_t n = a.size();
  for (std::size_t i = 0; i < n; ++i) a[i].push_back(moment_differences[i]);

  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && a[pivot][col] == 0) ++pivot;
    if (pivot == n) throw std::logic_error("hypertree moment system is singular");
    std::swap(a[pivot], a[col]);
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || a[r][col] == 0) continue;
      const Rational factor = a[r][col] / a[col][col];
      for (std::size_t c = col; c <= n; ++c) a[r][c] -= factor * a[col][c];
    }
  }
  std::vector<Rational> y(n);
  for (std::size_t i = 0; i < n; ++i) {
    y[i] = a[i][n] / a[i][i];
    y[i].canonicalize();
  }
  return y;
}

}  // namespace hospec
