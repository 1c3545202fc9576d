#include "hospec/spectrum.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include <Eigen/Dense>

#include "hospec/errors.hpp"

namespace hospec {

double Spectrum::radius() const {
  double r = 0.0;
  for (double x : eigenvalues) r = std::max(r, std::abs(x));
  return r;
}

// Berkowitz: p_r = T_r p_{r-1} where T_r is the lower-triangular Toeplitz
// matrix with first column (1, -a_rr, -R S, -R M S, ..., -R M^{r-2} S) built
// from the r-th leading principal block [[M, S], [R, a_rr]].
IntPolynomial characteristic_polynomial(const Graph& g) {
  const int n = g.vertex_count();
  std::vector<BigInt> p{1};  // highest degree first
  for (int r = 0; r < n; ++r) {
    std::vector<BigInt> column;
    column.reserve(static_cast<std::size_t>(r) + 2);
    column.emplace_back(1);
    column.emplace_back(0);  // a_rr = 0, no loops
    // v = M^j S, with M the leading r x r block
    std::vector<BigInt> v(static_cast<std::size_t>(r));
    for (int i = 0; i < r; ++i) v[i] = g.has_edge(i, r) ? 1 : 0;
    for (int j = 0; j < r; ++j) {
      BigInt rs = 0;
      for (Vertex i : g.neighbors(r)) {
        if (i < r) rs += v[i];
      }
      column.push_back(-rs);
      if (j + 1 == r) break;
      std::vector<BigInt> next(static_cast<std::size_t>(r), 0);
      for (int i = 0; i < r; ++i) {
        for (Vertex l : g.neighbors(i)) {
          if (l < r) next[i] += v[l];
        }
      }
      v.swap(next);
    }
    std::vector<BigInt> q(p.size() + 1, 0);
    for (std::size_t i = 0; i < q.size(); ++i) {
      for (std::size_t j = 0; j < p.size() && j <= i; ++j) {
        if (i - j < column.size()) q[i] += column[i - j] * p[j];
      }
    }
    p.swap(q);
  }
  std::reverse(p.begin(), p.end());
  return IntPolynomial(std::move(p));
}

MomentValue spectral_moment(const Graph& g, int d) {
  if (d < 0) throw DomainError("moment order must be non-negative");
  std::vector<std::vector<Vertex>> adjacency;
  adjacency.reserve(static_cast<std::size_t>(g.vertex_count()));
  int max_degree = 0;
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    adjacency.push_back(g.neighbors(v));
    max_degree = std::max(max_degree, g.degree(v));
  }
  // Every entry of A^j is at most max_degree^j; the trace at most n times that.
  const double log_bound = std::log2(std::max(1, g.vertex_count())) +
                           d * std::log2(std::max(1, max_degree));
  if (log_bound < 60.0) {
    return MomentValue(static_cast<long>(detail::closed_walk_traces<long>(adjacency, d).back()));
  }
  return detail::closed_walk_traces<BigInt>(adjacency, d).back();
}

Spectrum eigenvalues(const Graph& g, double tol) {
  if (!(tol > 0.0)) throw DomainError("tolerance must be positive");
  const int n = g.vertex_count();
  Spectrum s;
  s.tolerance = tol;
  if (n == 0) return s;
  Eigen::MatrixXd a = Eigen::MatrixXd::Zero(n, n);
  for (const auto& [u, v] : g.edges()) {
    a(u, v) = 1.0;
    a(v, u) = 1.0;
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(a);
  if (solver.info() != Eigen::Success) {
    throw ConvergenceError("symmetric eigensolver did not converge", -1.0);
  }
  // For a symmetric matrix the distance from an approximate eigenvalue to
  // the true spectrum is bounded by the residual norm.
  const Eigen::MatrixXd residual =
      a * solver.eigenvectors() - solver.eigenvectors() * solver.eigenvalues().asDiagonal();
  double worst = 0.0;
  for (int j = 0; j < n; ++j) worst = std::max(worst, residual.col(j).norm());
  if (worst > tol) throw ConvergenceError("eigenvalue residual exceeds tolerance", worst);
  s.eigenvalues.assign(solver.eigenvalues().data(), solver.eigenvalues().data() + n);
  std::sort(s.eigenvalues.begin(), s.eigenvalues.end());
  return s;
}

Spectrum path_spectrum(int n) {
  Spectrum s;
  for (int t = 1; t <= n; ++t) {
    s.eigenvalues.push_back(2.0 * std::cos(std::numbers::pi * t / (n + 1)));
  }
  std::sort(s.eigenvalues.begin(), s.eigenvalues.end());
  return s;
}

Spectrum cycle_spectrum(int n) {
  Spectrum s;
  for (int r = 1; r <= n; ++r) {
    s.eigenvalues.push_back(2.0 * std::cos(2.0 * std::numbers::pi * r / n));
  }
  std::sort(s.eigenvalues.begin(), s.eigenvalues.end());
  return s;
}

bool is_cospectral(const Graph& g1, const Graph& g2) {
  if (g1.vertex_count() != g2.vertex_count()) return false;
  return characteristic_polynomial(g1) == characteristic_polynomial(g2);
}

}  // namespace hospec
