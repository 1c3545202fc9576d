#pragma once

#include <vector>

#include "hospec/graph.hpp"
#include "hospec/polynomial.hpp"

namespace hospec {

using MomentValue = BigInt;

inline constexpr double kDefaultTolerance = 1e-9;

// Sorted (ascending) eigenvalues of the adjacency matrix.
struct Spectrum {
  std::vector<double> eigenvalues;
  double tolerance = kDefaultTolerance;

  double largest() const { return eigenvalues.empty() ? 0.0 : eigenvalues.back(); }
  double radius() const;
};

// det(xI - A), exact. Division-free (Berkowitz) over arbitrary-precision
// integers.
IntPolynomial characteristic_polynomial(const Graph& g);

// trace(A^d) = number of closed walks of length d.
MomentValue spectral_moment(const Graph& g, int d);

// Symmetric eigensolver; throws ConvergenceError when any eigenpair residual
// exceeds tol.
Spectrum eigenvalues(const Graph& g, double tol = kDefaultTolerance);

// Closed forms: 2cos(pi t/(n+1)), t = 1..n, and 2cos(2 pi r/n), r = 1..n.
Spectrum path_spectrum(int n);
Spectrum cycle_spectrum(int n);

bool is_cospectral(const Graph& g1, const Graph& g2);

namespace detail {

// Closed-walk counts trace(A^j) for j = 0..max_d from adjacency lists.
// Scalar is chosen by the caller (machine integer when the bound allows).
template <typename Scalar>
std::vector<Scalar> closed_walk_traces(const std::vector<std::vector<Vertex>>& adjacency,
                                       int max_d) {
  const std::size_t n = adjacency.size();
  std::vector<Scalar> traces(static_cast<std::size_t>(max_d) + 1, Scalar(0));
  traces[0] = Scalar(static_cast<long>(n));
  if (max_d == 0) return traces;
  // power holds A^j row-major; A^{j+1}[i][k] = sum over neighbours l of k.
  std::vector<Scalar> power(n * n, Scalar(0));
  for (std::size_t i = 0; i < n; ++i) power[i * n + i] = Scalar(1);
  std::vector<Scalar> next(n * n);
  for (int j = 1; j <= max_d; ++j) {
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t k = 0; k < n; ++k) {
        Scalar s(0);
        for (const Vertex l : adjacency[k]) s += power[i * n + static_cast<std::size_t>(l)];
        next[i * n + k] = s;
      }
    }
    power.swap(next);
    Scalar t(0);
    for (std::size_t i = 0; i < n; ++i) t += power[i * n + i];
    traces[static_cast<std::size_t>(j)] = t;
  }
  return traces;
}

}  // namespace detail

}  // namespace hospec
