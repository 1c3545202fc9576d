#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "hospec/polynomial.hpp"
#include "hospec/spectrum.hpp"
#include "oracles.hpp"

using namespace hospec;

TEST_CASE("characteristic polynomials of small graphs") {
  CHECK(characteristic_polynomial(path_graph(3)).to_string() == "x^3 - 2x");
  CHECK(characteristic_polynomial(cycle_graph(4)).to_string() == "x^4 - 4x^2");
  const auto star = characteristic_polynomial(star_graph(5));
  CHECK(star.to_string() == "x^5 - 4x^3");
  CHECK(characteristic_polynomial(disjoint_union(cycle_graph(4), Graph(1))) == star);
  CHECK(characteristic_polynomial(Graph(0)).to_string() == "1");
}

TEST_CASE("charpoly agrees with Bareiss determinants at integer points") {
  std::mt19937 rng(11);
  for (int i = 0; i < 30; ++i) {
    const Graph g = oracle::random_graph(rng, 2 + i % 9, 0.4);
    const auto p = characteristic_polynomial(g);
    for (long x = -3; x <= 3; ++x) CHECK(p.evaluate(BigInt(x)) == oracle::charpoly_at(g, x));
  }
}

TEST_CASE("charpoly leading coefficients") {
  std::mt19937 rng(12);
  for (int i = 0; i < 40; ++i) {
    const int n = 2 + i % 10;
    const Graph g = oracle::random_graph(rng, n, 0.5);
    const auto p = characteristic_polynomial(g);
    CHECK(p.degree() == n);
    CHECK(p.coefficient(n) == 1);
    CHECK(p.coefficient(n - 1) == 0);
    CHECK(p.coefficient(n - 2) == -g.edge_count());
  }
}

TEST_CASE("charpoly is multiplicative over disjoint unions") {
  std::mt19937 rng(13);
  for (int i = 0; i < 50; ++i) {
    const Graph a = oracle::random_graph(rng, 1 + i % 6, 0.5);
    const Graph b = oracle::random_graph(rng, 1 + (i * 7) % 5, 0.5);
    CHECK(characteristic_polynomial(disjoint_union(a, b)) ==
          characteristic_polynomial(a) * characteristic_polynomial(b));
  }
}

TEST_CASE("spectral moments") {
  CHECK(spectral_moment(cycle_graph(4), 4) == 32);
  CHECK(spectral_moment(path_graph(3), 4) == 8);
  std::mt19937 rng(14);
  for (int i = 0; i < 30; ++i) {
    const Graph g = oracle::random_graph(rng, 3 + i % 7, 0.45);
    CHECK(spectral_moment(g, 0) == g.vertex_count());
    CHECK(spectral_moment(g, 1) == 0);
    CHECK(spectral_moment(g, 2) == 2 * g.edge_count());
    for (int d = 3; d <= 10; ++d) CHECK(spectral_moment(g, d) == oracle::trace_power(g, d));
    if (g.is_bipartite()) {
      for (int d = 1; d <= 11; d += 2) CHECK(spectral_moment(g, d) == 0);
    }
  }
}

TEST_CASE("large moments switch to big integers") {
  const Graph k = complete_graph(12);
  // eigenvalues 11 once and -1 eleven times
  mpz_class expected;
  mpz_pow_ui(expected.get_mpz_t(), mpz_class(11).get_mpz_t(), 40);
  expected += 11;
  CHECK(spectral_moment(k, 40) == expected);
}

TEST_CASE("numeric eigenvalues match moments and closed forms") {
  std::mt19937 rng(15);
  for (int i = 0; i < 20; ++i) {
    const Graph g = oracle::random_graph(rng, 3 + i % 8, 0.5);
    const auto s = eigenvalues(g);
    for (int d = 2; d <= 6; ++d) {
      double sum = 0;
      for (double x : s.eigenvalues) sum += std::pow(x, d);
      CHECK(sum == doctest::Approx(spectral_moment(g, d).get_d()).epsilon(1e-9));
    }
  }
  for (int n : {4, 7}) {
    const auto closed = path_spectrum(n).eigenvalues;
    const auto solved = eigenvalues(path_graph(n)).eigenvalues;
    REQUIRE(closed.size() == solved.size());
    for (std::size_t i = 0; i < closed.size(); ++i) CHECK(closed[i] == doctest::Approx(solved[i]));
  }
  const auto c6 = cycle_spectrum(6).eigenvalues;
  const auto s6 = eigenvalues(cycle_graph(6)).eigenvalues;
  for (std::size_t i = 0; i < c6.size(); ++i) CHECK(c6[i] == doctest::Approx(s6[i]));
  const auto k13 = eigenvalues(star_graph(4));
  CHECK(k13.largest() == doctest::Approx(std::sqrt(3.0)));
  CHECK(k13.eigenvalues.front() == doctest::Approx(-std::sqrt(3.0)));
}

TEST_CASE("cospectrality") {
  CHECK(is_cospectral(star_graph(5), disjoint_union(cycle_graph(4), Graph(1))));
  CHECK_FALSE(is_cospectral(path_graph(4), star_graph(4)));
}
