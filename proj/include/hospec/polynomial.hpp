#pragma once

#include <string>
#include <vector>

#include <gmpxx.h>

namespace hospec {

using BigInt = mpz_class;
using Rational = mpq_class;

// Integer polynomial, coefficients lowest degree first. The zero polynomial
// has no coefficients; trailing zeros are always trimmed.
class IntPolynomial {
 public:
  IntPolynomial() = default;
  explicit IntPolynomial(std::vector<BigInt> coefficients);

  static IntPolynomial constant(const BigInt& c);
  static IntPolynomial monomial(int degree, const BigInt& c = 1);

  int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
  const std::vector<BigInt>& coefficients() const noexcept { return coeffs_; }
  // Coefficient of x^i, zero beyond the degree.
  BigInt coefficient(int i) const;

  BigInt evaluate(const BigInt& x) const;
  double evaluate(double x) const;

  IntPolynomial operator*(const IntPolynomial& rhs) const;
  IntPolynomial operator+(const IntPolynomial& rhs) const;
  IntPolynomial operator-(const IntPolynomial& rhs) const;

  friend bool operator==(const IntPolynomial&, const IntPolynomial&) = default;

  // "x^5 - 4x^3"
  std::string to_string() const;
  // Coefficients as decimal strings, lowest degree first.
  std::vector<std::string> to_strings() const;

 private:
  void trim();
  std::vector<BigInt> coeffs_;
};

}  // namespace hospec
