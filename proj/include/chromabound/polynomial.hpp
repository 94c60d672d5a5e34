#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <complex>
#include <initializer_list>
#include <string>
#include <vector>

namespace chromabound {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Dense univariate polynomial with arbitrary-precision integer coefficients;
/// coefficient i multiplies x^i. The highest stored coefficient is never zero,
/// so the zero polynomial has no coefficients.
class IntPolynomial {
public:
  IntPolynomial() = default;
  explicit IntPolynomial(std::vector<BigInt> coefficients);
  IntPolynomial(std::initializer_list<long long> coefficients);

  static IntPolynomial constant(const BigInt &c);
  static IntPolynomial monomial(std::size_t power, const BigInt &c = 1);

  bool is_zero() const { return coeffs_.empty(); }
  /// Degree; -1 for the zero polynomial.
  long degree() const { return static_cast<long>(coeffs_.size()) - 1; }
  const std::vector<BigInt> &coefficients() const { return coeffs_; }
  /// Coefficient of x^i, zero beyond the degree.
  BigInt coefficient(std::size_t i) const;
  const BigInt &leading() const;

  /// Number of trailing zero coefficients, i.e. the multiplicity of 0 as a root.
  std::size_t zero_root_multiplicity() const;

  Rational evaluate(const Rational &x) const;
  std::complex<double> evaluate(std::complex<double> x) const;
  double evaluate(double x) const;

  IntPolynomial &operator+=(const IntPolynomial &o);
  IntPolynomial &operator-=(const IntPolynomial &o);
  IntPolynomial &operator*=(const IntPolynomial &o);
  friend IntPolynomial operator+(IntPolynomial a, const IntPolynomial &b) { return a += b; }
  friend IntPolynomial operator-(IntPolynomial a, const IntPolynomial &b) { return a -= b; }
  friend IntPolynomial operator*(IntPolynomial a, const IntPolynomial &b) { return a *= b; }
  friend bool operator==(const IntPolynomial &, const IntPolynomial &) = default;

  /// Human-readable form in the given variable, highest power first.
  std::string to_string(const std::string &var = "q") const;

private:
  void trim();
  std::vector<BigInt> coeffs_;
};

/// p^k by repeated multiplication.
IntPolynomial power(const IntPolynomial &p, std::size_t k);

} // namespace chromabound
