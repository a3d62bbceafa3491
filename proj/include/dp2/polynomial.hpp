#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace dp2 {

using BigInt = boost::multiprecision::cpp_int;

/// Dense univariate polynomial with arbitrary-precision integer coefficients.
/// Coefficients are stored low degree first; trailing zeros are trimmed, so
/// equality is coefficientwise.
class IntPolynomial {
 public:
  IntPolynomial() = default;
  IntPolynomial(std::initializer_list<long long> coeffs);
  explicit IntPolynomial(std::vector<BigInt> coeffs);

  static IntPolynomial constant(const BigInt& c);
  static IntPolynomial monomial(const BigInt& c, std::size_t degree);

  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  bool is_monic() const { return !coeffs_.empty() && coeffs_.back() == 1; }

  const std::vector<BigInt>& coeffs() const { return coeffs_; }
  /// Coefficient of q^i (zero past the degree).
  BigInt coeff(std::size_t i) const;

  BigInt evaluate(const BigInt& x) const;

  IntPolynomial& operator+=(const IntPolynomial& rhs);
  IntPolynomial& operator-=(const IntPolynomial& rhs);
  IntPolynomial& operator*=(const IntPolynomial& rhs);
  IntPolynomial& operator*=(const BigInt& scalar);

  friend IntPolynomial operator+(IntPolynomial a, const IntPolynomial& b) { return a += b; }
  friend IntPolynomial operator-(IntPolynomial a, const IntPolynomial& b) { return a -= b; }
  friend IntPolynomial operator*(IntPolynomial a, const IntPolynomial& b) { return a *= b; }
  friend IntPolynomial operator*(IntPolynomial a, const BigInt& s) { return a *= s; }
  friend IntPolynomial operator*(const BigInt& s, IntPolynomial a) { return a *= s; }
  friend bool operator==(const IntPolynomial&, const IntPolynomial&) = default;

  IntPolynomial pow(unsigned exponent) const;

  /// Human-readable form in the variable `var`, highest degree first,
  /// e.g. "q^3 - 20q^2 + 119q - 175".
  std::string to_string(std::string_view var = "q") const;

 private:
  void trim();
  std::vector<BigInt> coeffs_;
};

}  // namespace dp2
