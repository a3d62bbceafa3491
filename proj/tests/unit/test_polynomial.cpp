#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "dp2/polynomial.hpp"

using dp2::BigInt;
using dp2::IntPolynomial;

TEST_CASE("construction trims leading zeros") {
  IntPolynomial p{1, 2, 0, 0};
  CHECK(p.degree() == 1);
  CHECK(IntPolynomial{0, 0}.is_zero());
  CHECK(IntPolynomial{}.degree() == -1);
}

TEST_CASE("arithmetic") {
  IntPolynomial a{-1, 1};  // q - 1
  IntPolynomial b{1, 1};   // q + 1
  CHECK(a * b == IntPolynomial{-1, 0, 1});
  CHECK(a + b == IntPolynomial{0, 2});
  CHECK(a - a == IntPolynomial{});
  CHECK(a.pow(3) == IntPolynomial{-1, 3, -3, 1});
  CHECK(a * BigInt(672) == IntPolynomial{-672, 672});
}

TEST_CASE("evaluation is exact beyond 64 bits") {
  IntPolynomial p = IntPolynomial::monomial(1, 6);
  BigInt q("1000000000000");
  CHECK(p.evaluate(q) == BigInt("1000000000000000000000000000000000000000000000000000000000000000000000000"));
}

TEST_CASE("printing") {
  CHECK(IntPolynomial{-175, 119, -20, 1}.to_string() == "q^3 - 20q^2 + 119q - 175");
  CHECK(IntPolynomial{0, 0, 0, 0, 0, 0, 1}.to_string("x") == "x^6");
  CHECK(IntPolynomial{}.to_string() == "0");
  CHECK(IntPolynomial{1, -1}.to_string() == "-q + 1");
}

TEST_CASE("factored products match expansions") {
  // (q - 3)(q - 5)(q - 7)(q^3 - 20q^2 + 119q - 175)
  IntPolynomial p = IntPolynomial{-3, 1} * IntPolynomial{-5, 1} * IntPolynomial{-7, 1} * IntPolynomial{-175, 119, -20, 1};
  CHECK(p == IntPolynomial{18375, -24920, 13174, -3485, 490, -35, 1});
  CHECK(p.evaluate(9) == 240);
}
