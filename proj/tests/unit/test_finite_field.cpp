#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "dp2/errors.hpp"
#include "dp2/finite_field.hpp"

#include <random>
#include <set>

using namespace dp2;

TEST_CASE("primality") {
  CHECK(is_prime(2));
  CHECK(is_prime(3));
  CHECK(is_prime(2161));
  CHECK_FALSE(is_prime(1));
  CHECK_FALSE(is_prime(9));
  CHECK_FALSE(is_prime(561));
}

TEST_CASE("construction") {
  CHECK_THROWS_AS(FiniteField::make(2, 3), InvalidInput);
  CHECK_THROWS_AS(FiniteField::make(9, 1), InvalidInput);
  CHECK_THROWS_AS(FiniteField::make(3, 0), InvalidInput);
  CHECK_THROWS_AS(FiniteField::make(3, 20), InvalidInput);

  const auto f3 = FiniteField::make(3, 1);
  CHECK(f3.size() == 3);
  CHECK(f3.modulus() == std::vector<std::uint32_t>{0, 1});
  const auto f9 = FiniteField::make(3, 2);
  CHECK(f9.size() == 9);
  // x^2 + 1 is the first irreducible quadratic over F_3 in this order
  CHECK(f9.modulus() == std::vector<std::uint32_t>{1, 0, 1});
  CHECK(FiniteField::make(3, 7).size() == 2187);
  CHECK(FiniteField::make(3, 2).modulus() == f9.modulus());
}

TEST_CASE("representation round trips") {
  const auto F = FiniteField::make(5, 3);
  std::set<std::uint32_t> codes;
  for (std::uint32_t i = 0; i < F.size(); ++i) {
    const auto x = F.from_index(i);
    REQUIRE(F.index(x) == i);
    REQUIRE(F.from_coeffs(F.coeffs(x)) == x);
    codes.insert(x.code);
  }
  CHECK(codes.size() == F.size());
  CHECK(F.from_int(-1) == F.neg(F.one()));
  CHECK(F.from_int(5) == F.zero());
  CHECK(F.index(F.one()) == 1);
}

TEST_CASE("field laws") {
  for (auto [p, k] : {std::pair{3u, 1u}, {3u, 2u}, {3u, 5u}, {5u, 2u}, {7u, 3u}, {13u, 1u}}) {
    const auto F = FiniteField::make(p, k);
    std::mt19937 rng(p * 100 + k);
    auto rnd = [&] { return F.from_index(rng() % F.size()); };
    for (int t = 0; t < 2000; ++t) {
      const auto a = rnd(), b = rnd(), c = rnd();
      REQUIRE(F.add(a, b) == F.add(b, a));
      REQUIRE(F.mul(a, b) == F.mul(b, a));
      REQUIRE(F.add(F.add(a, b), c) == F.add(a, F.add(b, c)));
      REQUIRE(F.mul(F.mul(a, b), c) == F.mul(a, F.mul(b, c)));
      REQUIRE(F.mul(a, F.add(b, c)) == F.add(F.mul(a, b), F.mul(a, c)));
      REQUIRE(F.add(a, F.neg(a)) == F.zero());
      REQUIRE(F.sub(a, b) == F.add(a, F.neg(b)));
      if (a != F.zero()) REQUIRE(F.mul(a, F.inv(a)) == F.one());
      REQUIRE(F.pow(a, F.size()) == a);
      // coefficientwise addition in the polynomial basis
      auto ca = F.coeffs(a), cb = F.coeffs(b);
      for (std::size_t i = 0; i < ca.size(); ++i) ca[i] = (ca[i] + cb[i]) % p;
      REQUIRE(F.from_coeffs(ca) == F.add(a, b));
    }
    CHECK_THROWS_AS(F.inv(F.zero()), std::domain_error);
  }
}

TEST_CASE("frobenius") {
  const auto F = FiniteField::make(3, 6);
  for (std::uint32_t i = 0; i < F.size(); i += 7) {
    const auto x = F.from_index(i), y = F.from_index((i * 31 + 5) % F.size());
    CHECK(F.frobenius(x, 6) == x);
    CHECK(F.frobenius(x) == F.pow(x, 3));
    CHECK(F.frobenius(F.add(x, y)) == F.add(F.frobenius(x), F.frobenius(y)));
    CHECK(F.frobenius(F.mul(x, y)) == F.mul(F.frobenius(x), F.frobenius(y)));
  }
  // order exactly 6 on the generator
  for (unsigned t = 1; t < 6; ++t) CHECK(F.frobenius(F.generator(), t) != F.generator());

  const auto F9 = FiniteField::make(3, 2);
  int fixed = 0;
  for (const auto x : F9.elements()) {
    CHECK(F9.frobenius(F9.frobenius(x)) == x);
    fixed += F9.frobenius(x) == x;
  }
  CHECK(fixed == 3);
}

TEST_CASE("subfields") {
  const auto F = FiniteField::make(3, 6);
  for (unsigned d : {1u, 2u, 3u, 6u}) {
    const auto sub = F.subfield_elements(d);
    std::uint32_t expected = 1;
    for (unsigned i = 0; i < d; ++i) expected *= 3;
    CHECK(sub.size() == expected);
    for (auto x : sub) CHECK(F.in_subfield(x, d));
    CHECK(std::is_sorted(sub.begin(), sub.end(), [&](auto a, auto b) { return F.index(a) < F.index(b); }));
  }
  CHECK_THROWS_AS(F.in_subfield(F.one(), 4), InvalidInput);
  CHECK_THROWS_AS(F.subfield_elements(5), InvalidInput);
}
