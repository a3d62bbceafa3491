#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "dp2/errors.hpp"
#include "dp2/weyl.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <set>

using namespace dp2;

namespace {

const WeylGroup& group() {
  static const WeylGroup g;
  return g;
}

std::array<int, 7> compose(const std::array<int, 7>& a, const std::array<int, 7>& b) {
  std::array<int, 7> r{};
  for (std::size_t i = 0; i < 7; ++i) r[i] = a[static_cast<std::size_t>(b[i] - 1)];
  return r;
}

}  // namespace

TEST_CASE("generators") {
  for (const auto& g : simple_reflections()) {
    CHECK(g * g == WeylElement::identity());
    CHECK(g.fixes_canonical());
    CHECK(g.preserves_form());
    CHECK(g.determinant() == -1);
    CHECK(trace_pic(g) == 6);
  }
}

TEST_CASE("elementary elements") {
  const auto id = WeylElement::identity();
  const auto minus = WeylElement::geiser();
  CHECK(trace_pic(id) == 8);
  CHECK(trace_pic(minus) == -6);
  CHECK(minus * minus == id);
  CHECK(minus(canonical_class()) == canonical_class());
  CHECK(minus(PicVector::exceptional(1) - PicVector::exceptional(2)) ==
        PicVector::exceptional(2) - PicVector::exceptional(1));
  CHECK(minus.determinant() == -1);
  CHECK(id.char_poly_std() == IntPolynomial{-1, 1}.pow(7));
  CHECK(minus.char_poly_std() == IntPolynomial{1, 1}.pow(7));
}

TEST_CASE("sign decomposition") {
  CHECK(sign_decompose(WeylElement::identity()) == std::pair{WeylElement::identity(), 1});
  CHECK(sign_decompose(WeylElement::geiser()) == std::pair{WeylElement::identity(), -1});
  std::mt19937 rng(7);
  for (int t = 0; t < 50; ++t) {
    auto w = group().element(rng() % group().size());
    auto [g, s] = sign_decompose(w);
    CHECK(g.determinant() == 1);
    CHECK(s == w.determinant());
    CHECK(sign_decompose(WeylElement::geiser() * w).first == g);
  }
}

TEST_CASE("embedding of permutations") {
  const std::array<int, 7> id = {1, 2, 3, 4, 5, 6, 7};
  const std::array<int, 7> cyc = {2, 3, 4, 5, 6, 7, 1};
  const std::array<int, 7> tr = {2, 1, 3, 4, 5, 6, 7};
  CHECK(embed_permutation(id) == WeylElement::identity());
  CHECK(embed_permutation(cyc).order() == 7);
  CHECK(trace_pic(embed_permutation(cyc)) == 1);
  CHECK(embed_permutation(tr).order() == 2);
  CHECK(trace_pic(embed_permutation(tr)) == 6);
  CHECK(embed_permutation(cyc)(PicVector::exceptional(1)) == PicVector::exceptional(2));

  std::array<int, 7> a = id, b = id;
  std::mt19937 rng(3);
  for (int t = 0; t < 100; ++t) {
    std::shuffle(a.begin(), a.end(), rng);
    std::shuffle(b.begin(), b.end(), rng);
    CHECK(embed_permutation(compose(a, b)) == embed_permutation(a) * embed_permutation(b));
    int fixed = 0;
    for (std::size_t i = 0; i < 7; ++i) fixed += a[i] == static_cast<int>(i) + 1;
    CHECK(trace_pic(embed_permutation(a)) == 1 + fixed);
  }
  const std::array<int, 7> bad = {1, 1, 3, 4, 5, 6, 7};
  CHECK_THROWS_AS(embed_permutation(bad), InvalidInput);
}

TEST_CASE("root permutations reject non-elements") {
  Matrix8 m = WeylElement::identity().matrix();
  m[0][0] = 2;
  CHECK_THROWS_AS(WeylElement(m).root_permutation(), InvalidInput);
}

TEST_CASE("enumeration") {
  const auto& G = group();
  CHECK(G.size() == 2903040);
  CHECK(G.even_length_count() == 1451520);
  CHECK(G.find(WeylElement::geiser()).has_value());
  CHECK(G.find(WeylElement::identity()).has_value());
  Matrix8 m = WeylElement::identity().matrix();
  m[1][1] = -1;  // flips E1: preserves the form but moves K
  CHECK_FALSE(G.find(WeylElement(m)).has_value());

  std::mt19937 rng(11);
  std::set<std::int64_t> traces;
  for (int t = 0; t < 2000; ++t) {
    const auto i = rng() % G.size();
    const auto w = G.element(i);
    REQUIRE(w.preserves_form());
    REQUIRE(w.fixes_canonical());
    REQUIRE(w.root_permutation() == G.permutation(i));
    REQUIRE(G.find(w) == i);
    const auto j = rng() % G.size();
    const auto v = G.element(j);
    // determinant is a homomorphism
    REQUIRE((w * v).determinant() == w.determinant() * v.determinant());
    traces.insert(trace_pic(w));
  }
  const std::set<std::int64_t> allowed = {-6, -4, -3, -2, -1, 0, 1, 2, 3, 4, 5, 6, 8};
  for (auto a : traces) CHECK(allowed.contains(a));
}

TEST_CASE("conjugacy classes") {
  const auto& t = group().class_table();
  REQUIRE(t.size() == 60);
  std::uint64_t total = 0;
  std::multiset<std::uint64_t> det_one_sizes;
  for (std::size_t i = 0; i < t.size(); ++i) {
    const auto& c = t[i];
    total += c.size;
    CHECK(WeylGroup::kExpectedOrder % c.size == 0);
    const auto& p = t[static_cast<std::size_t>(c.partner)];
    CHECK(static_cast<std::size_t>(p.partner) == i);
    CHECK(p.size == c.size);
    CHECK(p.trace_std == -c.trace_std);
    CHECK(p.sign == -c.sign);
    CHECK(c.trace_std == trace_pic(c.representative) - 1);
    CHECK(c.element_order == c.representative.order());
    if (c.sign > 0) det_one_sizes.insert(c.size);
  }
  CHECK(total == WeylGroup::kExpectedOrder);
  CHECK(det_one_sizes.count(1) == 1);
  CHECK(det_one_sizes.count(63) == 1);
  CHECK(det_one_sizes.count(672) == 1);
  CHECK(det_one_sizes.count(207360) == 1);
}

TEST_CASE("naming and identification") {
  ClassTable t = group().class_table();
  t.assign_default_names();
  CHECK(t.identify(WeylElement::identity()) == "1A");
  CHECK(t.identify(WeylElement::geiser()) == "-1A");
  CHECK(t.by_name("1A").size == 1);
  CHECK(t.by_name("2A").size == 63);
  CHECK(t.by_name("3A").size == 672);
  CHECK(t.by_name("7A").size == 207360);
  const std::array<int, 7> cyc = {2, 3, 4, 5, 6, 7, 1};
  const auto name = t.identify(embed_permutation(cyc), &group());
  CHECK((name == "7A" || name == "-7A"));
  // Without the group, identification either succeeds or refuses; three
  // pairs of classes share order, characteristic polynomial and root cycle type.
  std::set<std::string> shared;
  for (const auto& c : t.classes()) {
    CHECK(t.identify(c.representative, &group()) == c.name);
    std::string got;
    try {
      got = t.identify(c.representative);
    } catch (const VerificationFailure&) {
      shared.insert(c.name);
      continue;
    }
    CHECK(got == c.name);
  }
  CHECK(shared == std::set<std::string>{"2B", "2D", "-4B", "-4E", "6F", "6G"});
  // random elements agree with the enumeration's class map
  std::mt19937 rng(5);
  for (int k = 0; k < 300; ++k) {
    const auto i = rng() % group().size();
    CHECK(t.identify(group().element(i), &group()) == t[static_cast<std::size_t>(group().class_of(i))].name);
  }
}

TEST_CASE("rename is a permutation") {
  ClassTable t = group().class_table();
  t.assign_default_names();
  const auto size_6a = t.by_name("6A").size;
  t.rename({{"6A", "6B"}, {"6B", "6A"}});
  CHECK(t.by_name("6B").size == size_6a);
  CHECK(t.by_name("-6B").size == size_6a);
  CHECK_THROWS(t.rename({{"6A", "6C"}}));
}

TEST_CASE("class report round trip") {
  ClassTable t = group().class_table();
  t.assign_default_names();
  const auto j = t.to_json();
  CHECK(j.at("generator_hash") == generator_hash());
  const auto back = ClassTable::from_json(j);
  REQUIRE(back.size() == t.size());
  for (std::size_t i = 0; i < t.size(); ++i) {
    CHECK(back[i].name == t[i].name);
    CHECK(back[i].size == t[i].size);
    CHECK(back[i].representative == t[i].representative);
    CHECK(back[i].partner == t[i].partner);
  }
}

TEST_CASE("memory budget") {
  EnumerationOptions tiny;
  tiny.memory_budget_bytes = 1 << 20;
  CHECK_THROWS_AS(WeylGroup{tiny}, BudgetExceeded);
}
