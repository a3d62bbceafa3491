#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "dp2/errors.hpp"
#include "dp2/picard.hpp"

#include <limits>
#include <set>

using namespace dp2;

namespace {
PicVector L() { return PicVector::line(); }
PicVector E(int i) { return PicVector::exceptional(i); }
}  // namespace

TEST_CASE("intersection form") {
  CHECK(inner(L(), L()) == 1);
  CHECK(inner(E(1), E(1)) == -1);
  CHECK(inner(E(1), E(2)) == 0);
  CHECK(inner(L(), E(3)) == 0);
  CHECK(inner(canonical_class(), canonical_class()) == 2);
  CHECK(canonical_class() == PicVector({-3, 1, 1, 1, 1, 1, 1, 1}));
}

TEST_CASE("form is symmetric") {
  for (const auto& u : roots())
    for (const auto& v : positive_roots()) REQUIRE(inner(u, v) == inner(v, u));
}

TEST_CASE("roots agree with a brute-force search") {
  // Every root has |d| <= 2 and |a_i| <= 2 in L, E_i coordinates.
  std::set<PicVector> found;
  const auto K = canonical_class();
  PicVector::Coeffs c{};
  for (int n = 0; n < 390625; ++n) {  // 5^8
    int m = n;
    for (auto& x : c) {
      x = m % 5 - 2;
      m /= 5;
    }
    PicVector v(c);
    if (inner(v, v) == -2 && inner(v, K) == 0) found.insert(v);
  }
  std::set<PicVector> listed(roots().begin(), roots().end());
  CHECK(found.size() == 126);
  CHECK(found == listed);
}

TEST_CASE("positive roots in family order") {
  const auto& pos = positive_roots();
  REQUIRE(pos.size() == 63);
  CHECK(pos[0] == E(1) - E(2));
  CHECK(pos[21] == L() - E(1) - E(2) - E(3));
  CHECK(pos[56] == 2 * L() - E(2) - E(3) - E(4) - E(5) - E(6) - E(7));
  int fam[3] = {0, 0, 0};
  for (const auto& r : pos) ++fam[r[0]];
  CHECK(fam[0] == 21);
  CHECK(fam[1] == 35);
  CHECK(fam[2] == 7);
  for (int i = 0; i < 63; ++i) CHECK(roots()[static_cast<std::size_t>(i + 63)] == -pos[static_cast<std::size_t>(i)]);
  CHECK(root_index(E(2) - E(1)) == 63);
  CHECK(root_index(L()) == -1);
}

TEST_CASE("reflections") {
  const auto r = E(1) - E(2);
  CHECK(reflect(r, E(1)) == E(2));
  for (const auto& root : roots()) {
    CHECK(reflect(root, canonical_class()) == canonical_class());
    CHECK(reflect(root, reflect(root, L())) == L());
    CHECK(inner(reflect(root, L()), reflect(root, E(4))) == inner(L(), E(4)));
  }
  CHECK(reflect(r, r) == -r);
  CHECK_THROWS_AS(reflect(L(), E(1)), InvalidInput);
  CHECK_THROWS_AS(reflect(E(1), E(1)), InvalidInput);
}

TEST_CASE("checked arithmetic") {
  PicVector big({std::numeric_limits<std::int64_t>::max(), 0, 0, 0, 0, 0, 0, 0});
  CHECK_THROWS_AS(big + L(), std::overflow_error);
  CHECK_THROWS_AS(inner(big, big), std::overflow_error);
  CHECK((2 * L() - E(1)).to_string() == "2L - E1");
}
