#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "dp2/class_data.hpp"
#include "dp2/errors.hpp"

using namespace dp2;

namespace {
const ClassData& data() { return ClassData::embedded(); }
}  // namespace

TEST_CASE("embedded tables load and validate") {
  CHECK(data().classes().size() == 30);
  CHECK(data().traces().size() == 13);
  const auto report = data().validate();
  for (const auto& c : report.checks) CHECK_MESSAGE(c.passed, c.name << ": " << c.detail);
  CHECK(report.ok());
  CHECK_NOTHROW(data().validate_or_throw());
}

TEST_CASE("class rows") {
  CHECK(data().classes().front().name == "1A");
  CHECK(data().classes().back().name == "15A");
  const auto& r = data().class_record("7A");
  CHECK(r.element_order == 7);
  CHECK(r.table1_poly.printed() == "(q^2 - q + 1)(q + 1)q^3");
  CHECK(r.table1_poly.expanded() == IntPolynomial{0, 0, 0, 1, 0, 0, 1});
  CHECK(&data().class_record("-7A") == &r);
  CHECK(&data().class_record("±7A") == &r);
  for (const auto& c : data().classes()) {
    CHECK(c.table1_poly.expanded().degree() == 6);
    CHECK(c.table1_poly.expanded().is_monic());
    CHECK(c.table1_poly.product_of_factors() == c.table1_poly.expanded());
  }
  CHECK(data().class_record("4C").table1_poly.expanded() == data().class_record("4E").table1_poly.expanded());
}

TEST_CASE("trace rows") {
  const auto& t = data().trace_record(-3);
  CHECK(t.table2_poly.scale() == 672);
  CHECK(t.table2_poly.printed() == "672(q^2 - 3q + 5)(q + 1)(q - 1)(q - 2)q");
  CHECK(data().trace_record(0).table2_poly.expanded() == data().trace_record(2).table2_poly.expanded());
  CHECK(data().trace_record(-6).table2_poly.expanded() == data().class_record("1A").table1_poly.expanded());
  CHECK(data().trace_record(8).table2_poly.expanded() == data().class_record("1A").table1_poly.expanded());
  CHECK(data().possible_traces() == std::vector<int>{-6, -4, -3, -2, -1, 0, 1, 2, 3, 4, 5, 6, 8});
}

TEST_CASE("lookup errors name the valid choices") {
  try {
    data().class_record("7B");
    FAIL("expected InvalidInput");
  } catch (const InvalidInput& e) {
    CHECK(std::string(e.what()).find("15A") != std::string::npos);
  }
  try {
    data().trace_record(7);
    FAIL("expected InvalidInput");
  } catch (const InvalidInput& e) {
    CHECK(std::string(e.what()).find("-6, -4, -3") != std::string::npos);
  }
}

TEST_CASE("transcription errors are caught") {
  auto j = nlohmann::json::parse(ClassData::embedded_json_text());
  SUBCASE("expanded form edited") {
    j["classes"][3]["expanded"][0] = 16;
    const auto d = ClassData::from_json(j);
    CHECK_FALSE(d.validate().ok());
    CHECK_THROWS_AS(d.validate_or_throw(), DataError);
  }
  SUBCASE("symmetric trace row edited") {
    j["traces"][0]["scale"] = 2;
    const auto d = ClassData::from_json(j);
    CHECK_FALSE(d.validate().ok());
  }
  SUBCASE("missing field") {
    j["classes"][0].erase("expanded");
    CHECK_THROWS_AS(ClassData::from_json(j), DataError);
  }
}

TEST_CASE("labels") {
  CHECK(unsigned_label("-7A") == "7A");
  CHECK(unsigned_label("±7A") == "7A");
  CHECK(unsigned_label("7A") == "7A");
}
