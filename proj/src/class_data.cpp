#include "dp2/class_data.hpp"

#include "dp2/errors.hpp"
#include "dp2/weyl.hpp"

#include <sstream>

namespace dp2 {

// Defined in the generated embedded_tables.cpp.
extern const char* const kEmbeddedTablesJson;

namespace {

CountingPolynomial parse_poly(const nlohmann::json& j) {
  std::vector<PolynomialFactor> factors;
  for (const auto& f : j.at("factors")) {
    std::vector<BigInt> c;
    for (const auto& x : f.at("coeffs")) c.emplace_back(x.get<std::int64_t>());
    factors.push_back({IntPolynomial(std::move(c)), f.at("multiplicity").get<unsigned>()});
  }
  std::vector<BigInt> expanded;
  for (const auto& x : j.at("expanded")) expanded.emplace_back(x.get<std::int64_t>());
  return CountingPolynomial(j.at("printed").get<std::string>(), BigInt(j.at("scale").get<std::int64_t>()),
                            std::move(factors), IntPolynomial(std::move(expanded)));
}

std::vector<ExistenceRow> parse_exceptions(const nlohmann::json& arr, const char* key) {
  std::vector<ExistenceRow> out;
  for (const auto& row : arr) {
    ExistenceRow r;
    const auto& v = row.at(key);
    r.label = v.is_string() ? v.get<std::string>() : std::to_string(v.get<int>());
    r.q_values = row.at("q").get<std::vector<std::int64_t>>();
    out.push_back(std::move(r));
  }
  return out;
}

}  // namespace

std::string unsigned_label(std::string_view label) {
  if (label.starts_with("±")) return std::string(label.substr(std::string_view("±").size()));
  if (label.starts_with('-') || label.starts_with('+')) return std::string(label.substr(1));
  return std::string(label);
}

CountingPolynomial::CountingPolynomial(std::string printed, BigInt scale, std::vector<PolynomialFactor> factors,
                                       IntPolynomial expanded)
    : printed_(std::move(printed)), scale_(std::move(scale)), factors_(std::move(factors)), expanded_(std::move(expanded)) {}

IntPolynomial CountingPolynomial::product_of_factors() const {
  IntPolynomial acc = IntPolynomial::constant(scale_);
  for (const auto& f : factors_) acc *= f.poly.pow(f.multiplicity);
  return acc;
}

std::string CountingPolynomial::factored_string() const {
  if (factors_.size() == 1 && factors_[0].multiplicity == 1 && scale_ == 1) return factors_[0].poly.to_string();
  std::ostringstream os;
  if (scale_ != 1) os << scale_;
  for (const auto& f : factors_) {
    const bool bare = f.poly == IntPolynomial{0, 1};
    if (bare)
      os << 'q';
    else
      os << '(' << f.poly.to_string() << ')';
    if (f.multiplicity != 1) os << '^' << f.multiplicity;
  }
  return os.str();
}

bool DataValidationReport::ok() const {
  for (const auto& c : checks)
    if (!c.passed) return false;
  return true;
}

ClassData ClassData::from_json(const nlohmann::json& j) {
  ClassData d;
  try {
    if (j.at("version").get<int>() != 1) throw DataError("unsupported tables version");
    for (const auto& c : j.at("classes")) {
      ConjClassRecord r;
      r.name = c.at("name").get<std::string>();
      r.element_order = c.at("order").get<int>();
      r.table1_poly = parse_poly(c);
      d.classes_.push_back(std::move(r));
    }
    for (const auto& t : j.at("traces")) d.traces_.push_back({t.at("trace").get<int>(), parse_poly(t)});
    d.class_exceptions_ = parse_exceptions(j.at("class_exceptions"), "class");
    std::uint64_t h = 1469598103934665603ULL;
    for (unsigned char ch : j.dump()) {
      h ^= ch;
      h *= 1099511628211ULL;
    }
    std::ostringstream os;
    os << std::hex << h;
    d.fingerprint_ = os.str();
    d.trace_exceptions_ = parse_exceptions(j.at("trace_exceptions"), "trace");
  } catch (const nlohmann::json::exception& e) {
    throw DataError(std::string("malformed tables JSON: ") + e.what());
  }
  return d;
}

std::string_view ClassData::embedded_json_text() { return kEmbeddedTablesJson; }

const ClassData& ClassData::embedded() {
  static const ClassData data = from_json(nlohmann::json::parse(kEmbeddedTablesJson));
  return data;
}

const ConjClassRecord& ClassData::class_record(std::string_view name) const {
  const std::string key = unsigned_label(name);
  for (const auto& c : classes_)
    if (c.name == key) return c;
  std::string valid;
  for (const auto& c : classes_) valid += (valid.empty() ? "" : ", ") + c.name;
  throw InvalidInput("unknown class label '" + std::string(name) + "'; valid labels (optionally prefixed by '-'): " + valid);
}

const TraceRecord& ClassData::trace_record(int a) const {
  for (const auto& t : traces_)
    if (t.trace_a == a) return t;
  std::string valid;
  for (int v : possible_traces()) valid += (valid.empty() ? "" : ", ") + std::to_string(v);
  throw InvalidInput("trace " + std::to_string(a) + " does not occur for degree-2 Del Pezzo surfaces; possible traces: " +
                     valid);
}

std::vector<int> ClassData::possible_traces() const {
  std::vector<int> out;
  for (const auto& t : traces_) out.push_back(t.trace_a);
  return out;
}

DataValidationReport ClassData::validate() const {
  DataValidationReport report;
  auto add = [&](std::string name, bool ok, std::string detail = {}) {
    report.checks.push_back({std::move(name), ok, std::move(detail)});
  };

  add("30 class rows", classes_.size() == 30, std::to_string(classes_.size()) + " rows");
  add("13 trace rows", traces_.size() == 13, std::to_string(traces_.size()) + " rows");

  for (const auto& c : classes_) {
    const auto& p = c.table1_poly;
    add("class " + c.name + " factored == expanded", p.product_of_factors() == p.expanded(),
        p.product_of_factors().to_string() + " vs " + p.expanded().to_string());
    add("class " + c.name + " monic of degree 6", p.expanded().is_monic() && p.expanded().degree() == 6,
        "degree " + std::to_string(p.expanded().degree()));
  }
  for (const auto& t : traces_) {
    const auto& p = t.table2_poly;
    add("trace " + std::to_string(t.trace_a) + " factored == expanded", p.product_of_factors() == p.expanded(),
        p.product_of_factors().to_string() + " vs " + p.expanded().to_string());
  }

  auto find_trace = [&](int a) -> const TraceRecord* {
    for (const auto& t : traces_)
      if (t.trace_a == a) return &t;
    return nullptr;
  };
  for (const auto& t : traces_) {
    const TraceRecord* mirror = find_trace(2 - t.trace_a);
    add("trace " + std::to_string(t.trace_a) + " == trace " + std::to_string(2 - t.trace_a),
        mirror != nullptr && mirror->table2_poly.expanded() == t.table2_poly.expanded());
  }

  auto find_class = [&](const std::string& n) -> const ConjClassRecord* {
    for (const auto& c : classes_)
      if (c.name == n) return &c;
    return nullptr;
  };
  const ConjClassRecord* c1a = find_class("1A");
  for (int a : {-6, 8}) {
    const TraceRecord* t = find_trace(a);
    add("trace " + std::to_string(a) + " == class 1A",
        c1a != nullptr && t != nullptr && t->table2_poly.expanded() == c1a->table1_poly.expanded());
  }
  const ConjClassRecord* c4c = find_class("4C");
  const ConjClassRecord* c4e = find_class("4E");
  add("class 4C == class 4E",
      c4c != nullptr && c4e != nullptr && c4c->table1_poly.expanded() == c4e->table1_poly.expanded());
  return report;
}

void ClassData::validate_or_throw() const {
  for (const auto& c : validate().checks)
    if (!c.passed) throw DataError("table transcription error: " + c.name + (c.detail.empty() ? "" : " (" + c.detail + ")"));
}

void ClassData::populate(const ClassTable& table) {
  for (auto& rec : classes_) {
    const auto& cls = table.by_name(rec.name);
    rec.sp62_size = cls.size;
    rec.chi_std = cls.trace_std;
  }
}

}  // namespace dp2
