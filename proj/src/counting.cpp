#include "dp2/counting.hpp"

#include "dp2/errors.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <set>

namespace dp2 {
namespace {

std::string q_error(std::int64_t q, const std::string& why) {
  return "q = " + std::to_string(q) + " " + why;
}

bool aggregation_identity_holds(const ClassTable& table, const ClassData& data) {
  std::map<int, IntPolynomial> sums;
  for (const auto& c : table.classes())
    sums[c.pic_trace()] += data.class_record(c.unsigned_name()).table1_poly.expanded() * BigInt(c.size);
  for (const auto& t : data.traces()) {
    auto it = sums.find(t.trace_a);
    if (it == sums.end() || it->second != t.table2_poly.expanded()) return false;
    sums.erase(it);
  }
  return sums.empty();
}

std::size_t aggregation_failures(const ClassTable& table, const ClassData& data) {
  const auto report = aggregation_check(table, data);
  std::size_t n = report.stray_classes.size();
  for (const auto& r : report.rows) n += r.identity_holds ? 0 : 1;
  return n;
}

// Polynomial assigned to each class under a naming.
std::vector<IntPolynomial> polynomial_map(const ClassTable& table, const ClassData& data) {
  std::vector<IntPolynomial> out;
  for (const auto& c : table.classes()) out.push_back(data.class_record(c.unsigned_name()).table1_poly.expanded());
  return out;
}

}  // namespace

// ---------------------------------------------------------------------------
// OddPrimePower

std::optional<OddPrimePower> OddPrimePower::try_make(std::int64_t q) {
  if (q < 3 || q % 2 == 0 || q > kMax) return std::nullopt;
  std::int64_t p = q;
  for (std::int64_t d = 3; d * d <= q; d += 2)
    if (q % d == 0) {
      p = d;
      break;
    }
  int k = 0;
  std::int64_t rest = q;
  while (rest % p == 0) {
    rest /= p;
    ++k;
  }
  if (rest != 1) return std::nullopt;
  return OddPrimePower(q, p, k);
}

OddPrimePower OddPrimePower::make(std::int64_t q) {
  if (auto r = try_make(q)) return *r;
  if (q > 0 && q % 2 == 0)
    throw InvalidInput(q_error(q, "is even: characteristic 2 is not supported (the count formulas are wrong there, "
                                  "e.g. they give 135 surfaces of trace 8 over F_2 although none exist)"));
  if (q > kMax) throw InvalidInput(q_error(q, "exceeds the supported range (q <= 10^12)"));
  throw InvalidInput(q_error(q, "is not a power of an odd prime"));
}

std::vector<OddPrimePower> odd_prime_powers_up_to(std::int64_t n) {
  std::vector<OddPrimePower> out;
  for (std::int64_t q = 3; q <= n; q += 2)
    if (auto p = OddPrimePower::try_make(q)) out.push_back(*p);
  return out;
}

// ---------------------------------------------------------------------------
// Evaluation

BigInt evaluate_class_count(std::string_view label, const OddPrimePower& q, const ClassData& data) {
  return data.class_record(label).table1_poly.evaluate(q.value());
}

BigInt count_by_trace(int a, const OddPrimePower& q, const ClassData& data) {
  return data.trace_record(a).table2_poly.evaluate(q.value());
}

nlohmann::json json_integer(const BigInt& v) {
  if (v >= std::numeric_limits<std::int64_t>::min() && v <= std::numeric_limits<std::int64_t>::max())
    return static_cast<std::int64_t>(v);
  return v.str();
}

BigInt surface_point_count(int a, const OddPrimePower& q) {
  const BigInt qq = q.value();
  return qq * qq + a * qq + 1;
}

// ---------------------------------------------------------------------------
// Aggregation

bool AggregationReport::ok() const {
  if (!stray_classes.empty()) return false;
  return std::all_of(rows.begin(), rows.end(),
                     [](const AggregationRow& r) { return r.identity_holds && r.pointwise_failures.empty(); });
}

nlohmann::json AggregationReport::to_json() const {
  nlohmann::json rows_json = nlohmann::json::array();
  for (const auto& r : rows)
    rows_json.push_back({{"trace", r.trace},
                         {"contributing", r.contributing},
                         {"identity_holds", r.identity_holds},
                         {"pointwise_failures", r.pointwise_failures},
                         {"aggregated", r.aggregated.to_string()},
                         {"expected", r.expected.to_string()}});
  return {{"ok", ok()}, {"rows", rows_json}, {"stray_classes", stray_classes}};
}

AggregationReport aggregation_check(const ClassTable& table, const ClassData& data,
                                    std::span<const OddPrimePower> sweep) {
  AggregationReport report;
  std::set<int> listed;
  for (const auto& t : data.traces()) listed.insert(t.trace_a);
  for (const auto& c : table.classes())
    if (!listed.contains(c.pic_trace())) report.stray_classes.push_back(c.name);

  for (const auto& t : data.traces()) {
    AggregationRow row;
    row.trace = t.trace_a;
    row.expected = t.table2_poly.expanded();
    for (const auto& c : table.classes()) {
      if (c.pic_trace() != t.trace_a) continue;
      row.contributing.push_back(c.name);
      row.aggregated += data.class_record(c.unsigned_name()).table1_poly.expanded() * BigInt(c.size);
    }
    row.identity_holds = row.aggregated == row.expected;
    for (const auto& q : sweep) {
      BigInt lhs = 0;
      for (const auto& c : table.classes())
        if (c.pic_trace() == t.trace_a) lhs += BigInt(c.size) * evaluate_class_count(c.name, q, data);
      if (lhs != count_by_trace(t.trace_a, q, data)) row.pointwise_failures.push_back(q.value());
    }
    report.rows.push_back(std::move(row));
  }
  return report;
}

std::size_t virtual_character_defects(const ClassTable& table, const ClassData& data) {
  // Exterior power traces from the characteristic polynomial on K-perp:
  // Lambda^k = (-1)^k [x^(7-k)].
  struct Row {
    BigInt size;
    std::array<BigInt, 8> lambda;
    const IntPolynomial* poly;
  };
  std::vector<Row> rows;
  BigInt order = 0;
  for (const auto& c : table.classes()) {
    if (c.sign != 1) continue;
    Row r{BigInt(c.size), {}, &data.class_record(c.name).table1_poly.expanded()};
    for (int k = 0; k <= 7; ++k) r.lambda[k] = ((k % 2) ? -1 : 1) * c.char_poly_std.coeff(static_cast<std::size_t>(7 - k));
    order += r.size;
    rows.push_back(r);
  }
  std::size_t defects = 0;
  for (std::size_t j = 0; j <= 6; ++j)
    for (int k = 0; k <= 7; ++k)
      for (int l = k; l <= 7; ++l) {
        BigInt s = 0;
        for (const auto& r : rows) s += r.size * r.poly->coeff(j) * r.lambda[k] * r.lambda[l];
        if (s % order != 0) ++defects;
      }
  return defects;
}

// ---------------------------------------------------------------------------
// Letter assignment

nlohmann::json LetterResolution::to_json() const {
  return {{"default_held", default_held},
          {"renames", renames},
          {"candidates", candidates},
          {"passing_aggregation", passing_aggregation},
          {"passing_integrality", passing_integrality},
          {"method", method}};
}

LetterResolution LetterResolution::from_json(const nlohmann::json& j) {
  LetterResolution r;
  r.default_held = j.at("default_held").get<bool>();
  r.renames = j.at("renames").get<std::map<std::string, std::string>>();
  r.candidates = j.at("candidates").get<std::size_t>();
  r.passing_aggregation = j.at("passing_aggregation").get<std::size_t>();
  r.passing_integrality = j.at("passing_integrality").get<std::size_t>();
  r.method = j.at("method").get<std::string>();
  return r;
}

LetterResolution resolve_letter_assignment(ClassTable& table, const ClassData& data) {
  LetterResolution result;
  result.method = "tie-groups";

  std::map<std::pair<int, std::uint64_t>, std::vector<std::string>> groups;
  for (const auto& c : table.classes())
    if (c.sign == 1) groups[{c.element_order, c.size}].push_back(c.name);
  std::vector<std::vector<std::string>> ties;
  for (auto& [key, names] : groups)
    if (names.size() > 1) {
      std::sort(names.begin(), names.end());
      ties.push_back(names);
    }

  // Odometer over permutations within each tie group; the first candidate is
  // the identity.
  std::vector<std::vector<std::string>> current = ties;
  std::vector<std::map<std::string, std::string>> survivors;
  std::vector<std::vector<IntPolynomial>> survivor_polys;
  while (true) {
    std::map<std::string, std::string> renames;
    for (std::size_t g = 0; g < ties.size(); ++g)
      for (std::size_t i = 0; i < ties[g].size(); ++i)
        if (ties[g][i] != current[g][i]) renames[ties[g][i]] = current[g][i];
    ClassTable candidate = table;
    candidate.rename(renames);
    ++result.candidates;
    if (aggregation_identity_holds(candidate, data)) {
      ++result.passing_aggregation;
      if (virtual_character_defects(candidate, data) == 0) {
        ++result.passing_integrality;
        survivors.push_back(renames);
        survivor_polys.push_back(polynomial_map(candidate, data));
      }
    }
    std::size_t g = 0;
    while (g < current.size() && !std::next_permutation(current[g].begin(), current[g].end())) ++g;
    if (g == current.size()) break;
  }

  if (survivors.empty()) {
    // Coordinate search over all letter permutations within each order.
    result.method = "coordinate-search";
    std::map<int, std::vector<std::string>> by_order;
    for (const auto& c : table.classes())
      if (c.sign == 1) by_order[c.element_order].push_back(c.name);
    ClassTable best = table;
    auto score = [&](const ClassTable& t) {
      return std::make_pair(aggregation_failures(t, data), virtual_character_defects(t, data));
    };
    auto best_score = score(best);
    for (int round = 0; round < 8 && best_score != std::make_pair<std::size_t, std::size_t>(0, 0); ++round) {
      bool improved = false;
      for (auto& [order, names] : by_order) {
        std::vector<std::string> perm = names;
        std::sort(perm.begin(), perm.end());
        std::vector<std::string> sorted = perm;
        do {
          std::map<std::string, std::string> renames;
          for (std::size_t i = 0; i < sorted.size(); ++i)
            if (sorted[i] != perm[i]) renames[sorted[i]] = perm[i];
          ClassTable t = best;
          t.rename(renames);
          ++result.candidates;
          auto s = score(t);
          if (s < best_score) {
            best = t;
            best_score = s;
            improved = true;
          }
        } while (std::next_permutation(perm.begin(), perm.end()));
      }
      if (!improved) break;
    }
    if (best_score.first != 0 || best_score.second != 0)
      throw VerificationFailure("no letter assignment satisfies the aggregation identity (" +
                                std::to_string(best_score.first) + " failing rows, " +
                                std::to_string(best_score.second) + " character defects)");
    // Express the result as a rename map relative to the provisional names.
    std::map<std::string, std::string> renames;
    for (std::size_t i = 0; i < table.size(); ++i)
      if (table[i].sign == 1 && table[i].name != best[i].name) renames[table[i].name] = best[i].name;
    result.passing_aggregation = result.passing_integrality = 1;
    survivors.push_back(renames);
    survivor_polys.push_back(polynomial_map(best, data));
  }

  for (std::size_t i = 1; i < survivor_polys.size(); ++i)
    if (survivor_polys[i] != survivor_polys[0])
      throw VerificationFailure("letter assignment is ambiguous: " + std::to_string(survivors.size()) +
                                " namings pass every check but assign different polynomials");

  result.renames = survivors.front();
  result.default_held = result.renames.empty();
  table.rename(result.renames);
  return result;
}

// ---------------------------------------------------------------------------
// Existence

ExistenceExceptions existence_exceptions(const OddPrimePower& q, const ClassData& data) {
  ExistenceExceptions out;
  for (const auto& c : data.classes())
    if (c.table1_poly.evaluate(q.value()) == 0) {
      out.class_exceptions.push_back(c.name);
      out.class_exceptions.push_back("-" + c.name);
    }
  for (const auto& t : data.traces())
    if (t.table2_poly.evaluate(q.value()) == 0) out.trace_exceptions.push_back(t.trace_a);
  return out;
}

ExistenceExceptions published_exceptions(const OddPrimePower& q, const ClassData& data) {
  ExistenceExceptions out;
  for (const auto& c : data.classes())
    for (const auto& row : data.class_exceptions())
      if (row.label == c.name && std::count(row.q_values.begin(), row.q_values.end(), q.value())) {
        out.class_exceptions.push_back(c.name);
        out.class_exceptions.push_back("-" + c.name);
      }
  for (const auto& t : data.traces())
    for (const auto& row : data.trace_exceptions())
      if (row.label == std::to_string(t.trace_a) && std::count(row.q_values.begin(), row.q_values.end(), q.value()))
        out.trace_exceptions.push_back(t.trace_a);
  return out;
}

}  // namespace dp2
