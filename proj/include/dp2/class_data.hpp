#pragma once

// Embedded count tables: one polynomial per +-class pair of W(E7) and one per
// Picard trace, each stored as printed (factored) and expanded.

#include "dp2/polynomial.hpp"

#include <nlohmann/json.hpp>

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace dp2 {

class ClassTable;

struct PolynomialFactor {
  IntPolynomial poly;
  unsigned multiplicity = 1;
};

class CountingPolynomial {
 public:
  CountingPolynomial() = default;
  CountingPolynomial(std::string printed, BigInt scale, std::vector<PolynomialFactor> factors, IntPolynomial expanded);

  const std::string& printed() const { return printed_; }
  const BigInt& scale() const { return scale_; }
  const std::vector<PolynomialFactor>& factors() const { return factors_; }
  const IntPolynomial& expanded() const { return expanded_; }

  /// scale * prod(factor^multiplicity), recomputed from the factored form.
  IntPolynomial product_of_factors() const;
  BigInt evaluate(const BigInt& q) const { return expanded_.evaluate(q); }
  /// Factored form regenerated from the stored factors.
  std::string factored_string() const;

 private:
  std::string printed_;
  BigInt scale_ = 1;
  std::vector<PolynomialFactor> factors_;
  IntPolynomial expanded_;
};

/// One row of the class table, keyed by the unsigned label.
struct ConjClassRecord {
  std::string name;  ///< e.g. "7A"; the row covers both "7A" and "-7A"
  int element_order = 0;
  CountingPolynomial table1_poly;
  /// Filled from the group computation by ClassData::populate().
  std::optional<std::uint64_t> sp62_size;
  std::optional<int> chi_std;
};

struct TraceRecord {
  int trace_a = 0;
  CountingPolynomial table2_poly;
};

struct ExistenceRow {
  std::string label;  ///< class label or trace, as text
  std::vector<std::int64_t> q_values;
};

struct DataCheck {
  std::string name;
  bool passed = false;
  std::string detail;
};

struct DataValidationReport {
  std::vector<DataCheck> checks;
  bool ok() const;
};

class ClassData {
 public:
  /// Parses the tables JSON ({version, classes, traces, ...}). Throws DataError.
  static ClassData from_json(const nlohmann::json& j);
  /// The tables compiled into the library.
  static const ClassData& embedded();
  static std::string_view embedded_json_text();

  const std::vector<ConjClassRecord>& classes() const { return classes_; }
  const std::vector<TraceRecord>& traces() const { return traces_; }
  /// Published zero sets, as listed alongside the tables.
  const std::vector<ExistenceRow>& class_exceptions() const { return class_exceptions_; }
  const std::vector<ExistenceRow>& trace_exceptions() const { return trace_exceptions_; }

  /// Accepts "7A", "-7A" or "±7A". Throws InvalidInput listing valid labels.
  const ConjClassRecord& class_record(std::string_view name) const;
  /// Throws InvalidInput listing the possible traces.
  const TraceRecord& trace_record(int a) const;
  std::vector<int> possible_traces() const;
  /// Hash of the parsed tables; keys cached results that depend on them.
  const std::string& fingerprint() const { return fingerprint_; }

  /// Transcription integrity. Never throws; see validate_or_throw().
  DataValidationReport validate() const;
  void validate_or_throw() const;

  /// Copies class sizes and traces of the determinant-one classes from `table`.
  void populate(const ClassTable& table);

 private:
  std::vector<ConjClassRecord> classes_;
  std::vector<TraceRecord> traces_;
  std::vector<ExistenceRow> class_exceptions_;
  std::vector<ExistenceRow> trace_exceptions_;
  std::string fingerprint_;
};

/// Strips a leading "-", "+" or "±".
std::string unsigned_label(std::string_view label);

}  // namespace dp2
