#pragma once

// Queries over the count tables at a given odd prime power q, plus the
// cross-checks tying the tables to the computed conjugacy classes.

#include "dp2/class_data.hpp"
#include "dp2/polynomial.hpp"
#include "dp2/weyl.hpp"

#include <nlohmann/json.hpp>

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace dp2 {

/// q = p^k with p an odd prime, k >= 1, q <= 10^12.
class OddPrimePower {
 public:
  static constexpr std::int64_t kMax = 1'000'000'000'000;

  /// Throws InvalidInput for even q, non-prime-powers and q > kMax.
  static OddPrimePower make(std::int64_t q);
  static std::optional<OddPrimePower> try_make(std::int64_t q);

  std::int64_t value() const { return q_; }
  std::int64_t prime() const { return p_; }
  int exponent() const { return k_; }

  friend bool operator==(const OddPrimePower&, const OddPrimePower&) = default;

 private:
  OddPrimePower(std::int64_t q, std::int64_t p, int k) : q_(q), p_(p), k_(k) {}
  std::int64_t q_;
  std::int64_t p_;
  int k_;
};

/// All odd prime powers 3 <= q <= n, ascending.
std::vector<OddPrimePower> odd_prime_powers_up_to(std::int64_t n);

/// Marked surfaces whose Frobenius acts through the given signed class.
BigInt evaluate_class_count(std::string_view label, const OddPrimePower& q,
                            const ClassData& data = ClassData::embedded());

/// Surfaces with Picard trace `a`. Throws InvalidInput if `a` cannot occur.
BigInt count_by_trace(int a, const OddPrimePower& q, const ClassData& data = ClassData::embedded());

/// JSON number when the value fits in int64, decimal string otherwise.
nlohmann::json json_integer(const BigInt& v);

/// q^2 + a q + 1.
BigInt surface_point_count(int a, const OddPrimePower& q);

struct AggregationRow {
  int trace = 0;
  std::vector<std::string> contributing;  ///< signed labels with this Picard trace
  IntPolynomial aggregated;               ///< sum of size * class polynomial
  IntPolynomial expected;                 ///< trace polynomial
  bool identity_holds = false;            ///< coefficientwise
  std::vector<std::int64_t> pointwise_failures;
};

struct AggregationReport {
  std::vector<AggregationRow> rows;
  /// Classes whose Picard trace is not a listed trace.
  std::vector<std::string> stray_classes;
  bool ok() const;
  nlohmann::json to_json() const;
};

/// For every trace a: sum over signed classes with Picard trace a of
/// size * class polynomial == trace polynomial, both as polynomials and at
/// every q in `sweep`.
AggregationReport aggregation_check(const ClassTable& table, const ClassData& data,
                                    std::span<const OddPrimePower> sweep = {});

/// Number of pairs (coefficient index j, character Lambda^k (x) Lambda^l of
/// the 7-dimensional representation) for which the inner product with the
/// function class -> [q^j] class polynomial is not an integer. Each coefficient
/// function is a virtual character, so the correct naming gives zero.
std::size_t virtual_character_defects(const ClassTable& table, const ClassData& data);

struct LetterResolution {
  bool default_held = true;
  std::map<std::string, std::string> renames;  ///< unsigned provisional -> final
  std::size_t candidates = 0;
  std::size_t passing_aggregation = 0;
  std::size_t passing_integrality = 0;
  std::string method;
  nlohmann::json to_json() const;
  static LetterResolution from_json(const nlohmann::json& j);
};

/// Fixes letters within each element order so that the aggregation identity
/// holds and every coefficient function is a virtual character. Candidates are
/// permutations within groups of equal (order, size); if none survives, a
/// coordinate search over all permutations within each order is tried.
/// Throws VerificationFailure if no consistent naming is found or if distinct
/// survivors would assign different polynomials to some class.
LetterResolution resolve_letter_assignment(ClassTable& table, const ClassData& data);

struct ExistenceExceptions {
  std::vector<std::string> class_exceptions;  ///< signed labels with zero count
  std::vector<int> trace_exceptions;          ///< traces with zero count
};

ExistenceExceptions existence_exceptions(const OddPrimePower& q, const ClassData& data = ClassData::embedded());

/// The published zero set at q, read from the data file.
ExistenceExceptions published_exceptions(const OddPrimePower& q, const ClassData& data = ClassData::embedded());

}  // namespace dp2
