#pragma once

// Brute-force counts of 7-point configurations in general position in the
// projective plane, twisted by a permutation under Frobenius and normalised by
// PGL3(F_q). These independently reproduce class-table rows for classes in
// the image of S7.

#include "dp2/counting.hpp"
#include "dp2/finite_field.hpp"
#include "dp2/polynomial.hpp"
#include "dp2/weyl.hpp"

#include <nlohmann/json.hpp>

#include <array>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace dp2 {

/// Homogeneous coordinates scaled so that the first nonzero entry is 1.
struct ProjectivePoint {
  std::array<FieldElement, 3> x;
  friend bool operator==(const ProjectivePoint&, const ProjectivePoint&) = default;
  friend auto operator<=>(const ProjectivePoint&, const ProjectivePoint&) = default;
};

using Matrix3 = std::array<std::array<FieldElement, 3>, 3>;

class PlaneGeometry {
 public:
  explicit PlaneGeometry(const FiniteField& field) : F_(field) {}

  const FiniteField& field() const { return F_; }

  /// Throws InvalidInput if all coordinates are zero.
  ProjectivePoint normalize(FieldElement a, FieldElement b, FieldElement c) const;
  /// Coordinatewise x -> x^(p^times).
  ProjectivePoint frobenius(const ProjectivePoint& P, unsigned times) const;
  ProjectivePoint apply(const Matrix3& m, const ProjectivePoint& P) const;

  FieldElement det3(const ProjectivePoint& P, const ProjectivePoint& Q, const ProjectivePoint& R) const;
  bool collinear(const ProjectivePoint& P, const ProjectivePoint& Q, const ProjectivePoint& R) const;
  /// Some conic passes through all six points (6x6 Veronese determinant vanishes).
  bool six_on_conic(std::span<const ProjectivePoint, 6> pts) const;
  /// No six of the seven points lie on a conic.
  bool no_six_on_conic(std::span<const ProjectivePoint, 7> pts) const;
  /// Pairwise distinct, no three collinear, no six on a conic.
  bool in_general_position(std::span<const ProjectivePoint, 7> pts) const;

  /// Points of P^2 over the subfield of degree d, in lexicographic order of
  /// the coordinates' polynomial-basis indices.
  std::vector<ProjectivePoint> points(unsigned d) const;

 private:
  const FiniteField& F_;
};

/// |PGL3(F_q)| = q^3 (q^3 - 1)(q^2 - 1).
BigInt pgl3_order(std::int64_t q);

/// A partition of 7, stored in decreasing order.
class CycleType {
 public:
  /// Throws InvalidInput unless the parts are positive and sum to 7.
  explicit CycleType(std::vector<int> parts);
  /// Parses "7", "6,1", "2,2,2,1".
  static CycleType parse(std::string_view text);
  static CycleType identity() { return CycleType({1, 1, 1, 1, 1, 1, 1}); }

  const std::vector<int>& parts() const { return parts_; }
  /// Representative permutation: cycles on consecutive indices, longest first;
  /// 1-based images, suitable for embed_permutation.
  std::array<int, 7> representative() const;
  int lcm() const;
  std::string to_string() const;

 private:
  std::vector<int> parts_;
};

struct OracleOptions {
  /// Upper bound on the raw search space (product of point counts).
  std::uint64_t budget = 20'000'000;
  unsigned jobs = 1;
  /// Largest big field the twisted search will construct.
  std::uint64_t max_field_size = FiniteField::kDefaultMaxSize;
};

/// Product over cycles of |P^2(F_{q^l})|.
BigInt feasibility(const CycleType& cycle_type, std::int64_t q);

struct OracleResult {
  std::string method;  ///< "frame" or "twisted"
  CycleType cycle_type = CycleType::identity();
  std::int64_t q = 0;
  std::string class_name;
  BigInt raw_count;  ///< frame-normalised tuples for "frame", all twisted tuples for "twisted"
  BigInt pgl3_order;
  BigInt orbit_count;
  BigInt expected;
  bool match = false;
  double wall_time = 0;

  nlohmann::json to_json() const;
};

/// PGL3(F_q)-orbits of ordered general-position 7-tuples over F_q, with the
/// first four points fixed to the standard frame. Compared against class 1A.
OracleResult count_identity(const OddPrimePower& q, const OracleOptions& options = {},
                            const ClassData& data = ClassData::embedded());

/// Configurations with Frobenius(P_i) = P_sigma(i) for a representative sigma
/// of the cycle type, divided by |PGL3(F_q)|. The class is identified from the
/// permutation embedding using `classes` (and `group` for shared fingerprints).
/// Throws BudgetExceeded when the search space exceeds the budget, and
/// InternalError if the raw count is not divisible by |PGL3(F_q)|.
OracleResult count_twisted(const CycleType& cycle_type, const OddPrimePower& q, const ClassTable& classes,
                           const WeylGroup* group = nullptr, const OracleOptions& options = {},
                           const ClassData& data = ClassData::embedded());

}  // namespace dp2
