#pragma once

// W(E7) realised as the group of isometries of the Picard lattice fixing K.
//
// Elements are stored two ways: as 8x8 integer matrices (WeylElement) and,
// inside the enumerated group, as permutations of the 126 roots. The images
// of the seven simple roots determine an element uniquely, which gives an
// exact 49-bit key for deduplication.

#include "dp2/picard.hpp"
#include "dp2/polynomial.hpp"

#include <nlohmann/json.hpp>

#include <array>
#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

namespace dp2 {

using Matrix8 = std::array<std::array<std::int64_t, kPicRank>, kPicRank>;
using RootPermutation = std::array<std::uint8_t, kNumRoots>;

class WeylElement {
 public:
  /// Identity.
  WeylElement();
  explicit WeylElement(const Matrix8& m) : m_(m) {}

  static WeylElement identity() { return {}; }
  /// The central element: -1 on the orthogonal complement of K, fixes K.
  static WeylElement geiser();
  /// Reflection in a root; throws InvalidInput if r.r != -2.
  static WeylElement reflection(const PicVector& r);

  const Matrix8& matrix() const { return m_; }
  PicVector operator()(const PicVector& v) const;

  friend WeylElement operator*(const WeylElement& a, const WeylElement& b);
  friend bool operator==(const WeylElement&, const WeylElement&) = default;

  /// Inverse of an isometry of the form: J M^T J.
  WeylElement inverse() const;

  std::int64_t trace() const;
  std::int64_t determinant() const;
  /// Characteristic polynomial on Pic (degree 8).
  IntPolynomial char_poly() const;
  /// Characteristic polynomial on K-perp (degree 7): char_poly() / (x - 1).
  IntPolynomial char_poly_std() const;

  bool preserves_form() const;
  bool fixes_canonical() const;
  /// Action on roots(). Throws InvalidInput if the matrix does not permute the roots.
  RootPermutation root_permutation() const;
  /// Multiplicative order, computed from the root permutation.
  int order() const;

 private:
  Matrix8 m_;
};

/// Reflections in the simple roots, in simple_roots() order.
std::array<WeylElement, 7> simple_reflections();

/// Fixes L and sends Ei to E_{sigma(i)}; sigma is given 1-based as
/// sigma[i-1] = sigma(i). Throws InvalidInput unless sigma is a bijection of 1..7.
WeylElement embed_permutation(std::span<const int> sigma);

/// W(E7) = {+-1} x (determinant-one subgroup). Returns (g, s) with w = s * g on
/// K-perp and det(g) = 1.
std::pair<WeylElement, int> sign_decompose(const WeylElement& w);

/// Trace on the Picard lattice.
std::int64_t trace_pic(const WeylElement& w);

/// One conjugacy class of W(E7).
struct ConjugacyClass {
  std::string name;  ///< signed label, e.g. "7A" or "-7A"
  WeylElement representative;
  std::uint64_t size = 0;
  int element_order = 0;  ///< order of the representative itself
  int trace_std = 0;      ///< trace on K-perp
  IntPolynomial char_poly_std;
  int sign = 1;      ///< determinant on K-perp
  int partner = -1;  ///< index of the class of -representative

  int pic_trace() const { return 1 + trace_std; }
  /// Label without the leading minus sign.
  std::string unsigned_name() const;
};

class WeylGroup;

/// The 60 classes with their invariants. Serialisable as the class report.
class ClassTable {
 public:
  ClassTable() = default;
  explicit ClassTable(std::vector<ConjugacyClass> classes);

  const std::vector<ConjugacyClass>& classes() const { return classes_; }
  std::size_t size() const { return classes_.size(); }
  const ConjugacyClass& operator[](std::size_t i) const { return classes_[i]; }

  /// Index of the class with the given signed label; throws InvalidInput.
  std::size_t index_of(std::string_view signed_label) const;
  const ConjugacyClass& by_name(std::string_view signed_label) const { return classes_[index_of(signed_label)]; }

  /// Names determinant-one classes "<order><letter>" with letters assigned by
  /// ascending class size within each order; the others become "-X" where X
  /// is the name of the partner.
  void assign_default_names();
  /// Renames determinant-one classes (unsigned old -> unsigned new) and
  /// propagates to partners. The map must be a permutation of existing names.
  void rename(const std::map<std::string, std::string>& renames);

  /// Signed label of the class containing `w`. Uses the invariant fingerprint
  /// (sign, order, characteristic polynomial, root cycle type) and falls back to explicit
  /// membership in `group` when the fingerprint is shared. Throws InvalidInput
  /// if `w` is not an element of W(E7), and VerificationFailure if the
  /// fingerprint is ambiguous and no group is available.
  std::string identify(const WeylElement& w, const WeylGroup* group = nullptr) const;

  /// Class report: name, order, size, traces, char_poly_std and a representative.
  nlohmann::json to_json() const;
  static ClassTable from_json(const nlohmann::json& j);

 private:
  std::vector<ConjugacyClass> classes_;
};

struct EnumerationOptions {
  /// Upper bound on the deduplication store; exceeding it throws BudgetExceeded.
  std::size_t memory_budget_bytes = std::size_t{2} << 30;
};

/// The enumerated group. Construction runs a breadth-first closure over the
/// simple reflections; conjugacy classes are computed on first request.
class WeylGroup {
 public:
  static constexpr std::uint64_t kExpectedOrder = 2903040;

  explicit WeylGroup(const EnumerationOptions& options = {});

  std::size_t size() const { return perms_.size(); }
  const RootPermutation& permutation(std::size_t index) const { return perms_[index]; }
  WeylElement element(std::size_t index) const;
  /// Index of `w` in the enumeration; nullopt if `w` is not a lattice
  /// automorphism fixing K that permutes the roots.
  std::optional<std::size_t> find(const WeylElement& w) const;

  /// Number of elements reached by an even number of reflections.
  std::size_t even_length_count() const;

  const ClassTable& class_table() const;
  /// Class index of the element at `index` in the enumeration.
  int class_of(std::size_t index) const;

  /// Key of an element: images of the simple roots packed 7 bits each.
  static std::uint64_t key_of(const RootPermutation& p);

 private:
  void compute_classes() const;

  std::vector<RootPermutation> perms_;
  std::unordered_map<std::uint64_t, std::uint32_t> index_;
  std::vector<std::uint8_t> parity_;

  mutable std::once_flag classes_once_;
  mutable std::vector<std::uint8_t> class_of_;
  mutable ClassTable table_;
};

/// Matrix of the element determined by a root permutation.
WeylElement element_from_permutation(const RootPermutation& p);

/// FNV-1a hash of the generator matrices, used to key cached class reports.
std::string generator_hash();

}  // namespace dp2
