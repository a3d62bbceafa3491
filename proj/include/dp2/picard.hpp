#pragma once

// Picard lattice of a degree-2 Del Pezzo surface: Z L + Z E1 + ... + Z E7
// with the odd unimodular form diag(1, -1, ..., -1).

#include <array>
#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace dp2 {

inline constexpr int kPicRank = 8;
inline constexpr int kNumRoots = 126;
inline constexpr int kNumPositiveRoots = 63;

/// Integer class in the basis L, E1..E7. Arithmetic is checked: any int64
/// overflow throws std::overflow_error.
class PicVector {
 public:
  using Coeffs = std::array<std::int64_t, kPicRank>;

  constexpr PicVector() = default;
  constexpr explicit PicVector(const Coeffs& c) : c_(c) {}

  static PicVector line();
  /// Exceptional class E_i, i in 1..7.
  static PicVector exceptional(int i);

  std::int64_t operator[](int i) const { return c_[static_cast<std::size_t>(i)]; }
  std::int64_t& operator[](int i) { return c_[static_cast<std::size_t>(i)]; }
  const Coeffs& coeffs() const { return c_; }

  PicVector& operator+=(const PicVector& rhs);
  PicVector& operator-=(const PicVector& rhs);
  PicVector operator-() const;
  friend PicVector operator+(PicVector a, const PicVector& b) { return a += b; }
  friend PicVector operator-(PicVector a, const PicVector& b) { return a -= b; }
  friend PicVector operator*(std::int64_t s, const PicVector& v);

  friend bool operator==(const PicVector&, const PicVector&) = default;
  friend auto operator<=>(const PicVector&, const PicVector&) = default;

  /// e.g. "2L - E1 - E2 - E3 - E4 - E5 - E6"
  std::string to_string() const;

 private:
  Coeffs c_{};
};

/// Intersection pairing: L.L = 1, Ei.Ei = -1, distinct basis vectors orthogonal.
std::int64_t inner(const PicVector& u, const PicVector& v);

/// K = -3L + E1 + ... + E7.
PicVector canonical_class();

/// The 63 positive roots in family order: Ei - Ej (i<j), L - Ei - Ej - Ek
/// (i<j<k), 2L - E1 - ... - E7 + Ei.
const std::vector<PicVector>& positive_roots();

/// All 126 roots: the positive roots followed by their negatives in the same
/// order, so roots()[i + 63] == -roots()[i].
const std::vector<PicVector>& roots();

/// Index of `v` in roots(), or -1 if `v` is not a root.
int root_index(const PicVector& v);

/// Simple roots E1-E2, ..., E6-E7, L-E1-E2-E3.
const std::array<PicVector, 7>& simple_roots();

/// Reflection in a (-2)-class: v + (v.r) r. Throws InvalidInput unless r.r == -2.
PicVector reflect(const PicVector& r, const PicVector& v);

}  // namespace dp2
