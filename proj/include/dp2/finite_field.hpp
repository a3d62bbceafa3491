#pragma once

// F_{p^k} for odd p, with elements stored as Zech logarithms: code 0 is zero
// and code i + 1 is g^i for a fixed primitive element g. Multiplication and
// Frobenius are index arithmetic; addition is one table lookup.

#include <compare>
#include <cstdint>
#include <span>
#include <vector>

namespace dp2 {

struct FieldElement {
  std::uint32_t code = 0;
  friend constexpr bool operator==(FieldElement, FieldElement) = default;
  friend constexpr auto operator<=>(FieldElement, FieldElement) = default;
};

class FiniteField {
 public:
  static constexpr std::uint64_t kDefaultMaxSize = std::uint64_t{1} << 22;

  /// Throws InvalidInput if p is not an odd prime, k == 0 or p^k > max_size.
  /// The modulus is the lexicographically smallest monic irreducible of degree
  /// k, comparing coefficients from the constant term upwards.
  static FiniteField make(std::uint32_t p, unsigned k, std::uint64_t max_size = kDefaultMaxSize);

  std::uint32_t characteristic() const { return p_; }
  unsigned degree() const { return k_; }
  std::uint32_t size() const { return n_; }
  /// Monic modulus, constant term first (length k + 1).
  const std::vector<std::uint32_t>& modulus() const { return modulus_; }

  FieldElement zero() const { return {0}; }
  FieldElement one() const { return {1}; }
  /// Primitive element used for the logarithm tables.
  FieldElement generator() const { return {2}; }

  /// Polynomial-basis index c0 + c1 p + ... + c_{k-1} p^{k-1}.
  std::uint32_t index(FieldElement x) const { return exp_index_[x.code]; }
  FieldElement from_index(std::uint32_t i) const { return {log_code_[i]}; }
  std::vector<std::uint32_t> coeffs(FieldElement x) const;
  FieldElement from_coeffs(std::span<const std::uint32_t> c) const;
  FieldElement from_int(std::int64_t v) const;

  FieldElement add(FieldElement a, FieldElement b) const {
    if (a.code == 0) return b;
    if (b.code == 0) return a;
    std::uint32_t d = b.code >= a.code ? b.code - a.code : b.code + order_ - a.code;
    std::uint32_t z = zech_[d];
    if (z == 0) return {0};
    std::uint32_t c = a.code + z - 1;
    return {c > order_ ? c - order_ : c};
  }
  FieldElement neg(FieldElement a) const {
    if (a.code == 0) return a;
    std::uint32_t c = a.code + half_;
    return {c > order_ ? c - order_ : c};
  }
  FieldElement sub(FieldElement a, FieldElement b) const { return add(a, neg(b)); }
  FieldElement mul(FieldElement a, FieldElement b) const {
    if (a.code == 0 || b.code == 0) return {0};
    std::uint32_t c = a.code + b.code - 1;
    return {c > order_ ? c - order_ : c};
  }
  /// Throws std::domain_error on zero.
  FieldElement inv(FieldElement a) const;
  FieldElement div(FieldElement a, FieldElement b) const { return mul(a, inv(b)); }
  FieldElement pow(FieldElement a, std::uint64_t e) const;

  /// x^(p^times).
  FieldElement frobenius(FieldElement x, unsigned times = 1) const {
    if (x.code == 0) return x;
    return {static_cast<std::uint32_t>((std::uint64_t{x.code - 1} * frob_mult_[times % k_]) % order_) + 1};
  }

  /// True iff x lies in the subfield of size p^d. Throws InvalidInput unless d | k.
  bool in_subfield(FieldElement x, unsigned d) const;
  /// Elements of the subfield of size p^d, ordered by polynomial-basis index.
  std::vector<FieldElement> subfield_elements(unsigned d) const;
  /// All elements ordered by polynomial-basis index.
  std::vector<FieldElement> elements() const { return subfield_elements(k_); }

 private:
  FiniteField() = default;

  std::uint32_t p_ = 0;
  unsigned k_ = 0;
  std::uint32_t n_ = 0;      // p^k
  std::uint32_t order_ = 0;  // n - 1
  std::uint32_t half_ = 0;   // log of -1
  std::vector<std::uint32_t> modulus_;
  std::vector<std::uint32_t> exp_index_;  // code -> polynomial index
  std::vector<std::uint32_t> log_code_;   // polynomial index -> code
  std::vector<std::uint32_t> zech_;       // zech_[d] = code of 1 + g^d
  std::vector<std::uint64_t> frob_mult_;  // p^t mod (n - 1)
};

bool is_prime(std::uint64_t n);

}  // namespace dp2
