#include "dp2/finite_field.hpp"

#include "dp2/errors.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace dp2 {
namespace {

using Poly = std::vector<std::uint32_t>;  // over F_p, constant term first

// Remainder of a modulo monic m, over F_p.
Poly poly_mod(Poly a, const Poly& m, std::uint32_t p) {
  const std::size_t dm = m.size() - 1;
  while (a.size() > dm) {
    const std::uint32_t lead = a.back();
    const std::size_t shift = a.size() - 1 - dm;
    if (lead != 0)
      for (std::size_t i = 0; i <= dm; ++i) a[shift + i] = (a[shift + i] + (p - lead) * m[i]) % p;
    a.pop_back();
  }
  return a;
}

bool divides(const Poly& d, const Poly& f, std::uint32_t p) {
  Poly r = poly_mod(f, d, p);
  return std::all_of(r.begin(), r.end(), [](std::uint32_t c) { return c == 0; });
}

// Monic polynomial of degree `deg` whose lower coefficients are the base-p
// digits of `code`, constant term being the most significant digit so that
// increasing `code` walks the lexicographic order.
Poly monic_from_code(std::uint64_t code, unsigned deg, std::uint32_t p) {
  Poly f(deg + 1, 0);
  f[deg] = 1;
  for (unsigned i = deg; i-- > 0;) {
    f[i] = static_cast<std::uint32_t>(code % p);
    code /= p;
  }
  return f;
}

std::uint64_t ipow(std::uint64_t b, unsigned e) {
  std::uint64_t r = 1;
  while (e--) r *= b;
  return r;
}

bool irreducible(const Poly& f, std::uint32_t p) {
  const unsigned k = static_cast<unsigned>(f.size() - 1);
  for (unsigned d = 1; 2 * d <= k; ++d)
    for (std::uint64_t code = 0; code < ipow(p, d); ++code)
      if (divides(monic_from_code(code, d, p), f, p)) return false;
  return true;
}

std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) {
      out.push_back(d);
      while (n % d == 0) n /= d;
    }
  if (n > 1) out.push_back(n);
  return out;
}

}  // namespace

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

FiniteField FiniteField::make(std::uint32_t p, unsigned k, std::uint64_t max_size) {
  if (p == 2) throw InvalidInput("characteristic 2 is not supported");
  if (!is_prime(p)) throw InvalidInput("field characteristic " + std::to_string(p) + " is not prime");
  if (k == 0) throw InvalidInput("field degree must be at least 1");
  const std::uint64_t n64 = ipow(p, k);
  if (k > 40 || n64 > max_size || n64 > (std::uint64_t{1} << 31))
    throw InvalidInput("field of size " + std::to_string(p) + "^" + std::to_string(k) + " exceeds the configured limit");

  FiniteField F;
  F.p_ = p;
  F.k_ = k;
  F.n_ = static_cast<std::uint32_t>(n64);
  F.order_ = F.n_ - 1;
  F.half_ = F.order_ / 2;

  for (std::uint64_t code = 0;; ++code) {
    Poly f = monic_from_code(code, k, p);
    if (irreducible(f, p)) {
      F.modulus_ = f;
      break;
    }
  }

  // Multiply polynomial-basis indices modulo the modulus.
  auto to_poly = [&](std::uint32_t idx) {
    Poly a(k, 0);
    for (unsigned i = 0; i < k; ++i) {
      a[i] = idx % p;
      idx /= p;
    }
    return a;
  };
  auto to_index = [&](const Poly& a) {
    std::uint32_t idx = 0;
    for (unsigned i = k; i-- > 0;) idx = idx * p + (i < a.size() ? a[i] : 0);
    return idx;
  };
  auto mul_index = [&](std::uint32_t x, std::uint32_t y) {
    Poly a = to_poly(x), b = to_poly(y), c(2 * k - 1, 0);
    for (unsigned i = 0; i < k; ++i)
      for (unsigned j = 0; j < k; ++j) c[i + j] = static_cast<std::uint32_t>((c[i + j] + std::uint64_t{a[i]} * b[j]) % p);
    return to_index(poly_mod(c, F.modulus_, p));
  };
  auto pow_index = [&](std::uint32_t x, std::uint64_t e) {
    std::uint32_t r = 1;
    while (e) {
      if (e & 1) r = mul_index(r, x);
      x = mul_index(x, x);
      e >>= 1;
    }
    return r;
  };

  const auto factors = prime_factors(F.order_);
  std::uint32_t g = 0;
  for (std::uint32_t cand = 1; cand < F.n_; ++cand) {
    if (F.order_ == 1 || std::all_of(factors.begin(), factors.end(),
                                     [&](std::uint64_t r) { return pow_index(cand, F.order_ / r) != 1; })) {
      g = cand;
      break;
    }
  }
  if (g == 0) throw InternalError("no primitive element: modulus is not irreducible");

  F.exp_index_.assign(F.n_, 0);
  F.log_code_.assign(F.n_, 0);
  std::uint32_t cur = 1;
  for (std::uint32_t i = 0; i < F.order_; ++i) {
    if (i > 0 && cur == 1) throw InternalError("generator order is smaller than the multiplicative group");
    F.exp_index_[i + 1] = cur;
    F.log_code_[cur] = i + 1;
    cur = mul_index(cur, g);
  }
  F.exp_index_[0] = 0;
  F.log_code_[0] = 0;

  // 1 + g^d: add one to the constant digit.
  F.zech_.assign(F.order_, 0);
  for (std::uint32_t d = 0; d < F.order_; ++d) {
    std::uint32_t idx = F.exp_index_[d + 1];
    std::uint32_t c0 = idx % p;
    std::uint32_t sum = idx - c0 + (c0 + 1) % p;
    F.zech_[d] = F.log_code_[sum];
  }

  F.frob_mult_.resize(k);
  std::uint64_t m = 1;
  for (unsigned t = 0; t < k; ++t) {
    F.frob_mult_[t] = F.order_ == 0 ? 0 : m % F.order_;
    m = (m * p) % std::max<std::uint32_t>(F.order_, 1);
  }
  return F;
}

std::vector<std::uint32_t> FiniteField::coeffs(FieldElement x) const {
  std::vector<std::uint32_t> c(k_);
  std::uint32_t idx = index(x);
  for (unsigned i = 0; i < k_; ++i) {
    c[i] = idx % p_;
    idx /= p_;
  }
  return c;
}

FieldElement FiniteField::from_coeffs(std::span<const std::uint32_t> c) const {
  if (c.size() > k_) throw InvalidInput("too many coefficients for field degree");
  std::uint32_t idx = 0;
  for (std::size_t i = c.size(); i-- > 0;) idx = idx * p_ + c[i] % p_;
  return from_index(idx);
}

FieldElement FiniteField::from_int(std::int64_t v) const {
  std::int64_t r = v % static_cast<std::int64_t>(p_);
  if (r < 0) r += p_;
  return from_index(static_cast<std::uint32_t>(r));
}

FieldElement FiniteField::inv(FieldElement a) const {
  if (a.code == 0) throw std::domain_error("inverse of zero");
  if (a.code == 1) return a;
  return {order_ - (a.code - 1) + 1};
}

FieldElement FiniteField::pow(FieldElement a, std::uint64_t e) const {
  if (e == 0) return one();
  if (a.code == 0) return a;
  return {static_cast<std::uint32_t>((std::uint64_t{a.code - 1} * (e % order_)) % order_) + 1};
}

bool FiniteField::in_subfield(FieldElement x, unsigned d) const {
  if (d == 0 || k_ % d != 0) throw InvalidInput("subfield degree " + std::to_string(d) + " does not divide " + std::to_string(k_));
  return frobenius(x, d) == x;
}

std::vector<FieldElement> FiniteField::subfield_elements(unsigned d) const {
  if (d == 0 || k_ % d != 0) throw InvalidInput("subfield degree " + std::to_string(d) + " does not divide " + std::to_string(k_));
  std::vector<FieldElement> out;
  for (std::uint32_t i = 0; i < n_; ++i) {
    FieldElement x = from_index(i);
    if (frobenius(x, d) == x) out.push_back(x);
  }
  return out;
}

}  // namespace dp2
