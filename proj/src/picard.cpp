#include "dp2/picard.hpp"

#include "dp2/errors.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>

namespace dp2 {
namespace {

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("PicVector coefficient overflow");
  return r;
}

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("PicVector coefficient overflow");
  return r;
}

std::vector<PicVector> make_positive_roots() {
  std::vector<PicVector> out;
  out.reserve(kNumPositiveRoots);
  const PicVector L = PicVector::line();
  auto E = [](int i) { return PicVector::exceptional(i); };
  for (int i = 1; i <= 7; ++i)
    for (int j = i + 1; j <= 7; ++j) out.push_back(E(i) - E(j));
  for (int i = 1; i <= 7; ++i)
    for (int j = i + 1; j <= 7; ++j)
      for (int k = j + 1; k <= 7; ++k) out.push_back(L - E(i) - E(j) - E(k));
  PicVector all = 2 * L;
  for (int i = 1; i <= 7; ++i) all -= E(i);
  for (int i = 1; i <= 7; ++i) out.push_back(all + E(i));
  return out;
}

}  // namespace

PicVector PicVector::line() {
  PicVector v;
  v.c_[0] = 1;
  return v;
}

PicVector PicVector::exceptional(int i) {
  if (i < 1 || i > 7) throw InvalidInput("exceptional class index must be in 1..7");
  PicVector v;
  v.c_[static_cast<std::size_t>(i)] = 1;
  return v;
}

PicVector& PicVector::operator+=(const PicVector& rhs) {
  for (std::size_t i = 0; i < c_.size(); ++i) c_[i] = checked_add(c_[i], rhs.c_[i]);
  return *this;
}

PicVector& PicVector::operator-=(const PicVector& rhs) {
  for (std::size_t i = 0; i < c_.size(); ++i) c_[i] = checked_add(c_[i], checked_mul(-1, rhs.c_[i]));
  return *this;
}

PicVector PicVector::operator-() const { return -1 * *this; }

PicVector operator*(std::int64_t s, const PicVector& v) {
  PicVector out;
  for (int i = 0; i < kPicRank; ++i) out[i] = checked_mul(s, v[i]);
  return out;
}

std::string PicVector::to_string() const {
  std::ostringstream os;
  bool first = true;
  for (int i = 0; i < kPicRank; ++i) {
    std::int64_t c = c_[static_cast<std::size_t>(i)];
    if (c == 0) continue;
    if (first) {
      if (c < 0) os << '-';
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    std::int64_t mag = c < 0 ? -c : c;
    if (mag != 1) os << mag;
    if (i == 0)
      os << 'L';
    else
      os << 'E' << i;
  }
  return first ? "0" : os.str();
}

std::int64_t inner(const PicVector& u, const PicVector& v) {
  std::int64_t acc = checked_mul(u[0], v[0]);
  for (int i = 1; i < kPicRank; ++i) acc = checked_add(acc, checked_mul(-u[i], v[i]));
  return acc;
}

PicVector canonical_class() { return PicVector({-3, 1, 1, 1, 1, 1, 1, 1}); }

const std::vector<PicVector>& positive_roots() {
  static const std::vector<PicVector> pos = make_positive_roots();
  return pos;
}

const std::vector<PicVector>& roots() {
  static const std::vector<PicVector> all = [] {
    std::vector<PicVector> out = positive_roots();
    for (int i = 0; i < kNumPositiveRoots; ++i) out.push_back(-out[static_cast<std::size_t>(i)]);
    return out;
  }();
  return all;
}

int root_index(const PicVector& v) {
  static const std::map<PicVector, int> index = [] {
    std::map<PicVector, int> m;
    const auto& r = roots();
    for (int i = 0; i < kNumRoots; ++i) m.emplace(r[static_cast<std::size_t>(i)], i);
    return m;
  }();
  auto it = index.find(v);
  return it == index.end() ? -1 : it->second;
}

const std::array<PicVector, 7>& simple_roots() {
  static const std::array<PicVector, 7> simple = [] {
    std::array<PicVector, 7> s;
    for (int i = 1; i <= 6; ++i) s[static_cast<std::size_t>(i - 1)] = PicVector::exceptional(i) - PicVector::exceptional(i + 1);
    s[6] = PicVector::line() - PicVector::exceptional(1) - PicVector::exceptional(2) - PicVector::exceptional(3);
    return s;
  }();
  return simple;
}

PicVector reflect(const PicVector& r, const PicVector& v) {
  if (inner(r, r) != -2) throw InvalidInput("reflect: " + r.to_string() + " is not a (-2)-class");
  return v + inner(v, r) * r;
}

}  // namespace dp2
