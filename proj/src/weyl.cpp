#include "dp2/weyl.hpp"

#include "dp2/errors.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>
#include <tuple>

namespace dp2 {
namespace {

using boost::multiprecision::cpp_rational;

constexpr std::int64_t kJ[kPicRank] = {1, -1, -1, -1, -1, -1, -1, -1};

Matrix8 identity_matrix() {
  Matrix8 m{};
  for (int i = 0; i < kPicRank; ++i) m[i][i] = 1;
  return m;
}

std::array<int, 7> simple_root_indices() {
  std::array<int, 7> idx{};
  for (std::size_t i = 0; i < 7; ++i) {
    idx[i] = root_index(simple_roots()[i]);
    if (idx[i] < 0) throw InternalError("simple root missing from root list");
  }
  return idx;
}

const std::array<int, 7>& simple_idx() {
  static const std::array<int, 7> idx = simple_root_indices();
  return idx;
}

// 2 * B^{-1}, where B has columns K, alpha_1..alpha_7. The sublattice spanned
// by K and the roots has index 2 in Pic, so this is integral.
Matrix8 twice_basis_inverse() {
  std::array<std::array<cpp_rational, 2 * kPicRank>, kPicRank> aug;
  const PicVector K = canonical_class();
  for (int r = 0; r < kPicRank; ++r) {
    aug[r][0] = K[r];
    for (int c = 0; c < 7; ++c) aug[r][c + 1] = simple_roots()[static_cast<std::size_t>(c)][r];
    for (int c = 0; c < kPicRank; ++c) aug[r][kPicRank + c] = (r == c) ? 1 : 0;
  }
  for (int col = 0; col < kPicRank; ++col) {
    int pivot = col;
    while (pivot < kPicRank && aug[pivot][col] == 0) ++pivot;
    if (pivot == kPicRank) throw InternalError("K and simple roots are not a rational basis");
    std::swap(aug[col], aug[pivot]);
    cpp_rational inv = 1 / aug[col][col];
    for (auto& x : aug[col]) x *= inv;
    for (int r = 0; r < kPicRank; ++r) {
      if (r == col || aug[r][col] == 0) continue;
      cpp_rational f = aug[r][col];
      for (int c = 0; c < 2 * kPicRank; ++c) aug[r][c] -= f * aug[col][c];
    }
  }
  Matrix8 out{};
  for (int r = 0; r < kPicRank; ++r)
    for (int c = 0; c < kPicRank; ++c) {
      cpp_rational v = 2 * aug[r][kPicRank + c];
      if (denominator(v) != 1) throw InternalError("2 B^-1 is not integral");
      out[r][c] = static_cast<std::int64_t>(numerator(v));
    }
  return out;
}

int lcm_of_cycles(const RootPermutation& p) {
  std::array<bool, kNumRoots> seen{};
  int result = 1;
  for (int i = 0; i < kNumRoots; ++i) {
    if (seen[i]) continue;
    int len = 0;
    for (int j = i; !seen[j]; j = p[j]) {
      seen[j] = true;
      ++len;
    }
    result = std::lcm(result, len);
  }
  return result;
}

std::vector<int> root_cycle_type(const RootPermutation& p) {
  std::array<bool, kNumRoots> seen{};
  std::vector<int> lengths;
  for (int i = 0; i < kNumRoots; ++i) {
    if (seen[i]) continue;
    int len = 0;
    for (int j = i; !seen[j]; j = p[j]) {
      seen[j] = true;
      ++len;
    }
    lengths.push_back(len);
  }
  std::sort(lengths.begin(), lengths.end());
  return lengths;
}

RootPermutation compose(const RootPermutation& a, const RootPermutation& b) {
  RootPermutation r;
  for (int i = 0; i < kNumRoots; ++i) r[i] = a[b[i]];
  return r;
}

std::string letter_name(int order, int letter) {
  return std::to_string(order) + static_cast<char>('A' + letter);
}

}  // namespace

// ---------------------------------------------------------------------------
// WeylElement

WeylElement::WeylElement() : m_(identity_matrix()) {}

WeylElement WeylElement::geiser() {
  // v -> -v + (v.K) K
  const PicVector K = canonical_class();
  Matrix8 m{};
  for (int i = 0; i < kPicRank; ++i)
    for (int j = 0; j < kPicRank; ++j) m[i][j] = (i == j ? -1 : 0) + K[i] * kJ[j] * K[j];
  return WeylElement(m);
}

WeylElement WeylElement::reflection(const PicVector& r) {
  if (inner(r, r) != -2) throw InvalidInput("reflection: " + r.to_string() + " is not a root");
  Matrix8 m{};
  for (int j = 0; j < kPicRank; ++j) {
    PicVector e;
    e[j] = 1;
    PicVector img = reflect(r, e);
    for (int i = 0; i < kPicRank; ++i) m[i][j] = img[i];
  }
  return WeylElement(m);
}

PicVector WeylElement::operator()(const PicVector& v) const {
  PicVector out;
  for (int i = 0; i < kPicRank; ++i) {
    std::int64_t acc = 0;
    for (int j = 0; j < kPicRank; ++j) acc += m_[i][j] * v[j];
    out[i] = acc;
  }
  return out;
}

WeylElement operator*(const WeylElement& a, const WeylElement& b) {
  Matrix8 m{};
  for (int i = 0; i < kPicRank; ++i)
    for (int k = 0; k < kPicRank; ++k) {
      const std::int64_t aik = a.m_[i][k];
      if (aik == 0) continue;
      for (int j = 0; j < kPicRank; ++j) m[i][j] += aik * b.m_[k][j];
    }
  return WeylElement(m);
}

WeylElement WeylElement::inverse() const {
  Matrix8 m{};
  for (int i = 0; i < kPicRank; ++i)
    for (int j = 0; j < kPicRank; ++j) m[i][j] = kJ[i] * m_[j][i] * kJ[j];
  return WeylElement(m);
}

std::int64_t WeylElement::trace() const {
  std::int64_t t = 0;
  for (int i = 0; i < kPicRank; ++i) t += m_[i][i];
  return t;
}

IntPolynomial WeylElement::char_poly() const {
  // Faddeev-LeVerrier: exact, every division below is exact.
  constexpr int n = kPicRank;
  std::array<std::array<BigInt, n>, n> A, Mk{};
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) A[i][j] = m_[i][j];
  std::vector<BigInt> c(n + 1);
  c[n] = 1;
  for (int k = 1; k <= n; ++k) {
    std::array<std::array<BigInt, n>, n> next{};
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        BigInt acc = 0;
        for (int l = 0; l < n; ++l) acc += A[i][l] * Mk[l][j];
        next[i][j] = acc + (i == j ? c[n - k + 1] : BigInt(0));
      }
    Mk = next;
    BigInt tr = 0;
    for (int i = 0; i < n; ++i)
      for (int l = 0; l < n; ++l) tr += A[i][l] * Mk[l][i];
    if (tr % k != 0) throw InternalError("Faddeev-LeVerrier division not exact");
    c[n - k] = -tr / k;
  }
  return IntPolynomial(std::move(c));
}

std::int64_t WeylElement::determinant() const {
  // char_poly(0) = det(-A) = det(A) for even rank.
  return static_cast<std::int64_t>(char_poly().coeff(0));
}

IntPolynomial WeylElement::char_poly_std() const {
  // Synthetic division by (x - 1).
  const IntPolynomial full = char_poly();
  const auto& c = full.coeffs();
  std::vector<BigInt> quotient(c.size() - 1);
  BigInt carry = 0;
  for (std::size_t d = c.size() - 1; d >= 1; --d) {
    carry = c[d] + carry;
    quotient[d - 1] = carry;
  }
  if (c[0] + carry != 0) throw InternalError("element does not fix K: (x-1) does not divide char poly");
  return IntPolynomial(std::move(quotient));
}

bool WeylElement::preserves_form() const {
  for (int a = 0; a < kPicRank; ++a)
    for (int b = a; b < kPicRank; ++b) {
      std::int64_t acc = 0;
      for (int i = 0; i < kPicRank; ++i) acc += kJ[i] * m_[i][a] * m_[i][b];
      if (acc != (a == b ? kJ[a] : 0)) return false;
    }
  return true;
}

bool WeylElement::fixes_canonical() const {
  const PicVector K = canonical_class();
  return (*this)(K) == K;
}

RootPermutation WeylElement::root_permutation() const {
  if (!preserves_form() || !fixes_canonical())
    throw InvalidInput("matrix is not an isometry of the Picard lattice fixing K");
  RootPermutation p{};
  const auto& rs = roots();
  for (int i = 0; i < kNumRoots; ++i) {
    int j = root_index((*this)(rs[static_cast<std::size_t>(i)]));
    if (j < 0) throw InvalidInput("matrix does not permute the roots");
    p[i] = static_cast<std::uint8_t>(j);
  }
  return p;
}

int WeylElement::order() const { return lcm_of_cycles(root_permutation()); }

std::array<WeylElement, 7> simple_reflections() {
  std::array<WeylElement, 7> gens;
  for (std::size_t i = 0; i < 7; ++i) gens[i] = WeylElement::reflection(simple_roots()[i]);
  return gens;
}

WeylElement embed_permutation(std::span<const int> sigma) {
  if (sigma.size() != 7) throw InvalidInput("permutation must have 7 entries");
  std::array<bool, 8> hit{};
  for (int s : sigma) {
    if (s < 1 || s > 7 || hit[s]) throw InvalidInput("not a permutation of 1..7");
    hit[s] = true;
  }
  Matrix8 m{};
  m[0][0] = 1;
  for (int i = 1; i <= 7; ++i) m[sigma[static_cast<std::size_t>(i - 1)]][i] = 1;
  return WeylElement(m);
}

std::pair<WeylElement, int> sign_decompose(const WeylElement& w) {
  const int sign = w.determinant() > 0 ? 1 : -1;
  if (sign == 1) return {w, 1};
  return {WeylElement::geiser() * w, -1};
}

std::int64_t trace_pic(const WeylElement& w) { return w.trace(); }

WeylElement element_from_permutation(const RootPermutation& p) {
  static const Matrix8 binv2 = twice_basis_inverse();
  const PicVector K = canonical_class();
  Matrix8 img{};
  for (int r = 0; r < kPicRank; ++r) img[r][0] = K[r];
  for (int c = 0; c < 7; ++c) {
    const PicVector& v = roots()[p[simple_idx()[static_cast<std::size_t>(c)]]];
    for (int r = 0; r < kPicRank; ++r) img[r][c + 1] = v[r];
  }
  Matrix8 m{};
  for (int i = 0; i < kPicRank; ++i)
    for (int j = 0; j < kPicRank; ++j) {
      std::int64_t acc = 0;
      for (int k = 0; k < kPicRank; ++k) acc += img[i][k] * binv2[k][j];
      if (acc % 2 != 0) throw InternalError("root permutation does not come from a lattice automorphism");
      m[i][j] = acc / 2;
    }
  return WeylElement(m);
}

std::string generator_hash() {
  std::uint64_t h = 1469598103934665603ULL;
  for (const auto& g : simple_reflections())
    for (const auto& row : g.matrix())
      for (std::int64_t v : row) {
        h ^= static_cast<std::uint64_t>(v);
        h *= 1099511628211ULL;
      }
  std::ostringstream os;
  os << std::hex << h;
  return os.str();
}

// ---------------------------------------------------------------------------
// ConjugacyClass / ClassTable

std::string ConjugacyClass::unsigned_name() const {
  return (!name.empty() && name.front() == '-') ? name.substr(1) : name;
}

ClassTable::ClassTable(std::vector<ConjugacyClass> classes) : classes_(std::move(classes)) {}

std::size_t ClassTable::index_of(std::string_view signed_label) const {
  for (std::size_t i = 0; i < classes_.size(); ++i)
    if (classes_[i].name == signed_label) return i;
  throw InvalidInput("unknown conjugacy class label '" + std::string(signed_label) + "'");
}

void ClassTable::assign_default_names() {
  std::map<int, std::vector<std::size_t>> by_order;
  for (std::size_t i = 0; i < classes_.size(); ++i)
    if (classes_[i].sign == 1) by_order[classes_[i].element_order].push_back(i);
  for (auto& [order, members] : by_order) {
    std::sort(members.begin(), members.end(), [&](std::size_t a, std::size_t b) {
      const auto& x = classes_[a];
      const auto& y = classes_[b];
      // Ties in size are broken by trace, then characteristic polynomial; the
      // aggregation check decides whether the resulting letters are right.
      return std::make_tuple(x.size, -x.trace_std, x.char_poly_std.coeffs()) <
             std::make_tuple(y.size, -y.trace_std, y.char_poly_std.coeffs());
    });
    for (std::size_t l = 0; l < members.size(); ++l) classes_[members[l]].name = letter_name(order, static_cast<int>(l));
  }
  for (auto& c : classes_)
    if (c.sign == -1) c.name = "-" + classes_[static_cast<std::size_t>(c.partner)].name;
}

void ClassTable::rename(const std::map<std::string, std::string>& renames) {
  std::set<std::string> from, to;
  for (const auto& [a, b] : renames) {
    from.insert(a);
    to.insert(b);
  }
  if (from != to) throw InvalidInput("rename map is not a permutation of labels");
  for (auto& c : classes_) {
    if (c.sign != 1) continue;
    auto it = renames.find(c.name);
    if (it != renames.end()) c.name = it->second;
  }
  for (auto& c : classes_)
    if (c.sign == -1) c.name = "-" + classes_[static_cast<std::size_t>(c.partner)].name;
}

std::string ClassTable::identify(const WeylElement& w, const WeylGroup* group) const {
  const RootPermutation perm = w.root_permutation();  // throws if not in W(E7)
  const int sign = w.determinant() > 0 ? 1 : -1;
  const int order = lcm_of_cycles(perm);
  const IntPolynomial cp = w.char_poly_std();
  std::vector<std::size_t> candidates;
  for (std::size_t i = 0; i < classes_.size(); ++i) {
    const auto& c = classes_[i];
    if (c.sign == sign && c.element_order == order && c.char_poly_std == cp) candidates.push_back(i);
  }
  if (candidates.size() > 1) {
    // Cycle type on the 126 roots is a finer class invariant.
    const auto shape = root_cycle_type(perm);
    std::erase_if(candidates, [&](std::size_t i) {
      return root_cycle_type(classes_[i].representative.root_permutation()) != shape;
    });
  }
  if (candidates.size() == 1) return classes_[candidates.front()].name;
  if (candidates.empty()) throw InternalError("element matches no conjugacy class");
  if (group == nullptr)
    throw VerificationFailure("class fingerprint is shared by several classes; group enumeration required");
  auto idx = group->find(w);
  if (!idx) throw InvalidInput("element is not in the enumerated group");
  return classes_[static_cast<std::size_t>(group->class_of(*idx))].name;
}

nlohmann::json ClassTable::to_json() const {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& c : classes_) {
    std::vector<std::int64_t> cp;
    for (const auto& x : c.char_poly_std.coeffs()) cp.push_back(static_cast<std::int64_t>(x));
    arr.push_back({{"name", c.name},
                   {"order", c.element_order},
                   {"size", c.size},
                   {"sign", c.sign},
                   {"trace_std", c.trace_std},
                   {"pic_trace", c.pic_trace()},
                   {"char_poly_std", cp},
                   {"partner", classes_[static_cast<std::size_t>(c.partner)].name},
                   {"representative", c.representative.matrix()}});
  }
  return {{"version", 1}, {"generator_hash", generator_hash()}, {"classes", arr}};
}

ClassTable ClassTable::from_json(const nlohmann::json& j) {
  std::vector<ConjugacyClass> out;
  std::map<std::string, int> index;
  for (const auto& item : j.at("classes")) {
    ConjugacyClass c;
    c.name = item.at("name").get<std::string>();
    c.element_order = item.at("order").get<int>();
    c.size = item.at("size").get<std::uint64_t>();
    c.sign = item.at("sign").get<int>();
    c.trace_std = item.at("trace_std").get<int>();
    std::vector<BigInt> cp;
    for (const auto& x : item.at("char_poly_std")) cp.emplace_back(x.get<std::int64_t>());
    c.char_poly_std = IntPolynomial(std::move(cp));
    c.representative = WeylElement(item.at("representative").get<Matrix8>());
    index[c.name] = static_cast<int>(out.size());
    out.push_back(std::move(c));
  }
  std::size_t i = 0;
  for (const auto& item : j.at("classes")) {
    auto it = index.find(item.at("partner").get<std::string>());
    if (it == index.end()) throw DataError("class report: unknown partner label");
    out[i++].partner = it->second;
  }
  return ClassTable(std::move(out));
}

// ---------------------------------------------------------------------------
// WeylGroup

std::uint64_t WeylGroup::key_of(const RootPermutation& p) {
  std::uint64_t key = 0;
  for (std::size_t i = 0; i < 7; ++i) key |= std::uint64_t{p[simple_idx()[i]]} << (7 * i);
  return key;
}

WeylGroup::WeylGroup(const EnumerationOptions& options) {
  std::array<RootPermutation, 7> gens;
  std::array<std::array<std::uint8_t, 7>, 7> gen_simple{};  // s(alpha_i) as a root index
  {
    auto refl = simple_reflections();
    for (std::size_t s = 0; s < 7; ++s) {
      gens[s] = refl[s].root_permutation();
      for (std::size_t i = 0; i < 7; ++i) gen_simple[s][i] = gens[s][simple_idx()[i]];
    }
  }

  // Per-element cost: the permutation, a parity byte, and a hash node.
  constexpr std::size_t kBytesPerElement = sizeof(RootPermutation) + 1 + 48;
  const std::size_t max_elements = options.memory_budget_bytes / kBytesPerElement;

  RootPermutation id;
  std::iota(id.begin(), id.end(), 0);
  const std::size_t reserve = std::min<std::size_t>(kExpectedOrder, max_elements);
  perms_.reserve(reserve);
  parity_.reserve(reserve);
  index_.reserve(reserve);
  perms_.push_back(id);
  parity_.push_back(0);
  index_.emplace(key_of(id), 0);

  for (std::size_t head = 0; head < perms_.size(); ++head) {
    const RootPermutation g = perms_[head];
    const std::uint8_t par = parity_[head];
    for (std::size_t s = 0; s < 7; ++s) {
      std::uint64_t key = 0;
      for (std::size_t i = 0; i < 7; ++i) key |= std::uint64_t{g[gen_simple[s][i]]} << (7 * i);
      if (index_.contains(key)) continue;
      if (perms_.size() >= max_elements)
        throw BudgetExceeded("group enumeration exceeds the memory budget of " +
                             std::to_string(options.memory_budget_bytes) + " bytes");
      index_.emplace(key, static_cast<std::uint32_t>(perms_.size()));
      perms_.push_back(compose(g, gens[s]));
      parity_.push_back(par ^ 1);
    }
  }
}

WeylElement WeylGroup::element(std::size_t index) const { return element_from_permutation(perms_.at(index)); }

std::optional<std::size_t> WeylGroup::find(const WeylElement& w) const {
  RootPermutation p;
  try {
    p = w.root_permutation();
  } catch (const InvalidInput&) {
    return std::nullopt;
  }
  auto it = index_.find(key_of(p));
  if (it == index_.end() || perms_[it->second] != p) return std::nullopt;
  return it->second;
}

std::size_t WeylGroup::even_length_count() const {
  return static_cast<std::size_t>(std::count(parity_.begin(), parity_.end(), std::uint8_t{0}));
}

const ClassTable& WeylGroup::class_table() const {
  std::call_once(classes_once_, [this] { compute_classes(); });
  return table_;
}

int WeylGroup::class_of(std::size_t index) const {
  class_table();
  return class_of_.at(index);
}

void WeylGroup::compute_classes() const {
  constexpr std::uint8_t kUnassigned = 0xff;
  const auto& gens_elems = simple_reflections();
  std::array<RootPermutation, 7> gens;
  for (std::size_t s = 0; s < 7; ++s) gens[s] = gens_elems[s].root_permutation();

  class_of_.assign(perms_.size(), kUnassigned);
  std::vector<ConjugacyClass> classes;
  std::vector<std::uint32_t> queue;
  for (std::size_t start = 0; start < perms_.size(); ++start) {
    if (class_of_[start] != kUnassigned) continue;
    const auto cid = static_cast<std::uint8_t>(classes.size());
    if (cid == kUnassigned) throw InternalError("too many conjugacy classes");
    queue.assign(1, static_cast<std::uint32_t>(start));
    class_of_[start] = cid;
    for (std::size_t head = 0; head < queue.size(); ++head) {
      const RootPermutation& g = perms_[queue[head]];
      for (const auto& s : gens) {
        // s g s^{-1} with s an involution; only the simple-root images are needed.
        std::uint64_t key = 0;
        for (std::size_t i = 0; i < 7; ++i) key |= std::uint64_t{s[g[s[simple_idx()[i]]]]} << (7 * i);
        auto it = index_.find(key);
        if (it == index_.end()) throw InternalError("conjugate escaped the enumerated group");
        if (class_of_[it->second] == kUnassigned) {
          class_of_[it->second] = cid;
          queue.push_back(it->second);
        }
      }
    }
    ConjugacyClass c;
    c.representative = element_from_permutation(perms_[start]);
    c.size = queue.size();
    c.element_order = lcm_of_cycles(perms_[start]);
    c.trace_std = static_cast<int>(c.representative.trace()) - 1;
    c.char_poly_std = c.representative.char_poly_std();
    c.sign = c.representative.determinant() > 0 ? 1 : -1;
    classes.push_back(std::move(c));
  }

  const WeylElement minus_one = WeylElement::geiser();
  for (auto& c : classes) {
    auto idx = find(minus_one * c.representative);
    if (!idx) throw InternalError("-1 times a representative is not in the group");
    c.partner = class_of_[*idx];
  }
  table_ = ClassTable(std::move(classes));
  table_.assign_default_names();
}

}  // namespace dp2
