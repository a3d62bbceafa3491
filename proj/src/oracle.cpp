#include "dp2/oracle.hpp"

#include "dp2/errors.hpp"

#include <algorithm>
#include <chrono>
#include <map>
#include <numeric>
#include <sstream>
#include <thread>

namespace dp2 {

// ---------------------------------------------------------------------------
// PlaneGeometry

ProjectivePoint PlaneGeometry::normalize(FieldElement a, FieldElement b, FieldElement c) const {
  FieldElement lead = a.code != 0 ? a : (b.code != 0 ? b : c);
  if (lead.code == 0) throw InvalidInput("(0:0:0) is not a projective point");
  FieldElement s = F_.inv(lead);
  return {{F_.mul(a, s), F_.mul(b, s), F_.mul(c, s)}};
}

ProjectivePoint PlaneGeometry::frobenius(const ProjectivePoint& P, unsigned times) const {
  // Frobenius fixes 1, so normalisation is preserved.
  return {{F_.frobenius(P.x[0], times), F_.frobenius(P.x[1], times), F_.frobenius(P.x[2], times)}};
}

ProjectivePoint PlaneGeometry::apply(const Matrix3& m, const ProjectivePoint& P) const {
  std::array<FieldElement, 3> out{};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) out[i] = F_.add(out[i], F_.mul(m[i][j], P.x[j]));
  return normalize(out[0], out[1], out[2]);
}

FieldElement PlaneGeometry::det3(const ProjectivePoint& P, const ProjectivePoint& Q, const ProjectivePoint& R) const {
  const auto& a = P.x;
  const auto& b = Q.x;
  const auto& c = R.x;
  FieldElement t0 = F_.mul(a[0], F_.sub(F_.mul(b[1], c[2]), F_.mul(b[2], c[1])));
  FieldElement t1 = F_.mul(a[1], F_.sub(F_.mul(b[0], c[2]), F_.mul(b[2], c[0])));
  FieldElement t2 = F_.mul(a[2], F_.sub(F_.mul(b[0], c[1]), F_.mul(b[1], c[0])));
  return F_.add(F_.sub(t0, t1), t2);
}

bool PlaneGeometry::collinear(const ProjectivePoint& P, const ProjectivePoint& Q, const ProjectivePoint& R) const {
  return det3(P, Q, R).code == 0;
}

bool PlaneGeometry::six_on_conic(std::span<const ProjectivePoint, 6> pts) const {
  std::array<std::array<FieldElement, 6>, 6> m;
  for (std::size_t r = 0; r < 6; ++r) {
    const auto& v = pts[r].x;
    m[r] = {F_.mul(v[0], v[0]), F_.mul(v[1], v[1]), F_.mul(v[2], v[2]),
            F_.mul(v[0], v[1]), F_.mul(v[0], v[2]), F_.mul(v[1], v[2])};
  }
  for (std::size_t col = 0; col < 6; ++col) {
    std::size_t pivot = col;
    while (pivot < 6 && m[pivot][col].code == 0) ++pivot;
    if (pivot == 6) return true;  // singular
    std::swap(m[col], m[pivot]);
    const FieldElement inv = F_.inv(m[col][col]);
    for (std::size_t r = col + 1; r < 6; ++r) {
      if (m[r][col].code == 0) continue;
      const FieldElement f = F_.neg(F_.mul(m[r][col], inv));
      for (std::size_t c = col + 1; c < 6; ++c) m[r][c] = F_.add(m[r][c], F_.mul(f, m[col][c]));
    }
  }
  return false;
}

bool PlaneGeometry::no_six_on_conic(std::span<const ProjectivePoint, 7> pts) const {
  // Columns are the Veronese images. The 6x6 minors are, up to sign, the
  // coordinates of the kernel vector, so one elimination decides all seven.
  std::array<std::array<FieldElement, 7>, 6> a;
  for (std::size_t c = 0; c < 7; ++c) {
    const auto& v = pts[c].x;
    a[0][c] = F_.mul(v[0], v[0]);
    a[1][c] = F_.mul(v[1], v[1]);
    a[2][c] = F_.mul(v[2], v[2]);
    a[3][c] = F_.mul(v[0], v[1]);
    a[4][c] = F_.mul(v[0], v[2]);
    a[5][c] = F_.mul(v[1], v[2]);
  }
  std::array<int, 6> pivot_col{};
  int free_col = -1;
  std::size_t row = 0;
  for (int col = 0; col < 7; ++col) {
    std::size_t p = row;
    while (p < 6 && a[p][static_cast<std::size_t>(col)].code == 0) ++p;
    if (p == 6) {
      if (free_col >= 0) return false;  // rank < 6: every minor vanishes
      free_col = col;
      continue;
    }
    std::swap(a[row], a[p]);
    const FieldElement inv = F_.inv(a[row][static_cast<std::size_t>(col)]);
    for (auto& x : a[row]) x = F_.mul(x, inv);
    for (std::size_t r = 0; r < 6; ++r) {
      if (r == row || a[r][static_cast<std::size_t>(col)].code == 0) continue;
      const FieldElement f = F_.neg(a[r][static_cast<std::size_t>(col)]);
      for (std::size_t c = 0; c < 7; ++c) a[r][c] = F_.add(a[r][c], F_.mul(f, a[row][c]));
    }
    pivot_col[row++] = col;
  }
  if (free_col < 0) free_col = 6;
  for (std::size_t r = 0; r < 6; ++r)
    if (a[r][static_cast<std::size_t>(free_col)].code == 0) return false;
  return true;
}

bool PlaneGeometry::in_general_position(std::span<const ProjectivePoint, 7> pts) const {
  for (std::size_t i = 0; i < 7; ++i)
    for (std::size_t j = i + 1; j < 7; ++j)
      if (pts[i] == pts[j]) return false;
  for (std::size_t i = 0; i < 7; ++i)
    for (std::size_t j = i + 1; j < 7; ++j)
      for (std::size_t k = j + 1; k < 7; ++k)
        if (collinear(pts[i], pts[j], pts[k])) return false;
  return no_six_on_conic(pts);
}

std::vector<ProjectivePoint> PlaneGeometry::points(unsigned d) const {
  const auto sub = F_.subfield_elements(d);
  const FieldElement zero = F_.zero(), one = F_.one();
  std::vector<ProjectivePoint> out;
  out.reserve(sub.size() * sub.size() + sub.size() + 1);
  out.push_back({{zero, zero, one}});
  for (auto z : sub) out.push_back({{zero, one, z}});
  for (auto y : sub)
    for (auto z : sub) out.push_back({{one, y, z}});
  std::sort(out.begin(), out.end(), [&](const ProjectivePoint& a, const ProjectivePoint& b) {
    for (int i = 0; i < 3; ++i)
      if (F_.index(a.x[i]) != F_.index(b.x[i])) return F_.index(a.x[i]) < F_.index(b.x[i]);
    return false;
  });
  return out;
}

BigInt pgl3_order(std::int64_t q) {
  const BigInt Q = q;
  return Q * Q * Q * (Q * Q * Q - 1) * (Q * Q - 1);
}

// ---------------------------------------------------------------------------
// CycleType

CycleType::CycleType(std::vector<int> parts) : parts_(std::move(parts)) {
  if (parts_.empty() || std::any_of(parts_.begin(), parts_.end(), [](int x) { return x < 1; }) ||
      std::accumulate(parts_.begin(), parts_.end(), 0) != 7)
    throw InvalidInput("cycle type must be a partition of 7");
  std::sort(parts_.rbegin(), parts_.rend());
}

CycleType CycleType::parse(std::string_view text) {
  std::vector<int> parts;
  std::string item;
  std::istringstream is{std::string(text)};
  while (std::getline(is, item, ',')) {
    try {
      std::size_t used = 0;
      parts.push_back(std::stoi(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw InvalidInput("malformed cycle type '" + std::string(text) + "'");
    }
  }
  return CycleType(std::move(parts));
}

std::array<int, 7> CycleType::representative() const {
  std::array<int, 7> sigma{};
  int pos = 0;
  for (int len : parts_) {
    for (int j = 0; j < len; ++j) sigma[static_cast<std::size_t>(pos + j)] = pos + (j + 1) % len + 1;
    pos += len;
  }
  return sigma;
}

int CycleType::lcm() const {
  int l = 1;
  for (int x : parts_) l = std::lcm(l, x);
  return l;
}

std::string CycleType::to_string() const {
  std::string s;
  for (int x : parts_) s += (s.empty() ? "" : ",") + std::to_string(x);
  return s;
}

BigInt feasibility(const CycleType& cycle_type, std::int64_t q) {
  BigInt total = 1;
  for (int len : cycle_type.parts()) {
    BigInt ql = boost::multiprecision::pow(BigInt(q), static_cast<unsigned>(len));
    total *= ql * ql + ql + 1;
  }
  return total;
}

nlohmann::json OracleResult::to_json() const {
  return {{"method", method},
          {"cycle_type", cycle_type.parts()},
          {"q", q},
          {"class_name", class_name},
          {"raw_count", json_integer(raw_count)},
          {"pgl3_order", json_integer(pgl3_order)},
          {"orbit_count", json_integer(orbit_count)},
          {"expected", json_integer(expected)},
          {"match", match},
          {"wall_time", wall_time}};
}

// ---------------------------------------------------------------------------
// Searches

namespace {

void check_budget(const BigInt& estimate, const OracleOptions& options, const std::string& what) {
  if (estimate > options.budget)
    throw BudgetExceeded(what + ": estimated search size " + estimate.str() + " exceeds the budget of " +
                         std::to_string(options.budget));
}

// Distinctness and collinearity for every triple touching points [from, to).
bool extension_ok(const PlaneGeometry& geo, std::span<const ProjectivePoint> pts, std::size_t from, std::size_t to) {
  for (std::size_t n = from; n < to; ++n) {
    for (std::size_t i = 0; i < n; ++i)
      if (pts[i] == pts[n]) return false;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j)
        if (geo.collinear(pts[i], pts[j], pts[n])) return false;
  }
  return true;
}

template <typename Work>
std::uint64_t run_partitioned(std::size_t n, unsigned jobs, Work work) {
  jobs = std::max(1u, std::min<unsigned>(jobs, static_cast<unsigned>(std::max<std::size_t>(n, 1))));
  std::vector<std::uint64_t> partial(jobs, 0);
  if (jobs == 1) {
    partial[0] = work(0, 1);
  } else {
    std::vector<std::thread> threads;
    for (unsigned t = 0; t < jobs; ++t) threads.emplace_back([&, t] { partial[t] = work(t, jobs); });
    for (auto& th : threads) th.join();
  }
  return std::accumulate(partial.begin(), partial.end(), std::uint64_t{0});
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

}  // namespace

OracleResult count_identity(const OddPrimePower& q, const OracleOptions& options, const ClassData& data) {
  const auto t0 = std::chrono::steady_clock::now();
  const BigInt n_points = BigInt(q.value()) * q.value() + q.value() + 1;
  check_budget(n_points * n_points * n_points, options, "frame-normalised identity count at q = " + std::to_string(q.value()));

  const FiniteField F = FiniteField::make(static_cast<std::uint32_t>(q.prime()), static_cast<unsigned>(q.exponent()),
                                          options.max_field_size);
  const PlaneGeometry geo(F);
  const auto pts = geo.points(F.degree());
  const FieldElement o = F.zero(), l = F.one();
  const std::array<ProjectivePoint, 4> frame = {{{{l, o, o}}, {{o, l, o}}, {{o, o, l}}, {{l, l, l}}}};

  const std::uint64_t count = run_partitioned(pts.size(), options.jobs, [&](unsigned worker, unsigned stride) {
    std::array<ProjectivePoint, 7> cfg;
    std::copy(frame.begin(), frame.end(), cfg.begin());
    std::uint64_t local = 0;
    for (std::size_t i5 = worker; i5 < pts.size(); i5 += stride) {
      cfg[4] = pts[i5];
      if (!extension_ok(geo, cfg, 4, 5)) continue;
      for (const auto& p6 : pts) {
        cfg[5] = p6;
        if (!extension_ok(geo, cfg, 5, 6)) continue;
        for (const auto& p7 : pts) {
          cfg[6] = p7;
          if (!extension_ok(geo, cfg, 6, 7)) continue;
          if (geo.no_six_on_conic(cfg)) ++local;
        }
      }
    }
    return local;
  });

  OracleResult r;
  r.method = "frame";
  r.cycle_type = CycleType::identity();
  r.q = q.value();
  r.class_name = "1A";
  r.raw_count = count;
  r.pgl3_order = pgl3_order(q.value());
  r.orbit_count = count;
  r.expected = evaluate_class_count("1A", q, data);
  r.match = r.orbit_count == r.expected;
  r.wall_time = seconds_since(t0);
  return r;
}

OracleResult count_twisted(const CycleType& cycle_type, const OddPrimePower& q, const ClassTable& classes,
                           const WeylGroup* group, const OracleOptions& options, const ClassData& data) {
  const auto t0 = std::chrono::steady_clock::now();
  check_budget(feasibility(cycle_type, q.value()), options,
               "twisted count for cycle type (" + cycle_type.to_string() + ") at q = " + std::to_string(q.value()));

  const auto sigma = cycle_type.representative();
  const std::string class_name = classes.identify(embed_permutation(sigma), group);

  const unsigned m = static_cast<unsigned>(q.exponent());
  const unsigned L = static_cast<unsigned>(cycle_type.lcm());
  const FiniteField F = FiniteField::make(static_cast<std::uint32_t>(q.prime()), m * L, options.max_field_size);
  const PlaneGeometry geo(F);

  const auto& parts = cycle_type.parts();
  std::vector<std::vector<ProjectivePoint>> candidates;
  std::vector<std::size_t> offsets;
  {
    std::map<int, std::size_t> by_len;
    std::size_t pos = 0;
    for (int len : parts) {
      if (!by_len.contains(len)) {
        by_len[len] = candidates.size();
        candidates.push_back(geo.points(m * static_cast<unsigned>(len)));
      }
      offsets.push_back(pos);
      pos += static_cast<std::size_t>(len);
    }
    std::vector<std::vector<ProjectivePoint>> ordered;
    for (int len : parts) ordered.push_back(candidates[by_len[len]]);
    candidates = std::move(ordered);
  }

  const std::uint64_t raw = run_partitioned(candidates[0].size(), options.jobs, [&](unsigned worker, unsigned stride) {
    std::array<ProjectivePoint, 7> cfg{};
    std::uint64_t local = 0;
    // Fills the orbit of a free point for cycle c: P_{i+1} = Frob_q(P_i).
    auto place = [&](std::size_t c, const ProjectivePoint& P) {
      const std::size_t start = offsets[c];
      cfg[start] = P;
      for (int j = 1; j < parts[c]; ++j) cfg[start + static_cast<std::size_t>(j)] = geo.frobenius(cfg[start + static_cast<std::size_t>(j) - 1], m);
      return extension_ok(geo, cfg, start, start + static_cast<std::size_t>(parts[c]));
    };
    auto recurse = [&](auto&& self, std::size_t c) -> void {
      if (c == parts.size()) {
        if (geo.no_six_on_conic(cfg)) ++local;
        return;
      }
      for (const auto& P : candidates[c])
        if (place(c, P)) self(self, c + 1);
    };
    for (std::size_t i = worker; i < candidates[0].size(); i += stride)
      if (place(0, candidates[0][i])) recurse(recurse, 1);
    return local;
  });

  OracleResult r;
  r.method = "twisted";
  r.cycle_type = cycle_type;
  r.q = q.value();
  r.class_name = class_name;
  r.raw_count = raw;
  r.pgl3_order = pgl3_order(q.value());
  if (r.raw_count % r.pgl3_order != 0)
    throw InternalError("raw twisted count " + r.raw_count.str() + " is not divisible by |PGL3(F_q)| = " +
                        r.pgl3_order.str() + ": the action is not free, which indicates a bug");
  r.orbit_count = r.raw_count / r.pgl3_order;
  r.expected = evaluate_class_count(class_name, q, data);
  r.match = r.orbit_count == r.expected;
  r.wall_time = seconds_since(t0);
  return r;
}

}  // namespace dp2
