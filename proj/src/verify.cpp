#include "dp2/verify.hpp"

#include "dp2/errors.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <map>
#include <set>
#include <sstream>

namespace dp2 {
namespace {

class Recorder {
 public:
  explicit Recorder(std::string suite) : suite_(std::move(suite)) {}

  // `body` returns a detail string and sets `ok`; exceptions count as failures.
  void run(const std::string& name, const std::function<std::string(bool&)>& body) {
    const auto t0 = std::chrono::steady_clock::now();
    Check c{suite_, name, false, {}, 0};
    try {
      bool ok = false;
      c.detail = body(ok);
      c.passed = ok;
    } catch (const std::exception& e) {
      c.detail = std::string("exception: ") + e.what();
    }
    c.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    checks_.push_back(std::move(c));
  }

  std::vector<Check> take() { return std::move(checks_); }

 private:
  std::string suite_;
  std::vector<Check> checks_;
};

std::string join(const std::vector<std::string>& v) {
  std::string s;
  for (const auto& x : v) s += (s.empty() ? "" : ", ") + x;
  return s;
}

}  // namespace

nlohmann::json checks_to_json(const std::vector<Check>& checks) {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& c : checks)
    arr.push_back({{"suite", c.suite}, {"name", c.name}, {"passed", c.passed}, {"detail", c.detail}, {"seconds", c.seconds}});
  return arr;
}

std::vector<Check> verify_data(const ClassData& data) {
  Recorder rec("data");
  for (const auto& dc : data.validate().checks)
    rec.run(dc.name, [&](bool& ok) {
      ok = dc.passed;
      return dc.detail;
    });
  return rec.take();
}

std::vector<Check> verify_group(Session& session) {
  Recorder rec("group");
  rec.run("roots", [](bool& ok) {
    const auto K = canonical_class();
    std::size_t fam[3] = {0, 0, 0};
    for (const auto& r : positive_roots()) {
      if (r[0] == 0) ++fam[0];
      else if (r[0] == 1) ++fam[1];
      else if (r[0] == 2) ++fam[2];
    }
    bool all = roots().size() == 126;
    for (const auto& r : roots()) all = all && inner(r, r) == -2 && inner(r, K) == 0;
    for (std::size_t i = 0; i < 63; ++i) all = all && roots()[i + 63] == -roots()[i];
    ok = all && fam[0] == 21 && fam[1] == 35 && fam[2] == 7;
    return std::to_string(roots().size()) + " roots; positive families " + std::to_string(fam[0]) + "+" +
           std::to_string(fam[1]) + "+" + std::to_string(fam[2]);
  });
  rec.run("generators", [](bool& ok) {
    ok = true;
    for (const auto& g : simple_reflections())
      ok = ok && g.preserves_form() && g.fixes_canonical() && g * g == WeylElement::identity();
    return std::string("7 simple reflections are involutions preserving the form and K");
  });
  rec.run("order", [&](bool& ok) {
    const auto& G = session.group();
    ok = G.size() == WeylGroup::kExpectedOrder;
    return "enumerated " + std::to_string(G.size()) + " elements";
  });
  rec.run("determinant_one_subgroup", [&](bool& ok) {
    const auto n = session.group().even_length_count();
    ok = n == 1451520;
    return "even-length elements: " + std::to_string(n);
  });
  rec.run("geiser_in_group", [&](bool& ok) {
    const auto idx = session.group().find(WeylElement::geiser());
    ok = idx.has_value() && trace_pic(WeylElement::geiser()) == -6;
    return std::string(ok ? "-1 on K-perp is an element, Picard trace -6" : "missing");
  });
  rec.run("classes", [&](bool& ok) {
    const auto& t = session.group().class_table();
    std::uint64_t total = 0;
    bool pairs = true, divides = true;
    for (std::size_t i = 0; i < t.size(); ++i) {
      const auto& c = t[i];
      total += c.size;
      divides = divides && WeylGroup::kExpectedOrder % c.size == 0;
      const auto& p = t[static_cast<std::size_t>(c.partner)];
      pairs = pairs && static_cast<std::size_t>(p.partner) == i && p.partner != c.partner && p.size == c.size &&
              p.trace_std == -c.trace_std && p.sign == -c.sign;
    }
    ok = t.size() == 60 && total == WeylGroup::kExpectedOrder && pairs && divides;
    return std::to_string(t.size()) + " classes, sizes sum to " + std::to_string(total) +
           (pairs ? ", 30 +/- pairs" : ", pairing broken");
  });
  rec.run("traces", [&](bool& ok) {
    const std::set<int> allowed = {-6, -4, -3, -2, -1, 0, 1, 2, 3, 4, 5, 6, 8};
    std::set<int> seen;
    for (const auto& c : session.group().class_table().classes()) seen.insert(c.pic_trace());
    ok = seen == allowed;
    std::string s;
    for (int a : seen) s += (s.empty() ? "" : " ") + std::to_string(a);
    return "Picard traces: " + s;
  });
  rec.run("embedding", [](bool& ok) {
    const std::array<int, 7> a = {2, 3, 4, 5, 6, 7, 1}, b = {2, 1, 3, 4, 5, 6, 7};
    std::array<int, 7> ab{};
    for (std::size_t i = 0; i < 7; ++i) ab[i] = a[static_cast<std::size_t>(b[i] - 1)];
    const auto A = embed_permutation(a), B = embed_permutation(b);
    ok = embed_permutation(ab) == A * B && A.order() == 7 && trace_pic(A) == 1 && trace_pic(B) == 6;
    return std::string("S7 embedding is a homomorphism; 7-cycle has order 7 and trace 1");
  });
  rec.run("class_report_matches_group", [&](bool& ok) {
    const auto& rep = session.report().table;
    const auto& t = session.group().class_table();
    std::multiset<std::tuple<int, std::uint64_t, int, int>> a, b;
    for (const auto& c : rep.classes()) a.insert({c.element_order, c.size, c.trace_std, c.sign});
    for (const auto& c : t.classes()) b.insert({c.element_order, c.size, c.trace_std, c.sign});
    ok = a == b;
    return std::string(session.report_from_cache() ? "cached" : "fresh") + " class report agrees with enumeration";
  });
  return rec.take();
}

std::vector<Check> verify_aggregation(Session& session, std::int64_t q_max) {
  Recorder rec("aggregation");
  const auto sweep = odd_prime_powers_up_to(q_max);
  rec.run("letter_assignment", [&](bool& ok) {
    const auto& l = session.report().letters;
    ok = l.passing_integrality == 1 || (l.default_held && l.passing_integrality <= 1);
    std::string r;
    for (const auto& [from, to] : l.renames) r += (r.empty() ? "" : ", ") + from + "->" + to;
    return "method " + l.method + ", " + std::to_string(l.candidates) + " candidates, " +
           std::to_string(l.passing_aggregation) + " pass aggregation, " + std::to_string(l.passing_integrality) +
           " also integral; renames: " + (r.empty() ? "none" : r);
  });
  const auto report = aggregation_check(session.report().table, session.raw_data(), sweep);
  for (const auto& row : report.rows)
    rec.run("trace " + std::to_string(row.trace), [&](bool& ok) {
      ok = row.identity_holds && row.pointwise_failures.empty();
      return "classes {" + join(row.contributing) + "}" + (ok ? "" : "; aggregated " + row.aggregated.to_string());
    });
  rec.run("no_stray_classes", [&](bool& ok) {
    ok = report.stray_classes.empty();
    return report.stray_classes.empty() ? std::string("every class has a listed trace") : join(report.stray_classes);
  });
  rec.run("anchors", [&](bool& ok) {
    const auto& t = session.report().table;
    ok = t.by_name("-1A").size == 1 && t.by_name("2A").size == 63 && t.by_name("3A").size == 672 &&
         t.by_name("-1A").pic_trace() == -6;
    return "|1A| = 1, |2A| = " + std::to_string(t.by_name("2A").size) + ", |3A| = " + std::to_string(t.by_name("3A").size);
  });
  rec.run("virtual_characters", [&](bool& ok) {
    const auto defects = virtual_character_defects(session.report().table, session.raw_data());
    ok = defects == 0;
    return std::to_string(defects) + " non-integral inner products";
  });
  rec.run("orders_and_sizes", [&](bool& ok) {
    const auto& d = session.populated_data();
    std::multiset<std::pair<int, std::uint64_t>> a, b;
    for (const auto& c : d.classes()) {
      if (!c.sp62_size) throw VerificationFailure("class " + c.name + " has no computed size");
      a.insert({c.element_order, *c.sp62_size});
    }
    for (const auto& c : session.report().table.classes())
      if (c.sign > 0) b.insert({c.element_order, c.size});
    ok = a == b;
    return std::string("(order, size) multiset of the 30 rows matches the determinant-one classes");
  });
  return rec.take();
}

std::vector<Check> verify_zeros(Session& session, std::int64_t q_max) {
  Recorder rec("zeros");
  const auto sweep = odd_prime_powers_up_to(q_max);
  const ClassData& data = session.raw_data();
  const std::string range = " over " + std::to_string(sweep.size()) + " odd prime powers q <= " + std::to_string(q_max);
  // Classes and traces are compared separately so that one discrepancy does
  // not hide the other.
  auto zero_sets = [&](bool classes, bool& ok) {
    ok = true;
    std::string bad;
    for (const auto& q : sweep) {
      const auto got = existence_exceptions(q, data), want = published_exceptions(q, data);
      std::vector<std::string> g, w;
      if (classes) {
        g = got.class_exceptions;
        w = want.class_exceptions;
      } else {
        for (int a : got.trace_exceptions) g.push_back(std::to_string(a));
        for (int a : want.trace_exceptions) w.push_back(std::to_string(a));
      }
      if (g == w) continue;
      ok = false;
      std::vector<std::string> extra, missing;
      for (const auto& x : g)
        if (std::find(w.begin(), w.end(), x) == w.end()) extra.push_back(x);
      for (const auto& x : w)
        if (std::find(g.begin(), g.end(), x) == g.end()) missing.push_back(x);
      bad += "; q=" + std::to_string(q.value()) + (extra.empty() ? "" : " unlisted zeros {" + join(extra) + "}") +
             (missing.empty() ? "" : " listed but nonzero {" + join(missing) + "}");
    }
    return ok ? "zero sets equal the published lists" + range : "differs from the published lists" + bad;
  };
  rec.run("existence_classes", [&](bool& ok) { return zero_sets(true, ok); });
  rec.run("existence_traces", [&](bool& ok) { return zero_sets(false, ok); });
  rec.run("symmetry", [&](bool& ok) {
    ok = true;
    for (const auto& q : sweep)
      for (int a : data.possible_traces()) ok = ok && count_by_trace(a, q, data) == count_by_trace(2 - a, q, data);
    return "count(a) = count(2 - a)" + range;
  });
  rec.run("nonnegative", [&](bool& ok) {
    ok = true;
    for (const auto& q : sweep) {
      for (const auto& c : data.classes()) ok = ok && c.table1_poly.evaluate(q.value()) >= 0;
      for (const auto& t : data.traces()) ok = ok && t.table2_poly.evaluate(q.value()) >= 0;
    }
    return "all class and trace counts nonnegative" + range;
  });
  rec.run("point_counts", [&](bool& ok) {
    const auto q9 = OddPrimePower::make(9);
    ok = surface_point_count(8, q9) == 154 && surface_point_count(-6, q9) == 28;
    std::size_t checked = 0;
    for (const auto& q : sweep)
      for (const auto& c : session.report().table.classes())
        if (evaluate_class_count(c.name, q, data) > 0) {
          ++checked;
          ok = ok && surface_point_count(c.pic_trace(), q) >= 0;
        }
    return "154 and 28 at q = 9; " + std::to_string(checked) + " (class, q) pairs with surfaces have nonnegative point counts";
  });
  return rec.take();
}

std::vector<Check> verify_oracle(Session& session, const OracleSuite& suite) {
  Recorder rec("oracle");
  const ClassData& data = session.raw_data();
  for (std::int64_t qv : suite.identity_q)
    rec.run("identity q=" + std::to_string(qv), [&](bool& ok) {
      const auto r = count_identity(OddPrimePower::make(qv), suite.options, data);
      ok = r.match;
      return "count " + r.orbit_count.str() + ", table " + r.expected.str();
    });
  for (const auto& text : suite.cycle_types)
    rec.run("cycle type (" + text + ") q=" + std::to_string(suite.twisted_q), [&](bool& ok) {
      const auto ct = CycleType::parse(text);
      const auto q = OddPrimePower::make(suite.twisted_q);
      OracleResult r;
      try {
        r = count_twisted(ct, q, session.report().table, nullptr, suite.options, data);
      } catch (const VerificationFailure&) {
        r = count_twisted(ct, q, session.report().table, &session.group(), suite.options, data);
      }
      ok = r.match && r.raw_count % r.pgl3_order == 0;
      return r.class_name + ": raw " + r.raw_count.str() + " = " + r.orbit_count.str() + " * " + r.pgl3_order.str() +
             ", table " + r.expected.str();
    });
  for (std::int64_t qv : suite.path_independence_q)
    rec.run("trivial cycle type q=" + std::to_string(qv), [&](bool& ok) {
      const auto q = OddPrimePower::make(qv);
      OracleOptions opts = suite.options;
      opts.budget = std::max<std::uint64_t>(opts.budget, static_cast<std::uint64_t>(feasibility(CycleType::identity(), qv)));
      const auto twisted = count_twisted(CycleType::identity(), q, session.report().table, nullptr, opts, data);
      const auto frame = count_identity(q, suite.options, data);
      ok = twisted.orbit_count == frame.orbit_count && twisted.match;
      return "twisted " + twisted.orbit_count.str() + ", frame " + frame.orbit_count.str();
    });
  return rec.take();
}

}  // namespace dp2
