#include "commands.hpp"

#include "dp2/errors.hpp"
#include "dp2/oracle.hpp"
#include "dp2/pipeline.hpp"
#include "dp2/verify.hpp"

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <iomanip>
#include <iostream>
#include <sstream>

namespace dp2::cli {
namespace {

using ojson = nlohmann::ordered_json;

struct Globals {
  std::string cache_dir;
  bool no_cache = false;
  unsigned jobs = 1;
};

struct Format {
  std::string value = "text";
  bool json() const { return value == "json"; }
  bool csv() const { return value == "csv"; }
};

void add_format(CLI::App* sub, Format& f) {
  sub->add_option("--format", f.value, "Output format")->check(CLI::IsMember({"text", "json", "csv"}))->capture_default_str();
}

Session make_session(const Globals& g) {
  SessionOptions o;
  if (!g.cache_dir.empty()) o.cache_dir = g.cache_dir;
  o.use_cache = !g.no_cache;
  return Session(o);
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string r = "\"";
  for (char c : s) r += (c == '"') ? std::string("\"\"") : std::string(1, c);
  return r + "\"";
}

void print_json(std::ostream& out, const ojson& j) { out << j.dump(2) << '\n'; }

// Left-aligned columns separated by two spaces.
void print_columns(std::ostream& out, const std::vector<std::vector<std::string>>& rows) {
  std::vector<std::size_t> width;
  auto display = [](const std::string& s) {
    std::size_t n = 0;
    for (unsigned char c : s) n += (c & 0xC0) != 0x80;
    return n;
  };
  for (const auto& r : rows)
    for (std::size_t i = 0; i < r.size(); ++i) {
      if (width.size() <= i) width.push_back(0);
      width[i] = std::max(width[i], display(r[i]));
    }
  for (const auto& r : rows) {
    std::string line;
    for (std::size_t i = 0; i < r.size(); ++i) {
      line += r[i];
      if (i + 1 < r.size()) line += std::string(width[i] - display(r[i]) + 2, ' ');
    }
    out << line << '\n';
  }
}

void print_csv(std::ostream& out, const std::vector<std::vector<std::string>>& rows) {
  for (const auto& r : rows) {
    for (std::size_t i = 0; i < r.size(); ++i) out << (i ? "," : "") << csv_field(r[i]);
    out << '\n';
  }
}

void print_rows(std::ostream& out, const Format& f, const std::vector<std::vector<std::string>>& rows) {
  if (f.csv()) print_csv(out, rows);
  else print_columns(out, rows);
}

std::string pm(const std::string& name) { return "±" + name; }

// --- commands -------------------------------------------------------------

int cmd_classes(const Globals& g, const Format& f, std::ostream& out) {
  Session s = make_session(g);
  const auto& rep = s.report();
  if (f.json()) {
    ojson classes = ojson::array();
    for (const auto& c : rep.table.classes()) {
      std::vector<std::int64_t> cp;
      for (const auto& x : c.char_poly_std.coeffs()) cp.push_back(static_cast<std::int64_t>(x));
      classes.push_back({{"name", c.name},
                         {"order", c.element_order},
                         {"size", c.size},
                         {"trace_std", c.trace_std},
                         {"pic_trace", c.pic_trace()},
                         {"sign", c.sign},
                         {"char_poly_std", cp}});
    }
    print_json(out, {{"generator_hash", generator_hash()},
                     {"letter_assignment", ojson(rep.letters.to_json())},
                     {"classes", classes}});
    return kOk;
  }
  std::vector<std::vector<std::string>> rows = {{"class", "order", "size", "trace_std", "pic_trace"}};
  for (const auto& c : rep.table.classes())
    rows.push_back({c.name, std::to_string(c.element_order), std::to_string(c.size), std::to_string(c.trace_std),
                    std::to_string(c.pic_trace())});
  print_rows(out, f, rows);
  return kOk;
}

struct CountArgs {
  std::string class_label;
  int trace = 0;
  std::int64_t q = 0;
};

int cmd_count(const CountArgs& a, bool by_trace, const Format& f, std::ostream& out) {
  const auto q = OddPrimePower::make(a.q);
  ojson j;
  BigInt n;
  if (by_trace) {
    n = count_by_trace(a.trace, q);
    j = {{"trace", a.trace}, {"q", a.q}, {"count", ojson(json_integer(n))}};
  } else {
    n = evaluate_class_count(a.class_label, q);
    j = {{"class", a.class_label}, {"q", a.q}, {"count", ojson(json_integer(n))}};
  }
  if (f.json()) print_json(out, j);
  else if (f.csv()) print_csv(out, {{by_trace ? "trace" : "class", "q", "count"},
                                    {by_trace ? std::to_string(a.trace) : a.class_label, std::to_string(a.q), n.str()}});
  else out << n << '\n';
  return kOk;
}

int cmd_table(std::int64_t qv, const std::string& by, const Format& f, std::ostream& out) {
  const auto q = OddPrimePower::make(qv);
  const ClassData& data = ClassData::embedded();
  if (by == "class") {
    if (f.json()) {
      ojson rows = ojson::array();
      for (const auto& c : data.classes())
        rows.push_back({{"class", c.name},
                        {"order", c.element_order},
                        {"count", ojson(json_integer(c.table1_poly.evaluate(qv)))},
                        {"polynomial", c.table1_poly.printed()}});
      print_json(out, {{"q", qv}, {"by", "class"}, {"rows", rows}});
      return kOk;
    }
    std::vector<std::vector<std::string>> rows = {{"class", "order", "count", "polynomial"}};
    for (const auto& c : data.classes())
      rows.push_back({f.csv() ? c.name : pm(c.name), std::to_string(c.element_order),
                      c.table1_poly.evaluate(qv).str(), c.table1_poly.printed()});
    print_rows(out, f, rows);
    return kOk;
  }
  if (f.json()) {
    ojson rows = ojson::array();
    for (const auto& t : data.traces())
      rows.push_back({{"trace", t.trace_a},
                      {"count", ojson(json_integer(t.table2_poly.evaluate(qv)))},
                      {"points", ojson(json_integer(surface_point_count(t.trace_a, q)))},
                      {"polynomial", t.table2_poly.printed()}});
    print_json(out, {{"q", qv}, {"by", "trace"}, {"rows", rows}});
    return kOk;
  }
  std::vector<std::vector<std::string>> rows = {{"trace", "count", "points", "polynomial"}};
  for (const auto& t : data.traces())
    rows.push_back({std::to_string(t.trace_a), t.table2_poly.evaluate(qv).str(),
                    surface_point_count(t.trace_a, q).str(), t.table2_poly.printed()});
  print_rows(out, f, rows);
  return kOk;
}

int cmd_points(const Globals& g, const std::string& label, std::int64_t qv, const Format& f, std::ostream& out) {
  const auto q = OddPrimePower::make(qv);
  ClassData::embedded().class_record(label);  // validate the label before building anything
  const std::string name = label.starts_with("+") ? label.substr(1) : label;
  Session s = make_session(g);
  const auto& c = s.report().table.by_name(name);
  const BigInt n = surface_point_count(c.pic_trace(), q);
  if (f.json())
    print_json(out, {{"class", c.name}, {"q", qv}, {"trace", c.pic_trace()}, {"points", ojson(json_integer(n))}});
  else if (f.csv())
    print_csv(out, {{"class", "q", "trace", "points"}, {c.name, std::to_string(qv), std::to_string(c.pic_trace()), n.str()}});
  else
    out << n << '\n';
  return kOk;
}

int cmd_existence(std::int64_t qv, const Format& f, std::ostream& out) {
  const auto q = OddPrimePower::make(qv);
  const auto ex = existence_exceptions(q);
  const auto pub = published_exceptions(q);
  const bool agrees = ex.class_exceptions == pub.class_exceptions && ex.trace_exceptions == pub.trace_exceptions;
  if (f.json()) {
    print_json(out, {{"q", qv},
                     {"class_exceptions", ex.class_exceptions},
                     {"trace_exceptions", ex.trace_exceptions},
                     {"published", {{"class_exceptions", pub.class_exceptions}, {"trace_exceptions", pub.trace_exceptions}}},
                     {"matches_published", agrees}});
  } else if (f.csv()) {
    std::vector<std::vector<std::string>> rows = {{"kind", "label", "published"}};
    auto listed = [](const auto& v, const auto& x) { return std::find(v.begin(), v.end(), x) != v.end(); };
    for (const auto& c : ex.class_exceptions) rows.push_back({"class", c, listed(pub.class_exceptions, c) ? "yes" : "no"});
    for (int a : ex.trace_exceptions)
      rows.push_back({"trace", std::to_string(a), listed(pub.trace_exceptions, a) ? "yes" : "no"});
    print_csv(out, rows);
  } else {
    auto words = [](const auto& v) {
      std::ostringstream o;
      for (const auto& x : v) o << (o.tellp() > 0 ? " " : "") << x;
      return o.str().empty() ? std::string("none") : o.str();
    };
    out << "q = " << qv << '\n';
    out << "classes with no surfaces: " << words(ex.class_exceptions) << '\n';
    out << "traces with no surfaces: " << words(ex.trace_exceptions) << '\n';
    if (!agrees)
      out << "published lists differ: classes " << words(pub.class_exceptions) << "; traces "
          << words(pub.trace_exceptions) << '\n';
  }
  return kOk;
}

struct OracleArgs {
  bool identity = false;
  std::string cycle_type;
  std::int64_t q = 0;
  std::uint64_t budget = OracleOptions{}.budget;
};

int cmd_oracle(const Globals& g, const OracleArgs& a, const Format& f, std::ostream& out) {
  const auto q = OddPrimePower::make(a.q);
  OracleOptions opts;
  opts.budget = a.budget;
  opts.jobs = g.jobs;
  OracleResult r;
  if (a.identity) {
    r = count_identity(q, opts);
  } else {
    const auto ct = CycleType::parse(a.cycle_type);
    // Refuse before any group work if the search is too large.
    if (feasibility(ct, a.q) > opts.budget)
      throw BudgetExceeded("estimated search size " + feasibility(ct, a.q).str() + " exceeds the budget of " +
                           std::to_string(opts.budget));
    Session s = make_session(g);
    try {
      r = count_twisted(ct, q, s.report().table, nullptr, opts);
    } catch (const VerificationFailure&) {
      r = count_twisted(ct, q, s.report().table, &s.group(), opts);
    }
  }
  if (f.json()) {
    print_json(out, ojson(r.to_json()));
  } else {
    std::vector<std::vector<std::string>> rows = {
        {"method", "cycle_type", "q", "class", "raw_count", "pgl3_order", "orbit_count", "expected", "match", "seconds"},
        {r.method, r.cycle_type.to_string(), std::to_string(r.q), r.class_name, r.raw_count.str(), r.pgl3_order.str(),
         r.orbit_count.str(), r.expected.str(), r.match ? "yes" : "no", std::to_string(r.wall_time)}};
    if (f.csv()) {
      print_csv(out, rows);
    } else {
      for (std::size_t i = 0; i < rows[0].size(); ++i) out << std::left << std::setw(12) << rows[0][i] << rows[1][i] << '\n';
    }
  }
  return r.match ? kOk : kVerificationFailed;
}

int cmd_verify(const Globals& g, const std::string& suite, std::int64_t q_max, const Format& f, std::ostream& out) {
  static const std::vector<std::string> suites = {"data", "group", "aggregation", "zeros", "oracle"};
  Session s = make_session(g);
  std::vector<Check> all;
  auto want = [&](const std::string& name) { return suite == "all" || suite == name; };
  auto add = [&](std::vector<Check> v) { all.insert(all.end(), v.begin(), v.end()); };
  if (want("data")) add(verify_data(s.raw_data()));
  if (want("group")) add(verify_group(s));
  if (want("aggregation")) add(verify_aggregation(s, q_max));
  if (want("zeros")) add(verify_zeros(s, q_max));
  if (want("oracle")) {
    OracleSuite o;
    o.options.jobs = g.jobs;
    add(verify_oracle(s, o));
  }
  const bool ok = std::all_of(all.begin(), all.end(), [](const Check& c) { return c.passed; });
  if (f.json()) {
    print_json(out, {{"suite", suite}, {"ok", ok}, {"checks", ojson(checks_to_json(all))}});
  } else if (f.csv()) {
    std::vector<std::vector<std::string>> rows = {{"suite", "check", "status", "seconds", "detail"}};
    for (const auto& c : all)
      rows.push_back({c.suite, c.name, c.passed ? "PASS" : "FAIL", std::to_string(c.seconds), c.detail});
    print_csv(out, rows);
  } else {
    for (const auto& c : all) {
      std::ostringstream t;
      t << std::fixed << std::setprecision(2) << c.seconds << "s";
      out << (c.passed ? "PASS " : "FAIL ") << c.suite << '/' << c.name << ": " << c.detail << " [" << t.str() << "]\n";
    }
    out << (ok ? "all checks passed" : "verification FAILED") << '\n';
  }
  return ok ? kOk : kVerificationFailed;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Counts of degree 2 Del Pezzo surfaces over finite fields of odd characteristic", "dp2"};
  app.require_subcommand(1);
  Globals g;
  app.add_option("--cache-dir", g.cache_dir, "Directory for the cached class report");
  app.add_flag("--no-cache", g.no_cache, "Recompute the class report and do not write the cache");
  app.add_option("--jobs,-j", g.jobs, "Worker threads for oracle searches")->check(CLI::Range(1u, 256u));

  Format f_classes, f_count, f_table, f_points, f_exist, f_oracle, f_verify;

  auto* classes = app.add_subcommand("classes", "The 60 conjugacy classes of W(E7)");
  add_format(classes, f_classes);

  CountArgs count_args;
  auto* count = app.add_subcommand("count", "Surfaces with a given Frobenius class or Picard trace");
  auto* opt_class = count->add_option("--class", count_args.class_label, "Signed class label, e.g. 7A or -7A");
  auto* opt_trace = count->add_option("--trace", count_args.trace, "Picard trace");
  opt_class->excludes(opt_trace);
  count->add_option("--q", count_args.q, "Odd prime power")->required();
  add_format(count, f_count);

  std::int64_t table_q = 0;
  std::string table_by = "trace";
  auto* table = app.add_subcommand("table", "All class or trace counts at q, in published row order");
  table->add_option("--q", table_q, "Odd prime power")->required();
  table->add_option("--by", table_by, "Rows keyed by trace or class")->check(CLI::IsMember({"trace", "class"}))->capture_default_str();
  add_format(table, f_table);

  std::string points_class;
  std::int64_t points_q = 0;
  auto* points = app.add_subcommand("points", "q^2 + a q + 1 for the Picard trace a of a class");
  points->add_option("--class", points_class, "Signed class label")->required();
  points->add_option("--q", points_q, "Odd prime power")->required();
  add_format(points, f_points);

  std::int64_t exist_q = 0;
  auto* existence = app.add_subcommand("existence", "Classes and traces with no surfaces at q");
  existence->add_option("--q", exist_q, "Odd prime power")->required();
  add_format(existence, f_exist);

  OracleArgs oracle_args;
  auto* oracle = app.add_subcommand("oracle", "Brute-force configuration count compared with the class table");
  auto* opt_id = oracle->add_flag("--identity", oracle_args.identity, "Frame-normalised count for the identity class");
  auto* opt_ct = oracle->add_option("--cycle-type", oracle_args.cycle_type, "Partition of 7, e.g. 7 or 2,2,2,1");
  opt_id->excludes(opt_ct);
  oracle->add_option("--q", oracle_args.q, "Odd prime power")->required();
  oracle->add_option("--budget", oracle_args.budget, "Largest search size to attempt")->capture_default_str();
  add_format(oracle, f_oracle);

  std::string verify_suite = "all";
  std::int64_t verify_qmax = 1000;
  auto* verify = app.add_subcommand("verify", "Run verification suites");
  verify->add_option("suite", verify_suite, "Suite to run")
      ->check(CLI::IsMember({"data", "group", "aggregation", "zeros", "oracle", "all"}))
      ->capture_default_str();
  verify->add_option("--q-max", verify_qmax, "Largest q in sweeps")->capture_default_str()->check(CLI::Range(3, 100000));
  add_format(verify, f_verify);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    std::ostringstream o, e2;
    const int code = app.exit(e, o, e2);
    out << o.str();
    err << e2.str();
    return code == 0 ? kOk : kInvalid;
  }

  try {
    if (*classes) return cmd_classes(g, f_classes, out);
    if (*count) {
      if (!*opt_class && !*opt_trace) throw InvalidInput("count needs --class or --trace");
      return cmd_count(count_args, static_cast<bool>(*opt_trace), f_count, out);
    }
    if (*table) return cmd_table(table_q, table_by, f_table, out);
    if (*points) return cmd_points(g, points_class, points_q, f_points, out);
    if (*existence) return cmd_existence(exist_q, f_exist, out);
    if (*oracle) {
      if (!oracle_args.identity && oracle_args.cycle_type.empty()) throw InvalidInput("oracle needs --identity or --cycle-type");
      return cmd_oracle(g, oracle_args, f_oracle, out);
    }
    if (*verify) return cmd_verify(g, verify_suite, verify_qmax, f_verify, out);
  } catch (const InvalidInput& e) {
    err << "error: " << e.what() << '\n';
    return kInvalid;
  } catch (const DataError& e) {
    err << "data error: " << e.what() << '\n';
    return kVerificationFailed;
  } catch (const VerificationFailure& e) {
    err << "verification failure: " << e.what() << '\n';
    return kVerificationFailed;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return kVerificationFailed;
  }
  return kInvalid;
}

}  // namespace dp2::cli
