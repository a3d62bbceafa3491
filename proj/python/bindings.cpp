#include "dp2/counting.hpp"
#include "dp2/errors.hpp"
#include "dp2/oracle.hpp"
#include "dp2/pipeline.hpp"
#include "dp2/verify.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <string>

namespace py = pybind11;
using namespace dp2;

namespace {

py::int_ to_py(const BigInt& v) {
  return py::reinterpret_steal<py::int_>(PyLong_FromString(v.str().c_str(), nullptr, 10));
}

OddPrimePower odd_q(std::int64_t q) { return OddPrimePower::make(q); }

Session make_session(const std::optional<std::string>& cache_dir, bool use_cache) {
  SessionOptions o;
  if (cache_dir) o.cache_dir = *cache_dir;
  o.use_cache = use_cache;
  return Session(o);
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Counts of degree 2 Del Pezzo surfaces over finite fields of odd characteristic.";

  py::register_exception<InvalidInput>(m, "InvalidInput", PyExc_ValueError);
  py::register_exception<DataError>(m, "DataError", PyExc_RuntimeError);
  py::register_exception<VerificationFailure>(m, "VerificationFailure", PyExc_RuntimeError);

  m.def("class_count", [](const std::string& label, std::int64_t q) { return to_py(evaluate_class_count(label, odd_q(q))); },
        py::arg("label"), py::arg("q"));
  m.def("trace_count", [](int a, std::int64_t q) { return to_py(count_by_trace(a, odd_q(q))); }, py::arg("trace"),
        py::arg("q"));
  m.def("surface_point_count", [](int a, std::int64_t q) { return to_py(surface_point_count(a, odd_q(q))); },
        py::arg("trace"), py::arg("q"));
  m.def("possible_traces", [] { return ClassData::embedded().possible_traces(); });
  m.def("class_labels", [] {
    std::vector<std::string> out;
    for (const auto& c : ClassData::embedded().classes()) out.push_back(c.name);
    return out;
  });
  m.def("printed_polynomial", [](const std::string& label) { return ClassData::embedded().class_record(label).table1_poly.printed(); },
        py::arg("label"));
  m.def("existence_exceptions", [](std::int64_t q) {
    const auto ex = existence_exceptions(odd_q(q));
    return py::make_tuple(ex.class_exceptions, ex.trace_exceptions);
  }, py::arg("q"));
  m.def("published_exceptions", [](std::int64_t q) {
    const auto ex = published_exceptions(odd_q(q));
    return py::make_tuple(ex.class_exceptions, ex.trace_exceptions);
  }, py::arg("q"));
  m.def("validate_data", [] { return ClassData::embedded().validate().ok(); });
  m.def("pgl3_order", [](std::int64_t q) { return to_py(pgl3_order(q)); }, py::arg("q"));
  m.def("feasibility", [](const std::string& ct, std::int64_t q) { return to_py(feasibility(CycleType::parse(ct), q)); },
        py::arg("cycle_type"), py::arg("q"));

  m.def("oracle_identity_json", [](std::int64_t q, std::uint64_t budget, unsigned jobs) {
    OracleOptions o;
    o.budget = budget;
    o.jobs = jobs;
    py::gil_scoped_release release;
    return count_identity(odd_q(q), o).to_json().dump();
  }, py::arg("q"), py::arg("budget") = OracleOptions{}.budget, py::arg("jobs") = 1u);

  m.def("oracle_twisted_json", [](const std::string& ct, std::int64_t q, std::uint64_t budget, unsigned jobs,
                                  std::optional<std::string> cache_dir, bool use_cache) {
    OracleOptions o;
    o.budget = budget;
    o.jobs = jobs;
    const auto cycle = CycleType::parse(ct);
    const auto oq = odd_q(q);
    if (feasibility(cycle, q) > budget)
      throw BudgetExceeded("estimated search size " + feasibility(cycle, q).str() + " exceeds the budget");
    py::gil_scoped_release release;
    Session s = make_session(cache_dir, use_cache);
    try {
      return count_twisted(cycle, oq, s.report().table, nullptr, o).to_json().dump();
    } catch (const VerificationFailure&) {
      return count_twisted(cycle, oq, s.report().table, &s.group(), o).to_json().dump();
    }
  }, py::arg("cycle_type"), py::arg("q"), py::arg("budget") = OracleOptions{}.budget, py::arg("jobs") = 1u,
     py::arg("cache_dir") = py::none(), py::arg("use_cache") = true);

  m.def("class_report_json", [](std::optional<std::string> cache_dir, bool use_cache) {
    py::gil_scoped_release release;
    Session s = make_session(cache_dir, use_cache);
    return s.report().to_json().dump();
  }, py::arg("cache_dir") = py::none(), py::arg("use_cache") = true);

  m.def("verify_json", [](const std::string& suite, std::optional<std::string> cache_dir, bool use_cache) {
    py::gil_scoped_release release;
    Session s = make_session(cache_dir, use_cache);
    std::vector<Check> all;
    auto add = [&](std::vector<Check> v) { all.insert(all.end(), v.begin(), v.end()); };
    if (suite == "data") add(verify_data(s.raw_data()));
    else if (suite == "group") add(verify_group(s));
    else if (suite == "aggregation") add(verify_aggregation(s));
    else if (suite == "zeros") add(verify_zeros(s));
    else if (suite == "oracle") add(verify_oracle(s));
    else throw InvalidInput("unknown suite '" + suite + "'");
    return checks_to_json(all).dump();
  }, py::arg("suite"), py::arg("cache_dir") = py::none(), py::arg("use_cache") = true);
}
