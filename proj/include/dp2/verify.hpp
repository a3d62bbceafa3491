#pragma once

// Verification suites behind `dp2 verify`. Each returns named checks; none
// throws on a failed check.

#include "dp2/oracle.hpp"
#include "dp2/pipeline.hpp"

#include <nlohmann/json.hpp>

#include <string>
#include <vector>

namespace dp2 {

struct Check {
  std::string suite;
  std::string name;
  bool passed = false;
  std::string detail;
  double seconds = 0;
};

nlohmann::json checks_to_json(const std::vector<Check>& checks);

/// Transcription integrity of the embedded tables.
std::vector<Check> verify_data(const ClassData& data);
/// Roots, group order, determinant-one subgroup, classes and pairing.
std::vector<Check> verify_group(Session& session);
/// Trace table from class table, letter assignment, virtual characters.
std::vector<Check> verify_aggregation(Session& session, std::int64_t q_max = 1000);
/// Zero sets, symmetry, nonnegativity and point counts over odd q <= q_max.
std::vector<Check> verify_zeros(Session& session, std::int64_t q_max = 1000);

struct OracleSuite {
  std::vector<std::int64_t> identity_q = {3, 5, 7, 9, 11, 13};
  std::vector<std::string> cycle_types = {"7", "6,1", "3,3,1", "2,2,2,1", "2,2,1,1,1", "3,2,1,1", "4,3"};
  std::int64_t twisted_q = 3;
  /// Trivial cycle type through the twisted search, compared with the frame count.
  std::vector<std::int64_t> path_independence_q = {3, 5};
  OracleOptions options;
};

std::vector<Check> verify_oracle(Session& session, const OracleSuite& suite = {});

}  // namespace dp2
