#pragma once

// Glue between the group computation and the embedded tables: build or load
// the named class table, cached on disk.

#include "dp2/class_data.hpp"
#include "dp2/counting.hpp"
#include "dp2/weyl.hpp"

#include <nlohmann/json.hpp>

#include <filesystem>
#include <memory>
#include <optional>
#include <string>

namespace dp2 {

struct ClassReport {
  ClassTable table;
  LetterResolution letters;
  std::string data_hash;

  nlohmann::json to_json() const;
  static ClassReport from_json(const nlohmann::json& j);
};

/// Names the group's classes and fixes the letters against `data`.
ClassReport build_class_report(const WeylGroup& group, const ClassData& data);

struct SessionOptions {
  std::optional<std::filesystem::path> cache_dir;  ///< defaults to default_cache_dir()
  bool use_cache = true;
  EnumerationOptions enumeration;
};

/// $XDG_CACHE_HOME/delpezzo2, else $HOME/.cache/delpezzo2, else ./.dp2-cache.
std::filesystem::path default_cache_dir();

/// Lazily built group and class report. Not thread-safe.
class Session {
 public:
  explicit Session(SessionOptions options = {}, const ClassData& data = ClassData::embedded());

  const ClassData& raw_data() const { return data_; }
  /// Embedded data with sizes and characters filled from the class report.
  const ClassData& populated_data();
  const ClassReport& report();
  const WeylGroup& group();
  bool group_built() const { return group_ != nullptr; }
  /// True if report() was served from the cache.
  bool report_from_cache() const { return from_cache_; }
  std::filesystem::path cache_file() const;

 private:
  SessionOptions options_;
  ClassData data_;
  std::unique_ptr<WeylGroup> group_;
  std::optional<ClassReport> report_;
  std::optional<ClassData> populated_;
  bool from_cache_ = false;
};

}  // namespace dp2
