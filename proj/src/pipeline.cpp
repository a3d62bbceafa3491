#include "dp2/pipeline.hpp"

#include "dp2/errors.hpp"

#include <cstdlib>
#include <fstream>

namespace dp2 {

nlohmann::json ClassReport::to_json() const {
  nlohmann::json j = table.to_json();
  j["data_hash"] = data_hash;
  j["letter_assignment"] = letters.to_json();
  return j;
}

ClassReport ClassReport::from_json(const nlohmann::json& j) {
  ClassReport r;
  r.table = ClassTable::from_json(j);
  r.letters = LetterResolution::from_json(j.at("letter_assignment"));
  r.data_hash = j.at("data_hash").get<std::string>();
  return r;
}

ClassReport build_class_report(const WeylGroup& group, const ClassData& data) {
  ClassReport r;
  r.table = group.class_table();
  r.table.assign_default_names();
  r.letters = resolve_letter_assignment(r.table, data);
  r.data_hash = data.fingerprint();
  return r;
}

std::filesystem::path default_cache_dir() {
  if (const char* x = std::getenv("XDG_CACHE_HOME"); x && *x) return std::filesystem::path(x) / "delpezzo2";
  if (const char* h = std::getenv("HOME"); h && *h) return std::filesystem::path(h) / ".cache" / "delpezzo2";
  return ".dp2-cache";
}

Session::Session(SessionOptions options, const ClassData& data) : options_(std::move(options)), data_(data) {}

std::filesystem::path Session::cache_file() const {
  const auto dir = options_.cache_dir ? *options_.cache_dir : default_cache_dir();
  return dir / ("class_report-" + generator_hash() + ".json");
}

const WeylGroup& Session::group() {
  if (!group_) group_ = std::make_unique<WeylGroup>(options_.enumeration);
  return *group_;
}

const ClassReport& Session::report() {
  if (report_) return *report_;
  const std::string hash = data_.fingerprint();
  const auto path = cache_file();
  if (options_.use_cache && std::filesystem::exists(path)) {
    try {
      std::ifstream in(path);
      auto cached = ClassReport::from_json(nlohmann::json::parse(in));
      if (cached.data_hash == hash && cached.table.size() == 60) {
        report_ = std::move(cached);
        from_cache_ = true;
        return *report_;
      }
    } catch (const std::exception&) {
      // unreadable or stale; rebuild below
    }
  }
  report_ = build_class_report(group(), data_);
  from_cache_ = false;
  if (options_.use_cache) {
    std::error_code ec;
    std::filesystem::create_directories(path.parent_path(), ec);
    const auto tmp = path.string() + ".tmp";
    std::ofstream out(tmp);
    if (out) {
      out << report_->to_json().dump() << '\n';
      out.close();
      std::filesystem::rename(tmp, path, ec);
    }
  }
  return *report_;
}

const ClassData& Session::populated_data() {
  if (!populated_) {
    populated_ = data_;
    populated_->populate(report().table);
  }
  return *populated_;
}

}  // namespace dp2
