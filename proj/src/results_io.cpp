#include "zerocell/results_io.hpp"

#include <charconv>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <ctime>
#include <filesystem>
#include <fstream>

namespace zerocell {

std::string formatDouble(double x) {
  if (std::isnan(x)) return "nan";
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, x, std::chars_format::general, 17);
  return std::string(buf, res.ptr);
}

std::string rowsToCsv(const std::vector<ResultRow>& rows) {
  std::string out = kCsvHeader;
  out += '\n';
  for (const auto& r : rows) {
    out += r.experiment;
    for (double v : {r.sweepValue, r.estimate, r.standardError, r.reference, r.zScore}) {
      out += ',';
      out += formatDouble(v);
    }
    out += r.passed ? ",true," : ",false,";
    out += std::to_string(r.seed);
    out += ',';
    out += std::to_string(r.trials);
    out += '\n';
  }
  return out;
}

namespace {

// JSON has no NaN; such values are written as null.
Json number(double x) { return std::isfinite(x) ? Json(x) : Json(nullptr); }

}  // namespace

Json manifestJson(const RunRecord& record, const ConfigFile& config, const std::vector<ExperimentOutcome>& outcomes) {
  Json m;
  m["configPath"] = record.configPath;
  m["rootSeed"] = record.rootSeed;
  m["workerCount"] = record.workerCount;
  m["outputDir"] = record.outputDir;
  m["version"] = ZEROCELL_VERSION;
  m["startedAt"] = record.startedAt;
  m["wallClockSeconds"] = record.wallClockSeconds;
  m["config"] = config.raw;
  Json list = Json::array();
  bool allPassed = true;
  for (const auto& o : outcomes) {
    const CommonConfig& c = commonOf(o.experiment.config);
    Json e;
    e["name"] = c.name;
    e["kind"] = kindOf(o.experiment.config);
    e["rootSeed"] = c.rootSeed;
    e["tolerances"] = {{"zThreshold", c.tolerances.zThreshold}, {"absTolerance", c.tolerances.absTolerance}};
    Json diag = Json::object();
    for (const auto& [k, v] : o.result.diagnostics) diag[k] = number(v);
    e["diagnostics"] = diag;
    Json rows = Json::array();
    bool passed = true;
    for (const auto& r : o.result.rows) {
      rows.push_back({{"experiment", r.experiment},
                      {"sweepValue", number(r.sweepValue)},
                      {"zThreshold", r.tolerances.zThreshold},
                      {"absTolerance", r.tolerances.absTolerance},
                      {"passed", r.passed}});
      passed = passed && r.passed;
    }
    e["rows"] = rows;
    e["passed"] = passed;
    allPassed = allPassed && passed;
    list.push_back(e);
  }
  m["experiments"] = list;
  m["allPassed"] = allPassed;
  return m;
}

void writeFileAtomic(const std::string& path, const std::string& contents) {
  namespace fs = std::filesystem;
  const fs::path target(path);
  if (target.has_parent_path()) fs::create_directories(target.parent_path());
  fs::path tmp = target;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw ConfigError("cannot write " + tmp.string());
    out << contents;
    out.flush();
    if (!out) throw ConfigError("failed writing " + tmp.string());
  }
  std::error_code ec;
  fs::rename(tmp, target, ec);
  if (ec) {
    fs::remove(tmp);
    throw ConfigError("cannot move " + tmp.string() + " to " + path + ": " + ec.message());
  }
}

std::pair<std::string, std::string> writeResults(const std::string& dir, const std::string& stem,
                                                 const std::vector<ResultRow>& rows, const Json& manifest) {
  namespace fs = std::filesystem;
  const std::string csv = (fs::path(dir) / (stem + ".csv")).string();
  const std::string man = (fs::path(dir) / (stem + ".manifest.json")).string();
  writeFileAtomic(csv, rowsToCsv(rows));
  writeFileAtomic(man, manifest.dump(2) + "\n");
  return {csv, man};
}

std::string utcTimestamp() {
  const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

}  // namespace zerocell
