#pragma once

#include <string>
#include <vector>

#include "zerocell/config.hpp"
#include "zerocell/experiments.hpp"

namespace zerocell {

/// 17 significant digits, '.' separator, locale independent; "nan", "inf" and "-inf" for non-finite values.
std::string formatDouble(double x);

inline constexpr const char* kCsvHeader = "experiment,sweep_value,estimate,stderr,reference,z_score,passed,seed,trials";

/// CSV text (header plus one line per row). Depends only on the rows.
std::string rowsToCsv(const std::vector<ResultRow>& rows);

struct RunRecord {
  std::string configPath;
  std::uint64_t rootSeed = 0;
  unsigned workerCount = 1;
  std::string outputDir;
  std::string startedAt;  // ISO-8601 UTC
  double wallClockSeconds = 0.0;
};

struct ExperimentOutcome {
  ParsedExperiment experiment;
  ExperimentResult result;
};

Json manifestJson(const RunRecord& record, const ConfigFile& config, const std::vector<ExperimentOutcome>& outcomes);

/// Writes `<dir>/<stem>.csv` and `<dir>/<stem>.manifest.json`, each through a
/// temporary file renamed into place. Returns the two paths.
std::pair<std::string, std::string> writeResults(const std::string& dir, const std::string& stem,
                                                 const std::vector<ResultRow>& rows, const Json& manifest);

/// Writes a file atomically (temporary sibling + rename).
void writeFileAtomic(const std::string& path, const std::string& contents);

std::string utcTimestamp();

}  // namespace zerocell
