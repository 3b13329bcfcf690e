#include <charconv>
#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "zerocell/config.hpp"
#include "zerocell/parallel.hpp"
#include "zerocell/results_io.hpp"

namespace {

using namespace zerocell;

constexpr int kExitPass = 0;
constexpr int kExitError = 1;
constexpr int kExitFailedRows = 2;

std::optional<std::uint64_t> seedFromEnvironment() {
  const char* raw = std::getenv("ZEROCELL_SEED");
  if (!raw || !*raw) return std::nullopt;
  const std::string s(raw);
  std::uint64_t v = 0;
  const auto res = std::from_chars(s.data(), s.data() + s.size(), v);
  if (res.ec != std::errc() || res.ptr != s.data() + s.size())
    throw ConfigError("ZEROCELL_SEED must be an unsigned 64-bit integer (got \"" + s + "\")");
  return v;
}

// The seed written to the manifest: an override if present, else the
// document-level seed, else the first experiment's.
std::uint64_t recordedSeed(const ConfigFile& cfg, std::optional<std::uint64_t> overrideValue) {
  if (overrideValue) return *overrideValue;
  if (cfg.raw.contains("experiments") && cfg.raw.contains("rootSeed") && cfg.raw["rootSeed"].is_number_unsigned())
    return cfg.raw["rootSeed"].get<std::uint64_t>();
  return commonOf(cfg.experiments.front().config).rootSeed;
}

int runCommand(const std::string& configPath, std::optional<std::uint64_t> cliSeed, unsigned workers,
               const std::string& outDir) {
  const auto started = std::chrono::steady_clock::now();
  const std::string startedAt = utcTimestamp();
  ConfigFile cfg = loadConfigFile(configPath);
  std::optional<std::uint64_t> seed = cliSeed ? cliSeed : seedFromEnvironment();
  if (seed) overrideSeed(cfg, *seed);

  std::vector<ExperimentOutcome> outcomes;
  std::vector<ResultRow> rows;
  bool allPassed = true;
  for (const auto& e : cfg.experiments) {
    const CommonConfig& common = commonOf(e.config);
    std::cout << "running " << common.name << " (" << kindOf(e.config) << ", seed " << common.rootSeed << ")"
              << std::endl;
    ExperimentResult result = runExperiment(e.config, RunOptions{workers});
    std::size_t failed = 0;
    for (const auto& r : result.rows) {
      if (!r.passed) {
        ++failed;
        std::cout << "  FAIL " << r.experiment << " sweep=" << formatDouble(r.sweepValue)
                  << " estimate=" << formatDouble(r.estimate) << " reference=" << formatDouble(r.reference)
                  << " z=" << formatDouble(r.zScore) << "\n";
      }
    }
    std::cout << "  " << result.rows.size() - failed << "/" << result.rows.size() << " rows passed" << std::endl;
    allPassed = allPassed && failed == 0;
    rows.insert(rows.end(), result.rows.begin(), result.rows.end());
    outcomes.push_back({e, std::move(result)});
  }

  RunRecord record;
  record.configPath = configPath;
  record.rootSeed = recordedSeed(cfg, seed);
  record.workerCount = workers;
  record.outputDir = outDir;
  record.startedAt = startedAt;
  record.wallClockSeconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();
  const std::string stem = std::filesystem::path(configPath).stem().string();
  const auto [csv, manifest] = writeResults(outDir, stem, rows, manifestJson(record, cfg, outcomes));
  std::cout << "wrote " << csv << "\nwrote " << manifest << std::endl;
  return allPassed ? kExitPass : kExitFailedRows;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Zero-cell limits of intersections of random translates"};
  app.require_subcommand(1);

  std::string configPath;
  std::optional<std::uint64_t> seed;
  unsigned workers = zerocell::defaultWorkerCount();
  std::string outDir = "results";

  auto* run = app.add_subcommand("run", "Run the experiments in a config file and write CSV + manifest");
  run->add_option("--config", configPath, "Config JSON file")->required();
  run->add_option("--seed", seed, "Root seed (overrides ZEROCELL_SEED and the config)");
  run->add_option("--workers", workers, "Worker threads (default: available parallelism)")
      ->check(CLI::PositiveNumber);
  run->add_option("--out", outDir, "Output directory");

  auto* validate = app.add_subcommand("validate", "Check a config file without running it");
  validate->add_option("--config", configPath, "Config JSON file")->required();

  auto* list = app.add_subcommand("list-experiments", "Print the experiment kinds");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitError;
  }

  try {
    if (list->parsed()) {
      for (const auto& k : zerocell::experimentKinds()) std::cout << k << "\n";
      return kExitPass;
    }
    if (validate->parsed()) {
      const auto cfg = zerocell::loadConfigFile(configPath);
      std::cout << configPath << ": ok (" << cfg.experiments.size() << " experiment"
                << (cfg.experiments.size() == 1 ? "" : "s") << ")\n";
      return kExitPass;
    }
    return runCommand(configPath, seed, workers, outDir);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitError;
  }
}
