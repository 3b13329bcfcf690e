#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "zerocell/experiments.hpp"

namespace zerocell {

using Json = nlohmann::json;

struct ParsedExperiment {
  ExperimentConfig config;
  /// The experiment's JSON object as written.
  Json raw;
};

struct ConfigFile {
  std::vector<ParsedExperiment> experiments;
  Json raw;
};

/// Parses a config document: a single experiment object, or
/// {"rootSeed": ..., "experiments": [...]}. Errors are ConfigError messages
/// of the form "<source>:<line>: <json pointer>: <reason>".
ConfigFile parseConfigText(const std::string& text, const std::string& sourceName = "<config>");
ConfigFile loadConfigFile(const std::string& path);

/// Replaces the root seed of every experiment.
void overrideSeed(ConfigFile& file, std::uint64_t seed);

// Building blocks, also used by the Python bindings. `where` is a JSON pointer
// used in error messages.
SetModel parseSetModel(const Json& j, const std::string& where = "");
BoundaryDensitySpec parseDensity(const Json& j, const SetModel& k, const std::string& where = "");
VCompact parseBody(const Json& j, const std::string& where = "");
DirectionalIntensity parseDirectional(const Json& j, const std::string& where = "");
Box parseBox(const Json& j, const std::string& where = "");
ExperimentConfig parseExperiment(const Json& j, std::optional<std::uint64_t> inheritedSeed = std::nullopt,
                                 const std::string& where = "");

/// Line (1-based) of the value at each JSON pointer of a well-formed document.
std::map<std::string, int> jsonPointerLines(const std::string& text);

}  // namespace zerocell
