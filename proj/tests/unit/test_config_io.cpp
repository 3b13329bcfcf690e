#include <cmath>
#include <filesystem>
#include <fstream>
#include <limits>
#include <sstream>

#include "doctest.h"
#include "zerocell/config.hpp"
#include "zerocell/results_io.hpp"

using namespace zerocell;

namespace {

std::string errorOf(const std::string& text) {
  try {
    parseConfigText(text, "cfg.json");
  } catch (const ConfigError& e) {
    return e.what();
  }
  return "";
}

std::vector<std::string> lines(const std::string& s) {
  std::vector<std::string> out;
  std::istringstream in(s);
  for (std::string l; std::getline(in, l);) out.push_back(l);
  return out;
}

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

const char* kD1 = R"({
  "kind": "d1Exact",
  "name": "a",
  "rootSeed": 5,
  "n": [10, 20],
  "trials": 100
})";

}  // namespace

TEST_CASE("a minimal config parses") {
  const auto f = parseConfigText(kD1);
  REQUIRE(f.experiments.size() == 1);
  const auto& cfg = std::get<D1ExactConfig>(f.experiments[0].config);
  CHECK(cfg.common.name == "a");
  CHECK(cfg.common.rootSeed == 5);
  CHECK(cfg.n == std::vector<std::size_t>{10, 20});
  CHECK(cfg.trials == 100);
}

TEST_CASE("syntax errors carry a line number") {
  const std::string msg = errorOf("{\n  \"kind\": \"d1Exact\",\n  \"n\": [1,, 2]\n}");
  CHECK(msg.rfind("cfg.json:3:", 0) == 0);
  CHECK(msg.find("invalid JSON") != std::string::npos);
}

TEST_CASE("schema errors name the field and its line") {
  const std::string unknown = errorOf("{\n  \"kind\": \"d1Exact\",\n  \"n\": [10],\n  \"trails\": 5\n}");
  CHECK(unknown.rfind("cfg.json:4: /trails: unknown field", 0) == 0);

  const std::string badKind = errorOf(R"({"kind": "nope"})");
  CHECK(badKind.find("/kind") != std::string::npos);

  const std::string missing = errorOf(R"({"kind": "d1Exact"})");
  CHECK(missing.find("\"n\"") != std::string::npos);

  const std::string notMonotone = errorOf(R"({"kind": "d1Exact", "n": [10, 100, 50]})");
  CHECK(notMonotone.find("/n") != std::string::npos);
}

TEST_CASE("alpha must exceed -1") {
  const std::string msg = errorOf(R"({
  "kind": "erosionLimit",
  "K": {"type": "ball", "center": [0, 0], "radius": 1},
  "density": {"kind": "radialPowerBall", "component": 0,
              "alpha": -1},
  "L": {"type": "ball", "center": [0, 0], "radius": 1},
  "eps": [0.1]
})");
  CHECK(msg.find("alpha > -1") != std::string::npos);
  CHECK(msg.find("/density/alpha") != std::string::npos);
  CHECK(msg.rfind("cfg.json:5:", 0) == 0);
}

TEST_CASE("multi-experiment files") {
  const std::string text = R"({"rootSeed": 77, "experiments": [
    {"kind": "d1Exact", "name": "x", "n": [10]},
    {"kind": "d1Exact", "name": "y", "rootSeed": 3, "n": [10]}]})";
  auto f = parseConfigText(text);
  REQUIRE(f.experiments.size() == 2);
  CHECK(commonOf(f.experiments[0].config).rootSeed == 77);
  CHECK(commonOf(f.experiments[1].config).rootSeed == 3);
  overrideSeed(f, 42);
  for (const auto& e : f.experiments) CHECK(commonOf(e.config).rootSeed == 42);

  const std::string dup = errorOf(R"({"experiments": [{"kind": "d1Exact", "n": [10]}, {"kind": "d1Exact", "n": [10]}]})");
  CHECK(dup.find("duplicate") != std::string::npos);
}

TEST_CASE("every shipped config parses") {
  for (const auto& entry : std::filesystem::directory_iterator(ZEROCELL_CONFIG_DIR)) {
    if (entry.path().extension() != ".json") continue;
    CAPTURE(entry.path().string());
    CHECK_NOTHROW(loadConfigFile(entry.path().string()));
  }
  CHECK_THROWS_AS(loadConfigFile("/nonexistent/config.json"), ConfigError);
}

TEST_CASE("pointer line map") {
  const auto m = jsonPointerLines("{\n \"a\": [1,\n 2],\n \"b\": {\"c~/\": 3}\n}");
  CHECK(m.at("") == 1);
  CHECK(m.at("/a") == 2);
  CHECK(m.at("/a/1") == 3);
  CHECK(m.at("/b/c~0~1") == 4);
}

TEST_CASE("double formatting") {
  CHECK(formatDouble(0.5) == "0.5");
  CHECK(formatDouble(1.0) == "1");
  CHECK(formatDouble(0.1) == "0.10000000000000001");
  CHECK(formatDouble(std::numeric_limits<double>::quiet_NaN()) == "nan");
  CHECK(formatDouble(INFINITY) == "inf");
  CHECK(formatDouble(-INFINITY) == "-inf");
  // Round trip for arbitrary values.
  for (double x : {1.0 / 3.0, 2.718281828459045, 1e-300, -6.02e23}) CHECK(std::stod(formatDouble(x)) == x);
}

TEST_CASE("csv layout") {
  CHECK(rowsToCsv({}) == std::string(kCsvHeader) + "\n");
  const ResultRow r = makeRow("e/x", 100, 0.25, 0.0, 0.25, {4.0, 0.0}, 123, 1000);
  const auto ls = lines(rowsToCsv({r, r}));
  REQUIRE(ls.size() == 3);
  CHECK(ls[0] == kCsvHeader);
  CHECK(ls[1] == "e/x,100,0.25,0,0.25,nan,true,123,1000");
  CHECK(ls[2] == ls[1]);
}

TEST_CASE("manifest and atomic output") {
  auto f = parseConfigText(kD1, "a.json");
  std::vector<ExperimentOutcome> outcomes;
  for (const auto& e : f.experiments) outcomes.push_back({e, runExperiment(e.config)});
  RunRecord rec{"a.json", 5, 2, "out", utcTimestamp(), 0.5};
  const Json m = manifestJson(rec, f, outcomes);
  CHECK(m.at("experiments").size() == 1);
  const auto& e = m.at("experiments")[0];
  CHECK(e.at("name") == "a");
  CHECK(e.at("kind") == "d1Exact");
  CHECK(e.at("rows").size() == outcomes[0].result.rows.size());
  CHECK(m.contains("allPassed"));
  CHECK(rec.startedAt.size() == 20);
  CHECK(rec.startedAt.back() == 'Z');

  const std::string dir = std::string(ZEROCELL_TEST_TMP) + "/results_io";
  std::filesystem::remove_all(dir);
  const auto [csv, manifest] = writeResults(dir, "a", outcomes[0].result.rows, m);
  CHECK(slurp(csv) == rowsToCsv(outcomes[0].result.rows));
  CHECK(Json::parse(slurp(manifest)) == Json::parse(m.dump()));
  std::size_t files = 0;
  for (const auto& x : std::filesystem::directory_iterator(dir)) {
    (void)x;
    ++files;
  }
  CHECK(files == 2);
}
