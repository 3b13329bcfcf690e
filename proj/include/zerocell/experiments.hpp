#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "zerocell/boundary_measures.hpp"
#include "zerocell/geometry.hpp"
#include "zerocell/intersection_model.hpp"

namespace zerocell {

/// Pass rule shared by all rows: |z| <= zThreshold or |estimate - reference| <= absTolerance.
struct Tolerances {
  double zThreshold = 4.0;
  double absTolerance = 0.0;
};

struct ResultRow {
  std::string experiment;
  double sweepValue = 0.0;
  double estimate = 0.0;
  double standardError = 0.0;
  double reference = 0.0;
  /// (estimate - reference) / standardError; NaN when standardError is 0.
  double zScore = 0.0;
  bool passed = false;
  std::uint64_t seed = 0;
  std::size_t trials = 0;
  Tolerances tolerances;
};

/// Builds a row and its verdict from the raw numbers.
ResultRow makeRow(std::string experiment, double sweepValue, double estimate, double standardError,
                  double reference, const Tolerances& tolerances, std::uint64_t seed, std::size_t trials);

/// Recomputes the verdict from the row's own fields.
bool rowPasses(const ResultRow& row);

struct CommonConfig {
  std::string name;
  std::uint64_t rootSeed = 0;
  Tolerances tolerances;
};

struct ErosionLimitConfig {
  CommonConfig common;
  SetModel k;
  BoundaryDensitySpec spec;
  VCompact l;
  std::vector<double> eps;
  ErosionMethod method = ErosionMethod::Auto;
  std::size_t samples = 1'000'000;
};

struct InclusionConvergenceConfig {
  CommonConfig common;
  SetModel k;
  BoundaryDensitySpec spec;
  VCompact l;
  std::vector<std::size_t> n;
  std::size_t trials = 10'000;
  ErosionMethod method = ErosionMethod::Auto;
  std::size_t samples = 1'000'000;
  /// Absolute tolerance for the finite-n closed form against its limit.
  double closedTolerance = 1e-2;
};

struct ZeroCellSelfCheckConfig {
  CommonConfig common;
  DirectionalIntensity nu;
  double alpha = 0.0;
  /// Base test body; row i uses rho[i] * l.
  VCompact l;
  std::vector<double> rho;
  std::size_t trials = 10'000;
  /// Half-width of the cell window; defaults to the negligible-tail radius.
  std::optional<double> windowHalfWidth;
  std::optional<bool> expectUnbounded;
  bool includeOrigin = true;
};

struct VolumeMomentsConfig {
  CommonConfig common;
  SetModel k;
  BoundaryDensitySpec spec;
  /// Directional measure of the limit; nuHat(k, spec) when absent.
  std::optional<DirectionalIntensity> nu;
  std::vector<std::size_t> n;
  std::vector<unsigned> moments{1};
  Box window;
  std::size_t trials = 10'000;
  std::size_t probes = 4096;
};

struct TwoBallAnomalyConfig {
  CommonConfig common;
  /// Two ball components; mu lives on component 0.
  SetModel k;
  std::vector<std::size_t> n;
  std::size_t trials = 1000;
  double windowHalfWidth = 15.0;
  double inclusionRadius = 0.25;
  std::size_t inclusionTrials = 10'000;
  std::size_t probes = 4096;
};

struct D1ExactConfig {
  CommonConfig common;
  std::vector<std::size_t> n;
  std::size_t trials = 10'000;
  std::vector<double> rho;
};

using ExperimentConfig = std::variant<ErosionLimitConfig, InclusionConvergenceConfig, ZeroCellSelfCheckConfig,
                                      VolumeMomentsConfig, TwoBallAnomalyConfig, D1ExactConfig>;

/// The six kind names, in a fixed order.
const std::vector<std::string>& experimentKinds();
std::string kindOf(const ExperimentConfig& config);
const CommonConfig& commonOf(const ExperimentConfig& config);
CommonConfig& commonOf(ExperimentConfig& config);

struct RunOptions {
  unsigned workers = 1;
};

struct ExperimentResult {
  std::vector<ResultRow> rows;
  /// Named side values (flags, truncation rates) recorded next to the rows.
  std::vector<std::pair<std::string, double>> diagnostics;
};

ExperimentResult runErosionLimit(const ErosionLimitConfig& cfg, const RunOptions& options = {});
ExperimentResult runInclusionConvergence(const InclusionConvergenceConfig& cfg, const RunOptions& options = {});
ExperimentResult runZeroCellSelfCheck(const ZeroCellSelfCheckConfig& cfg, const RunOptions& options = {});
ExperimentResult runVolumeMoments(const VolumeMomentsConfig& cfg, const RunOptions& options = {});
ExperimentResult runTwoBallAnomaly(const TwoBallAnomalyConfig& cfg, const RunOptions& options = {});
ExperimentResult runD1Exact(const D1ExactConfig& cfg, const RunOptions& options = {});

ExperimentResult runExperiment(const ExperimentConfig& config, const RunOptions& options = {});

/// E (min(T_-, c_-) + min(T_+, c_+))^m for the d = 1 zero cell with atoms
/// weights w_- at -1 and w_+ at +1, where P(T > t) = exp(-w t^(alpha+1)/(alpha+1)).
double d1ZeroCellMoment(double weightMinus, double weightPlus, double alpha, double cMinus, double cPlus, unsigned m);

/// 1% critical value of the asymptotic Kolmogorov distribution.
inline constexpr double kKolmogorovCritical1Percent = 1.6276;

}  // namespace zerocell
