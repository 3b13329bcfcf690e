#include "zerocell/experiments.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "zerocell/parallel.hpp"
#include "zerocell/statistics.hpp"

namespace zerocell {

namespace {

std::string tagNumber(double x) {
  std::ostringstream os;
  os.imbue(std::locale::classic());
  os << x;
  return os.str();
}

std::string rowName(const CommonConfig& c, const std::string& tag) { return c.name + "/" + tag; }

double sq(double x) { return x * x; }

// Standard deviation of a binomial proportion under the reference value.
double scoreSigma(double p0, std::size_t trials) {
  return std::sqrt(std::max(0.0, p0 * (1.0 - p0)) / static_cast<double>(trials));
}

template <class T>
void requireSweep(const std::vector<T>& sweep, const char* what) {
  if (sweep.empty()) throw ConfigError(std::string(what) + " sweep must not be empty");
}

}  // namespace

ResultRow makeRow(std::string experiment, double sweepValue, double estimate, double standardError,
                  double reference, const Tolerances& tolerances, std::uint64_t seed, std::size_t trials) {
  ResultRow row;
  row.experiment = std::move(experiment);
  row.sweepValue = sweepValue;
  row.estimate = estimate;
  row.standardError = standardError;
  row.reference = reference;
  row.zScore = standardError > 0.0 ? (estimate - reference) / standardError : std::numeric_limits<double>::quiet_NaN();
  row.seed = seed;
  row.trials = trials;
  row.tolerances = tolerances;
  row.passed = rowPasses(row);
  return row;
}

bool rowPasses(const ResultRow& row) {
  const double z = row.standardError > 0.0 ? (row.estimate - row.reference) / row.standardError
                                           : std::numeric_limits<double>::quiet_NaN();
  return std::abs(z) <= row.tolerances.zThreshold ||
         std::abs(row.estimate - row.reference) <= row.tolerances.absTolerance;
}

const std::vector<std::string>& experimentKinds() {
  static const std::vector<std::string> kinds{"erosionLimit",  "inclusionConvergence", "zeroCellSelfCheck",
                                              "volumeMoments", "twoBallAnomaly",       "d1Exact"};
  return kinds;
}

std::string kindOf(const ExperimentConfig& config) { return experimentKinds()[config.index()]; }

const CommonConfig& commonOf(const ExperimentConfig& config) {
  return std::visit([](const auto& c) -> const CommonConfig& { return c.common; }, config);
}

CommonConfig& commonOf(ExperimentConfig& config) {
  return std::visit([](auto& c) -> CommonConfig& { return c.common; }, config);
}

// ---------------------------------------------------------------------------

ExperimentResult runErosionLimit(const ErosionLimitConfig& cfg, const RunOptions& options) {
  requireSweep(cfg.eps, "eps");
  for (double e : cfg.eps)
    if (!(e > 0.0)) throw ConfigError("eps values must be positive");
  const DirectionalIntensity nu = nuHat(cfg.k, cfg.spec);
  const QuadratureValue lambda = lambdaFunctionalDetailed(nu, cfg.l, cfg.spec.alpha());
  std::vector<double> eps = cfg.eps;
  std::sort(eps.begin(), eps.end(), std::greater<>());

  ExperimentResult out;
  for (std::size_t i = 0; i < eps.size(); ++i) {
    const std::uint64_t seed = deriveSeed(cfg.common.rootSeed, i);
    ErosionOptions eo;
    eo.method = cfg.method;
    eo.samples = cfg.samples;
    eo.rootSeed = seed;
    eo.workers = options.workers;
    const ErosionMeasure mu = erosionMu(cfg.k, cfg.spec, cfg.l, std::pow(eps[i], cfg.spec.gamma()), eo);
    const double se = std::hypot(mu.standardError.value_or(0.0) / eps[i], lambda.standardError);
    const std::size_t trials = mu.method == "exact" ? 0 : cfg.samples;
    out.rows.push_back(makeRow(rowName(cfg.common, "erosion_ratio"), eps[i], mu.value / eps[i], se, lambda.value,
                               cfg.common.tolerances, seed, trials));
  }
  out.diagnostics.emplace_back("lambda", lambda.value);
  return out;
}

ExperimentResult runInclusionConvergence(const InclusionConvergenceConfig& cfg, const RunOptions& options) {
  requireSweep(cfg.n, "n");
  if (cfg.trials == 0) throw ConfigError("trials must be >= 1");
  const DirectionalIntensity nu = nuHat(cfg.k, cfg.spec);
  const QuadratureValue lambda = lambdaFunctionalDetailed(nu, cfg.l, cfg.spec.alpha());
  const double limit = std::exp(-lambda.value);
  const double limitSe = limit * lambda.standardError;

  ExperimentResult out;
  for (std::size_t i = 0; i < cfg.n.size(); ++i) {
    const std::size_t n = cfg.n[i];
    const double nv = static_cast<double>(n);
    const std::uint64_t seed = deriveSeed(cfg.common.rootSeed, i);
    const BinomialEstimate emp = empiricalInclusion(cfg.l, cfg.k, cfg.spec, n, cfg.trials, seed, options.workers);
    ErosionOptions eo;
    eo.method = cfg.method;
    eo.samples = cfg.samples;
    eo.rootSeed = deriveSeed(seed, 1);
    eo.workers = options.workers;
    const ClosedFormInclusion closed = closedFormInclusion(cfg.k, cfg.spec, cfg.l, n, eo);

    out.rows.push_back(makeRow(rowName(cfg.common, "empirical_vs_limit"), nv, emp.pHat,
                               std::hypot(scoreSigma(limit, cfg.trials), limitSe), limit, cfg.common.tolerances, seed,
                               cfg.trials));
    out.rows.push_back(makeRow(rowName(cfg.common, "empirical_vs_closed"), nv, emp.pHat,
                               std::hypot(scoreSigma(closed.value, cfg.trials), closed.standardError), closed.value,
                               cfg.common.tolerances, seed, cfg.trials));
    Tolerances closedTol = cfg.common.tolerances;
    closedTol.absTolerance = cfg.closedTolerance;
    out.rows.push_back(makeRow(rowName(cfg.common, "closed_vs_limit"), nv, closed.value,
                               std::hypot(closed.standardError, limitSe), limit, closedTol, seed,
                               closed.method == "exact" ? 0 : cfg.samples));
  }
  out.diagnostics.emplace_back("lambda", lambda.value);
  return out;
}

ExperimentResult runZeroCellSelfCheck(const ZeroCellSelfCheckConfig& cfg, const RunOptions& options) {
  requireSweep(cfg.rho, "rho");
  if (cfg.trials == 0) throw ConfigError("trials must be >= 1");
  const std::size_t d = cfg.nu.dim();
  if (cfg.l.dim() != d) throw ConfigError("test body dimension does not match the directional measure");
  const bool unbounded = hemisphereContained(cfg.nu);

  double rMax = 0.0;
  for (double r : cfg.rho) {
    if (!(r >= 0.0)) throw ConfigError("rho values must be >= 0");
    rMax = std::max(rMax, r * cfg.l.radiusBound());
  }
  const double halfWidth = cfg.windowHalfWidth.value_or(std::max(defaultWindowRadius(cfg.nu, cfg.alpha), rMax));
  if (!(halfWidth > 0.0) || halfWidth < rMax)
    throw ConfigError("window half-width must be positive and cover every scaled test body");
  const Box window = Box::centered(Vector(d), halfWidth);
  // Every hyperplane that can cut the window is sampled.
  const HyperplaneSampler sampler(cfg.nu, cfg.alpha, window.maxNorm());
  std::vector<VCompact> bodies;
  for (double r : cfg.rho) bodies.push_back(cfg.l.scaled(r));

  const std::uint64_t seed = deriveSeed(cfg.common.rootSeed, 0);
  const std::size_t nb = bodies.size();
  std::vector<char> included(cfg.trials * nb, 0), origin(cfg.trials, 0), truncated(cfg.trials, 0);
  parallelFor(cfg.trials, options.workers, [&](std::size_t t) {
    RngStream rng(seed, t);
    const ZeroCellSample cell = zeroCell(sampler.sample(rng), window, unbounded);
    origin[t] = cell.cell.contains(Vector(d)) ? 1 : 0;
    truncated[t] = cell.truncatedByWindow ? 1 : 0;
    for (std::size_t b = 0; b < nb; ++b) {
      bool inside = true;
      for (const auto& h : cell.cell.halfspaces())
        if (support(bodies[b], h.normal) > h.offset) {
          inside = false;
          break;
        }
      included[t * nb + b] = inside ? 1 : 0;
    }
  });

  ExperimentResult out;
  for (std::size_t b = 0; b < nb; ++b) {
    std::size_t hits = 0;
    for (std::size_t t = 0; t < cfg.trials; ++t) hits += static_cast<std::size_t>(included[t * nb + b]);
    const QuadratureValue lambda = lambdaFunctionalDetailed(cfg.nu, bodies[b], cfg.alpha);
    const double ref = std::exp(-lambda.value);
    const double p = static_cast<double>(hits) / static_cast<double>(cfg.trials);
    out.rows.push_back(makeRow(rowName(cfg.common, "inclusion"), cfg.rho[b], p,
                               std::hypot(scoreSigma(ref, cfg.trials), ref * lambda.standardError), ref,
                               cfg.common.tolerances, seed, cfg.trials));
  }
  std::size_t originHits = 0, truncatedCount = 0;
  for (std::size_t t = 0; t < cfg.trials; ++t) {
    originHits += static_cast<std::size_t>(origin[t]);
    truncatedCount += static_cast<std::size_t>(truncated[t]);
  }
  if (cfg.includeOrigin)
    out.rows.push_back(makeRow(rowName(cfg.common, "origin"), 0.0,
                               static_cast<double>(originHits) / static_cast<double>(cfg.trials), 0.0, 1.0,
                               Tolerances{cfg.common.tolerances.zThreshold, 0.0}, seed, cfg.trials));
  if (cfg.expectUnbounded)
    out.rows.push_back(makeRow(rowName(cfg.common, "hemisphere_flag"), 0.0, unbounded ? 1.0 : 0.0, 0.0,
                               *cfg.expectUnbounded ? 1.0 : 0.0, Tolerances{cfg.common.tolerances.zThreshold, 0.0},
                               seed, 0));
  out.diagnostics.emplace_back("possiblyUnbounded", unbounded ? 1.0 : 0.0);
  out.diagnostics.emplace_back("truncatedFraction",
                               static_cast<double>(truncatedCount) / static_cast<double>(cfg.trials));
  out.diagnostics.emplace_back("windowHalfWidth", halfWidth);
  return out;
}

double d1ZeroCellMoment(double weightMinus, double weightPlus, double alpha, double cMinus, double cPlus, unsigned m) {
  requireValidAlpha(alpha);
  if (!(cMinus >= 0.0) || !(cPlus >= 0.0)) throw InvalidArgument("window must contain the origin");
  const double a1 = alpha + 1.0;
  // E min(T, c)^k = integral over (0, c) of k a^(k-1) P(T > a).
  auto truncatedMoment = [&](double w, double c, unsigned k) {
    if (k == 0) return 1.0;
    if (c == 0.0) return 0.0;
    constexpr std::size_t kIntervals = 20000;
    const double h = c / kIntervals;
    auto f = [&](double a) {
      const double tail = std::exp(-w * std::pow(a, a1) / a1);
      return static_cast<double>(k) * std::pow(a, static_cast<double>(k) - 1.0) * tail;
    };
    double sum = f(0.0) + f(c);
    for (std::size_t i = 1; i < kIntervals; ++i) sum += (i % 2 == 1 ? 4.0 : 2.0) * f(h * static_cast<double>(i));
    return sum * h / 3.0;
  };
  double total = 0.0;
  double binom = 1.0;
  for (unsigned k = 0; k <= m; ++k) {
    total += binom * truncatedMoment(weightMinus, cMinus, k) * truncatedMoment(weightPlus, cPlus, m - k);
    binom = binom * static_cast<double>(m - k) / static_cast<double>(k + 1);
  }
  return total;
}

ExperimentResult runVolumeMoments(const VolumeMomentsConfig& cfg, const RunOptions& options) {
  requireSweep(cfg.n, "n");
  if (cfg.moments.empty()) throw ConfigError("moments must not be empty");
  if (cfg.trials < 2) throw ConfigError("trials must be >= 2 for a standard error");
  const DirectionalIntensity nu = cfg.nu ? *cfg.nu : nuHat(cfg.k, cfg.spec);
  const double alpha = cfg.spec.alpha();
  VolumeOptions vo;
  vo.probes = cfg.probes;
  vo.workers = options.workers;

  // Closed-form reference when Z is an interval.
  std::optional<std::vector<double>> exact;
  if (nu.dim() == 1 && !nu.spherical() && cfg.window.lo[0] <= 0.0 && cfg.window.hi[0] >= 0.0) {
    double wPlus = 0.0, wMinus = 0.0;
    for (const auto& a : nu.atoms()) (a.direction[0] > 0.0 ? wPlus : wMinus) += a.weight;
    exact.emplace();
    for (unsigned m : cfg.moments)
      exact->push_back(d1ZeroCellMoment(wMinus, wPlus, alpha, -cfg.window.lo[0], cfg.window.hi[0], m));
  }

  auto powered = [](std::vector<double> v, unsigned m) {
    for (auto& x : v) x = std::pow(x, static_cast<double>(m));
    return meanOf(v);
  };

  ExperimentResult out;
  const std::uint64_t zSeed = deriveSeed(cfg.common.rootSeed, 0);
  const std::vector<double> zVol = perTrialVolumes(ZModel{nu, alpha}, {cfg.window}, cfg.trials, zSeed, vo);
  std::vector<MeanEstimate> zMoments;
  for (std::size_t j = 0; j < cfg.moments.size(); ++j) {
    zMoments.push_back(powered(zVol, cfg.moments[j]));
    if (exact)
      out.rows.push_back(makeRow(rowName(cfg.common, "Z_vs_exact_m" + std::to_string(cfg.moments[j])), 0.0,
                                 zMoments[j].mean, zMoments[j].standardError, (*exact)[j], cfg.common.tolerances,
                                 zSeed, cfg.trials));
  }
  for (std::size_t i = 0; i < cfg.n.size(); ++i) {
    const std::uint64_t seed = deriveSeed(cfg.common.rootSeed, i + 1);
    const std::vector<double> xVol =
        perTrialVolumes(XnModel{cfg.k, cfg.spec, cfg.n[i]}, {cfg.window}, cfg.trials, seed, vo);
    const double nv = static_cast<double>(cfg.n[i]);
    for (std::size_t j = 0; j < cfg.moments.size(); ++j) {
      const std::string m = std::to_string(cfg.moments[j]);
      const MeanEstimate xm = powered(xVol, cfg.moments[j]);
      out.rows.push_back(makeRow(rowName(cfg.common, "Xn_vs_Z_m" + m), nv, xm.mean,
                                 std::hypot(xm.standardError, zMoments[j].standardError), zMoments[j].mean,
                                 cfg.common.tolerances, seed, cfg.trials));
      if (exact)
        out.rows.push_back(makeRow(rowName(cfg.common, "Xn_vs_exact_m" + m), nv, xm.mean, xm.standardError,
                                   (*exact)[j], cfg.common.tolerances, seed, cfg.trials));
    }
  }
  out.diagnostics.emplace_back("possiblyUnbounded", hemisphereContained(nu) ? 1.0 : 0.0);
  return out;
}

ExperimentResult runTwoBallAnomaly(const TwoBallAnomalyConfig& cfg, const RunOptions& options) {
  requireSweep(cfg.n, "n");
  if (cfg.trials < 2) throw ConfigError("trials must be >= 2 for a standard error");
  if (cfg.k.components().size() != 2) throw ConfigError("two-ball model needs exactly two components");
  const auto* b0 = std::get_if<Ball>(&cfg.k.components()[0]);
  const auto* b1 = std::get_if<Ball>(&cfg.k.components()[1]);
  if (!b0 || !b1) throw ConfigError("both components of the two-ball model must be balls");
  if (!(cfg.windowHalfWidth > 0.0)) throw ConfigError("window half-width must be positive");

  const BoundaryDensitySpec spec = BoundaryDensitySpec::uniform(cfg.k, {0});
  const SetModel single = SetModel::single(*b0);
  const BoundaryDensitySpec singleSpec = BoundaryDensitySpec::uniform(single);
  const DirectionalIntensity singleNu = nuHat(single, singleSpec);
  const bool unbounded = hemisphereContained(nuHat(cfg.k, spec));
  const std::size_t d = cfg.k.dim();
  const VCompact testBody = VCompact::ball(Ball(Vector(d), cfg.inclusionRadius));
  const double inclusionRef = std::exp(-lambdaFunctional(singleNu, testBody, spec.alpha()));
  VolumeOptions vo;
  vo.probes = cfg.probes;
  vo.workers = options.workers;

  ExperimentResult out;
  for (std::size_t i = 0; i < cfg.n.size(); ++i) {
    const std::size_t n = cfg.n[i];
    const double nv = static_cast<double>(n);
    const std::uint64_t seed = deriveSeed(cfg.common.rootSeed, i);
    const double s = std::pow(nv, spec.gamma());
    // The second component shows up in n^gamma X_n near n^gamma (c_1 - c_0).
    const Box w0 = Box::centered(Vector(d), cfg.windowHalfWidth);
    const Box w1 = Box::centered(s * (b1->center - b0->center), cfg.windowHalfWidth);
    const auto full = perTrialVolumes(XnModel{cfg.k, spec, n}, {w0, w1}, cfg.trials, seed, vo);
    const auto fullNear = perTrialVolumes(XnModel{cfg.k, spec, n}, {w0}, cfg.trials, seed, vo);
    const auto ref = perTrialVolumes(XnModel{single, singleSpec, n}, {w0}, cfg.trials, seed, vo);

    const MeanEstimate x = meanOf(full), y = meanOf(ref), xNear = meanOf(fullNear);
    if (!(y.mean > 0.0)) throw DomainError("single-ball volumes vanished; enlarge the window");
    const double ratio = x.mean / y.mean;
    double cov = 0.0;
    for (std::size_t t = 0; t < cfg.trials; ++t) cov += (full[t] - x.mean) * (ref[t] - y.mean);
    cov /= static_cast<double>(cfg.trials - 1);
    const double nt = static_cast<double>(cfg.trials);
    const double varRatio =
        (sq(x.standardError) + sq(ratio * y.standardError) - 2.0 * ratio * cov / nt) / sq(y.mean);
    out.rows.push_back(makeRow(rowName(cfg.common, "volume_ratio"), nv, ratio, std::sqrt(std::max(0.0, varRatio)), 2.0,
                               cfg.common.tolerances, seed, cfg.trials));
    out.rows.push_back(makeRow(rowName(cfg.common, "single_window_ratio"), nv, xNear.mean / y.mean, 0.0, 1.0,
                               cfg.common.tolerances, seed, cfg.trials));

    const std::uint64_t incSeed = deriveSeed(seed, 7);
    const BinomialEstimate emp = empiricalInclusion(testBody, cfg.k, spec, n, cfg.inclusionTrials, incSeed,
                                                    options.workers);
    out.rows.push_back(makeRow(rowName(cfg.common, "inclusion"), nv, emp.pHat,
                               scoreSigma(inclusionRef, cfg.inclusionTrials), inclusionRef,
                               Tolerances{cfg.common.tolerances.zThreshold, 0.0}, incSeed, cfg.inclusionTrials));
  }
  out.rows.push_back(makeRow(rowName(cfg.common, "hemisphere_flag"), 0.0, unbounded ? 1.0 : 0.0, 0.0, 0.0,
                             Tolerances{cfg.common.tolerances.zThreshold, 0.0}, cfg.common.rootSeed, 0));
  out.diagnostics.emplace_back("possiblyUnbounded", unbounded ? 1.0 : 0.0);
  return out;
}

ExperimentResult runD1Exact(const D1ExactConfig& cfg, const RunOptions& options) {
  requireSweep(cfg.n, "n");
  if (cfg.trials == 0) throw ConfigError("trials must be >= 1");
  const HPolytope interval = HPolytope::box(Vector{0.0}, Vector{1.0});
  const SetModel k = SetModel::single(interval);
  const MuSampler sampler(k, BoundaryDensitySpec::uniform(k));
  const std::size_t nr = cfg.rho.size();

  ExperimentResult out;
  for (std::size_t i = 0; i < cfg.n.size(); ++i) {
    const std::size_t n = cfg.n[i];
    if (n == 0) throw ConfigError("n must be >= 1");
    const double nv = static_cast<double>(n);
    const std::uint64_t seed = deriveSeed(cfg.common.rootSeed, i);
    std::vector<double> lower(cfg.trials), upper(cfg.trials), discrepancy(cfg.trials);
    std::vector<char> included(cfg.trials * nr, 0);
    parallelFor(cfg.trials, options.workers, [&](std::size_t t) {
      RngStream rng(seed, t);
      std::vector<Vector> xi;
      xi.reserve(n);
      double lo = 1.0, hi = 0.0;
      for (std::size_t j = 0; j < n; ++j) {
        xi.push_back(sampler.sample(rng));
        lo = std::min(lo, xi.back()[0]);
        hi = std::max(hi, xi.back()[0]);
      }
      // n X_n = [-n min xi, n (1 - max xi)], checked against the general construction.
      const RealizedXn xn = realizeXn(interval, xi);
      double a = 0.0, b = 0.0;
      for (const auto& h : xn.region.halfspaces())
        (h.normal[0] > 0.0 ? b : a) = h.normal[0] > 0.0 ? h.offset : -h.offset;
      discrepancy[t] = std::max(std::abs(a - -lo), std::abs(b - (1.0 - hi)));
      lower[t] = nv * lo;
      upper[t] = nv * (1.0 - hi);
      for (std::size_t r = 0; r < nr; ++r)
        included[t * nr + r] = (cfg.rho[r] <= lower[t] && cfg.rho[r] <= upper[t]) ? 1 : 0;
    });

    const double sn = std::sqrt(static_cast<double>(cfg.trials));
    const double ksSe = 1.0 / (sn + 0.12 + 0.11 / sn);
    const Tolerances ksTol{kKolmogorovCritical1Percent, 0.0};
    auto finiteN = [nv](double s) { return s >= nv ? 1.0 : -std::expm1(nv * std::log1p(-s / nv)); };
    auto exp1 = [](double s) { return -std::expm1(-s); };
    out.rows.push_back(makeRow(rowName(cfg.common, "ks_min_finite_n"), nv, ksStatistic(lower, finiteN), ksSe, 0.0,
                               ksTol, seed, cfg.trials));
    out.rows.push_back(makeRow(rowName(cfg.common, "ks_min_exp1"), nv, ksStatistic(lower, exp1), ksSe, 0.0, ksTol,
                               seed, cfg.trials));
    out.rows.push_back(makeRow(rowName(cfg.common, "ks_max_exp1"), nv, ksStatistic(upper, exp1), ksSe, 0.0, ksTol,
                               seed, cfg.trials));
    out.rows.push_back(makeRow(rowName(cfg.common, "interval_formula"), nv,
                               *std::max_element(discrepancy.begin(), discrepancy.end()), 0.0, 0.0,
                               Tolerances{cfg.common.tolerances.zThreshold, 1e-12}, seed, cfg.trials));
    for (std::size_t r = 0; r < nr; ++r) {
      std::size_t hits = 0;
      for (std::size_t t = 0; t < cfg.trials; ++t) hits += static_cast<std::size_t>(included[t * nr + r]);
      const double ref = std::pow(std::max(0.0, 1.0 - 2.0 * cfg.rho[r] / nv), nv);
      out.rows.push_back(makeRow(rowName(cfg.common, "inclusion_rho" + tagNumber(cfg.rho[r])), nv,
                                 static_cast<double>(hits) / static_cast<double>(cfg.trials),
                                 scoreSigma(ref, cfg.trials), ref, cfg.common.tolerances, seed, cfg.trials));
    }
  }
  return out;
}

ExperimentResult runExperiment(const ExperimentConfig& config, const RunOptions& options) {
  return std::visit(
      [&](const auto& c) -> ExperimentResult {
        using T = std::decay_t<decltype(c)>;
        if constexpr (std::is_same_v<T, ErosionLimitConfig>) return runErosionLimit(c, options);
        if constexpr (std::is_same_v<T, InclusionConvergenceConfig>) return runInclusionConvergence(c, options);
        if constexpr (std::is_same_v<T, ZeroCellSelfCheckConfig>) return runZeroCellSelfCheck(c, options);
        if constexpr (std::is_same_v<T, VolumeMomentsConfig>) return runVolumeMoments(c, options);
        if constexpr (std::is_same_v<T, TwoBallAnomalyConfig>) return runTwoBallAnomaly(c, options);
        if constexpr (std::is_same_v<T, D1ExactConfig>) return runD1Exact(c, options);
      },
      config);
}

}  // namespace zerocell
