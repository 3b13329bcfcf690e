#include <cmath>

#include "doctest.h"
#include "zerocell/experiments.hpp"

using namespace zerocell;

namespace {

CommonConfig common(const std::string& name, std::uint64_t seed = 1) { return {name, seed, {}}; }

SetModel square() { return SetModel::single(HPolytope::box({0.0, 0.0}, {1.0, 1.0})); }
SetModel disk() { return SetModel::single(Ball({0.0, 0.0}, 1.0)); }
SetModel interval() { return SetModel::single(HPolytope::box({0.0}, {1.0})); }
VCompact ballL(double r) { return VCompact::ball(Ball({0.0, 0.0}, r)); }

const ResultRow* findRow(const ExperimentResult& r, const std::string& name, double sweep) {
  for (const auto& row : r.rows)
    if (row.experiment == name && row.sweepValue == sweep) return &row;
  return nullptr;
}

void checkVerdictsRecomputable(const ExperimentResult& r) {
  for (const auto& row : r.rows) CHECK(rowPasses(row) == row.passed);
}

}  // namespace

TEST_CASE("row verdicts") {
  const auto a = makeRow("x", 1, 1.3, 0.1, 1.0, {4.0, 0.0}, 0, 10);
  CHECK(a.zScore == doctest::Approx(3.0));
  CHECK(a.passed);
  const auto b = makeRow("x", 1, 1.5, 0.1, 1.0, {4.0, 0.0}, 0, 10);
  CHECK_FALSE(b.passed);
  const auto c = makeRow("x", 1, 1.5, 0.1, 1.0, {4.0, 0.5}, 0, 10);
  CHECK(c.passed);
  const auto exact = makeRow("x", 1, 2.0, 0.0, 2.0, {4.0, 0.0}, 0, 0);
  CHECK(std::isnan(exact.zScore));
  CHECK(exact.passed);
  CHECK_FALSE(makeRow("x", 1, 2.0 + 1e-9, 0.0, 2.0, {4.0, 1e-12}, 0, 0).passed);
}

TEST_CASE("erosion limit rows for the square and the disk") {
  ErosionLimitConfig sq{common("sq"), square(), BoundaryDensitySpec::uniform(square()), ballL(1.0),
                        {0.1, 0.01, 1e-3}, ErosionMethod::Exact, 1000};
  const auto r = runErosionLimit(sq);
  REQUIRE(r.rows.size() == 3);
  const auto* row = findRow(r, "sq/erosion_ratio", 1e-3);
  REQUIRE(row);
  CHECK(row->estimate == doctest::Approx(4.0 - 4e-3).epsilon(1e-12));
  CHECK(row->reference == doctest::Approx(4.0));
  CHECK(row->standardError == 0.0);
  double prev = INFINITY;
  for (const auto& x : r.rows) {
    const double dev = std::abs(x.estimate - x.reference);
    CHECK(dev < prev);
    prev = dev;
  }
  checkVerdictsRecomputable(r);

  ErosionLimitConfig dk{common("dk"), disk(), BoundaryDensitySpec::uniform(disk()), ballL(1.0),
                        {1e-3}, ErosionMethod::Auto, 1000};
  const auto rd = runErosionLimit(dk);
  CHECK(rd.rows[0].estimate == doctest::Approx(2.0 - 1e-3).epsilon(1e-9));
  CHECK(rd.rows[0].reference == doctest::Approx(2.0).epsilon(1e-9));
}

TEST_CASE("inclusion convergence rows carry both estimators") {
  InclusionConvergenceConfig cfg{common("inc", 3), interval(), BoundaryDensitySpec::uniform(interval()),
                                 VCompact::hull({{-0.5}, {0.5}}), {100, 1000}};
  cfg.trials = 3000;
  const auto r = runInclusionConvergence(cfg);
  for (double n : {100.0, 1000.0}) {
    REQUIRE(findRow(r, "inc/empirical_vs_limit", n));
    REQUIRE(findRow(r, "inc/empirical_vs_closed", n));
    const auto* closed = findRow(r, "inc/closed_vs_limit", n);
    REQUIRE(closed);
    CHECK(closed->estimate == doctest::Approx(std::pow(1 - 1 / n, n)).epsilon(1e-12));
    CHECK(closed->reference == doctest::Approx(std::exp(-1.0)));
  }
  for (const auto& row : r.rows) CHECK(row.passed);
  checkVerdictsRecomputable(r);
}

TEST_CASE("zero-cell self check on the square") {
  ZeroCellSelfCheckConfig cfg{common("z", 4), nuHat(square(), BoundaryDensitySpec::uniform(square())), 0.0,
                              ballL(1.0), {0.0, 0.1, 0.25, 0.5}};
  cfg.trials = 4000;
  cfg.expectUnbounded = false;
  const auto r = runZeroCellSelfCheck(cfg);
  for (double rho : {0.1, 0.25, 0.5}) {
    const auto* row = findRow(r, "z/inclusion", rho);
    REQUIRE(row);
    CHECK(row->reference == doctest::Approx(std::exp(-4 * rho)));
    CHECK(row->passed);
  }
  const auto* zero = findRow(r, "z/inclusion", 0.0);
  REQUIRE(zero);
  CHECK(zero->estimate == 1.0);
  CHECK(zero->reference == 1.0);
  const auto* origin = findRow(r, "z/origin", 0.0);
  REQUIRE(origin);
  CHECK(origin->estimate == 1.0);
  const auto* flag = findRow(r, "z/hemisphere_flag", 0.0);
  REQUIRE(flag);
  CHECK(flag->estimate == 0.0);
  CHECK(flag->passed);
  checkVerdictsRecomputable(r);
}

TEST_CASE("zero-cell self check flags hemisphere measures") {
  const auto cap = BoundaryDensitySpec::radialPowerBall(disk(), 0, 0.0, SphericalWeight::cap({0.0, 1.0}));
  ZeroCellSelfCheckConfig cfg{common("cap", 5), nuHat(disk(), cap), 0.0, ballL(1.0), {0.2}};
  cfg.trials = 1000;
  cfg.windowHalfWidth = 30.0;
  cfg.expectUnbounded = true;
  cfg.includeOrigin = false;
  const auto r = runZeroCellSelfCheck(cfg);
  const auto* flag = findRow(r, "cap/hemisphere_flag", 0.0);
  REQUIRE(flag);
  CHECK(flag->estimate == 1.0);
  CHECK(flag->passed);
  bool sawDiag = false;
  for (const auto& [k, v] : r.diagnostics)
    if (k == "possiblyUnbounded") sawDiag = (v == 1.0);
  CHECK(sawDiag);
}

TEST_CASE("volume moments in d = 1") {
  VolumeMomentsConfig cfg{common("vm", 6), interval(), BoundaryDensitySpec::uniform(interval()), std::nullopt,
                          {1000}, {1, 2}, Box({-1.0}, {1.0})};
  cfg.trials = 4000;
  const auto r = runVolumeMoments(cfg);
  const auto* z1 = findRow(r, "vm/Z_vs_exact_m1", 0.0);
  REQUIRE(z1);
  CHECK(z1->reference == doctest::Approx(2 * (1 - std::exp(-1.0))).epsilon(1e-9));
  const auto* z2 = findRow(r, "vm/Z_vs_exact_m2", 0.0);
  REQUIRE(z2);
  CHECK(z2->reference == doctest::Approx(d1ZeroCellMoment(1, 1, 0, 1, 1, 2)));
  REQUIRE(findRow(r, "vm/Xn_vs_Z_m1", 1000.0));
  REQUIRE(findRow(r, "vm/Xn_vs_exact_m2", 1000.0));
  for (const auto& row : r.rows) CHECK(row.passed);
  checkVerdictsRecomputable(r);
}

TEST_CASE("two-ball rows") {
  TwoBallAnomalyConfig cfg{common("tb", 7), SetModel({Ball({0.0, 0.0}, 1.0), Ball({5.0, 0.0}, 1.0)}, 3.0), {100}};
  cfg.trials = 60;
  cfg.inclusionTrials = 500;
  cfg.probes = 512;
  const auto r = runTwoBallAnomaly(cfg);
  const auto* single = findRow(r, "tb/single_window_ratio", 100.0);
  REQUIRE(single);
  CHECK(single->estimate == doctest::Approx(1.0).epsilon(1e-12));
  const auto* flag = findRow(r, "tb/hemisphere_flag", 0.0);
  REQUIRE(flag);
  CHECK(flag->estimate == 0.0);
  const auto* ratio = findRow(r, "tb/volume_ratio", 100.0);
  REQUIRE(ratio);
  CHECK(ratio->estimate > 1.5);
  CHECK(ratio->estimate < 2.5);
  checkVerdictsRecomputable(r);
}

TEST_CASE("exact d = 1 checks") {
  D1ExactConfig cfg{common("d1", 8), {1, 200}, 3000, {0.25, 150.0}};
  const auto r = runD1Exact(cfg);
  for (double n : {1.0, 200.0}) {
    const auto* formula = findRow(r, "d1/interval_formula", n);
    REQUIRE(formula);
    CHECK(formula->estimate <= 1e-12);
    CHECK(findRow(r, "d1/ks_min_finite_n", n)->passed);
  }
  // n = 1: n min xi is uniform, which the finite-n law reproduces exactly.
  CHECK(findRow(r, "d1/ks_min_finite_n", 1.0)->estimate * std::sqrt(3000.0) < 1.6276);
  // rho beyond n / 2 can never fit.
  const auto* far = findRow(r, "d1/inclusion_rho150", 200.0);
  REQUIRE(far);
  CHECK(far->estimate == 0.0);
  CHECK(far->reference == 0.0);
  CHECK(far->passed);
  checkVerdictsRecomputable(r);
}

TEST_CASE("experiments replay and ignore the worker count") {
  D1ExactConfig d1{common("d1", 9), {50}, 2000, {1.0}};
  ZeroCellSelfCheckConfig z{common("z", 9), nuHat(square(), BoundaryDensitySpec::uniform(square())), 0.0,
                            ballL(1.0), {0.25}};
  z.trials = 500;
  for (const ExperimentConfig& cfg : std::vector<ExperimentConfig>{d1, z}) {
    const auto a = runExperiment(cfg, {1});
    const auto b = runExperiment(cfg, {1});
    const auto c = runExperiment(cfg, {3});
    REQUIRE(a.rows.size() == c.rows.size());
    for (std::size_t i = 0; i < a.rows.size(); ++i) {
      CHECK(a.rows[i].estimate == b.rows[i].estimate);
      CHECK(a.rows[i].estimate == c.rows[i].estimate);
      CHECK(a.rows[i].seed == c.rows[i].seed);
    }
  }
}

TEST_CASE("experiment kinds") {
  CHECK(experimentKinds().size() == 6);
  D1ExactConfig d1{common("d1"), {10}, 10, {}};
  CHECK(kindOf(d1) == "d1Exact");
}
