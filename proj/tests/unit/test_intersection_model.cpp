#include <algorithm>
#include <cmath>

#include "doctest.h"
#include "test_support.hpp"
#include "zerocell/experiments.hpp"
#include "zerocell/intersection_model.hpp"

using namespace zerocell;
using testing_support::Gen;

namespace {

const SetModel& interval() {
  static const SetModel k = SetModel::single(HPolytope::box({0.0}, {1.0}));
  return k;
}
const SetModel& square() {
  static const SetModel k = SetModel::single(HPolytope::box({0.0, 0.0}, {1.0, 1.0}));
  return k;
}
const SetModel& disk() {
  static const SetModel k = SetModel::single(Ball({0.0, 0.0}, 1.0));
  return k;
}
VCompact segment(double rho) { return VCompact::hull({{-rho}, {rho}}); }
VCompact ballL(double rho) { return VCompact::ball(Ball({0.0, 0.0}, rho)); }

std::vector<Vector> drawPoints(const SetModel& k, const BoundaryDensitySpec& spec, std::size_t n, RngStream rng) {
  const MuSampler s(k, spec);
  std::vector<Vector> out;
  for (std::size_t i = 0; i < n; ++i) out.push_back(s.sample(rng));
  return out;
}

}  // namespace

TEST_CASE("a point test body is always included") {
  const auto spec = BoundaryDensitySpec::uniform(square());
  for (std::uint64_t s = 0; s < 50; ++s) {
    RngStream rng(s, 0);
    const auto r = trialIncludes(VCompact::point({0.0, 0.0}), square(), spec, 100, rng);
    CHECK(r.included);
    CHECK(r.failures == 0);
    CHECK(r.gammaUsed == 1.0);
  }
}

TEST_CASE("interval inclusion matches the order-statistic oracle") {
  const auto spec = BoundaryDensitySpec::uniform(interval());
  Gen g(3);
  for (std::uint64_t s = 0; s < 300; ++s) {
    const double rho = g.uni(0.0, 2.0);
    const std::size_t n = 1 + g.index(20);
    RngStream rng(s, 1);
    const auto pts = drawPoints(interval(), spec, n, rng);
    double lo = 1, hi = 0;
    std::size_t bad = 0;
    for (const auto& p : pts) {
      lo = std::min(lo, p[0]);
      hi = std::max(hi, p[0]);
      bad += p[0] < rho / n || p[0] > 1 - rho / n;
    }
    const auto r = trialIncludes(segment(rho), interval(), spec, n, rng, true);
    CHECK(r.included == (lo >= rho / n && hi <= 1 - rho / n));
    CHECK(r.failures == bad);
    CHECK(r.included == (r.failures == 0));
  }
}

TEST_CASE("one point never admits the unit ball in the unit square") {
  const auto spec = BoundaryDensitySpec::uniform(square());
  for (std::uint64_t s = 0; s < 100; ++s) {
    RngStream rng(s, 0);
    CHECK_FALSE(trialIncludes(ballL(1.0), square(), spec, 1, rng).included);
  }
}

TEST_CASE("the trial depends on L only through n^-gamma L") {
  const auto spec = BoundaryDensitySpec::radialPowerBall(disk(), 0, 1.0);
  Gen g(4);
  for (std::uint64_t s = 0; s < 100; ++s) {
    const auto l = VCompact::hull(g.cloud(2, 3, -1.0, 1.0));
    const double rho = g.uni(0.2, 3.0);
    const std::size_t n = 1 + g.index(50);
    RngStream rng(s, 2);
    const auto pts = drawPoints(disk(), spec, n, rng);
    const double scale = std::pow(static_cast<double>(n), -0.5);
    std::size_t bad = 0;
    for (const auto& p : pts) bad += !containsSet(disk(), l, p, rho * scale);
    CHECK(trialIncludes(l.scaled(rho), disk(), spec, n, rng, true).failures == bad);
  }
}

TEST_CASE("inclusion is monotone in the test body") {
  const auto spec = BoundaryDensitySpec::uniform(square());
  Gen g(5);
  for (std::uint64_t s = 0; s < 200; ++s) {
    const auto outer = g.cloud(2, 4, -0.6, 0.6);
    std::vector<Vector> inner{0.5 * (outer[0] + outer[1]), outer[2], 0.25 * (outer[0] + outer[1] + outer[2] + outer[3])};
    RngStream a(s, 3), b(s, 3);
    const bool big = trialIncludes(VCompact::hull(outer), square(), spec, 20, a).included;
    const bool small = trialIncludes(VCompact::hull(inner), square(), spec, 20, b).included;
    if (big) CHECK(small);
  }
}

TEST_CASE("empirical inclusion edge cases") {
  const auto spec = BoundaryDensitySpec::uniform(square());
  const auto one = empiricalInclusion(VCompact::point({0.0, 0.0}), square(), spec, 10, 1, 0);
  CHECK(one.pHat == 1.0);
  CHECK(one.ci95.lo == doctest::Approx(0.207).epsilon(1e-2));
  CHECK(one.ci95.hi == doctest::Approx(1.0));
  const auto none = empiricalInclusion(ballL(40.0), square(), spec, 10, 200, 0);
  CHECK(none.pHat == 0.0);
  const auto w1 = empiricalInclusion(ballL(0.25), square(), spec, 100, 3000, 9, 1);
  const auto w3 = empiricalInclusion(ballL(0.25), square(), spec, 100, 3000, 9, 3);
  CHECK(w1.successes == w3.successes);
}

TEST_CASE("closed-form inclusion examples") {
  const auto d1 = BoundaryDensitySpec::uniform(interval());
  const auto sq = BoundaryDensitySpec::uniform(square());
  for (std::size_t n : {10u, 100u, 10000u})
    for (double rho : {0.1, 0.5}) {
      CHECK(closedFormInclusion(interval(), d1, segment(rho), n).value ==
            doctest::Approx(std::pow(1 - 2 * rho / n, n)).epsilon(1e-12));
      CHECK(closedFormInclusion(square(), sq, ballL(rho), n).value ==
            doctest::Approx(std::pow(1 - 2 * rho / n, 2.0 * n)).epsilon(1e-12));
    }
  CHECK(closedFormInclusion(square(), sq, ballL(0.0), 10).value == 1.0);
  CHECK(closedFormInclusion(square(), sq, ballL(0.0), 10).standardError == 0.0);
}

TEST_CASE("empirical and closed-form inclusion agree") {
  struct Case {
    SetModel k;
    BoundaryDensitySpec spec;
    VCompact l;
  };
  const std::vector<Case> cases{{interval(), BoundaryDensitySpec::uniform(interval()), segment(0.5)},
                                {square(), BoundaryDensitySpec::uniform(square()), ballL(0.25)},
                                {disk(), BoundaryDensitySpec::uniform(disk()), ballL(0.5)}};
  std::uint64_t seed = 100;
  for (const auto& c : cases)
    for (std::size_t n : {100u, 1000u, 10000u}) {
      const auto closed = closedFormInclusion(c.k, c.spec, c.l, n);
      const auto emp = empiricalInclusion(c.l, c.k, c.spec, n, 4000, seed++);
      CHECK(std::abs(wilsonZ(emp.pHat, closed.value, emp.trials)) <= 4.0);
    }
}

TEST_CASE("explicit X_n realization") {
  const auto& k = std::get<HPolytope>(interval().components()[0]);
  const auto r = realizeXn(k, {{0.2}, {0.7}});
  CHECK_FALSE(r.empty);
  const auto box = r.region.asBox();
  REQUIRE(box);
  CHECK(box->first[0] == doctest::Approx(-0.2));
  CHECK(box->second[0] == doctest::Approx(0.3));

  const auto& sq = std::get<HPolytope>(square().components()[0]);
  const auto self = realizeXn(sq, {{0.0, 0.0}});
  CHECK(volumeExact(self.region) == doctest::Approx(1.0));

  Gen g(6);
  for (int trial = 0; trial < 30; ++trial) {
    const auto poly = g.tangentPolytope(2, 6);
    std::vector<Vector> pts;
    while (pts.size() < 5) {
      const Vector p = g.point(2, -1.5, 1.5);
      if (poly.contains(p)) pts.push_back(p);
    }
    const auto x = realizeXn(poly, pts);
    for (int p = 0; p < 300; ++p) {
      const Vector y = g.point(2, -3.0, 3.0);
      bool all = true;
      for (const auto& q : pts) all = all && poly.contains(q + y);
      CHECK(x.region.contains(y) == all);
    }
  }
}

TEST_CASE("d = 1 zero cell moments") {
  const DirectionalIntensity nu(1, {{{1.0}, 1.0}, {{-1.0}, 1.0}});
  for (double c : {0.5, 1.0, 2.0}) {
    const auto m1 = volumeMoment(ZModel{nu, 0.0}, 1, Box({-c}, {c}), 20000, 31);
    CHECK(std::abs(m1.value - 2 * (1 - std::exp(-c))) <= 4 * m1.standardError);
  }
  // Second moment against a direct double integral of the two exponential clocks.
  const int cells = 1500;
  const double c = 1.0, h = 10.0 / cells;
  double m2 = 0;
  for (int i = 0; i < cells; ++i)
    for (int j = 0; j < cells; ++j) {
      const double a = (i + 0.5) * h, b = (j + 0.5) * h;
      const double v = std::min(a, c) + std::min(b, c);
      m2 += v * v * std::exp(-a - b) * h * h;
    }
  CHECK(d1ZeroCellMoment(1.0, 1.0, 0.0, c, c, 2) == doctest::Approx(m2).epsilon(1e-4));
  const auto est = volumeMoment(ZModel{nu, 0.0}, 2, Box({-c}, {c}), 20000, 32);
  CHECK(std::abs(est.value - m2) <= 4 * est.standardError);
}

TEST_CASE("X_n volumes approach the zero cell in d = 1") {
  const auto spec = BoundaryDensitySpec::uniform(interval());
  const auto m = volumeMoment(XnModel{interval(), spec, 10000}, 1, Box({-1.0}, {1.0}), 4000, 33);
  CHECK(std::abs(m.value - 2 * (1 - std::exp(-1.0))) <= 4 * m.standardError);
  CHECK(m.n == 10000);
}

TEST_CASE("moment estimates saturate in the window") {
  const auto nu = nuHat(square(), BoundaryDensitySpec::uniform(square()));
  const auto a = volumeMoment(ZModel{nu, 0.0}, 1, Box::centered({0.0, 0.0}, 10.0), 4000, 34);
  const auto b = volumeMoment(ZModel{nu, 0.0}, 1, Box::centered({0.0, 0.0}, 20.0), 4000, 34);
  CHECK(std::abs(a.value - b.value) <= 4 * std::hypot(a.standardError, b.standardError));
  // E V(Z) = E T1+T2 times E T3+T4 = 4 for unit-rate clocks.
  CHECK(std::abs(a.value - 4.0) <= 4 * a.standardError);
}

TEST_CASE("windows away from the realization give zero volume") {
  const auto spec = BoundaryDensitySpec::uniform(square());
  const auto v = perTrialVolumes(XnModel{square(), spec, 50}, {Box({200.0, 200.0}, {201.0, 201.0})}, 20, 35);
  for (double x : v) CHECK(x == 0.0);
}

TEST_CASE("predicate volumes agree with the zero cell for a disk") {
  const auto spec = BoundaryDensitySpec::uniform(disk());
  const Box w = Box::centered({0.0, 0.0}, 1.0);
  const auto xn = volumeMoment(XnModel{disk(), spec, 2000}, 1, w, 400, 36, VolumeOptions{1024, 1});
  const auto z = volumeMoment(ZModel{nuHat(disk(), spec), 0.0}, 1, w, 4000, 37);
  CHECK(std::abs(xn.value - z.value) <= 4 * std::hypot(xn.standardError, z.standardError));
}

TEST_CASE("per-trial volumes do not depend on the worker count") {
  const auto spec = BoundaryDensitySpec::uniform(disk());
  const Box w = Box::centered({0.0, 0.0}, 1.0);
  const auto a = perTrialVolumes(XnModel{disk(), spec, 200}, {w}, 40, 38, VolumeOptions{256, 1});
  const auto b = perTrialVolumes(XnModel{disk(), spec, 200}, {w}, 40, 38, VolumeOptions{256, 4});
  CHECK(a == b);
}
