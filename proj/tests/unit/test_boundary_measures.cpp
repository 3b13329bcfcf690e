#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "doctest.h"
#include "test_support.hpp"
#include "zerocell/boundary_measures.hpp"

using namespace zerocell;
using testing_support::Gen;

namespace {

const SetModel& square() {
  static const SetModel k = SetModel::single(HPolytope::box({0.0, 0.0}, {1.0, 1.0}));
  return k;
}
const SetModel& disk() {
  static const SetModel k = SetModel::single(Ball({0.0, 0.0}, 1.0));
  return k;
}
VCompact ballL(double rho, std::size_t d = 2) { return VCompact::ball(Ball(Vector(d), rho)); }

// Composite Simpson rule on [a, b].
template <class F>
double simpson(F f, double a, double b, int n = 2000) {
  const double h = (b - a) / n;
  double s = f(a) + f(b);
  for (int i = 1; i < n; ++i) s += f(a + i * h) * (i % 2 ? 4.0 : 2.0);
  return s * h / 3.0;
}

bool hasAtom(const DirectionalIntensity& nu, const Vector& dir, double weight) {
  return std::any_of(nu.atoms().begin(), nu.atoms().end(), [&](const DirectionalAtom& a) {
    return distance(a.direction, dir) < 1e-12 && std::abs(a.weight - weight) < 1e-12;
  });
}

}  // namespace

TEST_CASE("alpha must exceed -1") {
  CHECK_NOTHROW(requireValidAlpha(-0.999));
  try {
    requireValidAlpha(-1.0);
    FAIL("expected an exception");
  } catch (const InvalidArgument& e) {
    CHECK(std::string(e.what()).find("alpha > -1") != std::string::npos);
  }
  CHECK_THROWS_AS(BoundaryDensitySpec::radialPowerBall(disk(), 0, -1.5), InvalidArgument);
}

TEST_CASE("gamma is the reciprocal of alpha + 1") {
  for (double alpha : {-0.5, 0.0, 1.0, 2.5}) {
    const auto spec = BoundaryDensitySpec::radialPowerBall(disk(), 0, alpha);
    CHECK(std::abs(spec.gamma() * (alpha + 1.0) - 1.0) < 1e-15);
  }
}

TEST_CASE("radial normalization against quadrature") {
  for (double alpha : {0.0, 1.0, 2.0, -0.5}) {
    // c * 2 pi * int_0^1 r (1 - r)^alpha dr = 1; with r = 1 - s^2 the
    // integrand 2 s^(2 alpha + 1) (1 - s^2) stays bounded.
    const double integral =
        simpson([&](double s) { return 2.0 * std::pow(s, 2.0 * alpha + 1.0) * (1.0 - s * s); }, 0.0, 1.0, 4000);
    const auto spec = BoundaryDensitySpec::radialPowerBall(disk(), 0, alpha);
    const double tol = 1e-8;
    CHECK(spec.normConstant() == doctest::Approx(1.0 / (2.0 * std::numbers::pi * integral)).epsilon(tol));
  }
  CHECK(BoundaryDensitySpec::radialPowerBall(disk(), 0, 1.0).normConstant() ==
        doctest::Approx(3.0 / std::numbers::pi));
}

TEST_CASE("spherical weights integrate correctly") {
  CHECK(SphericalWeight::constant(2, 0.5).integral == doctest::Approx(std::numbers::pi));
  CHECK(SphericalWeight::cap({0.0, 1.0}).integral == doctest::Approx(std::numbers::pi));
  CHECK(SphericalWeight::cap({0.0, 0.0, 1.0}).integral == doctest::Approx(2.0 * std::numbers::pi));
  const auto w = SphericalWeight::custom(2, [](const Vector& u) { return u[0] * u[0]; }, 1.0);
  CHECK(w.integral == doctest::Approx(std::numbers::pi).epsilon(1e-6));
  const auto w3 = SphericalWeight::custom(3, [](const Vector& u) { return u[2] * u[2]; }, 1.0);
  CHECK(w3.integral == doctest::Approx(4.0 * std::numbers::pi / 3.0).epsilon(1e-4));
}

TEST_CASE("nu-hat of the uniform square has four unit atoms") {
  const auto nu = nuHat(square(), BoundaryDensitySpec::uniform(square()));
  CHECK(nu.atoms().size() == 4);
  CHECK_FALSE(nu.spherical());
  for (const Vector& d : {Vector{1.0, 0.0}, Vector{-1.0, 0.0}, Vector{0.0, 1.0}, Vector{0.0, -1.0}})
    CHECK(hasAtom(nu, d, 1.0));
  CHECK(nu.totalMass() == doctest::Approx(4.0));
}

TEST_CASE("nu-hat of the uniform disk is continuous with mass 2") {
  const auto nu = nuHat(disk(), BoundaryDensitySpec::uniform(disk()));
  CHECK(nu.atoms().empty());
  REQUIRE(nu.spherical());
  CHECK(nu.totalMass() == doctest::Approx(2.0));
  CHECK(nu.spherical()->density({0.6, 0.8}) == doctest::Approx(1.0 / std::numbers::pi));
}

TEST_CASE("a zero facet weight drops the atom") {
  const auto& p = std::get<HPolytope>(square().components()[0]);
  std::vector<double> g;
  for (const auto& h : p.halfspaces()) g.push_back(distance(h.normal, Vector{0.0, 1.0}) < 1e-12 ? 0.0 : 1.0);
  const auto nu = nuHat(square(), BoundaryDensitySpec::uniform(square()).withFacetWeights(0, g));
  CHECK(nu.atoms().size() == 3);
  CHECK_FALSE(hasAtom(nu, {0.0, 1.0}, 1.0));
}

TEST_CASE("nu-hat mass equals the sum of g times facet area") {
  Gen g(77);
  for (int trial = 0; trial < 20; ++trial) {
    const auto p = g.tangentPolytope(2, 3 + g.index(8));
    const auto k = SetModel::single(p);
    // Perimeter and area from the vertex cycle.
    const auto v = polygonVertices(p);
    double perimeter = 0, area = 0;
    for (std::size_t i = 0; i < v.size(); ++i) {
      const Vector& a = v[i];
      const Vector& b = v[(i + 1) % v.size()];
      perimeter += distance(a, b);
      area += 0.5 * (a[0] * b[1] - a[1] * b[0]);
    }
    const auto nu = nuHat(k, BoundaryDensitySpec::uniform(k));
    CHECK(nu.totalMass() == doctest::Approx(perimeter / area).epsilon(1e-9));
  }
}

TEST_CASE("complement facets point into the hole") {
  // K = B(0, 1/2) together with the closure of the complement of [-2,3] x [-2,2].
  const SetModel k({Ball({0.0, 0.0}, 0.5), ComplementBody(HPolytope::box({-2.0, -2.0}, {3.0, 2.0}))}, 1.0);
  const auto& inner = std::get<HPolytope>(std::get<ComplementBody>(k.components()[1]).inner);
  std::vector<double> g;
  for (const auto& h : inner.halfspaces()) g.push_back(distance(h.normal, Vector{1.0, 0.0}) < 1e-12 ? 1.0 : 0.0);
  const auto spec = BoundaryDensitySpec::uniform(k, {0}).withFacetWeights(1, g);
  const auto nu = nuHat(k, spec);
  // Facet x = 3 has length 4; K lies to its right, so its outward normal is -e1.
  REQUIRE(nu.atoms().size() == 1);
  CHECK(hasAtom(nu, {-1.0, 0.0}, 4.0));
  REQUIRE(nu.spherical());
  CHECK(nu.spherical()->totalMass == doctest::Approx(2.0 / 0.5));
}

TEST_CASE("lambda functional examples") {
  const auto sq = nuHat(square(), BoundaryDensitySpec::uniform(square()));
  CHECK(lambdaFunctional(sq, VCompact::point({0.0, 0.0}), 0.0) == 0.0);
  CHECK(lambdaFunctional(sq, VCompact::point({0.0, 0.0}), 1.5) == 0.0);
  for (double rho : {0.1, 0.25, 1.0}) {
    CHECK(lambdaFunctional(sq, ballL(rho), 0.0) == doctest::Approx(4.0 * rho));
    const auto dk = nuHat(disk(), BoundaryDensitySpec::uniform(disk()));
    CHECK(lambdaFunctional(dk, ballL(rho), 0.0) == doctest::Approx(2.0 * rho).epsilon(1e-9));
  }
  // Radial alpha = 1: nu-hat has density 3/pi, Lambda = 6 rho^2 / 2.
  const auto rad = BoundaryDensitySpec::radialPowerBall(disk(), 0, 1.0);
  CHECK(lambdaFunctional(nuHat(disk(), rad), ballL(0.5), 1.0) == doctest::Approx(0.75).epsilon(1e-9));
  // A point off the origin only sees the atoms it points toward.
  CHECK(lambdaFunctional(sq, VCompact::point({0.3, -0.2}), 0.0) == doctest::Approx(0.5));
}

TEST_CASE("lambda is homogeneous of degree alpha + 1") {
  Gen g(5);
  const auto sq = nuHat(square(), BoundaryDensitySpec::uniform(square()));
  const auto dk = nuHat(disk(), BoundaryDensitySpec::uniform(disk()));
  const SetModel cube = SetModel::single(HPolytope::box({0.0, 0.0, 0.0}, {1.0, 1.0, 1.0}));
  const auto cu = nuHat(cube, BoundaryDensitySpec::uniform(cube));
  for (int trial = 0; trial < 60; ++trial) {
    const double alpha = g.uni(-0.9, 3.0);
    const double rho = g.uni(0.05, 5.0);
    const auto l2 = VCompact::hull(g.cloud(2, 1 + g.index(6), -1.0, 1.0));
    CHECK(lambdaFunctional(sq, l2.scaled(rho), alpha) ==
          doctest::Approx(std::pow(rho, alpha + 1.0) * lambdaFunctional(sq, l2, alpha)).epsilon(1e-10));
    CHECK(lambdaFunctional(dk, l2.scaled(rho), alpha) ==
          doctest::Approx(std::pow(rho, alpha + 1.0) * lambdaFunctional(dk, l2, alpha)).epsilon(1e-8));
    const auto l3 = VCompact::hull(g.cloud(3, 1 + g.index(6), -1.0, 1.0));
    CHECK(lambdaFunctional(cu, l3.scaled(rho), alpha) ==
          doctest::Approx(std::pow(rho, alpha + 1.0) * lambdaFunctional(cu, l3, alpha)).epsilon(1e-10));
  }
}

TEST_CASE("lambda is monotone under hull inclusion") {
  Gen g(6);
  const auto sq = nuHat(square(), BoundaryDensitySpec::uniform(square()));
  const auto dk = nuHat(disk(), BoundaryDensitySpec::uniform(disk()));
  for (int trial = 0; trial < 60; ++trial) {
    const auto outer = g.cloud(2, 2 + g.index(5), -1.0, 1.0);
    std::vector<Vector> inner;
    for (int i = 0; i < 4; ++i) {
      // Random convex combination of the outer points.
      std::vector<double> w(outer.size());
      double s = 0;
      for (auto& x : w) s += (x = g.uni(0, 1));
      Vector p(2);
      for (std::size_t j = 0; j < outer.size(); ++j) p += (w[j] / s) * outer[j];
      inner.push_back(p);
    }
    const double alpha = g.uni(-0.5, 2.0);
    CHECK(lambdaFunctional(sq, VCompact::hull(inner), alpha) <=
          lambdaFunctional(sq, VCompact::hull(outer), alpha) + 1e-12);
    CHECK(lambdaFunctional(dk, VCompact::hull(inner), alpha) <=
          lambdaFunctional(dk, VCompact::hull(outer), alpha) + 1e-9);
  }
}

TEST_CASE("erosion measure examples") {
  const auto sq = BoundaryDensitySpec::uniform(square());
  const auto m = erosionMu(square(), sq, ballL(1.0), 0.1);
  CHECK(m.method == "exact");
  CHECK(m.value == doctest::Approx(0.36));
  CHECK(erosionMu(disk(), BoundaryDensitySpec::uniform(disk()), ballL(1.0), 0.1).value == doctest::Approx(0.19));
  CHECK(erosionMu(square(), sq, ballL(1.0), 0.0).value == 0.0);
  CHECK(erosionHasClosedForm(square(), sq, ballL(1.0), 0.1));
}

TEST_CASE("erosion measure is nondecreasing in eps") {
  Gen g(8);
  const auto sq = BoundaryDensitySpec::uniform(square());
  const auto rad = BoundaryDensitySpec::radialPowerBall(disk(), 0, 1.0);
  const auto tri = VCompact::hull({{0.0, 0.0}, {0.5, 0.1}, {0.1, 0.4}});
  std::vector<double> eps;
  for (int i = 0; i < 12; ++i) eps.push_back(g.uni(0.0, 0.4));
  std::sort(eps.begin(), eps.end());
  double prevSq = 0, prevRad = 0, prevMc = 0;
  for (double e : eps) {
    const double a = erosionMu(square(), sq, tri, e).value;
    const double b = erosionMu(disk(), rad, ballL(0.5), e).value;
    // Fixed seed: the same points are tested against nested regions.
    const double c =
        erosionMu(disk(), rad, tri, e, ErosionOptions{ErosionMethod::MonteCarlo, 20000, 3, 1}).value;
    CHECK(a >= prevSq);
    CHECK(b >= prevRad - 1e-15);
    CHECK(c >= prevMc);
    prevSq = a, prevRad = b, prevMc = c;
  }
}

TEST_CASE("scaled erosion measure converges to lambda") {
  struct Case {
    SetModel k;
    BoundaryDensitySpec spec;
    VCompact l;
    double lambda;
  };
  const SetModel cube = SetModel::single(HPolytope::box({0.0, 0.0, 0.0}, {1.0, 1.0, 1.0}));
  const SetModel interval = SetModel::single(HPolytope::box({0.0}, {1.0}));
  std::vector<Case> cases{
      {square(), BoundaryDensitySpec::uniform(square()), ballL(1.0), 4.0},
      {disk(), BoundaryDensitySpec::uniform(disk()), ballL(1.0), 2.0},
      {disk(), BoundaryDensitySpec::radialPowerBall(disk(), 0, 1.0), ballL(0.5), 0.75},
      {cube, BoundaryDensitySpec::uniform(cube), ballL(1.0, 3), 6.0},
      {interval, BoundaryDensitySpec::uniform(interval), VCompact::hull({{-0.5}, {0.5}}), 1.0},
  };
  for (const auto& c : cases) {
    double prev = INFINITY;
    for (int k = 4; k <= 14; ++k) {
      const double eps = std::ldexp(1.0, -k);
      const auto m = erosionMu(c.k, c.spec, c.l, std::pow(eps, c.spec.gamma()));
      CHECK(m.method == "exact");
      const double dev = std::abs(m.value / eps - c.lambda);
      CHECK(dev <= prev + 1e-12);
      prev = dev;
    }
    CHECK(prev < 1e-2);
  }
}

TEST_CASE("depth bounds: examples") {
  const double eps = 0.01;
  CHECK(tBounds(eps, ReachData(1.0, 1.0, 1.0, 1.0)).tMinus == eps);
  CHECK(tBounds(eps, ReachData(1.0, 1.0, 1.0, 0.0)).tPlus == 0.0);
  const auto t = tBounds(1e-3, ReachData(2.0, 2.0, 1.0, 0.5));
  // first-order sag: eps (r^2 - h^2) / (2 delta) = 1.875e-4
  CHECK(t.tPlus / 1e-3 == doctest::Approx(0.5 - 1.875e-4).epsilon(1e-6));
  CHECK(t.tMinus / 1e-3 == doctest::Approx(0.5 + 1.875e-4).epsilon(1e-6));
  CHECK_THROWS_AS(tBounds(0.0, ReachData(1.0, 1.0, 1.0, 0.5)), DomainError);
  CHECK_THROWS_AS(tBounds(1.0, ReachData(1.0, 1.0, 1.0, 0.5)), DomainError);
  CHECK_THROWS_AS(ReachData(1.0, 1.0, 1.0, 2.0), InvalidArgument);
}

TEST_CASE("depth bounds agree with the radical formulas") {
  Gen g(12);
  for (int trial = 0; trial < 500; ++trial) {
    const double dp = g.uni(0.2, 3.0), dm = g.uni(0.2, 3.0), r = g.uni(0.2, 3.0), h = g.uni(-r, r);
    const double eps = g.uni(1e-4, 0.999) * std::min({dp, dm, 1.0}) / r;
    const auto t = tBounds(eps, ReachData(dp, dm, r, h));
    const double rad = eps * eps * (r * r - h * h);
    const double plus = std::max(0.0, eps * h - dp + std::sqrt(dp * dp - rad));
    const double minus = std::max(0.0, eps * h + dm - std::sqrt(dm * dm - rad));
    CHECK(t.tPlus == doctest::Approx(plus).epsilon(1e-9).scale(1.0));
    CHECK(t.tMinus == doctest::Approx(minus).epsilon(1e-9).scale(1.0));
    CHECK(t.tPlus <= t.tMinus);
  }
}

TEST_CASE("depth bound ratios converge to the positive support") {
  for (double h : {0.0, 0.5, 1.0})
    for (double r : {1.0, 2.0})
      for (double d : {1.0, 2.0}) {
        const ReachData rd(d, d, r, h);
        double prev = INFINITY;
        for (int k = 5; k <= 20; ++k) {
          const double eps = std::ldexp(1.0, -k);
          const auto t = tBounds(eps, rd);
          const double dev = std::max(std::abs(t.tPlus / eps - h), std::abs(t.tMinus / eps - h));
          CHECK(dev <= prev + 1e-15);
          prev = dev;
        }
        CHECK(prev <= 1e-3);
      }
}

TEST_CASE("hemisphere test") {
  CHECK_FALSE(hemisphereContained(nuHat(square(), BoundaryDensitySpec::uniform(square()))));
  CHECK_FALSE(hemisphereContained(nuHat(disk(), BoundaryDensitySpec::uniform(disk()))));
  const auto cap = BoundaryDensitySpec::radialPowerBall(disk(), 0, 0.0, SphericalWeight::cap({0.0, 1.0}));
  CHECK(hemisphereContained(nuHat(disk(), cap)));
  const double s = std::sqrt(0.5);
  CHECK(hemisphereContained(DirectionalIntensity(2, {{{1.0, 0.0}, 1.0}, {{s, s}, 1.0}, {{-s, s}, 2.0}})));
  CHECK(hemisphereContained(DirectionalIntensity(1, {{{1.0}, 1.0}})));
  CHECK_FALSE(hemisphereContained(DirectionalIntensity(1, {{{1.0}, 1.0}, {{-1.0}, 0.5}})));
  const SetModel ball3 = SetModel::single(Ball({0.0, 0.0, 0.0}, 1.0));
  CHECK_FALSE(hemisphereContained(nuHat(ball3, BoundaryDensitySpec::uniform(ball3))));
  const auto cap3 = BoundaryDensitySpec::radialPowerBall(ball3, 0, 0.0, SphericalWeight::cap({0.0, 0.0, 1.0}));
  CHECK(hemisphereContained(nuHat(ball3, cap3)));
}

TEST_CASE("directional intensity validation") {
  CHECK_THROWS_AS(DirectionalIntensity(2, {{{1.0, 1.0}, 1.0}}), InvalidArgument);
  CHECK_THROWS_AS(DirectionalIntensity(2, {{{1.0, 0.0}, -1.0}}), InvalidArgument);
  CHECK_THROWS_AS(DirectionalIntensity(2, {{{1.0, 0.0}, 0.0}}), InvalidArgument);
  CHECK_THROWS_AS(BoundaryDensitySpec::radialPowerBall(square(), 0, 0.0), SpecMismatch);
  CHECK_THROWS_AS(BoundaryDensitySpec::distPowerPolytope(disk(), 0, 0.0), SpecMismatch);
}
