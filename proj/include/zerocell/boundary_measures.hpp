#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "zerocell/geometry.hpp"

namespace zerocell {

/// Angular factor of g on a ball component: g(center + rho u) = c * w(u).
struct SphericalWeight {
  std::function<double(const Vector&)> value;
  /// Declared upper bound of w, used by rejection samplers.
  double maxValue = 1.0;
  /// Integral of w against the surface measure of the unit sphere.
  double integral = 0.0;
  /// "constant", "cap" or "custom"; carried into serialized configs.
  std::string label;
  Vector axis;  // cap axis; unused otherwise

  static SphericalWeight constant(std::size_t dim, double c = 1.0);
  /// Indicator of the closed half-sphere {u : <u, axis> >= 0}.
  static SphericalWeight cap(const Vector& axis);
  /// Arbitrary nonnegative weight; the integral is computed by quadrature.
  static SphericalWeight custom(std::size_t dim, std::function<double(const Vector&)> w, double maxValue);
};

enum class DensityKind { Uniform, RadialPowerBall, DistPowerPolytope };

std::string toString(DensityKind kind);

/// Density of mu near the boundary: f(a + t u) ~ t^alpha g(a) with g described
/// per facet for polytopes and per direction for balls. The constructors
/// normalize mu to total mass `mass` (a probability measure by default).
class BoundaryDensitySpec {
 public:
  /// Uniform density on the listed components (empty list: every bounded one).
  static BoundaryDensitySpec uniform(const SetModel& k, std::vector<std::size_t> massComponents = {},
                                     double mass = 1.0);
  /// f(x) = c w(u) (rho - |x - center|)^alpha on ball component `component`.
  static BoundaryDensitySpec radialPowerBall(const SetModel& k, std::size_t component, double alpha,
                                             std::optional<SphericalWeight> weight = std::nullopt,
                                             double mass = 1.0);
  /// f(x) = c dist(x, boundary)^alpha on polytope component `component`.
  static BoundaryDensitySpec distPowerPolytope(const SetModel& k, std::size_t component, double alpha,
                                               double mass = 1.0);

  /// Replaces g on the facets of a polytope (or complement-polytope) component.
  /// The result describes g only; it has no sampler.
  BoundaryDensitySpec withFacetWeights(std::size_t component, std::vector<double> g) const;

  DensityKind kind() const { return kind_; }
  double alpha() const { return alpha_; }
  double gamma() const { return gamma_; }
  double normConstant() const { return normConstant_; }
  double mass() const { return mass_; }
  std::size_t dim() const { return dim_; }
  std::size_t componentCount() const { return componentCount_; }
  const std::vector<std::size_t>& massComponents() const { return massComponents_; }
  const std::map<std::size_t, std::vector<double>>& facetWeights() const { return facetWeights_; }
  const SphericalWeight& sphericalWeight() const { return weight_; }

  bool carriesMass(std::size_t component) const;
  /// False for specs that only describe g (see withFacetWeights).
  bool samplable() const { return samplable_; }

 private:
  BoundaryDensitySpec(DensityKind kind, double alpha, std::size_t dim, std::size_t componentCount);

  DensityKind kind_;
  double alpha_;
  double gamma_;
  double normConstant_ = 0.0;
  double mass_ = 1.0;
  std::size_t dim_;
  std::size_t componentCount_;
  std::vector<std::size_t> massComponents_;
  std::map<std::size_t, std::vector<double>> facetWeights_;
  SphericalWeight weight_;
  bool samplable_ = true;
};

/// Rejects alpha <= -1 with a message naming the requirement.
void requireValidAlpha(double alpha);

struct DirectionalAtom {
  Vector direction;
  double weight = 0.0;
};

/// Continuous part of the directional measure, a density against the surface
/// measure of the unit sphere.
struct SphericalDensity {
  std::function<double(const Vector&)> density;
  double totalMass = 0.0;
  std::optional<double> maxDensity;
};

/// The directional measure nu-hat driving the Poisson hyperplane process.
class DirectionalIntensity {
 public:
  DirectionalIntensity(std::size_t dim, std::vector<DirectionalAtom> atoms,
                       std::optional<SphericalDensity> spherical = std::nullopt);

  std::size_t dim() const { return dim_; }
  const std::vector<DirectionalAtom>& atoms() const { return atoms_; }
  const std::optional<SphericalDensity>& spherical() const { return spherical_; }
  double atomMass() const { return atomMass_; }
  double totalMass() const { return atomMass_ + (spherical_ ? spherical_->totalMass : 0.0); }

 private:
  std::size_t dim_;
  std::vector<DirectionalAtom> atoms_;
  std::optional<SphericalDensity> spherical_;
  double atomMass_ = 0.0;
};

DirectionalIntensity nuHat(const SetModel& k, const BoundaryDensitySpec& spec);

struct QuadratureValue {
  double value = 0.0;
  double standardError = 0.0;
};

/// Lambda(L) = integral of (h(L,u)^+)^(alpha+1) / (alpha+1) against nu-hat.
double lambdaFunctional(const DirectionalIntensity& nu, const VCompact& l, double alpha);
/// Same, with the Monte Carlo standard error of the d = 3 sphere integral.
QuadratureValue lambdaFunctionalDetailed(const DirectionalIntensity& nu, const VCompact& l, double alpha);

enum class ErosionMethod { Auto, Exact, MonteCarlo };

struct ErosionOptions {
  ErosionMethod method = ErosionMethod::Auto;
  std::size_t samples = 1'000'000;
  std::uint64_t rootSeed = 0;
  unsigned workers = 1;
};

struct ErosionMeasure {
  double value = 0.0;
  /// "exact" or "monte-carlo".
  std::string method;
  std::optional<double> standardError;
};

/// mu(K \ K eroded by eps L).
ErosionMeasure erosionMu(const SetModel& k, const BoundaryDensitySpec& spec, const VCompact& l, double eps,
                         const ErosionOptions& options = {});

/// True when erosionMu has a closed form for the triple at this eps.
bool erosionHasClosedForm(const SetModel& k, const BoundaryDensitySpec& spec, const VCompact& l, double eps);

struct ReachData {
  ReachData(double deltaPlus, double deltaMinus, double rBound, double hVal);

  double deltaPlus;
  double deltaMinus;
  double rBound;
  /// h(L, -u).
  double hVal;
};

struct TBounds {
  double tPlus = 0.0;
  double tMinus = 0.0;
};

/// Inner/outer ball bounds on the depth at which a+tu leaves the erosion.
TBounds tBounds(double eps, const ReachData& rd);

/// True iff the support of nu-hat lies in a closed hemisphere.
bool hemisphereContained(const DirectionalIntensity& nu);

}  // namespace zerocell
