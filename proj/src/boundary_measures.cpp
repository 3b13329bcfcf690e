#include "zerocell/boundary_measures.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <numbers>
#include <sstream>

#include "zerocell/parallel.hpp"
#include "zerocell/rng.hpp"
#include "zerocell/samplers.hpp"
#include "zerocell/tolerances.hpp"

namespace zerocell {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

std::string fmt(double x) {
  std::ostringstream os;
  os.precision(17);
  os << x;
  return os.str();
}

Vector circlePoint(double phi) { return Vector{std::cos(phi), std::sin(phi)}; }

// Midpoint grid in (height, angle); by Archimedes this is an equal-area grid.
template <class F>
double sphereGridIntegral(F&& f, std::size_t heights, std::size_t angles) {
  double sum = 0.0;
  for (std::size_t i = 0; i < heights; ++i) {
    const double z = -1.0 + (static_cast<double>(i) + 0.5) * 2.0 / static_cast<double>(heights);
    const double rho = std::sqrt(std::max(0.0, 1.0 - z * z));
    for (std::size_t j = 0; j < angles; ++j) {
      const double phi = (static_cast<double>(j) + 0.5) * kTwoPi / static_cast<double>(angles);
      sum += f(Vector{rho * std::cos(phi), rho * std::sin(phi), z});
    }
  }
  return sum * 4.0 * std::numbers::pi / static_cast<double>(heights * angles);
}

double integrateOverSphere(std::size_t dim, const std::function<double(const Vector&)>& f) {
  switch (dim) {
    case 1:
      return f(Vector{1.0}) + f(Vector{-1.0});
    case 2: {
      const std::size_t n = tol::kCircleQuadratureNodes;
      double sum = 0.0;
      for (std::size_t j = 0; j < n; ++j) sum += f(circlePoint(kTwoPi * static_cast<double>(j) / n));
      return sum * kTwoPi / static_cast<double>(n);
    }
    default:
      return sphereGridIntegral(f, 512, 1024);
  }
}

double betaFunction(double a, double b) { return std::exp(std::lgamma(a) + std::lgamma(b) - std::lgamma(a + b)); }

// Regularized incomplete beta I_x(alpha + 1, d) via the finite binomial sum.
double radialTailFraction(double x, double alpha, std::size_t dim) {
  if (x <= 0.0) return 0.0;
  if (x >= 1.0) return 1.0;
  double sum = 0.0;
  double binom = 1.0;
  for (std::size_t k = 0; k < dim; ++k) {
    const double a = alpha + static_cast<double>(k) + 1.0;
    sum += ((k % 2 == 0) ? 1.0 : -1.0) * binom * std::pow(x, a) / a;
    binom = binom * static_cast<double>(dim - 1 - k) / static_cast<double>(k + 1);
  }
  return std::clamp(sum / betaFunction(alpha + 1.0, static_cast<double>(dim)), 0.0, 1.0);
}

double componentVolume(const Component& c) {
  if (const auto* p = std::get_if<HPolytope>(&c)) return volumeExact(*p);
  if (const auto* b = std::get_if<Ball>(&c)) return volumeExact(*b);
  throw SpecMismatch("a complement component has infinite volume and cannot carry uniform mass");
}

HPolytope shifted(const HPolytope& p, double t) {
  std::vector<Halfspace> hs = p.halfspaces();
  for (auto& h : hs) h.offset -= t;
  return HPolytope::fromCanonical(p.dim(), std::move(hs), false);
}

double surfaceMeasure(const HPolytope& p) {
  try {
    double s = 0.0;
    for (double f : facetMeasures(p)) s += f;
    return s;
  } catch (const EmptyRegion&) {
    return 0.0;
  }
}

double inradius(const HPolytope& p) {
  double lo = 0.0, hi = 0.0;
  for (const auto& v : polytopeVertices(p)) hi = std::max(hi, 2.0 * norm(v) + 1.0);
  for (int it = 0; it < 200 && hi - lo > 1e-15 * hi; ++it) {
    const double mid = 0.5 * (lo + hi);
    (isEmpty(shifted(p, mid)) ? hi : lo) = mid;
  }
  return lo;
}

// Integral of dist(x, boundary)^alpha over P, from the surface area S(t) of
// the inner parallel body at depth t. With t = r s^gamma the integrand in s
// is bounded, so a midpoint rule converges quickly.
double distPowerIntegral(const HPolytope& p, double alpha) {
  if (alpha == 0.0) return volumeExact(p);
  const double r = inradius(p);
  const double gamma = 1.0 / (alpha + 1.0);
  constexpr std::size_t kNodes = 4000;
  double sum = 0.0;
  for (std::size_t i = 0; i < kNodes; ++i) {
    const double s = (static_cast<double>(i) + 0.5) / kNodes;
    sum += surfaceMeasure(shifted(p, r * std::pow(s, gamma)));
  }
  return std::pow(r, alpha + 1.0) / (alpha + 1.0) * sum / kNodes;
}

void requireComponent(const SetModel& k, std::size_t component) {
  if (component >= k.components().size())
    throw InvalidArgument("component index " + std::to_string(component) + " out of range");
}

}  // namespace

// ---------------------------------------------------------------------------

SphericalWeight SphericalWeight::constant(std::size_t dim, double c) {
  if (!(c >= 0.0) || !std::isfinite(c)) throw InvalidArgument("spherical weight must be finite and >= 0");
  SphericalWeight w;
  w.value = [c](const Vector&) { return c; };
  w.maxValue = c;
  w.integral = c * unitSphereArea(dim);
  w.label = "constant";
  return w;
}

SphericalWeight SphericalWeight::cap(const Vector& axis) {
  const double n = norm(axis);
  if (!(n > 0.0)) throw InvalidArgument("cap axis must be nonzero");
  const Vector a = axis * (1.0 / n);
  SphericalWeight w;
  w.value = [a](const Vector& u) { return dot(u, a) >= 0.0 ? 1.0 : 0.0; };
  w.maxValue = 1.0;
  w.integral = 0.5 * unitSphereArea(a.dim());
  w.label = "cap";
  w.axis = a;
  return w;
}

SphericalWeight SphericalWeight::custom(std::size_t dim, std::function<double(const Vector&)> f, double maxValue) {
  if (!f) throw InvalidArgument("custom spherical weight needs a function");
  if (!(maxValue > 0.0) || !std::isfinite(maxValue)) throw InvalidArgument("custom weight bound must be positive");
  SphericalWeight w;
  w.value = std::move(f);
  w.maxValue = maxValue;
  w.integral = integrateOverSphere(dim, w.value);
  w.label = "custom";
  return w;
}

std::string toString(DensityKind kind) {
  switch (kind) {
    case DensityKind::Uniform:
      return "uniform";
    case DensityKind::RadialPowerBall:
      return "radialPowerBall";
    case DensityKind::DistPowerPolytope:
      return "distPowerPolytope";
  }
  return "unknown";
}

void requireValidAlpha(double alpha) {
  if (!(alpha > -1.0) || !std::isfinite(alpha))
    throw InvalidArgument("boundary exponent alpha must satisfy alpha > -1 (got " + fmt(alpha) + ")");
}

BoundaryDensitySpec::BoundaryDensitySpec(DensityKind kind, double alpha, std::size_t dim, std::size_t componentCount)
    : kind_(kind), alpha_(alpha), gamma_(0.0), dim_(dim), componentCount_(componentCount) {
  requireValidAlpha(alpha);
  gamma_ = 1.0 / (alpha + 1.0);
}

BoundaryDensitySpec BoundaryDensitySpec::uniform(const SetModel& k, std::vector<std::size_t> massComponents,
                                                 double mass) {
  if (!(mass > 0.0) || !std::isfinite(mass)) throw InvalidArgument("mass must be finite and positive");
  BoundaryDensitySpec spec(DensityKind::Uniform, 0.0, k.dim(), k.components().size());
  if (massComponents.empty()) {
    for (std::size_t i = 0; i < k.components().size(); ++i)
      if (!std::holds_alternative<ComplementBody>(k.components()[i])) massComponents.push_back(i);
    if (massComponents.empty()) throw SpecMismatch("uniform density needs a bounded component");
  }
  std::sort(massComponents.begin(), massComponents.end());
  massComponents.erase(std::unique(massComponents.begin(), massComponents.end()), massComponents.end());
  double volume = 0.0;
  for (std::size_t i : massComponents) {
    requireComponent(k, i);
    volume += componentVolume(k.components()[i]);
  }
  spec.mass_ = mass;
  spec.normConstant_ = mass / volume;
  spec.massComponents_ = massComponents;
  spec.weight_ = SphericalWeight::constant(k.dim());
  for (std::size_t i : massComponents)
    if (const auto* p = std::get_if<HPolytope>(&k.components()[i]))
      spec.facetWeights_[i] = std::vector<double>(p->halfspaces().size(), spec.normConstant_);
  return spec;
}

BoundaryDensitySpec BoundaryDensitySpec::radialPowerBall(const SetModel& k, std::size_t component, double alpha,
                                                         std::optional<SphericalWeight> weight, double mass) {
  if (!(mass > 0.0) || !std::isfinite(mass)) throw InvalidArgument("mass must be finite and positive");
  requireComponent(k, component);
  const auto* b = std::get_if<Ball>(&k.components()[component]);
  if (!b) throw SpecMismatch("radial power density requires a ball component");
  BoundaryDensitySpec spec(DensityKind::RadialPowerBall, alpha, k.dim(), k.components().size());
  spec.weight_ = weight ? std::move(*weight) : SphericalWeight::constant(k.dim());
  if (!(spec.weight_.integral > 0.0)) throw InvalidArgument("spherical weight must have positive integral");
  const double d = static_cast<double>(k.dim());
  spec.mass_ = mass;
  spec.normConstant_ =
      mass / (spec.weight_.integral * std::pow(b->radius, alpha + d) * betaFunction(alpha + 1.0, d));
  spec.massComponents_ = {component};
  return spec;
}

BoundaryDensitySpec BoundaryDensitySpec::distPowerPolytope(const SetModel& k, std::size_t component, double alpha,
                                                           double mass) {
  if (!(mass > 0.0) || !std::isfinite(mass)) throw InvalidArgument("mass must be finite and positive");
  requireComponent(k, component);
  const auto* p = std::get_if<HPolytope>(&k.components()[component]);
  if (!p) throw SpecMismatch("distance power density requires a polytope component");
  BoundaryDensitySpec spec(DensityKind::DistPowerPolytope, alpha, k.dim(), k.components().size());
  spec.mass_ = mass;
  spec.normConstant_ = mass / distPowerIntegral(*p, alpha);
  spec.massComponents_ = {component};
  spec.weight_ = SphericalWeight::constant(k.dim());
  spec.facetWeights_[component] = std::vector<double>(p->halfspaces().size(), spec.normConstant_);
  return spec;
}

BoundaryDensitySpec BoundaryDensitySpec::withFacetWeights(std::size_t component, std::vector<double> g) const {
  if (component >= componentCount_) throw InvalidArgument("component index out of range");
  for (double v : g)
    if (!(v >= 0.0) || !std::isfinite(v)) throw InvalidArgument("facet weights must be finite and >= 0");
  BoundaryDensitySpec out = *this;
  out.facetWeights_[component] = std::move(g);
  out.samplable_ = false;
  return out;
}

bool BoundaryDensitySpec::carriesMass(std::size_t component) const {
  return std::find(massComponents_.begin(), massComponents_.end(), component) != massComponents_.end() ||
         facetWeights_.count(component) > 0;
}

// ---------------------------------------------------------------------------

DirectionalIntensity::DirectionalIntensity(std::size_t dim, std::vector<DirectionalAtom> atoms,
                                           std::optional<SphericalDensity> spherical)
    : dim_(dim), atoms_(std::move(atoms)), spherical_(std::move(spherical)) {
  if (dim < 1 || dim > kMaxDimension) throw InvalidArgument("unsupported dimension");
  for (const auto& a : atoms_) {
    if (a.direction.dim() != dim) throw InvalidArgument("atom direction has wrong dimension");
    if (std::abs(norm(a.direction) - 1.0) > tol::kUnitNormal)
      throw InvalidArgument("atom direction " + a.direction.toString() + " is not a unit vector");
    if (!(a.weight >= 0.0) || !std::isfinite(a.weight)) throw InvalidArgument("atom weight must be finite and >= 0");
    atomMass_ += a.weight;
  }
  if (spherical_) {
    if (dim == 1) throw InvalidArgument("in d = 1 the sphere is {-1, 1}; use atoms");
    if (!spherical_->density) throw InvalidArgument("spherical density needs a function");
    if (!(spherical_->totalMass > 0.0) || !std::isfinite(spherical_->totalMass))
      throw InvalidArgument("spherical density mass must be finite and positive");
  }
  if (!(totalMass() > 0.0)) throw InvalidArgument("directional measure must have positive mass");
}

DirectionalIntensity nuHat(const SetModel& k, const BoundaryDensitySpec& spec) {
  if (spec.dim() != k.dim() || spec.componentCount() != k.components().size())
    throw SpecMismatch("density spec was built for a different set model");
  const std::size_t d = k.dim();
  std::vector<DirectionalAtom> atoms;
  struct Part {
    std::function<double(const Vector&)> density;
    double mass;
    double max;
  };
  std::vector<Part> parts;

  auto addFacets = [&](const HPolytope& p, const std::vector<double>& g, double sign) {
    if (g.size() != p.halfspaces().size()) throw SpecMismatch("facet weight count does not match facet count");
    const auto areas = facetMeasures(p);
    for (std::size_t f = 0; f < g.size(); ++f) {
      const double w = g[f] * areas[f];
      if (w > 0.0) atoms.push_back({sign * p.halfspaces()[f].normal, w});
    }
  };

  for (std::size_t i = 0; i < k.components().size(); ++i) {
    if (!spec.carriesMass(i)) continue;
    const Component& c = k.components()[i];
    const auto fw = spec.facetWeights().find(i);
    if (const auto* p = std::get_if<HPolytope>(&c)) {
      if (fw == spec.facetWeights().end()) throw SpecMismatch("no facet weights for polytope component " + std::to_string(i));
      addFacets(*p, fw->second, 1.0);
    } else if (const auto* b = std::get_if<Ball>(&c)) {
      const double scale = spec.normConstant() * std::pow(b->radius, static_cast<double>(d) - 1.0);
      const SphericalWeight& w = spec.sphericalWeight();
      if (!w.value) throw SpecMismatch("no spherical weight for ball component " + std::to_string(i));
      if (d == 1) {
        for (double s : {1.0, -1.0}) {
          const double m = scale * w.value(Vector{s});
          if (m > 0.0) atoms.push_back({Vector{s}, m});
        }
      } else {
        auto f = w.value;
        parts.push_back({[f, scale](const Vector& u) { return scale * f(u); }, scale * w.integral, scale * w.maxValue});
      }
    } else {
      const auto& inner = std::get<ComplementBody>(c).inner;
      const auto* p = std::get_if<HPolytope>(&inner);
      if (!p || fw == spec.facetWeights().end())
        throw SpecMismatch("boundary weights are only supported on complements of polytopes");
      // Outward normals of cl(C^c) point into C.
      addFacets(*p, fw->second, -1.0);
    }
  }

  std::optional<SphericalDensity> spherical;
  if (parts.size() == 1) {
    spherical = SphericalDensity{parts[0].density, parts[0].mass, parts[0].max};
  } else if (parts.size() > 1) {
    double mass = 0.0, max = 0.0;
    for (const auto& p : parts) {
      mass += p.mass;
      max += p.max;
    }
    auto fns = parts;
    spherical = SphericalDensity{[fns](const Vector& u) {
                                   double s = 0.0;
                                   for (const auto& p : fns) s += p.density(u);
                                   return s;
                                 },
                                 mass, max};
  }
  if (atoms.empty() && !spherical) throw SpecMismatch("density spec puts no weight on the boundary");
  return DirectionalIntensity(d, std::move(atoms), std::move(spherical));
}

// ---------------------------------------------------------------------------

QuadratureValue lambdaFunctionalDetailed(const DirectionalIntensity& nu, const VCompact& l, double alpha) {
  requireValidAlpha(alpha);
  if (l.dim() != nu.dim()) throw InvalidArgument("test body and directional measure differ in dimension");
  const double a1 = alpha + 1.0;
  auto integrand = [&](const Vector& u) {
    const double h = support(l, u);
    return h > 0.0 ? std::pow(h, a1) / a1 : 0.0;
  };
  QuadratureValue out;
  for (const auto& atom : nu.atoms()) out.value += atom.weight * integrand(atom.direction);
  if (const auto& sph = nu.spherical()) {
    if (nu.dim() == 2) {
      const std::size_t n = tol::kCircleQuadratureNodes;
      double sum = 0.0;
      for (std::size_t j = 0; j < n; ++j) {
        const Vector u = circlePoint(kTwoPi * static_cast<double>(j) / n);
        sum += sph->density(u) * integrand(u);
      }
      out.value += sum * kTwoPi / static_cast<double>(n);
    } else {
      // Fixed stream: the functional is a deterministic function of its inputs.
      RngStream rng(0x6c616d626461ULL, 0);
      const std::size_t n = tol::kSphereMonteCarloDirections;
      double sum = 0.0, sumSq = 0.0;
      for (std::size_t j = 0; j < n; ++j) {
        const Vector u = rng.uniformOnSphere(3);
        const double v = sph->density(u) * integrand(u);
        sum += v;
        sumSq += v * v;
      }
      const double area = unitSphereArea(3);
      const double mean = sum / static_cast<double>(n);
      const double var = std::max(0.0, sumSq / static_cast<double>(n) - mean * mean);
      out.value += area * mean;
      out.standardError = area * std::sqrt(var / static_cast<double>(n));
    }
  }
  return out;
}

double lambdaFunctional(const DirectionalIntensity& nu, const VCompact& l, double alpha) {
  return lambdaFunctionalDetailed(nu, l, alpha).value;
}

// ---------------------------------------------------------------------------

namespace {

bool containsOrigin(const Ball& b) { return norm(b.center) <= b.radius; }

// Closed-form mass of component i outside K eroded by eps L, if available.
std::optional<double> componentErosion(const Component& c, const BoundaryDensitySpec& spec, const VCompact& l,
                                       double eps) {
  const bool uniformLike = spec.kind() == DensityKind::Uniform ||
                           (spec.kind() == DensityKind::DistPowerPolytope && spec.alpha() == 0.0);
  if (uniformLike) {
    if (const auto* p = std::get_if<HPolytope>(&c)) {
      if (p->dim() > 3) return std::nullopt;
      // The part of the erosion inside P has offsets b - eps h(L,u)^+.
      if (auto box = p->asBox()) {
        const auto& [lo, hi] = *box;
        double logKept = 0.0;
        for (std::size_t i = 0; i < lo.dim(); ++i) {
          const double side = hi[i] - lo[i];
          const double cut = eps * (std::max(0.0, support(l, Vector::unit(lo.dim(), i))) +
                                    std::max(0.0, support(l, -Vector::unit(lo.dim(), i))));
          if (cut >= side) return spec.normConstant() * volumeExact(*p);
          logKept += std::log1p(-cut / side);
        }
        return spec.normConstant() * volumeExact(*p) * -std::expm1(logKept);
      }
      std::vector<Halfspace> hs = p->halfspaces();
      for (auto& h : hs) h.offset -= eps * std::max(0.0, support(l, h.normal));
      double kept = 0.0;
      try {
        kept = volumeExact(HPolytope::fromCanonical(p->dim(), std::move(hs), false));
      } catch (const EmptyRegion&) {
        kept = 0.0;
      }
      return spec.normConstant() * (volumeExact(*p) - kept);
    }
    if (const auto* b = std::get_if<Ball>(&c)) {
      if (!l.isBall() || !containsOrigin(l.asBall())) return std::nullopt;
      const double x = eps * l.asBall().radius / b->radius;
      const double full = spec.normConstant() * volumeExact(*b);
      if (x >= 1.0) return full;
      return full * -std::expm1(static_cast<double>(b->dim()) * std::log1p(-x));
    }
    return std::nullopt;
  }
  if (spec.kind() == DensityKind::RadialPowerBall) {
    const auto* b = std::get_if<Ball>(&c);
    if (!b || !l.isBall() || norm(l.asBall().center) != 0.0) return std::nullopt;
    return spec.mass() * radialTailFraction(eps * l.asBall().radius / b->radius, spec.alpha(), b->dim());
  }
  return std::nullopt;
}

void requireErosionPreconditions(const SetModel& k, const BoundaryDensitySpec& spec, const VCompact& l, double eps) {
  if (!(eps >= 0.0) || !std::isfinite(eps)) throw InvalidArgument("eps must be finite and >= 0, got " + fmt(eps));
  if (spec.dim() != k.dim() || spec.componentCount() != k.components().size())
    throw SpecMismatch("density spec was built for a different set model");
  if (l.dim() != k.dim()) throw InvalidArgument("test body and set model differ in dimension");
  if (!k.isSingleComponent() && eps * l.diameter() >= k.separation())
    throw PreconditionViolation("eps * diam(L) = " + fmt(eps * l.diameter()) +
                                " must be below the component separation " + fmt(k.separation()));
}

std::optional<double> exactErosion(const SetModel& k, const BoundaryDensitySpec& spec, const VCompact& l,
                                   double eps) {
  if (!spec.samplable()) return std::nullopt;
  // Beyond this scale a shifted copy of eps L could reach another component.
  if (!k.isSingleComponent() && eps * l.radiusBound() >= k.separation()) return std::nullopt;
  double total = 0.0;
  for (std::size_t i : spec.massComponents()) {
    auto v = componentErosion(k.components()[i], spec, l, eps);
    if (!v) return std::nullopt;
    total += *v;
  }
  return total;
}

}  // namespace

bool erosionHasClosedForm(const SetModel& k, const BoundaryDensitySpec& spec, const VCompact& l, double eps) {
  requireErosionPreconditions(k, spec, l, eps);
  return eps == 0.0 || exactErosion(k, spec, l, eps).has_value();
}

ErosionMeasure erosionMu(const SetModel& k, const BoundaryDensitySpec& spec, const VCompact& l, double eps,
                         const ErosionOptions& options) {
  requireErosionPreconditions(k, spec, l, eps);
  if (options.method != ErosionMethod::MonteCarlo) {
    if (eps == 0.0) return {0.0, "exact", std::nullopt};
    if (auto v = exactErosion(k, spec, l, eps)) return {*v, "exact", std::nullopt};
    if (options.method == ErosionMethod::Exact)
      throw UnsupportedSpec("no closed form for erosion of this (K, density, L) combination");
  }
  if (options.samples == 0) throw InvalidArgument("Monte Carlo erosion needs at least one sample");

  const MuSampler sampler(k, spec);
  const ErosionRegion region = erode(k, l, eps);
  // Fixed-size chunks on their own streams keep the estimate independent of
  // the worker count.
  constexpr std::size_t kChunk = 65536;
  const std::size_t chunks = (options.samples + kChunk - 1) / kChunk;
  std::vector<std::size_t> misses(chunks, 0);
  parallelFor(chunks, options.workers, [&](std::size_t c) {
    RngStream rng(options.rootSeed, c);
    const std::size_t count = std::min(kChunk, options.samples - c * kChunk);
    std::size_t m = 0;
    for (std::size_t j = 0; j < count; ++j)
      if (!region.contains(sampler.sample(rng))) ++m;
    misses[c] = m;
  });
  std::size_t total = 0;
  for (auto m : misses) total += m;
  const double n = static_cast<double>(options.samples);
  const double p = static_cast<double>(total) / n;
  return {spec.mass() * p, "monte-carlo", spec.mass() * std::sqrt(p * (1.0 - p) / n)};
}

// ---------------------------------------------------------------------------

ReachData::ReachData(double dp, double dm, double r, double h) : deltaPlus(dp), deltaMinus(dm), rBound(r), hVal(h) {
  if (!(dp > 0.0) || !(dm > 0.0) || !(r > 0.0) || !std::isfinite(dp) || !std::isfinite(dm) || !std::isfinite(r))
    throw InvalidArgument("reach distances and the radius bound must be finite and positive");
  if (!std::isfinite(h) || std::abs(h) > r * (1.0 + 1e-12))
    throw InvalidArgument("|h(L,-u)| = " + fmt(std::abs(h)) + " exceeds the radius bound " + fmt(r));
}

TBounds tBounds(double eps, const ReachData& rd) {
  const double limit = std::min({rd.deltaPlus, rd.deltaMinus, 1.0}) / rd.rBound;
  if (!(eps > 0.0) || !(eps < limit))
    throw DomainError("eps = " + fmt(eps) + " outside (0, " + fmt(limit) + ")");
  const double h = std::clamp(rd.hVal, -rd.rBound, rd.rBound);
  const double x = eps * eps * (rd.rBound * rd.rBound - h * h);
  // delta - sqrt(delta^2 - x), written without cancellation.
  auto sag = [x](double delta) { return x / (delta + std::sqrt(delta * delta - x)); };
  TBounds out;
  out.tMinus = std::max(0.0, eps * h + sag(rd.deltaMinus));
  out.tPlus = std::max(0.0, eps * h - sag(rd.deltaPlus));
  return out;
}

namespace {

std::vector<Vector> fibonacciSphere(std::size_t n) {
  std::vector<Vector> out;
  const double golden = std::numbers::pi * (3.0 - std::sqrt(5.0));
  for (std::size_t i = 0; i < n; ++i) {
    const double z = 1.0 - (2.0 * static_cast<double>(i) + 1.0) / static_cast<double>(n);
    const double rho = std::sqrt(std::max(0.0, 1.0 - z * z));
    const double phi = golden * static_cast<double>(i);
    out.push_back(Vector{rho * std::cos(phi), rho * std::sin(phi), z});
  }
  return out;
}

}  // namespace

bool hemisphereContained(const DirectionalIntensity& nu) {
  std::vector<Vector> dirs;
  for (const auto& a : nu.atoms())
    if (a.weight > 0.0) dirs.push_back(a.direction);
  if (const auto& sph = nu.spherical()) {
    std::vector<Vector> grid;
    if (nu.dim() == 2) {
      for (std::size_t j = 0; j < tol::kCircleQuadratureNodes; ++j)
        grid.push_back(circlePoint(kTwoPi * static_cast<double>(j) / tol::kCircleQuadratureNodes));
    } else {
      grid = fibonacciSphere(tol::kSphereSupportLattice);
    }
    for (const auto& u : grid)
      if (sph->density(u) > 0.0) dirs.push_back(u);
  }
  if (dirs.empty()) return true;
  return closedHemisphereWitness(dirs, nu.dim()).has_value();
}

}  // namespace zerocell
