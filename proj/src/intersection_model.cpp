#include "zerocell/intersection_model.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "zerocell/parallel.hpp"

namespace zerocell {

namespace {

void requireProbability(const BoundaryDensitySpec& spec) {
  if (std::abs(spec.mass() - 1.0) > 1e-12)
    throw InvalidArgument("intersections of translates need a probability measure (mass 1)");
}

double scaleExponentPower(std::size_t n, double gamma) { return std::pow(static_cast<double>(n), gamma); }

double clippedVolume(const std::vector<Halfspace>& hs, const Box& window) {
  std::vector<Halfspace> all = window.toPolytope().halfspaces();
  all.insert(all.end(), hs.begin(), hs.end());
  try {
    return volumeExact(HPolytope(window.dim(), std::move(all), false));
  } catch (const EmptyRegion&) {
    return 0.0;
  }
}

}  // namespace

InclusionTrial::InclusionTrial(const VCompact& l, const SetModel& k, const BoundaryDensitySpec& spec, std::size_t n)
    : sampler_(k, spec),
      region_(erode(k, l, n == 0 ? 0.0 : std::pow(static_cast<double>(n), -spec.gamma()))),
      n_(n),
      gamma_(spec.gamma()) {
  if (n == 0) throw InvalidArgument("n must be >= 1");
  requireProbability(spec);
}

InclusionTrialResult InclusionTrial::run(RngStream& rng, bool countAllFailures) const {
  InclusionTrialResult out;
  out.n = n_;
  out.gammaUsed = gamma_;
  for (std::size_t i = 0; i < n_; ++i) {
    if (!region_.contains(sampler_.sample(rng))) {
      ++out.failures;
      if (!countAllFailures) break;
    }
  }
  out.included = out.failures == 0;
  return out;
}

InclusionTrialResult trialIncludes(const VCompact& l, const SetModel& k, const BoundaryDensitySpec& spec,
                                   std::size_t n, RngStream& rng, bool countAllFailures) {
  return InclusionTrial(l, k, spec, n).run(rng, countAllFailures);
}

BinomialEstimate empiricalInclusion(const VCompact& l, const SetModel& k, const BoundaryDensitySpec& spec,
                                    std::size_t n, std::size_t trials, std::uint64_t rootSeed, unsigned workers) {
  if (trials == 0) throw InvalidArgument("trials must be >= 1");
  const InclusionTrial trial(l, k, spec, n);
  std::vector<char> hit(trials, 0);
  parallelFor(trials, workers, [&](std::size_t i) {
    RngStream rng(rootSeed, i);
    hit[i] = trial.run(rng).included ? 1 : 0;
  });
  std::size_t successes = 0;
  for (char h : hit) successes += static_cast<std::size_t>(h);
  return BinomialEstimate::from(successes, trials);
}

ClosedFormInclusion closedFormInclusion(const SetModel& k, const BoundaryDensitySpec& spec, const VCompact& l,
                                        std::size_t n, const ErosionOptions& options) {
  if (n == 0) throw InvalidArgument("n must be >= 1");
  requireProbability(spec);
  const double nn = static_cast<double>(n);
  const ErosionMeasure mu = erosionMu(k, spec, l, std::pow(nn, -spec.gamma()), options);
  ClosedFormInclusion out;
  out.method = mu.method;
  const double m = std::clamp(mu.value, 0.0, 1.0);
  out.value = m >= 1.0 ? 0.0 : std::exp(nn * std::log1p(-m));
  if (mu.standardError && m < 1.0) out.standardError = nn * std::exp((nn - 1.0) * std::log1p(-m)) * *mu.standardError;
  return out;
}

RealizedXn realizeXn(const HPolytope& k, const std::vector<Vector>& points) {
  if (points.empty()) throw InvalidArgument("realizeXn needs at least one point");
  std::vector<Halfspace> hs = k.halfspaces();
  for (auto& h : hs) {
    double reach = -std::numeric_limits<double>::infinity();
    for (const auto& p : points) reach = std::max(reach, dot(h.normal, p));
    h.offset -= reach;
  }
  RealizedXn out{HPolytope::fromCanonical(k.dim(), std::move(hs), false), false};
  out.empty = isEmpty(out.region);
  return out;
}

// ---------------------------------------------------------------------------

namespace {

std::vector<double> xnVolumes(const XnModel& model, const std::vector<Box>& windows, std::size_t trials,
                              std::uint64_t rootSeed, const VolumeOptions& options) {
  requireProbability(model.spec);
  if (model.n == 0) throw InvalidArgument("n must be >= 1");
  const MuSampler sampler(model.k, model.spec);
  const double s = scaleExponentPower(model.n, model.spec.gamma());
  const double inv = 1.0 / s;
  std::vector<double> out(trials, 0.0);

  const auto* poly = model.k.isSingleComponent() ? std::get_if<HPolytope>(&model.k.components().front()) : nullptr;
  if (poly) {
    parallelFor(trials, options.workers, [&](std::size_t t) {
      RngStream rng(rootSeed, t);
      std::vector<Halfspace> hs = poly->halfspaces();
      std::vector<double> reach(hs.size(), -std::numeric_limits<double>::infinity());
      for (std::size_t j = 0; j < model.n; ++j) {
        const Vector x = sampler.sample(rng);
        for (std::size_t f = 0; f < hs.size(); ++f) reach[f] = std::max(reach[f], dot(hs[f].normal, x));
      }
      for (std::size_t f = 0; f < hs.size(); ++f) hs[f].offset = s * (hs[f].offset - reach[f]);
      double v = 0.0;
      for (const auto& w : windows) v += clippedVolume(hs, w);
      out[t] = v;
    });
    return out;
  }

  // Predicate path. Points whose translate of the whole (rescaled) window
  // stays inside K cannot cut the window and are skipped.
  std::vector<std::optional<ErosionRegion>> prune;
  for (const auto& w : windows) {
    const VCompact hull = VCompact::hull(w.corners());
    if (!model.k.isSingleComponent() && inv * hull.diameter() >= model.k.separation())
      prune.emplace_back(std::nullopt);
    else
      prune.emplace_back(erode(model.k, hull, inv));
  }
  parallelFor(trials, options.workers, [&](std::size_t t) {
    RngStream rng(rootSeed, t);
    std::vector<Vector> xi;
    xi.reserve(model.n);
    for (std::size_t j = 0; j < model.n; ++j) xi.push_back(sampler.sample(rng));
    double v = 0.0;
    for (std::size_t w = 0; w < windows.size(); ++w) {
      std::vector<Vector> relevant;
      for (const auto& x : xi)
        if (!prune[w] || !prune[w]->contains(x)) relevant.push_back(x);
      if (relevant.empty()) {
        v += windows[w].volume();
        continue;
      }
      RngStream probes(deriveSeed(rootSeed, w + 1), t);
      std::size_t hits = 0;
      for (std::size_t p = 0; p < options.probes; ++p) {
        Vector y(windows[w].dim());
        for (std::size_t i = 0; i < y.dim(); ++i) y[i] = probes.uniform(windows[w].lo[i], windows[w].hi[i]);
        const Vector z = inv * y;
        bool inside = true;
        for (const auto& x : relevant)
          if (!model.k.contains(x + z)) {
            inside = false;
            break;
          }
        if (inside) ++hits;
      }
      v += windows[w].volume() * static_cast<double>(hits) / static_cast<double>(options.probes);
    }
    out[t] = v;
  });
  return out;
}

std::vector<double> zVolumes(const ZModel& model, const std::vector<Box>& windows, std::size_t trials,
                             std::uint64_t rootSeed, const VolumeOptions& options) {
  // Hyperplanes farther than every window corner cannot cut any window.
  double radius = 0.0;
  for (const auto& w : windows) radius = std::max(radius, w.maxNorm());
  if (!(radius > 0.0)) throw InvalidArgument("windows must not collapse to the origin");
  const HyperplaneSampler sampler(model.nu, model.alpha, radius);
  std::vector<double> out(trials, 0.0);
  parallelFor(trials, options.workers, [&](std::size_t t) {
    RngStream rng(rootSeed, t);
    const HyperplaneBatch batch = sampler.sample(rng);
    std::vector<Halfspace> hs;
    hs.reserve(batch.pairs.size());
    for (const auto& p : batch.pairs) hs.push_back({p.u, p.t});
    double v = 0.0;
    for (const auto& w : windows) v += clippedVolume(hs, w);
    out[t] = v;
  });
  return out;
}

}  // namespace

std::vector<double> perTrialVolumes(const MomentModel& model, const std::vector<Box>& windows, std::size_t trials,
                                    std::uint64_t rootSeed, const VolumeOptions& options) {
  if (trials == 0) throw InvalidArgument("trials must be >= 1");
  if (windows.empty()) throw InvalidArgument("at least one window is required");
  if (options.probes == 0) throw InvalidArgument("probes must be >= 1");
  const std::size_t d = std::visit(
      [](const auto& m) {
        if constexpr (std::is_same_v<std::decay_t<decltype(m)>, XnModel>)
          return m.k.dim();
        else
          return m.nu.dim();
      },
      model);
  for (const auto& w : windows)
    if (w.dim() != d) throw InvalidArgument("window dimension does not match the model");
  if (const auto* xn = std::get_if<XnModel>(&model)) return xnVolumes(*xn, windows, trials, rootSeed, options);
  return zVolumes(std::get<ZModel>(model), windows, trials, rootSeed, options);
}

MomentEstimate volumeMoment(const MomentModel& model, unsigned m, const Box& window, std::size_t trials,
                            std::uint64_t rootSeed, const VolumeOptions& options) {
  if (m == 0) throw InvalidArgument("moment order must be >= 1");
  std::vector<double> v = perTrialVolumes(model, {window}, trials, rootSeed, options);
  for (auto& x : v) x = std::pow(x, static_cast<double>(m));
  const MeanEstimate est = meanOf(v);
  MomentEstimate out;
  out.m = m;
  out.value = est.mean;
  out.standardError = est.standardError;
  out.window = window;
  out.n = std::holds_alternative<XnModel>(model) ? std::get<XnModel>(model).n : 0;
  out.trials = trials;
  return out;
}

}  // namespace zerocell
