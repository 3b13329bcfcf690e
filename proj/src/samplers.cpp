#include "zerocell/samplers.hpp"

#include <algorithm>
#include <cmath>

#include "zerocell/tolerances.hpp"

namespace zerocell {

namespace {

std::size_t pickIndex(const std::vector<double>& cumulative, RngStream& rng) {
  if (cumulative.size() == 1) return 0;
  const double x = rng.uniform() * cumulative.back();
  const auto it = std::upper_bound(cumulative.begin(), cumulative.end(), x);
  return std::min<std::size_t>(static_cast<std::size_t>(it - cumulative.begin()), cumulative.size() - 1);
}

}  // namespace

MuSampler::MuSampler(const SetModel& k, const BoundaryDensitySpec& spec)
    : dim_(k.dim()), alpha_(spec.alpha()), weight_(spec.sphericalWeight()) {
  if (spec.dim() != k.dim() || spec.componentCount() != k.components().size())
    throw SpecMismatch("density spec was built for a different set model");
  if (!spec.samplable()) throw UnsupportedSpec("density spec describes boundary weights only and cannot be sampled");

  auto addUniform = [&](const Component& c) {
    Piece piece;
    double mass = 0.0;
    if (const auto* p = std::get_if<HPolytope>(&c)) {
      if (auto box = p->asBox()) {
        piece.kind = Piece::Kind::Box;
        piece.lo = box->first;
        piece.hi = box->second;
      } else {
        piece.kind = Piece::Kind::PolytopeRejection;
        const auto verts = polytopeVertices(*p);
        piece.lo = piece.hi = verts.front();
        for (const auto& v : verts)
          for (std::size_t i = 0; i < dim_; ++i) {
            piece.lo[i] = std::min(piece.lo[i], v[i]);
            piece.hi[i] = std::max(piece.hi[i], v[i]);
          }
        piece.polytope = *p;
      }
      mass = volumeExact(*p);
    } else if (const auto* b = std::get_if<Ball>(&c)) {
      piece.kind = Piece::Kind::BallUniform;
      piece.center = b->center;
      piece.radius = b->radius;
      mass = volumeExact(*b);
    } else {
      throw UnsupportedSpec("cannot sample uniformly from an unbounded complement component");
    }
    pieces_.push_back(std::move(piece));
    cumulative_.push_back((cumulative_.empty() ? 0.0 : cumulative_.back()) + mass);
  };

  switch (spec.kind()) {
    case DensityKind::Uniform:
      for (std::size_t i : spec.massComponents()) addUniform(k.components()[i]);
      break;
    case DensityKind::DistPowerPolytope:
      if (spec.alpha() != 0.0)
        throw UnsupportedSpec("distance power sampling on polytopes is only available for alpha = 0");
      addUniform(k.components()[spec.massComponents().front()]);
      break;
    case DensityKind::RadialPowerBall: {
      const auto& b = std::get<Ball>(k.components()[spec.massComponents().front()]);
      if (!(weight_.maxValue > 0.0)) throw MissingDensityBound("spherical weight needs a positive upper bound");
      Piece piece;
      piece.kind = Piece::Kind::BallRadial;
      piece.center = b.center;
      piece.radius = b.radius;
      pieces_.push_back(std::move(piece));
      cumulative_.push_back(1.0);
      break;
    }
  }
  if (pieces_.empty()) throw UnsupportedSpec("density spec has no component to sample from");
}

Vector MuSampler::sample(RngStream& rng) const { return samplePiece(pieces_[pickIndex(cumulative_, rng)], rng); }

Vector MuSampler::samplePiece(const Piece& piece, RngStream& rng) const {
  switch (piece.kind) {
    case Piece::Kind::Box: {
      Vector x(dim_);
      for (std::size_t i = 0; i < dim_; ++i) x[i] = rng.uniform(piece.lo[i], piece.hi[i]);
      return x;
    }
    case Piece::Kind::BallUniform:
      return piece.center + piece.radius * rng.uniformInBall(dim_);
    case Piece::Kind::PolytopeRejection:
      for (std::size_t attempt = 0; attempt < tol::kRejectionCap; ++attempt) {
        Vector x(dim_);
        for (std::size_t i = 0; i < dim_; ++i) x[i] = rng.uniform(piece.lo[i], piece.hi[i]);
        if (piece.polytope->contains(x)) return x;
      }
      throw SamplerStall("polytope rejection sampler exceeded " + std::to_string(tol::kRejectionCap) + " attempts");
    case Piece::Kind::BallRadial: {
      // Depth fraction s = 1 - r/rho has density s^alpha (1-s)^(d-1): propose
      // from s^alpha by inversion, accept with (1-s)^(d-1).
      const double gamma = 1.0 / (alpha_ + 1.0);
      const double dm1 = static_cast<double>(dim_) - 1.0;
      double s = -1.0;
      for (std::size_t attempt = 0; attempt < tol::kRejectionCap && s < 0.0; ++attempt) {
        const double prop = std::pow(rng.uniformPositive(), gamma);
        if (dm1 == 0.0 || rng.uniform() < std::pow(1.0 - prop, dm1)) s = prop;
      }
      if (s < 0.0) throw SamplerStall("radial sampler exceeded the rejection cap");
      for (std::size_t attempt = 0; attempt < tol::kRejectionCap; ++attempt) {
        const Vector u = rng.uniformOnSphere(dim_);
        if (rng.uniform() * weight_.maxValue < weight_.value(u)) return piece.center + piece.radius * (1.0 - s) * u;
      }
      throw SamplerStall("direction sampler exceeded the rejection cap");
    }
  }
  throw UnsupportedSpec("unknown sampler piece");
}

Vector sampleMu(const SetModel& k, const BoundaryDensitySpec& spec, RngStream& rng) {
  return MuSampler(k, spec).sample(rng);
}

// ---------------------------------------------------------------------------

HyperplaneSampler::HyperplaneSampler(const DirectionalIntensity& nu, double alpha, double radius)
    : nu_(nu), alpha_(alpha), radius_(radius) {
  requireValidAlpha(alpha);
  if (!(radius > 0.0) || !std::isfinite(radius)) throw InvalidArgument("window radius must be finite and positive");
  if (nu_.spherical() && !nu_.spherical()->maxDensity)
    throw MissingDensityBound("spherical part of the directional measure has no declared maximum");
  if (nu_.spherical() && !(*nu_.spherical()->maxDensity > 0.0))
    throw MissingDensityBound("declared maximum of the spherical density must be positive");
  expectedCount_ = nu_.totalMass() * std::pow(radius, alpha + 1.0) / (alpha + 1.0);
  double acc = 0.0;
  for (const auto& a : nu_.atoms()) cumulative_.push_back(acc += a.weight);
  if (nu_.spherical()) cumulative_.push_back(acc += nu_.spherical()->totalMass);
}

Vector HyperplaneSampler::sampleDirection(RngStream& rng) const {
  const std::size_t i = pickIndex(cumulative_, rng);
  if (i < nu_.atoms().size()) return nu_.atoms()[i].direction;
  const auto& sph = *nu_.spherical();
  for (std::size_t attempt = 0; attempt < tol::kRejectionCap; ++attempt) {
    const Vector u = rng.uniformOnSphere(nu_.dim());
    if (rng.uniform() * *sph.maxDensity < sph.density(u)) return u;
  }
  throw SamplerStall("spherical direction sampler exceeded the rejection cap");
}

HyperplaneBatch HyperplaneSampler::sample(RngStream& rng) const {
  HyperplaneBatch batch;
  batch.windowRadius = radius_;
  batch.alpha = alpha_;
  const std::uint64_t count = rng.poisson(expectedCount_);
  const double gamma = 1.0 / (alpha_ + 1.0);
  batch.pairs.reserve(count);
  for (std::uint64_t i = 0; i < count; ++i) {
    const double t = radius_ * std::pow(rng.uniformPositive(), gamma);
    batch.pairs.push_back({t, sampleDirection(rng)});
  }
  return batch;
}

HyperplaneBatch sampleHyperplanes(const DirectionalIntensity& nu, double alpha, double radius, RngStream& rng) {
  return HyperplaneSampler(nu, alpha, radius).sample(rng);
}

double defaultWindowRadius(const DirectionalIntensity& nu, double alpha, double tailProbability) {
  requireValidAlpha(alpha);
  if (!(tailProbability > 0.0 && tailProbability < 1.0)) throw InvalidArgument("tail probability must be in (0, 1)");
  return std::pow((alpha + 1.0) * -std::log(tailProbability) / nu.totalMass(), 1.0 / (alpha + 1.0));
}

ZeroCellSample zeroCell(const HyperplaneBatch& batch, const Box& window, bool possiblyUnbounded) {
  const std::size_t d = window.dim();
  for (std::size_t i = 0; i < d; ++i)
    if (!(window.lo[i] < 0.0 && window.hi[i] > 0.0))
      throw InvalidArgument("zero-cell window must contain the origin in its interior");
  std::vector<Halfspace> hs = window.toPolytope().halfspaces();
  const std::size_t windowFacets = hs.size();
  for (const auto& p : batch.pairs) {
    if (p.u.dim() != d) throw InvalidArgument("hyperplane direction has wrong dimension");
    if (!(p.t > 0.0)) throw InvalidArgument("hyperplane distance must be positive");
    hs.push_back({p.u, p.t});
  }
  const std::vector<Halfspace> windowHs(hs.begin(), hs.begin() + static_cast<std::ptrdiff_t>(windowFacets));
  ZeroCellSample out{HPolytope(d, std::move(hs), true), false, possiblyUnbounded};

  // A window facet is active when it survives canonicalization and touches
  // the cell in a set of positive (d-1)-measure.
  const auto& cellHs = out.cell.halfspaces();
  std::vector<double> measures;
  if (d >= 2) measures = facetMeasures(out.cell);
  for (const auto& w : windowHs) {
    for (std::size_t j = 0; j < cellHs.size(); ++j) {
      if (!(cellHs[j].normal == w.normal) || cellHs[j].offset != w.offset) continue;
      bool cut = false;
      for (const auto& p : batch.pairs)
        if (p.t == w.offset && norm(p.u - w.normal) <= tol::kSameNormal) cut = true;
      if (cut) continue;
      if (d == 1 || measures[j] > tol::kFeasibility) out.truncatedByWindow = true;
    }
  }
  return out;
}

}  // namespace zerocell
