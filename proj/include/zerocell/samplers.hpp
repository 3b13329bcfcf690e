#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "zerocell/boundary_measures.hpp"
#include "zerocell/geometry.hpp"
#include "zerocell/rng.hpp"

namespace zerocell {

/// Draws points of K distributed according to mu.
///
/// Supported (K, spec) pairs:
///   - uniform on any bounded components (direct for boxes and balls,
///     bounding-box rejection for other polytopes);
///   - radial power on a ball, radius by rejection against s^alpha and
///     direction by rejection against the spherical weight;
///   - distance power on a polytope for alpha = 0 only.
class MuSampler {
 public:
  MuSampler(const SetModel& k, const BoundaryDensitySpec& spec);

  Vector sample(RngStream& rng) const;
  std::size_t dim() const { return dim_; }

 private:
  struct Piece {
    enum class Kind { Box, BallUniform, PolytopeRejection, BallRadial } kind;
    Vector lo, hi;  // box or bounding box
    std::optional<HPolytope> polytope;
    Vector center;
    double radius = 0.0;
  };

  Vector samplePiece(const Piece& piece, RngStream& rng) const;

  std::size_t dim_;
  double alpha_;
  SphericalWeight weight_;
  std::vector<Piece> pieces_;
  std::vector<double> cumulative_;
};

Vector sampleMu(const SetModel& k, const BoundaryDensitySpec& spec, RngStream& rng);

struct HyperplanePair {
  double t = 0.0;
  Vector u;
};

/// Hyperplanes {<x,u> = t} of the Poisson process restricted to t in (0, R].
struct HyperplaneBatch {
  std::vector<HyperplanePair> pairs;
  double windowRadius = 0.0;
  double alpha = 0.0;
};

/// Poisson process on (0, R] x S^{d-1} with intensity t^alpha dt x nu-hat.
class HyperplaneSampler {
 public:
  HyperplaneSampler(const DirectionalIntensity& nu, double alpha, double radius);

  HyperplaneBatch sample(RngStream& rng) const;
  Vector sampleDirection(RngStream& rng) const;
  /// Expected number of hyperplanes per batch.
  double expectedCount() const { return expectedCount_; }

 private:
  DirectionalIntensity nu_;
  double alpha_;
  double radius_;
  double expectedCount_;
  std::vector<double> cumulative_;  // atoms, then the spherical part
};

HyperplaneBatch sampleHyperplanes(const DirectionalIntensity& nu, double alpha, double radius, RngStream& rng);

/// Radius R with exp(-mass R^(alpha+1) / (alpha+1)) = tailProbability.
double defaultWindowRadius(const DirectionalIntensity& nu, double alpha, double tailProbability = 1e-6);

struct ZeroCellSample {
  HPolytope cell;
  bool truncatedByWindow = false;
  bool possiblyUnbounded = false;
};

/// Intersection of the batch's halfspaces {<x,u> <= t} with the window box,
/// which must contain the origin in its interior.
ZeroCellSample zeroCell(const HyperplaneBatch& batch, const Box& window, bool possiblyUnbounded = false);

}  // namespace zerocell
