#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "zerocell/boundary_measures.hpp"
#include "zerocell/geometry.hpp"
#include "zerocell/samplers.hpp"
#include "zerocell/statistics.hpp"

namespace zerocell {

struct InclusionTrialResult {
  bool included = false;
  std::size_t n = 0;
  double gammaUsed = 0.0;
  /// Points outside K eroded by n^-gamma L. Counting stops at the first
  /// failure unless the full count was requested.
  std::size_t failures = 0;
};

/// Draws xi_1..xi_n from mu and tests L subset of n^gamma X_n, i.e.
/// xi_i + n^-gamma L subset of K for every i.
InclusionTrialResult trialIncludes(const VCompact& l, const SetModel& k, const BoundaryDensitySpec& spec,
                                   std::size_t n, RngStream& rng, bool countAllFailures = false);

/// The same test with the sampler and erosion prepared once for many trials.
class InclusionTrial {
 public:
  InclusionTrial(const VCompact& l, const SetModel& k, const BoundaryDensitySpec& spec, std::size_t n);
  InclusionTrialResult run(RngStream& rng, bool countAllFailures = false) const;

 private:
  MuSampler sampler_;
  ErosionRegion region_;
  std::size_t n_;
  double gamma_;
};

/// Success frequency over `trials` independent trials; trial i uses stream i.
BinomialEstimate empiricalInclusion(const VCompact& l, const SetModel& k, const BoundaryDensitySpec& spec,
                                    std::size_t n, std::size_t trials, std::uint64_t rootSeed, unsigned workers = 1);

struct ClosedFormInclusion {
  double value = 0.0;
  /// Delta-method error when the erosion measure was estimated.
  double standardError = 0.0;
  std::string method;
};

/// (1 - mu(K \ K eroded by n^-gamma L))^n.
ClosedFormInclusion closedFormInclusion(const SetModel& k, const BoundaryDensitySpec& spec, const VCompact& l,
                                        std::size_t n, const ErosionOptions& options = {});

struct RealizedXn {
  HPolytope region;
  bool empty = false;
};

/// Intersection of K - xi_j for a single bounded polytope K.
RealizedXn realizeXn(const HPolytope& k, const std::vector<Vector>& points);

struct XnModel {
  SetModel k;
  BoundaryDensitySpec spec;
  std::size_t n = 1;
};

struct ZModel {
  DirectionalIntensity nu;
  double alpha = 0.0;
};

using MomentModel = std::variant<XnModel, ZModel>;

struct VolumeOptions {
  /// Hit-or-miss probes per window when the realization has no exact volume.
  std::size_t probes = 4096;
  unsigned workers = 1;
};

/// V_d(realization intersected with the union of `windows`) for each trial.
/// Windows are disjoint boxes in the scaled frame (n^gamma X_n, or Z itself).
std::vector<double> perTrialVolumes(const MomentModel& model, const std::vector<Box>& windows, std::size_t trials,
                                    std::uint64_t rootSeed, const VolumeOptions& options = {});

struct MomentEstimate {
  unsigned m = 1;
  double value = 0.0;
  double standardError = 0.0;
  Box window{Vector{0.0}, Vector{0.0}};
  std::size_t n = 0;
  std::size_t trials = 0;
};

/// Mean over trials of V_d(realization intersected with window)^m.
MomentEstimate volumeMoment(const MomentModel& model, unsigned m, const Box& window, std::size_t trials,
                            std::uint64_t rootSeed, const VolumeOptions& options = {});

}  // namespace zerocell
