#pragma once

#include <cstdint>
#include <random>

#include "zerocell/vector.hpp"

namespace zerocell {

/// Reproducible random stream keyed by (rootSeed, streamId).
///
/// The engine is std::mt19937_64 seeded through std::seed_seq, both of which
/// are specified bit-exactly by the standard. All derived variates are
/// computed here rather than through <random> distributions, whose outputs
/// are implementation-defined, so a stream replays identically on every
/// toolchain.
class RngStream {
 public:
  RngStream(std::uint64_t rootSeed, std::uint64_t streamId);

  std::uint64_t rootSeed() const { return rootSeed_; }
  std::uint64_t streamId() const { return streamId_; }
  /// Number of 64-bit words consumed so far.
  std::uint64_t counter() const { return counter_; }

  std::uint64_t nextU64() {
    ++counter_;
    return engine_();
  }

  /// Uniform on [0, 1) with 53 random bits.
  double uniform() { return static_cast<double>(nextU64() >> 11) * 0x1.0p-53; }
  /// Uniform on (0, 1].
  double uniformPositive() { return 1.0 - uniform(); }
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }
  /// Uniform integer in [0, bound).
  std::uint64_t uniformIndex(std::uint64_t bound);

  double standardNormal();
  double exponential(double rate = 1.0);
  std::uint64_t poisson(double mean);

  /// Uniformly distributed unit vector in R^dim.
  Vector uniformOnSphere(std::size_t dim);
  /// Uniformly distributed point in the closed unit ball of R^dim.
  Vector uniformInBall(std::size_t dim);

 private:
  std::mt19937_64 engine_;
  std::uint64_t rootSeed_;
  std::uint64_t streamId_;
  std::uint64_t counter_ = 0;
};

/// Deterministic 64-bit mixer used to derive child seeds from (seed, tag)
/// pairs, e.g. one root seed per sweep point.
std::uint64_t deriveSeed(std::uint64_t seed, std::uint64_t tag);

}  // namespace zerocell
