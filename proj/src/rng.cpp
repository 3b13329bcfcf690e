#include "zerocell/rng.hpp"

#include <cmath>
#include <numbers>

namespace zerocell {

namespace {

std::mt19937_64 seededEngine(std::uint64_t rootSeed, std::uint64_t streamId) {
  std::seed_seq seq{static_cast<std::uint32_t>(rootSeed), static_cast<std::uint32_t>(rootSeed >> 32),
                    static_cast<std::uint32_t>(streamId), static_cast<std::uint32_t>(streamId >> 32),
                    0x7a65726fU};
  return std::mt19937_64(seq);
}

std::uint64_t poissonSmall(RngStream& rng, double mean) {
  const double limit = std::exp(-mean);
  std::uint64_t k = 0;
  double prod = rng.uniformPositive();
  while (prod > limit) {
    ++k;
    prod *= rng.uniformPositive();
  }
  return k;
}

}  // namespace

RngStream::RngStream(std::uint64_t rootSeed, std::uint64_t streamId)
    : engine_(seededEngine(rootSeed, streamId)), rootSeed_(rootSeed), streamId_(streamId) {}

std::uint64_t RngStream::uniformIndex(std::uint64_t bound) {
  if (bound <= 1) return 0;
  // Rejection keeps the result exactly uniform.
  const std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % bound);
  std::uint64_t x = nextU64();
  while (x >= limit) x = nextU64();
  return x % bound;
}

double RngStream::standardNormal() {
  // Marsaglia polar method, one variate per call.
  double u = 0.0, v = 0.0, s = 0.0;
  do {
    u = 2.0 * uniform() - 1.0;
    v = 2.0 * uniform() - 1.0;
    s = u * u + v * v;
  } while (s >= 1.0 || s == 0.0);
  return u * std::sqrt(-2.0 * std::log(s) / s);
}

double RngStream::exponential(double rate) { return -std::log(uniformPositive()) / rate; }

std::uint64_t RngStream::poisson(double mean) {
  if (!(mean >= 0.0) || !std::isfinite(mean)) throw InvalidArgument("poisson mean must be finite and >= 0");
  // Sum of independent Poisson pieces keeps the small-mean inversion exact.
  constexpr double kChunk = 25.0;
  std::uint64_t total = 0;
  while (mean > kChunk) {
    total += poissonSmall(*this, kChunk);
    mean -= kChunk;
  }
  return total + poissonSmall(*this, mean);
}

Vector RngStream::uniformOnSphere(std::size_t dim) {
  Vector v(dim);
  switch (dim) {
    case 1:
      v[0] = (nextU64() >> 63) ? 1.0 : -1.0;
      return v;
    case 2: {
      const double phi = 2.0 * std::numbers::pi * uniform();
      v[0] = std::cos(phi);
      v[1] = std::sin(phi);
      return v;
    }
    default: {
      // Archimedes: the height of a uniform point on S^2 is uniform.
      const double z = 2.0 * uniform() - 1.0;
      const double phi = 2.0 * std::numbers::pi * uniform();
      const double rho = std::sqrt(std::max(0.0, 1.0 - z * z));
      v[0] = rho * std::cos(phi);
      v[1] = rho * std::sin(phi);
      v[2] = z;
      return v;
    }
  }
}

Vector RngStream::uniformInBall(std::size_t dim) {
  Vector dir = uniformOnSphere(dim);
  const double r = std::pow(uniform(), 1.0 / static_cast<double>(dim));
  return dir * r;
}

std::uint64_t deriveSeed(std::uint64_t seed, std::uint64_t tag) {
  // splitmix64 finalizer over a tag-dependent increment.
  std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (tag + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

}  // namespace zerocell
