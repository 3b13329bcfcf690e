#pragma once

#include <cstddef>
#include <cstdint>

namespace zerocell::tol {

// Geometric tolerance table. Every feasibility / incidence comparison in the
// library goes through one of these.

/// Allowed deviation of a halfspace normal from unit length.
inline constexpr double kUnitNormal = 1e-12;
/// Two normals closer than this (componentwise) are the same normal.
inline constexpr double kSameNormal = 1e-12;
/// Absolute slack for vertex feasibility, incidence and emptiness tests.
inline constexpr double kFeasibility = 1e-9;
/// Stationarity target of the alternating-projection distance solver.
inline constexpr double kStationarity = 1e-9;
/// Angular slack used by the closed-hemisphere tests.
inline constexpr double kAngular = 1e-9;

/// Attempts before a rejection sampler reports a stall.
inline constexpr std::size_t kRejectionCap = 1'000'000;

/// Trapezoid nodes for circle integrals (d = 2).
inline constexpr std::size_t kCircleQuadratureNodes = 4096;
/// Monte Carlo directions for sphere integrals (d = 3).
inline constexpr std::size_t kSphereMonteCarloDirections = 1'000'000;
/// Lattice points used to sample a spherical density's support in d = 3.
inline constexpr std::size_t kSphereSupportLattice = 256;

}  // namespace zerocell::tol
