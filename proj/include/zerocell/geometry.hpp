#pragma once

#include <cstddef>
#include <functional>
#include <memory>
#include <optional>
#include <utility>
#include <variant>
#include <vector>

#include "zerocell/rng.hpp"
#include "zerocell/vector.hpp"

namespace zerocell {

/// {x : <normal, x> <= offset} with a unit normal.
struct Halfspace {
  Vector normal;
  double offset = 0.0;
};

/// Intersection of finitely many halfspaces in canonical form: unit normals,
/// at most one halfspace per normal (duplicates keep the smaller offset).
class HPolytope {
 public:
  /// `bounded = true` additionally validates that the region is nonempty and
  /// bounded, and marks it as such.
  HPolytope(std::size_t dim, std::vector<Halfspace> halfspaces, bool bounded = true);

  /// Accepts arbitrary nonzero normals and rescales each row to unit length.
  static HPolytope fromInequalities(std::size_t dim, const std::vector<std::pair<Vector, double>>& rows,
                                    bool bounded = true);
  /// Axis-aligned box [lo, hi].
  static HPolytope box(const Vector& lo, const Vector& hi);
  /// No validation or merging: the caller guarantees unit, pairwise distinct
  /// normals (e.g. offsets changed on an already canonical polytope).
  static HPolytope fromCanonical(std::size_t dim, std::vector<Halfspace> halfspaces, bool bounded);

  std::size_t dim() const { return dim_; }
  const std::vector<Halfspace>& halfspaces() const { return halfspaces_; }
  bool bounded() const { return bounded_; }

  bool contains(const Vector& x) const {
    for (const auto& h : halfspaces_)
      if (dot(h.normal, x) > h.offset) return false;
    return true;
  }

  /// {s x : x in P} for s > 0.
  HPolytope scaled(double s) const;
  /// Halfspaces of both polytopes, canonicalized.
  HPolytope intersectedWith(const HPolytope& other, bool bounded) const;
  /// (lo, hi) when every normal is a signed coordinate axis and the box is closed.
  std::optional<std::pair<Vector, Vector>> asBox() const;

 private:
  struct Trusted {};
  HPolytope(Trusted, std::size_t dim, std::vector<Halfspace> halfspaces, bool bounded)
      : dim_(dim), halfspaces_(std::move(halfspaces)), bounded_(bounded) {}

  std::size_t dim_;
  std::vector<Halfspace> halfspaces_;
  bool bounded_;
};

/// Closed Euclidean ball B_r(center).
struct Ball {
  Ball(Vector center, double radius);

  std::size_t dim() const { return center.dim(); }
  bool contains(const Vector& x) const { return distance(x, center) <= radius; }

  Vector center;
  double radius;
};

/// Axis-aligned box used for sampling and observation windows.
struct Box {
  Box(Vector lo, Vector hi);
  /// [-halfWidth, halfWidth]^dim shifted by `center`.
  static Box centered(const Vector& center, double halfWidth);

  std::size_t dim() const { return lo.dim(); }
  double volume() const;
  bool contains(const Vector& x) const;
  HPolytope toPolytope() const { return HPolytope::box(lo, hi); }
  std::vector<Vector> corners() const;
  /// Largest distance from the origin to a point of the box.
  double maxNorm() const;

  Vector lo;
  Vector hi;
};

/// A compact test body: the convex hull of finitely many points, or a ball.
class VCompact {
 public:
  static VCompact hull(std::vector<Vector> vertices);
  static VCompact ball(Ball b);
  static VCompact point(const Vector& p) { return hull({p}); }

  std::size_t dim() const;
  bool isBall() const { return std::holds_alternative<Ball>(shape_); }
  const Ball& asBall() const { return std::get<Ball>(shape_); }
  const std::vector<Vector>& vertices() const { return std::get<std::vector<Vector>>(shape_); }

  /// Some point of the body (first vertex, or the ball center).
  Vector referencePoint() const;
  double diameter() const;
  /// Smallest r with L contained in B_r(0).
  double radiusBound() const;
  /// rho * L.
  VCompact scaled(double rho) const;

 private:
  explicit VCompact(std::variant<std::vector<Vector>, Ball> shape) : shape_(std::move(shape)) {}
  std::variant<std::vector<Vector>, Ball> shape_;
};

using ConvexBody = std::variant<HPolytope, Ball>;

/// cl(inner^c) for a bounded convex body with nonempty interior.
struct ComplementBody {
  explicit ComplementBody(ConvexBody inner);
  std::size_t dim() const;

  ConvexBody inner;
};

using Component = std::variant<HPolytope, Ball, ComplementBody>;

/// K as a finite union of pairwise separated, regular closed components.
class SetModel {
 public:
  SetModel(std::vector<Component> components, double separation);
  static SetModel single(Component c);

  std::size_t dim() const { return dim_; }
  const std::vector<Component>& components() const { return components_; }
  double separation() const { return separation_; }
  bool isSingleComponent() const { return components_.size() == 1; }

  /// Index of the component containing x, if any.
  std::optional<std::size_t> componentOf(const Vector& x) const;
  bool contains(const Vector& x) const { return componentOf(x).has_value(); }

 private:
  std::vector<Component> components_;
  double separation_;
  std::size_t dim_;
};

/// h(L, u) = max over L of <x, u>.
double support(const VCompact& body, const Vector& u);

namespace detail {
struct PreparedContainment;
}

/// K eroded by eps L, i.e. {x : x + eps L subset of K}.
class ErosionRegion {
 public:
  ErosionRegion(SetModel source, VCompact structuring, double scale);

  const SetModel& source() const { return source_; }
  const VCompact& structuring() const { return structuring_; }
  double scale() const { return scale_; }
  /// Present iff the source is a single HPolytope.
  const std::optional<HPolytope>& exactHRep() const { return exactHRep_; }
  /// Present iff the source is a single ball, L is a ball and the erosion is
  /// nonempty. An empty ball erosion sets `exactBallEmpty` instead.
  const std::optional<Ball>& exactBall() const { return exactBall_; }
  bool exactBallEmpty() const { return exactBallEmpty_; }

  bool contains(const Vector& x) const;

 private:
  SetModel source_;
  VCompact structuring_;
  double scale_;
  std::optional<HPolytope> exactHRep_;
  std::optional<Ball> exactBall_;
  bool exactBallEmpty_ = false;
  std::shared_ptr<const detail::PreparedContainment> prepared_;
};

ErosionRegion erode(const SetModel& k, const VCompact& l, double eps);

/// x + eps L subset of K.
bool containsSet(const SetModel& k, const VCompact& l, const Vector& x, double eps);

double volumeExact(const HPolytope& p);
double volumeExact(const Ball& b);

/// Volume of the unit ball in R^d.
double unitBallVolume(std::size_t dim);
/// Surface area of the unit sphere S^{d-1}.
double unitSphereArea(std::size_t dim);

struct MonteCarloEstimate {
  double estimate = 0.0;
  double standardError = 0.0;
};

using SamplingWindow = std::variant<Box, Ball>;

/// Hit-or-miss volume estimate of {x : member(x)} inside `window`.
MonteCarloEstimate volumeMC(const std::function<bool(const Vector&)>& member, const SamplingWindow& window,
                            std::size_t nSamples, RngStream& rng);

/// Counter-clockwise vertex cycle of a bounded planar polytope. A flat
/// polygon yields its two segment endpoints, a single point one vertex.
std::vector<Vector> polygonVertices(const HPolytope& p);

/// Vertices of a bounded polytope in d <= 3 (unordered for d = 3).
std::vector<Vector> polytopeVertices(const HPolytope& p);

/// (d-1)-dimensional measure of each facet, aligned with p.halfspaces().
std::vector<double> facetMeasures(const HPolytope& p);

bool isEmpty(const HPolytope& p);

struct IntrinsicVolumes2D {
  double v0 = 0.0;
  double v1 = 0.0;
  double v2 = 0.0;
};

IntrinsicVolumes2D intrinsicVolumes2D(const HPolytope& p);

/// Nearest point of conv(vertices) to `p`.
Vector nearestPointInHull(const Vector& p, const std::vector<Vector>& vertices);
double distanceToHull(const Vector& p, const std::vector<Vector>& vertices);

/// True when the convex hulls of the two vertex sets have disjoint interiors.
bool hullInteriorsDisjoint(const std::vector<Vector>& a, const std::vector<Vector>& b);

/// A unit v with <u, v> >= -tol for every u in `dirs`, if one exists (d <= 3).
std::optional<Vector> closedHemisphereWitness(const std::vector<Vector>& dirs, std::size_t dim);

/// Distance between two bounded convex bodies by alternating projection.
double convexDistance(const ConvexBody& a, const ConvexBody& b);

/// The body as a test body: polytope vertices, or the ball itself.
VCompact asVCompact(const ConvexBody& body);

std::size_t bodyDim(const ConvexBody& body);

}  // namespace zerocell
