#include "zerocell/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>

#include "zerocell/tolerances.hpp"

namespace zerocell {

std::string Vector::toString() const {
  std::ostringstream os;
  os.precision(17);
  os << '(';
  for (std::size_t i = 0; i < dim_; ++i) os << (i ? ", " : "") << coords_[i];
  os << ')';
  return os.str();
}

namespace {

bool sameNormal(const Vector& a, const Vector& b) {
  for (std::size_t i = 0; i < a.dim(); ++i)
    if (std::abs(a[i] - b[i]) > tol::kSameNormal) return false;
  return true;
}

std::vector<Halfspace> canonicalize(std::size_t dim, std::vector<Halfspace> input) {
  std::vector<Halfspace> out;
  out.reserve(input.size());
  for (auto& h : input) {
    if (h.normal.dim() != dim) throw InvalidArgument("halfspace normal has wrong dimension");
    if (!std::isfinite(h.offset)) throw InvalidArgument("halfspace offset must be finite");
    if (std::abs(norm(h.normal) - 1.0) > tol::kUnitNormal)
      throw InvalidArgument("halfspace normal " + h.normal.toString() + " is not unit length");
    auto it = std::find_if(out.begin(), out.end(), [&](const Halfspace& o) { return sameNormal(o.normal, h.normal); });
    if (it == out.end())
      out.push_back(std::move(h));
    else
      it->offset = std::min(it->offset, h.offset);
  }
  return out;
}

double cross2(const Vector& a, const Vector& b) { return a[0] * b[1] - a[1] * b[0]; }

bool feasible(const std::vector<Halfspace>& hs, const Vector& x) {
  for (const auto& h : hs)
    if (dot(h.normal, x) > h.offset + tol::kFeasibility) return false;
  return true;
}

void pushUnique(std::vector<Vector>& pts, const Vector& x) {
  for (const auto& p : pts)
    if (distance(p, x) <= tol::kFeasibility) return;
  pts.push_back(x);
}

std::vector<Vector> feasibleLineIntersections(const std::vector<Halfspace>& hs) {
  std::vector<Vector> pts;
  for (std::size_t i = 0; i < hs.size(); ++i) {
    for (std::size_t j = i + 1; j < hs.size(); ++j) {
      const Vector& a = hs[i].normal;
      const Vector& b = hs[j].normal;
      const double det = cross2(a, b);
      if (std::abs(det) < 1e-12) continue;
      Vector x{(hs[i].offset * b[1] - hs[j].offset * a[1]) / det, (a[0] * hs[j].offset - b[0] * hs[i].offset) / det};
      if (feasible(hs, x)) pushUnique(pts, x);
    }
  }
  return pts;
}

bool normalsPositivelySpan2D(const std::vector<Halfspace>& hs) {
  if (hs.size() < 3) return false;
  std::vector<double> angles;
  angles.reserve(hs.size());
  for (const auto& h : hs) angles.push_back(std::atan2(h.normal[1], h.normal[0]));
  std::sort(angles.begin(), angles.end());
  double maxGap = angles.front() + 2.0 * std::numbers::pi - angles.back();
  for (std::size_t i = 1; i < angles.size(); ++i) maxGap = std::max(maxGap, angles[i] - angles[i - 1]);
  return maxGap < std::numbers::pi - tol::kAngular;
}

std::vector<Vector> orderCounterClockwise(std::vector<Vector> pts) {
  if (pts.size() <= 1) return pts;
  Vector c(2);
  for (const auto& p : pts) c += p;
  c *= 1.0 / static_cast<double>(pts.size());

  // Flat polygon: keep the two extreme points along the spread direction.
  double area2 = 0.0;
  {
    std::vector<Vector> tmp = pts;
    std::sort(tmp.begin(), tmp.end(), [&](const Vector& a, const Vector& b) {
      return std::atan2(a[1] - c[1], a[0] - c[0]) < std::atan2(b[1] - c[1], b[0] - c[0]);
    });
    for (std::size_t i = 0; i < tmp.size(); ++i) area2 += cross2(tmp[i], tmp[(i + 1) % tmp.size()]);
    if (std::abs(area2) > tol::kFeasibility * tol::kFeasibility) {
      // Drop vertices lying on the segment between their neighbours.
      std::vector<Vector> out;
      for (std::size_t i = 0; i < tmp.size(); ++i) {
        const Vector& prev = tmp[(i + tmp.size() - 1) % tmp.size()];
        const Vector& next = tmp[(i + 1) % tmp.size()];
        const Vector e1 = tmp[i] - prev;
        const Vector e2 = next - tmp[i];
        if (std::abs(cross2(e1, e2)) > tol::kFeasibility * std::max(1.0, norm(e1) * norm(e2)) || dot(e1, e2) < 0.0)
          out.push_back(tmp[i]);
      }
      return out;
    }
  }
  std::size_t ia = 0, ib = 0;
  double best = -1.0;
  for (std::size_t i = 0; i < pts.size(); ++i)
    for (std::size_t j = i + 1; j < pts.size(); ++j)
      if (double dd = distance(pts[i], pts[j]); dd > best) best = dd, ia = i, ib = j;
  if (best <= tol::kFeasibility) return {pts[0]};
  return {pts[ia], pts[ib]};
}

double shoelace(const std::vector<Vector>& poly) {
  if (poly.size() < 3) return 0.0;
  double s = 0.0;
  for (std::size_t i = 0; i < poly.size(); ++i) s += cross2(poly[i], poly[(i + 1) % poly.size()]);
  return 0.5 * s;
}

std::pair<double, double> interval1D(const HPolytope& p) {
  double lo = -std::numeric_limits<double>::infinity();
  double hi = std::numeric_limits<double>::infinity();
  for (const auto& h : p.halfspaces()) {
    if (h.normal[0] > 0)
      hi = std::min(hi, h.offset);
    else
      lo = std::max(lo, -h.offset);
  }
  return {lo, hi};
}

// Solves the n x n system (n <= 3) in place; false if numerically singular.
bool solveSmall(std::size_t n, double a[3][3], double b[3], double scale) {
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    for (std::size_t r = col + 1; r < n; ++r)
      if (std::abs(a[r][col]) > std::abs(a[piv][col])) piv = r;
    if (std::abs(a[piv][col]) <= 1e-13 * scale) return false;
    if (piv != col) {
      for (std::size_t k = 0; k < n; ++k) std::swap(a[col][k], a[piv][k]);
      std::swap(b[col], b[piv]);
    }
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col) continue;
      const double f = a[r][col] / a[col][col];
      for (std::size_t k = col; k < n; ++k) a[r][k] -= f * a[col][k];
      b[r] -= f * b[col];
    }
  }
  for (std::size_t i = 0; i < n; ++i) b[i] /= a[i][i];
  return true;
}

std::vector<Vector> vertices3D(const HPolytope& p) {
  const auto& hs = p.halfspaces();
  std::vector<Vector> pts;
  for (std::size_t i = 0; i < hs.size(); ++i)
    for (std::size_t j = i + 1; j < hs.size(); ++j)
      for (std::size_t k = j + 1; k < hs.size(); ++k) {
        double a[3][3];
        double b[3] = {hs[i].offset, hs[j].offset, hs[k].offset};
        const Vector* rows[3] = {&hs[i].normal, &hs[j].normal, &hs[k].normal};
        for (int r = 0; r < 3; ++r)
          for (int c = 0; c < 3; ++c) a[r][c] = (*rows[r])[c];
        if (!solveSmall(3, a, b, 1.0)) continue;
        Vector x{b[0], b[1], b[2]};
        if (feasible(hs, x)) pushUnique(pts, x);
      }
  return pts;
}

bool unbounded3D(const HPolytope& p) {
  std::vector<Vector> flipped;
  for (const auto& h : p.halfspaces()) flipped.push_back(-h.normal);
  return closedHemisphereWitness(flipped, 3).has_value();
}

// Orthonormal basis of the plane orthogonal to the unit vector u.
std::pair<Vector, Vector> planeBasis(const Vector& u) {
  Vector seed = std::abs(u[0]) < 0.9 ? Vector{1, 0, 0} : Vector{0, 1, 0};
  Vector e1 = normalized(cross(u, seed));
  Vector e2 = cross(u, e1);
  return {e1, e2};
}

double facetArea3D(const Halfspace& h, const std::vector<Vector>& verts) {
  std::vector<Vector> onFacet;
  for (const auto& v : verts)
    if (std::abs(dot(h.normal, v) - h.offset) <= tol::kFeasibility) onFacet.push_back(v);
  if (onFacet.size() < 3) return 0.0;
  auto [e1, e2] = planeBasis(h.normal);
  std::vector<Vector> planar;
  for (const auto& v : onFacet) planar.push_back(Vector{dot(v, e1), dot(v, e2)});
  return std::abs(shoelace(orderCounterClockwise(planar)));
}

Vector centroid(const std::vector<Vector>& pts) {
  Vector c(pts.front().dim());
  for (const auto& p : pts) c += p;
  return c * (1.0 / static_cast<double>(pts.size()));
}

bool separatedAlong(const Vector& w, const std::vector<Vector>& a, const std::vector<Vector>& b) {
  double maxA = -std::numeric_limits<double>::infinity(), minA = std::numeric_limits<double>::infinity();
  double maxB = -std::numeric_limits<double>::infinity(), minB = std::numeric_limits<double>::infinity();
  for (const auto& p : a) {
    const double s = dot(w, p);
    maxA = std::max(maxA, s);
    minA = std::min(minA, s);
  }
  for (const auto& p : b) {
    const double s = dot(w, p);
    maxB = std::max(maxB, s);
    minB = std::min(minB, s);
  }
  return maxA <= minB || maxB <= minA;
}

std::vector<Vector> pairwiseDifferences(const std::vector<Vector>& pts) {
  std::vector<Vector> out;
  for (std::size_t i = 0; i < pts.size(); ++i)
    for (std::size_t j = i + 1; j < pts.size(); ++j) {
      Vector d = pts[j] - pts[i];
      if (norm(d) > 1e-12) out.push_back(d);
    }
  return out;
}

}  // namespace

// ---------------------------------------------------------------------------
// HPolytope

HPolytope::HPolytope(std::size_t dim, std::vector<Halfspace> halfspaces, bool bounded)
    : dim_(dim), halfspaces_(canonicalize(dim, std::move(halfspaces))), bounded_(false) {
  if (dim < 1 || dim > kMaxDimension) throw InvalidArgument("polytope dimension out of range");
  if (!bounded) return;
  if (dim == 1) {
    auto [lo, hi] = interval1D(*this);
    if (!std::isfinite(lo) || !std::isfinite(hi)) throw UnboundedRegion("interval is unbounded");
    if (lo > hi + tol::kFeasibility) throw EmptyRegion("interval is empty");
  } else if (dim == 2) {
    (void)polygonVertices(*this);
  } else {
    if (unbounded3D(*this)) throw UnboundedRegion("polytope admits an unbounded ray");
    if (vertices3D(*this).empty()) throw EmptyRegion("polytope is empty");
  }
  bounded_ = true;
}

HPolytope HPolytope::fromInequalities(std::size_t dim, const std::vector<std::pair<Vector, double>>& rows,
                                      bool bounded) {
  std::vector<Halfspace> hs;
  for (const auto& [a, b] : rows) {
    const double n = norm(a);
    if (!(n > 0.0)) throw InvalidArgument("inequality with zero normal");
    hs.push_back({a * (1.0 / n), b / n});
  }
  return HPolytope(dim, std::move(hs), bounded);
}

HPolytope HPolytope::box(const Vector& lo, const Vector& hi) {
  requireSameDim(lo, hi, "HPolytope::box");
  std::vector<Halfspace> hs;
  for (std::size_t k = 0; k < lo.dim(); ++k) {
    if (!(lo[k] <= hi[k])) throw EmptyRegion("box has lo > hi on axis " + std::to_string(k));
    hs.push_back({Vector::unit(lo.dim(), k), hi[k]});
    hs.push_back({-Vector::unit(lo.dim(), k), -lo[k]});
  }
  return HPolytope(Trusted{}, lo.dim(), std::move(hs), true);
}

HPolytope HPolytope::fromCanonical(std::size_t dim, std::vector<Halfspace> halfspaces, bool bounded) {
  return HPolytope(Trusted{}, dim, std::move(halfspaces), bounded);
}

HPolytope HPolytope::scaled(double s) const {
  if (!(s > 0.0)) throw InvalidArgument("polytope scale must be positive");
  std::vector<Halfspace> hs = halfspaces_;
  for (auto& h : hs) h.offset *= s;
  return HPolytope(Trusted{}, dim_, std::move(hs), bounded_);
}

HPolytope HPolytope::intersectedWith(const HPolytope& other, bool bounded) const {
  if (other.dim_ != dim_) throw InvalidArgument("intersectedWith: dimension mismatch");
  std::vector<Halfspace> hs = halfspaces_;
  hs.insert(hs.end(), other.halfspaces_.begin(), other.halfspaces_.end());
  return HPolytope(dim_, std::move(hs), bounded);
}

std::optional<std::pair<Vector, Vector>> HPolytope::asBox() const {
  if (halfspaces_.size() != 2 * dim_) return std::nullopt;
  Vector lo(dim_), hi(dim_);
  std::vector<int> seen(2 * dim_, 0);
  for (const auto& h : halfspaces_) {
    std::optional<std::size_t> axis;
    for (std::size_t k = 0; k < dim_; ++k) {
      if (std::abs(std::abs(h.normal[k]) - 1.0) <= tol::kSameNormal) {
        axis = k;
      } else if (std::abs(h.normal[k]) > tol::kSameNormal) {
        return std::nullopt;
      }
    }
    if (!axis) return std::nullopt;
    if (h.normal[*axis] > 0) {
      hi[*axis] = h.offset;
      ++seen[2 * *axis];
    } else {
      lo[*axis] = -h.offset;
      ++seen[2 * *axis + 1];
    }
  }
  for (int s : seen)
    if (s != 1) return std::nullopt;
  return std::pair{lo, hi};
}

// ---------------------------------------------------------------------------
// Ball, Box, VCompact, ComplementBody

Ball::Ball(Vector c, double r) : center(std::move(c)), radius(r) {
  if (!(radius >= 0.0) || !std::isfinite(radius)) throw InvalidArgument("ball radius must be finite and >= 0");
}

Box::Box(Vector l, Vector h) : lo(std::move(l)), hi(std::move(h)) {
  requireSameDim(lo, hi, "Box");
  for (std::size_t k = 0; k < lo.dim(); ++k)
    if (!(lo[k] <= hi[k])) throw InvalidArgument("box has lo > hi on axis " + std::to_string(k));
}

Box Box::centered(const Vector& center, double halfWidth) {
  Vector lo = center, hi = center;
  for (std::size_t k = 0; k < center.dim(); ++k) {
    lo[k] -= halfWidth;
    hi[k] += halfWidth;
  }
  return Box(lo, hi);
}

double Box::volume() const {
  double v = 1.0;
  for (std::size_t k = 0; k < lo.dim(); ++k) v *= hi[k] - lo[k];
  return v;
}

bool Box::contains(const Vector& x) const {
  for (std::size_t k = 0; k < lo.dim(); ++k)
    if (x[k] < lo[k] || x[k] > hi[k]) return false;
  return true;
}

std::vector<Vector> Box::corners() const {
  std::vector<Vector> out;
  const std::size_t d = lo.dim();
  for (std::size_t mask = 0; mask < (std::size_t{1} << d); ++mask) {
    Vector v(d);
    for (std::size_t k = 0; k < d; ++k) v[k] = (mask >> k & 1U) ? hi[k] : lo[k];
    out.push_back(v);
  }
  return out;
}

double Box::maxNorm() const {
  double s = 0.0;
  for (std::size_t k = 0; k < lo.dim(); ++k) {
    const double m = std::max(std::abs(lo[k]), std::abs(hi[k]));
    s += m * m;
  }
  return std::sqrt(s);
}

VCompact VCompact::hull(std::vector<Vector> vertices) {
  if (vertices.empty()) throw InvalidArgument("hull needs at least one vertex");
  for (const auto& v : vertices) {
    requireSameDim(v, vertices.front(), "VCompact::hull");
    if (!v.allFinite()) throw InvalidArgument("hull vertex is not finite");
  }
  return VCompact(std::move(vertices));
}

VCompact VCompact::ball(Ball b) { return VCompact(std::move(b)); }

std::size_t VCompact::dim() const { return isBall() ? asBall().dim() : vertices().front().dim(); }

Vector VCompact::referencePoint() const { return isBall() ? asBall().center : vertices().front(); }

double VCompact::diameter() const {
  if (isBall()) return 2.0 * asBall().radius;
  double d = 0.0;
  const auto& vs = vertices();
  for (std::size_t i = 0; i < vs.size(); ++i)
    for (std::size_t j = i + 1; j < vs.size(); ++j) d = std::max(d, distance(vs[i], vs[j]));
  return d;
}

double VCompact::radiusBound() const {
  if (isBall()) return norm(asBall().center) + asBall().radius;
  double r = 0.0;
  for (const auto& v : vertices()) r = std::max(r, norm(v));
  return r;
}

VCompact VCompact::scaled(double rho) const {
  if (!(rho >= 0.0)) throw InvalidArgument("scale must be >= 0");
  if (isBall()) return ball(Ball(asBall().center * rho, asBall().radius * rho));
  std::vector<Vector> vs = vertices();
  for (auto& v : vs) v *= rho;
  return hull(std::move(vs));
}

double support(const VCompact& body, const Vector& u) {
  if (body.isBall()) {
    const Ball& b = body.asBall();
    return dot(b.center, u) + b.radius * norm(u);
  }
  double best = -std::numeric_limits<double>::infinity();
  for (const auto& v : body.vertices()) best = std::max(best, dot(v, u));
  return best;
}

std::size_t bodyDim(const ConvexBody& body) {
  return std::visit([](const auto& b) { return b.dim(); }, body);
}

VCompact asVCompact(const ConvexBody& body) {
  if (const auto* b = std::get_if<Ball>(&body)) return VCompact::ball(*b);
  return VCompact::hull(polytopeVertices(std::get<HPolytope>(body)));
}

namespace {

double bodyVolume(const ConvexBody& body) {
  return std::visit([](const auto& b) { return volumeExact(b); }, body);
}

void requireSolidBody(const ConvexBody& body, const char* what) {
  if (const auto* p = std::get_if<HPolytope>(&body)) {
    if (!p->bounded()) throw InvalidArgument(std::string(what) + ": polytope must be bounded");
  }
  if (!(bodyVolume(body) > tol::kFeasibility))
    throw InvalidArgument(std::string(what) + ": body must have nonempty interior");
}

}  // namespace

ComplementBody::ComplementBody(ConvexBody in) : inner(std::move(in)) { requireSolidBody(inner, "ComplementBody"); }

std::size_t ComplementBody::dim() const { return bodyDim(inner); }

// ---------------------------------------------------------------------------
// SetModel

namespace {

std::size_t componentDim(const Component& c) {
  return std::visit([](const auto& b) { return b.dim(); }, c);
}

bool componentContainsPoint(const Component& c, const Vector& x) {
  if (const auto* p = std::get_if<HPolytope>(&c)) return p->contains(x);
  if (const auto* b = std::get_if<Ball>(&c)) return b->contains(x);
  const auto& inner = std::get<ComplementBody>(c).inner;
  if (const auto* b = std::get_if<Ball>(&inner)) return distance(x, b->center) >= b->radius;
  for (const auto& h : std::get<HPolytope>(inner).halfspaces())
    if (dot(h.normal, x) >= h.offset) return true;
  return false;
}

ConvexBody asConvexBody(const Component& c) {
  if (const auto* p = std::get_if<HPolytope>(&c)) return *p;
  return std::get<Ball>(c);
}

// body + B_margin inside the convex region `inner`.
bool bodyInsideWithMargin(const ConvexBody& body, const ConvexBody& inner, double margin) {
  const VCompact l = asVCompact(body);
  if (const auto* p = std::get_if<HPolytope>(&inner)) {
    for (const auto& h : p->halfspaces())
      if (support(l, h.normal) + margin > h.offset) return false;
    return true;
  }
  const Ball& outer = std::get<Ball>(inner);
  if (l.isBall()) return distance(l.asBall().center, outer.center) + l.asBall().radius + margin <= outer.radius;
  for (const auto& v : l.vertices())
    if (distance(v, outer.center) > outer.radius - margin) return false;
  return true;
}

}  // namespace

SetModel::SetModel(std::vector<Component> components, double separation)
    : components_(std::move(components)), separation_(separation), dim_(0) {
  if (components_.empty()) throw InvalidArgument("set model needs at least one component");
  if (!(separation_ > 0.0)) throw InvalidArgument("separation must be positive");
  dim_ = componentDim(components_.front());
  for (const auto& c : components_) {
    if (componentDim(c) != dim_) throw InvalidArgument("set model components differ in dimension");
    if (!std::holds_alternative<ComplementBody>(c)) requireSolidBody(asConvexBody(c), "set model component");
  }
  for (std::size_t i = 0; i < components_.size(); ++i) {
    for (std::size_t j = i + 1; j < components_.size(); ++j) {
      const Component& a = components_[i];
      const Component& b = components_[j];
      const bool ca = std::holds_alternative<ComplementBody>(a);
      const bool cb = std::holds_alternative<ComplementBody>(b);
      const std::string pair = std::to_string(i) + " and " + std::to_string(j);
      if (ca && cb) throw InvalidArgument("components " + pair + ": two complement bodies always overlap");
      if (ca || cb) {
        if (dim_ > 3) throw InvalidArgument("complement bodies require d <= 3");
        const ConvexBody& inner = std::get<ComplementBody>(ca ? a : b).inner;
        const ConvexBody body = asConvexBody(ca ? b : a);
        if (!bodyInsideWithMargin(body, inner, separation_))
          throw InvalidArgument("components " + pair + ": body must lie inside the complement's inner region " +
                                "with margin >= separation");
        continue;
      }
      const double d = convexDistance(asConvexBody(a), asConvexBody(b));
      if (d < separation_ - tol::kFeasibility)
        throw InvalidArgument("components " + pair + " are closer (" + std::to_string(d) +
                              ") than the declared separation");
    }
  }
}

SetModel SetModel::single(Component c) {
  return SetModel({std::move(c)}, std::numeric_limits<double>::infinity());
}

std::optional<std::size_t> SetModel::componentOf(const Vector& x) const {
  for (std::size_t i = 0; i < components_.size(); ++i)
    if (componentContainsPoint(components_[i], x)) return i;
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// Containment

namespace detail {

struct PreparedComponent {
  enum class Kind { Polytope, BallBody, ComplementPolytope, ComplementBall };
  Kind kind = Kind::Polytope;
  // Polytope: normals with original and eroded offsets.
  std::vector<Halfspace> halfspaces;
  std::vector<double> erodedOffsets;
  // Ball and complement ball.
  Vector center;
  double radius = 0.0;
  // Complement polytope.
  std::vector<Vector> innerVertices;
};

struct PreparedContainment {
  PreparedContainment(const SetModel& k, const VCompact& l, double eps);

  bool contains(const Vector& x) const {
    if (components.size() == 1) return containsIn(components.front(), x);
    const Vector p = x + eps * reference;
    for (const auto& c : components)
      if (pointIn(c, p)) return containsIn(c, x);
    return false;
  }

  bool pointIn(const PreparedComponent& c, const Vector& p) const;
  bool containsIn(const PreparedComponent& c, const Vector& x) const;

  VCompact l;
  double eps;
  Vector reference;
  std::vector<Vector> scaledVertices;  // eps * v for hull L
  std::vector<PreparedComponent> components;
};

PreparedContainment::PreparedContainment(const SetModel& k, const VCompact& body, double e)
    : l(body), eps(e), reference(body.referencePoint()) {
  if (!(eps >= 0.0) || !std::isfinite(eps)) throw InvalidArgument("erosion scale must be finite and >= 0");
  if (l.dim() != k.dim()) throw InvalidArgument("test body and set model differ in dimension");
  if (!k.isSingleComponent() && eps * l.diameter() >= k.separation())
    throw PreconditionViolation("eps * diam(L) = " + std::to_string(eps * l.diameter()) +
                                " must be below the component separation " + std::to_string(k.separation()));
  if (!l.isBall())
    for (const auto& v : l.vertices()) scaledVertices.push_back(eps * v);

  for (const auto& comp : k.components()) {
    PreparedComponent pc;
    if (const auto* p = std::get_if<HPolytope>(&comp)) {
      pc.kind = PreparedComponent::Kind::Polytope;
      pc.halfspaces = p->halfspaces();
      for (const auto& h : pc.halfspaces) pc.erodedOffsets.push_back(h.offset - eps * support(l, h.normal));
    } else if (const auto* b = std::get_if<Ball>(&comp)) {
      pc.kind = PreparedComponent::Kind::BallBody;
      pc.center = b->center;
      pc.radius = b->radius;
    } else {
      const auto& inner = std::get<ComplementBody>(comp).inner;
      if (const auto* ib = std::get_if<Ball>(&inner)) {
        pc.kind = PreparedComponent::Kind::ComplementBall;
        pc.center = ib->center;
        pc.radius = ib->radius;
      } else {
        pc.kind = PreparedComponent::Kind::ComplementPolytope;
        pc.halfspaces = std::get<HPolytope>(inner).halfspaces();
        pc.innerVertices = polytopeVertices(std::get<HPolytope>(inner));
      }
    }
    components.push_back(std::move(pc));
  }
}

bool PreparedContainment::pointIn(const PreparedComponent& c, const Vector& p) const {
  using Kind = PreparedComponent::Kind;
  switch (c.kind) {
    case Kind::Polytope:
      for (const auto& h : c.halfspaces)
        if (dot(h.normal, p) > h.offset) return false;
      return true;
    case Kind::BallBody:
      return distance(p, c.center) <= c.radius;
    case Kind::ComplementBall:
      return distance(p, c.center) >= c.radius;
    case Kind::ComplementPolytope:
      for (const auto& h : c.halfspaces)
        if (dot(h.normal, p) >= h.offset) return true;
      return false;
  }
  return false;
}

bool PreparedContainment::containsIn(const PreparedComponent& c, const Vector& x) const {
  using Kind = PreparedComponent::Kind;
  switch (c.kind) {
    case Kind::Polytope:
      for (std::size_t i = 0; i < c.halfspaces.size(); ++i)
        if (dot(c.halfspaces[i].normal, x) > c.erodedOffsets[i]) return false;
      return true;
    case Kind::BallBody: {
      if (l.isBall()) {
        const Ball& b = l.asBall();
        const double limit = c.radius - eps * b.radius;
        return limit >= 0.0 && distance(x + eps * b.center, c.center) <= limit;
      }
      const double r2 = c.radius * c.radius;
      for (const auto& v : scaledVertices) {
        const Vector d = x + v - c.center;
        if (dot(d, d) > r2) return false;
      }
      return true;
    }
    case Kind::ComplementBall: {
      if (l.isBall()) {
        const Ball& b = l.asBall();
        return distance(x + eps * b.center, c.center) >= c.radius + eps * b.radius;
      }
      if (scaledVertices.size() == 1) return distance(x + scaledVertices.front(), c.center) >= c.radius;
      std::vector<Vector> shifted;
      for (const auto& v : scaledVertices) shifted.push_back(x + v);
      return distanceToHull(c.center, shifted) >= c.radius;
    }
    case Kind::ComplementPolytope: {
      if (l.isBall()) {
        const Ball& b = l.asBall();
        const Vector center = x + eps * b.center;
        bool interior = true;
        for (const auto& h : c.halfspaces)
          if (dot(h.normal, center) >= h.offset) interior = false;
        if (interior) return false;
        return distanceToHull(center, c.innerVertices) >= eps * b.radius;
      }
      std::vector<Vector> shifted;
      for (const auto& v : scaledVertices) shifted.push_back(x + v);
      return hullInteriorsDisjoint(c.innerVertices, shifted);
    }
  }
  return false;
}

}  // namespace detail

ErosionRegion::ErosionRegion(SetModel source, VCompact structuring, double scale)
    : source_(std::move(source)), structuring_(std::move(structuring)), scale_(scale) {
  if (!(scale_ >= 0.0)) throw InvalidArgument("erosion scale must be >= 0, got " + std::to_string(scale_));
  prepared_ = std::make_shared<const detail::PreparedContainment>(source_, structuring_, scale_);
  if (source_.isSingleComponent()) {
    const Component& c = source_.components().front();
    if (const auto* p = std::get_if<HPolytope>(&c)) {
      const auto& pc = prepared_->components.front();
      std::vector<Halfspace> hs;
      for (std::size_t i = 0; i < pc.halfspaces.size(); ++i) hs.push_back({pc.halfspaces[i].normal, pc.erodedOffsets[i]});
      exactHRep_ = HPolytope::fromCanonical(p->dim(), std::move(hs), false);
    } else if (const auto* b = std::get_if<Ball>(&c); b && structuring_.isBall()) {
      const Ball& lb = structuring_.asBall();
      const double r = b->radius - scale_ * lb.radius;
      if (r >= 0.0)
        exactBall_ = Ball(b->center - scale_ * lb.center, r);
      else
        exactBallEmpty_ = true;
    }
  }
}

bool ErosionRegion::contains(const Vector& x) const {
  if (exactHRep_) return exactHRep_->contains(x);
  return prepared_->contains(x);
}

ErosionRegion erode(const SetModel& k, const VCompact& l, double eps) { return ErosionRegion(k, l, eps); }

bool containsSet(const SetModel& k, const VCompact& l, const Vector& x, double eps) {
  requireSameDim(x, l.referencePoint(), "containsSet");
  return detail::PreparedContainment(k, l, eps).contains(x);
}

// ---------------------------------------------------------------------------
// Vertices, volumes, facets

std::vector<Vector> polygonVertices(const HPolytope& p) {
  if (p.dim() != 2) throw InvalidArgument("polygonVertices requires d = 2");
  const auto& hs = p.halfspaces();
  std::vector<Vector> pts = feasibleLineIntersections(hs);
  if (!normalsPositivelySpan2D(hs)) {
    // Distinguish empty from unbounded by clipping with a far box.
    double scale = 1.0;
    for (const auto& h : hs) scale = std::max(scale, std::abs(h.offset));
    const double m = 1e6 * scale;
    HPolytope clipped = p.intersectedWith(HPolytope::box(Vector{-m, -m}, Vector{m, m}), false);
    if (feasibleLineIntersections(clipped.halfspaces()).empty()) throw EmptyRegion("polygon is empty");
    throw UnboundedRegion("polygon is unbounded");
  }
  if (pts.empty()) throw EmptyRegion("polygon is empty");
  return orderCounterClockwise(std::move(pts));
}

std::vector<Vector> polytopeVertices(const HPolytope& p) {
  switch (p.dim()) {
    case 1: {
      auto [lo, hi] = interval1D(p);
      if (!std::isfinite(lo) || !std::isfinite(hi)) throw UnboundedRegion("interval is unbounded");
      if (lo > hi + tol::kFeasibility) throw EmptyRegion("interval is empty");
      if (hi - lo <= tol::kFeasibility) return {Vector{lo}};
      return {Vector{lo}, Vector{hi}};
    }
    case 2:
      return polygonVertices(p);
    default: {
      if (!p.bounded() && unbounded3D(p)) throw UnboundedRegion("polytope is unbounded");
      auto v = vertices3D(p);
      if (v.empty()) throw EmptyRegion("polytope is empty");
      return v;
    }
  }
}

bool isEmpty(const HPolytope& p) {
  try {
    (void)polytopeVertices(p);
    return false;
  } catch (const EmptyRegion&) {
    return true;
  }
}

std::vector<double> facetMeasures(const HPolytope& p) {
  const auto& hs = p.halfspaces();
  std::vector<double> out(hs.size(), 0.0);
  const auto verts = polytopeVertices(p);
  if (p.dim() == 1) {
    std::fill(out.begin(), out.end(), 1.0);
    return out;
  }
  for (std::size_t i = 0; i < hs.size(); ++i) {
    if (p.dim() == 2) {
      std::vector<Vector> on;
      for (const auto& v : verts)
        if (std::abs(dot(hs[i].normal, v) - hs[i].offset) <= tol::kFeasibility) on.push_back(v);
      double len = 0.0;
      for (std::size_t a = 0; a < on.size(); ++a)
        for (std::size_t b = a + 1; b < on.size(); ++b) len = std::max(len, distance(on[a], on[b]));
      out[i] = len;
    } else {
      out[i] = facetArea3D(hs[i], verts);
    }
  }
  return out;
}

double volumeExact(const HPolytope& p) {
  switch (p.dim()) {
    case 1: {
      auto v = polytopeVertices(p);
      return v.size() == 2 ? v[1][0] - v[0][0] : 0.0;
    }
    case 2:
      return std::abs(shoelace(polygonVertices(p)));
    default: {
      const auto verts = polytopeVertices(p);
      if (verts.size() < 4) return 0.0;
      const Vector c = centroid(verts);
      double vol = 0.0;
      for (const auto& h : p.halfspaces()) vol += facetArea3D(h, verts) * (h.offset - dot(h.normal, c)) / 3.0;
      return vol;
    }
  }
}

double unitBallVolume(std::size_t dim) {
  const double d = static_cast<double>(dim);
  return std::pow(std::numbers::pi, d / 2.0) / std::tgamma(d / 2.0 + 1.0);
}

double unitSphereArea(std::size_t dim) { return static_cast<double>(dim) * unitBallVolume(dim); }

double volumeExact(const Ball& b) { return unitBallVolume(b.dim()) * std::pow(b.radius, static_cast<double>(b.dim())); }

IntrinsicVolumes2D intrinsicVolumes2D(const HPolytope& p) {
  const auto poly = polygonVertices(p);
  double perimeter = 0.0;
  if (poly.size() >= 2)
    for (std::size_t i = 0; i < poly.size(); ++i) perimeter += distance(poly[i], poly[(i + 1) % poly.size()]);
  return {1.0, perimeter / 2.0, std::abs(shoelace(poly))};
}

MonteCarloEstimate volumeMC(const std::function<bool(const Vector&)>& member, const SamplingWindow& window,
                            std::size_t nSamples, RngStream& rng) {
  if (nSamples == 0) throw InvalidArgument("volumeMC needs at least one sample");
  double windowVolume = 0.0;
  std::function<Vector()> draw;
  if (const auto* box = std::get_if<Box>(&window)) {
    windowVolume = box->volume();
    draw = [&rng, box] {
      Vector x(box->dim());
      for (std::size_t k = 0; k < box->dim(); ++k) x[k] = rng.uniform(box->lo[k], box->hi[k]);
      return x;
    };
  } else {
    const Ball& b = std::get<Ball>(window);
    windowVolume = volumeExact(b);
    draw = [&rng, &b] { return b.center + b.radius * rng.uniformInBall(b.dim()); };
  }
  std::size_t hits = 0;
  for (std::size_t i = 0; i < nSamples; ++i)
    if (member(draw())) ++hits;
  const double n = static_cast<double>(nSamples);
  const double phat = static_cast<double>(hits) / n;
  return {windowVolume * phat, windowVolume * std::sqrt(phat * (1.0 - phat) / n)};
}

// ---------------------------------------------------------------------------
// Convex-hull distance, separation and hemisphere tests

Vector nearestPointInHull(const Vector& p, const std::vector<Vector>& vertices) {
  if (vertices.empty()) throw InvalidArgument("nearestPointInHull: empty vertex set");
  const std::size_t d = p.dim();
  const std::size_t k = vertices.size();
  const std::size_t maxSize = std::min(d + 1, k);
  Vector best = vertices.front();
  double bestDist = distance(p, best);

  double scale = 1.0;
  for (const auto& v : vertices) scale = std::max(scale, dot(v - vertices.front(), v - vertices.front()));

  std::vector<std::size_t> idx;
  // Every face of the hull is the hull of an affinely independent subset;
  // projecting onto each such subset's affine hull covers the optimum.
  auto visit = [&](auto&& self, std::size_t start) -> void {
    if (!idx.empty()) {
      const std::size_t m = idx.size() - 1;
      const Vector& s0 = vertices[idx[0]];
      if (m == 0) {
        if (double dd = distance(p, s0); dd < bestDist) bestDist = dd, best = s0;
      } else {
        double a[3][3] = {};
        double b[3] = {};
        Vector e[3];
        for (std::size_t i = 0; i < m; ++i) e[i] = vertices[idx[i + 1]] - s0;
        for (std::size_t i = 0; i < m; ++i) {
          for (std::size_t j = 0; j < m; ++j) a[i][j] = dot(e[i], e[j]);
          b[i] = dot(e[i], p - s0);
        }
        if (solveSmall(m, a, b, scale)) {
          double lambda0 = 1.0;
          bool inside = true;
          for (std::size_t i = 0; i < m; ++i) {
            lambda0 -= b[i];
            if (b[i] < -1e-12) inside = false;
          }
          if (inside && lambda0 >= -1e-12) {
            Vector q = s0;
            for (std::size_t i = 0; i < m; ++i) q += b[i] * e[i];
            if (double dd = distance(p, q); dd < bestDist) bestDist = dd, best = q;
          }
        }
      }
    }
    if (idx.size() == maxSize) return;
    for (std::size_t i = start; i < k; ++i) {
      idx.push_back(i);
      self(self, i + 1);
      idx.pop_back();
    }
  };
  visit(visit, 0);
  return best;
}

double distanceToHull(const Vector& p, const std::vector<Vector>& vertices) {
  return distance(p, nearestPointInHull(p, vertices));
}

bool hullInteriorsDisjoint(const std::vector<Vector>& a, const std::vector<Vector>& b) {
  if (a.empty() || b.empty()) return true;
  const std::size_t d = a.front().dim();
  if (d == 1) return separatedAlong(Vector{1.0}, a, b);
  std::vector<Vector> axes;
  const auto da = pairwiseDifferences(a);
  const auto db = pairwiseDifferences(b);
  if (d == 2) {
    for (const auto* diffs : {&da, &db})
      for (const auto& e : *diffs) axes.push_back(Vector{-e[1], e[0]});
  } else {
    auto addCross = [&](const Vector& x, const Vector& y) {
      Vector c = cross(x, y);
      if (norm(c) > 1e-12) axes.push_back(c);
    };
    for (const auto* diffs : {&da, &db})
      for (std::size_t i = 0; i < diffs->size(); ++i)
        for (std::size_t j = i + 1; j < diffs->size(); ++j) addCross((*diffs)[i], (*diffs)[j]);
    for (const auto& x : da)
      for (const auto& y : db) addCross(x, y);
  }
  for (const auto& w : axes)
    if (separatedAlong(w, a, b)) return true;
  return false;
}

std::optional<Vector> closedHemisphereWitness(const std::vector<Vector>& dirs, std::size_t dim) {
  auto ok = [&](const Vector& v) {
    for (const auto& u : dirs)
      if (dot(u, v) < -tol::kAngular) return false;
    return true;
  };
  if (dirs.empty()) return Vector::unit(dim, 0);
  if (dim == 1) {
    for (double s : {1.0, -1.0})
      if (ok(Vector{s})) return Vector{s};
    return std::nullopt;
  }
  if (dim == 2) {
    std::vector<double> angles;
    for (const auto& u : dirs) angles.push_back(std::atan2(u[1], u[0]));
    std::sort(angles.begin(), angles.end());
    double gap = angles.front() + 2.0 * std::numbers::pi - angles.back();
    double gapEnd = angles.front();
    for (std::size_t i = 1; i < angles.size(); ++i)
      if (angles[i] - angles[i - 1] > gap) gap = angles[i] - angles[i - 1], gapEnd = angles[i];
    if (gap < std::numbers::pi - tol::kAngular) return std::nullopt;
    const double mid = gapEnd + (2.0 * std::numbers::pi - gap) / 2.0;
    return Vector{std::cos(mid), std::sin(mid)};
  }
  std::vector<Vector> candidates;
  for (const auto& u : dirs) {
    candidates.push_back(normalized(u));
    candidates.push_back(-normalized(u));
  }
  for (std::size_t i = 0; i < dirs.size(); ++i)
    for (std::size_t j = i + 1; j < dirs.size(); ++j) {
      Vector c = cross(dirs[i], dirs[j]);
      if (norm(c) > 1e-12) {
        candidates.push_back(normalized(c));
        candidates.push_back(-normalized(c));
      }
    }
  // All directions collinear: the orthogonal plane is feasible.
  for (std::size_t k = 0; k < 3; ++k) {
    Vector c = cross(dirs.front(), Vector::unit(3, k));
    if (norm(c) > 1e-6) candidates.push_back(normalized(c));
  }
  for (const auto& v : candidates)
    if (ok(v)) return v;
  return std::nullopt;
}

double convexDistance(const ConvexBody& a, const ConvexBody& b) {
  auto projector = [](const ConvexBody& body) -> std::function<Vector(const Vector&)> {
    if (const auto* ball = std::get_if<Ball>(&body)) {
      return [ball](const Vector& x) {
        const Vector d = x - ball->center;
        const double n = norm(d);
        return n <= ball->radius ? x : ball->center + d * (ball->radius / n);
      };
    }
    auto verts = std::make_shared<std::vector<Vector>>(polytopeVertices(std::get<HPolytope>(body)));
    return [verts](const Vector& x) { return nearestPointInHull(x, *verts); };
  };
  auto projA = projector(a);
  auto projB = projector(b);
  Vector p = std::holds_alternative<Ball>(a) ? std::get<Ball>(a).center
                                             : centroid(polytopeVertices(std::get<HPolytope>(a)));
  Vector q = projB(p);
  for (int iter = 0; iter < 100000; ++iter) {
    const Vector p2 = projA(q);
    const Vector q2 = projB(p2);
    const double change = std::max(distance(p, p2), distance(q, q2));
    p = p2;
    q = q2;
    if (change <= tol::kStationarity) break;
  }
  return distance(p, q);
}

}  // namespace zerocell
