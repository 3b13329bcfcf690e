#include "zerocell/config.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <fstream>
#include <set>
#include <sstream>

namespace zerocell {

namespace {

// A schema problem at a known location; turned into a ConfigError with a
// line number once the document text is at hand.
class PathError : public ConfigError {
 public:
  PathError(std::string pointer, const std::string& message)
      : ConfigError((pointer.empty() ? std::string("/") : pointer) + ": " + message), pointer_(std::move(pointer)) {}
  const std::string& pointer() const { return pointer_; }

 private:
  std::string pointer_;
};

std::string escapePointerToken(const std::string& key) {
  std::string out;
  for (char c : key) {
    if (c == '~')
      out += "~0";
    else if (c == '/')
      out += "~1";
    else
      out += c;
  }
  return out;
}

std::string child(const std::string& where, const std::string& key) { return where + "/" + escapePointerToken(key); }
std::string child(const std::string& where, std::size_t index) { return where + "/" + std::to_string(index); }

// Runs f, relabelling library errors with the location being parsed.
template <class F>
auto at(const std::string& where, F&& f) -> decltype(f()) {
  try {
    return f();
  } catch (const PathError&) {
    throw;
  } catch (const Error& e) {
    throw PathError(where, e.what());
  }
}

void requireObject(const Json& j, const std::string& where) {
  if (!j.is_object()) throw PathError(where, "expected an object");
}

void checkKeys(const Json& j, std::initializer_list<const char*> allowed, const std::string& where) {
  requireObject(j, where);
  for (const auto& [key, value] : j.items()) {
    (void)value;
    if (std::none_of(allowed.begin(), allowed.end(), [&](const char* a) { return key == a; }))
      throw PathError(child(where, key), "unknown field");
  }
}

const Json& field(const Json& j, const char* key, const std::string& where) {
  requireObject(j, where);
  auto it = j.find(key);
  if (it == j.end()) throw PathError(where, std::string("missing required field \"") + key + "\"");
  return *it;
}

const Json* optionalField(const Json& j, const char* key) {
  auto it = j.find(key);
  return it == j.end() ? nullptr : &*it;
}

double number(const Json& j, const std::string& where) {
  if (!j.is_number()) throw PathError(where, "expected a number");
  const double v = j.get<double>();
  if (!std::isfinite(v)) throw PathError(where, "expected a finite number");
  return v;
}

std::uint64_t count(const Json& j, const std::string& where) {
  if (j.is_number_unsigned()) return j.get<std::uint64_t>();
  if (j.is_number_integer()) {
    if (j.get<std::int64_t>() < 0) throw PathError(where, "expected a nonnegative integer");
    return static_cast<std::uint64_t>(j.get<std::int64_t>());
  }
  if (j.is_number_float()) {
    const double v = j.get<double>();
    if (v >= 0.0 && v == std::floor(v) && v < 1.8e19) return static_cast<std::uint64_t>(v);
  }
  throw PathError(where, "expected a nonnegative integer");
}

std::uint64_t seedValue(const Json& j, const std::string& where) {
  if (j.is_string()) {
    const std::string s = j.get<std::string>();
    if (s.empty() || !std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isdigit(c); }))
      throw PathError(where, "seed string must contain decimal digits only");
    try {
      return std::stoull(s);
    } catch (const std::exception&) {
      throw PathError(where, "seed does not fit in 64 bits");
    }
  }
  return count(j, where);
}

std::string text(const Json& j, const std::string& where) {
  if (!j.is_string()) throw PathError(where, "expected a string");
  return j.get<std::string>();
}

bool boolean(const Json& j, const std::string& where) {
  if (!j.is_boolean()) throw PathError(where, "expected true or false");
  return j.get<bool>();
}

Vector vectorValue(const Json& j, const std::string& where) {
  if (!j.is_array() || j.empty() || j.size() > kMaxDimension)
    throw PathError(where, "expected an array of 1 to " + std::to_string(kMaxDimension) + " numbers");
  Vector v(j.size());
  for (std::size_t i = 0; i < j.size(); ++i) v[i] = number(j[i], child(where, i));
  return v;
}

template <class T, class F>
std::vector<T> listOf(const Json& j, const std::string& where, F&& each) {
  if (!j.is_array()) throw PathError(where, "expected an array");
  std::vector<T> out;
  for (std::size_t i = 0; i < j.size(); ++i) out.push_back(each(j[i], child(where, i)));
  return out;
}

std::vector<double> numbers(const Json& j, const std::string& where) {
  return listOf<double>(j, where, [](const Json& x, const std::string& w) { return number(x, w); });
}

std::vector<std::size_t> counts(const Json& j, const std::string& where) {
  return listOf<std::size_t>(j, where, [](const Json& x, const std::string& w) {
    return static_cast<std::size_t>(count(x, w));
  });
}

template <class T>
void requireStrictlyMonotone(const std::vector<T>& v, const std::string& where) {
  if (v.empty()) throw PathError(where, "sweep must not be empty");
  bool up = true, down = true;
  for (std::size_t i = 1; i < v.size(); ++i) {
    up = up && v[i] > v[i - 1];
    down = down && v[i] < v[i - 1];
  }
  if (!up && !down) throw PathError(where, "sweep must be strictly monotone");
}

Component parseComponent(const Json& j, const std::string& where) {
  const std::string type = text(field(j, "type", where), child(where, "type"));
  if (type == "box") {
    checkKeys(j, {"type", "lo", "hi"}, where);
    const Vector lo = vectorValue(field(j, "lo", where), child(where, "lo"));
    const Vector hi = vectorValue(field(j, "hi", where), child(where, "hi"));
    return at(where, [&] { return Component(HPolytope::box(lo, hi)); });
  }
  if (type == "polytope") {
    checkKeys(j, {"type", "halfspaces"}, where);
    const std::string hw = child(where, "halfspaces");
    const Json& hs = field(j, "halfspaces", where);
    std::vector<std::pair<Vector, double>> rows = listOf<std::pair<Vector, double>>(
        hs, hw, [](const Json& h, const std::string& w) {
          checkKeys(h, {"normal", "offset"}, w);
          return std::make_pair(vectorValue(field(h, "normal", w), child(w, "normal")),
                                number(field(h, "offset", w), child(w, "offset")));
        });
    if (rows.empty()) throw PathError(hw, "a polytope needs halfspaces");
    return at(where, [&] { return Component(HPolytope::fromInequalities(rows.front().first.dim(), rows)); });
  }
  if (type == "ball") {
    checkKeys(j, {"type", "center", "radius"}, where);
    const Vector c = vectorValue(field(j, "center", where), child(where, "center"));
    const double r = number(field(j, "radius", where), child(where, "radius"));
    return at(where, [&] { return Component(Ball(c, r)); });
  }
  if (type == "complement") {
    checkKeys(j, {"type", "inner"}, where);
    const std::string iw = child(where, "inner");
    const Component inner = parseComponent(field(j, "inner", where), iw);
    if (std::holds_alternative<ComplementBody>(inner)) throw PathError(iw, "complement of a complement");
    const ConvexBody body = std::holds_alternative<Ball>(inner) ? ConvexBody(std::get<Ball>(inner))
                                                                : ConvexBody(std::get<HPolytope>(inner));
    return at(where, [&] { return Component(ComplementBody(body)); });
  }
  throw PathError(child(where, "type"), "unknown component type \"" + type + "\" (box, polytope, ball, complement)");
}

SphericalWeight parseWeight(const Json& j, std::size_t dim, const std::string& where) {
  const std::string type = text(field(j, "type", where), child(where, "type"));
  if (type == "constant") {
    checkKeys(j, {"type", "value"}, where);
    const double c = optionalField(j, "value") ? number(j["value"], child(where, "value")) : 1.0;
    return at(where, [&] { return SphericalWeight::constant(dim, c); });
  }
  if (type == "cap") {
    checkKeys(j, {"type", "axis"}, where);
    const Vector axis = vectorValue(field(j, "axis", where), child(where, "axis"));
    if (axis.dim() != dim) throw PathError(child(where, "axis"), "axis dimension does not match K");
    return at(where, [&] { return SphericalWeight::cap(axis); });
  }
  throw PathError(child(where, "type"), "unknown weight type \"" + type + "\" (constant, cap)");
}

}  // namespace

// ---------------------------------------------------------------------------

SetModel parseSetModel(const Json& j, const std::string& where) {
  requireObject(j, where);
  if (j.contains("type")) {
    const Component c = parseComponent(j, where);
    return at(where, [&] { return SetModel::single(c); });
  }
  checkKeys(j, {"components", "separation"}, where);
  const std::string cw = child(where, "components");
  const std::vector<Component> comps =
      listOf<Component>(field(j, "components", where), cw, [](const Json& c, const std::string& w) {
        return parseComponent(c, w);
      });
  if (comps.empty()) throw PathError(cw, "at least one component is required");
  if (comps.size() == 1 && !j.contains("separation")) return at(where, [&] { return SetModel::single(comps[0]); });
  const double sep = number(field(j, "separation", where), child(where, "separation"));
  return at(where, [&] { return SetModel(comps, sep); });
}

BoundaryDensitySpec parseDensity(const Json& j, const SetModel& k, const std::string& where) {
  const std::string kind = text(field(j, "kind", where), child(where, "kind"));
  const double mass = optionalField(j, "mass") ? number(j["mass"], child(where, "mass")) : 1.0;
  auto finish = [&](BoundaryDensitySpec spec) {
    if (const Json* fw = optionalField(j, "facetWeights")) {
      const std::string fwWhere = child(where, "facetWeights");
      if (!fw->is_array()) throw PathError(fwWhere, "expected an array");
      for (std::size_t i = 0; i < fw->size(); ++i) {
        const std::string w = child(fwWhere, i);
        checkKeys((*fw)[i], {"component", "g"}, w);
        const std::size_t comp = count(field((*fw)[i], "component", w), child(w, "component"));
        const std::vector<double> g = numbers(field((*fw)[i], "g", w), child(w, "g"));
        spec = at(w, [&] { return spec.withFacetWeights(comp, g); });
      }
    }
    return spec;
  };
  if (kind == "uniform") {
    checkKeys(j, {"kind", "massComponents", "mass", "facetWeights"}, where);
    std::vector<std::size_t> comps;
    if (const Json* mc = optionalField(j, "massComponents")) comps = counts(*mc, child(where, "massComponents"));
    return finish(at(where, [&] { return BoundaryDensitySpec::uniform(k, comps, mass); }));
  }
  if (kind == "radialPowerBall") {
    checkKeys(j, {"kind", "component", "alpha", "weight", "mass", "facetWeights"}, where);
    const std::size_t comp = optionalField(j, "component") ? count(j["component"], child(where, "component")) : 0;
    const double alpha = number(field(j, "alpha", where), child(where, "alpha"));
    at(child(where, "alpha"), [&] {
      requireValidAlpha(alpha);
      return 0;
    });
    std::optional<SphericalWeight> weight;
    if (const Json* w = optionalField(j, "weight")) weight = parseWeight(*w, k.dim(), child(where, "weight"));
    return finish(at(where, [&] { return BoundaryDensitySpec::radialPowerBall(k, comp, alpha, weight, mass); }));
  }
  if (kind == "distPowerPolytope") {
    checkKeys(j, {"kind", "component", "alpha", "mass", "facetWeights"}, where);
    const std::size_t comp = optionalField(j, "component") ? count(j["component"], child(where, "component")) : 0;
    const double alpha = number(field(j, "alpha", where), child(where, "alpha"));
    at(child(where, "alpha"), [&] {
      requireValidAlpha(alpha);
      return 0;
    });
    return finish(at(where, [&] { return BoundaryDensitySpec::distPowerPolytope(k, comp, alpha, mass); }));
  }
  throw PathError(child(where, "kind"),
                  "unknown density kind \"" + kind + "\" (uniform, radialPowerBall, distPowerPolytope)");
}

VCompact parseBody(const Json& j, const std::string& where) {
  const std::string type = text(field(j, "type", where), child(where, "type"));
  if (type == "ball") {
    checkKeys(j, {"type", "center", "radius"}, where);
    const Vector c = vectorValue(field(j, "center", where), child(where, "center"));
    const double r = number(field(j, "radius", where), child(where, "radius"));
    return at(where, [&] { return VCompact::ball(Ball(c, r)); });
  }
  if (type == "hull") {
    checkKeys(j, {"type", "vertices"}, where);
    const std::string vw = child(where, "vertices");
    auto verts = listOf<Vector>(field(j, "vertices", where), vw, [](const Json& v, const std::string& w) {
      return vectorValue(v, w);
    });
    return at(vw, [&] { return VCompact::hull(std::move(verts)); });
  }
  if (type == "point") {
    checkKeys(j, {"type", "at"}, where);
    return VCompact::point(vectorValue(field(j, "at", where), child(where, "at")));
  }
  if (type == "box") {
    const Box b = parseBox(j, where);
    return VCompact::hull(b.corners());
  }
  throw PathError(child(where, "type"), "unknown test body type \"" + type + "\" (ball, hull, point, box)");
}

Box parseBox(const Json& j, const std::string& where) {
  checkKeys(j, {"type", "lo", "hi"}, where);
  const Vector lo = vectorValue(field(j, "lo", where), child(where, "lo"));
  const Vector hi = vectorValue(field(j, "hi", where), child(where, "hi"));
  return at(where, [&] { return Box(lo, hi); });
}

DirectionalIntensity parseDirectional(const Json& j, const std::string& where) {
  checkKeys(j, {"dim", "atoms", "spherical"}, where);
  const std::size_t dim = count(field(j, "dim", where), child(where, "dim"));
  if (dim < 1 || dim > kMaxDimension) throw PathError(child(where, "dim"), "dimension must be 1, 2 or 3");
  std::vector<DirectionalAtom> atoms;
  if (const Json* a = optionalField(j, "atoms"))
    atoms = listOf<DirectionalAtom>(*a, child(where, "atoms"), [](const Json& x, const std::string& w) {
      checkKeys(x, {"direction", "weight"}, w);
      return DirectionalAtom{vectorValue(field(x, "direction", w), child(w, "direction")),
                             number(field(x, "weight", w), child(w, "weight"))};
    });
  std::optional<SphericalDensity> spherical;
  if (const Json* s = optionalField(j, "spherical")) {
    const SphericalWeight w = parseWeight(*s, dim, child(where, "spherical"));
    spherical = SphericalDensity{w.value, w.integral, w.maxValue};
  }
  return at(where, [&] { return DirectionalIntensity(dim, atoms, spherical); });
}

// ---------------------------------------------------------------------------

namespace {

CommonConfig parseCommon(const Json& j, const std::string& kind, std::optional<std::uint64_t> inherited,
                         const std::string& where) {
  CommonConfig c;
  c.name = optionalField(j, "name") ? text(j["name"], child(where, "name")) : kind;
  if (c.name.empty() || c.name.find_first_of(",\"\n\r") != std::string::npos)
    throw PathError(child(where, "name"), "name must be nonempty and free of commas, quotes and newlines");
  if (const Json* s = optionalField(j, "rootSeed"))
    c.rootSeed = seedValue(*s, child(where, "rootSeed"));
  else
    c.rootSeed = inherited.value_or(0);
  if (const Json* t = optionalField(j, "tolerances")) {
    const std::string tw = child(where, "tolerances");
    checkKeys(*t, {"zThreshold", "absTolerance"}, tw);
    if (const Json* z = optionalField(*t, "zThreshold")) c.tolerances.zThreshold = number(*z, child(tw, "zThreshold"));
    if (const Json* a = optionalField(*t, "absTolerance"))
      c.tolerances.absTolerance = number(*a, child(tw, "absTolerance"));
    if (!(c.tolerances.zThreshold >= 0.0) || !(c.tolerances.absTolerance >= 0.0))
      throw PathError(tw, "tolerances must be >= 0");
  }
  return c;
}

struct ErosionSettings {
  ErosionMethod method = ErosionMethod::Auto;
  std::size_t samples = 1'000'000;
};

ErosionSettings parseErosion(const Json& j, const std::string& where) {
  ErosionSettings s;
  const Json* e = optionalField(j, "erosion");
  if (!e) return s;
  const std::string ew = child(where, "erosion");
  checkKeys(*e, {"method", "samples"}, ew);
  if (const Json* m = optionalField(*e, "method")) {
    const std::string name = text(*m, child(ew, "method"));
    if (name == "auto")
      s.method = ErosionMethod::Auto;
    else if (name == "exact")
      s.method = ErosionMethod::Exact;
    else if (name == "monteCarlo")
      s.method = ErosionMethod::MonteCarlo;
    else
      throw PathError(child(ew, "method"), "unknown method \"" + name + "\" (auto, exact, monteCarlo)");
  }
  if (const Json* n = optionalField(*e, "samples")) s.samples = count(*n, child(ew, "samples"));
  if (s.samples == 0) throw PathError(child(ew, "samples"), "samples must be >= 1");
  return s;
}

std::size_t positiveCount(const Json& j, const char* key, std::size_t fallback, const std::string& where) {
  const Json* f = optionalField(j, key);
  if (!f) return fallback;
  const std::size_t v = count(*f, child(where, key));
  if (v == 0) throw PathError(child(where, key), std::string(key) + " must be >= 1");
  return v;
}

std::vector<std::size_t> nSweep(const Json& j, const std::string& where) {
  const std::string nw = child(where, "n");
  auto n = counts(field(j, "n", where), nw);
  requireStrictlyMonotone(n, nw);
  for (std::size_t i = 0; i < n.size(); ++i)
    if (n[i] == 0) throw PathError(child(nw, i), "n must be >= 1");
  return n;
}

}  // namespace

ExperimentConfig parseExperiment(const Json& j, std::optional<std::uint64_t> inheritedSeed, const std::string& where) {
  requireObject(j, where);
  const std::string kind = text(field(j, "kind", where), child(where, "kind"));
  const auto& kinds = experimentKinds();
  if (std::find(kinds.begin(), kinds.end(), kind) == kinds.end())
    throw PathError(child(where, "kind"), "unknown experiment kind \"" + kind + "\"");
  CommonConfig common = parseCommon(j, kind, inheritedSeed, where);

  if (kind == "erosionLimit") {
    checkKeys(j, {"kind", "name", "rootSeed", "tolerances", "K", "density", "L", "eps", "erosion"}, where);
    SetModel k = parseSetModel(field(j, "K", where), child(where, "K"));
    BoundaryDensitySpec spec = parseDensity(field(j, "density", where), k, child(where, "density"));
    VCompact l = parseBody(field(j, "L", where), child(where, "L"));
    if (l.dim() != k.dim()) throw PathError(child(where, "L"), "test body dimension does not match K");
    auto eps = numbers(field(j, "eps", where), child(where, "eps"));
    requireStrictlyMonotone(eps, child(where, "eps"));
    for (std::size_t i = 0; i < eps.size(); ++i)
      if (!(eps[i] > 0.0)) throw PathError(child(child(where, "eps"), i), "eps must be positive");
    const ErosionSettings es = parseErosion(j, where);
    return ErosionLimitConfig{common, std::move(k), std::move(spec), std::move(l), std::move(eps), es.method,
                              es.samples};
  }
  if (kind == "inclusionConvergence") {
    checkKeys(j, {"kind", "name", "rootSeed", "tolerances", "K", "density", "L", "n", "trials", "erosion",
                  "closedTolerance"},
              where);
    SetModel k = parseSetModel(field(j, "K", where), child(where, "K"));
    BoundaryDensitySpec spec = parseDensity(field(j, "density", where), k, child(where, "density"));
    if (!spec.samplable()) throw PathError(child(where, "density"), "this density cannot be sampled");
    VCompact l = parseBody(field(j, "L", where), child(where, "L"));
    if (l.dim() != k.dim()) throw PathError(child(where, "L"), "test body dimension does not match K");
    auto n = nSweep(j, where);
    const ErosionSettings es = parseErosion(j, where);
    InclusionConvergenceConfig cfg{common, std::move(k), std::move(spec), std::move(l), std::move(n)};
    cfg.trials = positiveCount(j, "trials", cfg.trials, where);
    cfg.method = es.method;
    cfg.samples = es.samples;
    if (const Json* c = optionalField(j, "closedTolerance")) cfg.closedTolerance = number(*c, child(where, "closedTolerance"));
    return cfg;
  }
  if (kind == "zeroCellSelfCheck") {
    checkKeys(j, {"kind", "name", "rootSeed", "tolerances", "nu", "K", "density", "alpha", "L", "rho", "trials",
                  "windowHalfWidth", "expectUnbounded", "includeOrigin"},
              where);
    std::optional<DirectionalIntensity> nu;
    double alpha = 0.0;
    if (const Json* nj = optionalField(j, "nu")) {
      nu = parseDirectional(*nj, child(where, "nu"));
      alpha = number(field(j, "alpha", where), child(where, "alpha"));
      at(child(where, "alpha"), [&] {
        requireValidAlpha(alpha);
        return 0;
      });
    } else {
      const SetModel k = parseSetModel(field(j, "K", where), child(where, "K"));
      const BoundaryDensitySpec spec = parseDensity(field(j, "density", where), k, child(where, "density"));
      nu = at(where, [&] { return nuHat(k, spec); });
      alpha = spec.alpha();
      if (j.contains("alpha")) throw PathError(child(where, "alpha"), "alpha comes from the density when K is given");
    }
    VCompact l = parseBody(field(j, "L", where), child(where, "L"));
    if (l.dim() != nu->dim()) throw PathError(child(where, "L"), "test body dimension does not match nu");
    auto rho = numbers(field(j, "rho", where), child(where, "rho"));
    requireStrictlyMonotone(rho, child(where, "rho"));
    for (std::size_t i = 0; i < rho.size(); ++i)
      if (!(rho[i] >= 0.0)) throw PathError(child(child(where, "rho"), i), "rho must be >= 0");
    ZeroCellSelfCheckConfig cfg{common, std::move(*nu), alpha, std::move(l), std::move(rho), 10'000, std::nullopt,
                                std::nullopt, true};
    cfg.trials = positiveCount(j, "trials", cfg.trials, where);
    if (const Json* w = optionalField(j, "windowHalfWidth")) cfg.windowHalfWidth = number(*w, child(where, "windowHalfWidth"));
    if (const Json* e = optionalField(j, "expectUnbounded")) cfg.expectUnbounded = boolean(*e, child(where, "expectUnbounded"));
    if (const Json* o = optionalField(j, "includeOrigin")) cfg.includeOrigin = boolean(*o, child(where, "includeOrigin"));
    return cfg;
  }
  if (kind == "volumeMoments") {
    checkKeys(j, {"kind", "name", "rootSeed", "tolerances", "K", "density", "nu", "n", "moments", "window", "trials",
                  "probes"},
              where);
    SetModel k = parseSetModel(field(j, "K", where), child(where, "K"));
    BoundaryDensitySpec spec = parseDensity(field(j, "density", where), k, child(where, "density"));
    if (!spec.samplable()) throw PathError(child(where, "density"), "this density cannot be sampled");
    std::optional<DirectionalIntensity> nu;
    if (const Json* nj = optionalField(j, "nu")) nu = parseDirectional(*nj, child(where, "nu"));
    auto n = nSweep(j, where);
    Box window = parseBox(field(j, "window", where), child(where, "window"));
    if (window.dim() != k.dim()) throw PathError(child(where, "window"), "window dimension does not match K");
    VolumeMomentsConfig cfg{common, std::move(k), std::move(spec), std::move(nu), std::move(n), {1}, window};
    if (const Json* m = optionalField(j, "moments")) {
      const auto ms = counts(*m, child(where, "moments"));
      if (ms.empty()) throw PathError(child(where, "moments"), "moments must not be empty");
      cfg.moments.clear();
      for (std::size_t i = 0; i < ms.size(); ++i) {
        if (ms[i] == 0 || ms[i] > 16) throw PathError(child(child(where, "moments"), i), "moment order must be in 1..16");
        cfg.moments.push_back(static_cast<unsigned>(ms[i]));
      }
    }
    cfg.trials = positiveCount(j, "trials", cfg.trials, where);
    if (cfg.trials < 2) throw PathError(child(where, "trials"), "trials must be >= 2");
    cfg.probes = positiveCount(j, "probes", cfg.probes, where);
    return cfg;
  }
  if (kind == "twoBallAnomaly") {
    checkKeys(j, {"kind", "name", "rootSeed", "tolerances", "K", "n", "trials", "windowHalfWidth", "inclusionRadius",
                  "inclusionTrials", "probes"},
              where);
    SetModel k = parseSetModel(field(j, "K", where), child(where, "K"));
    if (k.components().size() != 2 || !std::holds_alternative<Ball>(k.components()[0]) ||
        !std::holds_alternative<Ball>(k.components()[1]))
      throw PathError(child(where, "K"), "the two-ball experiment needs exactly two ball components");
    auto n = nSweep(j, where);
    TwoBallAnomalyConfig cfg{common, std::move(k), std::move(n)};
    cfg.trials = positiveCount(j, "trials", cfg.trials, where);
    if (cfg.trials < 2) throw PathError(child(where, "trials"), "trials must be >= 2");
    if (const Json* w = optionalField(j, "windowHalfWidth")) cfg.windowHalfWidth = number(*w, child(where, "windowHalfWidth"));
    if (!(cfg.windowHalfWidth > 0.0)) throw PathError(child(where, "windowHalfWidth"), "must be positive");
    if (const Json* r = optionalField(j, "inclusionRadius")) cfg.inclusionRadius = number(*r, child(where, "inclusionRadius"));
    if (!(cfg.inclusionRadius >= 0.0)) throw PathError(child(where, "inclusionRadius"), "must be >= 0");
    cfg.inclusionTrials = positiveCount(j, "inclusionTrials", cfg.inclusionTrials, where);
    cfg.probes = positiveCount(j, "probes", cfg.probes, where);
    return cfg;
  }
  // d1Exact
  checkKeys(j, {"kind", "name", "rootSeed", "tolerances", "n", "trials", "rho"}, where);
  auto n = nSweep(j, where);
  D1ExactConfig cfg{common, std::move(n), 10'000, {}};
  cfg.trials = positiveCount(j, "trials", cfg.trials, where);
  if (const Json* r = optionalField(j, "rho")) {
    cfg.rho = numbers(*r, child(where, "rho"));
    for (std::size_t i = 0; i < cfg.rho.size(); ++i)
      if (!(cfg.rho[i] >= 0.0)) throw PathError(child(child(where, "rho"), i), "rho must be >= 0");
  }
  return cfg;
}

// ---------------------------------------------------------------------------

namespace {

class PointerWalker {
 public:
  PointerWalker(const std::string& s, std::map<std::string, int>& out) : s_(s), out_(out) {}

  void value(const std::string& ptr) {
    skipSpace();
    if (i_ >= s_.size()) return;
    out_[ptr] = line_;
    const char c = s_[i_];
    if (c == '{') {
      ++i_;
      skipSpace();
      if (peek() == '}') {
        ++i_;
        return;
      }
      while (i_ < s_.size()) {
        skipSpace();
        const std::string key = str();
        skipSpace();
        ++i_;  // ':'
        value(ptr + "/" + escapePointerToken(key));
        skipSpace();
        if (peek() == ',') {
          ++i_;
          continue;
        }
        ++i_;  // '}'
        return;
      }
    } else if (c == '[') {
      ++i_;
      skipSpace();
      if (peek() == ']') {
        ++i_;
        return;
      }
      for (std::size_t idx = 0; i_ < s_.size(); ++idx) {
        value(ptr + "/" + std::to_string(idx));
        skipSpace();
        if (peek() == ',') {
          ++i_;
          continue;
        }
        ++i_;  // ']'
        return;
      }
    } else if (c == '"') {
      (void)str();
    } else {
      while (i_ < s_.size() && std::string_view(",]} \t\r\n").find(s_[i_]) == std::string_view::npos) ++i_;
    }
  }

 private:
  char peek() const { return i_ < s_.size() ? s_[i_] : '\0'; }

  void skipSpace() {
    while (i_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[i_]))) {
      if (s_[i_] == '\n') ++line_;
      ++i_;
    }
  }

  // Decodes enough of a string literal to compare object keys; \u escapes
  // are kept verbatim.
  std::string str() {
    std::string out;
    ++i_;  // opening quote
    while (i_ < s_.size() && s_[i_] != '"') {
      if (s_[i_] == '\\' && i_ + 1 < s_.size()) {
        const char e = s_[i_ + 1];
        out += (e == 'n') ? '\n' : (e == 't') ? '\t' : e;
        i_ += 2;
      } else {
        out += s_[i_++];
      }
    }
    ++i_;  // closing quote
    return out;
  }

  const std::string& s_;
  std::map<std::string, int>& out_;
  std::size_t i_ = 0;
  int line_ = 1;
};

int lineOfOffset(const std::string& text, std::size_t offset) {
  offset = std::min(offset, text.size());
  return 1 + static_cast<int>(std::count(text.begin(), text.begin() + static_cast<std::ptrdiff_t>(offset), '\n'));
}

}  // namespace

std::map<std::string, int> jsonPointerLines(const std::string& text) {
  std::map<std::string, int> out;
  PointerWalker(text, out).value("");
  return out;
}

ConfigFile parseConfigText(const std::string& textIn, const std::string& sourceName) {
  ConfigFile file;
  try {
    file.raw = Json::parse(textIn);
  } catch (const Json::parse_error& e) {
    // nlohmann reports the byte just past the offending token.
    const std::size_t byte = e.byte > 0 ? e.byte - 1 : 0;
    std::string reason = e.what();
    if (auto p = reason.find("syntax error"); p != std::string::npos) reason = reason.substr(p);
    throw ConfigError(sourceName + ":" + std::to_string(lineOfOffset(textIn, byte)) + ": invalid JSON: " + reason);
  }
  try {
    requireObject(file.raw, "");
    if (file.raw.contains("experiments")) {
      checkKeys(file.raw, {"rootSeed", "experiments"}, "");
      std::optional<std::uint64_t> seed;
      if (const Json* s = optionalField(file.raw, "rootSeed")) seed = seedValue(*s, "/rootSeed");
      const Json& list = file.raw["experiments"];
      if (!list.is_array() || list.empty()) throw PathError("/experiments", "expected a nonempty array");
      std::set<std::string> names;
      for (std::size_t i = 0; i < list.size(); ++i) {
        const std::string w = child("/experiments", i);
        file.experiments.push_back({parseExperiment(list[i], seed, w), list[i]});
        if (!names.insert(commonOf(file.experiments.back().config).name).second)
          throw PathError(w, "duplicate experiment name; set distinct \"name\" fields");
      }
    } else {
      file.experiments.push_back({parseExperiment(file.raw, std::nullopt, ""), file.raw});
    }
  } catch (const PathError& e) {
    const auto lines = jsonPointerLines(textIn);
    std::string ptr = e.pointer();
    int line = 1;
    // Nearest enclosing location that exists in the document.
    while (true) {
      if (auto it = lines.find(ptr); it != lines.end()) {
        line = it->second;
        break;
      }
      const auto slash = ptr.rfind('/');
      if (slash == std::string::npos) break;
      ptr = ptr.substr(0, slash);
    }
    throw ConfigError(sourceName + ":" + std::to_string(line) + ": " + e.what());
  }
  return file;
}

ConfigFile loadConfigFile(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ConfigError(path + ": cannot open config file");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parseConfigText(buf.str(), path);
}

void overrideSeed(ConfigFile& file, std::uint64_t seed) {
  for (auto& e : file.experiments) commonOf(e.config).rootSeed = seed;
}

}  // namespace zerocell
