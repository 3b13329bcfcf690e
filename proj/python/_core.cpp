// Python bindings. Structured inputs (K, densities, bodies, nu) arrive as JSON
// text in the config-file schema; the zerocell package wraps them as dicts.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "zerocell/config.hpp"
#include "zerocell/results_io.hpp"
#include "zerocell/samplers.hpp"

namespace py = pybind11;
using namespace zerocell;

namespace {

Json parse(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const Json::exception& e) {
    throw ConfigError(std::string("invalid JSON argument: ") + e.what());
  }
}

struct Problem {
  SetModel k;
  BoundaryDensitySpec spec;
};

Problem problem(const std::string& kText, const std::string& densityText) {
  SetModel k = parseSetModel(parse(kText), "/K");
  BoundaryDensitySpec spec = parseDensity(parse(densityText), k, "/density");
  return {std::move(k), std::move(spec)};
}

ErosionMethod methodFromName(const std::string& name) {
  if (name == "auto") return ErosionMethod::Auto;
  if (name == "exact") return ErosionMethod::Exact;
  if (name == "monteCarlo") return ErosionMethod::MonteCarlo;
  throw InvalidArgument("unknown erosion method \"" + name + "\" (auto, exact, monteCarlo)");
}

std::vector<double> coords(const Vector& v) { return {v.coords().begin(), v.coords().end()}; }

py::dict rowDict(const ResultRow& r) {
  py::dict d;
  d["experiment"] = r.experiment;
  d["sweep_value"] = r.sweepValue;
  d["estimate"] = r.estimate;
  d["stderr"] = r.standardError;
  d["reference"] = r.reference;
  d["z_score"] = r.zScore;
  d["passed"] = r.passed;
  d["seed"] = r.seed;
  d["trials"] = r.trials;
  return d;
}

py::dict nuDict(const DirectionalIntensity& nu) {
  py::list atoms;
  for (const auto& a : nu.atoms()) {
    py::dict d;
    d["direction"] = coords(a.direction);
    d["weight"] = a.weight;
    atoms.append(d);
  }
  py::dict out;
  out["dim"] = nu.dim();
  out["atoms"] = atoms;
  out["spherical_mass"] = nu.spherical() ? nu.spherical()->totalMass : 0.0;
  out["total_mass"] = nu.totalMass();
  return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Native core of the zerocell package";
  m.attr("__version__") = ZEROCELL_VERSION;
  m.attr("CSV_HEADER") = kCsvHeader;

  py::register_exception<Error>(m, "ZerocellError", PyExc_ValueError);

  m.def("experiment_kinds", &experimentKinds);

  m.def(
      "validate_config",
      [](const std::string& text, const std::string& source) {
        return parseConfigText(text, source).experiments.size();
      },
      py::arg("text"), py::arg("source") = "<config>", "Parses a config document; returns the experiment count.");

  m.def(
      "run_config",
      [](const std::string& text, std::optional<std::uint64_t> seed, unsigned workers) {
        ConfigFile cfg = parseConfigText(text, "<config>");
        if (seed) overrideSeed(cfg, *seed);
        py::list out;
        for (const auto& e : cfg.experiments) {
          ExperimentResult res;
          {
            py::gil_scoped_release release;
            res = runExperiment(e.config, RunOptions{workers});
          }
          py::dict d;
          d["name"] = commonOf(e.config).name;
          d["kind"] = kindOf(e.config);
          py::list rows;
          for (const auto& r : res.rows) rows.append(rowDict(r));
          d["rows"] = rows;
          py::dict diag;
          for (const auto& [k, v] : res.diagnostics) diag[py::str(k)] = v;
          d["diagnostics"] = diag;
          out.append(d);
        }
        return out;
      },
      py::arg("text"), py::arg("seed") = py::none(), py::arg("workers") = 1);

  m.def(
      "run_config_csv",
      [](const std::string& text, std::optional<std::uint64_t> seed, unsigned workers) {
        ConfigFile cfg = parseConfigText(text, "<config>");
        if (seed) overrideSeed(cfg, *seed);
        py::gil_scoped_release release;
        std::vector<ResultRow> rows;
        for (const auto& e : cfg.experiments) {
          auto r = runExperiment(e.config, RunOptions{workers}).rows;
          rows.insert(rows.end(), r.begin(), r.end());
        }
        return rowsToCsv(rows);
      },
      py::arg("text"), py::arg("seed") = py::none(), py::arg("workers") = 1);

  m.def("format_double", &formatDouble);

  m.def(
      "support",
      [](const std::string& body, const std::vector<double>& u) {
        return support(parseBody(parse(body), "/L"), Vector::fromSpan(u));
      },
      py::arg("body"), py::arg("u"));

  m.def(
      "erosion_mu",
      [](const std::string& k, const std::string& density, const std::string& body, double eps,
         const std::string& method, std::size_t samples, std::uint64_t seed, unsigned workers) {
        const Problem p = problem(k, density);
        const VCompact l = parseBody(parse(body), "/L");
        ErosionMeasure mu;
        {
          py::gil_scoped_release release;
          mu = erosionMu(p.k, p.spec, l, eps, ErosionOptions{methodFromName(method), samples, seed, workers});
        }
        py::dict d;
        d["value"] = mu.value;
        d["method"] = mu.method;
        d["stderr"] = mu.standardError ? py::cast(*mu.standardError) : py::none();
        return d;
      },
      py::arg("K"), py::arg("density"), py::arg("L"), py::arg("eps"), py::arg("method") = "auto",
      py::arg("samples") = 1'000'000, py::arg("seed") = 0, py::arg("workers") = 1);

  m.def(
      "nu_hat",
      [](const std::string& k, const std::string& density) {
        const Problem p = problem(k, density);
        return nuDict(nuHat(p.k, p.spec));
      },
      py::arg("K"), py::arg("density"));

  m.def(
      "lambda_limit",
      [](const std::string& k, const std::string& density, const std::string& body) {
        const Problem p = problem(k, density);
        return lambdaFunctional(nuHat(p.k, p.spec), parseBody(parse(body), "/L"), p.spec.alpha());
      },
      py::arg("K"), py::arg("density"), py::arg("L"), "Lambda(L) for the measure nu-hat of (K, density).");

  m.def(
      "lambda_functional",
      [](const std::string& nu, const std::string& body, double alpha) {
        requireValidAlpha(alpha);
        return lambdaFunctional(parseDirectional(parse(nu), "/nu"), parseBody(parse(body), "/L"), alpha);
      },
      py::arg("nu"), py::arg("L"), py::arg("alpha"));

  m.def(
      "closed_form_inclusion",
      [](const std::string& k, const std::string& density, const std::string& body, std::size_t n,
         const std::string& method, std::size_t samples, std::uint64_t seed) {
        const Problem p = problem(k, density);
        const VCompact l = parseBody(parse(body), "/L");
        ClosedFormInclusion c;
        {
          py::gil_scoped_release release;
          c = closedFormInclusion(p.k, p.spec, l, n, ErosionOptions{methodFromName(method), samples, seed, 1});
        }
        py::dict d;
        d["value"] = c.value;
        d["method"] = c.method;
        d["stderr"] = c.standardError;
        return d;
      },
      py::arg("K"), py::arg("density"), py::arg("L"), py::arg("n"), py::arg("method") = "auto",
      py::arg("samples") = 1'000'000, py::arg("seed") = 0);

  m.def(
      "empirical_inclusion",
      [](const std::string& k, const std::string& density, const std::string& body, std::size_t n,
         std::size_t trials, std::uint64_t seed, unsigned workers) {
        const Problem p = problem(k, density);
        const VCompact l = parseBody(parse(body), "/L");
        BinomialEstimate est;
        {
          py::gil_scoped_release release;
          est = empiricalInclusion(l, p.k, p.spec, n, trials, seed, workers);
        }
        py::dict d;
        d["successes"] = est.successes;
        d["trials"] = est.trials;
        d["p_hat"] = est.pHat;
        d["ci95"] = py::make_tuple(est.ci95.lo, est.ci95.hi);
        return d;
      },
      py::arg("K"), py::arg("density"), py::arg("L"), py::arg("n"), py::arg("trials"), py::arg("seed") = 0,
      py::arg("workers") = 1);

  m.def(
      "sample_mu",
      [](const std::string& k, const std::string& density, std::size_t count, std::uint64_t seed) {
        const Problem p = problem(k, density);
        const MuSampler sampler(p.k, p.spec);
        RngStream rng(seed, 0);
        std::vector<std::vector<double>> out;
        out.reserve(count);
        for (std::size_t i = 0; i < count; ++i) out.push_back(coords(sampler.sample(rng)));
        return out;
      },
      py::arg("K"), py::arg("density"), py::arg("count"), py::arg("seed") = 0);

  m.def(
      "t_bounds",
      [](double eps, double deltaPlus, double deltaMinus, double rBound, double hVal) {
        const TBounds t = tBounds(eps, ReachData(deltaPlus, deltaMinus, rBound, hVal));
        return py::make_tuple(t.tPlus, t.tMinus);
      },
      py::arg("eps"), py::arg("delta_plus"), py::arg("delta_minus"), py::arg("r_bound"), py::arg("h_val"));

  m.def(
      "hemisphere_contained_nu",
      [](const std::string& nu) { return hemisphereContained(parseDirectional(parse(nu), "/nu")); }, py::arg("nu"));
  m.def(
      "hemisphere_contained_k",
      [](const std::string& k, const std::string& density) {
        const Problem p = problem(k, density);
        return hemisphereContained(nuHat(p.k, p.spec));
      },
      py::arg("K"), py::arg("density"));

  m.def(
      "zero_cell",
      [](const std::string& nu, double alpha, double halfWidth, std::uint64_t seed) {
        requireValidAlpha(alpha);
        const DirectionalIntensity dir = parseDirectional(parse(nu), "/nu");
        const Box window = Box::centered(Vector(dir.dim()), halfWidth);
        RngStream rng(seed, 0);
        const HyperplaneBatch batch = sampleHyperplanes(dir, alpha, window.maxNorm(), rng);
        const ZeroCellSample z = zeroCell(batch, window, hemisphereContained(dir));
        py::dict d;
        d["volume"] = volumeExact(z.cell);
        d["hyperplanes"] = batch.pairs.size();
        d["truncated_by_window"] = z.truncatedByWindow;
        d["possibly_unbounded"] = z.possiblyUnbounded;
        if (dir.dim() == 2) {
          std::vector<std::vector<double>> verts;
          for (const auto& v : polygonVertices(z.cell)) verts.push_back(coords(v));
          d["vertices"] = verts;
        }
        return d;
      },
      py::arg("nu"), py::arg("alpha"), py::arg("window_half_width"), py::arg("seed") = 0);
}
