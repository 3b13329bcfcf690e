"""Limits of intersections of random translates of a set and Poisson zero cells.

Structured arguments (K, density, L, nu) are dicts in the same schema as the
config files; see docs/config-schema.md.
"""

import json

from . import _core
from ._core import CSV_HEADER, ZerocellError, __version__, experiment_kinds, format_double, t_bounds

__all__ = [
    "CSV_HEADER",
    "ZerocellError",
    "__version__",
    "closed_form_inclusion",
    "empirical_inclusion",
    "erosion_mu",
    "experiment_kinds",
    "format_double",
    "hemisphere_contained",
    "lambda_functional",
    "lambda_limit",
    "nu_hat",
    "run_config",
    "run_config_csv",
    "sample_mu",
    "support",
    "t_bounds",
    "validate_config",
    "zero_cell",
]


def _text(obj):
    return obj if isinstance(obj, str) else json.dumps(obj)


def _nu_text(nu):
    # Accept the output of nu_hat, which carries summary masses next to the atoms.
    if isinstance(nu, dict) and ("total_mass" in nu or "spherical_mass" in nu):
        if nu.get("spherical_mass", 0.0) != 0.0:
            raise ValueError("nu_hat output with a spherical part cannot be passed back; describe nu explicitly")
        nu = {"dim": nu["dim"], "atoms": nu["atoms"]}
    return _text(nu)


def validate_config(config, source="<config>"):
    """Number of experiments in a config (dict or JSON text); raises ZerocellError."""
    return _core.validate_config(_text(config), source)


def run_config(config, seed=None, workers=1):
    """Runs every experiment; returns [{name, kind, rows, diagnostics}]."""
    return _core.run_config(_text(config), seed, workers)


def run_config_csv(config, seed=None, workers=1):
    return _core.run_config_csv(_text(config), seed, workers)


def support(L, u):
    return _core.support(_text(L), list(u))


def erosion_mu(K, density, L, eps, method="auto", samples=1_000_000, seed=0, workers=1):
    return _core.erosion_mu(_text(K), _text(density), _text(L), eps, method, samples, seed, workers)


def nu_hat(K, density):
    return _core.nu_hat(_text(K), _text(density))


def lambda_limit(K, density, L):
    return _core.lambda_limit(_text(K), _text(density), _text(L))


def lambda_functional(nu, L, alpha):
    return _core.lambda_functional(_nu_text(nu), _text(L), alpha)


def closed_form_inclusion(K, density, L, n, method="auto", samples=1_000_000, seed=0):
    return _core.closed_form_inclusion(_text(K), _text(density), _text(L), n, method, samples, seed)


def empirical_inclusion(K, density, L, n, trials, seed=0, workers=1):
    return _core.empirical_inclusion(_text(K), _text(density), _text(L), n, trials, seed, workers)


def sample_mu(K, density, count, seed=0):
    return _core.sample_mu(_text(K), _text(density), count, seed)


def hemisphere_contained(nu=None, K=None, density=None):
    """Whether the directional measure is carried by a closed hemisphere.

    Pass either nu, or K together with density (nu-hat is then derived).
    """
    if nu is not None:
        return _core.hemisphere_contained_nu(_nu_text(nu))
    if K is None or density is None:
        raise TypeError("pass nu, or both K and density")
    return _core.hemisphere_contained_k(_text(K), _text(density))


def zero_cell(nu, alpha, window_half_width, seed=0):
    return _core.zero_cell(_nu_text(nu), alpha, window_half_width, seed)
