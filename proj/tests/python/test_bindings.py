import math

import pytest

import zerocell

SQUARE = {"type": "box", "lo": [0, 0], "hi": [1, 1]}
UNIFORM = {"kind": "uniform"}
DISK_L = {"type": "ball", "center": [0, 0], "radius": 0.25}
INTERVAL = {"type": "box", "lo": [0], "hi": [1]}
HALF_UNIT = {"type": "box", "lo": [-0.5], "hi": [0.5]}


def test_kinds_listed():
    assert zerocell.experiment_kinds() == [
        "erosionLimit",
        "inclusionConvergence",
        "zeroCellSelfCheck",
        "volumeMoments",
        "twoBallAnomaly",
        "d1Exact",
    ]


def test_support_of_ball_and_hull():
    assert zerocell.support(DISK_L, [0.6, 0.8]) == pytest.approx(0.25)
    hull = {"type": "hull", "vertices": [[0, 0], [1, 0], [0, 2]]}
    assert zerocell.support(hull, [0, 1]) == pytest.approx(2.0)
    assert zerocell.support(hull, [-1, 0]) == pytest.approx(0.0)


def test_box_erosion_matches_area_lost():
    # Eroding by eps * B(0, 1/4) trims eps/4 from every side of the square.
    eps = 0.01
    cut = 2 * eps * 0.25
    got = zerocell.erosion_mu(SQUARE, UNIFORM, DISK_L, eps)
    assert got["method"] == "exact"
    assert got["value"] == pytest.approx(1 - (1 - cut) ** 2, rel=1e-12)


def test_lambda_of_square_with_quarter_disk():
    # Four unit atoms with h+ = 1/4 each.
    assert zerocell.lambda_limit(SQUARE, UNIFORM, DISK_L) == pytest.approx(1.0)
    nu = zerocell.nu_hat(SQUARE, UNIFORM)
    assert nu["total_mass"] == pytest.approx(4.0)
    assert len(nu["atoms"]) == 4


def test_closed_form_inclusion_on_interval():
    got = zerocell.closed_form_inclusion(INTERVAL, UNIFORM, HALF_UNIT, 1000)
    assert got["value"] == pytest.approx((1 - 1e-3) ** 1000, rel=1e-12)


def test_empirical_inclusion_is_seeded():
    a = zerocell.empirical_inclusion(INTERVAL, UNIFORM, HALF_UNIT, 100, 2000, seed=11)
    b = zerocell.empirical_inclusion(INTERVAL, UNIFORM, HALF_UNIT, 100, 2000, seed=11, workers=2)
    assert a == b
    lo, hi = a["ci95"]
    assert lo <= a["p_hat"] <= hi
    # 5 binomial sigma around the finite-n value.
    p = 0.99**100
    assert abs(a["p_hat"] - p) < 5 * math.sqrt(p * (1 - p) / 2000)


def test_samples_lie_in_k():
    pts = zerocell.sample_mu(SQUARE, UNIFORM, 500, seed=3)
    assert len(pts) == 500
    assert all(0 <= x <= 1 and 0 <= y <= 1 for x, y in pts)


def test_t_bounds_bracket_support():
    eps = 2.0**-20
    t_plus, t_minus = zerocell.t_bounds(eps, 0.5, 0.5, 1.0, 0.3)
    assert t_plus <= t_minus
    assert abs(t_plus / eps - 0.3) < 1e-3
    assert abs(t_minus / eps - 0.3) < 1e-3


def test_hemisphere_flags():
    assert not zerocell.hemisphere_contained(K=SQUARE, density=UNIFORM)
    single = {"dim": 1, "atoms": [{"direction": [1], "weight": 1}]}
    assert zerocell.hemisphere_contained(nu=single)
    cap = {
        "kind": "radialPowerBall",
        "alpha": 0,
        "weight": {"type": "cap", "axis": [0, 1]},
    }
    assert zerocell.hemisphere_contained(K={"type": "ball", "center": [0, 0], "radius": 1}, density=cap)


def test_zero_cell_contains_origin():
    nu = zerocell.nu_hat(SQUARE, UNIFORM)
    cell = zerocell.zero_cell(nu, 0.0, 20.0, seed=5)
    assert cell["volume"] > 0
    xs = [v[0] for v in cell["vertices"]]
    ys = [v[1] for v in cell["vertices"]]
    assert min(xs) < 0 < max(xs) and min(ys) < 0 < max(ys)


def test_invalid_alpha_names_requirement():
    with pytest.raises(zerocell.ZerocellError, match="alpha > -1"):
        zerocell.validate_config(
            {
                "kind": "erosionLimit",
                "K": {"type": "ball", "center": [0, 0], "radius": 1},
                "density": {"kind": "radialPowerBall", "alpha": -1},
                "L": DISK_L,
                "eps": [0.1],
            }
        )


def test_run_config_rows_and_csv():
    cfg = {"kind": "d1Exact", "n": [50], "trials": 500, "rho": [1]}
    results = zerocell.run_config(cfg, seed=4)
    assert results[0]["kind"] == "d1Exact"
    rows = results[0]["rows"]
    assert {r["experiment"].split("/")[1] for r in rows} >= {"interval_formula", "inclusion_rho1"}
    csv = zerocell.run_config_csv(cfg, seed=4)
    assert csv.splitlines()[0] == zerocell.CSV_HEADER
    assert len(csv.splitlines()) == len(rows) + 1
    assert csv == zerocell.run_config_csv(cfg, seed=4, workers=2)
