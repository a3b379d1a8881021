"""Smoke tests for the python bindings."""

import math

import pytest

import uavloc


def test_version():
    assert uavloc.__version__


def test_layout():
    layout = uavloc.build_hex_layout(500.0, 2, 25.0)
    assert layout.site_count() == 19
    assert layout.sites[0].x_m == 0.0
    dists = sorted(math.hypot(s.x_m, s.y_m) for s in layout.sites[1:7])
    assert all(abs(d - 500.0) < 1e-9 for d in dists)
    with pytest.raises(ValueError):
        uavloc.build_hex_layout(500.0, 9, 25.0)


def test_channel_values():
    assert uavloc.los_probability(10.0, 30.0) == 1.0
    assert uavloc.los_probability(500.0, 120.0) == pytest.approx(0.9548474921375038, abs=1e-12)
    assert uavloc.path_loss_los_db(500.0, 2.0) == pytest.approx(93.39794000867204, abs=1e-9)
    assert uavloc.path_loss_nlos_db(500.0, 100.0, 2.0) == pytest.approx(107.3294122380809, abs=1e-9)
    assert uavloc.shadowing_std_db(30.0, True) == pytest.approx(3.8065161185595359, abs=1e-12)
    assert uavloc.shadowing_std_db(30.0, False) == 6.0
    assert uavloc.noise_power_dbm(10e6, 9.0) == pytest.approx(-95.0)


def test_estimate_pb_trivial_and_deterministic():
    cfg = uavloc.SimConfig()
    cfg.tiers = 1
    cfg.h_ut_m = 60.0
    cfg.p = 0.0
    cfg.q = 0.0
    cfg.alpha_db = -300.0
    cfg.n_snapshots = 500
    cfg.seed = 7
    for est in uavloc.estimate_pb(cfg, [1, 4, 7]):
        assert est.pb == 1.0

    cfg.p = cfg.q = 1.0
    cfg.alpha_db = -16.0
    a = uavloc.estimate_pb(cfg, [1, 4], workers=1)
    b = uavloc.estimate_pb(cfg, [1, 4], workers=3)
    assert [e.successes for e in a] == [e.successes for e in b]
    assert a[0].pb >= a[1].pb  # monotone in B


def test_grid_and_wilson():
    cfg = uavloc.SimConfig()
    cfg.tiers = 1
    cfg.n_snapshots = 400
    grid = uavloc.estimate_pb_grid(cfg, [-20.0, -10.0], [2, 4], workers=2)
    assert grid.alphas_db == [-20.0, -10.0]
    assert grid.at[0][0].pb >= grid.at[1][0].pb  # monotone in alpha

    lo, hi = uavloc.wilson_interval(300, 1000)
    assert lo == pytest.approx(0.27240684247700486, abs=1e-12)
    assert hi == pytest.approx(0.32912386091721719, abs=1e-12)


def test_gain_solver():
    cfg = uavloc.SimConfig()
    cfg.tiers = 1
    cfg.h_ut_m = 60.0
    cfg.n_snapshots = 1000
    cfg.seed = 5
    res = uavloc.required_processing_gain(cfg, -6.0, 0.5, 3, workers=2)
    assert res.found
    assert res.gamma_db == pytest.approx(-6.0 - res.alpha_star_db)
    with pytest.raises(ValueError):
        uavloc.required_processing_gain(cfg, -6.0, 1.0, 3)


def test_config_validation():
    cfg = uavloc.SimConfig()
    cfg.p = 1.5
    with pytest.raises(ValueError):
        cfg.validate()
