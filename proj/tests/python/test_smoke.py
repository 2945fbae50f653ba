"""Smoke tests for the python extension module."""

import math

import pytest

import lrdband as lb


def test_generation_is_deterministic():
    a = lb.generate_fgn(0.7, 128, 42)
    b = lb.generate_fgn(0.7, 128, 42)
    assert a.values == b.values
    assert a.driver == a.values
    assert len(a) == 128
    assert lb.generate_fgn(0.7, 128, 43).values != a.values


def test_autocovariance_and_normalizers():
    assert lb.fgn_autocovariance(0.75, 0) == 1.0
    assert lb.fgn_autocovariance(0.75, 1) == pytest.approx(2**1.5 / 2 - 1, rel=1e-12)
    assert lb.exact_dn(0.75, 100) == pytest.approx(100**0.75, rel=1e-12)
    assert lb.asymptotic_dn(0.75, 100) == pytest.approx(math.sqrt(0.375) * 100**0.75, rel=1e-12)
    with pytest.raises(ValueError):
        lb.asymptotic_dn(0.5, 100)


def test_hermite_routes_agree():
    t = lb.Transform.identity()
    for order in range(1, 5):
        for x in (-1.5, 0.0, 0.8):
            closed = lb.hermite_coeff_closed(t, order, x)
            quad = lb.hermite_coeff_quadrature(t, order, x)
            assert closed == pytest.approx(quad, abs=1e-6)
    assert lb.lower_order_count(0.95) == 10


def test_empirical_functions():
    s = lb.TimeSeries()
    s.values = [3.0, 1.0, 2.0]
    assert lb.empirical_cdf(s, 2.0) == pytest.approx(2 / 3)
    assert lb.empirical_quantile(s, 0.5) == 2.0
    assert lb.sequential_empirical_process(s, lambda x: 0.5, 0.0, 1.0) == 0.0


def test_band_constructors():
    series = lb.generate_fgn(0.8, 200, 7)
    grid = [-1.0, 0.0, 1.0]
    asym = lb.asymptotic_band(series, 0.8, 0.05, grid)
    assert all(lo <= hi for lo, hi in zip(asym.lower, asym.upper))

    model = lb.LrdModel.gaussian(0.8)
    sigma = lb.estimate_band_sigma(series, model, grid, lb.default_bandwidth(200))
    hoa = lb.hoa_band(series, model, 0.05, grid, sigma)
    assert all(0.0 <= lo <= hi <= 1.0 for lo, hi in zip(hoa.lower, hoa.upper))
    assert hoa.method == lb.Method.hoa

    ci = lb.asymptotic_quantile_ci(series, 0.8, 0.05, 0.5)
    assert ci.lower[0] <= ci.center[0] <= ci.upper[0]


def test_coverage_runs_and_is_thread_stable():
    cfg = lb.ExperimentConfig()
    cfg.hurst_grid = [0.7]
    cfg.lengths = [100]
    cfg.reps = 40
    cfg.target = lb.TargetKind.quantile
    cfg.p = 0.5
    cfg.base_seed = 11

    cfg.threads = 1
    first = lb.run_coverage_experiment(cfg)
    cfg.threads = 2
    second = lb.run_coverage_experiment(cfg)

    assert len(first.cells) == 2
    for a, b in zip(first.cells, second.cells):
        assert (a.coverage, a.mean_width, a.reps_failed) == (b.coverage, b.mean_width, b.reps_failed)
        assert 0.0 <= a.coverage <= 1.0


def test_rs_hurst_sanity():
    series = lb.generate_fgn(0.9, 4096, 3)
    estimate = lb.rs_hurst(series.values)
    assert 0.5 < estimate < 0.99
