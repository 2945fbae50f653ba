"""End-to-end checks of the command line interface."""

import os
import subprocess

import pytest

import lrdband as lb

CLI = os.environ.get("LRDBAND_CLI")

pytestmark = pytest.mark.skipif(CLI is None, reason="LRDBAND_CLI not set")


def run(*args):
    return subprocess.run([CLI, *args], capture_output=True, text=True)


def test_generate_roundtrip_bit_exact(tmp_path):
    out = tmp_path / "series.csv"
    result = run("generate", "--hurst", "0.9", "--length", "200", "--seed", "7",
                 "--out", str(out))
    assert result.returncode == 0, result.stderr
    lines = out.read_text().splitlines()
    assert lines[0] == "index,value,driver"
    assert len(lines) == 201

    back = lb.read_series_csv(str(out))
    direct = lb.generate_fgn(0.9, 200, 7)
    assert back.values == direct.values
    assert back.driver == direct.driver


def test_generate_is_reproducible_byte_for_byte(tmp_path):
    a, b = tmp_path / "a.csv", tmp_path / "b.csv"
    for path in (a, b):
        assert run("generate", "--hurst", "0.7", "--length", "64", "--seed", "123",
                   "--out", str(path)).returncode == 0
    assert a.read_bytes() == b.read_bytes()


def test_band_grid_rows(tmp_path):
    series = tmp_path / "s.csv"
    band = tmp_path / "band.csv"
    assert run("generate", "--hurst", "0.9", "--length", "200", "--seed", "7",
               "--out", str(series)).returncode == 0
    result = run("band", "--input", str(series), "--method", "hoa", "--alpha", "0.05",
                 "--grid", "-3:3:0.1", "--hurst", "0.9", "--out", str(band))
    assert result.returncode == 0, result.stderr
    lines = band.read_text().splitlines()
    assert lines[0] == "x,lower,upper,center,method,level"
    assert len(lines) == 62  # 61 grid points


def test_quantile_ci_and_estimators(tmp_path):
    series = tmp_path / "s.csv"
    assert run("generate", "--hurst", "0.8", "--length", "512", "--seed", "3",
               "--out", str(series)).returncode == 0

    ci = tmp_path / "ci.csv"
    result = run("quantile-ci", "--input", str(series), "--method", "asymptotic",
                 "--alpha", "0.05", "--p", "0.5", "--hurst", "0.8", "--out", str(ci))
    assert result.returncode == 0, result.stderr
    rows = ci.read_text().splitlines()
    assert len(rows) == 2

    hurst = run("hurst", "--input", str(series))
    assert hurst.returncode == 0
    value = float(hurst.stdout.splitlines()[1])
    assert 0.4 < value < 0.99

    lrv = run("lrv", "--input", str(series))
    assert lrv.returncode == 0
    assert lrv.stdout.splitlines()[0] == "sigma2,bandwidth,truncated"


def test_coverage_report_cells(tmp_path):
    report = tmp_path / "report.csv"
    result = run("coverage", "--hurst-grid", "0.6:0.8:0.1", "--length", "64",
                 "--reps", "20", "--alpha", "0.05", "--p", "0.5",
                 "--hurst-mode", "known", "--seed", "1", "--out", str(report))
    assert result.returncode == 0, result.stderr
    lines = report.read_text().splitlines()
    assert lines[0] == "hurst,N,method,hurst_mode,point,coverage,mean_width,reps_failed"
    assert len(lines) == 1 + 3 * 2  # 3 hurst cells x 2 methods


def test_histogram_rows(tmp_path):
    hist = tmp_path / "hist.csv"
    result = run("histogram", "--hurst", "0.6", "--length", "100", "--reps", "50",
                 "--x", "0", "--seed", "9", "--out", str(hist))
    assert result.returncode == 0, result.stderr
    lines = hist.read_text().splitlines()
    assert lines[0] == "rep,value"
    assert len(lines) == 51


def test_usage_errors_exit_1(tmp_path):
    assert run("generate", "--hurst", "0.9").returncode == 1  # missing required flags
    assert run("nonsense").returncode == 1
    series = tmp_path / "s.csv"
    assert run("generate", "--hurst", "0.6", "--length", "64", "--seed", "2",
               "--out", str(series)).returncode == 0
    # both --hurst and --estimate-hurst missing
    assert run("band", "--input", str(series), "--grid", "0:1:0.5",
               "--out", str(tmp_path / "b.csv")).returncode == 1


def test_numeric_errors_exit_2(tmp_path):
    series = tmp_path / "flat.csv"
    ts = lb.TimeSeries()
    ts.values = [1.0] * 64
    lb.write_series_csv(str(series), ts)
    result = run("hurst", "--input", str(series))
    assert result.returncode == 2
    assert "rs_hurst" in result.stderr
