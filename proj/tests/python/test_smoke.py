import json
import os
import pathlib
import subprocess

import pytest

import taf

CONFIG_66 = '{"r": {"cycle": [6]}, "s": {"cycle": [6]}}'
CONFIG_23 = '{"r": {"cycle": [2]}, "s": {"cycle": [3]}}'


def test_analyze_reports_rank():
    report = taf.report(taf.analyze(CONFIG_66))
    assert report["ok"] is True
    assert report["results"]["d"] == 2
    assert report["results"]["common_primes"] == [2, 3]


def test_out_rank_tuple():
    d, primes = taf.out_rank(CONFIG_66)
    assert (d, primes) == (2, [2, 3])
    assert taf.out_rank(CONFIG_23) == (0, [])


def test_nu_fraction():
    assert taf.nu(CONFIG_23, '{"right": [2]}') == "1/2"


def test_point_alpha():
    report = taf.report(
        taf.point(CONFIG_66, "alpha", '{"right": [3]}', c="1/2")
    )
    assert report["results"]["nu"] == "1/3"
    assert report["results"]["image_nu"] == "1/6"


def test_verify_passes():
    report = taf.report(taf.verify(CONFIG_23, level=2))
    assert report["ok"] is True
    assert len(report["checks"]) == 5
    assert all(check["passed"] for check in report["checks"])


def test_compare_verdicts():
    report = taf.report(taf.compare(CONFIG_66, '{"r": {"cycle": [2, 3]}, "s": {"cycle": [6]}}'))
    assert report["results"]["r_finitely_equivalent"] is True


def test_witness_sweep():
    report = taf.report(taf.witness(CONFIG_23, "2/1", level=2))
    sweep = report["results"]["sweep"]
    assert [entry["depth"] for entry in sweep] == [0, 1, 2]
    assert all(entry["found"] for entry in sweep)


def test_errors_surface():
    with pytest.raises(taf.TafError):
        taf.analyze("not json")


@pytest.fixture(scope="module")
def cli():
    path = os.environ.get("TAF_BIN")
    if not path:
        pytest.skip("TAF_BIN not set")
    return path


@pytest.fixture(scope="module")
def data_dir():
    path = os.environ.get("TAF_DATA")
    if not path:
        pytest.skip("TAF_DATA not set")
    return pathlib.Path(path)


def test_cli_analyze_json(cli, data_dir):
    cmd = [cli, "analyze", "--config", str(data_dir / "config_r2_s3.json"), "--format", "json"]
    first = subprocess.run(cmd, capture_output=True, text=True)
    second = subprocess.run(cmd, capture_output=True, text=True)
    assert first.returncode == 0
    assert first.stdout == second.stdout
    report = json.loads(first.stdout)
    assert report["results"]["d"] == 0


def test_cli_usage_error(cli):
    missing = subprocess.run(
        [cli, "analyze", "--config", "/nonexistent.json"], capture_output=True, text=True
    )
    assert missing.returncode == 2
    no_sub = subprocess.run([cli], capture_output=True, text=True)
    assert no_sub.returncode == 2
