import json
import subprocess
import sys

import pytest

from qhopf.cli import ORDERED, main, run_suite
from qhopf.errors import ConfigError, UnknownSuite

KEYS = {"suite", "model", "order", "degree", "mu", "checks"}
CHECK_KEYS = {"name", "anchor", "status", "residual", "ms"}


def cli(*args):
    return subprocess.run([sys.executable, "-m", "qhopf", *args], capture_output=True, text=True)


def test_r_poincare_passes():
    report, code = run_suite("r-poincare", order=4)
    assert code == 0
    assert report.passed
    assert report.model == "R-poincare"
    assert report.degree is None


def test_unknown_suite():
    with pytest.raises(UnknownSuite):
        run_suite("nope")
    assert main(["--suite", "nope"]) == 2


@pytest.mark.parametrize("args", [["--order", "0"], ["--degree", "-1"], ["--mu", "2"]])
def test_bad_config(args):
    with pytest.raises(ConfigError):
        run_suite("weyl", **{"order": 0} if args[0] == "--order" else
                  {"degree": -1} if args[0] == "--degree" else {"mu": "2"})
    assert main(["--suite", "weyl", *args]) == 2


def test_exit_codes_from_binary():
    assert cli("--suite", "nope").returncode == 2
    assert cli("--suite", "recurrence", "--order", "2").returncode == 0
    assert cli("--suite", "weyl", "--order", "x").returncode == 2


def test_json_schema():
    out = cli("--suite", "weyl", "--order", "2", "--mu", "-1")
    data = json.loads(out.stdout)
    assert KEYS <= set(data)
    assert data["suite"] == "weyl" and data["order"] == 2 and data["mu"] == "-1"
    assert data["degree"] is None
    for c in data["checks"]:
        assert CHECK_KEYS <= set(c)
        assert c["status"] in ("pass", "fail")
        assert isinstance(c["ms"], int)


def test_residuals_are_rational_strings():
    report, code = run_suite("frt", order=1, degree=2, mu=1)
    for c in report.as_json()["checks"]:
        for mono, coeff in c["residual"]:
            assert isinstance(mono, list)
            assert "/" in coeff


def test_determinism():
    args = ("--suite", "contraction", "--order", "2", "--degree", "2", "--no-timing")
    a, b = cli(*args), cli(*args)
    assert a.returncode == b.returncode == 0
    assert a.stdout == b.stdout


def test_parallel_matches_serial():
    serial, c1 = run_suite("hopf-axioms", order=2, degree=2)
    par, c2 = run_suite("hopf-axioms", order=2, degree=2, parallel=True)
    assert c1 == c2
    assert serial.to_json(timing=False) == par.to_json(timing=False)


def test_text_format():
    out = cli("--suite", "recurrence", "--order", "2", "--format", "text")
    assert out.stdout.strip().splitlines()[-1] == "PASS (verified through order 2)"


def test_frt_report_consistent():
    report, code = run_suite("frt", order=2, degree=3, mu=1)
    verdict = report.extra["verdict"]
    assert verdict in ("w -> w", "w -> -w")
    assert (code == 0) == report.passed
    assert report.model == "funw-g+1"


def test_all_suites_listed():
    assert ORDERED == ["hopf-axioms", "r-poincare", "r-contracted", "weyl", "contraction",
                       "matrep", "frt", "poisson", "recurrence"]
