import json
import os
import subprocess
import sys
from pathlib import Path

import pytest

from catpure import checks

REPO = Path(__file__).resolve().parent.parent


def run_cli(*args, env_extra=None):
    env = dict(os.environ)
    if env_extra:
        env.update(env_extra)
    return subprocess.run([sys.executable, "-m", "catpure.cli", *args],
                          capture_output=True, text=True, env=env)


@pytest.fixture(scope="module")
def capped_file(tmp_path_factory):
    p = tmp_path_factory.mktemp("cats") / "capped.json"
    p.write_text(json.dumps({"kind": "capped", "p": 2, "n": 1}))
    return str(p)


@pytest.fixture(scope="module")
def finvect_file(tmp_path_factory):
    p = tmp_path_factory.mktemp("cats") / "finvect.json"
    p.write_text(json.dumps({"kind": "finvect", "p": 2, "max_dim": 3}))
    return str(p)


def test_verify_paper_single_check_passes():
    res = run_cli("verify-paper", "--only", "vwck-counterexample")
    assert res.returncode == 0, res.stderr
    report = json.loads(res.stdout)
    assert report["overall_pass"] is True
    assert len(report["checks"]) == 1
    assert report["checks"][0]["check_id"] == "vwck-counterexample"


def test_verify_paper_unknown_check_is_usage_error():
    res = run_cli("verify-paper", "--only", "no-such-check")
    assert res.returncode == 2


def test_verify_paper_bad_config_field_is_usage_error(tmp_path):
    cfg = tmp_path / "cfg.json"
    cfg.write_text(json.dumps({"unknown_field": 1}))
    res = run_cli("verify-paper", "--config", str(cfg))
    assert res.returncode == 2
    assert "unknown_field" in res.stderr


def test_verify_paper_deterministic_modulo_wall_time():
    def strip(report):
        for c in report["checks"]:
            c.pop("wall_time")
        return report

    a = run_cli("verify-paper", "--only", "pushout-counterexample")
    b = run_cli("verify-paper", "--only", "pushout-counterexample")
    assert strip(json.loads(a.stdout)) == strip(json.loads(b.stdout))


def test_limits_pushout_none_certificate(capped_file):
    inj = json.dumps({"dom": [], "cod": [2], "mat": [[]]})
    res = run_cli("limits", "--category", capped_file,
                  "--diagram", "pushout", "--morphism", inj,
                  "--morphism", inj)
    assert res.returncode == 0
    data = json.loads(res.stdout)
    assert data["found"] is False
    assert data["certificate"]["kind"] == "exhaustive"


def test_limits_identity_pushout_echoes_apex(finvect_file):
    ident = json.dumps({"dom": [2], "cod": [2], "mat": [[1]]})
    res = run_cli("limits", "--category", finvect_file,
                  "--diagram", "pushout", "--morphism", ident,
                  "--morphism", ident)
    assert res.returncode == 0
    data = json.loads(res.stdout)
    assert data["found"] is True


def test_limits_cokernel_pair_dimension(finvect_file):
    inc = json.dumps({"dom": [2], "cod": [2, 2], "mat": [[1], [0]]})
    res = run_cli("limits", "--category", finvect_file,
                  "--diagram", "cokernel-pair", "--morphism", inc)
    assert res.returncode == 0
    data = json.loads(res.stdout)
    assert data["found"] is True
    assert data["apex"] == [2, 2, 2]


def test_limits_unknown_category_kind_is_usage_error(tmp_path):
    bad = tmp_path / "bad.json"
    bad.write_text(json.dumps({"kind": "nosuch"}))
    res = run_cli("limits", "--category", str(bad), "--diagram", "pushout")
    assert res.returncode == 2


def test_limits_cap_exceeded_exit_code(capped_file):
    inj = json.dumps({"dom": [], "cod": [2], "mat": [[]]})
    res = run_cli("limits", "--category", capped_file,
                  "--diagram", "pushout", "--morphism", inj,
                  "--morphism", inj,
                  env_extra={"CATPURE_DEFAULT_BOUND": "1"})
    assert res.returncode == 3


def test_qe_retract_expect_fail(finvect_file):
    res = run_cli("qe", "--category", finvect_file,
                  "--class", "coker-div:2", "--which", "retract",
                  "--expect", "fail", "--bound", "100000")
    assert res.returncode == 0, res.stderr
    data = json.loads(res.stdout)
    assert data["closed"] is False
    assert data["witness"] is not None


def test_qe_split_epi_passes(tmp_path):
    cat = tmp_path / "finmod.json"
    cat.write_text(json.dumps({"kind": "finmod", "m": 4, "max_size": 4}))
    res = run_cli("qe", "--category", str(cat), "--class", "split-epi",
                  "--which", "epi", "--bound", "2000")
    assert res.returncode == 0


def test_qe_all_class_strong_epi_passes(tmp_path):
    cat = tmp_path / "finmod.json"
    cat.write_text(json.dumps({"kind": "finmod", "m": 4, "max_size": 4}))
    res = run_cli("qe", "--category", str(cat), "--class", "all",
                  "--which", "strong-epi", "--bound", "2000")
    assert res.returncode == 0


def test_usage_error_on_missing_subcommand():
    res = run_cli()
    assert res.returncode == 2


def test_every_anchor_appears_in_documentation_index():
    doc = (REPO / "docs" / "paper-map.md").read_text()
    for check_id, (anchor, _) in checks.CHECKS.items():
        assert anchor in doc, f"anchor of {check_id} missing from docs"
        assert check_id in doc


def test_verify_paper_lists_at_least_14_checks():
    assert len(checks.CHECKS) >= 14
