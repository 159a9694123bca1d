"""Command-line interface: exit codes, formats, determinism."""
import csv
import io
import json
import math
import re
import subprocess
import sys

import pytest

import _frozen as fz
from zetakit.cli import build_verify_cases, main


def run_cli(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


# -------------------------------------------------------------------- eval --


def test_eval_zeta_two(capsys):
    code, out, _ = run_cli(capsys, "eval", "zeta", "--s", "2")
    assert code == 0
    value = float(out.splitlines()[0])
    assert value == pytest.approx(math.pi ** 2 / 6.0, rel=1e-12)
    assert "abs_error <=" in out


def test_eval_exact_rational(capsys):
    code, out, _ = run_cli(capsys, "eval", "bernoulli", "--n", "12")
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == "-691/2730"
    assert "exact" in lines[1]


def test_eval_complex_argument(capsys):
    code, out, _ = run_cli(capsys, "eval", "zeta", "--s", "0.5+3i")
    assert code == 0
    cleaned = out.splitlines()[0].replace("i", "j").replace(" ", "")
    assert complex(cleaned) == pytest.approx(fz.ZETA_0_5_3I, abs=1e-12)


def test_eval_expint(capsys):
    code, out, _ = run_cli(
        capsys, "eval", "expint", "--s", "1", "--z", "0+1.5707963267948966i"
    )
    assert code == 0
    cleaned = out.splitlines()[0].replace("i", "j").replace(" ", "")
    assert complex(cleaned) == pytest.approx(fz.E1_I_HALFPI, abs=1e-10)


def test_eval_parse_error_exits_2(capsys):
    code, _, err = run_cli(capsys, "eval", "zeta", "--s", "nonsense")
    assert code == 2
    assert "parse error" in err


def test_eval_missing_flag_exits_2(capsys):
    code, _, err = run_cli(capsys, "eval", "expint", "--s", "1")
    assert code == 2
    assert "--z" in err


def test_eval_unknown_function_exits_2(capsys):
    code, _, err = run_cli(capsys, "eval", "frobnicate", "--s", "1")
    assert code == 2
    assert "unknown function" in err


def test_eval_pole_exits_3(capsys):
    code, _, err = run_cli(capsys, "eval", "zeta", "--s", "1")
    assert code == 3
    assert "evaluation error" in err


def test_eval_domain_error_exits_3(capsys):
    code, _, err = run_cli(capsys, "eval", "zeta-minus", "--s", "3")
    assert code == 3


# ------------------------------------------------------------------ verify --


def test_verify_exact_suite_passes(capsys):
    code, out, _ = run_cli(capsys, "verify", "--suite", "bernoulli-recursion")
    assert code == 0
    assert "11 passed, 0 failed" in out


def test_verify_glob_matches_subtree(capsys):
    code, out, _ = run_cli(capsys, "verify", "--suite", "split-anchor/*")
    assert code == 0
    assert "2 passed" in out


def test_verify_no_match_exits_2(capsys):
    code, _, err = run_cli(capsys, "verify", "--suite", "no-such-suite")
    assert code == 2
    assert "config error" in err


def test_verify_jobs_cap_exits_2(capsys):
    code, _, err = run_cli(
        capsys, "verify", "--suite", "registry/*", "--jobs", "99999"
    )
    assert code == 2


def test_verify_bad_tol_exits_2(capsys):
    code, _, err = run_cli(
        capsys, "verify", "--suite", "zeta-even", "--tol", "-1"
    )
    assert code == 2


def test_verify_forced_failure_exits_1(capsys):
    # the algebraic-kernel case sits on a quadrature floor well above 1e-12
    code, out, _ = run_cli(
        capsys, "verify", "--suite", "registry/circle_algebraic",
        "--tol", "1e-12",
    )
    assert code == 1
    assert "0 passed, 1 failed" in out
    assert "FAIL" in out


def test_verify_json_schema(capsys, monkeypatch):
    monkeypatch.setenv("ZETAKIT_STARTED_AT", "2026-08-15T00:00:00+00:00")
    code, out, _ = run_cli(
        capsys, "verify", "--suite", "euler-recursion", "--format", "json"
    )
    assert code == 0
    payload = json.loads(out[: out.rindex("}") + 1])
    assert payload["schema"] == 1
    assert payload["started_at"] == "2026-08-15T00:00:00+00:00"
    assert payload["summary"] == {"passed": 8, "failed": 0}
    recs = payload["records"]
    assert [r["id"] for r in recs] == sorted(r["id"] for r in recs)
    # exact rational sides serialize as strings
    assert recs[0]["lhs"] == "-1"


def test_verify_json_deterministic_but_for_wall_ms(capsys, monkeypatch):
    monkeypatch.setenv("ZETAKIT_STARTED_AT", "pinned")
    outs = []
    for _ in range(2):
        code, out, _ = run_cli(
            capsys, "verify", "--suite", "zeta-even", "--format", "json"
        )
        assert code == 0
        outs.append(re.sub(r'"wall_ms": [0-9.e+-]+', '"wall_ms": X', out))
    assert outs[0] == outs[1]


def test_verify_csv_format(capsys):
    code, out, _ = run_cli(
        capsys, "verify", "--suite", "gamma-coefficient", "--format", "csv"
    )
    assert code == 0
    body = out[: out.rindex("passed") - len("10 ")].strip()
    rows = list(csv.reader(io.StringIO(body)))
    assert rows[0] == [
        "id", "label", "lhs", "rhs", "abs_diff", "tolerance", "pass", "wall_ms"
    ]
    assert len(rows) == 11
    assert all(r[6] == "true" for r in rows[1:])


def test_verify_out_file(capsys, tmp_path):
    target = tmp_path / "report.json"
    code, out, _ = run_cli(
        capsys, "verify", "--suite", "euler-triangle", "--format", "json",
        "--out", str(target),
    )
    assert code == 0
    assert "20 passed, 0 failed" in out
    payload = json.loads(target.read_text())
    assert payload["summary"]["passed"] == 20


def test_verify_parallel_matches_serial(capsys):
    code1, out1, _ = run_cli(capsys, "verify", "--suite", "si-pair/*")
    code2, out2, _ = run_cli(
        capsys, "verify", "--suite", "si-pair/*", "--jobs", "4"
    )
    assert code1 == code2 == 0
    strip = lambda s: re.sub(r"wall_ms.*", "", s)
    assert strip(out1) == strip(out2)


def test_verify_case_ids_unique_and_sorted():
    cases = build_verify_cases()
    ids = [c.id for c in cases]
    assert ids == sorted(ids)
    assert len(ids) == len(set(ids))
    assert len(ids) > 200


def test_term_cap_env_failure_is_a_failed_record(capsys, monkeypatch):
    monkeypatch.setenv("ZETAKIT_TERM_CAP", "3")
    code, out, _ = run_cli(capsys, "verify", "--suite", "eta-series/s4.0")
    assert code == 1
    assert "0 passed, 1 failed" in out


def test_term_cap_env_not_an_int_exits_2(capsys, monkeypatch):
    monkeypatch.setenv("ZETAKIT_TERM_CAP", "many")
    code, _, err = run_cli(capsys, "verify", "--suite", "zeta-even")
    assert code == 2
    assert "config error" in err


# ------------------------------------------------------------------- table --


def test_table_convergence(capsys):
    code, out, _ = run_cli(
        capsys, "table", "convergence", "--s", "0.5", "--n", "0,2"
    )
    assert code == 0
    rows = list(csv.reader(io.StringIO(out)))
    assert rows[0] == ["depth_n", "terms", "abs_error", "estimate"]
    assert len(rows) == 21
    # errors fall with the term budget within each depth
    errs = [float(r[2]) for r in rows[1:11]]
    assert errs[-1] < errs[0] * 1e-6


def test_table_critical_line(capsys):
    code, out, _ = run_cli(capsys, "table", "critical-line", "--t", "0:4:2")
    assert code == 0
    rows = list(csv.reader(io.StringIO(out)))
    assert rows[0][:3] == ["t", "j1", "j2"]
    assert len(rows) == 4
    assert float(rows[1][5]) == pytest.approx(fz.ZETA_MINUS_HALF, abs=1e-8)


def test_table_asymptotic_truncation(capsys):
    code, out, _ = run_cli(capsys, "table", "asymptotic-truncation", "--t", "4")
    assert code == 0
    rows = list(csv.reader(io.StringIO(out)))
    assert rows[0] == ["K", "partial_sum", "abs_error"]
    errs = [float(r[2]) for r in rows[1:]]
    k_min = errs.index(min(errs))
    assert 0 < k_min < len(errs) - 1


def test_table_unknown_exits_2(capsys):
    code, _, err = run_cli(capsys, "table", "frobnicate")
    assert code == 2


def test_table_bad_range_exits_2(capsys):
    code, _, err = run_cli(capsys, "table", "critical-line", "--t", "5:1:-2")
    assert code == 2


def test_console_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "zetakit.cli", "eval", "harmonic", "--n", "4"],
        capture_output=True,
        text=True,
    )
    assert proc.returncode == 0
    assert proc.stdout.splitlines()[0] == "25/12"
