from __future__ import annotations

import json
import re

from twistorcheck import cli


def run_cli(capsys, *argv):
    code = cli.main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_exact_suite_exits_zero(capsys):
    code, out, _ = run_cli(capsys, "cp3", "--backend", "exact")
    assert code == 0
    assert "summary: pass=" in out


def test_invalid_trials_is_a_usage_error(capsys):
    code, _, err = run_cli(capsys, "cp3", "--trials", "0")
    assert code == 2
    assert "trials" in err


def test_invalid_tolerance_is_a_usage_error(capsys):
    code, _, err = run_cli(capsys, "cp3", "--tolerance", "-1")
    assert code == 2
    assert "tolerance" in err


def test_unknown_suite_is_a_usage_error(capsys):
    code, _, _ = run_cli(capsys, "nonsense")
    assert code == 2


def test_json_schema_shape(capsys):
    code, out, _ = run_cli(capsys, "prop1", "--backend", "exact",
                           "--format", "json")
    assert code == 0
    payload = json.loads(out)
    assert payload["schema"] == 1
    assert payload["suite"] == "prop1"
    assert set(payload["summary"]) == {"pass", "fail"}
    assert payload["summary"]["fail"] == 0
    assert payload["summary"]["pass"] == len(payload["checks"])
    for check in payload["checks"]:
        assert {"id", "claim", "backend", "status", "elapsed_ms"} <= set(check)
        assert check["status"] == "PASS"


def test_gray_residual_report_row(capsys):
    code, out, _ = run_cli(capsys, "f12", "--backend", "exact",
                           "--format", "json")
    assert code == 0
    rows = {c["id"]: c for c in json.loads(out)["checks"]}
    assert rows["f12.gray-residual"]["residual"] == "-4*delta^2*h^4*v^4"


def _strip_elapsed(text: str) -> str:
    return re.sub(r'"elapsed_ms": [0-9.]+', '"elapsed_ms": 0', text)


def test_json_output_is_deterministic_for_a_seed(capsys):
    args = ("f12", "--backend", "float", "--trials", "100", "--seed", "42",
            "--format", "json")
    code1, out1, _ = run_cli(capsys, *args)
    code2, out2, _ = run_cli(capsys, *args)
    assert code1 == code2 == 0
    assert _strip_elapsed(out1) == _strip_elapsed(out2)


def test_seed_env_var_is_the_default(capsys, monkeypatch):
    monkeypatch.setenv(cli.SEED_ENV_VAR, "17")
    _, out_env, _ = run_cli(capsys, "f12", "--backend", "float",
                            "--trials", "50", "--format", "json")
    monkeypatch.delenv(cli.SEED_ENV_VAR)
    _, out_flag, _ = run_cli(capsys, "f12", "--backend", "float",
                             "--trials", "50", "--seed", "17",
                             "--format", "json")
    assert _strip_elapsed(out_env) == _strip_elapsed(out_flag)


def test_bad_env_seed_is_a_usage_error(capsys, monkeypatch):
    monkeypatch.setenv(cli.SEED_ENV_VAR, "not-a-number")
    code, _, err = run_cli(capsys, "cp3", "--backend", "exact")
    assert code == 2
    assert cli.SEED_ENV_VAR in err


def test_failing_check_exits_one(capsys, monkeypatch):
    from twistorcheck import checks
    from twistorcheck.checks.common import CheckFailure

    def always_fails(cfg, backend):
        raise CheckFailure("engineered failure", residual=1)

    broken = (("cp3", "cp3.engineered", ("exact",), "control row", always_fails),)
    monkeypatch.setattr(checks, "_REGISTRY", checks._REGISTRY + broken)
    code, out, _ = run_cli(capsys, "cp3", "--backend", "exact")
    assert code == 1
    assert "FAIL cp3.engineered" in out
