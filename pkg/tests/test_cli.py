"""Command-line interface: exit codes, report shape, determinism."""

import io
import json

import pytest

from dkpfields.cli import main


def run_cli(argv):
    import contextlib

    out = io.StringIO()
    with contextlib.redirect_stdout(out):
        code = main(argv)
    return code, out.getvalue()


def test_dims_table():
    code, out = run_cli(["dims", "--n", "3"])
    assert code == 0
    assert "dim Z_(0) (4)" in out
    assert "dim Z_(1) (12)" in out
    assert "dim Z_(2) (12)" in out
    assert "dim Z_(3) (4)" in out


def test_dims_json():
    code, out = run_cli(["dims", "--n", "2", "--format", "json"])
    assert code == 0
    doc = json.loads(out)
    assert doc["pass"] is True
    assert [r["detail"] for r in doc["results"]] == ["3", "6", "3"]


def test_verify_small_all_suites():
    code, out = run_cli(["verify", "--n", "2", "--suite", "all", "--seed", "42"])
    assert code == 0
    assert "RESULT: PASS" in out
    assert "FAIL" not in out.replace("RESULT: PASS", "")


def test_verify_single_suite():
    for suite in ("core", "dkp", "subspaces", "bracket"):
        code, out = run_cli(["verify", "--n", "2", "--suite", suite, "--seed", "1"])
        assert code == 0, (suite, out)


def test_verify_reports_are_byte_stable():
    args = ["verify", "--n", "2", "--suite", "core", "--seed", "7", "--format", "json"]
    code1, out1 = run_cli(args)
    code2, out2 = run_cli(args)
    assert code1 == code2 == 0
    assert out1 == out2


def test_verify_seed_recorded():
    code, out = run_cli(
        ["verify", "--n", "2", "--suite", "subspaces", "--seed", "99", "--format", "json"]
    )
    doc = json.loads(out)
    assert doc["params"]["seed"] == 99
    assert doc["checks_run"] > 0 and doc["checks_failed"] == 0


def test_verify_with_metric_and_frame():
    code, out = run_cli(
        ["verify", "--n", "2", "--suite", "dkp", "--seed", "3",
         "--metric", "2,1;1,1", "--lambda", "1,1;0,1"]
    )
    assert code == 0


def test_derive_dwh_rank0():
    code, out = run_cli(
        ["derive-dwh", "--n", "2", "--p", "0", "--H", "1/2*(pi[1]^2+pi[2]^2)+y[]^2"]
    )
    assert code == 0
    assert "1 * d[1]p[1][] + 1 * d[2]p[2][] = -2 * y[]" in out
    assert "1 * d[1]y[] = 1 * p[1][]" in out
    assert "1 * d[2]y[] = 1 * p[2][]" in out


def test_derive_dwh_frame_invariant_output():
    base = ["derive-dwh", "--n", "2", "--p", "1", "--H",
            "y[1]*p[1][1] + 1/2*p[2][2]^2", "--format", "json"]
    _, out1 = run_cli(base + ["--lambda", "identity"])
    _, out2 = run_cli(base + ["--lambda", "1,1;0,1"])
    d1, d2 = json.loads(out1), json.loads(out2)
    assert d1["results"] == d2["results"]


def test_bracket_command():
    code, out = run_cli(
        ["bracket", "--n", "2", "--p", "1", "--mu", "1", "--G", "y[1]", "--F", "p[1][1]"]
    )
    assert code == 0
    doc_lines = [line for line in out.splitlines() if "bracket" in line]
    assert any("(1)" in line for line in doc_lines)


def test_bracket_command_nontrivial():
    code, out = run_cli(
        ["bracket", "--n", "2", "--p", "0", "--mu", "2", "--format", "json",
         "--G", "y[]^2", "--F", "p[2][]", "--lambda", "2,1;1,1"]
    )
    assert code == 0
    doc = json.loads(out)
    assert doc["results"][0]["detail"] == "2 * y[]"


def test_oracle_check():
    code, out = run_cli(["oracle-check", "--n", "2", "--seed", "5", "--pairs", "20"])
    assert code == 0
    assert "RESULT: PASS" in out


def test_usage_errors_exit_2():
    code, _ = run_cli(["verify", "--n", "2", "--metric", "1,1;1,1"])  # singular
    assert code == 2
    code, _ = run_cli(["derive-dwh", "--n", "2", "--p", "0", "--H", "y[  "])
    assert code == 2
    code, _ = run_cli(["derive-dwh", "--n", "2", "--p", "0", "--H", "y[1]"])
    assert code == 2  # rank mismatch
    code, _ = run_cli(["bracket", "--n", "2", "--p", "0", "--G", "y[]"])  # missing --F
    assert code == 2
    code, _ = run_cli(["verify", "--n", "2", "--lambda", "1,2"])  # not square
    assert code == 2


def test_bad_flags_exit_2():
    with pytest.raises(SystemExit) as exc:
        main(["verify"])  # missing --n
    assert exc.value.code == 2
    with pytest.raises(SystemExit) as exc:
        main(["verify", "--n", "0"])
    assert exc.value.code == 2
    with pytest.raises(SystemExit) as exc:
        main(["verify", "--n", "2", "--p", "5"])
    assert exc.value.code == 2
