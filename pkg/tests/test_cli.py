import json

import pytest

from qval import valuations
from qval.approximation import dump_problem, ApproxTarget
from qval.cli import main
from qval.quadratic import QuadElem
from qval.valuations import hensel_sqrt
from fractions import Fraction


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_eval_table(capsys):
    code, out, _ = run(capsys, "eval", "--qv", "min[vp:2|vp:3]", "6")
    assert code == 0
    assert out.strip() == "w(6) = 1"


def test_eval_json(capsys):
    code, out, _ = run(capsys, "--format", "json", "eval", "--qv", "nadic:12", "144/5")
    assert code == 0
    payload = json.loads(out)
    assert payload == {"qv": "nadic:12", "element": "144/5", "value": "2"}


def test_eval_quadratic(capsys):
    code, out, _ = run(capsys, "eval", "--qv", "ram:2,d=2", "sqrt(2)")
    assert code == 0
    assert "1/2" in out


def test_ball_membership_table(capsys):
    code, out, _ = run(
        capsys, "ball", "--qv", "vp:2", "--center", "0", "--bound", "1",
        "2", "4", "1/2",
    )
    assert code == 0
    assert "out" in out and "in" in out
    code, out, _ = run(
        capsys, "--format", "json", "ball", "--qv", "vp:2", "--center", "0",
        "--bound", "1", "--closed", "2",
    )
    payload = json.loads(out)
    assert payload["members"][0]["member"] is True


def test_axioms_pass_exit_zero(capsys):
    code, out, _ = run(capsys, "axioms", "--qv", "min[vp:2|vp:3]",
                       "--samples", "60", "--seed", "3")
    assert code == 0
    assert "pass" in out


def test_axioms_json_report_shape(capsys):
    code, out, _ = run(capsys, "--format", "json", "axioms", "--qv", "nadic:6",
                       "--samples", "40", "--seed", "1")
    assert code == 0
    payload = json.loads(out)
    assert set(payload) == {"lemma", "instances", "failures", "seed"}
    assert payload["seed"] == 1
    assert payload["failures"] == []


def test_separate_command(capsys):
    code, out, _ = run(capsys, "separate", "--qv", "vp:2", "0", "4",
                       "--samples", "30")
    assert code == 0
    assert "m = 2" in out


def test_lemma_command(capsys):
    code, out, _ = run(capsys, "--format", "json", "lemma", "--id", "2.15",
                       "--instances", "4", "--samples", "20", "--seed", "11")
    assert code == 0
    payload = json.loads(out)
    assert payload["lemma"] == "2.15"
    assert payload["failures"] == []


def test_approx_command(capsys, tmp_path):
    problem = dump_problem(2, [
        ApproxTarget(3, QuadElem(Fraction(1), Fraction(1), 2), Fraction(1)),
        ApproxTarget(5, QuadElem(Fraction(1, 2), Fraction(0), 2), Fraction(2)),
    ])
    path = tmp_path / "problem.json"
    path.write_text(json.dumps(problem))
    code, out, _ = run(capsys, "approx", "--problem", str(path))
    assert code == 0
    payload = json.loads(out)
    for cert in payload["certificates"]:
        achieved, required = Fraction(cert["achieved"]), Fraction(cert["required"])
        assert achieved >= required


def test_usage_errors_exit_two(capsys):
    assert run(capsys, "eval", "--qv", "vp:4", "6")[0] == 2
    assert run(capsys, "eval", "--qv", "bogus:1", "6")[0] == 2
    assert run(capsys, "eval", "--qv", "vp:2", "sqrt(2)+sqrt(3)")[0] == 2
    assert run(capsys, "eval", "--qv", "vp:2", "sqrt(2)")[0] == 2  # wrong field
    assert run(capsys, "approx", "--problem", "/nonexistent.json")[0] == 2
    assert run(capsys, "ball", "--qv", "vp:2", "--center", "0",
               "--bound", "x", "1")[0] == 2
    with pytest.raises(SystemExit) as info:
        main(["lemma", "--id", "9.99"])
    assert info.value.code == 2


def test_precision_cap_failure_exits_one(capsys):
    deep = hensel_sqrt(7, 2, 12, 1)
    code, _, err = run(capsys, "--precision-cap", "8", "eval",
                       "--qv", "split1:7,d=2", f"{deep} - 1*sqrt(2)")
    assert code == 1
    assert "precision" in err
    valuations.set_precision_cap(valuations.DEFAULT_PRECISION_CAP)


def test_precision_cap_env(capsys, monkeypatch):
    monkeypatch.setenv("QVAL_PRECISION_CAP", "512")
    code, _, _ = run(capsys, "eval", "--qv", "vp:2", "6")
    assert code == 0
    assert valuations.get_precision_cap() == 512
    monkeypatch.setenv("QVAL_PRECISION_CAP", "not-a-number")
    assert run(capsys, "eval", "--qv", "vp:2", "6")[0] == 2
    valuations.set_precision_cap(valuations.DEFAULT_PRECISION_CAP)


def test_flag_overrides_env(capsys, monkeypatch):
    monkeypatch.setenv("QVAL_PRECISION_CAP", "512")
    code, _, _ = run(capsys, "--precision-cap", "1024", "eval", "--qv", "vp:2", "6")
    assert code == 0
    assert valuations.get_precision_cap() == 1024
    valuations.set_precision_cap(valuations.DEFAULT_PRECISION_CAP)


def test_reproducible_with_seed(capsys):
    first = run(capsys, "--format", "json", "lemma", "--id", "2.10",
                "--instances", "3", "--samples", "15", "--seed", "42")
    second = run(capsys, "--format", "json", "lemma", "--id", "2.10",
                 "--instances", "3", "--samples", "15", "--seed", "42")
    assert first == second
