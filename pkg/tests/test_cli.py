import json
import subprocess
import sys
from fractions import Fraction

import pytest

from qpehr import characters as ch
from qpehr.cli import main
from qpehr.linear import from_json
from qpehr.poly import X, Polynomial
from qpehr.qposet import parse_qp
from qpehr.words import PackedWord


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out.rstrip("\n"), err


@pytest.mark.parametrize("argv,expected", [
    (["ehr", "2: 1<2"], "1/2*X + 1/2*X^2"),
    (["ehr-str", "2: 1<2"], "-1/2*X + 1/2*X^2"),
    (["ehr", "2: 1<2", "--eval", "3"], "6"),
    (["ehr", "2: 1<2", "--classical"], "1 + 3/2*X + 1/2*X^2"),
    (["char", "lambda", "3: 1<2 1<3"], "1/3"),
    (["char", "alpha", "3: 1<2 2<3"], "1/3"),
    (["char", "lambda", "2: 1<2", "--inverse"], "-1/2"),
    (["char", "alpha", "3: 1<2 2<3", "--inverse"], "1/6"),
    (["wqsym", "ehr", "2: 1<2"], "(11) + (12)"),
    (["wqsym", "ehr-str", "3: 1<2 1<3"], "(122) + (123) + (132)"),
    (["wqsym", "phi", "-1", "(12)"], "(11) + (12)"),
    (["wqsym", "product", "(1)", "(1)"], "(11) + (12) + (21)"),
    (["wqsym", "coproduct", "(12)"], "1 ⊗ (12) + (1) ⊗ (1) + (12) ⊗ 1"),
    (["coproduct", "Delta", "2: 1<2"], "1 ⊗ [2: 1<2] + [1:] ⊗ [1:] + [2: 1<2] ⊗ 1"),
    (["coproduct", "delta", "2:"], "[2:] ⊗ [2:]"),
    (["theta", "2: 1<2"], "[2: 1<2] + [2: 1~2]"),
    (["antipode", "2: 1<2"], "[2:] - [2: 1<2]"),
    (["bernoulli", "2"], "1/6"),
    (["faulhaber", "1"], "-1/2*X + 1/2*X^2"),
])
def test_text_output(capsys, argv, expected):
    code, out, _ = run(capsys, *argv)
    assert code == 0
    assert out == expected


def test_enumerate(capsys):
    code, out, _ = run(capsys, "enumerate", "qp", "2")
    lines = out.splitlines()
    assert code == 0 and lines[0] == "# 4" and len(lines) == 5
    assert {parse_qp(x) for x in lines[1:]} == {parse_qp(t) for t in
                                               ("2:", "2: 1<2", "2: 2<1", "2: 1~2")}
    code, out, _ = run(capsys, "--format", "json", "enumerate", "p", "4", "--iso")
    assert json.loads(out)["count"] == 16


def test_json_round_trips(capsys):
    _, out, _ = run(capsys, "--format", "json", "ehr", "3: 1<2 1<3")
    assert Polynomial.from_json(json.loads(out)) == X * (X + 1) * (2 * X + 1) / 6
    _, out, _ = run(capsys, "coproduct", "Delta", "3: 1<2 1<3", "--format", "json")
    data = from_json(json.loads(out), parse_qp)
    assert data[(parse_qp("2: 1<2"), parse_qp("1:"))] == 2
    _, out, _ = run(capsys, "--format", "json", "wqsym", "coproduct", "(212)")
    data = from_json(json.loads(out), PackedWord)
    assert data[(PackedWord((1,)), PackedWord((1, 1)))] == 1
    _, out, _ = run(capsys, "--format", "json", "char", "alpha-str", "2: 1<2")
    assert Fraction(json.loads(out)["value"]) == Fraction(-1, 2)


def test_output_is_deterministic(capsys):
    first = run(capsys, "coproduct", "delta", "3: 1<2 2<3")
    second = run(capsys, "coproduct", "delta", "3: 1<2 2<3")
    assert first == second


@pytest.mark.parametrize("argv", [
    [],
    ["ehr"],
    ["ehr", "2: 1<3"],
    ["ehr", "nonsense"],
    ["char", "gamma", "2:"],
    ["wqsym", "product", "(13)", "(1)"],
    ["verify", "nope"],
    ["enumerate", "qp", "12"],
])
def test_usage_errors_exit_2(capsys, argv):
    code, out, err = run(capsys, *argv)
    assert code == 2
    assert out == "" and err


def test_verify_exit_codes(capsys, monkeypatch):
    code, out, _ = run(capsys, "verify", "hopf", "--max-n", "2")
    assert code == 0 and out.endswith("all checks passed")
    code, out, _ = run(capsys, "--format", "json", "verify", "wqsym", "--max-n", "1")
    assert code == 0 and json.loads(out)["ok"] is True

    from qpehr import verify
    from qpehr.verify import CheckResult, SuiteReport

    def failing(name, max_n):
        rep = SuiteReport("fake")
        rep.results.append(CheckResult("broken", 1, "case 0"))
        return [rep]
    monkeypatch.setattr("qpehr.cli.run_suite", failing)
    code, out, _ = run(capsys, "verify", "hopf")
    assert code == 1 and "FAIL" in out
    assert verify.SUITES


def test_cache_option(tmp_path, capsys, monkeypatch):
    monkeypatch.setattr(ch.ALPHA_STR, "_memo", {})
    path = tmp_path / "cache.tsv"
    code, _, _ = run(capsys, "--cache", str(path), "char", "alpha-str", "5: 1<2 2<3 3<4 4<5 1<5")
    assert code == 0
    lines = path.read_text().splitlines()
    assert lines[0] == "qpehr-cache\tv1"
    assert any(line.startswith("alpha-str\t") for line in lines[1:])


def test_corrupt_cache_warns_and_is_replaced(tmp_path, capsys, monkeypatch):
    # start from an empty in-process memo so the file is actually consulted
    monkeypatch.setattr(ch.LAMBDA, "_memo", {})
    path = tmp_path / "cache.tsv"
    path.write_text("not a cache\n")
    with pytest.warns(UserWarning):
        code, out, _ = run(capsys, "char", "lambda", "2: 1<2", "--cache", str(path))
    assert code == 0 and out == "1/2"
    assert path.read_text().startswith("qpehr-cache\tv1\n")


def test_environment_cache(tmp_path, monkeypatch):
    path = tmp_path / "env.tsv"
    monkeypatch.setenv("QPEHR_CACHE", str(path))
    proc = subprocess.run([sys.executable, "-m", "qpehr", "char", "alpha", "3: 1<2 2<3"],
                          capture_output=True, text=True, check=False)
    assert proc.returncode == 0 and proc.stdout.strip() == "1/3"
    assert path.exists()
