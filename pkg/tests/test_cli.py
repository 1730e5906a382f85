import json
import subprocess
import sys

import pytest

from tuttepoly import oracles
from tuttepoly.cli import main

K4E = "# K4 minus an edge\nn 4\n0 1\n0 2\n1 2\n1 3\n2 3\n"
K4 = "n 4\n0 1\n0 2\n0 3\n1 2\n1 3\n2 3\n"
TRIANGLE = "n 3\n0 1\n1 2\n0 2\n"


@pytest.fixture
def write(tmp_path):
    def _write(text, name="g.txt"):
        p = tmp_path / name
        p.write_text(text)
        return str(p)

    return _write


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_tutte_text_and_json(capsys, write):
    code, out, _ = run(capsys, "tutte", write(K4E))
    assert code == 0 and out == "x^3 + 2*x^2 + x + 2*x*y + y + y^2\n"
    code, out, _ = run(capsys, "tutte", write(K4E), "--format", "json")
    obj = json.loads(out)
    assert obj["variables"] == ["x", "y"] and [3, 0, "1"] in obj["terms"]


def test_tutte_edgeless(capsys, write):
    assert run(capsys, "tutte", write("n 3\n")) == (0, "1\n", "")


def test_parse_error_exit_2(capsys, write):
    code, out, err = run(capsys, "tutte", write("n 3\na b\n"))
    assert code == 2 and out == "" and "line 2" in err


def test_missing_file_exit_2(capsys, tmp_path):
    code, _, err = run(capsys, "tutte", str(tmp_path / "nope.txt"))
    assert code == 2 and err


@pytest.mark.parametrize(
    "text, x, y, want",
    [(K4E, "1", "1", "8"), (K4, "2", "2", "64"), (TRIANGLE, "-1", "-1", "-1"), (TRIANGLE, "1/2", "3", "15/4")],
)
def test_eval(capsys, write, text, x, y, want):
    assert run(capsys, "eval", write(text), x, y) == (0, want + "\n", "")


def test_eval_rejects_float(capsys, write):
    code, _, err = run(capsys, "eval", write(TRIANGLE), "0.5", "1")
    assert code == 2 and "0.5" in err


def test_special_examples(capsys, write):
    assert run(capsys, "special", write(TRIANGLE), "chromatic")[1] == "l^3 - 3*l^2 + 2*l\n"
    assert run(capsys, "special", write(K4), "beta")[1] == "2\n"
    assert run(capsys, "special", write(TRIANGLE), "flow")[1] == "l - 1\n"
    assert run(capsys, "special", write(TRIANGLE), "reliability")[1] == "-2*p^3 + 3*p^2\n"
    out = run(capsys, "special", write(TRIANGLE), "shelling")[1]
    assert out == "h(x) = x^2 + x + 1\nh*(y) = y + 2\n"
    code, out, _ = run(capsys, "special", write("n 2\n0 1\n"), "badcoloring")
    assert code == 0 and "t" in out and "l" in out


def test_special_sandpile(capsys, write):
    code, out, _ = run(capsys, "special", write(TRIANGLE), "sandpile", "--sink", "0")
    obj = json.loads(out)
    assert code == 0 and obj["sink"] == 0 and obj["c"] == [2, 1] and obj["recurrent_count"] == 3


def test_special_sandpile_needs_sink(capsys, write):
    code, _, err = run(capsys, "special", write(TRIANGLE), "sandpile")
    assert code == 2 and "--sink" in err


def test_budget_refusal_exit_3(capsys, write):
    code, _, err = run(capsys, "special", write(K4), "sandpile", "--sink", "0", "--max-configs", "5")
    assert code == 3 and err.startswith("refused")


def test_verify_file(capsys, write):
    code, out, _ = run(capsys, "verify", write(K4E))
    lines = out.splitlines()
    assert code == 0
    assert lines[-1].endswith("checks passed")
    assert sum(line.startswith("PASS") for line in lines) >= 30
    assert not any(line.startswith("FAIL") for line in lines)


def test_verify_corrupted_oracle(capsys, write, monkeypatch):
    real = oracles.count_spanning_trees
    monkeypatch.setattr(oracles, "count_spanning_trees", lambda g, b=None: real(g, b) + 1)
    code, out, _ = run(capsys, "verify", write(K4E))
    assert code == 1
    assert "FAIL  T(1,1) spanning trees" in out
    assert "counterexample graph:\n  n 4\n" in out


def test_verify_small_catalog(capsys):
    code, out, _ = run(capsys, "verify", "--catalog", "3", "4")
    assert code == 0
    assert "catalog graphs" in out and "FAIL" not in out


def test_verify_needs_one_source(capsys, write):
    assert run(capsys, "verify")[0] == 2
    assert run(capsys, "verify", write(K4E), "--catalog", "2", "2")[0] == 2


def test_output_is_deterministic(write):
    path = write(K4E)
    cmds = [["tutte", path], ["special", path, "sandpile", "--sink", "1"], ["verify", path]]
    for cmd in cmds:
        runs = [
            subprocess.run([sys.executable, "-m", "tuttepoly", *cmd], capture_output=True, check=True).stdout
            for _ in range(2)
        ]
        assert runs[0] == runs[1]
