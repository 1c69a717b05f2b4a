import json
import os
import subprocess
import sys
from pathlib import Path

import pydot
import pytest

from shivar.cli import main

GOLDEN = Path(__file__).parent / "golden"


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_enumerate_text(capsys):
    code, out, _ = run(capsys, "enumerate", "--n", "3")
    assert code == 0
    assert out.split() == ["[0,0,0]", "[0,1,0]", "[0,1,1]", "[1,1,0]", "[1,1,1]", "[1,2,1]"]


def test_enumerate_json(capsys):
    code, out, _ = run(capsys, "enumerate", "--n", "4", "--format", "json")
    assert code == 0
    assert len(json.loads(out)["admitted"]) == 24


def test_table_golden(capsys):
    code, out, _ = run(capsys, "act", "--n", "3", "--table")
    assert code == 0
    assert out == (GOLDEN / "table_n3.txt").read_text()


def test_table_json_round_trip(capsys):
    code, out, _ = run(capsys, "act", "--n", "3", "--table", "--format", "json")
    data = json.loads(out)
    assert data["rows"][0]["images"][0] == {"1,3": 1, "1,4": 1, "2,4": 0}


def test_act_single(capsys):
    code, out, _ = run(capsys, "act", "--n", "3", "--perm", "2 1 3 4", "--lambda", "0,0,0")
    assert (code, out.strip()) == (0, "[1,1,0]")


def test_kvec(capsys):
    code, out, _ = run(capsys, "kvec", "--n", "2", "--word", "1")
    assert code == 0
    assert "(1,2):-1 (1,3):0 (2,3):0" in out
    code, out, _ = run(capsys, "kvec", "--n", "2", "--translate", "1 -1 0", "--format", "json")
    assert json.loads(out)["k"] == {"1,2": 2, "1,3": 1, "2,3": -1}


def test_bijection_json(capsys):
    code, out, _ = run(capsys, "bijection", "--n", "3", "--format", "json")
    rows = json.loads(out)
    assert rows[0] == {"cycle": "2 3 4 1", "lambda": {"1,3": 0, "1,4": 0, "2,4": 0}}


def test_poset_dot(capsys, tmp_path):
    dot = tmp_path / "c.dot"
    code, out, _ = run(capsys, "poset", "--n", "3", "--side", "cycle", "--format", "dot", "--dot", str(dot))
    assert code == 0
    assert dot.read_text() == out
    (graph,) = pydot.graph_from_dot_data(out)
    assert len(graph.get_edges()) == 6


def test_verify(capsys):
    code, out, _ = run(capsys, "verify", "--n", "3")
    assert code == 0
    assert "FAIL" not in out


@pytest.mark.parametrize("argv", [
    ["act", "--n", "3", "--perm", "2 1 3 4", "--lambda", "2,0,0"],
    ["act", "--n", "3", "--perm", "2 1 3", "--lambda", "0,0,0"],
    ["act", "--n", "3", "--perm", "1 1 3 4", "--lambda", "0,0,0"],
    ["act", "--n", "3"],
    ["kvec", "--n", "2", "--word", "7"],
    ["kvec", "--n", "2", "--translate", "1 2"],
    ["enumerate", "--n", "0"],
    ["enumerate", "--n", "3", "--format", "dot"],
])
def test_invalid_input_exit_code(capsys, argv):
    code, _, err = run(capsys, *argv)
    assert code == 1
    assert "error" in err


def test_argparse_errors_exit_1():
    with pytest.raises(SystemExit) as exc:
        main(["enumerate"])
    assert exc.value.code == 1


def test_internal_violation_exit_code(capsys, monkeypatch):
    import shivar.cli as cli
    from shivar.shi import RootVector
    monkeypatch.setattr(cli, "diamond_iterated", lambda w, lam: RootVector.zero(3))
    code, _, err = run(capsys, "act", "--n", "3", "--perm", "2 1 3 4", "--lambda", "0,0,0")
    assert code == 2


def test_module_entry_point():
    env = dict(os.environ, SHIVAR_NUMBA="0")
    proc = subprocess.run([sys.executable, "-m", "shivar", "enumerate", "--n", "2"],
                          capture_output=True, text=True, env=env)
    assert proc.returncode == 0
    assert proc.stdout.split() == ["[0]", "[1]"]
