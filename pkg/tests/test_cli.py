import csv
import json

import pytest

from triuniv.cli import run


def out(capsys, argv):
    code = run(argv)
    return code, capsys.readouterr().out


@pytest.mark.parametrize("argv, expected", [
    (["truant", "1,1,7,14", "--even"], "40"),
    (["truant", "1,1,6,9"], "5"),
    (["truant", "1,1,1", "--bound", "1000"], "none up to 1000"),
    (["represent", "1,1,1", "12345"], "true"),
    (["represent", "1,2", "4"], "false"),
])
def test_simple_commands(capsys, argv, expected):
    code, text = out(capsys, argv)
    assert code == 0 and text.strip() == expected


def test_usage_errors(capsys):
    assert run(["represent", "1,0", "3"]) == 2
    with pytest.raises(SystemExit) as exc:
        run(["no-such-command"])
    assert exc.value.code == 2
    with pytest.raises(SystemExit) as exc:
        run(["verify-criterion", "E9"])
    assert exc.value.code == 2


def test_budget_error_exit(capsys):
    assert run(["truant", "1", "--bound", str(2**40)]) == 2


def test_table1_command(capsys, tmp_path):
    path = tmp_path / "t1.csv"
    code, text = out(capsys, ["table1", "--bound", "10000", "--csv", str(path)])
    assert code == 0
    rows = [line for line in text.splitlines() if "\t" in line]
    assert len(rows) == 75
    assert "table matches the catalog" in text
    assert len(list(csv.reader(open(path)))) == 76


def test_escalate_json(capsys, tmp_path):
    path = tmp_path / "tree.json"
    code, text = out(capsys, ["escalate", "--max-arity", "4", "--bound", "10000", "--json", str(path)])
    assert code == 0
    assert "arity 3: candidates=27 certified=15" in text
    doc = json.loads(path.read_text())
    assert set(doc) == {"command", "params", "results", "verdict"}
    assert doc["command"] == "escalate" and doc["params"]["max_arity"] == 4
    assert doc["results"]["children"][1]["sum"] == "2"


def test_verify_commands(capsys):
    assert run(["verify-liouville", "--bound", "10000"]) == 0
    assert run(["verify-reduction", "--bound", "100"]) == 0
    code, text = out(capsys, ["verify-criterion", "BK8", "--bound", "10000", "--random", "50",
                              "--seed", "11"])
    assert code == 0 and "seed=11" in text and "verdict: consistent" in text


def test_output_is_deterministic(capsys):
    argv = ["verify-criterion", "E8", "--bound", "10000", "--random", "40", "--seed", "5"]
    _, first = out(capsys, argv)
    _, second = out(capsys, argv)
    assert first == second


def test_cache_dir_from_environment(tmp_path):
    import os
    import subprocess
    import sys

    env = dict(os.environ, TRIUNIV_CACHE_DIR=str(tmp_path))
    proc = subprocess.run([sys.executable, "-m", "triuniv", "truant", "1,1,7", "--even", "--bound", "1000"],
                          env=env, capture_output=True, text=True, check=True)
    assert proc.stdout.strip() == "26"
    cached = tmp_path / "1_1_7.triuniv"
    assert cached.read_text().splitlines()[:2] == ["TRIUNIV1", "sum=1,1,7 N=1000"]
