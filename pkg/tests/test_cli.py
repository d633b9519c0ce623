import json
import os
import subprocess
import sys

import pytest

from demkit.cli import main
from demkit.families import generate
from demkit.io import write_graph


@pytest.fixture
def graph_file(tmp_path):
    def make(spec_or_text, name="g.txt"):
        text = spec_or_text if "\n" in spec_or_text else write_graph(generate(spec_or_text))
        path = tmp_path / name
        path.write_text(text)
        return str(path)
    return make


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_gen_to_stdout_and_file(capsys, tmp_path):
    code, out, _ = run(capsys, "gen", "cycle:4")
    assert code == 0 and out == "4 4\n0 1\n0 3\n1 2\n2 3\n"
    target = tmp_path / "k.txt"
    assert run(capsys, "gen", "kite:3,5", "-o", str(target))[0] == 0
    assert target.read_text().startswith("5 ")


def test_gen_bad_family(capsys):
    code, _, err = run(capsys, "gen", "kite:9,3")
    assert code == 2 and "r <= n - 1" in err


def test_dem_with_basis(capsys, graph_file):
    code, out, _ = run(capsys, "dem", "-i", graph_file("g6_prime"), "--basis")
    doc = json.loads(out)
    assert code == 0 and doc["value"] == 4 and doc["basis"] == [0, 1, 2, 5]


def test_dem_greedy_tsv(capsys, graph_file):
    code, out, _ = run(capsys, "dem", "-i", graph_file("complete:5"), "--greedy", "--format", "tsv")
    assert code == 0 and "value\t4" in out and "method\tgreedy" in out


def test_dem_budget(capsys, graph_file):
    code, _, err = run(capsys, "dem", "-i", graph_file("complete:9"), "--budget", "5")
    assert code == 3 and "9 vertices" in err


def test_bad_graph_file(capsys, graph_file):
    code, _, err = run(capsys, "dem", "-i", graph_file("2 1\n0 0\n"))
    assert code == 2 and "line 2" in err


def test_missing_file(capsys, tmp_path):
    assert run(capsys, "dem", "-i", str(tmp_path / "none.txt"))[0] == 2


def test_usage_error(capsys):
    assert run(capsys, "frobnicate")[0] == 2
    assert run(capsys, "verify", "-i", "x", "-M", "a,b")[0] == 2


def test_em(capsys, graph_file):
    code, out, _ = run(capsys, "em", "-i", graph_file("complete:4"), "-x", "0")
    assert code == 0 and json.loads(out)["edges"] == [[0, 1], [0, 2], [0, 3]]


def test_verify(capsys, graph_file):
    path = graph_file("g6_prime")
    code, out, _ = run(capsys, "verify", "-i", path, "-M", "0,2,4")
    assert code == 1 and json.loads(out)["uncovered"] == [[1, 3], [1, 5], [3, 5]]
    assert run(capsys, "verify", "-i", path, "-M", "1,2,3,4")[0] == 0
    assert run(capsys, "verify", "-i", path, "-M", "0,9")[0] == 2


def test_restrict(capsys, graph_file):
    host = graph_file("complete:4")
    sub = graph_file("4 3\n0 3\n3 1\n1 2\n", "sub.txt")
    code, out, _ = run(capsys, "restrict", "-i", host, "--sub-edges", sub)
    assert code == 0 and json.loads(out)["value"] == 2
    bad = graph_file("4 1\n0 3\n", "bad.txt")
    assert run(capsys, "restrict", "-i", graph_file("path:4", "p4.txt"), "--sub-edges", bad)[0] == 2


def test_perturb(capsys, graph_file):
    path = graph_file("path:5")
    code, out, _ = run(capsys, "perturb", "-i", path, "--edges", "--format", "tsv")
    assert code == 0
    assert [line.split("\t")[5] for line in out.splitlines()[1:]] == ["0", "1", "1", "0"]
    code, out, _ = run(capsys, "perturb", "-i", graph_file("complete:4", "k4.txt"), "--vertices")
    assert [r["delta"] for r in json.loads(out)["records"]] == [-1] * 4
    assert run(capsys, "perturb", "-i", path, "--vertices", "-M", "0")[0] == 2


def test_revalidate(capsys, graph_file):
    path = graph_file("path:4")
    code, out, _ = run(capsys, "revalidate", "-i", path, "-M", "0", "-e", "1,2")
    assert code == 1 and json.loads(out)["uncovered"] == [[2, 3]]
    assert run(capsys, "revalidate", "-i", graph_file("cycle:4", "c4.txt"), "-M", "0,1", "-e", "2,3")[0] == 0
    assert run(capsys, "revalidate", "-i", path, "-M", "0", "-e", "0,3")[0] == 2


def test_stdin(monkeypatch, capsys):
    import io
    monkeypatch.setattr(sys, "stdin", io.StringIO("3 2\n0 1\n1 2\n"))
    code, out, _ = run(capsys, "dem", "-i", "-")
    assert code == 0 and json.loads(out)["value"] == 1


@pytest.mark.parametrize("suite", ["table1", "restrict", "perturbation-edge", "families"])
def test_reproduce_suites_pass(capsys, suite):
    code, out, _ = run(capsys, "reproduce", "--suite", suite)
    doc = json.loads(out)
    assert code == 0 and doc["pass"] and doc["suite"] == suite


def test_reproduce_table1_shape(capsys):
    code, out, _ = run(capsys, "reproduce", "--suite", "table1", "--format", "tsv")
    rows = out.splitlines()[1:]
    assert len(rows) == 8 and all("\tpass\t" in r for r in rows)


def test_reproduce_is_deterministic(capsys):
    first = run(capsys, "reproduce", "--suite", "perturbation-edge")[1]
    assert run(capsys, "reproduce", "--suite", "perturbation-edge")[1] == first


def test_reproduce_timings_opt_in(capsys):
    out = run(capsys, "reproduce", "--suite", "table1", "--timings")[1]
    assert "seconds" in json.loads(out)["cases"][0]


def test_threads_flag_does_not_change_output(capsys, graph_file):
    path = graph_file("conical:2,9")
    a = run(capsys, "--threads", "1", "dem", "-i", path, "--basis")[1]
    b = run(capsys, "dem", "-i", path, "--basis")[1]
    assert a == b


def test_module_entry_point(tmp_path):
    env = dict(os.environ)
    out = subprocess.run([sys.executable, "-m", "demkit", "gen", "star:3"], capture_output=True, text=True, env=env)
    assert out.returncode == 0 and out.stdout == "3 2\n0 1\n0 2\n"
