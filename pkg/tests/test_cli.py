import json
import subprocess
import sys

import pytest

from gsq import cli, harness
from gsq.corpus import write_edge_list, write_graph6
from gsq.graph import cycle_graph
from gsq.harness import TheoremId
from gsq.named import f4


def run(capsys, *argv):
    code = cli.main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


@pytest.fixture
def c4_file(tmp_path):
    p = tmp_path / "c4.g6"
    p.write_text("Cl\n")
    return str(p)


def test_check_chordal_c4(capsys, c4_file):
    code, out, _ = run(capsys, "check-chordal", c4_file)
    assert code == 1
    d = json.loads(out)
    assert d["chordal"] is False and d["hole"] == [0, 1, 2, 3]


def test_check_chordal_ok(capsys, tmp_path):
    p = tmp_path / "k4.g6"
    p.write_text("C~\nCh\n")
    code, out, _ = run(capsys, "--json", "check-chordal", str(p))
    assert code == 0
    assert [d["chordal"] for d in json.loads(out)] == [True, True]


def test_classify_f4_edge_list(capsys, tmp_path):
    p = tmp_path / "f4.txt"
    p.write_text(write_edge_list(f4()))
    code, out, _ = run(capsys, "--format", "edges", "classify", str(p))
    assert code == 0
    d = json.loads(out)
    # F4 has no induced claw: each w sees two non-adjacent w's and two u's
    assert d["claw_free"] is True
    assert len(d["f4"]) == 1 and d["f4"][0]["suspended"] is False
    assert d["sufficient_chordalsq"] is False and d["square_chordal"] is False


def test_square_and_linegraph(capsys, tmp_path):
    p = tmp_path / "c5.g6"
    p.write_text(write_graph6(cycle_graph(5)) + "\n")
    code, out, _ = run(capsys, "square", "-k", "2", str(p))
    assert code == 0 and out.strip() == "D~{"
    code, out, _ = run(capsys, "linegraph", str(p), "--json")
    assert code == 0 and json.loads(out)["edge_of_vertex"][0] == [0, 1]


def test_witness_commands(capsys):
    code, out, _ = run(capsys, "witness", "square", "named:f4", "--dot")
    d = json.loads(out)
    assert code == 0 and len(d["flower"]["u"]) == 4 and "graph G {" in d["dot"]
    code, out, _ = run(capsys, "witness", "lgsquare", "named:c5-two-pendants")
    assert code == 0 and len(json.loads(out)["sprout"]["u_edges"]) == 4
    code, out, _ = run(capsys, "witness", "square", "named:claw")
    assert code == 1 and json.loads(out)["square_chordal"] is True


def test_verify_and_exit_codes(capsys):
    code, out, _ = run(capsys, "verify", "--exhaustive", "5", "--theorems", "all")
    assert code == 0 and json.loads(out)["counterexamples"] == []
    code, out, _ = run(capsys, "verify", "--random", "8", "0.3", "20", "--seed", "3",
                       "--theorems", "implications", "--jobs", "2")
    assert code == 0 and json.loads(out)["graphs"] == 20


def test_verify_reports_falsified_statement(capsys, monkeypatch):
    # a deliberately wrong check: claim every graph has a chordal square
    monkeypatch.setitem(harness._CHECKS, TheoremId.FLOTOW, lambda g: harness._sufficient(g, True))
    code, out, err = run(capsys, "verify", "--exhaustive", "4", "--theorems", "FLOTOW")
    assert code == 0
    code, out, err = run(capsys, "verify", "--exhaustive", "6", "--theorems", "FLOTOW")
    assert code == 3 and "COUNTEREXAMPLE FLOTOW" in err
    assert json.loads(out)["counterexamples"]


def test_mine_and_convert(capsys, c4_file):
    code, out, _ = run(capsys, "mine", "lgsquare", "--nmax", "6")
    assert code == 0 and "EBj?" in out.split()
    code, out, _ = run(capsys, "convert", "--to", "edges", c4_file)
    assert out.splitlines()[0] == "4 4"
    code, out, _ = run(capsys, "convert", "--to", "dot", c4_file)
    assert out.startswith("graph G0 {")


def test_usage_errors(capsys, tmp_path):
    with pytest.raises(SystemExit) as exc:
        cli.main(["bogus"])
    assert exc.value.code == 2
    bad = tmp_path / "bad.g6"
    bad.write_text("C\n")
    code, _, err = run(capsys, "check-chordal", str(bad))
    assert code == 2 and "error" in err
    code, _, _ = run(capsys, "check-chordal", str(tmp_path / "missing"))
    assert code == 2
    code, _, _ = run(capsys, "check-chordal", "named:nothing")
    assert code == 2


def test_console_script_stdin():
    proc = subprocess.run([sys.executable, "-m", "gsq.cli", "check-chordal", "-"],
                          input="Cl\n", capture_output=True, text=True)
    assert proc.returncode == 1 and json.loads(proc.stdout)["hole"] == [0, 1, 2, 3]
