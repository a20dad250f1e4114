import subprocess
import sys

import pytest

from nearbip import cli, corpus
from nearbip.fileio import parse_edge_list, serialize_edge_list

FIG_CLAUSE = "p cnf 3 1\n1 3 -2 0\n"


@pytest.fixture
def write(tmp_path):
    def _write(name, text):
        path = tmp_path / name
        path.write_text(text)
        return str(path)

    return _write


def test_solve_c5(write, capsys):
    path = write("c5.txt", serialize_edge_list(corpus.cycle_graph(5)))
    assert cli.main(["solve", path]) == 0
    out = capsys.readouterr().out
    assert out == "size 1\nA 0\n"


def test_solve_k4_rejected(write, capsys):
    path = write("k4.txt", serialize_edge_list(corpus.complete_graph(4)))
    assert cli.main(["solve", path]) == 2
    err = capsys.readouterr().err
    assert "diameter 1" in err


def test_solve_not_near_bipartite(write, capsys):
    path = write("w5.txt", serialize_edge_list(corpus.wheel_graph(5)))
    assert cli.main(["solve", path]) == 1
    assert capsys.readouterr().out == "NOT NEAR-BIPARTITE\n"


def test_oracle_matches_solve(write, capsys):
    path = write("c5.txt", serialize_edge_list(corpus.cycle_graph(5)))
    assert cli.main(["oracle", path]) == 0
    assert capsys.readouterr().out == "size 1\nA 0\n"


def test_check_valid_and_invalid(write, capsys):
    gpath = write("c5.txt", serialize_edge_list(corpus.cycle_graph(5)))
    ok = write("a.txt", "0\n")
    assert cli.main(["check", gpath, ok]) == 0
    assert capsys.readouterr().out == "VALID\n"

    bad = write("b.txt", "0 1\n")
    assert cli.main(["check", gpath, bad]) == 1
    assert capsys.readouterr().out == "INDEPENDENCE-VIOLATION 0 1\n"

    empty = write("e.txt", "")
    assert cli.main(["check", gpath, empty]) == 1
    assert capsys.readouterr().out.startswith("CYCLE-IN-B")


def test_characterize(write, capsys):
    c5 = write("c5.txt", serialize_edge_list(corpus.cycle_graph(5)))
    assert cli.main(["characterize", c5]) == 0
    assert "condition (i)" in capsys.readouterr().out

    pet = write("pet.txt", serialize_edge_list(corpus.petersen_graph()))
    assert cli.main(["characterize", pet]) == 0
    assert "condition (ii)" in capsys.readouterr().out

    w5 = write("w5.txt", serialize_edge_list(corpus.wheel_graph(5)))
    assert cli.main(["characterize", w5]) == 1

    k4 = write("k4.txt", serialize_edge_list(corpus.complete_graph(4)))
    assert cli.main(["characterize", k4]) == 2


def test_reduce_certify_and_map(write, tmp_path, capsys):
    cnf = write("f.cnf", FIG_CLAUSE)
    out = str(tmp_path / "h.txt")
    assert cli.main(["reduce", cnf, "--certify", "-o", out]) == 0
    captured = capsys.readouterr()
    assert "ALL CHECKS PASSED" in captured.err
    g = parse_edge_list((tmp_path / "h.txt").read_text())
    assert g.n == 137
    map_lines = (tmp_path / "h.txt.map").read_text().splitlines()
    assert len(map_lines) == 137


def test_reduce_to_stdout(write, capsys):
    cnf = write("f.cnf", FIG_CLAUSE)
    assert cli.main(["reduce", cnf]) == 0
    out = capsys.readouterr().out
    assert out.startswith("n 137\n")


def test_embed_then_check_pipeline(write, tmp_path, capsys):
    cnf = write("f.cnf", FIG_CLAUSE)
    asg = write("a.txt", "v1=1\nv2=1\nv3=1\n")
    out_graph = str(tmp_path / "h.txt")
    assert cli.main(["reduce", cnf, "-o", out_graph]) == 0
    capsys.readouterr()
    assert cli.main(["embed", cnf, asg]) == 0
    aset = capsys.readouterr().out
    set_path = write("set.txt", aset)
    assert cli.main(["check", out_graph, set_path]) == 0
    assert capsys.readouterr().out == "VALID\n"


def test_embed_rejects_falsifying(write, capsys):
    cnf = write("f.cnf", FIG_CLAUSE)
    asg = write("a.txt", "v1=0\nv2=1\nv3=0\n")
    assert cli.main(["embed", cnf, asg]) == 2


def test_gen_deterministic_and_diameter2(write, capsys):
    assert cli.main(["gen", "--n", "9", "--seed", "4"]) == 0
    first = capsys.readouterr().out
    assert cli.main(["gen", "--n", "9", "--seed", "4"]) == 0
    assert capsys.readouterr().out == first
    from nearbip.graph import diameter

    assert diameter(parse_edge_list(first)) == 2
    assert cli.main(["gen", "--n", "2", "--seed", "1"]) == 64


def test_usage_and_file_errors(write, capsys):
    assert cli.main(["frobnicate"]) == 64
    capsys.readouterr()
    assert cli.main(["solve", "/nonexistent/file.txt"]) == 66
    bad = write("bad.txt", "not a graph\n")
    assert cli.main(["solve", bad]) == 66
    badcnf = write("bad.cnf", "p cnf 2 1\n1 1 2 0\n")
    assert cli.main(["reduce", badcnf]) == 66


def test_installed_entry_point_smoke(tmp_path):
    path = tmp_path / "c5.txt"
    path.write_text(serialize_edge_list(corpus.cycle_graph(5)))
    proc = subprocess.run(
        [sys.executable, "-m", "nearbip.cli", "solve", str(path)],
        capture_output=True,
        text=True,
    )
    assert proc.returncode == 0
    assert proc.stdout == "size 1\nA 0\n"
