"""Command-line interface end to end, via main(argv)."""

import pytest

from eocd.cli import main
from eocd.graph import parse_edge_list


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_generate_and_solve_path(tmp_path, capsys):
    out = tmp_path / "p12.g"
    code, _, _ = run(capsys, "generate", "path", "12", "-o", str(out))
    assert code == 0
    g = parse_edge_list(out.read_text())
    assert g.n == 12 and g.m == 11
    code, text, _ = run(capsys, "solve", str(out))
    assert code == 0
    assert "D " in text and "P " in text


def test_solve_cycle_13_fails(tmp_path, capsys):
    out = tmp_path / "c13.g"
    assert run(capsys, "generate", "cycle", "13", "-o", str(out))[0] == 0
    code, text, _ = run(capsys, "solve", str(out))
    assert code == 1
    assert "no EOCD certificate" in text


def test_solve_gamma_flags(tmp_path, capsys):
    out = tmp_path / "p7.g"
    run(capsys, "generate", "path", "7", "-o", str(out))
    code, text, _ = run(capsys, "solve", str(out), "--gamma", "--gamma-t")
    assert code == 0  # 7 mod 4 = 3, so P7 is an EOCD graph
    assert "gamma   3" in text
    assert "gamma_t 4" in text


def test_verify_reports_offending_vertex(tmp_path, capsys):
    out = tmp_path / "p12.g"
    run(capsys, "generate", "path", "12", "-o", str(out))
    code, text, _ = run(capsys, "verify", str(out),
                        "--d", "1,2,5,6,9,10", "--p", "1,4,7,10")
    assert code == 0
    assert "valid EOD set" in text
    code, text, _ = run(capsys, "verify", str(out),
                        "--d", "1,2,5,6,9,10", "--p", "1,2,7,10")
    assert code == 1
    assert "doubly covered" in text
    code, text, _ = run(capsys, "verify", str(out),
                        "--d", "1,2,5,6,9,10", "--p", "1,7,10")
    assert code == 1
    assert "uncovered" in text


def test_verify_rejects_bad_ids(tmp_path, capsys):
    out = tmp_path / "p4.g"
    run(capsys, "generate", "path", "4", "-o", str(out))
    code, _, err = run(capsys, "verify", str(out), "--d", "1,99", "--p", "1")
    assert code == 2
    assert "99" in err


def test_recognize_empty_pd(tmp_path, capsys):
    star = tmp_path / "star.g"
    run(capsys, "generate", "complete-bipartite", "1", "3", "-o", str(star))
    assert run(capsys, "recognize-empty-pd", str(star))[0] == 0
    c12 = tmp_path / "c12.g"
    run(capsys, "generate", "cycle", "12", "-o", str(c12))
    assert run(capsys, "recognize-empty-pd", str(c12))[0] == 1


def test_labels_flag(tmp_path, capsys):
    out = tmp_path / "s42.g"
    run(capsys, "generate", "sierpinski", "4", "2", "-o", str(out))
    code, text, _ = run(capsys, "--labels", "solve", str(out))
    assert code == 0
    assert "01" in text and "10" in text


def test_tree_random_decompose_replay(tmp_path, capsys):
    tree = tmp_path / "t.g"
    code, text, _ = run(capsys, "tree", "random", "--steps", "4", "--seed", "7",
                        "-o", str(tree))
    assert code == 0
    d_line = next(l for l in text.splitlines() if l.startswith("D"))
    p_line = next(l for l in text.splitlines() if l.startswith("P"))
    d = d_line.split("[")[1].rstrip("]")
    p = p_line.split("[")[1].rstrip("]")
    seq = tmp_path / "seq.txt"
    code, _, _ = run(capsys, "tree", "decompose", str(tree),
                     "--d", d, "--p", p, "-o", str(seq))
    assert code == 0
    rebuilt = tmp_path / "t2.g"
    code, _, _ = run(capsys, "tree", "replay", str(seq), "-o", str(rebuilt))
    assert code == 0
    a = parse_edge_list(tree.read_text())
    b = parse_edge_list(rebuilt.read_text())
    assert sorted(a.edges()) == sorted(b.edges())


def test_reduce_solve_extract(tmp_path, capsys):
    cnf = tmp_path / "f.cnf"
    cnf.write_text("p cnf 3 1\n1 2 3 0\n")
    code, text, _ = run(capsys, "reduce", str(cnf), "--extract")
    assert code == 0
    assert "assignment:" in text
    unsat = tmp_path / "u.cnf"
    unsat.write_text("p cnf 3 2\n1 2 3 0\n-1 -2 -3 0\n")
    code, text, _ = run(capsys, "reduce", str(unsat), "--solve")
    assert code == 1
    assert "no one-in-three model" in text


def test_max_vertices_guard(tmp_path, capsys):
    out = tmp_path / "q4.g"
    run(capsys, "generate", "hypercube", "4", "-o", str(out))
    code, _, err = run(capsys, "--max-vertices", "10", "solve", str(out))
    assert code == 2
    assert "max-vertices" in err


def test_max_vertices_env(tmp_path, capsys, monkeypatch):
    out = tmp_path / "p8.g"
    run(capsys, "generate", "path", "8", "-o", str(out))
    monkeypatch.setenv("EOCD_MAX_VERTICES", "5")
    code, _, err = run(capsys, "solve", str(out))
    assert code == 2
    assert "8 vertices" in err


def test_usage_errors(tmp_path, capsys):
    assert run(capsys, "nonsense")[0] == 2
    assert run(capsys, "generate", "path", "-o", "x.g")[0] == 2
    assert run(capsys, "solve", str(tmp_path / "missing.g"))[0] == 2
    bad = tmp_path / "bad.g"
    bad.write_text("this is not a graph\n")
    assert run(capsys, "solve", str(bad))[0] == 2
