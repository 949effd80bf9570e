from __future__ import annotations

import subprocess
import sys

import pytest

from planarpack import cli, textfmt


def run(capsys, *argv):
    code = cli.main(list(map(str, argv)))
    out, err = capsys.readouterr()
    return code, out, err


@pytest.fixture
def fixtures(tmp_path, capsys):
    assert run(capsys, "fixtures", "--out", tmp_path)[0] == 0
    return tmp_path


def test_fixture_graph_solves(fixtures, capsys):
    code, out, _ = run(capsys, "solve", fixtures / "fig2.graph", "--problem", "cycle")
    assert code == cli.EXIT_YES
    lines = out.splitlines()
    assert lines[0] == "YES" and all(ln.startswith("e ") for ln in lines[1:])


def test_reduce_then_solve_each_problem(fixtures, tmp_path, capsys):
    for problem in ("cycle", "stpath", "partition"):
        inst = tmp_path / f"{problem}.inst"
        assert run(capsys, "reduce", fixtures / "phi0.cnf", "--problem", problem, "-o", inst)[0] == 0
        code, out, _ = run(capsys, "solve", inst)
        assert code == cli.EXIT_YES and out.startswith("YES")
    code, out, _ = run(capsys, "solve", tmp_path / "stpath.inst")
    assert any(ln.startswith("path ") for ln in out.splitlines())
    code, out, _ = run(capsys, "solve", tmp_path / "partition.inst")
    assert {ln.split()[0] for ln in out.splitlines()[1:]} == {"tree", "span"}


def test_unsat_gives_no(tmp_path, capsys):
    cnf = tmp_path / "u.cnf"
    cnf.write_text("p cnf 3 2\n1 0\n-1 0\n")
    inst = tmp_path / "u.inst"
    run(capsys, "reduce", cnf, "-o", inst)
    code, out, _ = run(capsys, "solve", inst)
    assert (code, out.strip()) == (cli.EXIT_NO, "NO")


def test_budget_exit_code(fixtures, tmp_path, capsys):
    inst = tmp_path / "p.inst"
    run(capsys, "reduce", fixtures / "phi0.cnf", "--problem", "partition", "-o", inst)
    code, out, _ = run(capsys, "solve", inst, "--budget", "1")
    assert (code, out.strip()) == (cli.EXIT_BUDGET, "BUDGET")


def test_acyclic_cut_on_plain_graph(fixtures, capsys):
    code, out, _ = run(capsys, "solve", fixtures / "fig2.graph", "--problem", "acyclic-cut")
    assert code == 0 and out.splitlines()[1].startswith("cut ")


def test_stpath_needs_ends(fixtures, capsys):
    with pytest.raises(SystemExit):
        cli.main(["solve", str(fixtures / "fig2.graph"), "--problem", "stpath"])
    code, out, _ = run(capsys, "solve", fixtures / "fig2.graph", "--problem", "stpath", "--s", "a", "--t", "b")
    assert code == 0 and out.splitlines()[1] == "path a b"


def test_bad_input_exits_with_error(tmp_path, capsys):
    bad = tmp_path / "bad.cnf"
    bad.write_text("p cnf 3 5\n1 0\n")
    code, _, err = run(capsys, "reduce", bad)
    assert code == 3 and "declares" in err


def test_gen_verify_and_report(tmp_path, capsys):
    corpus = tmp_path / "c"
    assert run(capsys, "gen", "--seed", 9, "--count", 3, "--out", corpus)[0] == 0
    report = tmp_path / "r.jsonl"
    code, out, _ = run(capsys, "verify", corpus, "--problems", "cycle,stpath", "--report", report)
    assert code == 0 and out.strip().endswith("PASS")
    assert len(report.read_text().splitlines()) == 2 * 6


def test_gen_reduce_is_byte_identical(tmp_path, capsys):
    outs = []
    for rep in ("a", "b"):
        d = tmp_path / rep
        run(capsys, "gen", "--seed", 11, "--count", 4, "--out", d)
        run(capsys, "reduce", d / "r11-002.cnf", "--problem", "partition", "-o", d / "x.inst")
        outs.append({p.name: p.read_bytes() for p in sorted(d.iterdir())})
    assert outs[0] == outs[1]


def test_export_dot(fixtures, tmp_path, capsys):
    inst = tmp_path / "s.inst"
    run(capsys, "reduce", fixtures / "phi0.cnf", "--problem", "stpath", "-o", inst)
    code, out, _ = run(capsys, "export-dot", inst)
    assert code == 0 and out.count("doublecircle") == 2
    doc = textfmt.parse(inst.read_text())
    assert out.count(" -- ") == doc.graph.num_edges


def test_module_entry_point(tmp_path):
    res = subprocess.run(
        [sys.executable, "-m", "planarpack", "fixtures", "--out", str(tmp_path)],
        capture_output=True, text=True, check=False,
    )
    assert res.returncode == 0 and (tmp_path / "fig2.graph").exists()
