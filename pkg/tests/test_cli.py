import json
import subprocess
import sys

import pytest

from raagtools import graph as graphs
from raagtools.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_constants(capsys):
    code, out, _ = run(capsys, "constants", "--space", "egraph", "-r", "1", "--graph", "Pbar4")
    assert code == 0 and "R=120 N=3" in out
    code, out, _ = run(capsys, "constants", "-r", "2", "--graph", "Pbar5")
    assert "R=42 N=5" in out


def test_header_echoes_parameters(capsys):
    code, out, _ = run(capsys, "reduce", "v1 v3 v1^-1", "--graph", "Pbar4")
    head = out.splitlines()[0]
    assert head.startswith("#") and graphs.bundled("Pbar4").fingerprint() in head
    assert "seed=0" in head and "word=v1 v3 v1^-1" in head
    assert "canonical: v3" in out


def test_unknown_vertex(capsys):
    code, _, err = run(capsys, "reduce", "v1 v9", "--graph", "Pbar4")
    assert code == 2 and "token 1" in err


def test_usage_errors(capsys):
    with pytest.raises(SystemExit) as info:
        main(["nonsense"])
    assert info.value.code == 2
    code, _, _ = run(capsys, "reduce", "v1", "--graph", "no/such/file.txt")
    assert code == 2
    code, _, err = run(capsys, "reduce", "v1")
    assert code == 2


def test_budget_exit(capsys):
    code, _, err = run(capsys, "egraph-ball", "--max-conj", "2", "--ceiling", "10", "--graph", "Pbar5")
    assert code == 3 and "budget" in err


def test_precondition_exit(capsys):
    code, _, err = run(capsys, "power-prefix", "v1 v3", "v1", "--power", "2", "--graph", "Pbar4")
    assert code == 2 and "split" in err


def test_worked_examples_command_passes(capsys):
    code, out, _ = run(capsys, "paper-examples", "--format", "json-lines")
    lines = [json.loads(ln) for ln in out.splitlines()]
    assert "header" in lines[0]
    recs = lines[1:]
    assert recs and all(r["status"] == "pass" for r in recs)
    for r in recs:
        assert set(r) == {"check", "instance", "expected", "actual", "status", "provenance"}
    assert code == 0


def test_verify(capsys):
    code, out, _ = run(capsys, "verify", "--samples", "10")
    assert code == 0 and "FAIL" not in out


def test_deterministic(capsys):
    argv = ["egraph-ball", "--max-conj", "1", "--samples", "20", "--seed", "9", "--graph", "Pbar5",
            "--format", "json-lines"]
    _, first, _ = run(capsys, *argv)
    _, second, _ = run(capsys, *argv)
    assert first == second


def test_subcommands_smoke(capsys, tmp_path):
    cases = [
        ("mult", "v1 v2", "v2^-1 v3", "--graph", "Pbar4"),
        ("gcd", "v1 v2", "v1 v3", "--graph", "Pbar4", "--oracle"),
        ("gcd", "v2 v1", "v3 v1", "--side", "right", "--graph", "Pbar4"),
        ("lcm", "v1", "v3", "--graph", "Pbar4"),
        ("cyclic-reduce", "v2^-1 v1 v2", "--graph", "Pbar4"),
        ("conjugate-test", "v1 v2", "v2 v1", "--graph", "Pbar4", "--oracle"),
        ("star-length", "v1 v3 v5 v2 v4", "--graph", "Pbar5", "--oracle"),
        ("classify", "v1 v3", "--graph", "Pbar4"),
        ("tau-bounds", "v1 v2 v3 v4", "--max-power", "6", "--graph", "Pbar6"),
        ("power-prefix", "v1^2 v2 v3 v4", "v1^2 v2 v3 v1^2 v2 v1", "--power", "3", "--graph", "Pbar4"),
        ("xi", "1", "v1 v2 v3 v4 v5", "-r", "1", "--cap", "2", "--graph", "Pbar5"),
        ("egraph-ball", "--max-conj", "1", "--export", str(tmp_path / "ball.txt"), "--graph", "Pbar4"),
    ]
    for argv in cases:
        code, out, err = run(capsys, *argv)
        assert code == 0, (argv, err)
        assert out.startswith("# command=")
    assert (tmp_path / "ball.txt").read_text().startswith("v0 := ")


def test_quasi_root_and_structure_commands(capsys):
    from raagtools.experiments import quasi_root_instances, stabilizer_instances

    P5 = graphs.bundled("Pbar5")
    inst = quasi_root_instances(P5, 1, 0)[0]
    code, out, err = run(capsys, "quasi-root", str(inst.g), str(inst.w), "-r", str(inst.r),
                         "-R", str(inst.R), "--graph", "Pbar5")
    assert code == 0, err
    s = stabilizer_instances(P5, 1, 0)[0]
    code, out, err = run(capsys, "xi-structure", str(s.x), str(s.y), "-r", str(s.r),
                         "--member", str(s.seed), "--graph", "Pbar5")
    assert code == 0, err
    assert "certified: True" in out


def test_module_entry_point():
    res = subprocess.run([sys.executable, "-m", "raagtools", "constants", "-r", "1",
                          "--space", "egraph", "--graph", "Pbar4"], capture_output=True, text=True)
    assert res.returncode == 0 and "R=120 N=3" in res.stdout


def test_global_flags_before_subcommand(capsys):
    _, before, _ = run(capsys, "--format", "json-lines", "--seed", "4", "--graph", "Pbar4",
                       "gcd", "v1 v2", "v1 v3")
    _, after, _ = run(capsys, "gcd", "v1 v2", "v1 v3", "--format", "json-lines", "--seed", "4",
                      "--graph", "Pbar4")
    assert before == after
    assert json.loads(before.splitlines()[0])["header"]["seed"] == 4
