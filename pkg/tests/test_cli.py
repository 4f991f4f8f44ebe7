import subprocess
import sys

import pytest

from test_acceptance import CLI_GOLDEN, _resolve, run_cli

from conftest import DATA


@pytest.mark.parametrize("argv,code,stdout", CLI_GOLDEN, ids=[" ".join(a) for a, _, _ in CLI_GOLDEN])
def test_golden(argv, code, stdout):
    got_code, got_out, _ = run_cli(_resolve(argv))
    assert got_code == code
    if stdout is not None:
        assert got_out == stdout


def test_module_entry_point_byte_exact():
    res = subprocess.run(
        [sys.executable, "-m", "chromnbc", "chrompoly", str(DATA / "triangle.graph")],
        capture_output=True,
    )
    assert res.returncode == 0
    assert res.stdout == b"0 2 -3 1\n2*x - 3*x^2 + x^3\n"


def test_evaluation_flag():
    code, out, _ = run_cli(["charpoly", str(DATA / "u12.matroid"), "--q", "3"])
    assert code == 0 and out.splitlines()[-2:] == ["chi at q=3: 2", "chi_tilde at q=3: 2"]
    code, out, _ = run_cli(["digraph", str(DATA / "chain3.digraph"), "--q", "5"])
    assert out.splitlines()[-1] == "value at q=5: 60"


@pytest.mark.parametrize("method", ["subset", "nbc", "kfree", "weighted"])
def test_graph_methods_agree(method, tmp_path):
    w = tmp_path / "w.txt"
    w.write_text("1: -7\n")
    args = ["--method", method, "--labels", str(DATA / "triangle.labels")]
    if method == "weighted":
        args += ["--weights", str(w)]
    for cmd in ("chrompoly", "csf"):
        base = run_cli([cmd, str(DATA / "triangle.graph")])[1]
        assert run_cli([cmd, str(DATA / "triangle.graph"), *args])[1] == base


@pytest.mark.parametrize("method", ["moebius", "subset", "nbc", "kfree", "weighted", "whitney"])
def test_charpoly_methods_agree(method):
    want = run_cli(["charpoly", str(DATA / "graphic_file.matroid")])[1]
    got = run_cli(["charpoly", str(DATA / "graphic_file.matroid"), "--method", method])
    assert got[0] == 0 and got[1] == want


def test_kset_file_restricts_broken_circuits(tmp_path):
    ks = tmp_path / "k.txt"
    ks.write_text("1 2 2 3\n")
    code, out, _ = run_cli(
        ["chrompoly", str(DATA / "triangle.graph"), "--method", "kfree", "--kset", str(ks),
         "--labels", str(DATA / "triangle.labels")]
    )
    assert code == 0 and out.startswith("0 2 -3 1\n")


def test_weights_must_cover_kset(tmp_path):
    w = tmp_path / "w.txt"
    w.write_text("2: 1\n")
    code, _, err = run_cli(["chrompoly", str(DATA / "triangle.graph"), "--method", "weighted", "--weights", str(w)])
    assert code == 4 and "indices" in err


def test_whitney_rejects_tied_labels(tmp_path):
    lab = tmp_path / "l.txt"
    lab.write_text("label: 1 2 1\nlabel: 1 3 1\nlabel: 2 3 1\n")
    code, _, err = run_cli(["charpoly", str(DATA / "graphic_file.matroid"), "--method", "whitney", "--labels", str(lab)])
    assert code == 4


def test_corrupt_matroid_prints_witness():
    code, out, _ = run_cli(["verify", str(DATA / "corrupt.matroid")])
    assert code == 1
    assert "axiom 2 violated: {b} ⊆ {a, b}" in out


def test_charpoly_reports_axiom_violation_as_precondition():
    code, _, err = run_cli(["charpoly", str(DATA / "corrupt.matroid")])
    assert code == 4 and "axiom 2" in err


def test_usage_errors_exit_2():
    with pytest.raises(SystemExit) as e:
        run_cli(["chrompoly"])
    assert e.value.code == 2
    with pytest.raises(SystemExit) as e:
        run_cli(["chrompoly", "x", "--method", "bogus"])
    assert e.value.code == 2


def test_verify_is_deterministic():
    a = run_cli(["verify", "--builtin-corpus", "--seed", "11"])
    b = run_cli(["verify", "--builtin-corpus", "--seed", "11"])
    assert a == b and a[0] == 0
    assert a[1].rstrip().endswith("seed 11")


def test_verify_digraph_target():
    code, out, _ = run_cli(["verify", str(DATA / "chain3.digraph")])
    assert code == 0 and "PASS digraph.two_path_free_sum" in out
