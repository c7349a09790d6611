import io

import pytest

from cusptheta.cli import Report, emit_report, run_cli
from cusptheta.cuspidal import load_dataset
from cusptheta.cuspidal.dataset import dump_dataset


def run(*argv):
    out, err = io.StringIO(), io.StringIO()
    code = run_cli(list(argv), out=out, err=err)
    return code, out.getvalue(), err.getvalue()


@pytest.fixture
def perturbed(tmp_path):
    text = dump_dataset(load_dataset()).splitlines()
    # row 8 (F4(a3)): theta 1 -> -1
    idx = next(i for i, line in enumerate(text) if line.startswith("8\t"))
    cells = text[idx].split("\t")
    cells[9] = "-1"
    text[idx] = "\t".join(cells)
    path = tmp_path / "bad.tsv"
    path.write_text("\n".join(text) + "\n", encoding="utf-8")
    return path


def test_verify_all():
    code, out, _ = run("verify", "--all")
    assert code == 0
    assert "summary: 32 pass, 5 consistent, 0 fail" in out


def test_verify_tsv_lines():
    code, out, _ = run("verify", "--all", "--format", "tsv")
    lines = out.splitlines()
    assert code == 0
    assert lines[0] == "row\tclass\tphi\texpected\tdeduced\tverdict"
    assert len(lines) == 38
    assert lines[1] == "1\tG2\tchi1\t-1\t{-1}\tderived-unique"


def test_verify_empty_selection():
    code, out, _ = run("verify", "--rows", "30..40", "--format", "tsv")
    assert code == 0
    assert out == "row\tclass\tphi\texpected\tdeduced\tverdict\n"


def test_verify_detects_perturbation(perturbed):
    code, out, _ = run("verify", "--all", "--dataset", str(perturbed), "--format", "tsv")
    assert code == 1
    bad = [line for line in out.splitlines() if line.endswith("FAIL")]
    assert len(bad) == 1 and bad[0].startswith("8\t")
    code, out, _ = run("verify", "--all", "--dataset", str(perturbed))
    assert "row 8" in out


def test_env_dataset(perturbed, monkeypatch):
    monkeypatch.setenv("THETA_DATASET", str(perturbed))
    assert run("verify", "--all")[0] == 1


def test_distinct_all():
    code, out, _ = run("distinct", "--all", "--format", "tsv")
    assert code == 0
    assert out.splitlines()[1:] == [
        "F4\t2\t7\tF4(a2)\t8\tF4(a3)\t1",
        "E8\t2\t19\tD8(a1)\t20\t2A4\t1",
    ]


def test_distinct_single_pair():
    code, out, _ = run("distinct", "--group", "G2", "--p", "3", "--format", "tsv")
    assert code == 0 and len(out.splitlines()) == 1
    assert run("distinct", "--group", "G2")[0] == 2


def test_theta_command():
    code, out, _ = run("theta", "--group", "G2", "--p", "2", "--class", "G2")
    assert code == 0
    assert "central + p-torsion + Springer-Lou" in out
    assert "{-1}" in out
    code, out, _ = run("theta", "--group", "E6", "--p", "2", "--class", "A5+A1", "--phi", "chi5",
                       "--format", "tsv")
    assert out.splitlines()[1:] == ["12\tA5+A1\tchi5\t1\t{1}\tderived-unique"]


def test_deduce_row():
    code, out, _ = run("deduce", "--row", "23", "--format", "tsv")
    assert code == 0 and len(out.splitlines()) == 5
    assert run("deduce", "--row", "99")[0] == 2


def test_ablation_flag():
    code, out, _ = run("verify", "--rows", "6..6", "--disable", "external", "--format", "tsv")
    assert code == 0
    assert out.splitlines()[1].endswith("\tconsistent")


def test_tmatrix():
    code, out, _ = run("tmatrix", "--group", "S3", "--format", "tsv")
    lines = out.splitlines()
    assert code == 0
    assert lines[0] == "class\tcentralizer\tphi\tdim\ttheta"
    assert len(lines) == 9
    assert "(1 2)\tZ2\tchi1\t3\t-1" in lines


def test_chartable():
    code, out, _ = run("chartable", "--group", "S3", "--format", "tsv")
    assert code == 0
    assert out.splitlines() == [
        "char\te\t(1 2)\t(0 1 2)",
        "size\t1\t3\t2",
        "[3]\t1\t1\t1",
        "[2,1]\t2\t0\t-1",
        "[1,1,1]\t1\t-1\t1",
    ]


def test_selftest():
    code, out, _ = run("selftest")
    assert code == 0
    assert "FAIL" not in out


@pytest.mark.parametrize("argv", [
    [], ["bogus"], ["verify", "--rows", "x"], ["tmatrix", "--group", "Q8"],
    ["theta", "--group", "G2"], ["verify", "--dataset", "/nonexistent/file.tsv"],
])
def test_usage_errors_exit_2(argv, capsys):
    assert run(*argv)[0] == 2


def test_output_is_deterministic():
    for argv in (["verify", "--all"], ["distinct", "--all"], ["tmatrix", "--group", "S4"]):
        assert run(*argv) == run(*argv)


def test_emit_report_formats():
    rep = Report("x", ("a", "b"))
    rep.add(("1", "long value"), "pass")
    rep.add(("22", "v"), "fail")
    human = emit_report(rep, "human")
    assert human.splitlines()[1] == "a   b"
    assert "summary: 1 pass, 0 consistent, 1 fail" in human
    assert emit_report(rep, "tsv") == "a\tb\n1\tlong value\n22\tv\n"
    assert rep.exit_status == 1
