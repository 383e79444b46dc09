import subprocess
import sys
from pathlib import Path

import pytest

from hdknots.cli import main
from hdknots.formats import parse_seifert
from hdknots.seifert import connected_sum, mirror_reverse, trefoil

DATA = Path(__file__).parent / "data"


def run(capsys, *argv):
    code = main([str(a) for a in argv])
    out, err = capsys.readouterr()
    return code, out, err


def test_alex_trefoil(capsys):
    assert run(capsys, "alex", DATA / "trefoil.seifert") == (0, "1 - t + t^2\n", "")


def test_alex_kummer(capsys):
    code, out, _ = run(capsys, "alex", DATA / "kummer.seifert")
    assert code == 0
    assert out.startswith("1 + 2t + t^2 - 2t^3") and out.endswith("+ 2t^15 + t^16\n")


def test_sig(capsys):
    assert run(capsys, "sig", DATA / "kummer.seifert")[:2] == (0, "-16\n")
    assert run(capsys, "sig", DATA / "kummer.form")[:2] == (0, "-16\n")
    assert run(capsys, "sig", DATA / "hyperbolic.form")[:2] == (0, "0\n")


def test_sig_even_k_is_an_error(capsys):
    code, out, err = run(capsys, "sig", DATA / "trefoil.seifert")
    assert code == 1 and out == "" and "k odd" in err


def test_sum_and_mirror(capsys, tmp_path):
    out_file = tmp_path / "sum.seifert"
    code, out, _ = run(capsys, "sum", DATA / "trefoil.seifert", DATA / "trefoil.seifert", "-o", out_file)
    assert code == 0 and out == ""
    assert parse_seifert(out_file.read_text()) == connected_sum(trefoil(), trefoil())
    code, out, _ = run(capsys, "mirror", DATA / "trefoil.seifert")
    assert code == 0 and parse_seifert(out) == mirror_reverse(trefoil())


def test_sum_dimension_mismatch(capsys):
    code, _, err = run(capsys, "sum", DATA / "trefoil.seifert", DATA / "kummer.seifert")
    assert code == 1 and "k=0" in err


def test_spin(capsys):
    code, out, _ = run(capsys, "spin", "--seifert", DATA / "kummer.seifert", "--times", "2")
    assert code == 0
    assert out.splitlines()[0].startswith("n=5 delta=1 + 2t")
    assert "sigma=undefined simple=yes knotted=yes" in out
    code, out, _ = run(capsys, "spin", "--seifert", DATA / "trefoil.seifert", "--not-simple")
    assert code == 1


def test_spin_projection(capsys):
    code, out, _ = run(capsys, "spin", "--proj", DATA / "double.proj", "--mu", "2")
    assert code == 0 and out.startswith("n=4 ") and "sigma=undefined simple=yes knotted=yes" in out


def test_realize_then_lifts(capsys, tmp_path):
    target = tmp_path / "r0.proj"
    code, out, _ = run(capsys, "realize", "--r", "0", "--mu", "2", "-o", target)
    assert code == 0
    assert out == "sigma=0 certified over 16 lifts (exhaustive) knotted=yes\n"
    assert target.read_text() == "double(base(kummer,mu=2))\n"
    code, out, _ = run(capsys, "lifts", target)
    lines = out.splitlines()
    assert code == 0
    assert lines[0] == "mu=4 dim=3 expr=double(base(kummer,mu=2))"
    assert lines[2] == "assignments=16 mode=exhaustive"
    rows = lines[3:]
    assert len(rows) == 16 and rows[0].startswith("rho=++++ ") and rows[-1].startswith("rho=---- ")
    assert all(" sigma=0 " in r and r.endswith("knotted=yes") for r in rows)


def test_realize_prints_expression(capsys):
    code, out, _ = run(capsys, "realize", "--r", "-2", "--sample", "5")
    assert code == 0
    assert out.splitlines() == [
        "stack(base(kummer),base(kummer))",
        "sigma=-32 certified over 5 lifts (sampled seed=0) knotted=yes",
    ]


def test_lifts_classify_sampled(capsys):
    code, out, _ = run(capsys, "lifts", DATA / "mixed.proj", "--classify", "--sample", "7", "--seed", "3")
    lines = out.splitlines()
    assert code == 0
    assert lines[1] == "components=24 topology=Torus double_points_only=yes"
    assert lines[2] == "assignments=7 mode=sampled seed=3"
    assert lines[3].startswith("classes=7 (equivalence classes, upper bound 2^mu")
    assert lines[4].startswith("n=3 sigma=0 ") and lines[4].endswith("knotted=yes classes=7")


def test_lifts_spun_topology(capsys, tmp_path):
    f = tmp_path / "s.proj"
    f.write_text("spin(base(kummer,mu=1))")
    code, out, _ = run(capsys, "lifts", f)
    assert code == 0
    assert "topology=Torus x S^1" in out


def test_adjust_and_framing(capsys):
    assert run(capsys, "adjust", DATA / "small.disks")[:2] == (0, "disk 3: +1\ndisk 3: +1\nmoves=2\n")
    assert run(capsys, "framing", DATA / "small.disks")[1] == "disk 1: 0\ndisk 2: -2\ndisk 3: 0\n"
    assert run(capsys, "framing", "--adjusted", DATA / "small.disks")[1].endswith("disk 3: 4\n")


def test_adjust_kirby(capsys):
    code, out, _ = run(capsys, "adjust", DATA / "kirby.disks")
    lines = out.splitlines()
    assert code == 0
    assert lines[:-1] == [f"disk {i}: -1" for i in range(2, 23)]
    assert lines[-1] == "moves=21"
    out = run(capsys, "framing", "--adjusted", DATA / "kirby.disks")[1]
    assert out.splitlines() == ["disk 1: 0"] + [f"disk {i}: -2" for i in range(2, 23)]


def test_verify_kummer(capsys):
    code, out, _ = run(capsys, "verify-kummer")
    assert code == 0 and out.splitlines()[0] == "rank=22 sig=-16 det=-1 even=yes"
    code, out, _ = run(capsys, "verify-kummer", DATA / "kummer.form")
    assert code == 0 and "fail" not in out


def test_verify_kummer_fails(capsys):
    code, out, _ = run(capsys, "verify-kummer", DATA / "hyperbolic.form")
    assert code == 2
    assert out.splitlines()[0] == "rank=2 sig=0 det=-1 even=yes"
    assert "  rank=22: fail" in out and "  det=-1: pass" in out
    code, out, _ = run(capsys, "verify-kummer", DATA / "hopf.framedlink")
    assert code == 2


def test_liftable(capsys):
    code, out, _ = run(capsys, "liftable", DATA / "spin_giller.imm")
    assert code == 0 and out.splitlines()[0] == "NonLiftable"
    code, out, _ = run(capsys, "liftable", DATA / "connsum.imm")
    assert out.splitlines()[-1].endswith("-> NonLiftable")


def test_predicates(capsys, tmp_path):
    assert run(capsys, "valid", DATA / "trefoil.seifert")[:2] == (0, "valid\n")
    bad = tmp_path / "bad.seifert"
    bad.write_text("SEIFERT k=1 dim=1\n2\n")
    assert run(capsys, "valid", bad)[:2] == (2, "invalid\n")
    assert run(capsys, "realizable", "-32")[:2] == (0, "yes\n")
    assert run(capsys, "realizable", "8")[:2] == (2, "no\n")


def test_parse_error_position(capsys, tmp_path):
    f = tmp_path / "typo.proj"
    f.write_text("stak(base(kummer))")
    code, out, err = run(capsys, "lifts", f)
    assert code == 1 and out == ""
    assert "line 1, column 1" in err
    code, _, err = run(capsys, "verify-kummer", DATA / "asymmetric.form")
    assert code == 1 and "(1,2)" in err


def test_missing_row(capsys, tmp_path):
    f = tmp_path / "short.seifert"
    f.write_text("SEIFERT k=1 dim=2\n1 2\n")
    code, _, err = run(capsys, "alex", f)
    assert code == 1 and "line 3" in err


def test_io_errors(capsys, tmp_path):
    code, _, err = run(capsys, "alex", tmp_path / "nope")
    assert code == 1 and "cannot read" in err
    code, _, err = run(capsys, "mirror", DATA / "trefoil.seifert", "-o", tmp_path / "no" / "dir")
    assert code == 1 and "cannot write" in err


def test_usage_errors(capsys):
    assert main([]) == 1
    assert main(["bogus"]) == 1
    assert main(["realize"]) == 1
    assert main(["--help"]) == 0
    capsys.readouterr()


@pytest.mark.parametrize("argv, code", [(["realizable", "16"], 0), (["realizable", "1"], 2)])
def test_console_module(argv, code):
    proc = subprocess.run([sys.executable, "-m", "hdknots", *argv], capture_output=True, text=True)
    assert proc.returncode == code
