import numpy as np
import pytest

from filtra.cli import main
from filtra.fileio import write_filter_csv


@pytest.fixture()
def base_csv(tmp_path):
    rng = np.random.default_rng(0)
    path = tmp_path / "base.csv"
    write_filter_csv(path, rng.uniform(-1, 1, (3, 3)))
    return path


def test_capacity(capsys):
    assert main(["capacity", "--group", "c8", "--size", "5"]) == 0
    lines = capsys.readouterr().out.strip().splitlines()
    assert lines == ["reg2reg,125,1600", "orn,25,1600"]


def test_capacity_rejects_dihedral(capsys):
    assert main(["capacity", "--group", "d8", "--size", "5"]) == 2


def test_verify_passes(capsys, tmp_path):
    report = tmp_path / "report.csv"
    code = main(["verify", "--group", "c4", "--size", "3", "--report", str(report)])
    out = capsys.readouterr().out
    assert code == 0
    assert out.strip().splitlines()[-1] == "PASS"
    lines = report.read_text().strip().splitlines()
    assert lines[0] == "kind,group,S,mode,i0,i1,abs_residual,rel_residual"
    assert len(lines) > 1


def test_verify_multiple_groups_modes():
    assert main(["verify", "--group", "c8,d4", "--size", "3", "--mode", "bilinear,nearest"]) == 0


def test_verify_unknown_flag_is_usage_error():
    assert main(["verify", "--group", "c4", "--bogus", "1"]) == 2


def test_gen_requires_k(base_csv, tmp_path, capsys):
    code = main(
        ["gen", "--group", "c4", "--kind", "irrep2reg", "--base", str(base_csv),
         "--out", str(tmp_path / "out")]
    )
    assert code == 2
    assert "requires --k" in capsys.readouterr().err


def test_gen_writes_grids(base_csv, tmp_path, capsys):
    out = tmp_path / "out"
    code = main(
        ["gen", "--group", "c4", "--kind", "triv2reg", "--base", str(base_csv),
         "--out", str(out)]
    )
    assert code == 0
    names = sorted(p.name for p in out.iterdir())
    assert names == ["r0_c0.csv", "r1_c0.csv", "r2_c0.csv", "r3_c0.csv"]


def test_gen_reg2reg_base_count(base_csv, tmp_path):
    out = tmp_path / "out2"
    bases = ",".join([str(base_csv)] * 3)
    assert main(["gen", "--group", "c4", "--kind", "reg2reg", "--base", bases, "--out", str(out)]) == 0
    assert len(list(out.iterdir())) == 16
    assert main(["gen", "--group", "c4", "--kind", "reg2reg", "--base", str(base_csv), "--out", str(out)]) == 2


def test_gen_orn_cyclic_only(base_csv, tmp_path):
    assert main(["gen", "--group", "d4", "--kind", "orn", "--base", str(base_csv),
                 "--out", str(tmp_path / "x")]) == 2


def test_gen_pgm_format(base_csv, tmp_path):
    out = tmp_path / "pgm"
    assert main(["gen", "--group", "c2", "--kind", "triv2reg", "--base", str(base_csv),
                 "--out", str(out), "--format", "pgm"]) == 0
    content = (out / "r0_c0.pgm").read_text()
    assert content.startswith("P2\n3 3\n255\n")


def test_decompose_text_and_csv(capsys):
    assert main(["decompose", "--group", "d4", "--element", "1,1"]) == 0
    out = capsys.readouterr().out
    assert "reconstruction residual" in out
    assert main(["decompose", "--group", "c4", "--element", "0,1", "--format", "csv"]) == 0
    out = capsys.readouterr().out
    assert out.startswith("matrix,regular")
    assert "residual," in out


def test_decompose_bad_element(capsys):
    assert main(["decompose", "--group", "c4", "--element", "7"]) == 2


def test_demo(base_csv, tmp_path, capsys):
    out = tmp_path / "demo"
    code = main(["demo", "--image", str(base_csv), "--group", "c8", "--j", "1", "--k", "1",
                 "--out", str(out)])
    assert code == 0
    assert (out / "stack" / "r7_c0.pgm").is_file()
    assert (out / "irrep2reg_dihedral" / "r15_c1.pgm").is_file()
    # deterministic: running twice produces byte-identical dumps
    first = (out / "stack" / "r3_c0.pgm").read_bytes()
    assert main(["demo", "--image", str(base_csv), "--group", "c8", "--out", str(out)]) == 0
    assert (out / "stack" / "r3_c0.pgm").read_bytes() == first


def test_demo_unreadable_image(tmp_path, capsys):
    code = main(["demo", "--image", str(tmp_path / "missing.csv"), "--group", "c8",
                 "--out", str(tmp_path / "d")])
    assert code == 2
    assert "missing.csv" in capsys.readouterr().err


def test_usage_errors():
    assert main([]) == 2
    assert main(["gen", "--group", "c4", "--kind", "nope", "--base", "x", "--out", "y"]) == 2
