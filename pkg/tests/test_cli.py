import json

import pytest

from wcurves.cli import main
from wcurves.prototypes import prototype_from_json


def test_no_subcommand_is_a_usage_error(capsys):
    assert main([]) == 1
    capsys.readouterr()


def test_help_exits_clean(capsys):
    assert main(["--help"]) == 0
    out = capsys.readouterr().out
    assert "prototypes" in out and "verify" in out


def test_prototypes_text(capsys):
    assert main(["prototypes", "--d", "17", "--kind", "w"]) == 0
    lines = capsys.readouterr().out.strip().splitlines()
    assert lines[0] == "W(1,-3,-2,0)"
    assert len(lines) == 6


def test_prototypes_json_round_trip(capsys):
    assert main(["prototypes", "--d", "17", "--kind", "w", "--format", "json"]) == 0
    records = json.loads(capsys.readouterr().out)
    assert len(records) == 6
    for rec in records:
        p = prototype_from_json(rec)
        assert p.kind == "W" and p.D == 17


def test_prototypes_csv(capsys):
    assert main(["prototypes", "--d", "12", "--kind", "y", "--format", "csv"]) == 0
    lines = capsys.readouterr().out.strip().splitlines()
    assert lines[0] == "kind,D,a,b,c,q,modulus"
    assert lines[1] == "Y,12,1,-2,-2,0,1"
    assert len(lines) == 4


def test_prototypes_rejects_bad_discriminant(capsys):
    assert main(["prototypes", "--d", "7"]) == 1
    err = capsys.readouterr().err
    assert "error:" in err and "0 or 1 mod 4" in err


def test_euler_single(capsys):
    assert main(["euler", "--d", "45"]) == 0
    out = capsys.readouterr().out
    assert "chi_W = -9" in out
    assert "h2 = -62/5" in out


def test_euler_sweep_csv(capsys):
    assert main(["euler", "--dmin", "1", "--dmax", "20", "--format", "csv"]) == 0
    lines = capsys.readouterr().out.strip().splitlines()
    assert lines[0].startswith("D,D0,f,h2,chi_X,chi_W")
    assert len(lines) == 1 + 10  # 1,4,5,8,9,12,13,16,17,20
    d9 = [l for l in lines if l.startswith("9,")][0]
    assert ",-25/12," in d9


def test_euler_needs_some_range(capsys):
    assert main(["euler"]) == 1
    assert "need --d or both" in capsys.readouterr().err


def test_sv_single_json(capsys):
    assert main(["sv", "--d", "17", "--format", "json"]) == 0
    rec = json.loads(capsys.readouterr().out)
    assert rec["c0"] == "221/24 + 1/8*sqrt(17)"
    assert rec["billiards"] == "221/24 - 1/8*sqrt(17)"
    assert rec["coefficient"].startswith("10.34305960228063818288451413278")


def test_sv_square_is_refused(capsys):
    assert main(["sv", "--d", "16"]) == 1
    assert "square" in capsys.readouterr().err


def test_sv_sweep_skips_squares(capsys):
    assert main(["sv", "--dmin", "1", "--dmax", "30", "--format", "csv"]) == 0
    lines = capsys.readouterr().out.strip().splitlines()
    ds = [int(l.split(",")[0]) for l in lines[1:]]
    assert ds == [5, 8, 12, 13, 17, 20, 21, 24, 28, 29]


def test_hseries_csv(capsys):
    assert main(["hseries", "--dmax", "16"]) == 0
    lines = capsys.readouterr().out.strip().splitlines()
    assert lines[0] == "D,h2"
    assert "5,-2/5" in lines
    assert "16,-55/12" in lines


def test_boundary_dot(capsys):
    assert main(["boundary", "--d", "12", "--format", "dot"]) == 0
    out = capsys.readouterr().out
    assert out.startswith("digraph boundary_12 {")
    assert '[label="m=2"]' in out


def test_boundary_json(capsys):
    assert main(["boundary", "--d", "25", "--format", "json"]) == 0
    rec = json.loads(capsys.readouterr().out)
    assert rec["D"] == 25
    assert rec["s1s2_points"] == 2
    assert len(rec["curves"]) == 9


def test_tables_sv_rows(capsys):
    assert main(["tables", "--sv", "--dmax", "100"]) == 0
    lines = capsys.readouterr().out.strip().splitlines()
    assert len(lines) == 40
    assert lines[0] == "5,25/3"
    assert "17,221/24 + 1/8*sqrt(17)" in lines
    assert "89,702833/68640 - 831/22880*sqrt(89)" in lines
    assert "96,3194/345" in lines


def test_tables_regenerate(tmp_path, capsys):
    assert main(["tables", "--regenerate", "--output", str(tmp_path)]) == 0
    out = capsys.readouterr().out
    assert "table1.csv (10 rows)" in out
    assert "table2.csv (40 rows)" in out
    t1 = (tmp_path / "table1.csv").read_text().strip().splitlines()
    assert t1[3] == "13,91/9"
    assert "17,221/24 - 1/8*sqrt(17)" in t1
    t2 = (tmp_path / "table2.csv").read_text().strip().splitlines()
    assert len(t2) == 40


def test_tables_needs_a_mode(capsys):
    assert main(["tables"]) == 1
    assert "needs --sv or --regenerate" in capsys.readouterr().err


def test_verify_ok(capsys):
    assert main(["verify", "--dmin", "5", "--dmax", "40"]) == 0
    out = capsys.readouterr().out
    assert "D=5: " in out
    assert "0 failed" in out
    assert "enumeration_W" in out  # per-suite tally


def test_verify_sharding_covers_everything(capsys):
    assert main(["verify", "--dmin", "5", "--dmax", "40", "--shard", "0/2"]) == 0
    first = capsys.readouterr().out
    assert main(["verify", "--dmin", "5", "--dmax", "40", "--shard", "1/2"]) == 0
    second = capsys.readouterr().out
    ds = set()
    for block in (first, second):
        ds.update(int(l.split(":")[0][2:]) for l in block.splitlines() if l.startswith("D="))
    assert ds == {D for D in range(5, 41) if D % 4 in (0, 1)}


def test_verify_bad_shard(capsys):
    assert main(["verify", "--dmin", "5", "--dmax", "12", "--shard", "nope"]) == 1
    assert "shard" in capsys.readouterr().err


def test_output_flag_writes_file(tmp_path, capsys):
    target = tmp_path / "rows.csv"
    assert main(["tables", "--sv", "--output", str(target)]) == 0
    capsys.readouterr()
    lines = target.read_text().strip().splitlines()
    assert len(lines) == 40
