import json

import pytest

from kyfanli.cli import main, parse_range, UsageError


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_parse_range():
    assert parse_range("1..3") == [1, 2, 3]
    assert parse_range("4,6,8") == [4, 6, 8]
    assert parse_range("3-5,9") == [3, 4, 5, 9]
    with pytest.raises(UsageError):
        parse_range("5..3")
    with pytest.raises(UsageError):
        parse_range("x")


def test_compute_star(capsys):
    code, out, _ = run(capsys, "compute", "star:12", "--k", "1..3")
    rec = json.loads(out)
    assert code == 0
    assert abs(rec["F"]["3"] - (13 - 1 / 6)) < 1e-9


def test_compute_gmn(capsys):
    code, out, _ = run(capsys, "compute", "gmn:12,12", "--k", "1")
    assert abs(json.loads(out)["sigma1"] - 10) < 1e-9


def test_compute_csv(capsys):
    code, out, _ = run(capsys, "compute", "cycle:6", "--k", "2", "--format", "csv")
    header, row = out.strip().splitlines()
    assert header.startswith("graph6,n,m")
    assert abs(float(row.split(",")[-1]) - 4.0) < 1e-9


def test_compute_parse_error_has_offset(capsys):
    code, _, err = run(capsys, "compute", "A_x")
    assert code == 1 and "offset 2" in err


def test_verify_exit_codes(capsys, tmp_path):
    out = tmp_path / "r.json"
    code, _, _ = run(capsys, "verify", "thm3.2", "--class", "connected", "--n", "3..6", "-o", str(out))
    assert code == 0 and json.loads(out.read_text())["graphs_checked"] == 2 + 6 + 21 + 112
    code, _, _ = run(capsys, "verify", "thm3.3", "--class", "trees", "--n", "2..4")
    assert code == 2
    code, _, _ = run(capsys, "verify", "thm5.3", "--class", "trees", "--n", "8", "--budget", "3")
    assert code == 3
    code, _, _ = run(capsys, "verify", "thm9.9", "--class", "trees", "--n", "8")
    assert code == 1


def test_verify_input_file(capsys, tmp_path):
    f = tmp_path / "g.g6"
    f.write_text("# two graphs\nA_\nBw\n")
    code, out, _ = run(capsys, "verify", "thm3.3", "--input", str(f), "--format", "csv")
    assert code == 2 and "A_,thm3.3" in out


def test_config_file_and_flag_precedence(capsys, tmp_path):
    cfg = tmp_path / "run.cfg"
    cfg.write_text("format = csv\nworkers = 1\n")
    code, out, _ = run(capsys, "verify", "thm3.2", "--class", "connected", "--n", "4", "--config", str(cfg))
    assert out.startswith("graph6,theorem_id")
    code, out, _ = run(capsys, "verify", "thm3.2", "--class", "connected", "--n", "4", "--config", str(cfg),
                       "--format", "json")
    assert json.loads(out)["header"]["config"]["fmt"] == "json"


def test_extremal(capsys):
    code, out, _ = run(capsys, "extremal", "F2", "--class", "trees", "--n", "12")
    rec = json.loads(out)
    assert code == 0 and rec["match"] and rec["unique"]


def test_conjecture_and_trend(capsys):
    code, out, _ = run(capsys, "conjecture", "conj5.1", "--n", "7..8", "--k", "1..3")
    assert code == 0 and json.loads(out)["status"].startswith("no counterexample")
    code, out, _ = run(capsys, "trend", "--class", "pmtrees", "--n", "4..8", "--format", "csv")
    assert out.splitlines()[0] == "n,count,min_sigma_n,argmin_graph6,reference"


def test_enum(capsys):
    code, out, _ = run(capsys, "enum", "--class", "trees", "--n", "7")
    assert code == 0 and len(out.split()) == 11


def test_bad_usage(capsys):
    assert main(["nosuch"]) == 1
    assert main(["extremal", "F2", "--class", "trees"]) == 1
