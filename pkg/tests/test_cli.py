import io
import json
import sys

import pytest

from arrinv.cli import main


def _run(argv, capsys):
    code = main(argv)
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_charpoly_boolean3_json(capsys):
    code, out, _ = _run(["charpoly", "--builtin", "boolean3", "--json"],
                        capsys)
    assert code == 0
    payload = json.loads(out)
    # (t-1)^3 stored as [[x_exp, t_exp, coeff], ...]
    coeffs = {(i, j): c for i, j, c in payload["chi"]}
    assert coeffs == {(0, 0): "-1", (0, 1): "3", (0, 2): "-3", (0, 3): "1"}


def test_st_poly_x3_deletion_reduced(capsys):
    code, out, _ = _run(["st-poly", "--builtin", "x3",
                         "--delete-hyperplane", "0 1 0 0",
                         "--reduced", "--json"], capsys)
    assert code == 0
    payload = json.loads(out)
    coeffs = {i: int(c) for i, j, c in payload["psi"]}
    assert [coeffs.get(i, 0) for i in range(10)] == \
        [1, 4, 9, 16, 21, 21, 17, 10, 4, 1]


def test_deterministic_output(capsys):
    argv = ["lattice", "--builtin", "x3", "--json"]
    _, first, _ = _run(argv, capsys)
    _, second, _ = _run(argv, capsys)
    assert first == second


def test_exit_code_2_on_bad_input(tmp_path, capsys):
    bad = tmp_path / "bad.arr"
    bad.write_text("2\n1 0\n1\n")
    code, _, err = _run(["charpoly", "--input", str(bad)], capsys)
    assert code == 2
    assert "error" in err


def test_exit_code_2_on_unknown_builtin(capsys):
    code, _, err = _run(["charpoly", "--builtin", "nonesuch"], capsys)
    assert code == 2


def test_exit_code_2_when_both_sources(tmp_path, capsys):
    f = tmp_path / "a.arr"
    f.write_text("2\n1 0\n0 1\n")
    code, _, _ = _run(["charpoly", "--input", str(f),
                       "--builtin", "boolean2"], capsys)
    assert code == 2


def test_builtin_round_trips_through_file(tmp_path, capsys):
    code, out, _ = _run(["builtin", "x3"], capsys)
    assert code == 0
    f = tmp_path / "x3.arr"
    f.write_text(out)
    code, chi_file, _ = _run(["charpoly", "--input", str(f), "--json"],
                             capsys)
    _, chi_builtin, _ = _run(["charpoly", "--builtin", "x3", "--json"],
                             capsys)
    assert code == 0 and chi_file == chi_builtin


def test_freeness_unknown_exit_code(capsys):
    # a tiny budget exhausts the search and reports Unknown -> exit 1
    code, out, _ = _run(["freeness", "--builtin", "x3", "--json",
                         "--budget", "3"], capsys)
    assert code == 1
    assert json.loads(out)["status"] == "Unknown"


def test_oracle_table_tsv(capsys):
    code, out, _ = _run(["oracle", "--builtin", "boolean2",
                         "--pmax", "2", "--dmax", "3"], capsys)
    assert code == 0
    lines = out.strip().splitlines()
    assert lines[1].split("\t") == ["0", "1", "2", "3", "4"]
    assert lines[2].split("\t") == ["1", "0", "2", "4", "6"]


def test_oracle_check_needs_hyperplane(capsys):
    code, _, err = _run(["oracle", "--builtin", "boolean2",
                         "--check", "euler"], capsys)
    assert code == 2


def test_conjectures_report(capsys):
    code, out, _ = _run(["conjectures", "--builtin", "x3", "--json"],
                        capsys)
    assert code == 0
    rep = json.loads(out)
    assert rep["palindromic"] and rep["monic"] and rep["degree"] == 10
