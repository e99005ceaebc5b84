from __future__ import annotations

import json

import pytest

from leechcert.cli import main
from leechcert.uniqueness import TABLE_891
from leechcert.vecio import format_code, format_section


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def run_json(capsys, *argv):
    code, out, _ = run(capsys, *argv, "--format", "json")
    return code, json.loads(out)


def test_golay(capsys):
    code, data = run_json(capsys, "golay")
    assert code == 0
    assert data["weight_distribution"] == {"0": 1, "8": 759, "12": 2576, "16": 759, "24": 1}
    assert data["min_distance"] == 8


def test_leech_with_cache(capsys, tmp_path):
    out = tmp_path / "leech.vec"
    code, data = run_json(capsys, "leech", "--cache-dir", str(tmp_path / "cache"), "--out", str(out))
    assert code == 0 and data["count"] == 196560
    assert data["inner_product_histogram"]["4"] == 196560
    cached = list((tmp_path / "cache").glob("leech-*.vec"))
    assert len(cached) == 1 and cached[0].read_text() == out.read_text()
    code, _ = run_json(capsys, "leech", "--cache-dir", str(tmp_path / "cache"))
    assert code == 0


def test_chain_then_design_and_scheme(capsys, tmp_path):
    path = tmp_path / "891.vec"
    code, data = run_json(capsys, "chain", "--depth", "2", "--out", str(path))
    assert code == 0 and data["sizes"] == [196560, 4600, 891]
    assert data["max_inner_products"] == ["1/2", "1/3", "1/4"]
    code, data = run_json(capsys, "design-check", "--input", str(path), "--max-k", "7", "--expect", "5")
    assert code == 0 and data["strength"] == 5
    code, data = run_json(capsys, "design-check", "--input", str(path), "--max-k", "7", "--expect", "6")
    assert code == 1
    code, data = run_json(capsys, "scheme", "--input", str(path))
    assert code == 0
    for (g, a, b), v in TABLE_891.items():
        assert data["intersection_numbers"][f"P_{g}({a},{b})"] == v


def test_scheme_failure_has_witness(capsys, tmp_path, chain):
    # the 170-code splits into two orbits, so it is not an association scheme
    path = tmp_path / "170.vec"
    path.write_text(format_code(chain[4]))
    code, data = run_json(capsys, "scheme", "--input", str(path))
    assert code == 1 and data["scheme"] is False and data["witness"]


def test_lp_commands(capsys):
    code, data = run_json(capsys, "lp", "spherical", "--poly", "(x+1/2)^2*(x+1/8)^2*(x-1/4)", "--dim", "22",
                          "--t", "1/4")
    assert code == 0 and data["bound"] == "891"
    assert data["equality_inner_products"] == ["-1/2", "-1/8", "1/4"]
    code, data = run_json(capsys, "lp", "spherical", "--poly", "x-1/2", "--dim", "22", "--t", "1/4")
    assert code == 1 and data["failures"]
    code, data = run_json(capsys, "lp", "spherical", "--find", "--dim", "23", "--t", "1/3", "--degree", "7",
                          "--nodes=-1,-1/3,0,1/3")
    assert code == 0 and data["bound"] == "4600"
    code, data = run_json(capsys, "lp", "binary", "--n", "22", "--dmin", "8")
    assert code == 0 and data["bound"] == 1024
    code, data = run_json(capsys, "lp", "cw", "--n", "21", "--d", "8", "--w", "5")
    assert code == 0 and data["bound"] == 21


def test_text_output(capsys):
    code, out, _ = run(capsys, "lp", "cw", "--n", "22", "--d", "8", "--w", "6")
    assert code == 0
    assert "bound: 77" in out.splitlines()


@pytest.mark.parametrize("argv", [
    ["lp", "spherical", "--poly", "x+", "--dim", "22", "--t", "1/4"],
    ["lp", "spherical", "--dim", "22", "--t", "1/4"],
    ["lp", "spherical", "--poly", "x", "--dim", "22", "--t", "0.25"],
    ["lp", "spherical", "--find", "--dim", "22", "--t", "1/4", "--degree", "3", "--nodes", "a"],
    ["lp", "cw", "--n", "21", "--d", "7", "--w", "5"],
    ["lp", "binary", "--n", "5", "--dmin", "6"],
    ["chain", "--depth", "-1"],
    ["unique", "777"],
    ["golay", "--threads", "0"],
])
def test_usage_errors(capsys, argv):
    code, _, err = run(capsys, *argv)
    assert code == 2 and err


def test_io_errors(capsys, tmp_path, code891):
    code, _, err = run(capsys, "design-check", "--input", str(tmp_path / "missing.vec"), "--max-k", "3")
    assert code == 3 and "I/O error" in err
    bad = tmp_path / "bad.vec"
    bad.write_text("dim=24 denom_sq=8 count=5\n1 2 3\n")
    assert run(capsys, "scheme", "--input", str(bad))[0] == 3
    members = code891.members.copy()
    members[0] = -members[0]
    bad.write_text(format_section(members) + format_section(code891.anchors, sort=False, role="anchor",
                                                            levels="1/2,1/3"))
    assert run(capsys, "scheme", "--input", str(bad))[0] == 3


def test_unique_json(capsys):
    code, data = run_json(capsys, "unique", "4600", "--seed", "2")
    assert code == 0 and data["pass"] is True
    names = {c["name"]: c for c in data["checks"]}
    assert names["case sizes"]["actual"] == [44, 44, 2464, 1024, 1024]
    assert any("4556" in a for a in data["annotations"])
    assert all(c["pass"] for c in data["checks"])
