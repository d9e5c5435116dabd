import io
import json
import subprocess
import sys

import pytest

from cevatri import __version__
from cevatri.cli import main, parse_rho
from cevatri.extgroup import INF


def run(*argv):
    out, err = io.StringIO(), io.StringIO()
    code = main(list(argv), out=out, err=err)
    return code, out.getvalue(), err.getvalue()


def run_json(*argv):
    code, out, err = run(*argv)
    assert code == 0, err
    return json.loads(out)


def test_parse_rho():
    assert parse_rho("inf") is INF
    assert parse_rho("INF") is INF
    assert parse_rho("0.25") == 0.25
    for bad in ("infinity", "nan", "1e999", "x"):
        with pytest.raises(Exception):
            parse_rho(bad)


def test_classify_reference():
    doc = run_json("classify", "8", "9", "12")
    assert set(doc) == {"input", "results", "config", "version"}
    assert doc["version"] == __version__
    rec = doc["results"][0]
    assert rec["class"] == "increasing"
    assert rec["kappa"] == pytest.approx(0.2125)
    assert rec["mu"] == pytest.approx(1 / 9)
    assert rec["nu"] == pytest.approx(10 / 17)
    assert set(rec["sigma"]) == {"re", "im"}


def test_classify_equilateral_and_invalid():
    rec = run_json("classify", "1", "1", "1")["results"][0]
    assert rec["class"] == "equilateral" and rec["gamma"] == 0.0
    code, _, err = run("classify", "1", "1", "3")
    assert code == 2
    assert "|a-b| < c < a+b" in err


def test_apply_commands():
    rec = run_json("apply", "8", "9", "12", "--rho", "0.5")["results"][0]
    assert rec["squares"] == pytest.approx([36.5, 83.75, 96.5], rel=1e-12)
    rec = run_json("apply", "8", "9", "12", "--rho", "inf")["results"][0]
    assert [rec["x"], rec["y"], rec["z"]] == [12.0, 9.0, 8.0]
    doc = run_json("apply", "8", "9", "12", "--rho", "inf")
    assert doc["input"]["rho"] == "inf"
    rec = run_json("apply", "8", "9", "12", "--rho", "0.2125")["results"][0]
    assert rec["similarity_to_input"]["kind"] == "direct"
    rec = run_json("apply", "8", "9", "12", "--rho", "0.5", "--iterate", "2")["results"][0]
    assert rec["similarity_to_input"]["ratio"] == pytest.approx(0.75)
    rec = run_json("apply", "8", "9", "12", "--rho", "0.5", "--hajja")["results"][0]
    assert rec["squares"] == pytest.approx([96.5, 83.75, 36.5], rel=1e-12)


def test_similar_command():
    assert run_json("similar", "8", "9", "12", "16", "18", "24")["results"][0]["kind"] == "direct"
    rec = run_json("similar", "8", "9", "12", "--rho", "0.5", "--tau", "0.6783216783216783")["results"][0]
    assert rec["kind"] == "reverse"
    code, _, _ = run("similar", "8", "9", "12", "1")
    assert code == 2
    code, _, _ = run("similar", "1", "1", "1", "--rho", "0.2", "--tau", "0.3")
    assert code == 3


def test_reconstruct_command():
    import cevatri

    T = cevatri.Triangle(8, 9, 12)
    V = cevatri.apply(T, 0.5).scaled(0.25)
    rec = run_json("reconstruct", "8", "9", "12", *map(repr, V.sides))["results"][0]
    assert rec["total_ops"] == 11 and rec["n0"] == 5
    assert rec["result"] == pytest.approx(list(V.sides), rel=1e-9)
    W = cevatri.apply(T, 0.3)
    rec = run_json("reconstruct", "8", "9", "12", *map(repr, W.sides))["results"][0]
    assert rec["n0"] == 0 and rec["total_ops"] == 1


def test_reconstruct_brocard_mismatch():
    code, _, err = run("reconstruct", "8", "9", "12", "3", "4", "5")
    assert code == 3
    assert "omega_T=" in err and "omega_V=" in err


def test_right_ceva_command():
    rec = run_json("right-ceva", "3", "4", "5")["results"][0]
    assert rec["exists"] is True
    rec = run_json("right-ceva", "6", "7", "8")["results"][0]
    assert rec["exists"] is False and rec["rho"] is None
    assert run("right-ceva", "2", "2", "2")[0] == 3


def test_render_deterministic():
    a = run("render", "8", "9", "12", "--rho", "0.1111", "--rho", "0.5882")
    b = run("render", "8", "9", "12", "--rho", "0.1111", "--rho", "0.5882")
    assert a == b and a[0] == 0
    svg = a[1]
    assert svg.startswith("<?xml") and 'version="1.1"' in svg
    assert svg.count("<polygon") == 3
    assert run("render", "1", "1", "1", "--rho", "0.5")[1].count("<polygon") == 2
    assert run("render", "1", "1", "3")[0] == 2


def test_render_json_wraps_svg():
    doc = run_json("render", "8", "9", "12", "--rho", "0.5", "--format", "json")
    assert doc["results"][0]["svg"].startswith("<?xml")


def test_svg_only_for_render():
    assert run("classify", "8", "9", "12", "--format", "svg")[0] == 2


def test_sweep_grid_csv():
    code, out, _ = run("sweep", "8", "9", "12", "--steps", "4", "--format", "csv")
    assert code == 0
    lines = out.strip().splitlines()
    assert lines[0] == "rho,x,y,z,class"
    assert len(lines) == 6


def test_sweep_random_is_seeded():
    a = run_json("sweep", "--random", "20", "--seed", "7")
    b = run_json("sweep", "--random", "20", "--seed", "7")
    c = run_json("--seed", "8", "sweep", "--random", "20")
    assert a == b and a != c
    assert all(r["ok"] for r in a["results"])
    assert a["config"]["seed"] == 7 and c["config"]["seed"] == 8


def test_json_round_trip():
    first = run_json("classify", "8", "9", "12")
    again = run_json("classify", *map(repr, first["input"]["sides"]))
    assert again == first


def test_global_flags_on_either_side():
    a = run_json("--tolerance", "1e-6", "classify", "3", "4", "5")
    b = run_json("classify", "3", "4", "5", "--tolerance", "1e-6")
    assert a == b and a["config"]["tolerance"] == 1e-6


def test_text_format():
    code, out, _ = run("classify", "3", "4", "5", "--format", "text")
    assert code == 0 and "class=" in out


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "cevatri", "classify", "8", "9", "12"], capture_output=True, text=True, check=False
    )
    assert proc.returncode == 0
    assert json.loads(proc.stdout)["results"][0]["class"] == "increasing"
