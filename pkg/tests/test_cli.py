import io
import json
import subprocess
import sys

import pytest

from galoiscensus import cli
from galoiscensus.symres.store import cache_path


def run(argv, capsys=None):
    out = io.StringIO()
    code = cli.run(argv, out=out)
    err = capsys.readouterr().err if capsys else ""
    return code, out.getvalue(), err


# --------------------------------------------------------------- classify

def test_classify_demoivre_member(capsys):
    code, out, err = run(["classify", "--coeffs", "0,10,0,20,2"], capsys)
    assert code == 0 and err == ""
    doc = json.loads(out)
    assert doc["label"] == "AGL(1,F5)" and doc["ntk"] == "5T3"
    assert doc["coeffs"] == ["0", "10", "0", "20", "2"]


def test_classify_negative_leading_coefficient(capsys):
    code, out, _ = run(["classify", "--coeffs=-1,0,0,0,1"], capsys)
    assert code == 0 and json.loads(out)["degree"] == 5


def test_classify_reducible_is_a_domain_error(capsys):
    code, out, err = run(["classify", "--coeffs", "0,0,0,0,-1"], capsys)
    assert code == 1 and out == "" and err.startswith("error[domain]:")


@pytest.mark.parametrize("coeffs", ["1,2", "1,2,3,4,5,6,7", "1,x,3"])
def test_classify_usage_errors(coeffs, capsys):
    code, out, err = run(["classify", "--coeffs", coeffs], capsys)
    assert code == 2 and out == "" and err.startswith("error[usage]:")


def test_classify_output_is_deterministic(capsys):
    a = run(["classify", "--coeffs", "0,0,0,-1,-1"], capsys)[1]
    b = run(["classify", "--coeffs", "0,0,0,-1,-1"], capsys)[1]
    assert a == b


# ----------------------------------------------------------------- census

def test_census_writes_csv_and_json(tmp_path, capsys):
    prefix = str(tmp_path / "c3")
    code, out, _ = run(["census", "--degree", "3", "--height", "1", "--out", prefix], capsys)
    assert code == 0
    with open(prefix + ".csv") as fh:
        csv_text = fh.read()
    assert out == csv_text
    assert "3,1,reducible,15" in csv_text.splitlines()
    with open(prefix + ".json") as fh:
        doc = json.load(fh)
    assert doc["reducible"] == 15 and doc["total"] == 27


def test_census_default_prefix(tmp_path, monkeypatch, capsys):
    monkeypatch.chdir(tmp_path)
    assert run(["census", "--degree", "3", "--height", "2"], capsys)[0] == 0
    assert (tmp_path / "census_n3_H2.csv").exists() and (tmp_path / "census_n3_H2.json").exists()


def test_census_stdout_identical_across_shards(tmp_path, capsys):
    outs = set()
    for shards in ("1", "4", "16"):
        code, out, _ = run(["census", "--degree", "4", "--height", "2", "--shards", shards,
                            "--out", str(tmp_path / ("s" + shards))], capsys)
        assert code == 0
        outs.add(out)
    assert len(outs) == 1


def test_census_budget_refusal(tmp_path, capsys):
    code, out, err = run(["census", "--degree", "5", "--height", "3", "--budget", "100",
                          "--out", str(tmp_path / "x")], capsys)
    assert code == 1 and out == ""
    assert err.startswith("error[budget]:") and "16807" in err
    assert not (tmp_path / "x.csv").exists()


@pytest.mark.parametrize("argv", [
    ["census", "--degree", "7", "--height", "1"],
    ["census", "--degree", "5", "--height", "-1"],
    ["census", "--degree", "4", "--height", "1", "--mode", "solvable_only"],
    ["census", "--degree", "5", "--height", "1", "--mode", "bogus"],
    ["census", "--degree", "5", "--height", "1", "--shards", "0"],
    ["census", "--height", "1"],
])
def test_census_usage_errors_before_any_work(argv, tmp_path, monkeypatch, capsys):
    monkeypatch.chdir(tmp_path)
    code, out, err = run(argv, capsys)
    assert code == 2 and out == "" and err.startswith("error[usage]:")
    assert list(tmp_path.iterdir()) == []


# -------------------------------------------------------------- resolvent

def test_resolvent_verify_theta(capsys):
    code, out, err = run(["resolvent", "--name", "theta", "--verify"], capsys)
    assert code == 0 and out == "cache matches\n"


def test_resolvent_regenerates_cache_bytes(tmp_path, capsys):
    target = tmp_path / "f10.txt"
    code, out, _ = run(["resolvent", "--name", "f10", "--out", str(target)], capsys)
    assert code == 0 and out == ""
    with open(cache_path("f10"), "rb") as fh:
        assert target.read_bytes() == fh.read()


def test_resolvent_verify_detects_stale_cache(monkeypatch, capsys):
    from galoiscensus.symres import store

    def fake_verify(name, progress=None):
        return False, ["- old line", "+ new line"]
    monkeypatch.setattr(store, "verify_cache", fake_verify)
    import galoiscensus.symres as symres
    monkeypatch.setattr(symres, "verify_cache", fake_verify)
    code, out, err = run(["resolvent", "--name", "f10", "--verify"], capsys)
    assert code == 1 and "+ new line" in err and "error[domain]:" in err


def test_resolvent_unknown_name(capsys):
    code, _, err = run(["resolvent", "--name", "nope"], capsys)
    assert code == 2 and err.startswith("error[usage]:")


# ----------------------------------------------------------------- newton

def _write(tmp_path, name, text):
    p = tmp_path / name
    p.write_text(text)
    return str(p)


def test_newton_on_printed_sextic_specialization(tmp_path, capsys):
    path = _write(tmp_path, "g.txt", "# sextic resolvent, a=b=c=0, d=1\nvariables: e, y\n"
                  "102400 - 108544*y - 3200000*e^4*y + 44800*y^2 - 8960*y^3\n"
                  "+ 880*y^4 - 40*y^5 + y^6\n")
    code, out, _ = run(["newton", "--poly", path], capsys)
    doc = json.loads(out)
    assert code == 0
    assert doc["verdict"] == "certified" and doc["vertices"] == [[0, 0], [4, 1], [0, 6]]
    assert doc["gcd"] == 1 and doc["support_size"] == 8 and doc["variables"] == ["e", "y"]
    assert doc["schema"] == cli.NEWTON_SCHEMA


def test_newton_needs_two_variables(tmp_path, capsys):
    path = _write(tmp_path, "g.txt", "x + y + z\n")
    assert run(["newton", "--poly", path], capsys)[0] == 2


def test_newton_missing_file(tmp_path, capsys):
    code, _, err = run(["newton", "--poly", str(tmp_path / "none.txt")], capsys)
    assert code == 2 and err.startswith("error[usage]:")


def test_newton_unparsable(tmp_path, capsys):
    path = _write(tmp_path, "g.txt", "x + + (y\n")
    assert run(["newton", "--poly", path], capsys)[0] == 2


# ----------------------------------------------------------------- points

def test_points_curve(tmp_path, capsys):
    path = _write(tmp_path, "c.txt", "variables: x, y\nx - y^2\n")
    code, out, _ = run(["points", "--poly", path, "--box", "100,10"], capsys)
    doc = json.loads(out)
    assert code == 0 and doc["count"] == 21 and doc["box"] == [100, 10]
    assert set(doc) == {"polynomial", "box", "count", "seconds", "schema"}


def test_points_surface(tmp_path, capsys):
    path = _write(tmp_path, "s.txt", "variables: d, e, y\ny\n")
    code, out, _ = run(["points", "--poly", path, "--box", "3,3,3"], capsys)
    assert code == 0 and json.loads(out)["count"] == 49


def test_points_surface_with_named_variable(tmp_path, capsys):
    path = _write(tmp_path, "s.txt", "variables: d, e, y\ne - d^2\n")
    code, out, _ = run(["points", "--poly", path, "--box", "3,10,2", "--var", "e"], capsys)
    assert code == 0 and json.loads(out)["count"] == 7 * 5


def test_points_box_mismatch(tmp_path, capsys):
    path = _write(tmp_path, "c.txt", "x - y^2\n")
    code, _, err = run(["points", "--poly", path, "--box", "1,2,3"], capsys)
    assert code == 2 and err.startswith("error[usage]:")


@pytest.mark.parametrize("box", ["0,5", "5", "a,b"])
def test_points_bad_box(box, tmp_path, capsys):
    path = _write(tmp_path, "c.txt", "x - y^2\n")
    assert run(["points", "--poly", path, "--box", box], capsys)[0] == 2


def test_points_budget(tmp_path, capsys):
    path = _write(tmp_path, "c.txt", "x - y^2\n")
    code, _, err = run(["points", "--poly", path, "--box", "1000000,5", "--budget", "10"], capsys)
    assert code == 1 and err.startswith("error[budget]:")


def test_points_non_monic_surface_is_domain_error(tmp_path, capsys):
    path = _write(tmp_path, "s.txt", "variables: d, e, y\n2*y^2 - d - e\n")
    code, _, err = run(["points", "--poly", path, "--box", "2,2,2"], capsys)
    assert code == 1 and err.startswith("error[domain]:")


# ---------------------------------------------------------------- general

def test_no_command_is_usage_error(capsys):
    assert run([], capsys)[0] == 2


def test_help_exits_zero(capsys):
    assert run(["--help"], capsys)[0] == 0


def test_console_entry_point_exit_code():
    proc = subprocess.run([sys.executable, "-m", "galoiscensus.cli", "classify", "--coeffs", "1,2"],
                          capture_output=True, text=True)
    assert proc.returncode == 2 and proc.stderr.startswith("error[usage]:")
