import json
import os
import subprocess
import sys

import numpy as np
import pytest

from srgkit import __version__, docio
from srgkit import srgcore as sc
from srgkit.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


# ---- coeff


def test_coeff_half_half(capsys):
    code, out, _ = run(capsys, "coeff", "--theta1", "0.5", "--theta2", "0.5")
    assert code == 0
    assert out.splitlines()[0] == "0.666666666667"


def test_coeff_quarter_three_quarters(capsys):
    code, out, _ = run(capsys, "coeff", "--theta1", "0.25", "--theta2", "0.75")
    assert code == 0
    assert out.splitlines()[0] == "0.769230769231"
    assert out.splitlines()[1] == "disk center 0.230769230769 radius 0.769230769231"


def test_coeff_json(capsys):
    code, out, _ = run(capsys, "coeff", "--theta1", "0.5", "--theta2", "0.5", "--json")
    doc = json.loads(out)
    assert code == 0
    assert doc["theta"] == 2 / 3
    assert doc["disk"] == {"center": 1 - 2 / 3, "radius": 2 / 3}


@pytest.mark.parametrize("value", ["1.0", "0", "-0.5", "nan"])
def test_coeff_rejects_theta(capsys, value):
    code, out, err = run(capsys, "coeff", "--theta1", value, "--theta2", "0.5")
    assert code == 2
    assert out == ""
    assert "theta must lie in the open interval (0,1)" in err
    assert len(err.strip().splitlines()) == 1


# ---- region


def test_region_composition_cardioid(capsys):
    code, out, _ = run(capsys, "region", "--kind", "composition", "--theta1", "0.5", "--theta2", "0.5")
    assert code == 0
    doc = json.loads(out)
    assert doc["kind"] == "composition-oval"
    assert doc["parameters"] == {"theta1": 0.5, "theta2": 0.5}
    meta = doc["metadata"]
    assert meta["tool"] == {"name": "srgkit", "version": __version__}
    assert meta["resolution"] == 1024 and meta["max_abs_f2"] < 1e-8
    assert meta["tight_disk"]["theta"] == pytest.approx(2 / 3)
    poly = sc.Polyline(docio.pairs_to_points(doc["boundary"]), closed=True)
    assert sc.cardioid_hausdorff(poly, n=20_000) <= 1e-6


def test_region_dys(capsys):
    code, out, _ = run(capsys, "region", "--kind", "dys", "--beta", "1", "--gamma", "1.3", "--resolution", "256")
    doc = json.loads(out)
    assert code == 0 and doc["kind"] == "disk"
    assert doc["parameters"]["radius"] == pytest.approx(2 / 2.7, abs=1e-15)
    assert doc["parameters"]["center"] == pytest.approx(0.7 / 2.7, abs=1e-15)
    z = docio.pairs_to_points(doc["boundary"])
    assert np.abs(np.abs(z - 0.7 / 2.7) - 2 / 2.7).max() <= 1e-12


def test_region_disk(capsys):
    code, out, _ = run(capsys, "region", "--kind", "disk", "--theta", "0.25", "--resolution", "64")
    doc = json.loads(out)
    assert code == 0
    assert doc["parameters"] == {"theta": 0.25, "center": 0.75, "radius": 0.25}
    assert len(doc["boundary"]) == 64


def test_region_round_trip_bit_exact(tmp_path, capsys):
    path = tmp_path / "r.json"
    assert main(["region", "--kind", "composition", "--theta1", "0.3", "--theta2", "0.7",
                 "--resolution", "256", "--out", str(path)]) == 0
    z = docio.pairs_to_points(docio.read_json(path)["boundary"])
    again = sc.composition_region(0.3, 0.7, 256).boundary.vertices
    assert np.array_equal(z, again)


def test_region_deterministic_and_svg(tmp_path):
    outs = []
    for i in range(2):
        j, s = tmp_path / f"r{i}.json", tmp_path / f"r{i}.svg"
        assert main(["region", "--kind", "composition", "--theta1", "0.25", "--theta2", "0.75",
                     "--resolution", "256", "--out", str(j), "--svg", str(s)]) == 0
        outs.append((j.read_bytes(), s.read_bytes()))
    assert outs[0] == outs[1]
    svg = outs[0][1].decode()
    assert svg.startswith("<?xml")
    assert 'width="800" height="800"' in svg
    assert "stroke-dasharray" in svg and "<path" in svg
    assert f"<!-- srgkit {__version__} -->" in svg


def test_region_unwritable_path(capsys, tmp_path):
    bad = tmp_path / "missing" / "r.json"
    code, _, err = run(capsys, "region", "--kind", "disk", "--theta", "0.5", "--out", str(bad))
    assert code == 3 and err.startswith("error:")


def test_region_missing_parameter(capsys):
    code, _, err = run(capsys, "region", "--kind", "composition", "--theta1", "0.5")
    assert code == 2 and "--theta2" in err


# ---- verify


def test_verify_tightness(capsys):
    code, out, _ = run(capsys, "verify", "tightness", "--theta1", "0.5", "--theta2", "0.5", "--delta", "0.05")
    rep = json.loads(out)
    assert code == 0 and rep["pass"]
    w = [c for c in rep["checks"] if c["name"].startswith("witness")]
    assert len(w) == 1
    p = complex(*w[0]["witness"])
    assert sc.DiskRegion.averaged(0.95 * 2 / 3).signed_distance(p) > 0
    assert sc.product_contains(0.5, 0.5, p)


def test_verify_dys_bad_gamma(capsys):
    code, out, err = run(capsys, "verify", "dys", "--beta", "1", "--gamma", "2.5")
    assert code == 2 and out == ""
    assert "gamma" in err


def test_verify_failure_exit_code(capsys):
    # an unattainable coverage eps: exit 1, report still written
    code, out, _ = run(capsys, "verify", "composition", "--theta1", "0.25", "--theta2", "0.25",
                       "--n", "10", "--resolution", "128", "--probe", "16", "--eps", "1e-6")
    rep = json.loads(out)
    assert code == 1 and rep["pass"] is False
    names = {c["name"]: c["pass"] for c in rep["checks"]}
    assert names["containment"] and not names["coverage_gap"]


def test_verify_deterministic(capsys):
    args = ["verify", "dys", "--beta", "1", "--gamma", "1", "--n", "20000", "--seed", "5"]
    a = run(capsys, *args)
    b = run(capsys, *args)
    assert a[0] in (0, 1)
    assert a[1] == b[1]
    assert json.loads(a[1])["seed"] == 5


def test_verify_rates_small(capsys):
    code, out, _ = run(capsys, "verify", "rates", "--instances", "6", "--K", "200")
    rep = json.loads(out)
    assert code == 0 and rep["pass"]
    assert rep["tolerances"] == {"analytic": 1e-9, "mc": 1e-9}


# ---- iterate


def test_iterate_identity(capsys):
    code, out, err = run(capsys, "iterate", "--operator", "identity", "--K", "5", "--fp-tol", "-1")
    lines = out.splitlines()
    assert code == 0
    assert lines[0] == "k,x,y,residual,bound"
    assert len(lines) == 6
    assert all(row.split(",")[3] == "0.0" for row in lines[1:])
    assert "max_ratio 0" in err


def test_iterate_dys_zero_single_row(capsys):
    code, out, _ = run(capsys, "iterate", "--operator", "dys", "--beta", "1", "--gamma", "1")
    lines = out.splitlines()
    assert code == 0 and len(lines) == 2
    assert lines[1].split(",")[3] == "0.0"


def test_iterate_composition_csv(tmp_path, capsys):
    path = tmp_path / "t.csv"
    args = ["iterate", "--operator", "composition", "--theta1", "0.5", "--theta2", "0.5",
            "--K", "1000", "--x0", "1", "0.5", "--out", str(path)]
    assert main(args) == 0
    first = path.read_bytes()
    msg = capsys.readouterr().out
    assert main(args) == 0
    assert path.read_bytes() == first
    assert b"\r" not in first
    rows = np.loadtxt(path, delimiter=",", skiprows=1)
    assert np.all(rows[:, 3] <= rows[:, 4] * (1 + 1e-12))
    ratio, bound = float(msg.split()[1]), float(msg.split("=")[1].split(",")[0].strip(" )"))
    assert ratio <= bound * (1 + 1e-12)


def test_iterate_dys_rejects_non_monotone(capsys):
    code, _, err = run(capsys, "iterate", "--operator", "dys", "--beta", "1", "--gamma", "1", "--a", "-1", "0")
    assert code == 2 and "monotone" in err


def test_module_entry_point():
    env = dict(os.environ)
    res = subprocess.run([sys.executable, "-m", "srgkit", "coeff", "--theta1", "0.5", "--theta2", "0.5"],
                         capture_output=True, text=True, env=env)
    assert res.returncode == 0
    assert res.stdout.splitlines()[0] == "0.666666666667"
