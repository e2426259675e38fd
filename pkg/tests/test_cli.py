import csv
import json
import os
import subprocess
import sys

import pytest

from mahler_lab import catalog
from mahler_lab.cli import main

PHI = 1.618033988749895
THREE = {"a": "3", "b": "0", "D": 1, "approx": 3.0}


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_list(capsys):
    code, out, _ = run(capsys, "list")
    assert code == 0
    assert "stern" in out.split() and "dilcher-stolarsky" in out.split()


def test_analyze_stern_json(capsys):
    code, out, _ = run(capsys, "analyze", "stern", "--json")
    assert code == 0
    a = json.loads(out)["analysis"]
    assert a["characteristic_polynomial"]["eigenvalue"] == THREE
    assert a["growth"]["alpha"] == THREE
    assert a["growth"]["m"] == 0
    assert a["growth"]["exponent"] == pytest.approx(1.584962500721156, abs=1e-12)
    assert abs(a["radial_fit"]["lambda_estimate"] - 3) < 1e-2
    assert a["consistency"]["match"] == "exact"
    assert not a["errors"] and not a["flags"]


def test_analyze_text(capsys):
    code, out, _ = run(capsys, "analyze", "baum-sweet")
    assert code == 0
    assert "characteristic polynomial: x^2 - x - 1" in out
    assert "eigenvalue status: exists" in out
    assert "eigenvalue vs alpha: exact" in out


def test_analyze_geometric_is_flagged(capsys):
    code, out, _ = run(capsys, "analyze", "geometric", "--json")
    assert code == 0
    assert "eigenvalue multiplicatively dependent with k" in json.loads(out)["analysis"]["flags"]


def test_analyze_thue_morse_notes(capsys):
    code, out, _ = run(capsys, "analyze", "thue-morse", "--json")
    assert code == 0
    a = json.loads(out)["analysis"]
    assert a["characteristic_polynomial"]["eigenvalue_status"] == "degenerate-zero"
    assert a["radial_fit"] is None and a["growth"] is None
    assert any("not applicable" in n for n in a["notes"])


def test_analyze_ambiguous_entry(capsys):
    code, out, _ = run(capsys, "analyze", "dilcher-stolarsky-k2", "--json")
    assert code == 0
    a = json.loads(out)["analysis"]
    assert a["characteristic_polynomial"]["eigenvalue_status"] == "ambiguous"
    assert a["radial_fit"]["lambda_estimate"] == pytest.approx(PHI, abs=1e-6)


def test_independence_stern_and_baum_sweet(capsys):
    code, out, _ = run(capsys, "independence", "stern", "baum-sweet")
    assert code == 0
    r = json.loads(out)
    assert r["theorem"] == "main" and r["hypothesis_tier"] == "quadratic"
    assert r["verdict"] == "independent (hypothesis numerically certified, exactness caveat recorded)"
    assert r["H"] == 50


def test_independence_stern_alone(capsys):
    code, out, _ = run(capsys, "independence", "stern", "--H", "10")
    r = json.loads(out)
    assert code == 0 and r["status"] == "independent" and r["hypothesis_tier"] == "exact"


def test_independence_without_hypothesis(capsys):
    code, _, err = run(capsys, "independence", "thue-morse")
    assert code == 3 and "HypothesisUnavailable" in err


@pytest.mark.parametrize("argv", [
    ["analyze", "no-such-entry"],
    ["analyze", "cyclotomic:3:3"],
    ["analyze", "cyclotomic:9"],
])
def test_invalid_input_exit_code(capsys, argv):
    code, _, err = run(capsys, *argv)
    assert code == 2 and "invalid input" in err


@pytest.mark.parametrize("z0", ["2", "0", "abc"])
def test_bad_z0_rejected(capsys, z0):
    with pytest.raises(SystemExit) as info:
        main(["analyze", "stern", "--z0", z0])
    assert info.value.code == 2


def test_precision_from_environment(capsys, monkeypatch):
    monkeypatch.setenv("MAHLER_LAB_PRECISION", "40")
    code, out, _ = run(capsys, "analyze", "stern", "--json")
    assert code == 0 and json.loads(out)["config"]["precision"] == 40
    monkeypatch.setenv("MAHLER_LAB_PRECISION", "10")
    assert run(capsys, "analyze", "stern")[0] == 2
    monkeypatch.setenv("MAHLER_LAB_PRECISION", "lots")
    assert run(capsys, "analyze", "stern")[0] == 2


def test_equation_file_input(capsys, tmp_path):
    path = tmp_path / "stern_eq.json"
    path.write_text(json.dumps(catalog.get("stern").mahler_equation.to_json()))
    code, out, _ = run(capsys, "analyze", str(path), "--json")
    assert code == 0
    assert json.loads(out)["analysis"]["characteristic_polynomial"]["eigenvalue"] == THREE


def test_representation_file_input(capsys, tmp_path):
    path = tmp_path / "rep.json"
    path.write_text(json.dumps(catalog.get("baum-sweet").representation.to_json()))
    code, out, _ = run(capsys, "analyze", str(path), "--json")
    assert code == 0
    assert json.loads(out)["analysis"]["growth"]["m"] == 0


def test_bad_file_input(capsys, tmp_path):
    path = tmp_path / "bad.json"
    path.write_text('{"k": 2}')
    assert run(capsys, "analyze", str(path))[0] == 2
    path.write_text("not json")
    assert run(capsys, "analyze", str(path))[0] == 2


def test_analyze_writes_artifacts(capsys, tmp_path):
    code, _, _ = run(capsys, "analyze", "stern", "--out", str(tmp_path))
    assert code == 0
    assert json.loads((tmp_path / "stern.json").read_text())["analysis"]["name"] == "stern"
    assert (tmp_path / "stern.txt").read_text().startswith("== stern")


def _read_csv(path):
    with open(path) as fh:
        lines = [line for line in fh if not line.startswith("#")]
    rows = list(csv.reader(lines))
    return rows[0], rows[1:]


def test_figure_stern_values(capsys, tmp_path):
    code, _, _ = run(capsys, "figure", "stern-values", "--out", str(tmp_path))
    assert code == 0
    header, rows = _read_csv(tmp_path / "stern-values.csv")
    assert header == ["n", "s(n)"] and len(rows) == 2**15 + 1
    assert rows[0] == ["32768", "1"] and rows[-1] == ["65536", "1"]
    assert (tmp_path / "plot_csv.py").exists()


def test_figure_stern_weighted(capsys, tmp_path):
    code, _, _ = run(capsys, "figure", "stern-weighted", "--out", str(tmp_path))
    assert code == 0
    header, rows = _read_csv(tmp_path / "stern-weighted.csv")
    assert header == ["N", "weighted_sum"] and len(rows) == 2**15 + 1
    ws = [float(r[1]) for r in rows]
    assert 1 / 3 <= min(ws) and max(ws) <= 3
    summary = json.loads((tmp_path / "stern-weighted.summary.json").read_text())
    assert summary["octave_drift"] < 0.05


def test_figure_is_byte_identical_across_runs(capsys, tmp_path):
    a, b = tmp_path / "a", tmp_path / "b"
    run(capsys, "figure", "stern-weighted", "--out", str(a))
    run(capsys, "figure", "stern-weighted", "--out", str(b))
    assert (a / "stern-weighted.csv").read_bytes() == (b / "stern-weighted.csv").read_bytes()


def test_console_script_runs(tmp_path):
    env = dict(os.environ, MAHLER_LAB_PRECISION="30")
    out = subprocess.run([sys.executable, "-m", "mahler_lab.cli", "analyze", "stern"],
                         capture_output=True, text=True, env=env, cwd=tmp_path)
    assert out.returncode == 0
    assert "precision=30" in out.stdout
