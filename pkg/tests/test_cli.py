import csv
import json
import math

import numpy as np
import pytest

from homwalk.cli import main, parse_grid


def read_csv(path):
    with open(path) as fh:
        rows = list(csv.reader(fh))
    return rows[0], rows[1:]


def manifest_lines(path):
    return [json.loads(line) for line in path.read_text().splitlines()]


def test_parse_grid():
    np.testing.assert_allclose(parse_grid("0:1:5"), [0, 0.25, 0.5, 0.75, 1])
    np.testing.assert_allclose(parse_grid("0.1,0.3"), [0.1, 0.3])


def test_walk_files_and_manifest(tmp_path):
    out = tmp_path / "walk"
    assert main(["walk", "-S", "4", "-l", "2", "-r", "0.5", "--output", str(out)]) == 0
    header, rows = read_csv(tmp_path / "walk.csv")
    assert header == ["k", "Delta_k", "probability", "envelope"]
    probs = [float(r[2]) for r in rows]
    np.testing.assert_allclose(probs, [3 / 8, 0, 1 / 4, 0, 3 / 8], atol=1e-15)
    doc = json.loads((tmp_path / "walk.json").read_text())
    assert doc["columns"] == header and len(doc["rows"]) == 5
    assert doc["rows"][0][3] is None  # divergent envelope at the edge
    (m,) = manifest_lines(tmp_path / "manifest.jsonl")
    assert m["subcommand"] == "walk" and m["parameters"]["total_photons"] == 4
    assert m["outputs"] == [str(tmp_path / "walk.csv"), str(tmp_path / "walk.json")]
    # append-only
    main(["walk", "-S", "4", "-r", "0.0", "--output", str(out)])
    assert len(manifest_lines(tmp_path / "manifest.jsonl")) == 2


def test_walk_precision_and_stdout(capsys):
    assert main(["walk", "-S", "50", "-l", "25", "-r", "0.07"]) == 0
    header, *rows = capsys.readouterr().out.strip().splitlines()
    assert header == "k,Delta_k,probability"
    value = rows[3].split(",")[2]
    assert len(value.replace("0.", "", 1).lstrip("0").replace("e", " ").split()[0]) >= 12


def test_walk_identity(capsys):
    main(["walk", "-S", "50", "-l", "25", "-r", "0"])
    rows = capsys.readouterr().out.strip().splitlines()[1:]
    probs = np.array([float(r.split(",")[2]) for r in rows])
    assert probs[25] == 1.0 and probs.sum() == 1.0


def test_transfer_sweep(tmp_path):
    out = tmp_path / "t.csv"
    assert main(["transfer", "-S", "6", "--reflectivity-grid", "0:1:3", "-o", str(out)]) == 0
    header, rows = read_csv(out)
    assert header[:2] == ["r", "fidelity"] and len(header) == 9
    assert float(rows[-1][1]) == pytest.approx(1.0, abs=1e-12)
    assert float(rows[0][2]) == pytest.approx(1.0)
    assert main(["transfer", "-S", "6", "--random-state", "--seed", "3",
                 "--reflectivity-grid", "1", "-o", str(out)]) == 0
    assert float(read_csv(out)[1][0][1]) == pytest.approx(1.0, abs=1e-10)


def test_spectrum_generalized_and_ssh(tmp_path):
    out = tmp_path / "g"
    assert main(["spectrum", "--model", "generalized", "-S", "10", "-o", str(out)]) == 0
    doc = json.loads((tmp_path / "g.json").read_text())
    assert doc["mode"]["kind"] == "zero"
    w = [row[1] for row in doc["rows"]]
    np.testing.assert_allclose(w, np.arange(11) - 5, atol=1e-10)
    out = tmp_path / "s"
    assert main(["spectrum", "--model", "ssh", "-S", "51", "--delta", "0.005", "-o", str(out)]) == 0
    doc = json.loads((tmp_path / "s.json").read_text())
    assert doc["mode"]["kind"] == "near-zero"
    assert len(doc["rows"]) == 52


def test_variance_sweep(tmp_path):
    out = tmp_path / "v"
    assert main(["variance", "-S", "10", "--position", "4", "--theta-grid", "0:3.14159:5",
                 "-o", str(out)]) == 0
    header, rows = read_csv(tmp_path / "v.csv")
    assert header == ["theta", "r", "variance_exact", "variance_approx", "variance_empirical"]
    assert float(rows[0][2]) == 0.0
    for row in rows:
        assert float(row[2]) == pytest.approx(float(row[4]), abs=1e-9)


def test_decohere_sweep(tmp_path):
    out = tmp_path / "d"
    grid = f"0,{math.pi / 2}"
    assert main(["decohere", "-S", "8", "-l", "0", "--y-grid", grid, "-o", str(out)]) == 0
    header, rows = read_csv(tmp_path / "d.csv")
    assert header == ["y", "k", "probability"] and len(rows) == 18


def test_classify(tmp_path, capsys):
    assert main(["classify", "--model", "generalized", "-S", "5"]) == 0
    assert json.loads(capsys.readouterr().out)["az_class"] == "BDI"
    assert main(["classify", "--model", "generalized", "-S", "5", "--diagonal-noise", "0.1"]) == 0
    assert json.loads(capsys.readouterr().out)["az_class"] == "AI"
    assert main(["classify", "--model", "single-site", "-o", str(tmp_path / "c")]) == 0
    doc = json.loads((tmp_path / "c.json").read_text())
    assert doc["az_class"] == "BDI" and doc["manifest"]["subcommand"] == "classify"


def test_experiment(tmp_path):
    cfg = tmp_path / "exp.cfg"
    cfg.write_text("transmission = 1\ndetector_efficiency = 1\nheralded_events = 5000\n")
    out = tmp_path / "e"
    assert main(["experiment", "--config", str(cfg), "--seed", "7", "-o", str(out)]) == 0
    header, rows = read_csv(tmp_path / "e.csv")
    assert header == ["k_a", "k_b", "count", "probability", "error"]
    assert sum(int(r[2]) for r in rows) == 5000
    doc = json.loads((tmp_path / "e.json").read_text())
    assert doc["manifest"]["seed"] == 7 and doc["config"]["rng_seed"] == 7


@pytest.mark.parametrize("argv", [
    ["walk", "-S", "4", "-l", "5", "-r", "0.5"],
    ["walk", "-S", "4", "-r", "1.5"],
    ["spectrum", "--model", "ssh", "-S", "4", "--delta", "1.0"],
    ["decohere", "-S", "4", "--y-grid", "3"],
])
def test_errors_exit_nonzero(argv, capsys):
    assert main(argv) == 1
    assert "error" in capsys.readouterr().err


def test_zero_pulses_is_an_error(tmp_path, capsys):
    cfg = tmp_path / "z.cfg"
    cfg.write_text("pulses = 0\n")
    assert main(["experiment", "--config", str(cfg)]) == 1
    assert "pulses" in capsys.readouterr().err


def test_missing_config(tmp_path):
    assert main(["experiment", "--config", str(tmp_path / "nope.cfg")]) == 1
