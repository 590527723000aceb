"""Command-line interface: verbs, CSV sweeps, sidecar metadata, exit codes."""

import json

import numpy as np
import pytest

from symcorr.cli import SweepSpec, main, run_sweep


def read_csv(path):
    lines = path.read_text().splitlines()
    header = lines[0].split(",")
    rows = [[float(x) for x in line.split(",")] for line in lines[1:]]
    return header, rows


def test_single_thermo_global_discord_at_p0_one(capsys):
    code = main(["single", "thermo", "--n", "3", "--p0", "1.0", "--measure", "global_discord"])
    assert code == 0
    out = capsys.readouterr().out
    line = [l for l in out.splitlines() if l.startswith("global_discord")][0]
    assert float(line.split()[-1]) == pytest.approx(1.0, abs=1e-6)


def test_single_ghz_pd_svetlichny(capsys):
    code = main(
        ["single", "ghz_pd", "--n", "3", "--alpha1", "0.7071067811865476",
         "--gamma", "0", "--measure", "svetlichny"]
    )
    assert code == 0
    out = capsys.readouterr().out
    line = [l for l in out.splitlines() if l.startswith("svetlichny")][0]
    assert float(line.split()[-1]) == pytest.approx(np.sqrt(2), abs=1e-4)


def test_single_thermo_half_genuine_discord_zero(capsys):
    code = main(["single", "thermo", "--n", "4", "--p0", "0.5", "--measure", "genuine_discord"])
    assert code == 0
    out = capsys.readouterr().out
    line = [l for l in out.splitlines() if l.startswith("genuine_discord")][0]
    assert abs(float(line.split()[-1])) < 1e-9


def test_bounds_verb(capsys):
    assert main(["bounds", "--n", "4"]) == 0
    out = capsys.readouterr().out
    assert "quantum_max" in out
    assert "2.82842712475" in out
    assert "2" in out.splitlines()[-1]


def test_sweep_thermo_symmetric_and_zero_at_half(tmp_path):
    out = tmp_path / "sweep.csv"
    spec = SweepSpec(
        family="thermo", n=3, start=0.0, stop=1.0, steps=11,
        measures=("genuine_discord",),
    )
    run_sweep(spec, str(out))
    header, rows = read_csv(out)
    assert header == ["p0", "genuine_discord"]
    values = {round(r[0], 3): r[1] for r in rows}
    assert abs(values[0.5]) < 1e-9
    for p0 in (0.0, 0.1, 0.2, 0.3, 0.4):
        assert values[p0] == pytest.approx(values[round(1 - p0, 3)], abs=1e-9)


def test_sweep_ghz_ad_svetlichny_threshold(tmp_path):
    out = tmp_path / "ad.csv"
    code = main(
        ["sweep", "ghz_ad", "--n", "2", "--alpha1", "0.7071067811865476",
         "--start", "0", "--stop", "0.5", "--steps", "51",
         "--measure", "svetlichny", "--out", str(out)]
    )
    assert code == 0
    header, rows = read_csv(out)
    assert rows[0][1] == pytest.approx(np.sqrt(2), abs=1e-6)
    crossing = None
    for (l1, v1), (l2, v2) in zip(rows, rows[1:]):
        if v1 > 1.0 >= v2:
            crossing = l1 + (l2 - l1) * (v1 - 1.0) / (v1 - v2)
    assert crossing == pytest.approx(1 - 1 / np.sqrt(2), abs=1e-3)


def test_sweep_is_byte_stable(tmp_path):
    args = ["sweep", "thermo", "--n", "2", "--start", "0.2", "--stop", "0.8",
            "--steps", "5", "--measure", "global_discord", "--measure", "mutual_info",
            "--seed", "3"]
    out1, out2 = tmp_path / "a.csv", tmp_path / "b.csv"
    assert main(args + ["--out", str(out1)]) == 0
    assert main(args + ["--out", str(out2)]) == 0
    assert out1.read_bytes() == out2.read_bytes()
    meta1 = (tmp_path / "a.csv.meta.json").read_bytes()
    meta2 = (tmp_path / "b.csv.meta.json").read_bytes()
    assert meta1.replace(b"a.csv", b"") == meta2.replace(b"b.csv", b"")


def test_sidecar_metadata_contents(tmp_path):
    out = tmp_path / "meta.csv"
    assert main(
        ["sweep", "thermo", "--n", "3", "--start", "0.3", "--stop", "0.7", "--steps", "3",
         "--measure", "genuine_discord", "--measure", "global_discord", "--out", str(out)]
    ) == 0
    meta = json.loads((tmp_path / "meta.csv.meta.json").read_text())
    assert meta["family"] == "thermo"
    assert meta["n"] == 3
    assert meta["angle_unit"] == "radians"
    assert len(meta["points"]) == 3
    point = meta["points"][0]
    assert point["angles"]["global_discord"]["theta"] == pytest.approx(np.pi / 2, abs=1e-3)
    assert point["angles"]["genuine_discord"]["theta"] == pytest.approx(np.pi / 4, abs=1e-3)


def test_usage_errors_exit_2(capsys):
    assert main(["single", "thermo", "--n", "3", "--measure", "genuine_discord"]) == 2
    assert main(["single", "thermo", "--n", "3", "--p0", "2.0",
                 "--measure", "genuine_discord"]) == 2
    assert main(["single", "exotic", "--n", "3", "--measure", "genuine_discord"]) == 2
    assert main(["sweep", "thermo", "--n", "3", "--start", "0", "--stop", "1",
                 "--steps", "1", "--measure", "mutual_info", "--out", "x.csv"]) == 2
    capsys.readouterr()


def test_size_guard_exits_3(capsys):
    code = main(["single", "thermo", "--n", "8", "--p0", "0.7",
                 "--mode", "general", "--measure", "genuine_discord"])
    assert code == 3
    assert "cap" in capsys.readouterr().err


def test_fast_path_completes_at_eight_qubits(capsys):
    code = main(["single", "thermo", "--n", "8", "--p0", "0.7", "--measure", "svetlichny"])
    assert code == 0
    capsys.readouterr()


def test_io_error_exits_4(tmp_path, capsys):
    target = tmp_path / "missing" / "out.csv"
    code = main(["sweep", "thermo", "--n", "2", "--start", "0", "--stop", "1",
                 "--steps", "2", "--measure", "mutual_info", "--out", str(target)])
    assert code == 4
    capsys.readouterr()
