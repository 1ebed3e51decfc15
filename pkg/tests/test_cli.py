import csv

import numpy as np
import pytest

from ccars.cli import DEFAULTS, ConfigError, emit_figure_recipes, main, parse_config

FIG4 = ["--set", "omega3_peak=5.0", "--set", "tau0=10", "--set", "delta_s=1.0", "--set", "delta_as=1.0",
        "--set", "chirp=-7.5"]


def read_csv(path):
    lines = path.read_text().splitlines()
    header = [ln for ln in lines if ln.startswith("#")]
    rows = list(csv.reader(ln for ln in lines if not ln.startswith("#")))
    return header, rows[0], np.array(rows[1:], dtype=float)


def test_simulate_fig4a(tmp_path):
    out = tmp_path / "a.csv"
    assert main(["simulate", *FIG4, "--out", str(out)]) == 0
    header, cols, data = read_csv(out)
    assert cols == ["t", "rho11", "rho22", "coh_mag", "coh_phase"]
    assert data[-1, cols.index("coh_mag")] >= 0.49
    assert header[0] == "# params:" and header[-1].startswith("# generated: ")
    assert "# steps = 40000" in header and "# chirp = -7.5" in header
    assert b"\r" not in out.read_bytes()


def test_simulate_four_level_columns(tmp_path):
    out = tmp_path / "b.csv"
    assert main(["simulate", "--model", "4", "--steps", "2000", "--out", str(out)]) == 0
    _, cols, data = read_csv(out)
    assert cols[:5] == ["t", "rho11", "rho22", "rho33", "rho44"]
    np.testing.assert_allclose(data[:, 1:5].sum(axis=1), 1.0, atol=1e-9)


def test_wigner_stokes_ridge(tmp_path):
    out = tmp_path / "w.csv"
    assert main(["wigner", "--set", "role=stokes", "--out", str(out)]) == 0
    _, cols, data = read_csv(out)
    t = np.unique(data[:, 0])
    om = np.unique(data[:, 1])
    grid = data[:, 2].reshape(len(t), len(om))
    ridge = om[np.argmax(grid, axis=1)]
    slope, icpt = np.polyfit(t - 7.5, ridge, 1)
    assert slope == pytest.approx(-0.2, rel=0.02)
    assert icpt == pytest.approx(3.0, abs=om[1] - om[0])


def test_dressed_columns(tmp_path):
    out = tmp_path / "d.csv"
    assert main(["dressed", *FIG4, "--set", "delta=0.1", "--steps", "4000", "--out", str(out)]) == 0
    _, cols, data = read_csv(out)
    assert cols == ["t", "E1", "E2", "lambda1", "lambda2", "theta", "theta_dot"]
    assert np.all(data[:, 3] <= data[:, 4])


def test_dressed_rejects_four_level(capsys):
    assert main(["dressed", "--model", "4"]) == 2
    assert "two-level" in capsys.readouterr().err


def test_scan_output(tmp_path):
    out = tmp_path / "s.csv"
    args = ["scan-delta-chirp", "--steps", "2000", "--set", "delta_n=2", "--set", "chirp_n=3", "--out", str(out)]
    assert main(args) == 0
    header, cols, data = read_csv(out)
    assert cols == ["delta", "chirp", "coherence"]
    assert data.shape == (6, 3)
    assert "# omega3_peak = 5.0" in header and "# delta_n = 2" in header


@pytest.mark.parametrize("argv", [[], ["--set", "tau0=3"]])
def test_missing_subcommand(argv, capsys):
    assert main(argv) == 2
    assert "usage" in capsys.readouterr().err


def test_unknown_subcommand(capsys):
    with pytest.raises(SystemExit) as info:
        main(["frobnicate"])
    assert info.value.code == 2
    assert "usage" in capsys.readouterr().err


@pytest.mark.parametrize("item", ["nokey=1", "tau0=abc", "tau0", "model=3", "schedule=linear", "tau0=nan"])
def test_bad_overrides(item, capsys):
    assert main(["simulate", "--set", item]) == 2
    assert "error:" in capsys.readouterr().err


def test_invalid_physics_is_config_error(capsys):
    assert main(["simulate", "--set", "tau0=-1"]) == 2
    assert main(["simulate", "--set", "delta_s=0"]) == 2


def test_config_file_diagnostics(tmp_path, capsys):
    cfg = tmp_path / "c.txt"
    cfg.write_text("subcommand = simulate\n# comment\n\ntau0 = 10\nbogus line\n")
    assert main(["--config", str(cfg)]) == 2
    assert "c.txt:5" in capsys.readouterr().err
    with pytest.raises(ConfigError, match=":2: unknown parameter"):
        parse_config("tau0 = 1\nwhat = 2\n")


def test_round_trip_through_header(tmp_path):
    first = tmp_path / "first.csv"
    second = tmp_path / "second.csv"
    argv = ["simulate", "--set", "delta=0.1", "--set", "schedule=constant_opposite", "--steps", "3000",
            "--set", "stride=7", "--out", str(first)]
    assert main(argv) == 0
    assert main(["--config", str(first), "--out", str(second)]) == 0
    strip = lambda p: [ln for ln in p.read_text().splitlines() if not ln.startswith("# generated:")]  # noqa: E731
    assert strip(first) == strip(second)
    assert "# schedule = constant_opposite" in strip(first)


def test_precedence(tmp_path):
    cfg = tmp_path / "c.txt"
    cfg.write_text("subcommand = simulate\nsteps = 500\ntau0 = 5\n")
    out = tmp_path / "o.csv"
    assert main(["--config", str(cfg), "--set", "steps=600", "--steps", "700", "--set", "tau0=6",
                 "--out", str(out)]) == 0
    header, _, _ = read_csv(out)
    assert "# steps = 700" in header and "# tau0 = 6.0" in header


def test_show_defaults(capsys):
    assert main(["--show-defaults"]) == 0
    text = capsys.readouterr().out
    for key in DEFAULTS:
        assert text.count(f"\n{key} ") + text.startswith(f"{key} ") == 1


def test_recipes(capsys):
    assert main(["--recipes"]) == 0
    text = capsys.readouterr().out
    assert text == emit_figure_recipes()
    lines = text.splitlines()
    assert any(all(k in ln for k in ("omega3_peak=5.0", "tau0=10", "delta_s=1.0", "delta_as=1.0", "chirp=-7.5"))
               for ln in lines)
    assert any("omega3_peak=1.6" in ln and "tau0=4.66" in ln for ln in lines)
    assert any(all(k in ln for k in ("omega3_peak=0.18", "tau0=25", "chirp=-0.8")) for ln in lines)
    for fig in range(3, 9):
        assert f"# Fig. {fig}" in text
