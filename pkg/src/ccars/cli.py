"""Command-line front end writing CSV artifacts with a parameter header.

Every output starts with a ``# params:`` block of ``# key = value`` lines
holding all resolved parameters, followed by one ``# generated:``
timestamp line. Feeding such a file back through ``--config`` reproduces
the data byte for byte.
"""

from __future__ import annotations

import argparse
import csv
import datetime as _dt
import io
import math
import sys
from dataclasses import dataclass
from typing import Any, Callable, Optional

import numpy as np

from . import dressed as _dressed
from .errors import CCARSError, IntegrationDivergedError, InvalidParameterError, ScanAbortedError
from .hamiltonian import CanonicalSetup
from .propagator import default_grid, propagate
from .pulse import ChirpSchedule, PulseParams, Role, wigner_grid
from .scan import ScanAxis, scan_delta_chirp, scan_rabi_chirp

__all__ = ["main", "run", "RunConfig", "ConfigError", "DEFAULTS", "emit_figure_recipes", "parse_config"]

SUBCOMMANDS = ("simulate", "scan-rabi-chirp", "scan-delta-chirp", "wigner", "dressed")
EXIT_OK, EXIT_CONFIG, EXIT_NUMERIC = 0, 2, 3


class ConfigError(CCARSError, ValueError):
    """Malformed or inconsistent run configuration."""


@dataclass(frozen=True)
class Param:
    default: Any
    parse: Callable[[str], Any]
    help: str
    choices: Optional[tuple] = None


def _float(text):
    value = float(text)
    if not math.isfinite(value):
        raise ValueError("must be finite")
    return value


_MODE_CHOICES = ("ccars", "constant_opposite", "constant")

DEFAULTS: dict[str, Param] = {
    "model": Param(2, int, "2 = super-effective two-level, 4 = exact four-level", (2, 4)),
    "method": Param("expm", str, "time stepper", ("expm", "rk4")),
    "steps": Param(40_000, int, "uniform time steps over the window"),
    "omega3_peak": Param(5.0, _float, "transform-limited peak effective coupling [w21]"),
    "tau0": Param(10.0, _float, "transform-limited duration [1/w21]"),
    "chirp": Param(-7.5, _float, "dimensionless Stokes spectral chirp alpha_s'/tau0^2"),
    "delta": Param(0.0, _float, "two-photon detuning [w21]"),
    "delta_s": Param(1.0, _float, "Stokes-side one-photon detuning [w21]"),
    "delta_as": Param(1.0, _float, "anti-Stokes-side one-photon detuning [w21]"),
    "schedule": Param("ccars", str, "chirp schedule", _MODE_CHOICES),
    "window": Param(5.0, _float, "half-width of the time window in chirped durations"),
    "stride": Param(10, int, "write every stride-th time sample (last sample always written)"),
    "rabi_min": Param(0.5, _float, "peak-coupling axis start"),
    "rabi_max": Param(10.0, _float, "peak-coupling axis end"),
    "rabi_n": Param(61, int, "peak-coupling axis points"),
    "chirp_min": Param(-10.0, _float, "chirp axis start"),
    "chirp_max": Param(10.0, _float, "chirp axis end"),
    "chirp_n": Param(81, int, "chirp axis points"),
    "delta_min": Param(-0.4, _float, "detuning axis start"),
    "delta_max": Param(0.4, _float, "detuning axis end"),
    "delta_n": Param(81, int, "detuning axis points"),
    "role": Param("stokes", str, "pulse for the Wigner map", ("pump", "stokes", "probe")),
    "omega_p": Param(4.0, _float, "pump carrier [w21]"),
    "omega_s": Param(3.0, _float, "Stokes carrier [w21]"),
    "omega_pr": Param(4.0, _float, "probe carrier [w21]"),
    "wigner_tau": Param(3.0, _float, "chirped duration used in the Wigner map [1/w21]"),
    "wigner_alpha_s": Param(-0.2, _float, "temporal Stokes chirp for the Wigner map [w21^2]"),
    "wigner_t_center": Param(7.5, _float, "pulse centre for the Wigner map [1/w21]"),
    "t_min": Param(0.0, _float, "Wigner time axis start"),
    "t_max": Param(15.0, _float, "Wigner time axis end"),
    "t_n": Param(151, int, "Wigner time axis points"),
    "omega_min": Param(0.0, _float, "Wigner frequency axis start"),
    "omega_max": Param(8.0, _float, "Wigner frequency axis end"),
    "omega_n": Param(401, int, "Wigner frequency axis points"),
}

_COMMON = ("model", "method", "steps", "tau0", "delta_s", "delta_as", "schedule", "window")
_SCAN_CHIRP = ("chirp_min", "chirp_max", "chirp_n")
RELEVANT = {
    "simulate": _COMMON + ("omega3_peak", "chirp", "delta", "stride"),
    "dressed": ("model", "steps", "tau0", "delta_s", "delta_as", "schedule", "window",
                "omega3_peak", "chirp", "delta", "stride"),
    "scan-rabi-chirp": _COMMON + ("delta", "rabi_min", "rabi_max", "rabi_n") + _SCAN_CHIRP,
    "scan-delta-chirp": _COMMON + ("omega3_peak", "delta_min", "delta_max", "delta_n") + _SCAN_CHIRP,
    "wigner": ("schedule", "role", "omega_p", "omega_s", "omega_pr", "wigner_tau", "wigner_alpha_s",
               "wigner_t_center", "t_min", "t_max", "t_n", "omega_min", "omega_max", "omega_n"),
}


@dataclass
class RunConfig:
    subcommand: str
    params: dict
    out: Optional[str] = None

    def get(self, key):
        return self.params[key]


def _coerce(key: str, raw, where: str = ""):
    if key not in DEFAULTS:
        raise ConfigError(f"{where}unknown parameter {key!r}")
    spec = DEFAULTS[key]
    try:
        value = spec.parse(str(raw).strip())
    except ValueError as exc:
        raise ConfigError(f"{where}bad value {raw!r} for {key}: {exc}") from None
    if spec.choices is not None and value not in spec.choices:
        raise ConfigError(f"{where}{key} must be one of {', '.join(map(str, spec.choices))}, got {raw!r}")
    return value


def parse_config(text: str, source: str = "<config>") -> dict:
    """Parse ``key = value`` lines.

    Blank lines and ``#`` comments are skipped. A file whose first line is
    ``# params:`` is treated as a CSV artifact and only its leading comment
    block is read.
    """
    lines = text.splitlines()
    artifact = bool(lines) and lines[0].strip() == "# params:"
    out: dict = {}
    for lineno, line in enumerate(lines, 1):
        stripped = line.strip()
        if artifact:
            if not stripped.startswith("#"):
                break
            stripped = stripped.lstrip("#").strip()
            if "=" not in stripped:
                continue
        elif not stripped or stripped.startswith("#"):
            continue
        where = f"{source}:{lineno}: "
        if "=" not in stripped:
            raise ConfigError(f"{where}expected 'key = value', got {line!r}")
        key, _, value = stripped.partition("=")
        key = key.strip()
        if key == "subcommand":
            if value.strip() not in SUBCOMMANDS:
                raise ConfigError(f"{where}unknown subcommand {value.strip()!r}")
            out[key] = value.strip()
        else:
            out[key] = _coerce(key, value, where)
    return out


def _format(value) -> str:
    if isinstance(value, float):
        return repr(value)
    return str(value)


def _header(cfg: RunConfig) -> list[str]:
    lines = ["# params:", f"# subcommand = {cfg.subcommand}"]
    lines += [f"# {k} = {_format(cfg.params[k])}" for k in RELEVANT[cfg.subcommand]]
    stamp = _dt.datetime.now(_dt.timezone.utc).isoformat(timespec="seconds")
    lines.append(f"# generated: {stamp}")
    return lines


def _setup(cfg: RunConfig) -> CanonicalSetup:
    p = cfg.params
    if p["steps"] < 2 or p["stride"] < 1:
        raise ConfigError("steps must be >= 2 and stride >= 1")
    setup = CanonicalSetup(
        omega3_peak=p["omega3_peak"], tau0=p["tau0"], chirp=p["chirp"], delta=p["delta"],
        delta_s=p["delta_s"], delta_as=p["delta_as"], mode=p["schedule"],
        model=p["model"], window=p["window"],
        omega_p=p["omega_p"], omega_s=p["omega_s"], omega_pr=p["omega_pr"],
    )
    setup.spec(warn=False)
    return setup


def _method(cfg):
    return "expm_midpoint" if cfg.params["method"] == "expm" else "rk4"


def _strided(n: int, stride: int) -> np.ndarray:
    idx = np.arange(0, n, stride)
    if idx[-1] != n - 1:
        idx = np.append(idx, n - 1)
    return idx


def _simulate(cfg, w):
    setup = _setup(cfg)
    spec = setup.spec(warn=False)
    traj = propagate(spec, method=_method(cfg), n_steps=cfg.params["steps"])
    pops = traj.populations
    cols = ["t"] + [f"rho{i}{i}" for i in range(1, traj.dim + 1)] + ["coh_mag", "coh_phase"]
    w.writerow(cols)
    mag, phase = traj.coherence_mag, traj.coherence_phase
    for k in _strided(len(traj), cfg.params["stride"]):
        w.writerow([repr(float(traj.times[k]))] + [repr(float(x)) for x in pops[k]]
                   + [repr(float(mag[k])), repr(float(phase[k]))])


def _dressed_cmd(cfg, w):
    if cfg.params["model"] != 2:
        raise ConfigError("dressed analysis is defined for the two-level model (model = 2)")
    spec = _setup(cfg).spec(warn=False)
    times = default_grid(spec, cfg.params["steps"]).times()
    times = times[_strided(len(times), cfg.params["stride"])]
    d = _dressed.analyze(spec, times)
    w.writerow(["t", "E1", "E2", "lambda1", "lambda2", "theta", "theta_dot"])
    for row in zip(d.t, d.e1, d.e2, d.lambda1, d.lambda2, d.theta, d.theta_dot):
        w.writerow([repr(float(x)) for x in row])


def _axis(cfg, name, prefix):
    p = cfg.params
    try:
        return ScanAxis(name, p[f"{prefix}_min"], p[f"{prefix}_max"], p[f"{prefix}_n"])
    except InvalidParameterError as exc:
        raise ConfigError(str(exc)) from None


def _write_scan(res, names, w):
    w.writerow(list(names) + ["coherence"])
    for i, a in enumerate(res.axis1.values()):
        for j, b in enumerate(res.axis2.values()):
            w.writerow([repr(float(a)), repr(float(b)), repr(float(res.values[i, j]))])


def _scan_rabi(cfg, w):
    setup = _setup(cfg)
    res = scan_rabi_chirp(setup, _axis(cfg, "omega3_peak", "rabi"), _axis(cfg, "chirp_dimensionless", "chirp"),
                          method=_method(cfg), n_steps=cfg.params["steps"])
    _write_scan(res, ("omega3_peak", "chirp"), w)


def _scan_delta(cfg, w):
    setup = _setup(cfg)
    res = scan_delta_chirp(setup, _axis(cfg, "delta", "delta"), _axis(cfg, "chirp_dimensionless", "chirp"),
                           method=_method(cfg), n_steps=cfg.params["steps"])
    _write_scan(res, ("delta", "chirp"), w)


def wigner_pulses(params: dict):
    """Pump, Stokes and probe pulses plus schedule for the Wigner map."""
    tau, tc = params["wigner_tau"], params["wigner_t_center"]
    if not tau > 0:
        raise ConfigError("wigner_tau must be positive")
    sched = ChirpSchedule.from_temporal(params["schedule"], params["wigner_alpha_s"], tau, tc)
    amp = {"pump": 1.0, "stokes": 1.0 / math.sqrt(2), "probe": 1.0 / math.sqrt(2)}
    carrier = {"pump": params["omega_p"], "stokes": params["omega_s"], "probe": params["omega_pr"]}
    pulses = {
        r: PulseParams.from_chirped(Role(r), carrier[r], amp[r], tau, params["wigner_alpha_s"], tc)
        for r in amp
    }
    return pulses, sched


def _wigner(cfg, w):
    p = cfg.params
    if p["t_n"] < 1 or p["omega_n"] < 1:
        raise ConfigError("t_n and omega_n must be >= 1")
    pulses, sched = wigner_pulses(p)
    times = np.linspace(p["t_min"], p["t_max"], p["t_n"])
    omegas = np.linspace(p["omega_min"], p["omega_max"], p["omega_n"])
    grid = wigner_grid(pulses[p["role"]], times, omegas, sched)
    w.writerow(["t", "omega", "value"])
    for i, t in enumerate(times):
        for j, om in enumerate(omegas):
            w.writerow([repr(float(t)), repr(float(om)), repr(float(grid[i, j]))])


_DISPATCH = {
    "simulate": _simulate,
    "dressed": _dressed_cmd,
    "scan-rabi-chirp": _scan_rabi,
    "scan-delta-chirp": _scan_delta,
    "wigner": _wigner,
}


def run(cfg: RunConfig, stdout=None) -> int:
    """Execute ``cfg``; returns the exit status."""
    stdout = stdout if stdout is not None else sys.stdout
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    try:
        _DISPATCH[cfg.subcommand](cfg, w)
    except (IntegrationDivergedError, ScanAbortedError) as exc:
        print(f"error: numerical failure: {exc}", file=sys.stderr)
        return EXIT_NUMERIC
    except (ConfigError, InvalidParameterError, ArithmeticError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CONFIG
    text = "\n".join(_header(cfg)) + "\n" + buf.getvalue()
    if cfg.out:
        with open(cfg.out, "w", newline="\n", encoding="utf-8") as fh:
            fh.write(text)
    else:
        stdout.write(text)
    return EXIT_OK


def show_defaults() -> str:
    width = max(map(len, DEFAULTS))
    rows = []
    for key, p in DEFAULTS.items():
        choice = f" [{'|'.join(map(str, p.choices))}]" if p.choices else ""
        rows.append(f"{key:<{width}} = {_format(p.default):<10} # {p.help}{choice}")
    return "\n".join(rows) + "\n"


_FIG4 = "--set omega3_peak=5.0 --set tau0=10 --set delta_s=1.0 --set delta_as=1.0 --set chirp=-7.5"
_FIG7 = "--set omega3_peak=0.18 --set tau0=25 --set chirp=-0.8"
_FIG8 = "--set omega3_peak=1.6 --set tau0=4.66"


def emit_figure_recipes() -> str:
    """Ready-to-run command lines for the reference figure set (Figs. 3 to 8)."""
    fig3 = ("--set omega_p=4.0 --set omega_s=3.0 --set omega_pr=4.0 --set wigner_tau=3.0 "
            "--set wigner_alpha_s=-0.2 --set wigner_t_center=7.5")
    lines = ["# Fig. 3: Wigner maps of pump, Stokes and probe"]
    lines += [f"ccars wigner {fig3} --set role={r} --out fig3_{r}.csv" for r in ("pump", "stokes", "probe")]
    lines.append("# Fig. 4: populations and coherence, C-CARS (a, b) and constant opposite chirps (c, d)")
    for tag, sched, delta in (("a", "ccars", "0.0"), ("b", "ccars", "0.1"),
                              ("c", "constant_opposite", "0.0"), ("d", "constant_opposite", "0.1")):
        lines.append(f"ccars simulate {_FIG4} --set schedule={sched} --set delta={delta} --out fig4{tag}.csv")
    lines.append("# Fig. 5: coherence over peak coupling and chirp, two-level (a, b) and four-level (c, d)")
    for tag, model, delta in (("a", 2, "0.0"), ("b", 2, "0.1"), ("c", 4, "0.0"), ("d", 4, "0.1")):
        lines.append(f"ccars scan-rabi-chirp --model {model} --set tau0=10 --set delta_s=1.0 "
                     f"--set delta_as=1.0 --set delta={delta} --out fig5{tag}.csv")
    lines.append("# Fig. 6: bare and dressed energies with the non-adiabatic parameter")
    for tag, sched, delta in (("a", "ccars", "0.0"), ("b", "ccars", "0.1"),
                              ("c", "constant_opposite", "0.0"), ("d", "constant_opposite", "0.1")):
        lines.append(f"ccars dressed {_FIG4} --set schedule={sched} --set delta={delta} --out fig6{tag}.csv")
    lines.append("# Fig. 7: weak coupling, energies (a, c) and dynamics (b, d)")
    for tag, delta in (("0", "0.0"), ("01", "0.1")):
        lines.append(f"ccars dressed {_FIG7} --set delta={delta} --out fig7_dressed_delta{tag}.csv")
        lines.append(f"ccars simulate {_FIG7} --set delta={delta} --out fig7_dynamics_delta{tag}.csv")
    lines.append("# Fig. 8: coherence over two-photon detuning and chirp")
    lines.append(f"ccars scan-delta-chirp {_FIG8} --out fig8.csv")
    return "\n".join(lines) + "\n"


def _parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="ccars",
        description="Chirped-pulse CARS control simulator: writes CSV data for dynamics, scans, "
                    "dressed-state analysis and Wigner maps.",
    )
    ap.add_argument("subcommand", nargs="?", choices=SUBCOMMANDS)
    ap.add_argument("--config", metavar="PATH", help="key = value file (or a previous CSV output)")
    ap.add_argument("--out", metavar="PATH", help="output CSV (default: stdout)")
    ap.add_argument("--model", choices=("2", "4"))
    ap.add_argument("--method", choices=("expm", "rk4"))
    ap.add_argument("--steps", metavar="N")
    ap.add_argument("--set", metavar="KEY=VALUE", action="append", default=[], dest="overrides")
    ap.add_argument("--show-defaults", action="store_true", help="print the default parameter table")
    ap.add_argument("--recipes", action="store_true", help="print command lines for each figure")
    return ap


def build_config(args) -> RunConfig:
    params = {k: p.default for k, p in DEFAULTS.items()}
    subcommand = None
    if args.config:
        try:
            with open(args.config, encoding="utf-8") as fh:
                text = fh.read()
        except OSError as exc:
            raise ConfigError(f"cannot read config: {exc}") from None
        loaded = parse_config(text, args.config)
        subcommand = loaded.pop("subcommand", None)
        params.update(loaded)
    for item in args.overrides:
        key, sep, value = item.partition("=")
        if not sep:
            raise ConfigError(f"--set expects KEY=VALUE, got {item!r}")
        params[key.strip()] = _coerce(key.strip(), value, "--set: ")
    for key in ("model", "method", "steps"):
        value = getattr(args, key)
        if value is not None:
            params[key] = _coerce(key, value, f"--{key}: ")
    subcommand = args.subcommand or subcommand
    if subcommand is None:
        raise ConfigError("no subcommand given")
    return RunConfig(subcommand, params, args.out)


def main(argv=None) -> int:
    ap = _parser()
    args = ap.parse_args(argv)
    if args.show_defaults:
        sys.stdout.write(show_defaults())
        return EXIT_OK
    if args.recipes:
        sys.stdout.write(emit_figure_recipes())
        return EXIT_OK
    try:
        cfg = build_config(args)
    except ConfigError as exc:
        ap.print_usage(sys.stderr)
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CONFIG
    return run(cfg)


if __name__ == "__main__":
    sys.exit(main())
