"""Command-line interface: simulate, design, optimize, info.

Every command that writes files also writes a JSON manifest next to them
(command echo, full parameter set, seed, tool version, output paths), and all
numeric output uses 17 significant digits, so re-running the echoed command
reproduces the files byte for byte.  Exit codes: 0 success, 2 argument
problems, 3 integration failure.
"""
from __future__ import annotations

import argparse
import json
import math
import sys
from concurrent.futures import ThreadPoolExecutor
from pathlib import Path

import numpy as np

from . import __version__
from .analytic import (
    DesignRequest,
    LeakageReport,
    design_frequency,
    leakage_at_peak,
    populations_from_action,
)
from .core import (
    Cosine,
    PulseSpec,
    Trajectory,
    TwoLevelAtom,
    pulse_from_dict,
    pulse_to_dict,
)
from .hydrogen import (
    dipole_2s2p,
    ev_to_hartree,
    field_for_transfer,
    hartree_to_ev,
    hydrogen_atom,
    lamb_shift,
    next_level_gap,
    validity_report,
    wavelength_to_omega,
    z_matrix_element,
)
from .integrator import (
    IntegrationConfig,
    IntegrationError,
    integrate,
    natural_period,
    populated_window,
    step_halving_error,
)
from .pulses import OptimizerConfig, ShapingObjective, run_optimizer

TRAJECTORY_HEADER = "t,P1,P2,re_a1,im_a1,re_a2,im_a2"


def _fmt(x: float) -> str:
    return format(float(x), ".17g")


def _write_manifest(out_path: Path, args: argparse.Namespace, outputs: list[str]) -> Path:
    manifest_path = out_path.with_suffix(".manifest.json")
    params = {
        k: v for k, v in sorted(vars(args).items())
        if k != "func" and not k.startswith("_")
    }
    manifest = {
        "command": ["twolevel"] + list(getattr(args, "_argv", [])),
        "parameters": params,
        "seed": params.get("seed"),
        "version": __version__,
        "outputs": outputs,
    }
    manifest_path.write_text(json.dumps(manifest, indent=2, sort_keys=True) + "\n")
    return manifest_path


def _write_trajectory_csv(path: Path, traj: Trajectory, analytic_pulse: PulseSpec | None) -> None:
    header = TRAJECTORY_HEADER
    if analytic_pulse is not None:
        header += ",P1_analytic,P2_analytic"
    lines = [header]
    p1 = traj.p1
    p2 = traj.p2
    for i, t in enumerate(traj.times):
        row = [
            _fmt(t),
            _fmt(p1[i]),
            _fmt(p2[i]),
            _fmt(traj.a1[i].real),
            _fmt(traj.a1[i].imag),
            _fmt(traj.a2[i].real),
            _fmt(traj.a2[i].imag),
        ]
        if analytic_pulse is not None:
            ap1, ap2 = populations_from_action(analytic_pulse, float(t))
            row.append(_fmt(ap1))
            row.append(_fmt(ap2))
        lines.append(",".join(row))
    path.write_text("\n".join(lines) + "\n")


def _energy_in_au(value: float, use_ev: bool) -> float:
    return ev_to_hartree(value) if use_ev else value


def _wavelength_in_m(value: float, args: argparse.Namespace) -> float:
    if args.um:
        return value * 1e-6
    if args.cm:
        return value * 1e-2
    return value


# --- simulate ----------------------------------------------------------------

def _resolve_pulse(args: argparse.Namespace, parser: argparse.ArgumentParser,
                   omega21: float) -> PulseSpec:
    if args.pulse_json is not None:
        try:
            data = json.loads(Path(args.pulse_json).read_text())
            return pulse_from_dict(data)
        except (OSError, ValueError) as exc:
            parser.error(f"cannot load pulse JSON: {exc}")
    if args.chi is not None or args.omega is not None:
        if args.chi is None or args.omega is None:
            parser.error("--chi and --omega must be given together")
        return Cosine(
            chi=_energy_in_au(args.chi, args.ev),
            omega=_energy_in_au(args.omega, args.ev),
        )
    if args.ratio is not None:
        omega = args.ratio * omega21
        if omega <= 0.0:
            parser.error("--ratio needs a positive omega21")
        return Cosine(chi=0.5 * math.pi * omega, omega=omega)
    if args.wavelength is not None:
        omega = wavelength_to_omega(_wavelength_in_m(args.wavelength, args))
        return Cosine(chi=0.5 * math.pi * omega, omega=omega)
    parser.error("give a pulse: --pulse-json, --chi/--omega, --ratio, or --wavelength")


def cmd_simulate(args: argparse.Namespace, parser: argparse.ArgumentParser) -> int:
    omega21 = _energy_in_au(args.omega21, args.ev) if args.omega21 is not None else lamb_shift()
    if omega21 < 0.0:
        parser.error("--omega21 must be >= 0")
    atom = TwoLevelAtom(omega21=omega21, dipole_projection=dipole_2s2p())
    out_path = Path(args.out)

    if args.sweep is not None:
        try:
            ratios = [float(r) for r in args.sweep.split(",") if r.strip()]
        except ValueError:
            parser.error("--sweep expects a comma-separated list of ratios")
        if not ratios or omega21 <= 0.0:
            parser.error("--sweep needs at least one ratio and a positive omega21")
        jobs = []
        for ratio in ratios:
            omega = ratio * omega21
            pulse = Cosine(chi=0.5 * math.pi * omega, omega=omega)
            cfg = _grid_config(args, pulse, parser)
            jobs.append((ratio, pulse, cfg))
        # Integrations run concurrently; a single writer emits all files after
        # every worker has finished.
        with ThreadPoolExecutor(max_workers=min(8, len(jobs))) as pool:
            trajs = list(pool.map(lambda job: integrate(atom, job[1], job[2]), jobs))
        outputs = []
        for (ratio, pulse, _), traj in zip(jobs, trajs):
            path = out_path.with_name(f"{out_path.stem}_ratio{ratio:g}{out_path.suffix}")
            _write_trajectory_csv(path, traj, pulse if args.analytic else None)
            outputs.append(str(path))
        manifest = _write_manifest(out_path, args, outputs)
        print(f"wrote {len(outputs)} trajectories and {manifest}")
        return 0

    pulse = _resolve_pulse(args, parser, omega21)
    cfg = _grid_config(args, pulse, parser)
    traj = integrate(atom, pulse, cfg)
    _write_trajectory_csv(out_path, traj, pulse if args.analytic else None)
    manifest = _write_manifest(out_path, args, [str(out_path)])
    if args.error_estimate:
        estimate = step_halving_error(atom, pulse, cfg)
        print(f"step-halving error estimate = {_fmt(estimate)}")
    print(f"wrote {out_path} ({len(traj)} rows) and {manifest}")
    return 0


def _grid_config(args: argparse.Namespace, pulse: PulseSpec,
                 parser: argparse.ArgumentParser) -> IntegrationConfig:
    t_start = args.start
    t_end = t_start + args.periods * natural_period(pulse)
    try:
        return IntegrationConfig(
            t_start=t_start,
            t_end=t_end,
            step=args.step,
            steps_per_period=args.steps_per_period,
        )
    except ValueError as exc:
        parser.error(str(exc))


# --- design ------------------------------------------------------------------

def cmd_design(args: argparse.Namespace, parser: argparse.ArgumentParser) -> int:
    try:
        request = DesignRequest(t_s=args.ts, p_cr=args.pcr)
    except ValueError as exc:
        parser.error(str(exc))
    omega = design_frequency(request)
    regime = field_for_transfer(omega)
    report = validity_report(omega)
    print(f"omega      = {_fmt(omega)} a.u. ({_fmt(hartree_to_ev(omega))} eV)")
    print(f"wavelength = {_fmt(regime.wavelength_m)} m")
    print(f"E0         = {_fmt(regime.e0)} a.u.")
    print(f"intensity  = {_fmt(regime.intensity_w_cm2)} W/cm^2")
    print(f"leakage bound (series) = {_fmt(report.leakage_bound)}")
    print(f"verdict: {report.verdict}")
    if args.verify:
        atom = hydrogen_atom()
        pulse = Cosine(chi=0.5 * math.pi * omega, omega=omega)
        period = natural_period(pulse)
        cfg = IntegrationConfig(0.0, period, steps_per_period=args.steps_per_period)
        traj = integrate(atom, pulse, cfg)
        t_peak = 0.25 * period
        i_peak = int(np.argmin(np.abs(traj.times - t_peak)))
        measured_leak = float(1.0 - traj.p2[i_peak])
        leak_report = LeakageReport(
            omega=omega,
            omega21=atom.omega21,
            predicted_leakage=leakage_at_peak(atom.omega21, omega),
            measured_leakage=min(max(measured_leak, 0.0), 1.0),
            peak_time=t_peak,
        )
        try:
            measured_ts = populated_window(traj, request.p_cr)
        except ValueError as exc:
            print(f"verify: {exc}")
            return 0
        print(f"measured T_s = {_fmt(measured_ts)} a.u. "
              f"({_fmt(measured_ts / request.t_s)} of requested)")
        print(f"measured peak leakage = {_fmt(leak_report.measured_leakage)} "
              f"(series bound {_fmt(leak_report.predicted_leakage)})")
    return 0


# --- optimize ----------------------------------------------------------------

def cmd_optimize(args: argparse.Namespace, parser: argparse.ArgumentParser) -> int:
    omega = _energy_in_au(args.omega, args.ev)
    omega21 = _energy_in_au(args.omega21, args.ev) if args.omega21 is not None else lamb_shift()
    try:
        objective = ShapingObjective(
            p_cr=args.pcr,
            omega=omega,
            atom=TwoLevelAtom(omega21=omega21, dipole_projection=dipole_2s2p()),
            horizon=args.horizon,
        )
        config = OptimizerConfig(
            population_size=args.population,
            generations=args.generations,
            mutation_scale=args.mutation_scale,
            seed=args.seed,
            n_harmonics=args.n_harmonics,
        )
    except ValueError as exc:
        parser.error(str(exc))
    result = run_optimizer(objective, config)

    prefix = Path(args.out)
    pulse_path = prefix.with_name(prefix.name + "_pulse.json")
    history_path = prefix.with_name(prefix.name + "_history.csv")
    summary = {
        "best_pulse": pulse_to_dict(result.best_pulse),
        "achieved_T_s": result.best_window,
        "fitness_history": list(result.history),
        "seed": config.seed,
        "config": {
            "population_size": config.population_size,
            "generations": config.generations,
            "mutation_scale": config.mutation_scale,
            "n_harmonics": config.n_harmonics,
        },
        "objective": {
            "p_cr": objective.p_cr,
            "omega": objective.omega,
            "omega21": objective.atom.omega21,
            "horizon": objective.horizon,
        },
    }
    pulse_path.write_text(json.dumps(summary, indent=2, sort_keys=True) + "\n")
    history_lines = ["generation,best_T_s"]
    history_lines += [f"{i},{_fmt(v)}" for i, v in enumerate(result.history)]
    history_path.write_text("\n".join(history_lines) + "\n")
    manifest = _write_manifest(prefix.with_suffix(".json"), args,
                               [str(pulse_path), str(history_path)])
    print(f"best T_s = {_fmt(result.best_window)} a.u.")
    print(f"wrote {pulse_path}, {history_path} and {manifest}")
    return 0


# --- info --------------------------------------------------------------------

def cmd_info(args: argparse.Namespace, parser: argparse.ArgumentParser) -> int:
    shift = lamb_shift()
    gap = next_level_gap()
    dipole = dipole_2s2p()
    print("hydrogen 2s-2p parameters (atomic units unless noted)")
    print(f"  splitting (Lamb shift)  = {_fmt(shift)} a.u. = {_fmt(hartree_to_ev(shift))} eV")
    print(f"  gap to next level (3p)  = {_fmt(gap)} a.u. = {_fmt(hartree_to_ev(gap))} eV")
    print(f"  dipole <2s|z|2p0>       = {_fmt(dipole)} a.u. (|d| = {abs(dipole):.6f})")
    print(f"  <2s|z|2s> (selection)   = {_fmt(z_matrix_element('2s', '2s'))} a.u.")
    print(f"  valid drive window      = [{_fmt(10 * shift)}, {_fmt(gap / 10)}] a.u.")
    for label, wavelength in (("3 um", 3e-6), ("3 cm", 3e-2)):
        regime = field_for_transfer(wavelength_to_omega(wavelength))
        print(f"  at {label}: E0 = {_fmt(regime.e0)} a.u., "
              f"intensity = {_fmt(regime.intensity_w_cm2)} W/cm^2")
    return 0


# --- parser ------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="twolevel",
        description="Two-level population transfer: simulate, design, optimize, info.",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    sim = sub.add_parser("simulate", help="integrate the amplitude equations, write CSV")
    sim.add_argument("--omega21", type=float, default=None,
                     help="level splitting in a.u. (default: hydrogen Lamb shift)")
    sim.add_argument("--chi", type=float, default=None, help="Rabi frequency in a.u.")
    sim.add_argument("--omega", type=float, default=None, help="drive frequency in a.u.")
    sim.add_argument("--ratio", type=float, default=None,
                     help="omega/omega21; implies chi = (pi/2) omega")
    sim.add_argument("--wavelength", type=float, default=None,
                     help="drive wavelength (meters unless --um/--cm)")
    sim.add_argument("--pulse-json", default=None, help="path to a pulse JSON file")
    sim.add_argument("--periods", type=float, default=1.0, help="number of pulse periods")
    sim.add_argument("--start", type=float, default=0.0, help="start time in a.u.")
    sim.add_argument("--steps-per-period", type=int, default=1000)
    sim.add_argument("--step", type=float, default=None, help="explicit RK4 step in a.u.")
    sim.add_argument("--analytic", action="store_true",
                     help="append degenerate-limit reference populations")
    sim.add_argument("--error-estimate", action="store_true",
                     help="report the step-halving grid-error estimate")
    sim.add_argument("--sweep", default=None,
                     help="comma-separated omega/omega21 ratios; one CSV per ratio")
    sim.add_argument("--ev", action="store_true", help="energy inputs are in eV")
    sim.add_argument("--um", action="store_true", help="--wavelength is in micrometers")
    sim.add_argument("--cm", action="store_true", help="--wavelength is in centimeters")
    sim.add_argument("--out", default="trajectory.csv", help="output CSV path")
    sim.set_defaults(func=cmd_simulate)

    des = sub.add_parser("design", help="choose a drive frequency for a duration/leakage budget")
    des.add_argument("--ts", type=float, required=True, help="requested window width in a.u.")
    des.add_argument("--pcr", type=float, required=True, help="leakage budget in (0, 1)")
    des.add_argument("--verify", action="store_true",
                     help="integrate the designed drive and report the measured window")
    des.add_argument("--steps-per-period", type=int, default=1000)
    des.set_defaults(func=cmd_design)

    opt = sub.add_parser("optimize", help="GA search for a wider flat-top pulse")
    opt.add_argument("--pcr", type=float, required=True, help="leakage budget in (0, 1)")
    opt.add_argument("--omega", type=float, default=1.0, help="base frequency in a.u.")
    opt.add_argument("--omega21", type=float, default=None,
                     help="level splitting in a.u. (default: hydrogen Lamb shift)")
    opt.add_argument("--horizon", type=float, default=1.0, help="periods to simulate")
    opt.add_argument("--n-harmonics", type=int, default=2)
    opt.add_argument("--population", type=int, default=16)
    opt.add_argument("--generations", type=int, default=20)
    opt.add_argument("--mutation-scale", type=float, default=0.2)
    opt.add_argument("--seed", type=int, default=0)
    opt.add_argument("--ev", action="store_true", help="energy inputs are in eV")
    opt.add_argument("--out", default="optimize", help="output file prefix")
    opt.set_defaults(func=cmd_optimize)

    inf = sub.add_parser("info", help="print hydrogen constants and field regimes")
    inf.set_defaults(func=cmd_info)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    effective_argv = list(sys.argv[1:]) if argv is None else list(argv)
    args = parser.parse_args(effective_argv)
    args._argv = effective_argv
    try:
        return args.func(args, parser)
    except IntegrationError as exc:
        print(f"integration failed: {exc}", file=sys.stderr)
        return 3


if __name__ == "__main__":
    sys.exit(main())
