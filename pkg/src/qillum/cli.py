"""Command-line interface: every computation as a subcommand emitting CSV or JSON."""
from __future__ import annotations

import argparse
import json
import math
import sys

import numpy as np

from . import bounds, feasibility, gaussian, montecarlo, receivers, roc

SCHEMA_VERSION = 1


def _add_scenario_flags(p: argparse.ArgumentParser):
    p.add_argument("--ns", type=float, required=True, help="mean signal photons per mode")
    p.add_argument("--nb", type=float, required=True, help="mean background photons per mode")
    p.add_argument("--kappa", type=float, required=True, help="round-trip transmissivity")


def _add_m_grid_flags(p: argparse.ArgumentParser):
    p.add_argument("--m-min", type=float, default=1e2)
    p.add_argument("--m-max", type=float, default=1e8)
    p.add_argument("--m-points", type=int, default=200)


def _add_output_flags(p: argparse.ArgumentParser):
    p.add_argument("-o", "--output", default=None, help="output path (default stdout)")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="qillum",
        description="Gaussian quantum-illumination curves and simulations",
    )
    parser.add_argument("--config", default=None, help="JSON file of flag defaults (flags win)")
    sub = parser.add_subparsers(dest="subcommand", required=True)

    p = sub.add_parser("bounds", help="error-probability bounds over an M grid")
    _add_scenario_flags(p)
    _add_m_grid_flags(p)
    _add_output_flags(p)

    p = sub.add_parser("opa", help="CS/OPA/QI error probabilities over an M grid")
    _add_scenario_flags(p)
    _add_m_grid_flags(p)
    p.add_argument("--gain", type=float, default=None, help="OPA gain (default: optimal rule)")
    _add_output_flags(p)

    p = sub.add_parser("roc", help="ROC curves for the three receivers")
    _add_scenario_flags(p)
    p.add_argument("--m", type=int, required=True, help="number of mode pairs")
    p.add_argument("--gain", type=float, default=None)
    _add_output_flags(p)

    p = sub.add_parser("snr", help="detection probability vs SNR at fixed false alarm")
    p.add_argument("--pf", type=float, required=True)
    p.add_argument("--snr-db-min", type=float, default=-10.0)
    p.add_argument("--snr-db-max", type=float, default=20.0)
    p.add_argument("--points", type=int, default=301)
    _add_output_flags(p)

    p = sub.add_parser("wigner", help="Wigner / marginal density grid as CSV")
    p.add_argument("--state", choices=["coherent", "thermal", "tmsv"], required=True)
    p.add_argument("--alpha-re", type=float, default=0.0)
    p.add_argument("--alpha-im", type=float, default=0.0)
    p.add_argument("--nph", type=float, default=1.0, help="mean photons (thermal/tmsv)")
    p.add_argument("--axes", default=None, help="comma-separated quadrature indices, e.g. 0,2")
    p.add_argument("--half-range", type=float, default=None)
    p.add_argument("--points", type=int, default=101)
    _add_output_flags(p)

    p = sub.add_parser("montecarlo", help="seeded Monte Carlo error estimate as JSON")
    _add_scenario_flags(p)
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--receiver", choices=["homodyne", "opa"], required=True)
    p.add_argument("--trials", type=int, default=100000)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--gain", type=float, default=None)
    _add_output_flags(p)

    p = sub.add_parser("feasibility", help="time-bandwidth and pulse-power report as JSON")
    p.add_argument("--freq-hz", type=float, required=True)
    p.add_argument("--bandwidth-hz", type=float, required=True)
    p.add_argument("--ns", type=float, required=True)
    p.add_argument("--m", type=float, required=True, help="target time-bandwidth product")
    _add_output_flags(p)

    return parser


def _emit(text: str, path: str | None):
    if path is None:
        sys.stdout.write(text)
    else:
        with open(path, "w") as fh:
            fh.write(text)


def _csv(header: list[str], columns: list[np.ndarray], sig: int = 9) -> str:
    rows = [",".join(header)]
    fmt = f"%.{sig}g"
    for row in zip(*columns):
        rows.append(",".join(fmt % v for v in row))
    return "\n".join(rows) + "\n"


def _scenario(args, m: int) -> gaussian.IlluminationScenario:
    return gaussian.IlluminationScenario(args.ns, args.nb, args.kappa, m)


def _m_grid(args) -> np.ndarray:
    if args.m_min <= 0 or args.m_max < args.m_min or args.m_points < 2:
        raise ValueError("invalid M grid")
    grid = np.logspace(math.log10(args.m_min), math.log10(args.m_max), args.m_points)
    return np.unique(np.maximum(1, np.round(grid).astype(int)))


def _cmd_bounds(args) -> int:
    ms = _m_grid(args)
    cs_u, cs_l, qi_u = [], [], []
    for m in ms:
        sc = _scenario(args, int(m))
        cs_u.append(bounds.cs_chernoff_bound(sc).p_e)
        cs_l.append(bounds.classical_lower_bound(sc).p_e)
        qi_u.append(bounds.qi_upper_bound(sc).p_e)
    _emit(
        _csv(
            ["M", "pe_cs_upper", "pe_cs_lower", "pe_qi_upper"],
            [ms.astype(float), np.array(cs_u), np.array(cs_l), np.array(qi_u)],
        ),
        args.output,
    )
    return 0


def _cmd_opa(args) -> int:
    ms = _m_grid(args)
    pe_cs, pe_opa, pe_qi = [], [], []
    for m in ms:
        sc = _scenario(args, int(m))
        gain = args.gain if args.gain is not None else receivers.optimal_gain(sc)
        pe_cs.append(receivers.homodyne_error_probability(receivers.homodyne_model(sc)).p_e)
        pe_opa.append(receivers.opa_error_bound(receivers.opa_model(sc, gain)).p_e)
        pe_qi.append(bounds.qi_upper_bound(sc).p_e)
    _emit(
        _csv(
            ["M", "pe_cs", "pe_opa", "pe_qi"],
            [ms.astype(float), np.array(pe_cs), np.array(pe_opa), np.array(pe_qi)],
        ),
        args.output,
    )
    return 0


def _cmd_roc(args) -> int:
    sc = _scenario(args, args.m)
    gain = args.gain if args.gain is not None else receivers.optimal_gain(sc)
    ci = roc.roc_ci_homodyne(sc)
    opa = roc.roc_opa_at(receivers.opa_model(sc, gain), ci.pf)
    ff = roc.roc_ffsfg(sc)
    _emit(_csv(["pf", "pd_ci", "pd_opa", "pd_ffsfg"], [ci.pf, ci.pd, opa, ff.pd]), args.output)
    return 0


def _cmd_snr(args) -> int:
    if not (0.0 < args.pf < 1.0):
        raise ValueError("--pf must lie in (0, 1)")
    snr_db = np.linspace(args.snr_db_min, args.snr_db_max, args.points)
    snr = 10.0 ** (snr_db / 10.0)
    pd_ci = roc.pd_vs_snr(roc.GENERATOR_CI, args.pf, snr)
    pd_qi = roc.pd_vs_snr(roc.GENERATOR_FFSFG, args.pf, snr)
    _emit(_csv(["snr_db", "pd_ci", "pd_qi"], [snr_db, pd_ci, pd_qi]), args.output)
    return 0


def _cmd_wigner(args) -> int:
    if args.state == "coherent":
        state = gaussian.coherent_state(complex(args.alpha_re, args.alpha_im))
    elif args.state == "thermal":
        state = gaussian.thermal_state(args.nph)
    else:
        state = gaussian.tmsv_state(args.nph)
    if args.axes is not None:
        axes = tuple(int(v) for v in args.axes.split(","))
        if len(axes) != 2:
            raise ValueError("--axes must name exactly two quadrature indices")
    else:
        axes = (0, 2) if state.num_modes == 2 else (0, 1)
    x, y, w = gaussian.wigner_grid(state, axes, args.half_range, args.points)
    names = ["x", "p"] if state.num_modes == 1 and axes == (0, 1) else [
        f"{'qp'[i % 2]}{i // 2 + 1}" for i in axes
    ]
    _emit(_csv(names + ["w"], [x, y, w], sig=6), args.output)
    return 0


def _cmd_montecarlo(args) -> int:
    sc = _scenario(args, args.m)
    if args.receiver == "homodyne":
        model = receivers.homodyne_model(sc)
        batch = montecarlo.run_homodyne_trials(model, args.trials, args.seed)
        analytic = receivers.homodyne_error_probability(model).p_e
    else:
        gain = args.gain if args.gain is not None else receivers.optimal_gain(sc)
        model = receivers.opa_model(sc, gain)
        batch = montecarlo.run_opa_trials(model, args.trials, args.seed)
        analytic = receivers.opa_error_bound(model).p_e
    report = {
        "schema_version": SCHEMA_VERSION,
        "receiver": args.receiver,
        "seed": batch.seed,
        "trials": batch.trials,
        "counts": {
            "correct_reject": batch.correct_reject,
            "false_alarm": batch.false_alarm,
            "detect": batch.detect,
            "miss": batch.miss,
        },
        "estimates": {"p_f": batch.p_f, "p_d": batch.p_d, "p_e": batch.p_e},
        "standard_errors": {
            "p_f": batch.p_f_stderr,
            "p_d": batch.p_d_stderr,
            "p_e": batch.p_e_stderr,
        },
        "analytic_reference_p_e": analytic,
    }
    _emit(json.dumps(report, indent=2) + "\n", args.output)
    return 0


def _cmd_feasibility(args) -> int:
    duration = args.m / args.bandwidth_hz
    params = feasibility.FeasibilityParams(args.freq_hz, args.bandwidth_hz, duration, args.ns)
    power = feasibility.pulse_power(params)
    report = {
        "schema_version": SCHEMA_VERSION,
        "T_s": duration,
        "M": feasibility.time_bandwidth(params),
        "power_W": power,
        "power_W_plain_frequency": feasibility.pulse_power(params, angular=False),
        "power_ratio_to_mW_dB": 10.0 * math.log10(power / 1e-3),
    }
    _emit(json.dumps(report, indent=2) + "\n", args.output)
    return 0


_COMMANDS = {
    "bounds": _cmd_bounds,
    "opa": _cmd_opa,
    "roc": _cmd_roc,
    "snr": _cmd_snr,
    "wigner": _cmd_wigner,
    "montecarlo": _cmd_montecarlo,
    "feasibility": _cmd_feasibility,
}


def _apply_config(args: argparse.Namespace, argv: list[str]):
    if not args.config:
        return
    with open(args.config) as fh:
        config = json.load(fh)
    for key, value in config.items():
        attr = key.replace("-", "_")
        if not hasattr(args, attr):
            raise ValueError(f"unknown config key {key!r}")
        if f"--{key.replace('_', '-')}" in argv:
            continue  # explicit flag wins
        setattr(args, attr, value)


def run(argv: list[str] | None = None) -> int:
    argv = list(sys.argv[1:] if argv is None else argv)
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        _apply_config(args, argv)
        return _COMMANDS[args.subcommand](args)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (OSError, ArithmeticError, np.linalg.LinAlgError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
