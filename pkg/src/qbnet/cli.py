"""Command-line front end.

Subcommands: steady, evolve, power, gains, landscape, sweep, figure,
validate.  Topologies come from inline flags, from a ``--config`` JSON
file, or both (inline flags override config fields).  Tables go to
stdout or, with ``--out``, to CSV/JSON files.  Exit codes: 0 success,
2 configuration or usage error, 3 numerical failure (singular or
unstable system).  Diagnostics go to standard error.
"""

from __future__ import annotations

import argparse
import json
import sys

import numpy as np

from .config import (RunConfig, load_json, network_from_dict,
                     parse_run_config, run_config_to_dict, topology_from_dict)
from .errors import (ConfigError, NoSteadyStateError, QbnetError,
                     UnstableSystemError, ValidationError)
from .export import SweepTable, table_to_csv_text, write_table
from .figures import FIGURE_IDS, run_figure
from .network import TopologyParams, build_network, validate
from .observables import energy_curve, gain_report, max_power, power_curve, steady_energy
from .nonreciprocity import phase_landscape
from .sweep import run_sweep

EXIT_OK = 0
EXIT_USAGE = 2
EXIT_NUMERIC = 3


def _parse_complex(text: str) -> complex:
    try:
        return complex(text.replace(" ", ""))
    except ValueError:
        raise argparse.ArgumentTypeError(f"not a complex number: {text!r}")


def _parse_theta_list(text: str):
    try:
        return tuple(float(part) for part in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(f"not a comma-separated angle list: {text!r}")


def _add_topology_flags(parser: argparse.ArgumentParser):
    group = parser.add_argument_group("topology")
    group.add_argument("--family", choices=("cascaded", "parallel"))
    group.add_argument("--variant", choices=("r1", "r2", "nr", "custom"))
    group.add_argument("--n", type=int, help="battery count")
    group.add_argument("--gb", type=float, help="direct coupling strength g_b")
    group.add_argument("--gamma", type=float,
                       help="uniform decay rate for charger and batteries")
    group.add_argument("--gamma-c", type=float,
                       help="charger decay rate (overrides --gamma)")
    group.add_argument("--big-gamma", type=float,
                       help="intermediate-mode decay rate (default: --gamma)")
    group.add_argument("--xi", type=_parse_complex, help="drive amplitude")
    group.add_argument("--theta", type=_parse_theta_list,
                       help="comma-separated direct-coupling phases")


def _add_common_flags(parser: argparse.ArgumentParser, config=True):
    if config:
        parser.add_argument("--config", help="JSON config file")
    parser.add_argument("--out", help="output directory (default: print to stdout)")
    parser.add_argument("--format", choices=("csv", "json"), default="csv")
    parser.add_argument("--deterministic", action="store_true",
                        help="suppress the timestamp metadata line")


def _topology_from_args(args) -> TopologyParams:
    """Merge --config topology (if any) with inline flag overrides."""
    base = {}
    if getattr(args, "config", None):
        doc = load_json(args.config)
        if "topology" in doc:
            cfg = parse_run_config(doc)
            base = run_config_to_dict(cfg)["topology"]
        else:
            base = dict(doc)
    if args.family is not None:
        base["family"] = args.family
    if args.variant is not None:
        base["variant"] = args.variant
    if args.n is not None and base.get("n") != args.n:
        base["n"] = args.n
        # per-battery lists from the config no longer fit the new count
        gamma_b = base.get("gamma_b")
        if isinstance(gamma_b, list):
            if len(set(gamma_b)) == 1:
                base["gamma_b"] = gamma_b[0]
            else:
                raise ConfigError(
                    "cannot override n: config gamma_b is heterogeneous")
        thetas = base.get("thetas")
        if isinstance(thetas, list) and len(thetas) != args.n:
            if len(set(thetas)) == 1:
                base["thetas"] = [thetas[0]] * args.n
            else:
                raise ConfigError(
                    "cannot override n: config thetas length does not match")
    if args.gb is not None:
        base["g_b"] = args.gb
    if args.gamma is not None:
        base["gamma_b"] = args.gamma
        base.setdefault("gamma_c", args.gamma)
        base.setdefault("Gamma", args.gamma)
    if args.gamma_c is not None:
        base["gamma_c"] = args.gamma_c
    if args.big_gamma is not None:
        base["Gamma"] = args.big_gamma
    if args.xi is not None:
        base["xi"] = [args.xi.real, args.xi.imag]
    if args.theta is not None:
        base["thetas"] = list(args.theta)
    base.setdefault("variant", "nr")
    base.setdefault("xi", 1.0)
    missing = [k for k in ("family", "n", "g_b", "gamma_c", "gamma_b")
               if k not in base]
    if missing:
        raise ConfigError(
            "missing topology parameters: " + ", ".join(sorted(missing)))
    return topology_from_dict(base, "topology")


def _emit(table: SweepTable, args) -> None:
    if args.out:
        paths = write_table(table, args.out, args.format, args.deterministic)
        for path in paths:
            print(path)
    elif args.format == "json":
        doc = {"table": table.name,
               "metadata": {k: table.metadata[k] for k in sorted(table.metadata)},
               "columns": list(table.columns),
               "rows": [[float(v) for v in row] for row in table.rows]}
        print(json.dumps(doc, indent=2))
    else:
        sys.stdout.write(table_to_csv_text(table, deterministic=True))


def _time_grid(args) -> np.ndarray:
    if args.t_max <= 0:
        raise ConfigError(f"--t-max must be > 0, got {args.t_max}")
    if args.points < 2:
        raise ConfigError(f"--points must be >= 2, got {args.points}")
    if args.log_times:
        t_min = args.t_min if args.t_min > 0 else args.t_max / args.points
        return np.geomspace(t_min, args.t_max, args.points)
    return np.linspace(args.t_min, args.t_max, args.points)


# --- subcommand handlers ---------------------------------------------------

def _battery_number(target: str) -> float:
    """Battery index for table rows; the charger reports as 0."""
    if target.startswith("b_"):
        return float(target.split("_")[1])
    return 0.0


def _cmd_steady(args) -> int:
    params = _topology_from_args(args)
    targets = ([args.target] if args.target
               else [f"b_{k}" for k in range(1, params.n + 1)]
               if params.family == "parallel" else [f"b_{params.n}"])
    rows = []
    for target in targets:
        energy = steady_energy(params, target)
        rows.append((target, energy))
    if args.out or args.format == "json":
        table = SweepTable("steady", ("battery", "E_over_omega"),
                           [[_battery_number(t), e] for t, e in rows],
                           {"topology": json.dumps(run_config_to_dict(
                               RunConfig(params))["topology"], sort_keys=True)})
        _emit(table, args)
    else:
        for target, energy in rows:
            label = "" if len(rows) == 1 else f"[{target}]"
            print(f"E/omega{label} = {energy:.17g}")
    return EXIT_OK


def _cmd_evolve(args) -> int:
    params = _topology_from_args(args)
    times = _time_grid(args)
    target = args.target or f"b_{params.n}"
    curve = energy_curve(params, target, times)
    table = SweepTable("evolve", ("t", "E_over_omega"),
                       [[t, e] for t, e in zip(curve.times, curve.energy)],
                       {"target": target})
    _emit(table, args)
    return EXIT_OK


def _cmd_power(args) -> int:
    params = _topology_from_args(args)
    if args.t_min <= 0:
        args.t_min = args.t_max / args.points
    times = _time_grid(args)
    target = args.target or f"b_{params.n}"
    curve = power_curve(params, target, times)
    t_star, p_max = max_power(params, target)
    table = SweepTable("power", ("t", "P"),
                       [[t, p] for t, p in zip(curve.times, curve.power)],
                       {"target": target, "t_star": repr(t_star),
                        "p_max": repr(p_max)})
    _emit(table, args)
    return EXIT_OK


def _cmd_gains(args) -> int:
    params = _topology_from_args(args)
    report = gain_report(params, include_power=args.power)
    columns = ["battery", "E_nr", "E_r1", "E_r2", "G1", "G2"]
    if args.power:
        columns += ["P_max_nr", "P_max_r1", "P_max_r2", "eta1", "eta2"]
    rows, errors = [], []
    for i, target in enumerate(report.targets):
        row = [_battery_number(target), report.e_nr[i], report.e_r1[i],
               report.e_r2[i], report.g1[i], report.g2[i]]
        if args.power:
            row += [report.p_max_nr[i], report.p_max_r1[i], report.p_max_r2[i],
                    report.eta1[i], report.eta2[i]]
        if all(np.isfinite(v) for v in row):
            rows.append(row)
        else:
            errors.append((i, _battery_number(target), "undefined ratio"))
    metadata = {}
    if report.flags:
        metadata["undefined_ratios"] = "; ".join(report.flags)
    table = SweepTable("gains", tuple(columns), rows, metadata, errors)
    _emit(table, args)
    return EXIT_OK


def _cmd_landscape(args) -> int:
    params = _topology_from_args(args)
    target = args.target or f"b_{params.n}"
    scape = phase_landscape(params, target, grid_points=args.points)
    rows = []
    for combo in np.ndindex(scape.energy.shape):
        point = [scape.theta_grids[axis][i] for axis, i in enumerate(combo)]
        rows.append(point + [scape.energy[combo]])
    argmax = "; ".join(
        "(" + ", ".join(f"{t:.10g}" for t in peak) + ")"
        for peak in scape.argmax)
    columns = tuple(f"theta_{k}" for k in range(1, params.n + 1)) + ("E_over_omega",)
    table = SweepTable("landscape", columns, rows,
                       {"target": target, "argmax": argmax})
    _emit(table, args)
    return EXIT_OK


def _cmd_sweep(args) -> int:
    cfg = parse_run_config(load_json(args.config))
    if cfg.sweep is None:
        raise ConfigError("config.sweep: required for the sweep command")
    table = run_sweep(cfg)
    if args.out is None and cfg.out_dir is not None:
        args.out = cfg.out_dir
    _emit(table, args)
    return EXIT_OK


def _cmd_figure(args) -> int:
    out_dir = args.out or "."
    for path in run_figure(args.fig_id, out_dir, args.format, args.deterministic):
        print(path)
    return EXIT_OK


def _cmd_validate(args) -> int:
    doc = load_json(args.config)
    if "modes" in doc:
        spec = network_from_dict(doc)
        problems = validate(spec)
        if problems:
            for problem in problems:
                print(problem, file=sys.stderr)
            return EXIT_USAGE
    elif "topology" in doc:
        cfg = parse_run_config(doc)
        problems = validate(build_network(cfg.topology))
        if problems:
            for problem in problems:
                print(problem, file=sys.stderr)
            return EXIT_USAGE
    else:
        raise ConfigError("config: expected a 'modes' or 'topology' document")
    print("ok")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="qbnet",
        description="Steady states, charging dynamics and nonreciprocity "
                    "gains of driven-dissipative bosonic battery networks.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("steady", help="steady-state stored energy")
    _add_topology_flags(p)
    _add_common_flags(p)
    p.add_argument("--target", help="mode id (default: terminal battery)")
    p.set_defaults(handler=_cmd_steady)

    p = sub.add_parser("evolve", help="stored energy vs time from vacuum")
    _add_topology_flags(p)
    _add_common_flags(p)
    p.add_argument("--target")
    p.add_argument("--t-max", type=float, default=2000.0)
    p.add_argument("--t-min", type=float, default=0.0)
    p.add_argument("--points", type=int, default=2001)
    p.add_argument("--log-times", action="store_true")
    p.set_defaults(handler=_cmd_evolve)

    p = sub.add_parser("power", help="charging power curve and its maximum")
    _add_topology_flags(p)
    _add_common_flags(p)
    p.add_argument("--target")
    p.add_argument("--t-max", type=float, default=2000.0)
    p.add_argument("--t-min", type=float, default=0.0)
    p.add_argument("--points", type=int, default=1001)
    p.add_argument("--log-times", action="store_true")
    p.set_defaults(handler=_cmd_power)

    p = sub.add_parser("gains", help="r1/r2/nr energies and gain ratios")
    _add_topology_flags(p)
    _add_common_flags(p)
    p.add_argument("--power", action="store_true",
                   help="include maximum-power gains (slower)")
    p.set_defaults(handler=_cmd_gains)

    p = sub.add_parser("landscape", help="phase landscape of the target energy")
    _add_topology_flags(p)
    _add_common_flags(p)
    p.add_argument("--target")
    p.add_argument("--points", type=int, default=41, help="grid points per axis")
    p.set_defaults(handler=_cmd_landscape)

    p = sub.add_parser("sweep", help="run the sweep described by a config file")
    p.add_argument("--config", required=True)
    _add_common_flags(p, config=False)
    p.set_defaults(handler=_cmd_sweep)

    p = sub.add_parser("figure", help="reproduce a reference dataset")
    p.add_argument("fig_id", choices=FIGURE_IDS)
    _add_common_flags(p, config=False)
    p.set_defaults(handler=_cmd_figure)

    p = sub.add_parser("validate", help="validate a network or run config file")
    p.add_argument("--config", required=True)
    p.set_defaults(handler=_cmd_validate)

    return parser


def cli_main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code) if exc.code else EXIT_OK
    try:
        return args.handler(args)
    except (ConfigError, ValidationError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (NoSteadyStateError, UnstableSystemError) as exc:
        print(f"numeric error: {exc}", file=sys.stderr)
        return EXIT_NUMERIC
    except np.linalg.LinAlgError as exc:
        print(f"numeric error: {exc}", file=sys.stderr)
        return EXIT_NUMERIC
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except QbnetError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


def main() -> None:
    sys.exit(cli_main())
