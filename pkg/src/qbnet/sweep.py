"""Parameter sweeps over topology scalars with per-point observables.

A sweep evaluates the requested observables at every grid value of one
variable.  Points that fail numerically (singular or unstable systems)
are recorded in the table's error list and skipped; the surviving rows
keep deterministic order.  Evaluation is parallel across points,
bounded by QBNET_THREADS.
"""

from __future__ import annotations

import dataclasses
import json

from ._threads import ordered_map
from .config import RunConfig, run_config_to_dict
from .errors import NoSteadyStateError, UnstableSystemError
from .export import SweepTable
from .network import TopologyParams
from .observables import gain_report, max_power, steady_energy


def apply_sweep_value(params: TopologyParams, variable: str, value,
                      index: int | None = None) -> TopologyParams:
    """Return params with one swept variable replaced by ``value``."""
    if variable == "g_b":
        return dataclasses.replace(params, g_b=float(value))
    if variable == "gamma":
        v = float(value)
        return dataclasses.replace(params, gamma_c=v, gamma_b=(v,) * params.n)
    if variable == "gamma_c":
        return dataclasses.replace(params, gamma_c=float(value))
    if variable == "Gamma":
        return dataclasses.replace(params, Gamma=float(value))
    if variable == "xi":
        return dataclasses.replace(params, xi=complex(value))
    if variable == "n":
        n = int(value)
        if n != value:
            raise ValueError(f"n sweep values must be integers, got {value!r}")
        gamma_b = params.gamma_b[:1] * n
        thetas = None if params.thetas is None else params.thetas[:1] * n
        return dataclasses.replace(params, n=n, gamma_b=gamma_b, thetas=thetas)
    if variable == "theta":
        if index is None or not 1 <= index <= params.n:
            raise ValueError(f"theta sweeps need index in 1..{params.n}")
        thetas = list(params.thetas if params.thetas is not None
                      else (0.0,) * params.n)
        thetas[index - 1] = float(value)
        return dataclasses.replace(params, thetas=tuple(thetas))
    raise ValueError(f"unknown sweep variable {variable!r}")


def _observable_columns(observables) -> tuple:
    columns = []
    for obs in observables:
        if obs == "steady_energy":
            columns.append("steady_energy")
        elif obs == "gains":
            columns.extend(["E_nr", "E_r1", "E_r2", "G1", "G2"])
        elif obs == "max_power":
            columns.extend(["t_star", "p_max"])
        else:
            raise ValueError(f"unknown observable {obs!r}")
    return tuple(columns)


def _evaluate_point(cfg: RunConfig, value):
    params = apply_sweep_value(cfg.topology, cfg.sweep.variable, value,
                               cfg.sweep.index)
    target = cfg.target
    row = []
    for obs in cfg.observables:
        if obs == "steady_energy":
            row.append(steady_energy(params, target))
        elif obs == "gains":
            report = gain_report(params)
            i = (report.targets.index(target) if target in report.targets
                 else len(report.targets) - 1)
            row.extend([report.e_nr[i], report.e_r1[i], report.e_r2[i],
                        report.g1[i], report.g2[i]])
        elif obs == "max_power":
            t_star, p_max = max_power(params, target)
            row.extend([t_star, p_max])
    return row


def run_sweep(cfg: RunConfig) -> SweepTable:
    """Evaluate the configured sweep; failed points go to the sidecar."""
    if cfg.sweep is None:
        raise ValueError("config has no sweep section")
    variable = cfg.sweep.variable
    label = variable if cfg.sweep.index is None else f"{variable}_{cfg.sweep.index}"
    values = list(cfg.sweep.grid.values)

    def evaluate(item):
        index, value = item
        try:
            return index, _evaluate_point(cfg, value), None
        except (NoSteadyStateError, UnstableSystemError) as exc:
            return index, None, str(exc)

    results = ordered_map(evaluate, enumerate(values))
    rows, errors = [], []
    for index, row, error in results:
        if error is None:
            rows.append([values[index]] + row)
        else:
            errors.append((index, values[index], error))
    metadata = {"config": json.dumps(run_config_to_dict(cfg), sort_keys=True)}
    columns = (label,) + _observable_columns(cfg.observables)
    return SweepTable(f"sweep_{label}", columns, rows, metadata, errors)
