"""Energies, charging power, maximum power and gain factors.

Everything here runs on the full network (intermediates included): the
topology parameters are built, assembled and solved or propagated from
vacuum.  Stored energy is ``|amplitude|^2`` of the target mode in units
of the mode frequency, and charging power is ``P(t) = E(t) / t``.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np
from scipy.linalg import expm

from .dynamics import assemble, evolve, is_stable, steady_state, vacuum
from .errors import UnstableSystemError
from .network import TopologyParams, build_network
from .optimize import golden_section_max

#: a gain ratio with a denominator below this is reported as undefined
RATIO_FLOOR = 1e-300

#: log-scan points for the maximum-power search
POWER_SCAN_POINTS = 2000

#: the scan covers (0, HORIZON_FACTOR / |spectral abscissa|]
POWER_HORIZON_FACTOR = 50.0

#: ratio of scan upper end to lower end (six decades)
POWER_SCAN_SPAN = 1e6

#: spectral abscissa above this is treated as non-decaying
STABILITY_FLOOR = -1e-14


@dataclass(frozen=True)
class EnergyCurve:
    """Stored energy of one mode over a time grid."""

    times: np.ndarray
    energy: np.ndarray
    mode: str


@dataclass(frozen=True)
class PowerCurve:
    """Charging power E(t)/t of one mode over a positive time grid."""

    times: np.ndarray
    power: np.ndarray
    mode: str


@dataclass(frozen=True)
class GainReport:
    """Steady energies and gain ratios of the three variants.

    Tuples are indexed by target battery (a single terminal battery
    for cascaded scenarios, every battery for parallel ones).  Entries
    in ``flags`` name ratios whose denominator vanished; those ratios
    are NaN.
    """

    params: TopologyParams
    targets: tuple
    e_nr: tuple
    e_r1: tuple
    e_r2: tuple
    g1: tuple
    g2: tuple
    p_max_nr: tuple | None = None
    p_max_r1: tuple | None = None
    p_max_r2: tuple | None = None
    eta1: tuple | None = None
    eta2: tuple | None = None
    flags: tuple = ()


def _default_target(params: TopologyParams) -> str:
    return f"b_{params.n}"


def _system(params: TopologyParams):
    return assemble(build_network(params))


def _require_decaying(sys):
    """Steady observables need an attracting steady state, not merely an
    invertible matrix; marginal (undamped) networks are refused."""
    stable, abscissa = is_stable(sys)
    if not stable or abscissa > STABILITY_FLOOR:
        raise UnstableSystemError(
            f"network is not strictly decaying (spectral abscissa "
            f"{abscissa:.3e})", spectral_abscissa=abscissa)
    return sys


def steady_energy(params: TopologyParams, target: str | None = None) -> float:
    """Steady stored energy ``|alpha_ss(target)|^2`` of the full network."""
    sys = _require_decaying(_system(params))
    row = sys.row(target or _default_target(params))
    ss = steady_state(sys)
    return float(abs(ss.amplitudes[row]) ** 2)


def energy_curve(params: TopologyParams, target: str | None = None,
                 times=None) -> EnergyCurve:
    """E(t) of the target mode, starting from vacuum."""
    if times is None:
        raise ValueError("times grid is required")
    sys = _system(params)
    target = target or _default_target(params)
    traj = evolve(sys, vacuum(sys), times)
    energy = np.abs(traj.mode(target)) ** 2
    return EnergyCurve(traj.times, energy, target)


def power_curve(params: TopologyParams, target: str | None = None,
                times=None) -> PowerCurve:
    """P(t) = E(t)/t on a strictly positive time grid."""
    if times is None:
        raise ValueError("times grid is required")
    times = np.asarray(times, dtype=float)
    if times.size and times[0] <= 0:
        raise ValueError(f"power needs t > 0 everywhere, got t={times[0]}")
    curve = energy_curve(params, target, times)
    return PowerCurve(curve.times, curve.energy / curve.times, curve.mode)


def max_power(params: TopologyParams, target: str | None = None,
              rel_tol: float = 1e-8):
    """Maximise P(t) over charging time; return ``(t_star, p_max)``.

    A logarithmic scan of (0, 50 / |spectral abscissa|] locates the
    peak (2000 points, six decades), then golden-section refinement of
    the bracketing interval polishes t to ``rel_tol`` relative.
    """
    sys = _system(params)
    stable, abscissa = is_stable(sys)
    if not stable:
        raise UnstableSystemError(
            f"maximum power needs a decaying system; spectral abscissa "
            f"{abscissa:.3e}", spectral_abscissa=abscissa)
    row = sys.row(target or _default_target(params))
    alpha_ss = steady_state(sys).amplitudes

    def power_at(t):
        amp = alpha_ss - expm(sys.matrix * t) @ alpha_ss
        return float(abs(amp[row]) ** 2) / t

    t_hi = POWER_HORIZON_FACTOR / abs(abscissa)
    grid = np.geomspace(t_hi / POWER_SCAN_SPAN, t_hi, POWER_SCAN_POINTS)
    values = np.array([power_at(t) for t in grid])
    i = int(np.argmax(values))
    lo, hi = grid[max(i - 1, 0)], grid[min(i + 1, grid.size - 1)]
    t_star, p_max = golden_section_max(power_at, lo, hi, rel_tol=rel_tol)
    if values[i] > p_max:
        t_star, p_max = float(grid[i]), float(values[i])
    return t_star, p_max


def _ratio(numer: float, denom: float, name: str, flags: list) -> float:
    if denom < RATIO_FLOOR:
        flags.append(name)
        return float("nan")
    return numer / denom


def gain_report(params_base: TopologyParams, include_power: bool = False) -> GainReport:
    """Steady energies of the r1/r2/nr variants and their gain ratios.

    The three variants share every parameter except the variant tag.
    Cascaded scenarios report the terminal battery; parallel ones
    report each battery.  ``include_power`` adds maximum-power triples
    and the corresponding eta ratios.
    """
    if params_base.family == "cascaded":
        targets = (f"b_{params_base.n}",)
    else:
        targets = tuple(f"b_{k}" for k in range(1, params_base.n + 1))
    variants = {v: params_base.with_variant(v) for v in ("nr", "r1", "r2")}
    energies = {v: tuple(steady_energy(p, t) for t in targets)
                for v, p in variants.items()}
    flags: list = []
    g1 = tuple(_ratio(energies["nr"][i], energies["r1"][i], f"G1[{t}]", flags)
               for i, t in enumerate(targets))
    g2 = tuple(_ratio(energies["nr"][i], energies["r2"][i], f"G2[{t}]", flags)
               for i, t in enumerate(targets))
    report = GainReport(params_base, targets, energies["nr"], energies["r1"],
                        energies["r2"], g1, g2, flags=tuple(flags))
    if not include_power:
        return report
    power = {v: tuple(max_power(p, t)[1] for t in targets)
             for v, p in variants.items()}
    eta1 = tuple(_ratio(power["nr"][i], power["r1"][i], f"eta1[{t}]", flags)
                 for i, t in enumerate(targets))
    eta2 = tuple(_ratio(power["nr"][i], power["r2"][i], f"eta2[{t}]", flags)
                 for i, t in enumerate(targets))
    return GainReport(params_base, targets, energies["nr"], energies["r1"],
                      energies["r2"], g1, g2, power["nr"], power["r1"],
                      power["r2"], eta1, eta2, tuple(flags))
