"""Reference datasets: one CSV per figure panel, fixed parameter sets.

Panel ids fig2a..fig2f, fig3a..fig3d and fig4a..fig4d reproduce the
headline scenarios: fig2/fig3 use decay 0.1 for every mode (charger,
batteries and intermediates alike) with unit drive and matched
intermediate couplings; fig4 uses the fast-intermediate regime (mode
decay 5e-4, intermediate decay 1).  Sweep ranges and grid densities
are declared in each table's metadata; column names are a public
contract.
"""

from __future__ import annotations

import numpy as np

from ._threads import ordered_map
from .closed_forms import g_opt_odd, logfit_ratio
from .export import SweepTable, write_table
from .network import TopologyParams
from .nonreciprocity import phase_landscape
from .observables import energy_curve, gain_report, max_power, power_curve

#: fig2/fig3 regime
GAMMA_WEAK = 0.1
#: fig4 regime
GAMMA_POWER = 5e-4
GAMMA_INTERMEDIATE_POWER = 1.0
XI = 1.0

#: direct-coupling sweep for the energy/gain panels
ENERGY_SWEEP = np.linspace(0.001, 0.3, 301)
#: direct-coupling sweep for the power-gain panels
POWER_SWEEP = np.geomspace(0.001, 0.1, 21)
#: time grid of the charging-dynamics panel
DYNAMICS_TIMES = np.linspace(0.0, 2000.0, 2001)
#: time grid of the power-curve panels
POWER_TIMES = np.geomspace(1.0, 2e5, 1001)
LANDSCAPE_POINTS = 41


def _params(family, variant, n, g_b, gamma, Gamma, thetas=None):
    return TopologyParams(family=family, variant=variant, n=n, g_b=g_b,
                          gamma_c=gamma, gamma_b=gamma, Gamma=Gamma, xi=XI,
                          thetas=thetas)


def _base_metadata(family, n, gamma, Gamma, extra=None):
    md = {"family": family, "n": str(n), "gamma": repr(gamma),
          "Gamma": repr(Gamma), "xi": repr(XI),
          "matched_couplings": "sqrt(g_b*Gamma/2)"}
    if extra:
        md.update(extra)
    return md


def _landscape_panel(name, family):
    g_b = 0.1 * GAMMA_WEAK
    params = _params(family, "custom", 2, g_b, GAMMA_WEAK, GAMMA_WEAK,
                     thetas=(0.0, 0.0))
    scape = phase_landscape(params, target="b_2", grid_points=LANDSCAPE_POINTS)
    rows = []
    g1, g2 = scape.theta_grids
    for i, t1 in enumerate(g1):
        for j, t2 in enumerate(g2):
            rows.append([t1, t2, scape.energy[i, j]])
    argmax = "; ".join(f"({a:.10g}, {b:.10g})" for a, b in scape.argmax)
    md = _base_metadata(family, 2, GAMMA_WEAK, GAMMA_WEAK,
                        {"g_b": repr(g_b), "target": "b_2",
                         "grid": f"{LANDSCAPE_POINTS} points per axis over (-pi, pi]",
                         "argmax": argmax})
    return SweepTable(name, ("theta_1", "theta_2", "E_over_omega"), rows, md)


def _energy_panel(name, family, n):
    rows = []
    for x in ENERGY_SWEEP:
        base = _params(family, "nr", n, x * GAMMA_WEAK, GAMMA_WEAK, GAMMA_WEAK)
        report = gain_report(base)
        rows.append([x, report.e_nr[-1], report.e_r1[-1], report.e_r2[-1]])
    md = _base_metadata(family, n, GAMMA_WEAK, GAMMA_WEAK,
                        {"sweep": "gb_over_gamma linear 301 points on [0.001, 0.3]",
                         "target": f"b_{n}"})
    return SweepTable(name, ("gb_over_gamma", "E_nr", "E_r1", "E_r2"), rows, md)


def _gain_panel(name, family, n):
    rows = []
    for x in ENERGY_SWEEP:
        base = _params(family, "nr", n, x * GAMMA_WEAK, GAMMA_WEAK, GAMMA_WEAK)
        report = gain_report(base)
        rows.append([x, report.g1[-1], report.g2[-1]])
    md = _base_metadata(family, n, GAMMA_WEAK, GAMMA_WEAK,
                        {"sweep": "gb_over_gamma linear 301 points on [0.001, 0.3]",
                         "target": f"b_{n}"})
    return SweepTable(name, ("gb_over_gamma", f"G_{n}1", f"G_{n}2"), rows, md)


def _fig2f():
    ns = tuple(range(1, 16, 2))
    fit = logfit_ratio(ns, gamma=GAMMA_WEAK, xi=XI)
    rows = [[n, g_opt_odd(n, GAMMA_WEAK), fit.ratio[i]]
            for i, n in enumerate(ns)]
    md = _base_metadata("cascaded", "1..15 odd", GAMMA_WEAK, GAMMA_WEAK,
                        {"logfit_k": repr(fit.coefficient),
                         "optimisation": "g_b scan+golden on [1e-4, 10]*gamma"})
    return SweepTable("fig2f", ("N", "gb_opt", "ratio_Emax"), rows, md)


def _fig3d():
    rows_by_variant = {}
    for variant in ("nr", "r1", "r2"):
        params = _params("parallel", variant, 4, GAMMA_WEAK / 100, GAMMA_WEAK,
                         GAMMA_WEAK)
        curve = energy_curve(params, target="b_4", times=DYNAMICS_TIMES)
        rows_by_variant[variant] = curve.energy
    rows = [[t, rows_by_variant["nr"][i], rows_by_variant["r1"][i],
             rows_by_variant["r2"][i]] for i, t in enumerate(DYNAMICS_TIMES)]
    md = _base_metadata("parallel", 4, GAMMA_WEAK, GAMMA_WEAK,
                        {"g_b": repr(GAMMA_WEAK / 100), "target": "b_4",
                         "times": "linear 2001 points on [0, 2000]",
                         "initial": "vacuum"})
    return SweepTable("fig3d", ("t", "E_nr", "E_r1", "E_r2"), rows, md)


def _power_curve_panel(name, family):
    g_b = GAMMA_POWER / 10
    curves = {}
    for variant in ("nr", "r1", "r2"):
        params = _params(family, variant, 4, g_b, GAMMA_POWER,
                         GAMMA_INTERMEDIATE_POWER)
        curves[variant] = power_curve(params, target="b_4",
                                      times=POWER_TIMES).power
    rows = [[t, curves["nr"][i], curves["r1"][i], curves["r2"][i]]
            for i, t in enumerate(POWER_TIMES)]
    md = _base_metadata(family, 4, GAMMA_POWER, GAMMA_INTERMEDIATE_POWER,
                        {"g_b": repr(g_b), "target": "b_4",
                         "times": "log 1001 points on [1, 2e5]",
                         "initial": "vacuum"})
    return SweepTable(name, ("t", "P_nr", "P_r1", "P_r2"), rows, md)


def _eta_panel(name, family):
    def etas(x):
        p_max = {}
        for variant in ("nr", "r1", "r2"):
            params = _params(family, variant, 4, x * GAMMA_POWER, GAMMA_POWER,
                             GAMMA_INTERMEDIATE_POWER)
            p_max[variant] = max_power(params, target="b_4")[1]
        return [x, p_max["nr"] / p_max["r1"], p_max["nr"] / p_max["r2"]]

    rows = ordered_map(etas, POWER_SWEEP)
    md = _base_metadata(family, 4, GAMMA_POWER, GAMMA_INTERMEDIATE_POWER,
                        {"sweep": "gb_over_gamma log 21 points on [0.001, 0.1]",
                         "target": "b_4"})
    return SweepTable(name, ("gb_over_gamma", "eta_41", "eta_42"), rows, md)


_BUILDERS = {
    "fig2a": lambda: _landscape_panel("fig2a", "cascaded"),
    "fig2b": lambda: _energy_panel("fig2b", "cascaded", 3),
    "fig2c": lambda: _energy_panel("fig2c", "cascaded", 4),
    "fig2d": lambda: _gain_panel("fig2d", "cascaded", 3),
    "fig2e": lambda: _gain_panel("fig2e", "cascaded", 4),
    "fig2f": _fig2f,
    "fig3a": lambda: _landscape_panel("fig3a", "parallel"),
    "fig3b": lambda: _energy_panel("fig3b", "parallel", 2),
    "fig3c": lambda: _gain_panel("fig3c", "parallel", 2),
    "fig3d": _fig3d,
    "fig4a": lambda: _power_curve_panel("fig4a", "cascaded"),
    "fig4b": lambda: _power_curve_panel("fig4b", "parallel"),
    "fig4c": lambda: _eta_panel("fig4c", "cascaded"),
    "fig4d": lambda: _eta_panel("fig4d", "parallel"),
}

FIGURE_IDS = tuple(sorted(_BUILDERS))

#: column contract per panel (covered by golden-file tests)
FIGURE_COLUMNS = {
    "fig2a": ("theta_1", "theta_2", "E_over_omega"),
    "fig2b": ("gb_over_gamma", "E_nr", "E_r1", "E_r2"),
    "fig2c": ("gb_over_gamma", "E_nr", "E_r1", "E_r2"),
    "fig2d": ("gb_over_gamma", "G_31", "G_32"),
    "fig2e": ("gb_over_gamma", "G_41", "G_42"),
    "fig2f": ("N", "gb_opt", "ratio_Emax"),
    "fig3a": ("theta_1", "theta_2", "E_over_omega"),
    "fig3b": ("gb_over_gamma", "E_nr", "E_r1", "E_r2"),
    "fig3c": ("gb_over_gamma", "G_21", "G_22"),
    "fig3d": ("t", "E_nr", "E_r1", "E_r2"),
    "fig4a": ("t", "P_nr", "P_r1", "P_r2"),
    "fig4b": ("t", "P_nr", "P_r1", "P_r2"),
    "fig4c": ("gb_over_gamma", "eta_41", "eta_42"),
    "fig4d": ("gb_over_gamma", "eta_41", "eta_42"),
}


def figure_table(fig_id: str) -> SweepTable:
    """Compute one panel's table."""
    try:
        builder = _BUILDERS[fig_id]
    except KeyError:
        raise ValueError(
            f"unknown figure id {fig_id!r}; choose from {', '.join(FIGURE_IDS)}"
        ) from None
    return builder()


def run_figure(fig_id: str, out_dir: str, fmt: str = "csv",
               deterministic: bool = False) -> list:
    """Compute and write one panel; return the written paths."""
    table = figure_table(fig_id)
    return write_table(table, out_dir, fmt, deterministic)
