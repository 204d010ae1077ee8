#!/usr/bin/env python3
"""Charging curves from vacuum and the maximum charging power.

First the slow-intermediate regime: a four-battery star charged through
matched triangles, showing that the directional network reaches the
reciprocal network's steady energy many times faster.  Then the
fast-intermediate regime for the power figure of merit P(t) = E(t)/t:
the maximum-power gains mirror the steady-energy gains.
"""

import numpy as np

from qbnet import TopologyParams, energy_curve, max_power, steady_energy

GAMMA = 0.1

print("=== parallel n=4, g_b = gamma/100: stored energy vs time ===")
times = np.linspace(0.0, 2000.0, 2001)
curves = {}
for variant in ("nr", "r1", "r2"):
    params = TopologyParams("parallel", variant, 4, GAMMA / 100, GAMMA, GAMMA,
                            GAMMA, 1.0)
    curves[variant] = energy_curve(params, target="b_4", times=times).energy

for t_probe in (100, 300, 1000, 2000):
    i = int(t_probe / 2000 * 2000)
    print(f"  t={t_probe:>5}: E_nr={curves['nr'][i]:.4f}  "
          f"E_r2={curves['r2'][i]:.4f}  E_r1={curves['r1'][i]:.4f}")

r1_steady = steady_energy(
    TopologyParams("parallel", "r1", 4, GAMMA / 100, GAMMA, GAMMA, GAMMA, 1.0),
    "b_4")
threshold = 0.9 * r1_steady
t90 = {v: times[np.argmax(curves[v] >= threshold)] for v in ("nr", "r1")}
print(f"time to 90% of the reciprocal steady energy: "
      f"nr {t90['nr']:.0f} vs r1 {t90['r1']:.0f}  "
      f"({t90['r1'] / t90['nr']:.1f}x faster)")

print()
print("=== fast intermediates (Gamma = 1, gamma = 5e-4): max power ===")
gamma, big = 5e-4, 1.0
for family in ("cascaded", "parallel"):
    p_max = {}
    for variant in ("nr", "r1", "r2"):
        params = TopologyParams(family, variant, 4, gamma / 10, gamma, gamma,
                                big, 1.0)
        t_star, p = max_power(params, "b_4")
        p_max[variant] = p
        print(f"  {family:>9} {variant}: t* = {t_star:9.1f}   P_max = {p:.6e}")
    print(f"  {family:>9} eta1 = {p_max['nr'] / p_max['r1']:8.3f}   "
          f"eta2 = {p_max['nr'] / p_max['r2']:.3f}")
