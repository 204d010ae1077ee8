#!/usr/bin/env python3
"""Energy gains of directional charging in the weak-coupling regime.

Sweeps the direct coupling of cascaded and parallel setups, reports the
gain of the flux-optimised network over both reciprocal references, and
compares against the weak-coupling approximations and the exact
zero-coupling bounds (exponential in the chain length; saturating at 4
and 2 for stars).
"""

from qbnet import (TopologyParams, gain_approx, gain_bounds, gain_report,
                   g_opt_odd, logfit_ratio)

GAMMA = 0.1


def base_params(family, n, x):
    return TopologyParams(family, "nr", n, x * GAMMA, GAMMA, GAMMA, GAMMA, 1.0)


print("=== cascaded n=3: gain vs coupling ===")
print(f"{'g_b/gamma':>10} {'G1':>10} {'approx':>10} {'G2':>8}")
for x in (0.001, 0.003, 0.01, 0.03, 0.1):
    report = gain_report(base_params("cascaded", 3, x))
    print(f"{x:>10} {report.g1[0]:>10.4f} "
          f"{gain_approx('cascaded', 3, x):>10.4f} {report.g2[0]:>8.4f}")
print(f"zero-coupling bounds (G1, G2): {gain_bounds('cascaded', 3)}")

print()
print("=== parallel n=2: gains saturate at (4, 2) for any n ===")
for x in (0.001, 0.01, 0.1):
    report = gain_report(base_params("parallel", 2, x))
    print(f"g_b/gamma={x:<6} G1={report.g1[-1]:.4f}  G2={report.g2[-1]:.4f}")

print()
print("=== exponential growth of the chain gain with length ===")
for n in range(1, 6):
    report = gain_report(base_params("cascaded", n, 1e-4))
    print(f"n={n}: G1 = {report.g1[0]:10.3f}   (bound {4 ** n})")

print()
print("=== best-over-coupling comparison for odd chains ===")
fit = logfit_ratio(range(1, 12, 2), gamma=GAMMA)
print(f"{'n':>3} {'g_opt (formula)':>16} {'ratio of maxima':>16}")
for i, n in enumerate(fit.n):
    print(f"{n:>3} {g_opt_odd(n, GAMMA):>16.6f} {fit.ratio[i]:>16.6f}")
print(f"fitted slope of 1 + k ln n: k = {fit.coefficient:.4f}")
