#!/usr/bin/env python3
"""Where in phase space does the stored energy peak?

Scans the two direct-coupling phases of a two-battery chain and of a
two-battery star, prints a coarse text rendering of the landscape, and
reports the argmax set.  The chain peaks at (-pi/2, -pi/2) only; the
star peaks at theta_2 = -pi/2 with theta_1 = +-pi/2, a tie that the
analysis reports rather than breaks.
"""

import math

from qbnet import TopologyParams, phase_landscape

GAMMA = 0.1


def show(family):
    params = TopologyParams(family, "custom", 2, 0.1 * GAMMA, GAMMA, GAMMA,
                            GAMMA, 1.0, thetas=(0.0, 0.0))
    scape = phase_landscape(params, target="b_2", grid_points=41)
    print(f"=== {family}, target b_2, 41x41 over (-pi, pi] ===")
    # coarse 13-level rendering, rows = theta_1 top to bottom
    levels = " .:-=+*#%@"
    e = scape.energy
    scaled = (e - e.min()) / (e.max() - e.min())
    step = 3  # print every third grid line to keep the page narrow
    for i in range(0, e.shape[0], step):
        row = "".join(levels[int(v * (len(levels) - 1))]
                      for v in scaled[i, ::step])
        print("   " + row)
    print(f"peak energy: {e.max():.6f}")
    print("argmax (theta_1, theta_2):")
    for t1, t2 in scape.argmax:
        print(f"   ({t1:+.4f}, {t2:+.4f})   [pi/2 = {math.pi / 2:.4f}]")
    print()


show("cascaded")
show("parallel")
