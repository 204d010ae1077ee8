#!/usr/bin/env python3
"""How one lossy triangle becomes a one-way valve.

The effective link left after eliminating the intermediate carries
forward and backward transmissions 2 g^2 (1 -/+ sin theta).  Relocating
the drive onto the battery probes the backward direction on the full
three-mode network; the two descriptions agree to rounding, and at
theta = -pi/2 the backward path closes completely.
"""

import math

from qbnet import (drive_relocation_energies, effective_link, isolation,
                   matched_coupling, window_check)

G_B, GAMMA_INT, GAMMA = 0.01, 0.1, 0.1

print(f"{'theta/pi':>9} {'forward_T':>12} {'backward_T':>12} {'ratio':>12} "
      f"{'probe ratio':>12} {'one-way?':>9}")
for frac in (-0.75, -0.5, -0.25, -1 / 6, 0.0, 0.25, 0.5):
    theta = frac * math.pi
    res = isolation(theta, G_B, GAMMA_INT)
    e_fwd, e_bwd = drive_relocation_energies(theta, G_B, GAMMA_INT, GAMMA)
    probe = e_fwd / e_bwd if e_bwd > 0 else math.inf
    print(f"{frac:>9.3f} {res.forward_t:>12.3e} {res.backward_t:>12.3e} "
          f"{res.ratio:>12.4g} {probe:>12.4g} {str(window_check(theta)):>9}")

print()
print("=== exact cancellation at theta = -pi/2 ===")
g_i = matched_coupling(G_B, GAMMA_INT)
link = effective_link(-math.pi / 2, G_B, g_i, g_i, GAMMA_INT)
print(f"matched intermediate coupling: {g_i:.6f}")
print(f"forward amplitude:  {link.forward_amp}")
print(f"backward amplitude: {link.backward_amp}   <- direct and indirect "
      "paths interfere destructively")
print(f"induced decay per endpoint: {link.induced_decay_upstream:.4f} "
      f"(equals g_b at matching)")

e_fwd, e_bwd = drive_relocation_energies(-math.pi / 2, G_B, GAMMA_INT, GAMMA)
print(f"full-network probe: forward battery energy {e_fwd:.4f}, "
      f"backward charger energy {e_bwd:.3e}")
