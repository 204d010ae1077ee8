"""Scan-plus-golden-section maximisation of smooth 1-d objectives.

The pattern everywhere in this package is the same: a dense scan of a
fixed grid locates the global maximum of a (piecewise) unimodal
function, and golden-section refinement of the bracketing interval
polishes it.  The scan guards against accidental multi-modality; the
refinement gives grid-independent optima.
"""

from __future__ import annotations

import math

import numpy as np

_INVPHI = (math.sqrt(5.0) - 1.0) / 2.0


def golden_section_max(f, lo: float, hi: float, rel_tol: float = 1e-10,
                       max_iter: int = 400):
    """Maximise ``f`` on ``[lo, hi]``; return ``(x, f(x))``.

    Terminates when the bracket has shrunk to ``rel_tol`` relative to
    its midpoint (absolute ``rel_tol`` near zero).
    """
    if not (hi > lo):
        raise ValueError(f"need hi > lo, got [{lo}, {hi}]")
    a, b = float(lo), float(hi)
    c = b - _INVPHI * (b - a)
    d = a + _INVPHI * (b - a)
    fc, fd = f(c), f(d)
    for _ in range(max_iter):
        if (b - a) <= rel_tol * max(abs(a), abs(b), 1.0e-300):
            break
        if fc > fd:
            b, d, fd = d, c, fc
            c = b - _INVPHI * (b - a)
            fc = f(c)
        else:
            a, c, fc = c, d, fd
            d = a + _INVPHI * (b - a)
            fd = f(d)
    x = 0.5 * (a + b)
    return x, f(x)


def scan_refine_max(f, grid, rel_tol: float = 1e-10):
    """Dense-scan ``f`` on ``grid`` then golden-refine around the argmax.

    ``grid`` must be strictly increasing.  The refinement bracket is the
    pair of grid neighbours of the scan argmax (clipped at the ends).
    """
    grid = np.asarray(grid, dtype=float)
    if grid.ndim != 1 or grid.size < 3:
        raise ValueError("grid must be 1-d with at least 3 points")
    values = np.array([f(x) for x in grid], dtype=float)
    i = int(np.argmax(values))
    lo = grid[max(i - 1, 0)]
    hi = grid[min(i + 1, grid.size - 1)]
    x, fx = golden_section_max(f, lo, hi, rel_tol=rel_tol)
    if values[i] > fx:
        return float(grid[i]), float(values[i])
    return float(x), float(fx)
