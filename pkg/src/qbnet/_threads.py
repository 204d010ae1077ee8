"""Worker-pool helpers honouring the QBNET_THREADS environment variable.

QBNET_THREADS bounds sweep/landscape parallelism; 0 or unset means
auto.  The per-point kernels here are small dense solves that stay
GIL-bound, so auto runs serially (measured: threads slow these loops
down); an explicit QBNET_THREADS > 1 opts in to a pool anyway.
Results always come back in input order, so threaded and serial runs
are bit-identical.
"""

from __future__ import annotations

import os
from concurrent.futures import ThreadPoolExecutor


def worker_count() -> int:
    raw = os.environ.get("QBNET_THREADS", "0")
    try:
        requested = int(raw)
    except ValueError:
        raise ValueError(f"QBNET_THREADS must be an integer, got {raw!r}") from None
    if requested < 0:
        raise ValueError(f"QBNET_THREADS must be >= 0, got {requested}")
    if requested == 0:
        return 1
    return requested


def ordered_map(fn, items):
    """Map ``fn`` over ``items`` preserving order, threaded when allowed."""
    items = list(items)
    workers = worker_count()
    if workers <= 1 or len(items) <= 1:
        return [fn(item) for item in items]
    with ThreadPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(fn, items))
