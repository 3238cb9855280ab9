"""Optional thread parallelism, capped by the HQM_THREADS environment variable.

All parallelized work is a pure function mapped over independent inputs with
an order-preserving merge, so results are identical to the sequential path.
"""

from __future__ import annotations

import os
from concurrent.futures import ThreadPoolExecutor


def thread_cap() -> int:
    raw = os.environ.get("HQM_THREADS", "1")
    try:
        n = int(raw)
    except ValueError:
        return 1
    return max(1, n)


def pmap(fn, items):
    items = list(items)
    n = thread_cap()
    if n <= 1 or len(items) <= 1:
        return [fn(x) for x in items]
    with ThreadPoolExecutor(max_workers=n) as pool:
        return list(pool.map(fn, items))
