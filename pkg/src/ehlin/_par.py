"""Ordered parallel map over grid points.

EHLIN_THREADS caps the worker count (default: CPU count).  Results always
come back in input order, so outputs are deterministic regardless of
scheduling; with one worker this degenerates to a plain map.
"""

import os
from concurrent.futures import ThreadPoolExecutor


def thread_count():
    raw = os.environ.get("EHLIN_THREADS", "").strip()
    if raw:
        try:
            n = int(raw)
            if n >= 1:
                return n
        except ValueError:
            pass
    return os.cpu_count() or 1


def parallel_map(fn, items):
    items = list(items)
    n = min(thread_count(), len(items))
    if n <= 1:
        return [fn(x) for x in items]
    with ThreadPoolExecutor(max_workers=n) as pool:
        return list(pool.map(fn, items))
