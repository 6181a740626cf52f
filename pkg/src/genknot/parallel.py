"""Order-preserving execution of independent jobs, optionally across processes."""
from __future__ import annotations

import os
from concurrent.futures import ProcessPoolExecutor

WORKERS_ENV = "GENKNOT_WORKERS"


def default_workers() -> int:
    raw = os.environ.get(WORKERS_ENV)
    return max(1, int(raw)) if raw else 1


def run_partitions(fn, jobs, workers: int | None = None) -> list:
    """Apply ``fn`` to every job and return results in job order.

    The merge is the caller's; since results come back in submission order,
    anything computed from them is independent of the worker count.
    """
    jobs = list(jobs)
    workers = default_workers() if workers is None else workers
    if workers <= 1 or len(jobs) <= 1:
        return [fn(j) for j in jobs]
    chunk = max(1, len(jobs) // (4 * workers))
    with ProcessPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(fn, jobs, chunksize=chunk))
