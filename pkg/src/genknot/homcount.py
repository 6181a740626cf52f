"""Counting and enumerating homomorphisms from a presentation into a tabulated group.

The search space is partitioned by the image of the first generator in
search order.  Partitions are independent and are combined by addition in
partition order, so totals, breakdowns and node counts do not depend on
how the partitions are scheduled.

Strategies:

``naive``
    scan every assignment of all generators.
``pruned``
    extend assignments one generator at a time and drop partial
    assignments as soon as a relator whose generators are all assigned
    fails.  The generator order is chosen greedily to complete relators
    early.
``class``
    as ``pruned``, but the first generator only ranges over conjugacy
    class representatives and each subtotal is weighted by the class size.
"""
from __future__ import annotations

import os
import time
from dataclasses import dataclass, field

import numpy as np

from .errors import BudgetExceeded, PreconditionError
from .fpgroups import Presentation, Word, gn_presentation
from .groups import FiniteGroup
from .parallel import run_partitions

BUDGET_ENV = "GENKNOT_BUDGET_NODES"
DEFAULT_BUDGET = 2_000_000_000
CHUNK_ROWS = 1 << 18

STRATEGIES = ("naive", "pruned", "class")

__all__ = [
    "HomCountReport",
    "count_homs",
    "enumerate_homs",
    "count_homs_gn_structured",
    "default_budget",
    "search_order",
]


def default_budget() -> int:
    raw = os.environ.get(BUDGET_ENV)
    if raw:
        try:
            return int(raw)
        except ValueError:
            raise PreconditionError(f"{BUDGET_ENV} must be an integer, got {raw!r}") from None
    return DEFAULT_BUDGET


@dataclass
class HomCountReport:
    presentation: str
    group: str
    strategy: str
    total: int
    by_first_class: dict[str, int]
    nodes: int
    first_generator: str
    wall_time: float = field(default=0.0, compare=False)

    def __post_init__(self):
        if sum(self.by_first_class.values()) != self.total:
            raise AssertionError("breakdown does not sum to the total")

    def to_json(self):
        return {
            "presentation": self.presentation,
            "group": self.group,
            "strategy": self.strategy,
            "total": str(self.total),
            "by_first_class": {k: str(v) for k, v in self.by_first_class.items()},
            "first_generator": self.first_generator,
            "nodes": self.nodes,
            "wall_time": self.wall_time,
        }


# -- search order ------------------------------------------------------------

def search_order(pres: Presentation) -> list[int]:
    """Greedy generator order that completes as many relators as early as possible."""
    k = pres.ngens
    supports = [r.generators_used() for r in pres.relators]
    order: list[int] = []
    assigned: set[int] = set()
    while len(order) < k:
        best, best_key = None, None
        for g in range(k):
            if g in assigned:
                continue
            new = assigned | {g}
            completed = sum(1 for s in supports if s and s <= new and not s <= assigned)
            touching = sum(1 for s in supports if g in s and not s <= assigned)
            # most completions, then most pending relators touched, then index
            key = (completed, touching, -g)
            if best_key is None or key > best_key:
                best, best_key = g, key
        order.append(best)
        assigned.add(best)
    return order


def _relator_levels(pres: Presentation, order: list[int]) -> list[list[Word]]:
    """levels[d]: relators that become fully assigned once order[: d + 1] is assigned."""
    pos = {g: i for i, g in enumerate(order)}
    levels: list[list[Word]] = [[] for _ in order]
    for r in pres.relators:
        used = r.generators_used()
        if not used:
            continue
        levels[max(pos[g] for g in used)].append(r)
    return levels


# -- vectorised evaluation ---------------------------------------------------

class _Evaluator:
    """Evaluates words on batches of assignments (columns in search order)."""

    def __init__(self, group: FiniteGroup, order: list[int]):
        self.table = group.table
        self.inv = group.inv
        self.identity = group.identity
        self.col = {g: i for i, g in enumerate(order)}

    def value(self, rows, w: Word):
        n = rows.shape[0]
        acc = np.full(n, self.identity, dtype=self.table.dtype)
        for x in w:
            col = rows[:, self.col[abs(x) - 1]]
            if x < 0:
                col = self.inv[col]
            acc = self.table[acc, col]
        return acc

    def holds(self, rows, relators) -> np.ndarray:
        ok = np.ones(rows.shape[0], dtype=bool)
        for r in relators:
            if not ok.any():
                break
            live = np.nonzero(ok)[0]
            val = self.value(rows[live], r)
            ok[live[val != self.identity]] = False
        return ok


# -- one partition --------------------------------------------------------------

@dataclass
class _Job:
    pres: Presentation
    group: FiniteGroup
    order: list[int]
    first_value: int
    strategy: str
    budget: int
    collect: bool = False


def _run_pruned(job: _Job):
    group, order = job.group, job.order
    ev = _Evaluator(group, order)
    levels = _relator_levels(job.pres, order)
    n = group.order
    rows = np.array([[job.first_value]], dtype=np.int32)
    nodes = 1
    rows = rows[ev.holds(rows, levels[0])]
    for depth in range(1, len(order)):
        if rows.shape[0] == 0:
            break
        grow = rows.shape[0] * n
        if nodes + grow > job.budget:
            raise BudgetExceeded(
                f"search needs more than {job.budget} nodes", nodes=nodes + grow, budget=job.budget)
        nodes += grow
        kept = []
        step = max(1, CHUNK_ROWS // n)
        for start in range(0, rows.shape[0], step):
            part = rows[start:start + step]
            ext = np.empty((part.shape[0] * n, depth + 1), dtype=np.int32)
            ext[:, :depth] = np.repeat(part, n, axis=0)
            ext[:, depth] = np.tile(np.arange(n, dtype=np.int32), part.shape[0])
            kept.append(ext[ev.holds(ext, levels[depth])])
        rows = np.concatenate(kept) if kept else np.empty((0, depth + 1), dtype=np.int32)
    return rows.shape[0], nodes, (rows if job.collect else None)


def _run_naive(job: _Job):
    group, order = job.group, job.order
    ev = _Evaluator(group, order)
    n = group.order
    k = len(order)
    relators = [r for r in job.pres.relators if r]
    total_rows = n ** (k - 1)
    count = 0
    collected = []
    for start in range(0, total_rows, CHUNK_ROWS):
        idx = np.arange(start, min(start + CHUNK_ROWS, total_rows), dtype=np.int64)
        rows = np.empty((idx.shape[0], k), dtype=np.int32)
        rows[:, 0] = job.first_value
        rest = idx
        for col in range(k - 1, 0, -1):
            rows[:, col] = rest % n
            rest = rest // n
        ok = ev.holds(rows, relators)
        count += int(ok.sum())
        if job.collect:
            collected.append(rows[ok])
    rows = np.concatenate(collected) if collected else None
    return count, total_rows, rows


def _run_job(job: _Job):
    if job.strategy == "naive":
        return _run_naive(job)
    return _run_pruned(job)


# -- public API --------------------------------------------------------------------

def _check_inputs(pres: Presentation, group: FiniteGroup, strategy: str):
    if strategy not in STRATEGIES:
        raise PreconditionError(f"unknown strategy {strategy!r}; choose from {STRATEGIES}")
    if pres.ngens == 0:
        raise PreconditionError("presentation has no generators")


def count_homs(pres: Presentation, group: FiniteGroup, strategy: str = "pruned",
               budget: int | None = None, workers: int = 1) -> HomCountReport:
    """Exact number of homomorphisms from ``pres`` to ``group``."""
    _check_inputs(pres, group, strategy)
    budget = default_budget() if budget is None else budget
    t0 = time.perf_counter()
    order = list(range(pres.ngens)) if strategy == "naive" else search_order(pres)
    if strategy == "naive" and group.order ** pres.ngens > budget:
        raise BudgetExceeded(
            f"naive scan needs {group.order ** pres.ngens} nodes, budget is {budget}",
            nodes=group.order ** pres.ngens, budget=budget)
    if strategy == "class":
        firsts = group.class_representatives()
    else:
        firsts = [(g, 1) for g in range(group.order)]
    jobs = [_Job(pres, group, order, g, strategy, budget) for g, _ in firsts]
    results = run_partitions(_run_job, jobs, workers)
    by_class: dict[str, int] = {}
    total = 0
    nodes = 0
    for (g, weight), (cnt, nd, _) in zip(firsts, results):
        nodes += nd
        sub = int(cnt) * weight
        total += sub
        key = group.label(group.classes[int(group.class_of[g])][0])
        by_class[key] = by_class.get(key, 0) + sub
    if nodes > budget:
        raise BudgetExceeded(f"search used {nodes} nodes, budget is {budget}", nodes=nodes, budget=budget)
    return HomCountReport(pres.name, group.name, strategy, total, by_class, nodes,
                          pres.generators[order[0]], time.perf_counter() - t0)


def enumerate_homs(pres: Presentation, group: FiniteGroup, budget: int | None = None,
                   workers: int = 1):
    """Yield every satisfying assignment (tuple of element indices, generator order),
    in lexicographic order."""
    _check_inputs(pres, group, "pruned")
    budget = default_budget() if budget is None else budget
    order = search_order(pres)
    jobs = [_Job(pres, group, order, g, "pruned", budget, collect=True) for g in range(group.order)]
    results = run_partitions(_run_job, jobs, workers)
    if sum(nd for _, nd, _ in results) > budget:
        raise BudgetExceeded("enumeration exceeded the node budget", budget=budget)
    parts = [rows for _, _, rows in results if rows is not None and rows.shape[0]]
    if not parts:
        return
    rows = np.concatenate(parts)
    # columns back to generator order
    back = np.empty_like(rows)
    for col, g in enumerate(order):
        back[:, g] = rows[:, col]
    keys = [back[:, g] for g in reversed(range(pres.ngens))]
    for row in back[np.lexsort(keys)]:
        yield tuple(int(x) for x in row)


def _structured_job(args):
    group, knot, n, nu, budget = args
    t = group.table
    inv = group.inv
    a = nu
    for _ in range(n - 1):
        a = int(t[a, nu])
    allc = np.arange(group.order)
    ac = t[a, allc]
    ca = t[allc, a]
    braid = t[ac, a] == t[ca, allc]
    cs = allc[braid]
    # x = c a, x^3 = (ca)^3; the f-side uses the same candidate set
    x = t[cs, a]
    x3 = t[t[x, x], x]
    x3inv = inv[x3]
    nodes = group.order + len(cs) * len(cs)
    if nodes > budget:
        raise BudgetExceeded("structured count exceeded the node budget", nodes=nodes, budget=budget)
    w3 = x3[None, :]
    w3inv = x3inv[None, :]
    xx3 = x3[:, None]
    xx3inv = x3inv[:, None]
    if knot == "SK":
        lhs = t[t[w3inv, nu], w3]
    else:
        lhs = t[t[w3, nu], w3inv]
    rhs = t[t[xx3inv, nu], xx3]
    return int(np.count_nonzero(lhs == rhs)), nodes


def count_homs_gn_structured(knot: str, n: int, group: FiniteGroup, budget: int | None = None,
                             workers: int = 1) -> HomCountReport:
    """Count homomorphisms G_n(K) -> group by choosing nu, then c and f over the
    solutions of the braid relation with a = nu^n, then testing the last relator."""
    knot = knot.upper()
    pres = gn_presentation(knot, n)
    budget = default_budget() if budget is None else budget
    t0 = time.perf_counter()
    jobs = [(group, knot, n, nu, budget) for nu in range(group.order)]
    results = run_partitions(_structured_job, jobs, workers)
    by_class: dict[str, int] = {}
    total = nodes = 0
    for nu, (cnt, nd) in enumerate(results):
        total += cnt
        nodes += nd
        key = group.label(group.classes[int(group.class_of[nu])][0])
        by_class[key] = by_class.get(key, 0) + cnt
    if nodes > budget:
        raise BudgetExceeded("structured count exceeded the node budget", nodes=nodes, budget=budget)
    return HomCountReport(pres.name, group.name, "structured", total, by_class, nodes, "nu",
                          time.perf_counter() - t0)
