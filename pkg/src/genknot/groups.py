"""Tabulated finite groups used as homomorphism targets.

A :class:`FiniteGroup` is a dense Cayley table over element indices plus
inverse and identity data.  Constructors cover symmetric, alternating and
dihedral groups, permutation groups given by generators, the D(q, r) and
PSL(2, q) families, and direct products.  :func:`parse_group` reads the
small textual language accepted by the command line.
"""
from __future__ import annotations

import itertools
import re
from functools import cached_property

import numpy as np

from .errors import BudgetExceeded, PreconditionError

# largest group we will tabulate
TABLE_LIMIT = 4096

__all__ = [
    "FiniteGroup",
    "symmetric_group",
    "alternating_group",
    "dihedral_group",
    "cyclic_group",
    "trivial_group",
    "permutation_group",
    "dqr_handle",
    "psl_handle",
    "direct_product",
    "parse_group",
]


class FiniteGroup:
    """A finite group given by its multiplication table on ``range(order)``."""

    def __init__(self, name: str, table, identity: int = 0, labels=None):
        table = np.ascontiguousarray(table, dtype=np.int32)
        n = table.shape[0]
        if table.shape != (n, n):
            raise PreconditionError("multiplication table must be square")
        if n > TABLE_LIMIT:
            raise BudgetExceeded(f"group {name} of order {n} exceeds the table limit",
                                 nodes=n, budget=TABLE_LIMIT)
        self.name = name
        self.table = table
        self.order = n
        self.identity = int(identity)
        self._labels = labels
        inv = np.argmax(table == self.identity, axis=1).astype(np.int32)
        if not np.all(table[np.arange(n), inv] == self.identity):
            raise PreconditionError(f"table for {name} has elements without inverses")
        self.inv = inv

    def __repr__(self):
        return f"FiniteGroup({self.name}, order={self.order})"

    def label(self, g: int) -> str:
        if self._labels is not None:
            return str(self._labels[g])
        return str(g)

    def mul(self, g: int, h: int) -> int:
        return int(self.table[g, h])

    def invert(self, g: int) -> int:
        return int(self.inv[g])

    def pow(self, g: int, m: int) -> int:
        if m < 0:
            g, m = self.invert(g), -m
        out = self.identity
        for _ in range(m):
            out = self.mul(out, g)
        return out

    def elements(self) -> range:
        return range(self.order)

    # -- conjugacy ---------------------------------------------------------
    @cached_property
    def conjugation(self) -> np.ndarray:
        """conjugation[h, g] = h g h^-1."""
        t = self.table
        return t[t, self.inv[:, None]]

    @cached_property
    def classes(self) -> list[tuple[int, ...]]:
        """Conjugacy classes as sorted tuples, ordered by their least element."""
        conj = self.conjugation
        seen = np.zeros(self.order, dtype=bool)
        out = []
        for g in range(self.order):
            if seen[g]:
                continue
            cls = np.unique(conj[:, g])
            seen[cls] = True
            out.append(tuple(int(x) for x in cls))
        return out

    @cached_property
    def class_of(self) -> np.ndarray:
        idx = np.empty(self.order, dtype=np.int64)
        for k, cls in enumerate(self.classes):
            idx[list(cls)] = k
        return idx

    def class_representatives(self) -> list[tuple[int, int]]:
        """(representative, class size) pairs."""
        return [(cls[0], len(cls)) for cls in self.classes]

    @cached_property
    def element_orders(self) -> np.ndarray:
        orders = np.zeros(self.order, dtype=np.int64)
        cur = np.arange(self.order)
        for k in range(1, self.order + 1):
            hit = (cur == self.identity) & (orders == 0)
            orders[hit] = k
            if orders.all():
                break
            cur = self.table[cur, np.arange(self.order)]
        return orders

    def to_json(self):
        return {"name": self.name, "order": self.order}


# -- permutation groups -----------------------------------------------------

def _compose(p, q):
    """Left-to-right composition: first p, then q."""
    return tuple(q[i] for i in p)


def _perm_table_fast(perms) -> np.ndarray:
    arr = np.array(perms, dtype=np.int64)
    n, deg = arr.shape
    weights = deg ** np.arange(deg - 1, -1, -1, dtype=np.int64)
    keys = arr @ weights
    order = np.argsort(keys)
    sorted_keys = keys[order]
    table = np.empty((n, n), dtype=np.int32)
    for i in range(n):
        prod = arr[:, arr[i]]
        k = prod @ weights
        table[i] = order[np.searchsorted(sorted_keys, k)]
    return table


def permutation_group(name: str, generators, degree: int) -> FiniteGroup:
    """Subgroup of S_degree generated by permutations (tuples of images)."""
    ident = tuple(range(degree))
    gens = [tuple(g) for g in generators]
    for g in gens:
        if sorted(g) != list(ident):
            raise PreconditionError(f"{g} is not a permutation of {degree} points")
    seen = {ident}
    frontier = [ident]
    while frontier:
        nxt = []
        for p in frontier:
            for g in gens:
                pg = _compose(p, g)
                if pg not in seen:
                    if len(seen) >= TABLE_LIMIT:
                        raise BudgetExceeded(f"permutation group {name} exceeds {TABLE_LIMIT} elements",
                                             nodes=len(seen), budget=TABLE_LIMIT)
                    seen.add(pg)
                    nxt.append(pg)
        frontier = nxt
    perms = sorted(seen)
    return FiniteGroup(name, _perm_table_fast(perms), perms.index(ident),
                       labels=[_cycle_label(p) for p in perms])


def _cycle_label(p) -> str:
    seen = set()
    parts = []
    for s in range(len(p)):
        if s in seen or p[s] == s:
            seen.add(s)
            continue
        cyc = [s]
        seen.add(s)
        j = p[s]
        while j != s:
            cyc.append(j)
            seen.add(j)
            j = p[j]
        parts.append("(" + " ".join(map(str, cyc)) + ")")
    return "".join(parts) or "()"


def symmetric_group(n: int) -> FiniteGroup:
    perms = sorted(itertools.permutations(range(n)))
    return FiniteGroup(f"S{n}", _perm_table_fast(perms), 0, labels=[_cycle_label(p) for p in perms])


def _parity(p) -> int:
    inv = 0
    for i in range(len(p)):
        for j in range(i + 1, len(p)):
            inv += p[i] > p[j]
    return inv % 2


def alternating_group(n: int) -> FiniteGroup:
    perms = sorted(p for p in itertools.permutations(range(n)) if _parity(p) == 0)
    return FiniteGroup(f"A{n}", _perm_table_fast(perms), 0, labels=[_cycle_label(p) for p in perms])


def dihedral_group(k: int) -> FiniteGroup:
    """Dihedral group of order 2k as symmetries of a k-gon."""
    if k < 1:
        raise PreconditionError("dihedral group needs k >= 1")
    if k == 1:
        return cyclic_group(2, name="D(1)")
    if k == 2:
        return direct_product(cyclic_group(2), cyclic_group(2), name="D(2)")
    rot = tuple((i + 1) % k for i in range(k))
    ref = tuple((-i) % k for i in range(k))
    return permutation_group(f"D({k})", [rot, ref], k)


def cyclic_group(n: int, name: str | None = None) -> FiniteGroup:
    a = np.arange(n)
    return FiniteGroup(name or f"Z({n})", (a[:, None] + a[None, :]) % n, 0)


def trivial_group() -> FiniteGroup:
    return FiniteGroup("trivial", np.zeros((1, 1), dtype=np.int32), 0)


def dqr_handle(q: int, r: int) -> FiniteGroup:
    from .dqr import dqr_group
    d = dqr_group(q, r)
    return FiniteGroup(f"DQR({q},{r})", d.table, 0,
                       labels=[repr(d.wrap(g)) for g in range(d.order)])


def psl_handle(q: int) -> FiniteGroup:
    from .psl import psl_group
    g = psl_group(q)
    if g.size > TABLE_LIMIT:
        raise BudgetExceeded(f"PSL(2,{q}) has {g.size} elements, above the table limit",
                             nodes=g.size, budget=TABLE_LIMIT)
    return FiniteGroup(f"PSL(2,{q})", g.table, g.identity,
                       labels=[repr(e) for e in g.elements()])


def direct_product(g: FiniteGroup, h: FiniteGroup, name: str | None = None) -> FiniteGroup:
    n1, n2 = g.order, h.order
    if n1 * n2 > TABLE_LIMIT:
        raise BudgetExceeded(f"direct product of order {n1 * n2} exceeds the table limit",
                             nodes=n1 * n2, budget=TABLE_LIMIT)
    t1 = g.table.astype(np.int64)
    t2 = h.table.astype(np.int64)
    table = (t1[:, None, :, None] * n2 + t2[None, :, None, :]).reshape(n1 * n2, n1 * n2)
    labels = [f"({g.label(i)},{h.label(j)})" for i in range(n1) for j in range(n2)]
    return FiniteGroup(name or f"{g.name} x {h.name}", table, g.identity * n2 + h.identity,
                       labels=labels)


def _parse_cycles(text: str):
    cycles = re.findall(r"\(([^()]*)\)", text)
    if not cycles and text.strip():
        raise PreconditionError(f"cannot parse permutation {text!r}")
    return [[int(x) for x in re.split(r"[\s,]+", c.strip()) if x] for c in cycles]


def _perm_from_cycles(cycles, degree: int):
    img = list(range(degree))
    for cyc in cycles:
        for a, b in zip(cyc, cyc[1:] + cyc[:1]):
            img[a] = b
    return tuple(img)


def _split_top(text: str, seps: str):
    parts, depth, cur = [], 0, ""
    for ch in text:
        if ch in "([":
            depth += 1
        elif ch in ")]":
            depth -= 1
        if depth == 0 and ch in seps:
            parts.append(cur)
            cur = ""
        else:
            cur += ch
    parts.append(cur)
    return [p.strip() for p in parts if p.strip()]


def _parse_perm_spec(body: str) -> FiniteGroup:
    body = body.strip()
    if body.startswith("[") and body.endswith("]"):
        body = body[1:-1]
    gens_text = _split_top(body, ";,")
    gens = [_parse_cycles(g) for g in gens_text]
    points = [x for g in gens for c in g for x in c]
    if not points:
        return trivial_group()
    if min(points) < 0:
        raise PreconditionError("permutation points must be non-negative")
    degree = max(points) + 1
    perms = [_perm_from_cycles(g, degree) for g in gens]
    return permutation_group("perm:[" + ";".join(gens_text) + "]", perms, degree)


def parse_group(spec: str) -> FiniteGroup:
    """Parse the group mini-language, e.g. ``S3``, ``D(5)``, ``PSL(2,7)``, ``A4 x S3``."""
    text = spec.strip()
    if not text.startswith("perm:"):
        factors = _split_top(text, "x*")
        if len(factors) > 1:
            out = parse_group(factors[0])
            for f in factors[1:]:
                out = direct_product(out, parse_group(f))
            return out
    if text.startswith("perm:"):
        return _parse_perm_spec(text[5:])
    key = text.replace(" ", "")
    if key.lower() in ("trivial", "1", "z(1)"):
        return trivial_group()
    m = re.fullmatch(r"S(\d+)", key)
    if m:
        n = int(m.group(1))
        if n > 6:
            raise BudgetExceeded(f"S{n} is too large to tabulate", nodes=None, budget=TABLE_LIMIT)
        return symmetric_group(n)
    m = re.fullmatch(r"A(\d+)", key)
    if m:
        n = int(m.group(1))
        if n > 7:
            raise BudgetExceeded(f"A{n} is too large to tabulate", nodes=None, budget=TABLE_LIMIT)
        return alternating_group(n)
    m = re.fullmatch(r"D\((\d+)\)|D(\d+)", key)
    if m:
        return dihedral_group(int(m.group(1) or m.group(2)))
    m = re.fullmatch(r"Z\((\d+)\)|Z(\d+)|C(\d+)", key)
    if m:
        return cyclic_group(int(next(g for g in m.groups() if g)))
    m = re.fullmatch(r"DQR\((\d+),(\d+)\)", key, flags=re.IGNORECASE)
    if m:
        return dqr_handle(int(m.group(1)), int(m.group(2)))
    m = re.fullmatch(r"PSL\(2,(\d+)\)", key, flags=re.IGNORECASE)
    if m:
        return psl_handle(int(m.group(1)))
    m = re.fullmatch(r"H\((\d+),(\d+),(\d+)\)", key)
    if m:
        from .wreath import WreathGroup
        w = WreathGroup(*(int(x) for x in m.groups()))
        raise BudgetExceeded(f"{w!r} has {w.order} elements; full tabulation is out of reach",
                             nodes=w.order, budget=TABLE_LIMIT)
    raise PreconditionError(f"unknown group specification {spec!r}")
