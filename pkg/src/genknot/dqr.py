"""The base groups D(q, r) = V x| Z/r, with V the additive group of F_{q^(r-1)}.

Multiplication is (v, i)(w, j) = (v + zeta^i w, i + j).  Elements are
indexed ``v_code * r + i`` so the identity is 0 and xi = (0, 1) is 1.
"""
from __future__ import annotations

import enum
from functools import cached_property, lru_cache

import numpy as np

from .errors import FieldMismatch, PreconditionError
from .ffield import Field, FieldElement, is_prime, zeta_of_order

TABLE_LIMIT = 6000

__all__ = [
    "DqrGroup",
    "DqrElement",
    "dqr_group",
    "Commute",
    "dqr_mul",
    "dqr_inv",
    "dqr_pow",
    "dqr_order",
    "dqr_conjugacy_class",
    "dqr_commute_classify",
    "dqr_enumerate",
]


class Commute(enum.Enum):
    BOTH_IN_V = "BothInV"
    SAME_CYCLIC_ORDER_R = "SameCyclicOrderR"
    NOT_COMMUTING = "NotCommuting"


class DqrGroup:
    def __init__(self, q: int, r: int):
        if not (is_prime(q) and is_prime(r)) or q == r:
            raise PreconditionError(f"D(q,r) needs distinct primes, got q={q}, r={r}")
        self.q = q
        self.r = r
        self.field = Field(q, r - 1)
        self.zeta = zeta_of_order(self.field, r)
        self.vsize = self.field.order
        self.order = self.vsize * r
        # zeta_pows[i] = code of zeta^i
        self.zeta_pows = [self.field.pow(self.zeta.code, i) for i in range(r)]
        self.identity = 0
        self.xi = 1

    def __repr__(self):
        return f"D({self.q},{self.r})"

    def __reduce__(self):
        return (dqr_group, (self.q, self.r))

    # -- index helpers ---------------------------------------------------------
    def pack(self, v: int, i: int) -> int:
        return v * self.r + (i % self.r)

    def unpack(self, g: int) -> tuple[int, int]:
        return divmod(g, self.r)

    def bracket(self, g: int) -> int:
        """The quotient map [g] onto Z/r."""
        return g % self.r

    def in_v(self, g: int) -> bool:
        return g % self.r == 0

    def element(self, v, i: int = 0) -> "DqrElement":
        if isinstance(v, FieldElement):
            v = self.field(v).code
        elif isinstance(v, (list, tuple)):
            v = self.field.encode(v)
        else:
            v = self.field.encode([v])
        return DqrElement(self, self.pack(v, i))

    def wrap(self, g: int) -> "DqrElement":
        return DqrElement(self, g)

    # -- arithmetic on indices ---------------------------------------------------
    def _twist(self, i: int, w: int) -> int:
        return self.field.mul(self.zeta_pows[i], w)

    def _mul_slow(self, g: int, h: int) -> int:
        v, i = divmod(g, self.r)
        w, j = divmod(h, self.r)
        return self.pack(self.field.add(v, self._twist(i, w)), i + j)

    def _inv_slow(self, g: int) -> int:
        v, i = divmod(g, self.r)
        # (v, i)^-1 = (-zeta^-i v, -i)
        return self.pack(self.field.neg(self._twist((-i) % self.r, v)), -i)

    @cached_property
    def table(self) -> np.ndarray:
        if self.order > TABLE_LIMIT:
            raise PreconditionError(f"{self!r} too large for a dense table")
        f = self.field
        r = self.r
        n = self.order
        # twist[i, w] = zeta^i * w
        twist = np.array([[f.mul(self.zeta_pows[i], w) for w in range(self.vsize)]
                          for i in range(r)], dtype=np.int64)
        if f.k == 1:
            add = (np.arange(self.vsize)[:, None] + np.arange(self.vsize)[None, :]) % f.q
        else:
            add = f.add_table
        g = np.arange(n)
        v, i = g // r, g % r
        w, j = v, i
        v_out = add[v[:, None], twist[i[:, None], w[None, :]]]
        return (v_out * r + (i[:, None] + j[None, :]) % r).astype(np.int64)

    @cached_property
    def mul_list(self) -> list[list[int]]:
        return self.table.tolist()

    @cached_property
    def inv(self) -> np.ndarray:
        return np.array([self._inv_slow(g) for g in range(self.order)], dtype=np.int64)

    @cached_property
    def inv_list(self) -> list[int]:
        return self.inv.tolist()

    def mul(self, g: int, h: int) -> int:
        if self.order <= TABLE_LIMIT:
            return self.mul_list[g][h]
        return self._mul_slow(g, h)

    def invert(self, g: int) -> int:
        if self.order <= TABLE_LIMIT:
            return self.inv_list[g]
        return self._inv_slow(g)

    def pow(self, g: int, m: int) -> int:
        if m < 0:
            g, m = self.invert(g), -m
        result = 0
        while m:
            if m & 1:
                result = self.mul(result, g)
            g = self.mul(g, g)
            m >>= 1
        return result

    def conj(self, h: int, g: int) -> int:
        """h g h^-1."""
        return self.mul(self.mul(h, g), self.invert(h))

    def order_of(self, g: int) -> int:
        if g == 0:
            return 1
        return self.q if self.in_v(g) else self.r

    def order_bruteforce(self, g: int) -> int:
        m, x = 1, g
        while x != 0:
            x = self.mul(x, g)
            m += 1
        return m

    def xi_pow(self, e: int) -> int:
        """xi^e = (0, e)."""
        return e % self.r

    # -- structure ----------------------------------------------------------
    def conjugacy_class(self, g: int) -> frozenset[int]:
        """Closed form of the class of g."""
        if g == 0:
            return frozenset([0])
        v, i = divmod(g, self.r)
        if i == 0:
            return frozenset(self.pack(self._twist(k, v), 0) for k in range(self.r))
        return frozenset(self.pack(w, i) for w in range(self.vsize))

    def conjugacy_class_bruteforce(self, g: int) -> frozenset[int]:
        return frozenset(self.conj(h, g) for h in range(self.order))

    def commute_classify(self, g: int, h: int) -> tuple[Commute, int | None]:
        if self.mul(g, h) != self.mul(h, g):
            return Commute.NOT_COMMUTING, None
        if self.in_v(g) and self.in_v(h):
            return Commute.BOTH_IN_V, None
        base = g if not self.in_v(g) else h
        other = h if base == g else g
        for k in range(1, self.r + 1):
            if self.pow(base, k) == other:
                return Commute.SAME_CYCLIC_ORDER_R, k
        raise AssertionError(f"commuting pair {g}, {h} outside both commuting cases")

    def cyclic_root(self, g: int, ell: int) -> int:
        """The unique element of <g> whose ell-th power is g (ell coprime to ord g)."""
        m = self.order_of(g)
        if m == 1:
            return 0
        return self.pow(g, pow(ell, -1, m))

    def v_part(self, g: int) -> FieldElement:
        return FieldElement(self.field, g // self.r)

    # -- aliases for D(q, 2) ----------------------------------------------------
    def alias(self, g: int) -> str:
        """rho^a sigma^b notation, rho = (1, 0), sigma = (0, 1); only for r = 2, k = 1."""
        if self.r != 2:
            raise PreconditionError("rho/sigma aliases exist only for D(q, 2)")
        v, i = divmod(g, 2)
        parts = []
        if v == 1:
            parts.append("rho")
        elif v > 1:
            parts.append(f"rho^{v}")
        if i:
            parts.append("sigma")
        return "*".join(parts) if parts else "1"

    def from_alias(self, text: str) -> int:
        text = text.replace(" ", "")
        if text == "1":
            return 0
        v, i = 0, 0
        for part in text.split("*"):
            if part.startswith("rho"):
                v = int(part[4:]) if part.startswith("rho^") else 1
            elif part == "sigma":
                i = 1
            else:
                raise PreconditionError(f"cannot parse alias {text!r}")
        return self.pack(v % self.q, i)


@lru_cache(maxsize=None)
def dqr_group(q: int, r: int) -> DqrGroup:
    return DqrGroup(q, r)


class DqrElement:
    """Value wrapper around an index of a :class:`DqrGroup`."""

    __slots__ = ("group", "index")

    def __init__(self, group: DqrGroup, index: int):
        self.group = group
        self.index = int(index)

    @property
    def v(self) -> FieldElement:
        return self.group.v_part(self.index)

    @property
    def i(self) -> int:
        return self.index % self.group.r

    def _other(self, other):
        if not isinstance(other, DqrElement):
            return None
        if other.group is not self.group and (other.group.q, other.group.r) != (self.group.q, self.group.r):
            raise FieldMismatch("elements of different D(q,r)")
        return other.index

    def __mul__(self, other):
        h = self._other(other)
        if h is None:
            return NotImplemented
        return DqrElement(self.group, self.group.mul(self.index, h))

    def inverse(self):
        return DqrElement(self.group, self.group.invert(self.index))

    def __pow__(self, m: int):
        return DqrElement(self.group, self.group.pow(self.index, m))

    def order(self) -> int:
        return self.group.order_of(self.index)

    def __eq__(self, other):
        return (isinstance(other, DqrElement) and other.index == self.index
                and (other.group.q, other.group.r) == (self.group.q, self.group.r))

    def __hash__(self):
        return hash((self.group.q, self.group.r, self.index))

    def __repr__(self):
        return f"(v={self.v!r}, i={self.i})"

    def to_json(self):
        return {"v": self.v.to_json(), "i": self.i}


def dqr_mul(g: DqrElement, h: DqrElement) -> DqrElement:
    return g * h


def dqr_inv(g: DqrElement) -> DqrElement:
    return g.inverse()


def dqr_pow(g: DqrElement, m: int) -> DqrElement:
    return g**m


def dqr_order(g: DqrElement) -> int:
    return g.order()


def dqr_conjugacy_class(g: DqrElement) -> set[DqrElement]:
    return {DqrElement(g.group, h) for h in g.group.conjugacy_class(g.index)}


def dqr_commute_classify(g: DqrElement, h: DqrElement):
    if g._other(h) is None:
        raise FieldMismatch("second argument is not a D(q,r) element")
    return g.group.commute_classify(g.index, h.index)


def dqr_enumerate(group: DqrGroup) -> list[DqrElement]:
    if group.order > 1 << 20:
        raise PreconditionError(f"{group!r} exceeds the enumeration bound")
    return [DqrElement(group, g) for g in range(group.order)]
