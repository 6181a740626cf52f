"""PSL(2, F_q) for small prime powers q, acting on the projective line.

Points of P^1(F_q) are indexed ``0 .. q-1`` by field code, followed by
``q`` for infinity.  The class of [[a, b], [c, d]] acts on the right by
z -> (az + c)/(bz + d), i.e. row vectors times the matrix, so matrix
products compose permutations left to right.
"""
from __future__ import annotations

from functools import cached_property, lru_cache
from math import gcd

import numpy as np

from .errors import FieldMismatch, PreconditionError
from .ffield import Field, prime_power

# largest group that gets a dense multiplication table
TABLE_LIMIT = 2500
# largest group we are willing to enumerate at all
ENUM_LIMIT = 5_000_000

__all__ = [
    "PslGroup",
    "PslElement",
    "psl_group",
    "psl_enumerate",
    "psl_act",
    "psl_mul",
    "psl_inv",
    "psl_order",
    "psl_has_element_of_order",
    "psl_to_permutation",
    "cycle_string",
    "psl_order_formula",
]


def psl_order_formula(q: int) -> int:
    return q * (q * q - 1) // gcd(2, q - 1)


def cycle_string(perm, labels) -> str:
    """Disjoint-cycle notation, fixed points included, cycles led by their least point."""
    seen = set()
    parts = []
    for start in range(len(perm)):
        if start in seen:
            continue
        cyc = [start]
        seen.add(start)
        j = perm[start]
        while j != start:
            cyc.append(j)
            seen.add(j)
            j = perm[j]
        parts.append("(" + " ".join(labels[i] for i in cyc) + ")")
    return "".join(parts)


def perm_cycles(perm) -> list[tuple[int, ...]]:
    """Disjoint cycles of a permutation given as a sequence, each led by its least point."""
    seen = set()
    out = []
    for start in range(len(perm)):
        if start in seen:
            continue
        cyc = [start]
        seen.add(start)
        j = perm[start]
        while j != start:
            cyc.append(j)
            seen.add(j)
            j = perm[j]
        out.append(tuple(cyc))
    return out


class _Arith:
    """Vectorized field arithmetic on arrays of codes."""

    def __init__(self, field: Field):
        self.f = field
        self.prime = field.k == 1
        self.p = field.q
        if self.prime:
            self.inv_t = np.array([0] + [pow(v, self.p - 2, self.p) for v in range(1, self.p)],
                                  dtype=np.int64)
        else:
            self.add_t = field.add_table
            self.mul_t = field.mul_table
            self.neg_t = field.neg_table
            self.inv_t = field.inv_table

    def add(self, x, y):
        return (x + y) % self.p if self.prime else self.add_t[x, y]

    def mul(self, x, y):
        return (x * y) % self.p if self.prime else self.mul_t[x, y]

    def neg(self, x):
        return (-x) % self.p if self.prime else self.neg_t[x]

    def inv(self, x):
        """Multiplicative inverse; 0 maps to 0 and must be masked by callers."""
        return self.inv_t[x]

    def matmul(self, m, n):
        a1, b1, c1, d1 = m[..., 0], m[..., 1], m[..., 2], m[..., 3]
        a2, b2, c2, d2 = n[..., 0], n[..., 1], n[..., 2], n[..., 3]
        add, mul = self.add, self.mul
        return np.stack([
            add(mul(a1, a2), mul(b1, c2)),
            add(mul(a1, b2), mul(b1, d2)),
            add(mul(c1, a2), mul(d1, c2)),
            add(mul(c1, b2), mul(d1, d2)),
        ], axis=-1)


class PslGroup:
    """The group PSL(2, F_q) with all elements materialised as code quadruples."""

    def __init__(self, q: int):
        pk = prime_power(q)
        if pk is None:
            raise PreconditionError(f"{q} is not a prime power")
        size = psl_order_formula(q)
        if size > ENUM_LIMIT:
            raise PreconditionError(f"|PSL(2,{q})| = {size} exceeds the enumeration bound")
        self.q = q
        self.field = Field(*pk)
        self.npoints = q + 1
        self._ar = _Arith(self.field)
        self.matrices = self._enumerate()
        self.size = len(self.matrices)
        if self.size != size:
            raise AssertionError(f"enumerated {self.size} elements, expected {size}")
        ident = self.canonical_codes((1, 0, 0, 1))
        self.identity = self.index_of(ident)

    def __repr__(self):
        return f"PSL(2,{self.q})"

    def __reduce__(self):
        return (psl_group, (self.q,))

    # -- construction -------------------------------------------------------
    def _canonical_mask(self, mats):
        """Boolean mask of rows already in canonical sign."""
        if self.field.q == 2:
            return np.ones(len(mats), dtype=bool)
        nz = mats != 0
        first = np.argmax(nz, axis=1)
        lead = mats[np.arange(len(mats)), first]
        return lead < self._ar.neg(lead)

    def _enumerate(self):
        ar = self._ar
        n = self.field.order
        codes = np.arange(n, dtype=np.int64)
        # a != 0: d = (1 + bc) / a
        a, b, c = np.meshgrid(codes[1:], codes, codes, indexing="ij")
        a, b, c = a.ravel(), b.ravel(), c.ravel()
        d = ar.mul(ar.add(ar.mul(b, c), np.ones_like(b)), ar.inv(a))
        part1 = np.stack([a, b, c, d], axis=1)
        # a == 0: bc = -1, d free
        b2, d2 = np.meshgrid(codes[1:], codes, indexing="ij")
        b2, d2 = b2.ravel(), d2.ravel()
        c2 = ar.neg(ar.inv(b2))
        part2 = np.stack([np.zeros_like(b2), b2, c2, d2], axis=1)
        mats = np.concatenate([part1, part2])
        mats = mats[self._canonical_mask(mats)]
        order = np.lexsort(mats.T[::-1])
        return np.ascontiguousarray(mats[order])

    def canonical_codes(self, m) -> tuple[int, int, int, int]:
        m = tuple(int(x) for x in m)
        f = self.field
        if f.mul(m[0], m[3]) != f.add(f.mul(m[1], m[2]), 1):
            raise PreconditionError(f"matrix {m} does not have determinant 1")
        if f.q == 2:
            return m
        for x in m:
            if x:
                if x < f.neg(x):
                    return m
                return tuple(f.neg(y) for y in m)
        raise AssertionError("zero matrix")

    @cached_property
    def _index(self) -> dict:
        return {tuple(int(x) for x in row): i for i, row in enumerate(self.matrices)}

    def index_of(self, codes) -> int:
        return self._index[tuple(int(x) for x in codes)]

    def from_matrix(self, a, b, c, d) -> "PslElement":
        """Class of [[a, b], [c, d]]; entries may be ints (reduced mod p) or field data."""
        vals = [self.field(x).code for x in (a, b, c, d)]
        return PslElement(self, self.index_of(self.canonical_codes(vals)))

    def element(self, i: int) -> "PslElement":
        return PslElement(self, i)

    def elements(self) -> list["PslElement"]:
        return [PslElement(self, i) for i in range(self.size)]

    # -- tables --------------------------------------------------------------
    def _canonicalize_array(self, mats):
        if self.field.q == 2:
            return mats
        keep = self._canonical_mask(mats)
        return np.where(keep[:, None], mats, self._ar.neg(mats))

    def _indices_of(self, mats):
        """Vectorized index lookup of canonical matrices."""
        n = self.field.order
        key = ((mats[:, 0] * n + mats[:, 1]) * n + mats[:, 2]) * n + mats[:, 3]
        all_keys = ((self.matrices[:, 0] * n + self.matrices[:, 1]) * n
                    + self.matrices[:, 2]) * n + self.matrices[:, 3]
        pos = np.searchsorted(all_keys, key)
        if not np.array_equal(all_keys[np.minimum(pos, len(all_keys) - 1)], key):
            raise AssertionError("product matrix not found among canonical elements")
        return pos

    @cached_property
    def table(self) -> np.ndarray:
        if self.size > TABLE_LIMIT:
            raise PreconditionError(f"{self!r} too large for a dense multiplication table")
        n = self.size
        out = np.empty((n, n), dtype=np.int64)
        for i in range(n):
            prod = self._ar.matmul(np.broadcast_to(self.matrices[i], (n, 4)), self.matrices)
            out[i] = self._indices_of(self._canonicalize_array(prod))
        return out

    @cached_property
    def inv(self) -> np.ndarray:
        # inverse of [[a,b],[c,d]] is [[d,-b],[-c,a]]
        m = self.matrices
        ar = self._ar
        invm = np.stack([m[:, 3], ar.neg(m[:, 1]), ar.neg(m[:, 2]), m[:, 0]], axis=1)
        return self._indices_of(self._canonicalize_array(invm))

    def mul(self, i: int, j: int) -> int:
        if self.size <= TABLE_LIMIT:
            return int(self.table[i, j])
        prod = self._ar.matmul(self.matrices[i], self.matrices[j])[None, :]
        return int(self._indices_of(self._canonicalize_array(prod))[0])

    def pow(self, i: int, e: int) -> int:
        if e < 0:
            i = int(self.inv[i])
            e = -e
        result, base = self.identity, i
        while e:
            if e & 1:
                result = self.mul(result, base)
            base = self.mul(base, base)
            e >>= 1
        return result

    @cached_property
    def orders(self) -> np.ndarray:
        """Element orders by a vectorized power scan (orders never exceed q + 1)."""
        m = self.matrices
        ident = np.array(self.canonical_codes((1, 0, 0, 1)))
        minus = np.array([self._ar.neg(np.int64(v)) for v in ident]) if self.field.q != 2 else ident
        orders = np.zeros(self.size, dtype=np.int64)
        cur = m.copy()
        for k in range(1, self.q + 2):
            hit = (np.all(cur == ident, axis=1) | np.all(cur == minus, axis=1)) & (orders == 0)
            orders[hit] = k
            if orders.all():
                break
            cur = self._ar.matmul(cur, m)
        if not orders.all():
            raise AssertionError("order scan did not terminate")
        return orders

    @cached_property
    def perms(self) -> np.ndarray:
        """Row g lists the image point of each point under g (right action)."""
        m = self.matrices
        ar = self._ar
        q = self.q
        out = np.empty((self.size, q + 1), dtype=np.int64)
        a, b, c, d = m[:, 0], m[:, 1], m[:, 2], m[:, 3]
        for z in range(q):
            zz = np.int64(z)
            x = ar.add(ar.mul(zz, a), c)
            y = ar.add(ar.mul(zz, b), d)
            out[:, z] = self._ratio(x, y)
        out[:, q] = self._ratio(a, b)
        return out

    def _ratio(self, x, y):
        ar = self._ar
        safe_y = np.where(y == 0, 1, y)
        val = ar.mul(x, ar.inv(safe_y))
        return np.where(y == 0, self.q, val)

    def point_labels(self) -> list[str]:
        return [str(i) for i in range(self.q)] + ["inf"]

    def point_label(self, i: int) -> str:
        return "inf" if i == self.q else str(i)


@lru_cache(maxsize=None)
def psl_group(q: int) -> PslGroup:
    return PslGroup(q)


class PslElement:
    """Immutable element of a :class:`PslGroup`, stored by index."""

    __slots__ = ("group", "index")

    def __init__(self, group: PslGroup, index: int):
        self.group = group
        self.index = int(index)

    def _same(self, other):
        if not isinstance(other, PslElement):
            return False
        if other.group is not self.group and other.group.q != self.group.q:
            raise FieldMismatch("elements of different PSL groups")
        return True

    @property
    def codes(self) -> tuple[int, int, int, int]:
        return tuple(int(x) for x in self.group.matrices[self.index])

    @property
    def entries(self):
        f = self.group.field
        return tuple(f(list(f.decode(c))) for c in self.codes)

    def __mul__(self, other):
        if not self._same(other):
            return NotImplemented
        return PslElement(self.group, self.group.mul(self.index, other.index))

    def inverse(self) -> "PslElement":
        return PslElement(self.group, int(self.group.inv[self.index]))

    def __pow__(self, e: int):
        return PslElement(self.group, self.group.pow(self.index, e))

    def order(self) -> int:
        return int(self.group.orders[self.index])

    def is_identity(self) -> bool:
        return self.index == self.group.identity

    @property
    def perm(self) -> tuple[int, ...]:
        return tuple(int(x) for x in self.group.perms[self.index])

    def act(self, point: int) -> int:
        return int(self.group.perms[self.index, point])

    def cycles(self) -> str:
        return cycle_string(self.perm, self.group.point_labels())

    def __eq__(self, other):
        return isinstance(other, PslElement) and other.group.q == self.group.q and other.index == self.index

    def __hash__(self):
        return hash((self.group.q, self.index))

    def _entry_json(self, code):
        f = self.group.field
        return code if f.k == 1 else list(f.decode(code))

    def to_json(self):
        a, b, c, d = self.codes
        return [[self._entry_json(a), self._entry_json(b)], [self._entry_json(c), self._entry_json(d)]]

    def __repr__(self):
        rows = self.to_json()
        fmt = lambda v: str(v).replace(" ", "")
        return f"[[{fmt(rows[0][0])},{fmt(rows[0][1])}],[{fmt(rows[1][0])},{fmt(rows[1][1])}]]"


def psl_enumerate(q: int) -> list[PslElement]:
    return psl_group(q).elements()


def psl_act(g: PslElement, z: int) -> int:
    return g.act(z)


def psl_mul(g: PslElement, h: PslElement) -> PslElement:
    return g * h


def psl_inv(g: PslElement) -> PslElement:
    return g.inverse()


def psl_order(g: PslElement) -> int:
    return g.order()


def psl_has_element_of_order(q: int, m: int) -> bool:
    return bool(np.any(psl_group(q).orders == m))


def psl_to_permutation(g: PslElement) -> tuple[int, ...]:
    return g.perm
