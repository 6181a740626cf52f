"""The wreath products H(p, q, r) = D(q, r) wr PSL(2, p).

An element is a base tuple indexed by the projective line
(0, 1, ..., p-1, inf) together with a top element of PSL(2, p).
Multiplication is (ab)_i = a_i * b_{i.a^}, where i.a^ is the right action
of the top of a.  Base entries are stored as indices into the D(q, r)
group, tops as indices into PSL(2, p).

Besides the scalar element type there is a small batched API working on
numpy arrays ``(base[B, p+1], top[B])`` used by the brute-force oracles.
"""
from __future__ import annotations

import itertools
import json
from dataclasses import dataclass
from functools import cached_property, lru_cache
from math import gcd

import numpy as np

from .dqr import DqrElement, DqrGroup, dqr_group
from .errors import FieldMismatch, HypothesisError, PreconditionError
from .ffield import is_prime
from .psl import PslElement, PslGroup, cycle_string, psl_group

__all__ = [
    "WreathGroup",
    "WreathElement",
    "StandardFormCertificate",
    "wreath_group",
    "w_mul",
    "w_inv",
    "w_pow",
    "cycle_product",
    "is_standard_form",
    "is_reduced_standard_form",
    "to_reduced_standard_form",
    "to_Apr",
    "conjugate_into_A",
    "centralizer_size",
    "bracket",
    "double_bracket",
    "v_norm",
    "centralizer_Calpha",
    "check_power_lemma",
]


class WreathGroup:
    def __init__(self, p: int, q: int, r: int):
        if not all(is_prime(x) for x in (p, q, r)) or len({p, q, r}) != 3:
            raise PreconditionError(f"H(p,q,r) needs three distinct primes, got {(p, q, r)}")
        self.p, self.q, self.r = p, q, r
        self.base: DqrGroup = dqr_group(q, r)
        self.psl: PslGroup = psl_group(p)
        self.npoints = p + 1
        self.xi = self.base.xi
        self._perm = self.psl.perms.tolist()
        self._pinv = self.psl.inv.tolist()

    def __repr__(self):
        return f"H({self.p},{self.q},{self.r})"

    def __reduce__(self):
        return (wreath_group, (self.p, self.q, self.r))

    @property
    def order(self) -> int:
        return self.base.order ** self.npoints * self.psl.size

    @property
    def params(self) -> tuple[int, int, int]:
        return (self.p, self.q, self.r)

    # -- construction -------------------------------------------------------
    @cached_property
    def identity(self) -> "WreathElement":
        return WreathElement(self, (0,) * self.npoints, self.psl.identity)

    def element(self, base, top=None) -> "WreathElement":
        """Build an element from base entries (indices or DqrElements) and a top."""
        base = tuple(b.index if isinstance(b, DqrElement) else int(b) for b in base)
        if len(base) != self.npoints:
            raise PreconditionError(f"base tuple needs {self.npoints} entries, got {len(base)}")
        if any(not 0 <= b < self.base.order for b in base):
            raise PreconditionError("base entry out of range")
        if top is None:
            top = self.psl.identity
        elif isinstance(top, PslElement):
            if top.group.q != self.p:
                raise FieldMismatch("top element lives in a different PSL")
            top = top.index
        elif isinstance(top, (tuple, list)):
            top = self.psl.from_matrix(*top).index
        return WreathElement(self, base, int(top))

    def xi_pow(self, e: int) -> int:
        return self.base.xi_pow(e)

    def top_element(self, top: int) -> PslElement:
        return PslElement(self.psl, top)

    def random_element(self, rng, top=None) -> "WreathElement":
        base = tuple(int(x) for x in rng.integers(0, self.base.order, self.npoints))
        if top is None:
            top = int(rng.integers(0, self.psl.size))
        return WreathElement(self, base, top)

    # -- arithmetic on raw (base, top) ------------------------------------------
    def _mul(self, a, at, b, bt):
        perm = self._perm[at]
        ml = self.base.mul_list
        return tuple(ml[a[i]][b[perm[i]]] for i in range(self.npoints)), self.psl.mul(at, bt)

    def _inv(self, a, at):
        it = self._pinv[at]
        perm = self._perm[it]
        inv = self.base.inv_list
        return tuple(inv[a[perm[i]]] for i in range(self.npoints)), it

    def mul(self, x: "WreathElement", y: "WreathElement") -> "WreathElement":
        self._check(x)
        self._check(y)
        base, top = self._mul(x.base, x.top, y.base, y.top)
        return WreathElement(self, base, top)

    def inv(self, x: "WreathElement") -> "WreathElement":
        base, top = self._inv(x.base, x.top)
        return WreathElement(self, base, top)

    def pow(self, x: "WreathElement", m: int) -> "WreathElement":
        if m < 0:
            x, m = self.inv(x), -m
        rb, rt = self.identity.base, self.identity.top
        b, t = x.base, x.top
        while m:
            if m & 1:
                rb, rt = self._mul(rb, rt, b, t)
            b, t = self._mul(b, t, b, t)
            m >>= 1
        return WreathElement(self, rb, rt)

    def conj(self, h: "WreathElement", g: "WreathElement") -> "WreathElement":
        """h g h^-1."""
        return self.mul(self.mul(h, g), self.inv(h))

    def _check(self, x):
        if not isinstance(x, WreathElement):
            raise FieldMismatch(f"expected a wreath element, got {type(x).__name__}")
        if x.group is not self and x.group.params != self.params:
            raise FieldMismatch(f"element of {x.group!r} used in {self!r}")

    # -- permutation data ---------------------------------------------------------
    def act(self, top: int, point: int) -> int:
        return self._perm[top][point]

    def cycles(self, top: int) -> list[tuple[int, ...]]:
        """Disjoint cycles of a top, each starting at its smallest point, sorted."""
        perm = self._perm[top]
        seen = [False] * self.npoints
        out = []
        for start in range(self.npoints):
            if seen[start]:
                continue
            cyc = [start]
            seen[start] = True
            j = perm[start]
            while j != start:
                cyc.append(j)
                seen[j] = True
                j = perm[j]
            out.append(tuple(cyc))
        return out

    def orbit_reps(self, top: int) -> list[int]:
        return [c[0] for c in self.cycles(top)]

    def cycle_length(self, top: int, point: int) -> int:
        perm = self._perm[top]
        m, j = 1, perm[point]
        while j != point:
            j = perm[j]
            m += 1
        return m

    def point_label(self, i: int) -> str:
        return self.psl.point_label(i)

    # -- batched arithmetic -----------------------------------------------------
    @cached_property
    def _dtable(self) -> np.ndarray:
        return self.base.table

    @cached_property
    def _ptable(self) -> np.ndarray:
        return self.psl.table

    def batch_mul(self, ab, at, bb, bt):
        """Multiply batches; tops may be scalars (shared by the whole batch)."""
        perms = self.psl.perms
        if np.ndim(at) == 0:
            bperm = bb[..., perms[int(at)]]
        else:
            bperm = np.take_along_axis(np.broadcast_to(bb, ab.shape), perms[at], axis=-1)
        base = self._dtable[ab, bperm]
        if np.ndim(at) == 0 and np.ndim(bt) == 0:
            top = int(self._ptable[int(at), int(bt)])
        else:
            top = self._ptable[at, bt]
        return base, top

    def batch_pow(self, base, top, m: int):
        if m < 1:
            raise PreconditionError("batch_pow needs a positive exponent")
        rb, rt = base, top
        for _ in range(m - 1):
            rb, rt = self.batch_mul(rb, rt, base, top)
        return rb, rt

    # -- JSON ---------------------------------------------------------------
    def from_json(self, data) -> "WreathElement":
        base = []
        for entry in data["base"]:
            if isinstance(entry, str):
                base.append(self.base.from_alias(entry))
            elif isinstance(entry, dict):
                base.append(self.base.element(entry["v"], entry["i"]).index)
            else:
                base.append(int(entry))
        top = data.get("top")
        if isinstance(top, str):
            top = _parse_matrix(top)
        if isinstance(top, list):
            top = [x for row in top for x in row]
        return self.element(base, top)


def _parse_matrix(text: str):
    return json.loads(text)


@lru_cache(maxsize=None)
def wreath_group(p: int, q: int, r: int) -> WreathGroup:
    return WreathGroup(p, q, r)


class WreathElement:
    """Immutable element of :class:`WreathGroup`."""

    __slots__ = ("group", "base", "top")

    def __init__(self, group: WreathGroup, base: tuple, top: int):
        self.group = group
        self.base = base
        self.top = top

    def __mul__(self, other):
        if not isinstance(other, WreathElement):
            return NotImplemented
        return self.group.mul(self, other)

    def inverse(self) -> "WreathElement":
        return self.group.inv(self)

    def __pow__(self, m: int):
        return self.group.pow(self, m)

    def __eq__(self, other):
        return (isinstance(other, WreathElement) and other.group.params == self.group.params
                and other.base == self.base and other.top == self.top)

    def __hash__(self):
        return hash((self.base, self.top))

    def commutes_with(self, other: "WreathElement") -> bool:
        return self * other == other * self

    @property
    def top_element(self) -> PslElement:
        return self.group.top_element(self.top)

    def is_identity(self) -> bool:
        return self.top == self.group.psl.identity and not any(self.base)

    def entry(self, i: int) -> DqrElement:
        return DqrElement(self.group.base, self.base[i])

    def cycle_product(self, i: int) -> int:
        return cycle_product(self, i)

    def in_A(self) -> bool:
        """Membership in the subgroup <xi> wr PSL."""
        return all(b < self.group.r for b in self.base)

    def in_V(self) -> bool:
        """Membership in V wr PSL."""
        return all(b % self.group.r == 0 for b in self.base)

    def to_json(self):
        return {"base": [self.entry(i).to_json() for i in range(self.group.npoints)],
                "top": repr(self.top_element)}

    def describe(self) -> str:
        """Compact text: base entries as (v,i) pairs and the top as cycles."""
        d = self.group.base
        parts = []
        for b in self.base:
            v, i = d.unpack(b)
            parts.append(f"{list(d.field.decode(v))}:{i}")
        return f"(({', '.join(parts)}), {self.top_element.cycles()})"

    def __repr__(self):
        return f"WreathElement{self.describe()}"


@dataclass(frozen=True)
class StandardFormCertificate:
    alpha: WreathElement
    gamma: WreathElement
    conjugator: WreathElement
    orbit_reps: tuple[int, ...]

    def verify(self) -> bool:
        g = self.alpha.group
        return g.conj(self.conjugator, self.alpha) == self.gamma

    def to_json(self):
        return {"alpha": self.alpha.to_json(), "gamma": self.gamma.to_json(),
                "conjugator": self.conjugator.to_json(), "orbit_reps": list(self.orbit_reps)}


# -- operations ------------------------------------------------------------

def w_mul(a: WreathElement, b: WreathElement) -> WreathElement:
    return a.group.mul(a, b)


def w_inv(a: WreathElement) -> WreathElement:
    return a.group.inv(a)


def w_pow(a: WreathElement, m: int) -> WreathElement:
    return a.group.pow(a, m)


def cycle_product(a: WreathElement, i: int) -> int:
    """Ordered product a_i a_{i.a^} ... around the cycle of the top through i."""
    g = a.group
    perm = g._perm[a.top]
    ml = g.base.mul_list
    acc = a.base[i]
    j = perm[i]
    while j != i:
        acc = ml[acc][a.base[j]]
        j = perm[j]
    return acc


def is_standard_form(a: WreathElement) -> bool:
    perm = a.group._perm[a.top]
    return all(a.base[perm[i]] == a.base[i] for i in range(a.group.npoints))


def is_reduced_standard_form(a: WreathElement) -> bool:
    if not is_standard_form(a):
        return False
    g = a.group
    for i in range(g.npoints):
        ell = g.cycle_length(a.top, i)
        if (g.base.pow(a.base[i], ell) == 0) != (a.base[i] == 0):
            return False
    return True


def _prefix_conjugator(a: WreathElement, reps) -> tuple:
    """delta with delta_{j.a^m} = a_j a_{j.a^} ... a_{j.a^(m-1)}, 1 <= m <= ell."""
    g = a.group
    perm = g._perm[a.top]
    ml = g.base.mul_list
    delta = [0] * g.npoints
    for j in reps:
        acc = a.base[j]
        k = perm[j]
        while True:
            delta[k] = acc
            if k == j:
                break
            acc = ml[acc][a.base[k]]
            k = perm[k]
    return tuple(delta)


def to_reduced_standard_form(a: WreathElement) -> StandardFormCertificate:
    g = a.group
    d = g.base
    cycles = g.cycles(a.top)
    reps = tuple(c[0] for c in cycles)
    gamma_base = [0] * g.npoints
    for cyc in cycles:
        j = cyc[0]
        ell = len(cyc)
        pj = cycle_product(a, j)
        o = d.order_of(pj)
        if gcd(ell, o) != 1:
            labels = [g.point_label(i) for i in cyc]
            raise HypothesisError(
                f"cycle ({' '.join(labels)}) has length {ell} but its cycle-product has order {o}",
                {"cycle": labels, "length": ell, "cycle_product_order": o,
                 "cycle_product": d.wrap(pj).to_json()})
        root = d.cyclic_root(pj, ell)
        for i in cyc:
            gamma_base[i] = root
    gamma = WreathElement(g, tuple(gamma_base), a.top)
    ident = g.psl.identity
    delta = WreathElement(g, _prefix_conjugator(a, reps), ident)
    delta2 = WreathElement(g, _prefix_conjugator(gamma, reps), ident)
    conj = g.mul(g.inv(delta2), delta)
    cert = StandardFormCertificate(a, gamma, conj, reps)
    if not cert.verify():
        raise AssertionError("standard-form conjugator failed re-multiplication")
    return cert


def to_Apr(a: WreathElement) -> StandardFormCertificate:
    """Conjugate a standard-form element with base orders in {1, r} into <xi> wr PSL."""
    g = a.group
    d = g.base
    f = d.field
    if not is_standard_form(a):
        raise PreconditionError("to_Apr needs an element in standard form")
    conj_base = []
    for i, b in enumerate(a.base):
        v, e = d.unpack(b)
        if e == 0:
            if v != 0:
                raise PreconditionError(
                    f"entry at {g.point_label(i)} has order {d.q}, not 1 or {d.r}")
            conj_base.append(0)
            continue
        # (w,0)(v,e)(w,0)^-1 = (w + v - zeta^e w, e); choose w = -v / (1 - zeta^e)
        denom = f.sub(1, d.zeta_pows[e])
        w = f.neg(f.mul(v, f.inv(denom)))
        conj_base.append(d.pack(w, 0))
    conj = WreathElement(g, tuple(conj_base), g.psl.identity)
    gamma = g.conj(conj, a)
    if not gamma.in_A():
        raise AssertionError("conjugation into <xi> wr PSL failed")
    return StandardFormCertificate(a, gamma, conj, tuple(g.orbit_reps(a.top)))


def conjugate_into_A(a: WreathElement) -> StandardFormCertificate:
    """Reduced standard form followed by conjugation into <xi> wr PSL."""
    first = to_reduced_standard_form(a)
    second = to_Apr(first.gamma)
    g = a.group
    cert = StandardFormCertificate(a, second.gamma, g.mul(second.conjugator, first.conjugator),
                                   first.orbit_reps)
    if not cert.verify() or not is_reduced_standard_form(cert.gamma):
        raise AssertionError("composite conjugation failed re-verification")
    return cert


def bracket(a: WreathElement):
    """Image in Z/r wr PSL: the tuple of [a_i] and the top."""
    r = a.group.r
    return tuple(b % r for b in a.base), a.top


def double_bracket(a: WreathElement) -> int:
    return sum(b % a.group.r for b in a.base) % a.group.r


def v_norm(a: WreathElement) -> int:
    """Sum of the V-parts, defined on V wr PSL; returns a field code."""
    if not a.in_V():
        raise PreconditionError("v_norm is only defined when every [a_i] is 0")
    d = a.group.base
    acc = 0
    for b in a.base:
        acc = d.field.add(acc, b // d.r)
    return acc


def centralizer_characterisation(a: WreathElement, b: WreathElement) -> bool:
    """Componentwise test: b has trivial top, is constant on top-orbits of a,
    and b_i lies in <xi> wherever a_i is nontrivial."""
    g = a.group
    if b.top != g.psl.identity:
        return False
    perm = g._perm[a.top]
    for i in range(g.npoints):
        if b.base[perm[i]] != b.base[i]:
            return False
        if a.base[i] != 0 and b.base[i] >= g.r:
            return False
    return True


def centralizer_Calpha(a: WreathElement) -> list[WreathElement]:
    """All elements with trivial top commuting with a (a in <xi> wr PSL, reduced)."""
    g = a.group
    if not a.in_A() or not is_reduced_standard_form(a):
        raise PreconditionError("centralizer_Calpha needs a reduced standard form element of <xi> wr PSL")
    cycles = g.cycles(a.top)
    choices = []
    for cyc in cycles:
        if a.base[cyc[0]] != 0:
            choices.append(range(g.r))
        else:
            choices.append(range(g.base.order))
    out = []
    ident = g.psl.identity
    for pick in itertools.product(*choices):
        base = [0] * g.npoints
        for cyc, val in zip(cycles, pick):
            for i in cyc:
                base[i] = val
        b = WreathElement(g, tuple(base), ident)
        if not b.commutes_with(a):
            raise AssertionError(f"centraliser candidate {b!r} does not commute")
        out.append(b)
    return out


def centralizer_size(a: WreathElement) -> int:
    """|C_alpha| from the characterisation, without enumerating."""
    g = a.group
    size = 1
    for cyc in g.cycles(a.top):
        size *= g.r if a.base[cyc[0]] != 0 else g.base.order
    return size


@dataclass
class PowerLemmaResult:
    m: int
    points: list[dict]

    @property
    def passed(self) -> bool:
        return all(pt["ok"] for pt in self.points)


def check_power_lemma(gamma: WreathElement, m: int) -> PowerLemmaResult:
    """Compare pi_i(gamma^m) with pi_i(gamma)^(m / gcd(ell_i, m)) at every point."""
    g = gamma.group
    alpha = g.pow(gamma, m)
    top_ok = alpha.top == g.psl.pow(gamma.top, m)
    points = []
    for i in range(g.npoints):
        ell = g.cycle_length(gamma.top, i)
        lhs = cycle_product(alpha, i)
        rhs = g.base.pow(cycle_product(gamma, i), m // gcd(ell, m))
        points.append({"point": g.point_label(i), "ok": top_ok and lhs == rhs,
                       "lhs": lhs, "rhs": rhs})
    return PowerLemmaResult(m, points)


def format_top(g: WreathGroup, top: int) -> str:
    return cycle_string(g._perm[top], g.psl.point_labels())
