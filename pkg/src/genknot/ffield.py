"""Finite fields F_{q^k} in the polynomial-residue model.

An element is a polynomial of degree < k over F_q, stored internally as the
integer code ``sum(c_j * q**j)`` (coefficients low degree first).  Small
fields get numpy addition/multiplication tables so that the group layers
above can work on integer codes with fancy indexing.
"""
from __future__ import annotations

import itertools
from functools import cached_property

import numpy as np

from .errors import FieldMismatch, PreconditionError

MAX_FIELD_ORDER = 1 << 20
# fields up to this order get dense operation tables
TABLE_LIMIT = 4096

__all__ = [
    "Field",
    "FieldElement",
    "field_new",
    "zeta_of_order",
    "fe_add",
    "fe_mul",
    "fe_inv",
    "fe_pow",
    "is_prime",
    "prime_power",
]


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


def prime_power(n: int) -> tuple[int, int] | None:
    """Return (p, k) with n == p**k, or None if n is not a prime power."""
    if n < 2:
        return None
    for p in range(2, n + 1):
        if n % p == 0:
            k, m = 0, n
            while m % p == 0:
                m //= p
                k += 1
            return (p, k) if m == 1 else None
    return None


# -- polynomial helpers over F_q, lists low degree first --------------------

def _trim(a):
    a = list(a)
    while a and a[-1] == 0:
        a.pop()
    return a


def _poly_divmod(a, m, q):
    a = _trim(a)
    m = _trim(m)
    inv_lead = pow(m[-1], -1, q)
    quot = [0] * max(len(a) - len(m) + 1, 0)
    while len(a) >= len(m):
        c = (a[-1] * inv_lead) % q
        shift = len(a) - len(m)
        quot[shift] = c
        for j, mj in enumerate(m):
            a[shift + j] = (a[shift + j] - c * mj) % q
        a = _trim(a)
    return quot, a


def _is_irreducible(poly, q):
    k = len(poly) - 1
    if k <= 1:
        return k == 1
    for deg in range(1, k // 2 + 1):
        for low in itertools.product(range(q), repeat=deg):
            _, rem = _poly_divmod(poly, list(low) + [1], q)
            if not rem:
                return False
    return True


def _smallest_irreducible(q, k):
    # product() yields (c_0, ..., c_{k-1}) in lexicographic order, c_0 most
    # significant, which is the documented low-degree-first ordering
    for low in itertools.product(range(q), repeat=k):
        poly = list(low) + [1]
        if _is_irreducible(poly, q):
            return tuple(poly)
    raise AssertionError(f"no irreducible polynomial of degree {k} over F_{q}")


class Field:
    """The field F_{q^k} with the lexicographically least monic modulus."""

    def __init__(self, q: int, k: int = 1):
        if not is_prime(q):
            raise PreconditionError(f"characteristic {q} is not prime")
        if k < 1:
            raise PreconditionError("extension degree must be positive")
        if q**k > MAX_FIELD_ORDER:
            raise PreconditionError(
                f"field order {q}**{k} exceeds the configured bound {MAX_FIELD_ORDER}")
        self.q = q
        self.k = k
        self.order = q**k
        self.modulus = _smallest_irreducible(q, k)
        self._powers = [q**j for j in range(k)]

    # -- identity -----------------------------------------------------------
    def __eq__(self, other):
        return isinstance(other, Field) and (self.q, self.k, self.modulus) == (
            other.q, other.k, other.modulus)

    def __hash__(self):
        return hash((self.q, self.k, self.modulus))

    def __repr__(self):
        return f"Field(q={self.q}, k={self.k})"

    def __getstate__(self):
        # drop cached tables; they are rebuilt on demand
        return {"q": self.q, "k": self.k, "order": self.order,
                "modulus": self.modulus, "_powers": self._powers}

    def to_json(self):
        return {"q": self.q, "k": self.k, "modulus": list(self.modulus)}

    # -- encoding -----------------------------------------------------------
    def encode(self, coeffs) -> int:
        coeffs = list(coeffs)
        if len(coeffs) > self.k:
            raise PreconditionError(f"too many coefficients for degree {self.k}")
        code = 0
        for j, c in enumerate(coeffs):
            code += (int(c) % self.q) * self._powers[j]
        return code

    def decode(self, code: int) -> tuple[int, ...]:
        out = []
        for _ in range(self.k):
            code, c = divmod(code, self.q)
            out.append(c)
        return tuple(out)

    def __call__(self, value) -> "FieldElement":
        if isinstance(value, FieldElement):
            if value.field != self:
                raise FieldMismatch("element belongs to a different field")
            return value
        if isinstance(value, (list, tuple)):
            return FieldElement(self, self.encode(value))
        return FieldElement(self, self.encode([value]))

    @property
    def zero(self) -> "FieldElement":
        return FieldElement(self, 0)

    @property
    def one(self) -> "FieldElement":
        return FieldElement(self, 1)

    def elements(self):
        return [FieldElement(self, c) for c in range(self.order)]

    # -- arithmetic on codes ------------------------------------------------
    def add(self, a: int, b: int) -> int:
        if self.k == 1:
            return (a + b) % self.q
        if self._tables is not None:
            return int(self._tables[0][a, b])
        return self.encode([x + y for x, y in zip(self.decode(a), self.decode(b))])

    def neg(self, a: int) -> int:
        if self.k == 1:
            return (-a) % self.q
        return self.encode([-x for x in self.decode(a)])

    def sub(self, a: int, b: int) -> int:
        return self.add(a, self.neg(b))

    def mul(self, a: int, b: int) -> int:
        if self.k == 1:
            return (a * b) % self.q
        if self._tables is not None:
            return int(self._tables[1][a, b])
        return self._mul_slow(a, b)

    def _mul_slow(self, a, b):
        x, y = self.decode(a), self.decode(b)
        prod = [0] * (2 * self.k - 1)
        for i, xi in enumerate(x):
            if xi:
                for j, yj in enumerate(y):
                    prod[i + j] = (prod[i + j] + xi * yj) % self.q
        _, rem = _poly_divmod(prod, self.modulus, self.q)
        return self.encode(rem)

    def pow(self, a: int, e: int) -> int:
        if e < 0:
            a = self.inv(a)
            e = -e
        result = 1
        while e:
            if e & 1:
                result = self.mul(result, a)
            a = self.mul(a, a)
            e >>= 1
        return result

    def inv(self, a: int) -> int:
        if a == 0:
            raise ZeroDivisionError("inverse of zero in a finite field")
        if self.k == 1:
            return pow(a, -1, self.q)
        return self.pow(a, self.order - 2)

    def mult_order(self, a: int) -> int:
        """Multiplicative order of a nonzero element."""
        if a == 0:
            raise ZeroDivisionError("zero has no multiplicative order")
        n = self.order - 1
        m, x = 1, a
        while x != 1:
            x = self.mul(x, a)
            m += 1
            if m > n:
                raise AssertionError("multiplicative order exceeds q^k - 1")
        return m

    # -- tables --------------------------------------------------------------
    @cached_property
    def _tables(self):
        if self.order > TABLE_LIMIT or self.k == 1:
            return None
        n = self.order
        digits = np.array([self.decode(c) for c in range(n)], dtype=np.int64)
        weights = np.array(self._powers, dtype=np.int64)
        add = ((digits[:, None, :] + digits[None, :, :]) % self.q) @ weights
        mul = np.empty((n, n), dtype=np.int64)
        for a in range(n):
            for b in range(a, n):
                mul[a, b] = mul[b, a] = self._mul_slow(a, b)
        return add, mul

    @cached_property
    def add_table(self) -> np.ndarray:
        n = self.order
        if self.k == 1:
            r = np.arange(n)
            return (r[:, None] + r[None, :]) % self.q
        if self._tables is None:
            raise PreconditionError("field too large for dense tables")
        return self._tables[0]

    @cached_property
    def mul_table(self) -> np.ndarray:
        n = self.order
        if self.k == 1:
            r = np.arange(n)
            return (r[:, None] * r[None, :]) % self.q
        if self._tables is None:
            raise PreconditionError("field too large for dense tables")
        return self._tables[1]

    @cached_property
    def neg_table(self) -> np.ndarray:
        return np.array([self.neg(a) for a in range(self.order)], dtype=np.int64)

    @cached_property
    def inv_table(self) -> np.ndarray:
        """Multiplicative inverses; entry 0 is a placeholder 0."""
        return np.array([0] + [self.inv(a) for a in range(1, self.order)], dtype=np.int64)


class FieldElement:
    """An immutable element of a :class:`Field`."""

    __slots__ = ("field", "code")

    def __init__(self, field: Field, code: int):
        self.field = field
        self.code = int(code)

    @property
    def coeffs(self) -> tuple[int, ...]:
        return self.field.decode(self.code)

    def _check(self, other) -> int:
        if isinstance(other, int):
            return self.field.encode([other])
        if not isinstance(other, FieldElement):
            return NotImplemented
        if other.field != self.field:
            raise FieldMismatch("field mismatch")
        return other.code

    def __add__(self, other):
        b = self._check(other)
        if b is NotImplemented:
            return b
        return FieldElement(self.field, self.field.add(self.code, b))

    __radd__ = __add__

    def __neg__(self):
        return FieldElement(self.field, self.field.neg(self.code))

    def __sub__(self, other):
        b = self._check(other)
        if b is NotImplemented:
            return b
        return FieldElement(self.field, self.field.sub(self.code, b))

    def __mul__(self, other):
        b = self._check(other)
        if b is NotImplemented:
            return b
        return FieldElement(self.field, self.field.mul(self.code, b))

    __rmul__ = __mul__

    def __truediv__(self, other):
        b = self._check(other)
        if b is NotImplemented:
            return b
        return FieldElement(self.field, self.field.mul(self.code, self.field.inv(b)))

    def __pow__(self, e: int):
        return FieldElement(self.field, self.field.pow(self.code, e))

    def inverse(self) -> "FieldElement":
        return FieldElement(self.field, self.field.inv(self.code))

    def is_zero(self) -> bool:
        return self.code == 0

    def __bool__(self):
        return self.code != 0

    def order(self) -> int:
        return self.field.mult_order(self.code)

    def __eq__(self, other):
        if isinstance(other, int):
            return self.code == self.field.encode([other])
        return isinstance(other, FieldElement) and other.field == self.field and other.code == self.code

    def __hash__(self):
        return hash((self.field.q, self.field.k, self.code))

    def __repr__(self):
        return "[" + ",".join(str(c) for c in self.coeffs) + "]"

    def to_json(self):
        return list(self.coeffs)


def field_new(q: int, k: int = 1) -> Field:
    return Field(q, k)


def zeta_of_order(field: Field, r: int) -> FieldElement:
    """Element of exact multiplicative order ``r`` with the least coefficient vector."""
    if not is_prime(r):
        raise PreconditionError(f"{r} is not prime")
    if (field.order - 1) % r:
        raise PreconditionError(f"{r} does not divide {field.order} - 1")
    codes = sorted(range(1, field.order), key=field.decode)
    for c in codes:
        if c != 1 and field.pow(c, r) == 1:
            return FieldElement(field, c)
    raise AssertionError("no element of the requested order")


def fe_add(a: FieldElement, b: FieldElement) -> FieldElement:
    return a + b


def fe_mul(a: FieldElement, b: FieldElement) -> FieldElement:
    return a * b


def fe_inv(a: FieldElement) -> FieldElement:
    return a.inverse()


def fe_pow(a: FieldElement, e: int) -> FieldElement:
    return a**e
