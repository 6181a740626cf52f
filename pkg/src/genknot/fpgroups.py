"""Finitely presented groups with peripheral words.

Words are tuples of nonzero integers: ``+k`` is the k-th generator
(1-based) and ``-k`` its inverse.  A relator is a word that must evaluate
to the identity.  The module builds the trefoil presentations, the
generalised knot group presentations of the square and granny knots, and
Wirtinger-type presentations from crossing data.
"""
from __future__ import annotations

import json
from dataclasses import dataclass, field

from .errors import PreconditionError

__all__ = [
    "Word",
    "Presentation",
    "KnotDiagram",
    "word",
    "free_reduce",
    "trefoil_presentation",
    "common_group_presentation",
    "gn_presentation",
    "peripheral_gn",
    "wirtinger_gn",
    "trefoil_diagram",
    "evaluate_word",
]


class Word(tuple):
    """A word in signed 1-based generator indices."""

    def __new__(cls, letters=()):
        letters = tuple(int(x) for x in letters)
        if any(x == 0 for x in letters):
            raise PreconditionError("0 is not a valid letter")
        return super().__new__(cls, letters)

    def __add__(self, other):
        return Word(tuple(self) + tuple(other))

    def __mul__(self, m: int):
        if m < 0:
            return self.inverse() * (-m)
        return Word(tuple(self) * m)

    def inverse(self) -> "Word":
        return Word(-x for x in reversed(self))

    def __pow__(self, m: int) -> "Word":
        return self * m

    def generators_used(self) -> set[int]:
        return {abs(x) - 1 for x in self}


def word(*parts) -> Word:
    """Concatenate letters and words."""
    out = []
    for p in parts:
        if isinstance(p, int):
            out.append(p)
        else:
            out.extend(p)
    return Word(out)


def free_reduce(w: Word) -> Word:
    out: list[int] = []
    for x in w:
        if out and out[-1] == -x:
            out.pop()
        else:
            out.append(x)
    return Word(out)


def conj(u: Word, v: Word) -> Word:
    """u v u^-1."""
    return u + v + u.inverse()


def commutator_relator(u: Word, v: Word) -> Word:
    """u v u^-1 v^-1, the relator for uv = vu."""
    return u + v + u.inverse() + v.inverse()


def equation(lhs: Word, rhs: Word) -> Word:
    """Relator lhs rhs^-1 for lhs = rhs."""
    return lhs + rhs.inverse()


@dataclass(frozen=True)
class Presentation:
    name: str
    generators: tuple[str, ...]
    relators: tuple[Word, ...]
    meridian: Word | None = None
    longitude: Word | None = None
    metadata: dict = field(default_factory=dict, compare=False, hash=False)

    def __post_init__(self):
        k = len(self.generators)
        for w in self.all_words():
            for x in w:
                if not 1 <= abs(x) <= k:
                    raise PreconditionError(f"letter {x} out of range for {k} generators")

    def all_words(self):
        yield from self.relators
        if self.meridian is not None:
            yield self.meridian
        if self.longitude is not None:
            yield self.longitude

    @property
    def ngens(self) -> int:
        return len(self.generators)

    def word_names(self, w: Word) -> list[str]:
        return [self.generators[x - 1] if x > 0 else "-" + self.generators[-x - 1] for x in w]

    def parse_word(self, names) -> Word:
        if isinstance(names, str):
            names = names.split()
        index = {g: i + 1 for i, g in enumerate(self.generators)}
        out = []
        for nm in names:
            if nm.startswith("-"):
                out.append(-index[nm[1:]])
            else:
                out.append(index[nm])
        return Word(out)

    def to_json(self):
        data = {"name": self.name, "generators": list(self.generators),
                "relators": [self.word_names(r) for r in self.relators]}
        if self.meridian is not None:
            data["meridian"] = self.word_names(self.meridian)
        if self.longitude is not None:
            data["longitude"] = self.word_names(self.longitude)
        if self.metadata:
            data["metadata"] = self.metadata
        return data

    @classmethod
    def from_json(cls, data) -> "Presentation":
        gens = tuple(data["generators"])
        index = {g: i + 1 for i, g in enumerate(gens)}

        def parse(names):
            out = []
            for nm in names:
                if nm.startswith("-"):
                    if nm[1:] not in index:
                        raise PreconditionError(f"unknown generator {nm[1:]!r}")
                    out.append(-index[nm[1:]])
                else:
                    if nm not in index:
                        raise PreconditionError(f"unknown generator {nm!r}")
                    out.append(index[nm])
            return Word(out)

        return cls(data.get("name", "custom"), gens, tuple(parse(r) for r in data["relators"]),
                   parse(data["meridian"]) if "meridian" in data else None,
                   parse(data["longitude"]) if "longitude" in data else None,
                   data.get("metadata", {}))

    @classmethod
    def load(cls, path) -> "Presentation":
        with open(path) as fh:
            return cls.from_json(json.load(fh))


# -- trefoil --------------------------------------------------------------

def trefoil_presentation(variant: str = "ac", chirality: str = "right") -> Presentation:
    """The trefoil group with meridian a and a longitude for the given chirality.

    ``variant`` is ``"abc"``, ``"ac"`` or ``"xy"``.  The stored longitude is
    zero-framed; ``metadata["framed_longitude"]`` holds x^3 (right) or x^-3
    (left), the framing +-6 representatives.
    """
    if chirality not in ("right", "left"):
        raise PreconditionError("chirality must be 'right' or 'left'")
    sign = 1 if chirality == "right" else -1
    if variant == "abc":
        a, b, c = Word([1]), Word([2]), Word([3])
        rels = (equation(a + b, b + c), equation(b + c, c + a))
        x = a + b
        if chirality == "right":
            lon = b + a + c + a * -3
        else:
            lon = c.inverse() + a.inverse() + b.inverse() + a * 3
        meta = {"x": "a b", "y": "a b c"}
        gens = ("a", "b", "c")
    elif variant == "ac":
        a, c = Word([1]), Word([2])
        rels = (equation(a + c + a, c + a + c),)
        b = a.inverse() + c + a  # from ab = ca
        x = c + a
        if chirality == "right":
            lon = b + a + c + a * -3
        else:
            lon = c.inverse() + a.inverse() + b.inverse() + a * 3
        meta = {"b": "-a c a", "x": "c a", "y": "c a c"}
        gens = ("a", "c")
    elif variant == "xy":
        xg, y = Word([1]), Word([2])
        rels = (equation(xg * 3, y * 2),)
        a = y + xg.inverse()
        x = xg
        # x^3 = (bac) a^3, so the zero-framed longitudes are x^3 a^-6 and x^-3 a^6
        lon = x * (3 * sign) + a * (-6 * sign)
        meta = {"a": "y -x", "c": "x x -y"}
        gens = ("x", "y")
    else:
        raise PreconditionError(f"unknown trefoil variant {variant!r}")
    meta = dict(meta, chirality=chirality,
                framed_longitude=[_names(gens, w) for w in [x * (3 * sign)]][0])
    meridian = Word([1]) if variant != "xy" else a
    return Presentation(f"trefoil-{variant}-{chirality}", gens, rels, meridian, lon, meta)


def _names(gens, w):
    return [gens[x - 1] if x > 0 else "-" + gens[-x - 1] for x in w]


def peripheral_gn(knot: Presentation, n: int) -> Presentation:
    """Adjoin an n-th root nu of the meridian commuting with the longitude."""
    if knot.meridian is None or knot.longitude is None:
        raise PreconditionError("peripheral construction needs a meridian and a longitude")
    if n < 1:
        raise PreconditionError("n must be at least 1")
    nu = Word([knot.ngens + 1])
    rels = knot.relators + (equation(nu * n, knot.meridian), commutator_relator(knot.longitude, nu))
    return Presentation(f"G_{n}({knot.name})", knot.generators + ("nu",), rels, knot.meridian,
                        knot.longitude, dict(knot.metadata, n=n))


# -- square and granny knots ----------------------------------------------

_A, _C, _F, _NU = Word([1]), Word([2]), Word([3]), Word([4])
_X = _C + _A  # x = ab = ca
_W = _F + _A  # w = de = fd, with d identified with a


def common_group_presentation() -> Presentation:
    """G = <a, c, f | aca = cac, afa = faf>, the group of either composite knot."""
    rels = (equation(_A + _C + _A, _C + _A + _C), equation(_A + _F + _A, _F + _A + _F))
    return Presentation("G", ("a", "c", "f"), rels, Word([1]), None,
                        {"x": "c a", "w": "f a"})


def gn_presentation(knot: str, n: int) -> Presentation:
    """Presentation of G_n(SK) or G_n(GK) on generators a, c, f, nu."""
    knot = knot.upper()
    if knot not in ("SK", "GK"):
        raise PreconditionError(f"knot must be SK or GK, got {knot!r}")
    if n < 1:
        raise PreconditionError("n must be at least 1")
    x3 = _X * 3
    w3 = _W * 3
    base = (
        equation(_A + _C + _A, _C + _A + _C),
        equation(_A + _F + _A, _F + _A + _F),
        equation(_NU * n, _A),
    )
    if knot == "SK":
        # w^-3 nu w^3 = x^-3 nu x^3
        last = equation(w3.inverse() + _NU + w3, x3.inverse() + _NU + x3)
        lon = x3 + w3.inverse()
    else:
        # w^3 nu w^-3 = x^-3 nu x^3
        last = equation(w3 + _NU + w3.inverse(), x3.inverse() + _NU + x3)
        lon = x3 + w3
    return Presentation(f"G_{n}({knot})", ("a", "c", "f", "nu"), base + (last,), _A, lon,
                        {"knot": knot, "n": n, "x": "c a", "w": "f a", "b": "-a c a"})


# -- diagrams ----------------------------------------------------------------

@dataclass(frozen=True)
class KnotDiagram:
    """Arcs 0..arcs-1 and crossings (over, incoming, outgoing, handedness)."""

    arcs: int
    crossings: tuple[tuple[int, int, int, str], ...]

    def __post_init__(self):
        if self.arcs < 1 or not self.crossings:
            raise PreconditionError("a diagram needs at least one arc and one crossing")
        outs = []
        for cr in self.crossings:
            if len(cr) != 4:
                raise PreconditionError(f"crossing {cr} must be (over, in, out, hand)")
            j, i, k, hand = cr
            if hand not in ("L", "R"):
                raise PreconditionError(f"handedness {hand!r} must be L or R")
            for arc in (j, i, k):
                if not 0 <= arc < self.arcs:
                    raise PreconditionError(f"arc {arc} out of range")
            outs.append(k)
        if sorted(outs) != list(range(self.arcs)):
            raise PreconditionError("every arc must be the outgoing arc of exactly one crossing")

    def to_json(self):
        return {"arcs": self.arcs, "crossings": [list(c) for c in self.crossings]}

    @classmethod
    def from_json(cls, data) -> "KnotDiagram":
        return cls(int(data["arcs"]), tuple((int(c[0]), int(c[1]), int(c[2]), str(c[3]))
                                            for c in data["crossings"]))


def trefoil_diagram(chirality: str = "right") -> KnotDiagram:
    hand = "R" if chirality == "right" else "L"
    return KnotDiagram(3, ((2, 0, 1, hand), (0, 1, 2, hand), (1, 2, 0, hand)))


def wirtinger_gn(diagram: KnotDiagram, n: int) -> Presentation:
    """x_k = x_j^n x_i x_j^-n at left-handed crossings, x_j^-n x_i x_j^n at right-handed."""
    if n < 1:
        raise PreconditionError("n must be at least 1")
    rels = []
    for j, i, k, hand in diagram.crossings:
        xj = Word([j + 1]) * (n if hand == "L" else -n)
        rels.append(equation(Word([k + 1]), conj(xj, Word([i + 1]))))
    gens = tuple(f"x{i}" for i in range(diagram.arcs))
    return Presentation(f"wirtinger-n{n}", gens, tuple(rels), Word([1]), None,
                        {"diagram": diagram.to_json(), "n": n})


# -- evaluation ----------------------------------------------------------------

def evaluate_word(w: Word, images, group=None, identity=None):
    """Left-to-right product of generator images.

    ``images`` maps generator positions (0-based) or is a sequence.  With a
    tabulated ``group`` the images are element indices; otherwise they are
    objects supporting ``*`` and ``inverse()``.
    """
    def image(k):
        try:
            return images[k]
        except (KeyError, IndexError):
            raise PreconditionError(f"no image given for generator {k + 1}") from None

    if group is not None:
        acc = group.identity
        for x in w:
            g = image(abs(x) - 1)
            acc = group.mul(acc, g if x > 0 else group.invert(g))
        return acc
    acc = identity
    for x in w:
        g = image(abs(x) - 1)
        g = g if x > 0 else g.inverse()
        acc = g if acc is None else acc * g
    if acc is None:
        raise PreconditionError("empty word needs an explicit identity")
    return acc
