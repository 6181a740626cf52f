"""Map-root pairs in H(p, q, r) and the SK/GK compatibility asymmetry.

What lives here:

* prime selection and the element-order constraints it guarantees;
* n-th roots of a meridian image in reduced standard form, by cycle
  structure, with a brute-force oracle for cross-checking;
* classification of the longitude image of a trefoil map;
* map-root pairs, the action of C_alpha on them and orbit-level
  compatibility counts, plus the explicit realization family.

Compatibility is always decided by multiplying elements out.  The structural
descriptions are used to enumerate candidates and are then checked against
direct computation; they are never trusted as the answer.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from functools import cached_property
from math import gcd, prod

import numpy as np

from .errors import BudgetExceeded, HypothesisError, PreconditionError, TheoremViolation
from .ffield import is_prime
from .fpgroups import evaluate_word, gn_presentation
from .parallel import run_partitions
from .psl import PslElement, psl_group, psl_has_element_of_order, psl_order_formula
from .wreath import (WreathElement, WreathGroup, centralizer_Calpha, centralizer_size,
                     double_bracket, is_reduced_standard_form, to_reduced_standard_form,
                     wreath_group)

DEFAULT_SEARCH_BOUND = 10_000
ORACLE_BUDGET = 60_000_000
ORBIT_BUDGET = 1_000_000
ROOT_BUDGET = 1_000_000

__all__ = [
    "Params",
    "select_primes",
    "check_orders_lemma",
    "RootFamily",
    "CycleConstraint",
    "nth_roots",
    "nth_roots_oracle",
    "LongitudeResult",
    "longitude_classify",
    "trefoil_images_from_xy",
    "trefoil_maps_in_A",
    "MapRootPair",
    "OrbitReport",
    "orbit_compatibility",
    "Realization",
    "realization",
    "TrivialTopVerdict",
    "trivial_top_analysis",
    "exceptional_case_check",
    "map_root_corpus",
]


def _primes():
    k = 2
    while True:
        if is_prime(k):
            yield k
        k += 1


def _least_prime_factor(n: int, at_least: int = 2) -> int | None:
    for k in range(at_least, n + 1):
        if n % k == 0 and is_prime(k):
            return k
    return None


# -- parameters ----------------------------------------------------------------

@dataclass(frozen=True)
class Params:
    n: int
    p: int
    q: int
    r: int

    def __post_init__(self):
        problems = self.violations()
        if problems:
            raise PreconditionError("invalid parameters: " + "; ".join(problems))

    def violations(self) -> list[str]:
        n, p, q, r = self.n, self.p, self.q, self.r
        out = []
        if n < 2:
            out.append("n must be at least 2")
        if not all(is_prime(x) for x in (p, q, r)) or len({p, q, r}) != 3:
            out.append("p, q, r must be distinct primes")
            return out
        if n % q:
            out.append(f"q={q} does not divide n={n}")
        if gcd(p, n) != 1:
            out.append(f"p={p} is not coprime to n={n}")
        if gcd(r, n) != 1:
            out.append(f"r={r} is not coprime to n={n}")
        if psl_order_formula(p) % r == 0:
            out.append(f"r={r} divides |PSL(2,{p})|")
        if n >= 2 and n % 30 == 0:
            bad = [m for m in (4, 5, 9, q) if psl_has_element_of_order(p, m)]
            if bad:
                out.append(f"PSL(2,{p}) has elements of order {bad}")
        return out

    def group(self) -> WreathGroup:
        return wreath_group(self.p, self.q, self.r)

    @property
    def psl_order(self) -> int:
        return psl_order_formula(self.p)

    def to_json(self):
        return {"n": self.n, "p": self.p, "q": self.q, "r": self.r}


def select_primes(n: int, search_bound: int = DEFAULT_SEARCH_BOUND) -> Params:
    """Choose (p, q, r) for a given n."""
    if n < 2:
        raise PreconditionError("n must be at least 2")
    if n % 30:
        p = next(x for x in _primes() if n % x)
        q = _least_prime_factor(n)
    else:
        q = _least_prime_factor(n, 5)
        p = None
        for x in _primes():
            if x > search_bound:
                break
            if n % x == 0:
                continue
            if x % 8 not in (3, 5):
                continue
            if any(x % m in (0, 1, m - 1) for m in (5, 9, q)):
                continue
            p = x
            break
        if p is None:
            raise BudgetExceeded(f"no suitable p below the search bound {search_bound}",
                                 budget=search_bound)
        bad = [m for m in (4, 5, 9, q) if psl_has_element_of_order(p, m)]
        if bad:
            raise TheoremViolation(f"p={p} passes the congruences but PSL(2,{p}) has "
                                   f"elements of order {bad}", {"p": p, "orders": bad})
    order = psl_order_formula(p)
    r = next(x for x in _primes() if n % x and order % x)
    return Params(n, p, q, r)


@dataclass
class OrdersLemmaReport:
    params: Params
    instances: int
    nontrivial_powers: int
    counterexamples: list = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.counterexamples

    def to_json(self):
        return {"params": self.params.to_json(), "instances": self.instances,
                "nontrivial_powers": self.nontrivial_powers,
                "counterexamples": self.counterexamples, "passed": self.passed}


def check_orders_lemma(params: Params) -> OrdersLemmaReport:
    """Scan every tau in PSL(2, p) and check the orders of tau and tau^n != 1."""
    n, p, q, r = params.n, params.p, params.q, params.r
    g = psl_group(p)
    orders = g.orders
    report = OrdersLemmaReport(params, g.size, 0)
    if n % 30:
        allowed = {2, 3} if p == 2 and gcd(3, n) == 1 else {p}
    for t in range(g.size):
        phi = g.pow(t, n)
        if phi == g.identity:
            continue
        report.nontrivial_powers += 1
        ot, of = int(orders[t]), int(orders[phi])
        problems = []
        if gcd(ot, q * r) != 1 or gcd(of, q * r) != 1:
            problems.append("order not coprime to qr")
        if n % 30 == 0:
            if of <= 6:
                problems.append("order of the power is at most 6")
        elif ot not in allowed or of not in allowed or ot != of:
            problems.append(f"orders ({ot}, {of}) outside {sorted(allowed)}")
        if problems:
            report.counterexamples.append({"tau": repr(g.element(t)), "order_tau": ot,
                                           "order_power": of, "problems": problems})
    return report


# -- n-th roots -------------------------------------------------------------------

def _check_meridian(alpha: WreathElement):
    if not alpha.in_A() or not is_reduced_standard_form(alpha):
        raise PreconditionError("alpha must be an element of <xi> wr PSL in reduced standard form")
    if alpha.top == alpha.group.psl.identity:
        raise PreconditionError("alpha must have nontrivial top")


@dataclass(frozen=True)
class CycleConstraint:
    """Root data on one cycle of tau.

    ``reps`` are the points j, j.tau, ..., j.tau^(d-1); the root on the cycle is
    determined by its values there.  For kind ``"nonzero"`` their product must be
    ``target`` (in <xi>), for ``"zero"`` it must lie in V.
    """

    cycle: tuple[int, ...]
    length: int
    d: int
    kind: str
    target: int | None
    reps: tuple[int, ...]
    solutions: int


@dataclass
class RootFamily:
    alpha: WreathElement
    tau: int
    n: int
    constraints: tuple[CycleConstraint, ...] = ()
    obstruction: str | None = None

    @property
    def feasible(self) -> bool:
        return self.obstruction is None

    @property
    def tau_element(self) -> PslElement:
        return self.alpha.group.top_element(self.tau)

    @property
    def size(self) -> int:
        if not self.feasible:
            return 0
        return prod(c.solutions for c in self.constraints)

    def _cycle_values(self, c: CycleConstraint):
        """All tuples of values at c.reps, in a fixed order."""
        d = self.alpha.group.base
        if c.kind == "nonzero":
            for head in itertools.product(range(d.r), repeat=c.d - 1):
                last = (c.target - sum(head)) % d.r
                yield tuple(head) + (last,)
        else:
            for head in itertools.product(range(d.order), repeat=c.d - 1):
                acc = 0
                for h in head:
                    acc = d.mul(acc, h)
                inv = d.invert(acc)
                for v in range(d.vsize):
                    yield tuple(head) + (d.mul(inv, d.pack(v, 0)),)

    def _assemble(self, picks) -> WreathElement:
        g = self.alpha.group
        base = [0] * g.npoints
        for c, vals in zip(self.constraints, picks):
            for s, point in enumerate(c.cycle):
                base[point] = vals[s % c.d]
        return WreathElement(g, tuple(base), self.tau)

    def enumerate(self):
        """Yield every root in this family (not re-verified; see :meth:`roots`)."""
        if not self.feasible:
            return
        per_cycle = [list(self._cycle_values(c)) for c in self.constraints]
        for picks in itertools.product(*per_cycle):
            yield self._assemble(picks)

    def roots(self, budget: int = ROOT_BUDGET) -> list[WreathElement]:
        """All roots, each re-verified by multiplication."""
        if self.size > budget:
            raise BudgetExceeded(f"root family has {self.size} members", nodes=self.size, budget=budget)
        out = []
        g = self.alpha.group
        aperm = g._perm[self.alpha.top]
        for eta in self.enumerate():
            if g.pow(eta, self.n) != self.alpha:
                raise TheoremViolation("enumerated root fails eta^n = alpha", eta.to_json())
            if any(eta.base[aperm[i]] != eta.base[i] for i in range(g.npoints)):
                raise TheoremViolation("root is not constant on orbits of alpha's top", eta.to_json())
            out.append(eta)
        if len(out) != self.size:
            raise TheoremViolation("root count differs from the closed form")
        return out

    def sample(self, rng) -> WreathElement:
        d = self.alpha.group.base
        picks = []
        for c in self.constraints:
            if c.kind == "nonzero":
                head = [int(x) for x in rng.integers(0, d.r, c.d - 1)]
                picks.append(tuple(head) + ((c.target - sum(head)) % d.r,))
            else:
                head = [int(x) for x in rng.integers(0, d.order, c.d - 1)]
                acc = 0
                for h in head:
                    acc = d.mul(acc, h)
                v = int(rng.integers(0, d.vsize))
                picks.append(tuple(head) + (d.mul(d.invert(acc), d.pack(v, 0)),))
        return self._assemble(picks)

    def to_json(self):
        g = self.alpha.group
        data = {"tau": repr(self.tau_element), "tau_cycles": self.tau_element.cycles(),
                "feasible": self.feasible, "size": str(self.size)}
        if self.obstruction:
            data["obstruction"] = self.obstruction
        data["cycles"] = [{"cycle": [g.point_label(i) for i in c.cycle], "length": c.length,
                           "d": c.d, "kind": c.kind, "solutions": str(c.solutions)}
                          for c in self.constraints]
        return data


def _family_for(alpha: WreathElement, tau: int, n: int) -> RootFamily:
    g = alpha.group
    d = g.base
    constraints = []
    for cyc in g.cycles(tau):
        vals = {alpha.base[i] for i in cyc}
        if len(vals) != 1:
            labels = " ".join(g.point_label(i) for i in cyc)
            return RootFamily(alpha, tau, n, (), f"alpha is not constant on the cycle ({labels})")
        ell = len(cyc)
        dd = gcd(ell, n)
        aj = alpha.base[cyc[0]]
        if aj != 0:
            # H^(n/d) = alpha_j in <xi>; alpha_j = xi^e with index e
            target = (aj * pow(n // dd, -1, d.r)) % d.r
            kind, sols = "nonzero", d.r ** (dd - 1)
        else:
            target, kind, sols = None, "zero", d.order ** (dd - 1) * d.vsize
        constraints.append(CycleConstraint(tuple(cyc), ell, dd, kind, target, tuple(cyc[:dd]), sols))
    return RootFamily(alpha, tau, n, tuple(constraints))


def nth_roots(alpha: WreathElement, n: int) -> list[RootFamily]:
    """Root families of alpha, one per tau in PSL(2, p) with tau^n equal to alpha's top."""
    _check_meridian(alpha)
    if n < 1:
        raise PreconditionError("n must be positive")
    g = alpha.group
    ps = g.psl
    return [_family_for(alpha, t, n) for t in range(ps.size) if ps.pow(t, n) == alpha.top]


def nth_roots_oracle(alpha: WreathElement, tau, n: int, budget: int = ORACLE_BUDGET,
                     chunk: int = 1 << 19) -> list[WreathElement]:
    """Every eta with top tau and eta^n = alpha, by scanning all base tuples."""
    g = alpha.group
    tau = tau.index if isinstance(tau, PslElement) else int(tau)
    if g.psl.pow(tau, n) != alpha.top:
        return []
    size = g.base.order
    npts = g.npoints
    total = size ** npts
    if total > budget:
        raise BudgetExceeded(f"oracle scan needs {total} tuples", nodes=total, budget=budget)
    target = np.array(alpha.base, dtype=np.int64)
    found = []
    for start in range(0, total, chunk):
        idx = np.arange(start, min(start + chunk, total), dtype=np.int64)
        base = np.empty((idx.shape[0], npts), dtype=np.int64)
        rest = idx
        for col in range(npts - 1, -1, -1):
            base[:, col] = rest % size
            rest = rest // size
        pb, _ = g.batch_pow(base, tau, n)
        hit = np.nonzero(np.all(pb == target, axis=1))[0]
        for row in base[hit]:
            found.append(WreathElement(g, tuple(int(x) for x in row), tau))
    return found


# -- longitude images ------------------------------------------------------------

def trefoil_images_from_xy(chi: WreathElement, psi: WreathElement):
    """(a, c) images from x, y images: a = y x^-1, c = x^2 y^-1."""
    return psi * chi.inverse(), chi * chi * psi.inverse()


def _is_braid(a: WreathElement, c: WreathElement) -> bool:
    return a * c * a == c * a * c


@dataclass
class LongitudeResult:
    kind: str  # "PowerCase", "ConstantCase" or "Counterexample"
    epsilon: WreathElement
    exponent: int | None
    properties: dict

    def to_json(self):
        return {"kind": self.kind, "epsilon": self.epsilon.to_json(),
                "exponent": self.exponent, "properties": self.properties}


def longitude_classify(alpha: WreathElement, c: WreathElement) -> LongitudeResult:
    """Classify eps = (c a)^3 for the trefoil map a -> alpha, c -> c."""
    _check_meridian(alpha)
    if not _is_braid(alpha, c):
        raise PreconditionError("a -> alpha, c -> c does not define a homomorphism (aca != cac)")
    g = alpha.group
    d = g.base
    r = g.r
    eps = (c * alpha) ** 3
    if eps == alpha ** 6:
        return LongitudeResult("PowerCase", eps, None, {"equals_alpha_power": True})
    if gcd(g.p + 1, r) != 1:
        raise PreconditionError("p + 1 must be invertible mod r")
    e = (6 * double_bracket(alpha) * pow(g.p + 1, -1, r)) % r
    aperm = g._perm[alpha.top]
    classes = {d.conjugacy_class(x) for x in eps.base}
    props = {
        "top_trivial": eps.top == g.psl.identity,
        "constant_on_alpha_orbits": all(eps.base[aperm[i]] == eps.base[i] for i in range(g.npoints)),
        "constant_class": len(classes) == 1,
        "bracket_formula": all(x % r == e for x in eps.base),
        "xi_value": all(eps.base[i] == d.xi_pow(e) for i in range(g.npoints) if alpha.base[i] != 0),
    }
    if double_bracket(alpha) == 0 and (any(alpha.base) or gcd(g.p + 1, g.q) == 1):
        props["zero_bracket_identity"] = eps.is_identity()
    kind = "ConstantCase" if all(props.values()) else "Counterexample"
    return LongitudeResult(kind, eps, e, props)


def trefoil_maps_in_A(alpha: WreathElement, budget: int = 50_000_000) -> list[WreathElement]:
    """All c in <xi> wr PSL with alpha c alpha = c alpha c.

    Inside <xi> wr PSL a base entry xi^e has index e, so products reduce to
    adding exponents mod r; the scan never touches the D(q, r) table.
    """
    g = alpha.group
    if not alpha.in_A():
        raise PreconditionError("alpha must lie in <xi> wr PSL")
    r, npts = g.r, g.npoints
    perms = g.psl.perms
    nb = r ** npts
    total = nb * g.psl.size
    if total > budget:
        raise BudgetExceeded(f"scan needs {total} candidates", nodes=total, budget=budget)
    idx = np.arange(nb, dtype=np.int64)
    base = np.empty((nb, npts), dtype=np.int64)
    rest = idx
    for col in range(npts - 1, -1, -1):
        base[:, col] = rest % r
        rest = rest // r
    ab = np.array(alpha.base, dtype=np.int64)
    at = alpha.top
    ps = g.psl
    out = []
    for t in range(ps.size):
        # alpha c alpha
        ac_base = (ab[None, :] + base[:, perms[at]]) % r
        ac_top = ps.mul(at, t)
        aca = (ac_base + ab[perms[ac_top]][None, :]) % r
        aca_top = ps.mul(ac_top, at)
        # c alpha c
        ca_base = (base + ab[perms[t]][None, :]) % r
        ca_top = ps.mul(t, at)
        cac = (ca_base + base[:, perms[ca_top]]) % r
        cac_top = ps.mul(ca_top, t)
        if aca_top != cac_top:
            continue
        for row in base[np.all(aca == cac, axis=1)]:
            out.append(WreathElement(g, tuple(int(x) for x in row), t))
    return out


# -- map-root pairs ----------------------------------------------------------------

@dataclass(frozen=True, eq=False)
class MapRootPair:
    """Images of a, c, f in H(p, q, r) together with an n-th root eta of the image of a."""

    n: int
    a: WreathElement
    c: WreathElement
    f: WreathElement
    eta: WreathElement

    def __post_init__(self):
        if not _is_braid(self.a, self.c):
            raise PreconditionError("c-side map is not a homomorphism")
        if not _is_braid(self.a, self.f):
            raise PreconditionError("f-side map is not a homomorphism")
        if self.eta ** self.n != self.a:
            raise PreconditionError("eta^n differs from the image of a")

    @property
    def group(self) -> WreathGroup:
        return self.a.group

    @property
    def alpha(self) -> WreathElement:
        return self.a

    @cached_property
    def epsilon(self) -> WreathElement:
        return (self.c * self.a) ** 3

    @cached_property
    def delta(self) -> WreathElement:
        return (self.f * self.a) ** 3

    def sk_compatible(self) -> bool:
        return (self.epsilon * self.delta.inverse()).commutes_with(self.eta)

    def gk_compatible(self) -> bool:
        return (self.epsilon * self.delta).commutes_with(self.eta)

    def relators_hold(self, knot: str) -> bool:
        """Evaluate every relator of the G_n presentation on (a, c, f, eta)."""
        pres = gn_presentation(knot, self.n)
        images = [self.a, self.c, self.f, self.eta]
        ident = self.group.identity
        return all(evaluate_word(w, images, identity=ident) == ident for w in pres.relators)

    def act(self, beta: WreathElement) -> "MapRootPair":
        """beta . (rho_c, rho_f) = (rho_c, beta rho_f beta^-1)."""
        if beta.top != self.group.psl.identity or not beta.commutes_with(self.a):
            raise PreconditionError("beta must have trivial top and commute with alpha")
        return MapRootPair(self.n, self.a, self.c, beta * self.f * beta.inverse(), self.eta)

    def to_json(self):
        return {"params": list(self.group.params), "n": self.n, "a": self.a.to_json(),
                "c": self.c.to_json(), "f": self.f.to_json(), "eta": self.eta.to_json()}

    @classmethod
    def from_json(cls, data) -> "MapRootPair":
        g = wreath_group(*data["params"])
        return cls(int(data["n"]), g.from_json(data["a"]), g.from_json(data["c"]),
                   g.from_json(data["f"]), g.from_json(data["eta"]))


@dataclass
class OrbitReport:
    sk_compatible_count: int
    gk_compatible_count: int
    orbit_meta: dict

    def to_json(self):
        return {"sk_compatible_count": str(self.sk_compatible_count),
                "gk_compatible_count": str(self.gk_compatible_count),
                "orbit_meta": self.orbit_meta}


def _orbit_job(args):
    n, a, c, f, eta, betas = args
    eps = (c * a) ** 3
    delta0 = (f * a) ** 3
    out = []
    for beta in betas:
        f2 = beta * f * beta.inverse()
        delta = (f2 * a) ** 3
        sk = (eps * delta.inverse()).commutes_with(eta)
        gk = (eps * delta).commutes_with(eta)
        out.append((f2.base, f2.top, sk, gk, delta == delta0))
    return out


def _cycle_data(pair: MapRootPair):
    """c = number of eta-cycles where alpha is trivial; t = those whose d-fold product is 1."""
    g = pair.group
    d = g.base
    eta = pair.eta
    perm = g._perm[eta.top]
    c = t = 0
    for cyc in g.cycles(eta.top):
        if pair.a.base[cyc[0]] != 0:
            continue
        c += 1
        dd = gcd(len(cyc), pair.n)
        acc, j = 0, cyc[0]
        for _ in range(dd):
            acc = d.mul(acc, eta.base[j])
            j = perm[j]
        t += acc == 0
    return c, t


def orbit_compatibility(pair: MapRootPair, budget: int = ORBIT_BUDGET,
                        workers: int = 1, chunks: int = 8) -> OrbitReport:
    """Count SK- and GK-compatible members of the C_alpha-orbit of a map-root pair."""
    alpha = pair.a
    _check_meridian(alpha)
    g = pair.group
    size = centralizer_size(alpha)
    if size > budget:
        raise BudgetExceeded(f"C_alpha has {size} elements", nodes=size, budget=budget)
    calpha = centralizer_Calpha(alpha)
    if len(calpha) != size:
        raise TheoremViolation("centraliser enumeration disagrees with its size formula")
    step = max(1, -(-len(calpha) // chunks))
    jobs = [(pair.n, pair.a, pair.c, pair.f, pair.eta, calpha[i:i + step])
            for i in range(0, len(calpha), step)]
    results = run_partitions(_orbit_job, jobs, workers)
    members: dict = {}
    sk_beta = gk_beta = stab_delta = 0
    for part in results:
        for fb, ft, sk, gk, fixes_delta in part:
            sk_beta += sk
            gk_beta += gk
            stab_delta += fixes_delta
            members.setdefault((fb, ft), (sk, gk))
    sk = sum(1 for s, _ in members.values() if s)
    gk = sum(1 for _, k in members.values() if k)
    orbit = len(members)
    stab_rho = size // orbit
    if size % orbit:
        raise TheoremViolation("orbit size does not divide |C_alpha|")

    if pair.epsilon == alpha ** 6 or pair.delta == alpha ** 6:
        case = "equal_power"
        consistent = all(s == k for s, k in members.values())
    elif double_bracket(alpha) == 0:
        case = "zero_bracket"
        consistent = sk == gk == orbit
    else:
        case = "generic"
        consistent = None
    c, t = _cycle_data(pair)
    meta = {
        "case": case,
        "orbit_size": orbit,
        "calpha_size": size,
        "stabilizer_rho": stab_rho,
        "stabilizer_delta": stab_delta,
        "sk_beta_count": sk_beta,
        "gk_beta_count": gk_beta,
        "cycles_alpha_trivial": c,
        "cycles_trivial_product": t,
        "double_bracket": double_bracket(alpha),
    }
    if case == "generic":
        # SK count = [Stab(delta) : Stab(rho)] |V|^c; GK count equal if t == c, else 0
        formula = (stab_delta // stab_rho) * g.base.vsize ** c if stab_delta % stab_rho == 0 else None
        meta["formula_count"] = formula
        expected_gk = sk if (c == 0 or t == c) else 0
        consistent = gk == expected_gk and (formula is None or formula == sk or c == 0)
        if c == 0:
            consistent = consistent and sk == gk == orbit
    meta["structure_consistent"] = bool(consistent)
    if gk > sk or gk_beta > sk_beta:
        raise TheoremViolation("orbit has more GK-compatible than SK-compatible pairs",
                               {"pair": pair.to_json(), "meta": meta})
    return OrbitReport(sk, gk, meta)


# -- the explicit realization -----------------------------------------------------

@dataclass
class Realization:
    params: Params
    chi: WreathElement
    psi: WreathElement
    conjugator: WreathElement
    alpha: WreathElement
    c: WreathElement
    epsilon: WreathElement
    roots: dict  # V code -> eta_v
    checks: list

    def pair(self, v: int) -> MapRootPair:
        return MapRootPair(self.params.n, self.alpha, self.c, self.c, self.roots[v])

    def pairs(self) -> list[MapRootPair]:
        return [self.pair(v) for v in sorted(self.roots)]

    def to_json(self):
        g = self.alpha.group
        return {"params": self.params.to_json(), "chi": self.chi.to_json(), "psi": self.psi.to_json(),
                "conjugator": self.conjugator.to_json(), "alpha": self.alpha.to_json(),
                "c": self.c.to_json(), "f": self.c.to_json(), "epsilon": self.epsilon.to_json(),
                "roots": len(self.roots),
                "eta_top": g.top_element(next(iter(self.roots.values())).top).cycles(),
                "verified": self.checks}


def realization(params: Params) -> Realization:
    """Build the explicit homomorphism and its family of n-th roots eta_v, v in V."""
    n, p, r = params.n, params.p, params.r
    g = params.group()
    d = g.base
    xi = d.xi_pow
    inf = p
    checks = []

    def check(name, ok):
        checks.append({"check": name, "ok": bool(ok)})
        if not ok:
            raise TheoremViolation(f"realization check failed: {name}")

    chi = g.element([xi(2)] * g.npoints, (0, -1, 1, 1))
    psi_base = [xi(3)] * g.npoints
    psi_base[0] = xi(4)
    psi_base[inf] = xi(2)
    psi = g.element(psi_base, (0, -1, 1, 0))
    check("chi^3 = psi^2", chi ** 3 == psi ** 2)
    a1, c1 = trefoil_images_from_xy(chi, psi)
    check("aca = cac before conjugation", _is_braid(a1, c1))
    shift = g.psl.from_matrix(1, 0, 1, 1).index
    expected = [xi(2)] + [xi(1)] * (p - 1) + [0]
    check("image of a before conjugation", a1 == WreathElement(g, tuple(expected), shift))
    cert = to_reduced_standard_form(a1)
    beta = cert.conjugator
    check("conjugator re-multiplies", cert.verify())
    alpha = g.conj(beta, a1)
    c = g.conj(beta, c1)
    e1 = ((p + 1) * pow(p, -1, r)) % r
    check("alpha has the displayed form",
          alpha == WreathElement(g, tuple([xi(e1)] * p + [0]), shift))
    check("aca = cac after conjugation", _is_braid(alpha, c))
    eps = (c * alpha) ** 3
    check("longitude image is constant xi^6", eps == WreathElement(g, tuple([xi(6)] * g.npoints),
                                                                       g.psl.identity))
    k = pow(n, -1, p)
    e2 = ((p + 1) * pow(n * p, -1, r)) % r
    top = g.psl.pow(shift, k)
    roots = {}
    for v in range(d.vsize):
        eta = WreathElement(g, tuple([xi(e2)] * p + [d.pack(v, 0)]), top)
        if eta ** n != alpha:
            check(f"eta_{v}^n = alpha", False)
        roots[v] = eta
    checks.append({"check": f"eta_v^{n} = alpha for all {len(roots)} v", "ok": True})
    return Realization(params, chi, psi, beta, alpha, c, eps, roots, checks)


# -- trivial top ---------------------------------------------------------------------

@dataclass
class TrivialTopVerdict:
    forced_equal: bool
    roots_checked: int
    both_compatible: int

    @property
    def all_compatible(self) -> bool:
        return self.both_compatible == self.roots_checked

    def to_json(self):
        return {"forced_equal": self.forced_equal, "roots_checked": self.roots_checked,
                "both_compatible": self.both_compatible}


def _trivial_top_roots(alpha: WreathElement, n: int, budget: int):
    g = alpha.group
    d = g.base
    per = []
    for b in alpha.base:
        per.append([h for h in range(d.order) if d.pow(h, n) == b])
    total = prod(len(x) for x in per)
    if total > budget:
        raise BudgetExceeded(f"{total} trivial-top roots", nodes=total, budget=budget)
    ident = g.psl.identity
    return [WreathElement(g, tuple(pick), ident) for pick in itertools.product(*per)]


def trivial_top_analysis(n: int, a: WreathElement, c: WreathElement, f: WreathElement,
                         roots=None, budget: int = ROOT_BUDGET) -> TrivialTopVerdict:
    """Images with trivial top on a: check c = f = a and that every root is compatible."""
    g = a.group
    if a.top != g.psl.identity:
        raise PreconditionError("trivial_top_analysis needs an image of a with trivial top")
    if {g.q, g.r} == {2, 3}:
        raise PreconditionError("the factoring argument needs {q, r} != {2, 3}")
    if not _is_braid(a, c) or not _is_braid(a, f):
        raise PreconditionError("images do not satisfy the braid relations")
    if c != a or f != a:
        raise HypothesisError("images of c or f differ from the image of a",
                              {"a": a.to_json(), "c": c.to_json(), "f": f.to_json()})
    if roots is None:
        roots = _trivial_top_roots(a, n, budget)
    eps = (c * a) ** 3
    delta = (f * a) ** 3
    both = 0
    count = 0
    for eta in roots:
        if eta ** n != a:
            raise PreconditionError("supplied root does not satisfy eta^n = alpha")
        count += 1
        sk = (eps * delta.inverse()).commutes_with(eta)
        gk = (eps * delta).commutes_with(eta)
        both += sk and gk
    return TrivialTopVerdict(True, count, both)


# -- the exceptional parameters -------------------------------------------------------

def _top_class_reps(g: WreathGroup, tops):
    ps = g.psl
    seen, reps = set(), []
    for t in tops:
        if t in seen:
            continue
        reps.append(t)
        for h in range(ps.size):
            seen.add(ps.mul(ps.mul(h, t), int(ps.inv[h])))
    return reps


def exceptional_case_check(params: Params, budget: int = 50_000_000) -> dict:
    """All alpha_i = 1 with q | p + 1: every longitude image commutes with every n-th root.

    Longitude images come from the maps into <xi> wr PSL.  Conjugating a map by
    an element of C_alpha conjugates its longitude image, and C_alpha permutes
    the roots of alpha, so checking those images against all roots also covers
    their C_alpha-conjugates.
    """
    g = params.group()
    ps = g.psl
    n = params.n
    tops = [t for t in range(ps.size) if t != ps.identity
            and any(ps.pow(s, n) == t for s in range(ps.size))]
    instances = 0
    counterexamples = []
    reps = _top_class_reps(g, tops)
    for t in reps:
        alpha = WreathElement(g, (0,) * g.npoints, t)
        roots = [eta for fam in nth_roots(alpha, n) for eta in fam.roots()]
        epsilons = sorted({((c * alpha) ** 3) for c in trefoil_maps_in_A(alpha, budget)},
                          key=lambda e: (e.top, e.base))
        for eps in epsilons:
            for eta in roots:
                instances += 1
                if not eps.commutes_with(eta):
                    counterexamples.append({"alpha": alpha.to_json(), "epsilon": eps.to_json(),
                                            "eta": eta.to_json()})
    return {"params": params.to_json(), "tops": len(reps), "instances": instances,
            "counterexamples": counterexamples}


# -- corpus -----------------------------------------------------------------------------

def _random_calpha(alpha: WreathElement, rng) -> WreathElement:
    g = alpha.group
    base = [0] * g.npoints
    for cyc in g.cycles(alpha.top):
        hi = g.r if alpha.base[cyc[0]] else g.base.order
        val = int(rng.integers(0, hi))
        for i in cyc:
            base[i] = val
    return WreathElement(g, tuple(base), g.psl.identity)


def meridian_candidates(params: Params) -> list[WreathElement]:
    """Elements of <xi> wr PSL in reduced standard form with nontrivial top that have n-th roots.

    One top per PSL conjugacy class; every constant-on-cycles exponent pattern.
    """
    g = params.group()
    ps = g.psl
    n = params.n
    powers = sorted({ps.pow(s, n) for s in range(ps.size)} - {ps.identity})
    out = []
    for t in _top_class_reps(g, powers):
        cycles = g.cycles(t)
        for exps in itertools.product(range(g.r), repeat=len(cycles)):
            base = [0] * g.npoints
            for cyc, e in zip(cycles, exps):
                for i in cyc:
                    base[i] = e
            alpha = WreathElement(g, tuple(base), t)
            if is_reduced_standard_form(alpha) and any(f.feasible for f in nth_roots(alpha, n)):
                out.append(alpha)
    return out


def map_root_corpus(params: Params, seed: int, size: int) -> list[MapRootPair]:
    """Seeded map-root pairs: meridians in <xi> wr PSL, trefoil maps from the
    <xi> wr PSL braid solutions conjugated by random C_alpha elements, and
    random roots from the feasible families."""
    rng = np.random.default_rng(seed)
    alphas = meridian_candidates(params)
    solutions: dict = {}
    out = []
    while len(out) < size:
        alpha = alphas[int(rng.integers(len(alphas)))]
        if alpha not in solutions:
            solutions[alpha] = trefoil_maps_in_A(alpha)
        sols = solutions[alpha]
        c = sols[int(rng.integers(len(sols)))]
        f = sols[int(rng.integers(len(sols)))]
        if rng.random() < 0.5:
            b = _random_calpha(alpha, rng)
            c = b * c * b.inverse()
        if rng.random() < 0.7:
            b = _random_calpha(alpha, rng)
            f = b * f * b.inverse()
        fams = [fam for fam in nth_roots(alpha, params.n) if fam.feasible]
        eta = fams[int(rng.integers(len(fams)))].sample(rng)
        out.append(MapRootPair(params.n, alpha, c, f, eta))
    return out
