import itertools

import pytest
from hypothesis import given, strategies as st

from genknot.errors import FieldMismatch, PreconditionError
from genknot.psl import (psl_act, psl_enumerate, psl_group, psl_has_element_of_order, psl_inv,
                         psl_mul, psl_order, psl_order_formula, psl_to_permutation)

from oracles import INF, mat_mul, mobius, perm_closure, proj_points, sl2, sym

QS = (2, 3, 4, 5, 7, 8, 9, 11, 13)


def _point(z, p):
    return p if z == INF else z


@pytest.mark.parametrize("q", QS)
def test_enumeration_size(q):
    elems = psl_enumerate(q)
    assert len(elems) == psl_order_formula(q) == q * (q * q - 1) // (1 if q % 2 == 0 else 2)
    assert len(set(elems)) == len(elems)


def test_small_orders():
    assert len(psl_enumerate(3)) == 12
    assert len(psl_enumerate(5)) == 60
    assert len(psl_enumerate(2)) == 6


def test_psl2_2_is_full_symmetric_group():
    perms = {psl_to_permutation(g) for g in psl_enumerate(2)}
    assert perms == set(sym(3))


def test_pentagon_example_tops():
    g = psl_group(3)
    a = g.from_matrix(1, 0, 1, 1)
    b = g.from_matrix(0, -1, 1, 0)
    assert psl_act(a, 0) == 1
    assert a.cycles() == "(0 1 2)(inf)"
    assert b.cycles() == "(0 inf)(1 2)"
    ab = psl_mul(a, b)
    assert ab == g.from_matrix(0, -1, 1, -1)
    assert ab.cycles() == "(0 2 inf)(1)"


@pytest.mark.parametrize("p", (2, 3, 5, 7, 11, 13))
def test_action_matches_mobius_oracle(p):
    g = psl_group(p)
    seen = {}
    for m in sl2(p):
        el = g.from_matrix(*m)
        perm = tuple(_point(mobius(m, z, p), p) for z in proj_points(p))
        assert psl_to_permutation(el) == perm
        seen.setdefault(el, perm)
    # M and -M give the same class and the same permutation; nothing else collides
    assert len(seen) == g.size
    assert len(set(seen.values())) == g.size


@pytest.mark.parametrize("q", QS)
def test_permutation_representation_is_faithful_homomorphism(q):
    g = psl_group(q)
    perms = g.perms
    assert len({tuple(row) for row in perms.tolist()}) == g.size
    rng = __import__("numpy").random.default_rng(q)
    for _ in range(200):
        i, j = (int(x) for x in rng.integers(0, g.size, 2))
        k = g.mul(i, j)
        assert list(perms[k]) == [int(perms[j][perms[i][z]]) for z in range(g.npoints)]


@pytest.mark.parametrize("q", (2, 3, 4, 5))
def test_right_action_law_exhaustive(q):
    g = psl_group(q)
    elems = g.elements()
    for x, y in itertools.product(elems, elems):
        xy = x * y
        for z in range(g.npoints):
            assert xy.act(z) == y.act(x.act(z))


@pytest.mark.parametrize("p", (3, 5, 7, 11, 13))
def test_sign_canonicalisation(p):
    g = psl_group(p)
    for el in g.elements():
        first = next(c for c in el.codes if c)
        assert 1 <= first <= (p - 1) // 2
        # re-canonicalising is idempotent; -M is the same class
        assert g.canonical_codes(el.codes) == el.codes
        neg = tuple((-c) % p for c in el.codes)
        assert g.from_matrix(*neg) == el


@pytest.mark.parametrize("p", (3, 5, 7, 11, 13))
def test_matrix_product_oracle(p):
    g = psl_group(p)
    mats = sl2(p)
    rng = __import__("numpy").random.default_rng(p)
    for _ in range(100):
        m, n = (mats[int(i)] for i in rng.integers(0, len(mats), 2))
        assert g.from_matrix(*m) * g.from_matrix(*n) == g.from_matrix(*mat_mul(m, n, p))


@pytest.mark.parametrize("p", (2, 3, 5, 7, 11, 13))
def test_unipotent_has_order_p(p):
    g = psl_group(p)
    u = g.from_matrix(1, 0, 1, 1)
    assert psl_order(u) == p
    x, m = u, 1
    while not x.is_identity():
        x, m = x * u, m + 1
    assert m == p


def test_orders_against_repeated_multiplication():
    g = psl_group(7)
    for el in g.elements():
        x, m = el, 1
        while not x.is_identity():
            x, m = x * el, m + 1
        assert el.order() == m
    assert psl_order(g.element(g.identity)) == 1


@pytest.mark.parametrize("p", (3, 5, 11, 13))
def test_no_order_four_when_p_is_3_or_5_mod_8(p):
    assert p % 8 in (3, 5)
    assert not psl_has_element_of_order(p, 4)


def test_has_element_of_order():
    assert not psl_has_element_of_order(3, 4)
    assert psl_has_element_of_order(5, 5)
    assert psl_has_element_of_order(7, 4)
    for p in (2, 3, 5, 7):
        assert psl_has_element_of_order(p, 1)


def test_generated_by_two_elements_matches_oracle_closure():
    g = psl_group(5)
    a, b = g.from_matrix(1, 0, 1, 1), g.from_matrix(0, -1, 1, 0)
    closure = perm_closure([a.perm, b.perm])
    assert len(closure) == 60


def test_identity_and_inverse():
    g = psl_group(9)
    e = g.element(g.identity)
    assert psl_to_permutation(e) == tuple(range(10))
    for el in g.elements()[:50]:
        assert (el * psl_inv(el)).is_identity()
        assert all(e.act(z) == z for z in range(10))


def test_text_forms():
    g = psl_group(3)
    a = g.from_matrix(1, 0, 1, 1)
    assert repr(a) == "[[1,0],[1,1]]"
    assert a.to_json() == [[1, 0], [1, 1]]
    assert g.point_labels() == ["0", "1", "2", "inf"]
    f4 = psl_group(4)
    assert isinstance(f4.element(3).to_json()[0][0], list)


def test_errors():
    with pytest.raises(PreconditionError):
        psl_group(6)
    with pytest.raises(PreconditionError):
        psl_group(3).from_matrix(1, 1, 1, 1)
    with pytest.raises(FieldMismatch):
        psl_group(3).element(1) * psl_group(5).element(1)


@given(st.sampled_from((3, 4, 5, 7, 8, 9)), st.data())
def test_group_axioms(q, data):
    g = psl_group(q)
    x, y, z = (g.element(data.draw(st.integers(0, g.size - 1))) for _ in range(3))
    assert (x * y) * z == x * (y * z)
    assert (x * y).inverse() == y.inverse() * x.inverse()
    assert x ** x.order() == g.element(g.identity)
