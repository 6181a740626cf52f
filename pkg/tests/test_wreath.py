import json

import numpy as np
import pytest
from hypothesis import given, strategies as st

from genknot.errors import FieldMismatch, HypothesisError, PreconditionError
from genknot.verify import worked_example
from genknot.wreath import (bracket, centralizer_characterisation, centralizer_Calpha,
                            centralizer_size, check_power_lemma, conjugate_into_A, cycle_product,
                            double_bracket, is_reduced_standard_form, is_standard_form, to_Apr,
                            to_reduced_standard_form, v_norm, w_inv, w_mul, w_pow, wreath_group)

from conftest import FIXTURES

PARAMS = [(3, 5, 2), (3, 2, 5), (2, 3, 5), (5, 2, 3), (2, 5, 3)]


def H352():
    return wreath_group(3, 5, 2)


def el(g, base, top):
    d = g.base
    return g.element([d.from_alias(b) for b in base], top)


A_TOP, B_TOP = (1, 0, 1, 1), (0, -1, 1, 0)


def alpha_beta():
    g = H352()
    return (el(g, ["rho", "rho^2*sigma", "rho^3", "rho^4*sigma"], A_TOP),
            el(g, ["rho^3", "rho", "rho^4", "sigma"], B_TOP))


def oracle_mul(x, y):
    """(xy)_i = x_i y_{i.x^}, tops multiplied in PSL."""
    g = x.group
    d = g.base
    base = [d.mul(x.base[i], y.base[x.top_element.act(i)]) for i in range(g.npoints)]
    return base, (x.top_element * y.top_element).index


def test_worked_example_matches_fixture_bytes():
    text = json.dumps(worked_example(), indent=2, sort_keys=True) + "\n"
    assert text == (FIXTURES / "worked_example.json").read_text()


def test_worked_example_products():
    g = H352()
    a, b = alpha_beta()
    assert a * b == el(g, ["rho^2", "rho^3*sigma", "rho", "rho^4"], (0, -1, 1, -1))
    assert w_inv(a) == el(g, ["rho^2", "rho^4", "rho^2*sigma", "rho^4*sigma"],
                          a.top_element.inverse())
    assert w_mul(a, w_inv(a)).is_identity()
    assert double_bracket(a) == 0 and double_bracket(b) == 1 and double_bracket(a * b) == 1
    assert bracket(a)[0] == (0, 1, 0, 1)
    delta = el(g, ["rho^3", "rho", "1", "rho^3"], (1, 0, 0, 1))
    assert v_norm(delta) == g.base.field.encode([2])


def test_cycle_products():
    g = H352()
    a, b = alpha_beta()
    d = g.base
    assert cycle_product(b, 0) == d.from_alias("rho^3*sigma")
    assert cycle_product(a, 0) == d.mul(d.mul(a.base[0], a.base[1]), a.base[2])
    assert cycle_product(a, 3) == a.base[3]
    assert all(cycle_product(g.identity, i) == 0 for i in range(4))


def test_standard_forms():
    g = H352()
    a, b = alpha_beta()
    target = el(g, ["sigma", "sigma", "sigma", "rho^4*sigma"], A_TOP)
    assert is_standard_form(target)
    assert not is_standard_form(el(g, ["rho", "1", "1", "1"], A_TOP))
    assert is_standard_form(g.identity) and is_reduced_standard_form(g.identity)
    cert = to_reduced_standard_form(a)
    assert cert.verify() and cert.gamma == target
    assert cert.gamma.top == a.top
    with pytest.raises(HypothesisError) as info:
        to_reduced_standard_form(b)
    assert info.value.details["length"] == 2 and info.value.details["cycle_product_order"] == 2
    # already reduced: fixed point
    again = to_reduced_standard_form(cert.gamma)
    assert again.gamma == cert.gamma
    assert g.conj(again.conjugator, cert.gamma) == cert.gamma


def test_into_A():
    g = H352()
    a, _ = alpha_beta()
    cert = conjugate_into_A(a)
    assert cert.verify()
    assert cert.gamma == el(g, ["sigma"] * 4, A_TOP)
    # already in A: unchanged
    assert to_Apr(cert.gamma).gamma == cert.gamma
    # entries of the form (v, 1) go to xi
    h = wreath_group(3, 2, 5)
    d = h.base
    x = h.element([d.pack(3, 1)] * 4, h.psl.identity)
    c = to_Apr(x)
    assert c.verify() and c.gamma.base == (d.xi,) * 4
    with pytest.raises(PreconditionError):
        to_Apr(h.element([d.pack(3, 0)] * 4, h.psl.identity))


def test_abelianisation_identity_and_errors():
    g = H352()
    assert double_bracket(g.identity) == 0 and v_norm(g.identity) == 0
    a, _ = alpha_beta()
    with pytest.raises(PreconditionError):
        v_norm(a)
    with pytest.raises(FieldMismatch):
        w_mul(a, wreath_group(3, 2, 5).identity)
    with pytest.raises(PreconditionError):
        wreath_group(3, 3, 2)


def meridian_352():
    """The square of the meridian-type element from the n = 2 realization."""
    g = wreath_group(3, 2, 5)
    return g, g.element([3, 3, 3, 0], (1, 0, 1, 1))


def test_centraliser_of_realization_meridian():
    g, a = meridian_352()
    cs = centralizer_Calpha(a)
    assert len(cs) == centralizer_size(a) == 5 * 80 == 400
    # brute-force: every trivial-top element constant on the 3-cycle with <xi> entries there
    beta = g.element([1, 1, 1, 0])
    assert beta.commutes_with(a) and beta in set(cs)
    # oracle scan over all trivial-top elements constant on orbits
    count = 0
    for x in range(g.base.order):
        for y in range(g.base.order):
            b = g.element([x, x, x, y])
            count += b.commutes_with(a)
    assert count == 400


def test_centraliser_rejects_general_input():
    g = H352()
    a, _ = alpha_beta()
    with pytest.raises(PreconditionError):
        centralizer_Calpha(a)


@st.composite
def wreath_elements(draw, n=1, params=None):
    p = params or draw(st.sampled_from(PARAMS))
    g = wreath_group(*p)
    seed = draw(st.integers(0, 2**32 - 1))
    rng = np.random.default_rng(seed)
    return [g.random_element(rng) for _ in range(n)]


@given(wreath_elements(3))
def test_group_laws(xs):
    a, b, c = xs
    g = a.group
    assert (a * b) * c == a * (b * c)
    assert list((a * b).base) == oracle_mul(a, b)[0]
    assert (a * b).top == oracle_mul(a, b)[1]
    assert (a * w_inv(a)).is_identity()
    # inverse formula: (a^-1)_i = (a_{i . a^-1})^-1
    inv = w_inv(a)
    top_inv = a.top_element.inverse()
    assert inv.base == tuple(g.base.invert(a.base[top_inv.act(i)]) for i in range(g.npoints))
    # top projection and [[.]] are homomorphisms
    assert (a * b).top_element == a.top_element * b.top_element
    assert double_bracket(a * b) == (double_bracket(a) + double_bracket(b)) % g.r


@given(wreath_elements(1), st.integers(-7, 12))
def test_power_matches_repeated_product(xs, m):
    (a,) = xs
    g = a.group
    x = g.identity
    for _ in range(abs(m)):
        x = x * (a if m > 0 else w_inv(a))
    assert w_pow(a, m) == x


@given(wreath_elements(1))
def test_cycle_product_shift_law(xs):
    (a,) = xs
    g = a.group
    d = g.base
    for i in range(g.npoints):
        j = a.top_element.act(i)
        assert cycle_product(a, j) == d.mul(d.mul(d.invert(a.base[i]), cycle_product(a, i)), a.base[i])


@given(wreath_elements(1), st.sampled_from([1, 2, 3, 4, 5, 6]))
def test_power_lemma(xs, m):
    (a,) = xs
    assert check_power_lemma(a, m).passed


@given(wreath_elements(1))
def test_power_lemma_trivial_top(xs):
    (a,) = xs
    g = a.group
    b = g.element(a.base)
    d = g.base
    b3 = b**3
    assert b3.base == tuple(d.pow(x, 3) for x in b.base)
    assert check_power_lemma(b, 3).passed


@given(wreath_elements(1))
def test_standard_form_certificates(xs):
    (a,) = xs
    g = a.group
    d = g.base
    hyp = all(np.gcd(len(c), d.order_of(cycle_product(a, c[0]))) == 1 for c in g.cycles(a.top))
    if not hyp:
        with pytest.raises(HypothesisError):
            to_reduced_standard_form(a)
        return
    cert = to_reduced_standard_form(a)
    assert cert.verify()
    assert is_reduced_standard_form(cert.gamma) and cert.gamma.top == a.top
    for i in range(g.npoints):
        assert d.conjugacy_class(cycle_product(cert.gamma, i)) == d.conjugacy_class(cycle_product(a, i))


@given(wreath_elements(1, params=(3, 2, 5)))
def test_nth_power_pipeline(xs):
    (gam,) = xs
    a = gam**2
    if a.top == a.group.psl.identity:
        return
    cert = conjugate_into_A(a)
    assert cert.verify() and cert.gamma.in_A() and is_reduced_standard_form(cert.gamma)


@given(st.sampled_from(PARAMS), st.integers(0, 2**32 - 1))
def test_centraliser_characterisation(params, seed):
    g = wreath_group(*params)
    rng = np.random.default_rng(seed)
    top = int(rng.integers(0, g.psl.size))
    base = [0] * g.npoints
    for cyc in g.cycles(top):
        e = 0 if len(cyc) % g.r == 0 else int(rng.integers(0, g.r))
        for i in cyc:
            base[i] = e
    a = g.element(base, top)
    assert is_reduced_standard_form(a)
    for b in (g.random_element(rng, top=g.psl.identity),
              g.element([base[c[0]] for c in g.cycles(top) for _ in c], g.psl.identity)):
        assert b.commutes_with(a) == centralizer_characterisation(a, b)
    if centralizer_size(a) <= 500:
        for b in centralizer_Calpha(a):
            assert centralizer_characterisation(a, b)


def test_json_round_trip():
    a, b = alpha_beta()
    g = a.group
    for x in (a, b, a * b):
        assert g.from_json(json.loads(json.dumps(x.to_json()))) == x
    assert a.to_json()["top"] == "[[1,0],[1,1]]"
    assert g.from_json({"base": ["rho", "rho^2*sigma", "rho^3", "rho^4*sigma"],
                        "top": "[[1,0],[1,1]]"}) == a
