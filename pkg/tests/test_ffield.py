import itertools

import pytest
from hypothesis import given, strategies as st

from genknot.errors import FieldMismatch, PreconditionError
from genknot.ffield import (Field, FieldElement, fe_add, fe_inv, fe_mul, fe_pow, field_new,
                            is_prime, prime_power, zeta_of_order)

from oracles import ext_mul, ext_pow, is_irreducible, smallest_irreducible

FIELDS = [(2, 1), (3, 1), (5, 1), (2, 2), (2, 3), (2, 4), (3, 2), (3, 4), (5, 2), (2, 6)]


def test_primes_and_prime_powers():
    assert [n for n in range(30) if is_prime(n)] == [2, 3, 5, 7, 11, 13, 17, 19, 23, 29]
    assert prime_power(8) == (2, 3)
    assert prime_power(9) == (3, 2)
    assert prime_power(13) == (13, 1)
    assert prime_power(12) is None
    assert prime_power(1) is None


def test_prime_field_has_linear_modulus():
    f = field_new(5, 1)
    assert f.order == 5
    assert f.modulus == (0, 1)
    assert FieldElement(f, 3) * FieldElement(f, 4) == 2


def test_f4_modulus():
    assert field_new(2, 2).modulus == (1, 1, 1)


@pytest.mark.parametrize("q,k", FIELDS)
def test_modulus_is_least_irreducible(q, k):
    f = field_new(q, k)
    assert f.order == q**k
    assert f.modulus == smallest_irreducible(q, k)
    assert is_irreducible(list(f.modulus), q)
    assert field_new(q, k).modulus == f.modulus


@pytest.mark.parametrize("q,k", [(2, 4), (3, 2), (5, 2), (2, 3)])
def test_multiplication_matches_polynomial_oracle(q, k):
    f = field_new(q, k)
    elems = list(range(f.order))
    for a, b in itertools.product(elems, elems):
        got = f.decode(f.mul(a, b))
        assert got == ext_mul(f.decode(a), f.decode(b), f.modulus, q)


@pytest.mark.parametrize("q,k,r", [(2, 4, 5), (2, 2, 3), (3, 4, 5), (5, 1, 2), (2, 6, 7), (3, 1, 2)])
def test_zeta_is_least_element_of_exact_order(q, k, r):
    f = field_new(q, k)
    z = zeta_of_order(f, r)
    assert z**r == 1
    assert len({(z**i).code for i in range(r)}) == r
    # least coefficient vector among all elements of exact order r
    cands = [c for c in range(2, f.order) if ext_pow(f.decode(c), r, f.modulus, q) == f.decode(1)]
    assert z.coeffs == min(f.decode(c) for c in cands)


def test_zeta_in_f5_is_minus_one():
    assert zeta_of_order(field_new(5, 1), 2) == 4


def test_zeta_in_f16_matches_generator_power():
    f = field_new(2, 4)
    gen = next(g for g in range(2, 16) if FieldElement(f, g).order() == 15)
    z = zeta_of_order(f, 5)
    cube = FieldElement(f, gen) ** 3
    assert cube**5 == 1 and cube != 1
    assert z in {cube**j for j in range(1, 5)}


def test_both_f4_units_have_order_three():
    f = field_new(2, 2)
    assert [FieldElement(f, c).order() for c in (2, 3)] == [3, 3]
    assert zeta_of_order(f, 3).coeffs == (0, 1)


@pytest.mark.parametrize("q,k,r", [(2, 4, 5), (3, 4, 5), (2, 6, 7), (5, 1, 2)])
def test_geometric_sum_of_zeta_powers_vanishes(q, k, r):
    f = field_new(q, k)
    z = zeta_of_order(f, r)
    for i in range(1, r):
        total = f.zero
        for j in range(r):
            total = total + z ** (i * j)
        assert total.is_zero()


def test_errors():
    with pytest.raises(PreconditionError):
        field_new(4, 1)
    with pytest.raises(PreconditionError):
        field_new(2, 0)
    with pytest.raises(PreconditionError):
        field_new(2, 30)
    with pytest.raises(PreconditionError):
        zeta_of_order(field_new(2, 4), 7)
    with pytest.raises(ZeroDivisionError):
        fe_inv(field_new(3, 2).zero)
    with pytest.raises(FieldMismatch):
        fe_add(field_new(2, 2).one, field_new(2, 3).one)


def test_trivial_identities():
    f = field_new(2, 4)
    z = zeta_of_order(f, 5)
    assert fe_mul(z, fe_pow(z, 4)) == 1
    for c in range(16):
        v = FieldElement(f, c)
        assert fe_add(v, v).is_zero()
        if c:
            assert fe_pow(v, 15) == 1


def test_serialisation():
    f = field_new(2, 4)
    assert f.to_json() == {"q": 2, "k": 4, "modulus": list(f.modulus)}
    e = FieldElement(f, f.encode([1, 0, 1, 1]))
    assert e.to_json() == [1, 0, 1, 1]
    assert repr(e) == "[1,0,1,1]"


@st.composite
def field_and_elements(draw, n=3):
    q, k = draw(st.sampled_from(FIELDS))
    f = field_new(q, k)
    return f, [FieldElement(f, draw(st.integers(0, f.order - 1))) for _ in range(n)]


@given(field_and_elements())
def test_field_axioms(data):
    f, (a, b, c) = data
    assert (a + b) + c == a + (b + c)
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a + b == b + a and a * b == b * a
    assert a + (-a) == 0
    if a:
        assert a * a.inverse() == 1
        assert (a / a) == 1


@given(field_and_elements(1), st.integers(0, 40), st.integers(0, 40))
def test_power_laws(data, e1, e2):
    f, (a,) = data
    assert a ** (e1 + e2) == a**e1 * a**e2
    if a:
        assert a ** (f.order - 1) == 1
