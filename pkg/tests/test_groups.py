import numpy as np
import pytest

from genknot.errors import BudgetExceeded, PreconditionError
from genknot.groups import (alternating_group, direct_product, dihedral_group, parse_group,
                            permutation_group, symmetric_group)

from oracles import perm_closure


@pytest.mark.parametrize("spec,order", [
    ("S3", 6), ("S4", 24), ("S5", 120), ("A4", 12), ("A5", 60), ("D(5)", 10), ("D7", 14),
    ("Z(6)", 6), ("C4", 4), ("trivial", 1), ("PSL(2,7)", 168), ("PSL(2,4)", 60),
    ("DQR(5,2)", 10), ("DQR(3,2)", 6), ("A4 x S3", 72), ("S3 x Z2 x Z2", 24),
    ("perm:[(0 1 2);(0 1)]", 6), ("perm:(0 1 2 3 4),(1 4)(2 3)", 10),
])
def test_parse_orders(spec, order):
    assert parse_group(spec).order == order


def test_rejections():
    for spec in ("S7", "S12", "H(3,5,2)"):
        with pytest.raises(BudgetExceeded):
            parse_group(spec)
    for spec in ("Q8x", "frobnicate", "perm:[(0 -1)]"):
        with pytest.raises(PreconditionError):
            parse_group(spec)


def check_associative(g):
    t = g.table
    left = t[t[:, :, None], np.arange(g.order)[None, None, :]]
    right = t[np.arange(g.order)[:, None, None], t[None, :, :]]
    assert np.array_equal(left, right)


@pytest.mark.parametrize("spec", ["S4", "A5", "D(6)", "PSL(2,5)", "DQR(5,2)", "A4 x Z3"])
def test_tables_are_groups(spec):
    g = parse_group(spec)
    check_associative(g)
    t = g.table
    idx = np.arange(g.order)
    assert np.all(t[g.identity] == idx) and np.all(t[:, g.identity] == idx)
    assert np.all(t[idx, g.inv] == g.identity)


def test_classes_and_orders():
    s4 = symmetric_group(4)
    assert sorted(len(c) for c in s4.classes) == [1, 3, 6, 6, 8]
    assert list(np.bincount(s4.element_orders)) == [0, 1, 9, 8, 6]
    a5 = alternating_group(5)
    assert sorted(len(c) for c in a5.classes) == [1, 12, 12, 15, 20]
    d5 = dihedral_group(5)
    assert len(d5.classes) == 4


def test_permutation_group_matches_oracle_closure():
    gens = [(1, 2, 3, 4, 0), (0, 4, 3, 2, 1)]
    g = permutation_group("d5", gens, 5)
    assert g.order == len(perm_closure(gens)) == 10


def test_direct_product_identity_and_order():
    g = direct_product(parse_group("S3"), parse_group("Z(2)"))
    assert g.order == 12
    check_associative(g)
    assert g.mul(g.identity, 5) == 5
    assert g.pow(5, g.element_orders[5]) == g.identity
