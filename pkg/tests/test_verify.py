import pytest

from genknot.cli import strip_wall_time
from genknot.errors import PreconditionError
from genknot.psl import psl_order_formula
from genknot.verify import (run_all, verify_caseii_remark, verify_dichotomy, verify_dqr_lemma,
                            verify_theorem, verify_transitivity, verify_wreath_lemmas)


@pytest.mark.parametrize("q,r", [(2, 5), (3, 5), (5, 2)])
def test_dqr_generic(q, r):
    rep = verify_dqr_lemma(q, r)
    assert rep.passed and rep.details["non_factoring_pairs"] == 0


def test_dqr_exceptional_has_witnesses():
    rep = verify_dqr_lemma(2, 3)
    assert rep.passed and rep.details["exceptional"] and rep.details["non_factoring_pairs"] > 0
    assert rep.details["witnesses"]


@pytest.mark.parametrize("q", [2, 3, 4, 5, 7])
def test_dichotomy_small(q):
    rep = verify_dichotomy(q)
    assert rep.passed and rep.instances_checked == psl_order_formula(q) ** 2


def test_dichotomy_bound():
    for q in (16, 6):
        with pytest.raises(PreconditionError):
            verify_dichotomy(q)


def test_transitivity_small():
    assert verify_transitivity(7).passed


def test_caseii_exempt_pairs():
    assert verify_caseii_remark(7).passed
    rep = verify_caseii_remark(9)
    assert rep.passed
    # in characteristic 3, a^2 - ab + b^2 = 0 forces a/b = -1
    assert set(rep.details["exempt_word_orders"]) <= {2}


def test_wreath_small():
    rep = verify_wreath_lemmas((3, 5, 2), 150, seed=4)
    assert rep.passed and rep.instances_checked > 1000
    rep = verify_wreath_lemmas((3, 2, 5), 60, seed=4, n=2)
    assert rep.passed


def test_same_seed_same_report():
    a = verify_wreath_lemmas((3, 5, 2), 80, seed=11).to_json()
    b = verify_wreath_lemmas((3, 5, 2), 80, seed=11).to_json()
    assert strip_wall_time(a) == strip_wall_time(b)
    c = verify_wreath_lemmas((3, 5, 2), 80, seed=11, workers=2).to_json()
    assert strip_wall_time(a) == strip_wall_time(c)


def test_theorem_small_corpus():
    rep = verify_theorem(2, seed=1, corpus_size=6)
    assert rep.passed


def test_run_all_subset():
    reps = run_all({"dqr": ((2, 3),), "dichotomy": (3,)}, suites=("dqr", "dichotomy"))
    assert [r.check_name for r in reps] == ["dqr", "dichotomy"]
    assert all(r.passed for r in reps)
