"""End-to-end acceptance checks at their full sizes.

Each check's report is cached per worker count; the determinism check
recomputes everything with two workers and compares the reports.
"""
import json
from functools import lru_cache

import pytest

from genknot import cli
from genknot.fpgroups import gn_presentation
from genknot.groups import parse_group
from genknot.homcount import count_homs, count_homs_gn_structured
from genknot.psl import psl_order_formula
from genknot.theorem import (Params, map_root_corpus, nth_roots, nth_roots_oracle,
                             orbit_compatibility, realization)
from genknot.verify import (DICHOTOMY_QS, DQR_PAIRS, TRANSITIVITY_PS, verify_dichotomy,
                            verify_dqr_lemma, verify_transitivity, verify_wreath_lemmas,
                            worked_example)

from conftest import FIXTURES

HOM_GROUPS = {"S3": 6, "D(5)": 10, "A4": 132, "D(7)": 14, "S4": 144, "A5": 1860}


def _jsonable(x):
    return cli.strip_wall_time(json.loads(json.dumps(x, default=str)))


def golden(workers):
    return json.dumps(worked_example(), indent=2, sort_keys=True) + "\n"


def dichotomy(workers):
    return [verify_dichotomy(q).to_json() for q in DICHOTOMY_QS]


def transitivity(workers):
    return [verify_transitivity(p).to_json() for p in TRANSITIVITY_PS]


def dqr(workers):
    return [verify_dqr_lemma(q, r).to_json() for q, r in DQR_PAIRS]


def roots(workers):
    real = realization(Params(2, 3, 2, 5))
    alpha = real.alpha
    ps = alpha.group.psl
    taus = [t for t in range(ps.size) if ps.pow(t, 2) == alpha.top]
    fams = nth_roots(alpha, 2)
    closed = [f.roots() for f in fams]
    oracle = [nth_roots_oracle(alpha, t, 2) for t in taus]
    key = lambda e: (e.top, e.base)  # noqa: E731
    return {
        "taus": taus,
        "families": [f.to_json() for f in fams],
        "closed": [[e.to_json() for e in sorted(c, key=key)] for c in closed],
        "oracle": [[e.to_json() for e in sorted(o, key=key)] for o in oracle],
        "realization": sorted(json.dumps(e.to_json()) for e in real.roots.values()),
    }


def demonstrations(workers):
    out = {}
    for n in (2, 3):
        doc, code = cli.run(["demonstrate", "--n", str(n), "--workers", str(workers)])
        out[n] = {"code": code, "doc": doc}
    return out


def corpus(workers):
    out = []
    for par, seed, size in ((Params(2, 3, 2, 5), 0, 40), (Params(2, 3, 2, 5), 1, 40),
                            (Params(3, 2, 3, 5), 0, 15)):
        for pair in map_root_corpus(par, seed, size):
            rep = orbit_compatibility(pair, workers=workers)
            out.append(rep.to_json())
    return out


def homs(workers):
    out = {}
    for spec in HOM_GROUPS:
        g = parse_group(spec)
        row = {}
        for knot in ("SK", "GK"):
            p = gn_presentation(knot, 2)
            for s in ("naive", "pruned", "class"):
                row[f"{knot}/{s}"] = count_homs(p, g, s, workers=workers).to_json()
            row[f"{knot}/structured"] = count_homs_gn_structured(knot, 2, g, workers=workers).to_json()
        out[spec] = row
    return out


def wreath_suites(workers):
    return [verify_wreath_lemmas((3, 5, 2), 10_000, seed=0, workers=workers).to_json(),
            verify_wreath_lemmas((3, 2, 5), 1_000, seed=0, n=2, workers=workers).to_json()]


CHECKS = [golden, dichotomy, transitivity, dqr, roots, demonstrations, corpus, homs, wreath_suites]


@lru_cache(maxsize=None)
def result(name, workers=1):
    fn = next(f for f in CHECKS if f.__name__ == name)
    return _jsonable(fn(workers))


@pytest.mark.criterion("golden worked example in H(3,5,2) matches the fixture byte for byte")
def test_golden_worked_example():
    assert result("golden") == (FIXTURES / "worked_example.json").read_text()


@pytest.mark.criterion("x^3 = y^2 dichotomy holds in PSL(2,q) for q up to 13, exhaustively")
def test_dichotomy():
    for q, rep in zip(DICHOTOMY_QS, result("dichotomy")):
        assert rep["passed"], rep["counterexamples"]
        assert rep["instances_checked"] == psl_order_formula(q) ** 2


@pytest.mark.criterion("witness-free solutions of x^3 = y^2 generate PSL(2,p), transitive on points, p = 7, 11, 13")
def test_transitivity():
    reps = result("transitivity")
    assert [r["params"]["p"] for r in reps] == list(TRANSITIVITY_PS)
    assert all(r["passed"] for r in reps)


@pytest.mark.criterion("D(q,r) orders, commuting pairs and trefoil factoring, with (2,3) witnesses")
def test_dqr():
    reps = result("dqr")
    assert all(r["passed"] for r in reps)
    by = {(r["params"]["q"], r["params"]["r"]): r for r in reps}
    assert by[(2, 3)]["details"]["non_factoring_pairs"] > 0
    for pair in ((2, 5), (3, 5), (2, 7), (5, 2)):
        assert by[pair]["details"]["non_factoring_pairs"] == 0


@pytest.mark.criterion("closed-form square roots of the meridian equal the brute-force scan (16 roots)")
def test_roots_match_oracle():
    r = result("roots")
    assert len(r["taus"]) == 1
    assert len(r["families"]) == 1 and r["families"][0]["size"] == "16"
    sols = [int(c["solutions"]) for c in r["families"][0]["cycles"]]
    assert sorted(sols) == [1, 16]
    assert r["closed"] == r["oracle"]
    assert len(r["oracle"][0]) == 16
    assert sorted(json.dumps(e) for e in r["oracle"][0]) == r["realization"]


@pytest.mark.criterion("SK versus GK demonstration at n = 2 and n = 3")
def test_demonstration():
    demos = result("demonstrations")
    for n, expected in (("2", {"n": 2, "p": 3, "q": 2, "r": 5}), ("3", {"n": 3, "p": 2, "q": 3, "r": 5})):
        d = demos[n]
        assert d["code"] == 0 and d["doc"]["passed"]
        rep = d["doc"]["report"]
        assert rep["params"] == expected
        assert all(v["ok"] for v in d["doc"]["verified"])
        zero = [0] * len(rep["orbits"][0]["v"])
        for orb in rep["orbits"]:
            assert orb["sk_compatible"] == str(orb["orbit_size"])
            if orb["v"] == zero:
                assert orb["gk_compatible"] == str(orb["orbit_size"])
            else:
                assert orb["gk_compatible"] == "0"
        assert rep["asymmetric_orbits"] == rep["roots"] - 1
    two = demos["2"]["doc"]["report"]
    assert two["roots"] == 16 and two["asymmetric_orbits"] == 15
    assert all(o["calpha_size"] == 400 for o in two["orbits"])


@pytest.mark.criterion("no constructed map-root pair has more GK- than SK-compatible orbit members")
def test_orbit_inequality():
    reps = result("corpus")
    assert len(reps) == 95
    for rep in reps:
        assert int(rep["gk_compatible_count"]) <= int(rep["sk_compatible_count"])
        assert rep["orbit_meta"]["structure_consistent"]


@pytest.mark.criterion("|Hom(G_2(SK),H)| = |Hom(G_2(GK),H)| for six small H, all strategies agreeing")
def test_small_group_counts():
    for spec, row in result("homs").items():
        totals = {k: int(v["total"]) for k, v in row.items()}
        assert set(totals.values()) == {HOM_GROUPS[spec]}, (spec, totals)


@pytest.mark.criterion("wreath lemma suites: 10^4 samples in H(3,5,2), 10^3 in H(3,2,5)")
def test_wreath_suites():
    a, b = result("wreath_suites")
    for rep in (a, b):
        assert rep["passed"] and rep["counterexamples"] == []
    assert a["details"]["samples"] == 10_000 and b["details"]["samples"] == 1_000


@pytest.mark.criterion("reports are identical with one and two workers")
def test_determinism():
    for fn in CHECKS:
        assert result(fn.__name__, 1) == result(fn.__name__, 2), fn.__name__
