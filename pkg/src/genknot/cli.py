"""Command-line interface: ``genknot <command> [options]``.

Every command writes one JSON document (schema "1") to stdout or ``--output``.
Exit status: 0 when every requested check passes, 1 when a check fails,
2 on bad input, 3 when a search budget is exceeded.
"""
from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import __version__
from .errors import BudgetExceeded, GenknotError, PreconditionError, TheoremViolation
from .fpgroups import (Presentation, common_group_presentation, gn_presentation, peripheral_gn,
                       trefoil_presentation)
from .groups import parse_group
from .homcount import STRATEGIES, count_homs, count_homs_gn_structured, default_budget
from .parallel import default_workers
from .theorem import (DEFAULT_SEARCH_BOUND, MapRootPair, Params, check_orders_lemma, nth_roots,
                      nth_roots_oracle, orbit_compatibility, realization, select_primes)
from . import verify as V

SCHEMA_VERSION = "1"
EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_BUDGET = 0, 1, 2, 3
ROOT_LIST_LIMIT = 1000


class UsageError(GenknotError):
    pass


def _int_list(text: str, lengths, what: str) -> list[int]:
    try:
        vals = [int(x) for x in text.replace(" ", "").split(",") if x]
    except ValueError:
        raise UsageError(f"{what} must be comma-separated integers, got {text!r}") from None
    if len(vals) not in lengths:
        raise UsageError(f"{what} needs {' or '.join(map(str, lengths))} integers, got {text!r}")
    return vals


def _load_json(path: str):
    try:
        return json.loads(Path(path).read_text())
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc}") from None
    except json.JSONDecodeError as exc:
        raise UsageError(f"{path} is not valid JSON: {exc}") from None


def _check(name: str, ok: bool, **extra) -> dict:
    return {"check": name, "ok": bool(ok), **extra}


# -- commands -------------------------------------------------------------------
# each returns (passed, report, verified)

def cmd_compare(args):
    group = parse_group(args.group)
    out = {}
    for knot in ("SK", "GK"):
        pres = gn_presentation(knot, args.n)
        rep = count_homs(pres, group, args.strategy, args.budget, args.workers)
        out[knot] = rep
    sk, gk = out["SK"].total, out["GK"].total
    report = {"n": args.n, "group": group.name, "group_order": group.order,
              "strategy": args.strategy, "sk_count": str(sk), "gk_count": str(gk),
              "difference": str(sk - gk),
              "counts": {k: v.to_json() for k, v in out.items()}}
    print(f"|Hom(G_{args.n}(SK), {group.name})| = {sk}  |Hom(G_{args.n}(GK), {group.name})| = {gk}"
          f"  difference = {sk - gk}", file=sys.stderr)
    verified = [_check("breakdowns sum to totals", True)]
    return True, report, verified


def _presentation_for(args) -> Presentation:
    if args.presentation_file:
        return Presentation.from_json(_load_json(args.presentation_file))
    knot = args.knot.upper()
    if knot in ("SK", "GK"):
        if args.n is None:
            raise UsageError("--n is required for SK and GK")
        return gn_presentation(knot, args.n)
    if knot == "G":
        return common_group_presentation()
    if knot == "TREFOIL":
        tref = trefoil_presentation()
        return tref if args.n is None else peripheral_gn(tref, args.n)
    raise UsageError(f"unknown knot {args.knot!r}")


def cmd_count(args):
    group = parse_group(args.group)
    if args.strategy == "structured":
        if args.knot.upper() not in ("SK", "GK") or args.n is None or args.presentation_file:
            raise UsageError("the structured strategy needs --knot SK|GK and --n")
        rep = count_homs_gn_structured(args.knot, args.n, group, args.budget, args.workers)
    else:
        rep = count_homs(_presentation_for(args), group, args.strategy, args.budget, args.workers)
    return True, rep.to_json(), [_check("breakdown sums to the total", True)]


def _params_arg(text: str) -> Params:
    return Params(*_int_list(text, (4,), "--params (n,p,q,r)"))


def cmd_roots(args):
    params = _params_arg(args.params)
    g = params.group()
    alpha = g.from_json(_load_json(args.alpha))
    families = nth_roots(alpha, params.n)
    report = {"params": params.to_json(), "alpha": alpha.to_json(), "families": []}
    verified = []
    passed = True
    for fam in families:
        entry = fam.to_json()
        if fam.feasible:
            roots = fam.roots(args.budget or 1_000_000)
            verified.append(_check(f"eta^{params.n} = alpha for {len(roots)} roots over tau "
                                   f"{fam.tau_element.cycles()}", True))
            if len(roots) <= ROOT_LIST_LIMIT:
                entry["roots"] = [r.to_json() for r in sorted(roots, key=lambda e: e.base)]
            if args.oracle:
                oracle = nth_roots_oracle(alpha, fam.tau, params.n,
                                          **({"budget": args.budget} if args.budget else {}))
                same = set(oracle) == set(roots)
                passed &= same
                verified.append(_check("oracle root set equals the family", same,
                                       oracle_size=len(oracle)))
        report["families"].append(entry)
    report["total_roots"] = str(sum(f.size for f in families if f.feasible))
    return passed, report, verified


def cmd_realize(args):
    real = realization(select_primes(args.n, args.search_bound))
    data = real.to_json()
    verified = data.pop("verified")
    return all(c["ok"] for c in verified), data, verified


def cmd_orbit(args):
    pair = MapRootPair.from_json(_load_json(args.pair))
    kwargs = {"budget": args.budget} if args.budget else {}
    rep = orbit_compatibility(pair, workers=args.workers, **kwargs)
    verified = [_check("braid relations and eta^n = alpha", True),
                _check("SK total does not fall below GK",
                       rep.sk_compatible_count >= rep.gk_compatible_count),
                _check("orbit structure matches the cycle analysis",
                       rep.orbit_meta["structure_consistent"])]
    return all(c["ok"] for c in verified), {"pair": pair.to_json(), **rep.to_json()}, verified


def cmd_primes(args):
    params = select_primes(args.n, args.search_bound)
    orders = check_orders_lemma(params)
    base = params.q ** (params.r - 1) * params.r
    report = {"params": params.to_json(), "psl_order": str(params.psl_order),
              "base_order": str(base), "group_order": str(base ** (params.p + 1) * params.psl_order),
              "orders": orders.to_json()}
    verified = [_check("parameter constraints", not params.violations()),
                _check("orders of n-th powers in PSL", orders.passed,
                       instances=orders.instances)]
    return all(c["ok"] for c in verified), report, verified


def cmd_demonstrate(args):
    if args.n < 2:
        raise UsageError("demonstrate needs n >= 2")
    params = select_primes(args.n, args.search_bound)
    real = realization(params)
    kwargs = {"budget": args.budget} if args.budget else {}
    orbits = []
    verified = list(real.checks)
    for v in sorted(real.roots):
        rep = orbit_compatibility(real.pair(v), workers=args.workers, **kwargs)
        meta = rep.orbit_meta
        orbits.append({"v": real.alpha.group.base.field.decode(v), "orbit_size": meta["orbit_size"],
                       "calpha_size": meta["calpha_size"],
                       "sk_compatible": str(rep.sk_compatible_count),
                       "gk_compatible": str(rep.gk_compatible_count)})
    verified.append(_check("every orbit member is SK-compatible",
                           all(o["sk_compatible"] == str(o["orbit_size"]) for o in orbits)))
    witnesses = [o for o in orbits if o["gk_compatible"] == "0" and o["orbit_size"] > 0
                 and o["sk_compatible"] == str(o["orbit_size"])]
    verified.append(_check("some orbit has no GK-compatible member", bool(witnesses),
                           witnesses=len(witnesses)))
    report = {"params": params.to_json(), "roots": len(real.roots), "orbits": orbits,
              "asymmetric_orbits": len(witnesses)}
    return all(c["ok"] for c in verified), report, verified


def _suite_reports(args) -> list:
    suite = args.suite
    seed = args.seed
    w = args.workers
    if suite == "all":
        return V.run_all({"seed": seed}, workers=w)
    if suite == "dqr":
        pairs = [(args.q, args.r)] if args.q is not None else V.DQR_PAIRS
        if args.q is not None and args.r is None:
            raise UsageError("--suite dqr needs both --q and --r")
        return [V.verify_dqr_lemma(q, r) for q, r in pairs]
    if suite == "dichotomy":
        return [V.verify_dichotomy(q) for q in ([args.q] if args.q else V.DICHOTOMY_QS)]
    if suite == "caseii":
        return [V.verify_caseii_remark(q) for q in ([args.q] if args.q else V.CASEII_QS)]
    if suite == "transitivity":
        p = args.p if args.p is not None else args.q
        return [V.verify_transitivity(x) for x in ([p] if p else V.TRANSITIVITY_PS)]
    if suite == "wreath":
        if args.params:
            vals = _int_list(args.params, (3, 4), "--params (p,q,r or n,p,q,r)")
            n, pqr = (vals[0], vals[1:]) if len(vals) == 4 else (None, vals)
            samples = args.samples or 1000
            return [V.verify_wreath_lemmas(tuple(pqr), samples, seed, n, w)]
        return [V.verify_wreath_lemmas(pqr, args.samples or samples, seed, n, w)
                for pqr, n, samples in V.DEFAULT_CONFIG["wreath"]]
    if suite == "theorem":
        if args.params:
            vals = _int_list(args.params, (1, 4), "--params (n or n,p,q,r)")
            params = Params(*vals) if len(vals) == 4 else None
            return [V.verify_theorem(vals[0], seed, params=params, workers=w)]
        return [V.verify_theorem(n, seed, workers=w) for n in V.DEFAULT_CONFIG["theorem"]]
    raise UsageError(f"unknown suite {suite!r}")


def cmd_verify(args):
    reports = _suite_reports(args)
    data = [r.to_json() for r in reports]
    verified = [_check(f"{r.check_name} {json.dumps(r.params, sort_keys=True)}", r.passed,
                       instances=r.instances_checked) for r in reports]
    for r in reports:
        print(f"{'PASS' if r.passed else 'FAIL'} {r.check_name} {r.params} "
              f"instances={r.instances_checked} counterexamples={len(r.counterexamples)}",
              file=sys.stderr)
    return all(r.passed for r in reports), {"suite": args.suite, "reports": data}, verified


def cmd_replay(args):
    manifest = _load_json(args.manifest_file)
    argv = manifest.get("argv")
    if not isinstance(argv, list) or not argv or argv[0] == "replay":
        raise UsageError("manifest has no replayable command line")
    doc, _ = run(argv)
    same = strip_wall_time(doc) == strip_wall_time(manifest["reports"][0])
    report = {"argv": argv, "identical": same}
    return same, report, [_check("replayed report equals the recorded one", same)]


COMMANDS = {
    "compare": cmd_compare, "count": cmd_count, "roots": cmd_roots, "realize": cmd_realize,
    "orbit": cmd_orbit, "primes": cmd_primes, "verify": cmd_verify,
    "demonstrate": cmd_demonstrate, "replay": cmd_replay,
}


# -- parser -------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--workers", type=int, default=None,
                        help="worker processes (default: $GENKNOT_WORKERS or 1)")
    common.add_argument("--budget-nodes", type=int, default=None, dest="budget",
                        help="cap on search nodes (default: $GENKNOT_BUDGET_NODES)")
    common.add_argument("--manifest", default=None,
                        help="write a run manifest (command line, config, reports) here")
    common.add_argument("--output", "-o", default=None, help="write the report here instead of stdout")

    ap = argparse.ArgumentParser(prog="genknot", parents=[common],
                                 description="Homomorphism counts and map-root analysis for the "
                                             "square and granny knots.")
    ap.add_argument("--version", action="version", version=f"genknot {__version__}")
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("compare", parents=[common], help="count SK and GK homomorphisms into a group")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--group", required=True, help="e.g. S3, D(5), A4, PSL(2,7), 'A4 x S3'")
    p.add_argument("--strategy", choices=STRATEGIES, default="pruned")

    p = sub.add_parser("count", parents=[common], help="count homomorphisms of one presentation")
    p.add_argument("--knot", default="SK", help="SK, GK, G or trefoil")
    p.add_argument("--n", type=int, default=None)
    p.add_argument("--presentation-file", default=None, help="presentation JSON instead of --knot")
    p.add_argument("--group", required=True)
    p.add_argument("--strategy", choices=STRATEGIES + ("structured",), default="pruned")

    p = sub.add_parser("roots", parents=[common], help="n-th roots of a meridian image")
    p.add_argument("--params", required=True, help="n,p,q,r")
    p.add_argument("--alpha", required=True, help="wreath element JSON file")
    p.add_argument("--oracle", action="store_true", help="cross-check by brute force")

    for name, helptext in (("realize", "build the explicit representation for n"),
                           ("primes", "choose p, q, r for n"),
                           ("demonstrate", "run the SK versus GK asymmetry end to end")):
        p = sub.add_parser(name, parents=[common], help=helptext)
        p.add_argument("--n", type=int, required=True)
        p.add_argument("--search-bound", type=int, default=DEFAULT_SEARCH_BOUND)

    p = sub.add_parser("orbit", parents=[common], help="orbit compatibility of a map-root pair")
    p.add_argument("--pair", required=True, help="map-root pair JSON file")

    p = sub.add_parser("verify", parents=[common], help="run verification suites")
    p.add_argument("--suite", choices=("dqr", "dichotomy", "transitivity", "caseii", "wreath",
                                       "theorem", "all"), default="all")
    p.add_argument("--q", type=int, default=None)
    p.add_argument("--r", type=int, default=None)
    p.add_argument("--p", type=int, default=None)
    p.add_argument("--params", default=None)
    p.add_argument("--samples", type=int, default=None)
    p.add_argument("--seed", type=int, default=0)

    p = sub.add_parser("replay", parents=[common], help="rerun a manifest and compare reports")
    p.add_argument("manifest_file")
    return ap


# -- driver -------------------------------------------------------------------

def strip_wall_time(obj):
    if isinstance(obj, dict):
        return {k: strip_wall_time(v) for k, v in obj.items() if k != "wall_time"}
    if isinstance(obj, list):
        return [strip_wall_time(v) for v in obj]
    return obj


def _envelope(command, passed, report, verified, error=None):
    doc = {"schema": SCHEMA_VERSION, "tool": "genknot", "tool_version": __version__,
           "command": command, "passed": bool(passed), "report": report, "verified": verified}
    if error is not None:
        doc["error"] = error
    return doc


def run(argv) -> tuple[dict, int]:
    """Parse ``argv`` and run the command; returns (document, exit status)."""
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.workers is None:
        args.workers = default_workers()
    if args.workers < 1:
        parser.error("--workers must be positive")
    if args.budget is not None and args.budget < 1:
        parser.error("--budget-nodes must be positive")
    try:
        passed, report, verified = COMMANDS[args.command](args)
        code = EXIT_OK if passed else EXIT_FAIL
        doc = _envelope(args.command, passed, report, verified)
    except BudgetExceeded as exc:
        doc = _envelope(args.command, False, None, [],
                        {"type": "budget", "message": str(exc), "nodes": exc.nodes,
                         "budget": exc.budget})
        code = EXIT_BUDGET
    except TheoremViolation as exc:
        doc = _envelope(args.command, False, None, [],
                        {"type": "violation", "message": str(exc),
                         "certificate": json.loads(json.dumps(exc.certificate, default=str))})
        code = EXIT_FAIL
    except AssertionError as exc:
        # an internal consistency check tripped; report it like a violation
        doc = _envelope(args.command, False, None, [],
                        {"type": "violation", "message": f"internal check failed: {exc}",
                         "certificate": {}})
        code = EXIT_FAIL
    except (UsageError, PreconditionError) as exc:
        doc = _envelope(args.command, False, None, [], {"type": "usage", "message": str(exc)})
        code = EXIT_USAGE
    return doc, code


def load_schema(name: str = "report") -> dict:
    """The published JSON schema for reports (``report``) or manifests (``manifest``)."""
    from importlib.resources import files
    return json.loads(files("genknot").joinpath(f"schema/{name}.schema.json").read_text())


def dumps(doc) -> str:
    return json.dumps(doc, indent=2, sort_keys=True) + "\n"


def main(argv=None) -> int:
    argv = list(sys.argv[1:] if argv is None else argv)
    try:
        doc, code = run(argv)
    except SystemExit as exc:  # argparse
        return EXIT_USAGE if exc.code not in (0, None) else EXIT_OK
    args = build_parser().parse_args(argv)
    text = dumps(doc)
    if args.output:
        Path(args.output).write_text(text)
    else:
        sys.stdout.write(text)
    if doc.get("error"):
        print(f"genknot: {doc['error']['message']}", file=sys.stderr)
    if args.manifest:
        manifest = {"schema": SCHEMA_VERSION, "argv": argv, "tool_version": __version__,
                    "config": {"workers": args.workers or default_workers(),
                               "budget_nodes": args.budget if args.budget else default_budget(),
                               "seed": getattr(args, "seed", None)},
                    "reports": [doc]}
        Path(args.manifest).write_text(dumps(manifest))
    return code


if __name__ == "__main__":
    sys.exit(main())
