"""Command-line front end: gen, median, pvalue, check, verify-paper.

All machine-readable output is a single JSON report on stdout.  Exit codes:
0 for a completed run (false verdicts included), 1 for a failed
verify-paper suite, 2 for usage or parse errors.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
import time
from fractions import Fraction

from . import benzenoid as bz
from . import families, lp, medians, oracle, recognizers
from .errors import MedgraphError, ParseError, UnknownClass, UnknownSuite
from .graph import all_pairs_distances, read_graph, write_graph
from .medians import Profile, median_set, median_value, local_median_set_p


def _jsonable(x):
    if isinstance(x, Fraction):
        return str(x) if x.denominator > 1 else x.numerator
    if isinstance(x, dict):
        return {str(k): _jsonable(v) for k, v in x.items()}
    if isinstance(x, (list, tuple, set, frozenset)):
        return [_jsonable(v) for v in x]
    return x


def _report(verb: str, inputs: dict, result: dict, start: float) -> int:
    out = {"verb": verb, "inputs": _jsonable(inputs),
           "result": _jsonable(result),
           "wall_time_s": round(time.monotonic() - start, 4)}
    print(json.dumps(out, indent=2, sort_keys=True))
    return 0


def _load_graph(path: str):
    with open(path) as fh:
        g = read_graph(fh.read())
    return g, all_pairs_distances(g)


# ----------------------------------------------------------------- gen verb

def cmd_gen(args) -> int:
    start = time.monotonic()
    params = {}
    for item in args.params:
        if "=" not in item:
            raise ParseError(f"parameter {item!r} is not key=value")
        key, val = item.split("=", 1)
        params[key] = int(val)
    labels = None
    if args.family == "benzenoid":
        if not args.benzenoid_spec:
            raise ParseError("benzenoid needs --benzenoid-spec")
        with open(args.benzenoid_spec) as fh:
            spec = bz.read_benzenoid_spec(fh.read())
        g = bz.benzenoid(spec).graph
    elif args.family == "beta_configuration":
        g = families.beta_configuration()
    elif args.family == "alpha_configuration":
        g = families.alpha_configuration(params.get("type", 1))
    elif args.family == "projective_plane":
        g = families.projective_incidence_graph(params.get("q", 2))
    else:
        g, labels = families.generate(families.FamilySpec(args.family, params))
    with open(args.output, "w") as fh:
        fh.write(write_graph(g))
    if args.labels:
        if labels is None:
            raise ParseError(f"family {args.family} has no canonical labels")
        with open(args.labels, "w") as fh:
            fh.write(recognizers.write_labels(labels))
    return _report("gen", {"family": args.family, "params": params},
                   {"n": g.n, "m": g.num_edges(), "output": args.output}, start)


# -------------------------------------------------------------- median verb

def cmd_median(args) -> int:
    start = time.monotonic()
    g, d = _load_graph(args.graph)
    with open(args.profile) as fh:
        pi = medians.read_profile(fh.read(), n=g.n)
    f = medians.median_function(g, d, pi)
    med = median_set(g, d, pi)
    lmed = local_median_set_p(g, d, pi, args.p)
    connected = medians.is_p_connected(g, d, med, args.p)
    return _report("median", {"graph": args.graph, "profile": args.profile,
                              "p": args.p},
                   {"min_value": min(f.values), "median_set": sorted(med),
                    "local_median_set": sorted(lmed),
                    "median_p_connected": connected,
                    "local_equals_global": med == lmed}, start)


# -------------------------------------------------------------- pvalue verb

def cmd_pvalue(args) -> int:
    start = time.monotonic()
    g, d = _load_graph(args.graph)
    rep = lp.compute_p(g, d, restrict_j=args.restrict_j)
    result = {"p": rep.p, "diameter": d.diameter}
    if rep.witness_pair is not None:
        result["witness_pair"] = list(rep.witness_pair)
        result["witness_profile"] = dict(rep.witness_profile.weights)
        result["disconnecting_profile"] = dict(rep.disconnecting_profile.weights)
    if args.oracle:
        hit = oracle.brute_force_oracle(g, d, max(1, rep.p - 1), args.oracle) \
            if rep.p > 1 else None
        result["oracle_max_weight"] = args.oracle
        result["oracle_counterexample_below_p"] = (
            None if hit is None else
            {"pair": list(hit[0]), "profile": dict(hit[1].weights)})
        result["oracle_agrees"] = (rep.p == 1) == (hit is None)
    return _report("pvalue", {"graph": args.graph,
                              "restrict_j": args.restrict_j}, result, start)


# --------------------------------------------------------------- check verb

_SIMPLE_CHECKS = {
    "meshed": lambda g, d: recognizers.is_meshed(g, d),
    "weakly-modular": lambda g, d: recognizers.is_weakly_modular(g, d),
    "modular": lambda g, d: recognizers.is_modular(g, d),
    "chordal": lambda g, d: recognizers.is_chordal(g),
    "bridged": lambda g, d: recognizers.is_bridged(g, d),
    "weakly-bridged": lambda g, d: recognizers.is_weakly_bridged(g, d),
    "cb": lambda g, d: recognizers.has_convex_balls(g, d),
    "inc": lambda g, d: recognizers.satisfies_INC(g, d),
    "tpc": lambda g, d: recognizers.satisfies_TPC(g, d),
    "pc": lambda g, d: recognizers.satisfies_PC(g, d),
    "ic3": lambda g, d: recognizers.satisfies_ICm(g, d, 3),
    "ic4": lambda g, d: recognizers.satisfies_ICm(g, d, 4),
    "thick": lambda g, d: recognizers.is_thick(g, d),
    "bipartite-absolute-retract":
        lambda g, d: recognizers.is_bipartite_absolute_retract(g, d),
}


def cmd_check(args) -> int:
    start = time.monotonic()
    g, d = _load_graph(args.graph)
    name = args.cls
    if name in _SIMPLE_CHECKS:
        verdict = _SIMPLE_CHECKS[name](g, d)
        result = {"class": verdict.name, "verdict": verdict.verdict,
                  "witness": verdict.witness}
    elif name == "alpha":
        found = recognizers.detect_alpha_configuration(g, d)
        result = {"class": "alpha_configuration", "verdict": found is not None,
                  "witness": found}
    elif name == "beta":
        found = recognizers.detect_beta_configuration(g, d)
        result = {"class": "beta_configuration", "verdict": found is not None,
                  "witness": found}
    elif name in ("partial-johnson", "partial-halved-cube"):
        if not args.embedding:
            raise ParseError(f"{name} needs --embedding")
        target = "johnson" if name == "partial-johnson" else "halved_cube"
        with open(args.embedding) as fh:
            emb = recognizers.read_labels(fh.read(), target, k=args.k)
        fn = (recognizers.connected_medians_partial_johnson
              if target == "johnson"
              else recognizers.connected_medians_partial_halved_cube)
        verdict = fn(g, d, emb)
        result = {"class": verdict.name, "verdict": verdict.verdict,
                  "witness": verdict.witness}
    else:
        raise UnknownClass(f"unknown class {name!r}")
    _report("check", {"class": name, "graph": args.graph}, result, start)
    return 0 if result["verdict"] else 1


# -------------------------------------------------------- verify-paper verb


def _suite_cycles() -> list[tuple[str, bool]]:
    checks = []
    for k, m in ((2, 2), (2, 3), (3, 2), (3, 4), (3, 5)):
        g = families.cycle_graph(2 * k + m)
        d = all_pairs_distances(g)
        u, v = 0, m
        x = (-k) % g.n
        assert d(u, x) == k and d(v, x) == k
        pi = Profile({u: k + 1, v: k + 1, x: 1})
        checks.append((f"cycle k={k} m={m} Med=={{u,v}}",
                       median_set(g, d, pi) == {u, v}))
    g = families.cycle_graph(7)
    d = all_pairs_distances(g)
    checks.append(("p(C_7)==3", lp.compute_p(g, d).p == 3))
    return checks


def _suite_fano() -> list[tuple[str, bool]]:
    g = families.projective_incidence_graph(2)
    d = all_pairs_distances(g)
    npts = 7
    u, v = 2 * npts, 2 * npts + 1
    pi = Profile(dict.fromkeys(range(g.n), 1))
    fu = median_value(g, d, pi, u)
    checks = [
        ("F(u)==24", fu == 24),
        ("F(v)==24", median_value(g, d, pi, v) == 24),
        ("F(z)==30 elsewhere",
         all(median_value(g, d, pi, z) == 30
             for z in range(g.n) if z not in (u, v))),
        ("Med=={u,v}", median_set(g, d, pi) == {u, v}),
        ("d(u,v)==3", d(u, v) == 3),
        ("p(G_2)>=3", not lp.has_Gp_connected_medians(g, d, 2)),
    ]
    return checks


def _suite_classes() -> list[tuple[str, bool]]:
    checks = []
    beta = families.beta_configuration()
    d = all_pairs_distances(beta)
    checks.append(("beta-config chordal", recognizers.is_chordal(beta).verdict))
    checks.append(("chordal => p<=2", lp.compute_p(beta, d).p <= 2))
    c5 = families.cycle_graph(5)
    d5 = all_pairs_distances(c5)
    checks.append(("C_5 is CB", recognizers.has_convex_balls(c5, d5).verdict))
    checks.append(("C_5 not weakly modular",
                   not recognizers.is_weakly_modular(c5, d5).verdict))
    for g in (c5, families.wheel(5), families.propeller()):
        dg = all_pairs_distances(g)
        cb = recognizers.has_convex_balls(g, dg).verdict
        inc_tpc = (recognizers.satisfies_INC(g, dg).verdict
                   and recognizers.satisfies_TPC(g, dg).verdict)
        checks.append((f"CB<->INC&TPC on {g.name}", cb == inc_tpc))
        if cb:
            checks.append((f"CB => p<=2 on {g.name}",
                           lp.compute_p(g, dg).p <= 2))
    j52, _ = families.johnson(5, 2)
    dj = all_pairs_distances(j52)
    checks.append(("J(5,2) meshed", recognizers.is_meshed(j52, dj).verdict))
    checks.append(("J(5,2) p==1", lp.compute_p(j52, dj).p == 1))
    return checks


def _suite_benzenoids() -> list[tuple[str, bool]]:
    from .metric import is_gated_set
    checks = []
    systems = {
        "hexagon": [(0, 0)],
        "naphthalene": [(0, 0), (1, 0)],
    }
    for name, cells in systems.items():
        bg = bz.benzenoid(bz.BenzenoidSpec(frozenset(cells)))
        d = all_pairs_distances(bg.graph)
        checks.append((f"{name} embedding isometric",
                       bz.verify_isometric_embedding(bg)))
        gated = all(is_gated_set(bg.graph, d, set(h))[0]
                    for h in bg.hexagons + tuple(bz.incomplete_hexagons(bg)))
        checks.append((f"{name} hexagons gated", gated))
        checks.append((f"{name} p<=2", lp.compute_p(bg.graph, d).p <= 2))
    return checks


_SUITES = {
    "cycles": _suite_cycles,
    "fano": _suite_fano,
    "classes": _suite_classes,
    "benzenoids": _suite_benzenoids,
}


def cmd_verify_paper(args) -> int:
    start = time.monotonic()
    if args.suite == "all":
        names = list(_SUITES)
    elif args.suite in _SUITES:
        names = [args.suite]
    else:
        raise UnknownSuite(f"unknown suite {args.suite!r}")
    results = []
    ok = True
    for name in names:
        for label, passed in _SUITES[name]():
            results.append({"suite": name, "check": label, "passed": passed})
            ok = ok and passed
    _report("verify-paper", {"suite": args.suite},
            {"passed": ok, "checks": results}, start)
    return 0 if ok else 1


# ------------------------------------------------------------------- parser

def make_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="medgraph",
        description="median sets in graphs, step-p connectivity, and exact "
                    "LP recognition")
    sub = parser.add_subparsers(dest="verb", required=True)

    p_gen = sub.add_parser("gen", help="generate a graph family instance")
    p_gen.add_argument("family")
    p_gen.add_argument("params", nargs="*", metavar="key=value")
    p_gen.add_argument("-o", "--output", required=True)
    p_gen.add_argument("--labels")
    p_gen.add_argument("--benzenoid-spec")
    p_gen.set_defaults(fn=cmd_gen)

    p_med = sub.add_parser("median", help="median and local median sets")
    p_med.add_argument("graph")
    p_med.add_argument("profile")
    p_med.add_argument("-p", type=int, default=1)
    p_med.set_defaults(fn=cmd_median)

    p_pv = sub.add_parser("pvalue", help="compute p(G)")
    p_pv.add_argument("graph")
    p_pv.add_argument("--restrict-j", action="store_true")
    p_pv.add_argument("--oracle", type=int, default=0, metavar="MAXWEIGHT")
    p_pv.add_argument("--jobs", type=int,
                      default=int(os.environ.get("MEDGRAPH_JOBS", "1")))
    p_pv.set_defaults(fn=cmd_pvalue)

    p_chk = sub.add_parser("check", help="class membership tests")
    p_chk.add_argument("cls", metavar="class")
    p_chk.add_argument("graph")
    p_chk.add_argument("--embedding")
    p_chk.add_argument("-k", type=int, help="Johnson label size")
    p_chk.set_defaults(fn=cmd_check)

    p_vp = sub.add_parser("verify-paper", help="run an acceptance bundle")
    p_vp.add_argument("suite")
    p_vp.set_defaults(fn=cmd_verify_paper)
    return parser


def main(argv=None) -> int:
    args = make_parser().parse_args(argv)
    try:
        return args.fn(args)
    except (ParseError, UnknownClass, UnknownSuite, FileNotFoundError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except MedgraphError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
