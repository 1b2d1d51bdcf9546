"""Command-line interface.

JSON reports go to stdout (deterministic: sorted keys, sorted sets); short
human-readable summaries go to stderr.  Exit codes: 0 success, 1 usage,
2 parse error, 3 capability limit, 4 verification failure.

Subcommands: count, classify, tg, equiv, spectrum, verify, construct, table.
Graphs are given as graph6 strings or as "n; u-v, u-v, ..." edge lists.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import __version__
from .constructors import (
    Thm2Params,
    clique_plus_matching,
    complete_bipartite,
    counterexample_pair,
    extremal_for_edges,
    matching,
    star,
    thm2_family,
)
from .frustration import (
    f_degree_formula,
    f_pair_formula,
    f_scan,
    parity_of_f,
)
from .graphs import (
    CapabilityError,
    Graph6Error,
    graph6_encode,
    parse_graph,
    structure_profile,
)
from .spectrum import (
    default_threads,
    enumerate_full,
    spectrum_by_recursion,
    verify_structure,
    verify_thm1_structure,
    verify_thm2_family,
    verify_thm3,
)
from .switching import switching_equivalent, t_exact
from .theory import bipartite_distance, classify_f, interval_table

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_PARSE = 2
EXIT_CAPABILITY = 3
EXIT_VERIFY = 4


class UsageError(Exception):
    pass


class VerificationFailure(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):  # raise instead of sys.exit(2)
        raise UsageError(message)


def _emit(command: str, inputs: dict, results: dict, failures: list) -> None:
    report = {
        "command": command,
        "inputs": inputs,
        "results": results,
        "failures": failures,
        "version": __version__,
    }
    sys.stdout.write(json.dumps(report, sort_keys=True, separators=(",", ":")) + "\n")


def _say(text: str) -> None:
    sys.stderr.write(text + "\n")


def _parity_name(p: int) -> str:
    return "even" if p == 0 else "odd"


def _cmd_count(args) -> int:
    g = parse_graph(args.graph)
    prof = structure_profile(g)
    fs, fd, fp = f_scan(g), f_degree_formula(g), f_pair_formula(g)
    agree = fs == fd == fp
    expected = parity_of_f(g.n, prof.e)
    results = {
        "n": g.n,
        "e": prof.e,
        "p": prof.p,
        "q": prof.q,
        "f": fs,
        "f_scan": fs,
        "f_degree_formula": fd,
        "f_pair_formula": fp,
        "methods_agree": agree,
        "parity_expected": _parity_name(expected),
        "parity_ok": fs % 2 == expected,
    }
    failures = [] if agree else ["f implementations disagree"]
    _emit("count", {"graph": args.graph}, results, failures)
    _say(f"f = {fs} (n={g.n}, e={prof.e}, p={prof.p}, q={prof.q})")
    if not agree:
        raise VerificationFailure("f implementations disagree")
    return EXIT_OK


def _cmd_classify(args) -> int:
    c = classify_f(args.n, args.f)
    results = {
        "n": c.n,
        "f": c.f,
        "classification": {"kind": c.primary.kind, "t": c.primary.t, "label": c.primary.label()},
        "complement_f": c.complement_f,
        "complement": {
            "kind": c.complement.kind,
            "t": c.complement.t,
            "label": c.complement.label(),
        },
    }
    _emit("classify", {"n": args.n, "f": args.f}, results, [])
    _say(f"f={c.f}: {c.primary.label()}; C(n,3)-f={c.complement_f}: {c.complement.label()}")
    return EXIT_OK


def _cmd_tg(args) -> int:
    g = parse_graph(args.graph)
    t, part = t_exact(g)
    results = {"n": g.n, "t_G": t, "bipartition": list(part.members)}
    _emit("tg", {"graph": args.graph}, results, [])
    _say(f"t_G = {t}, X = {list(part.members)}")
    return EXIT_OK


def _cmd_equiv(args) -> int:
    g = parse_graph(args.graph_a)
    h = parse_graph(args.graph_b)
    if g.n != h.n:
        results = {"equivalent": False, "reason": "vertex counts differ"}
        _emit("equiv", {"graph_a": args.graph_a, "graph_b": args.graph_b}, results, [])
        _say(f"not equivalent: vertex counts differ ({g.n} vs {h.n})")
        return EXIT_OK
    w = switching_equivalent(g, h)
    if w is None:
        results = {"equivalent": False, "reason": "no subset/relabeling found"}
        _say("not equivalent")
    else:
        if not w.verify(g, h):
            raise VerificationFailure("witness failed re-verification")
        results = {
            "equivalent": True,
            "subset": list(w.subset),
            "sigma": list(w.sigma),
        }
        _say(f"equivalent: flip X={list(w.subset)}, relabel {list(w.sigma)}")
    _emit("equiv", {"graph_a": args.graph_a, "graph_b": args.graph_b}, results, [])
    return EXIT_OK


def _cmd_spectrum(args) -> int:
    if args.method == "brute":
        res = enumerate_full(args.n, threads=args.threads, allow_large=args.allow_large)
        payload = res.to_json_dict()
    else:
        prev = enumerate_full(args.n - 1, threads=args.threads, allow_large=args.allow_large)
        values = sorted(spectrum_by_recursion(args.n, prev.pairs))
        payload = {"n": args.n, "method": "recursion", "F": values}
    if args.csv and args.method == "brute":
        sys.stdout.write(res.to_csv())
        return EXIT_OK
    _emit("spectrum", {"n": args.n, "method": args.method}, payload, [])
    _say(f"|F_{args.n}| = {len(payload['F'])}")
    return EXIT_OK


def _cmd_verify(args) -> int:
    if args.check in ("gaps", "parity", "symmetry"):
        report = verify_structure(args.n, threads=args.threads, allow_large=args.allow_large)
        payload = report.to_json_dict()
        if args.check == "gaps":
            relevant = all(gc["empty"] for gc in report.gaps_checked) and all(
                pr["ok"] for pr in report.progression
            )
        elif args.check == "parity":
            relevant = report.parity
        else:
            relevant = report.symmetry
        failures = payload["failures"] if not relevant else []
        ok = relevant
    elif args.check == "thm1":
        report = verify_thm1_structure(args.n, threads=args.threads)
        payload = report.to_json_dict()
        failures = payload["failures"]
        ok = report.passed
    elif args.check == "thm3":
        report = verify_thm3(args.n, threads=args.threads)
        payload = report.to_json_dict()
        failures = payload["failures"]
        ok = report.passed
    else:  # thm2
        report = verify_thm2_family(args.n)
        payload = report.to_json_dict()
        failures = payload["failures"]
        ok = report.passed
    _emit("verify", {"check": args.check, "n": args.n}, payload, failures)
    _say(f"verify {args.check} n={args.n}: {'PASS' if ok else 'FAIL'}")
    if not ok:
        raise VerificationFailure(f"check {args.check} failed for n={args.n}")
    return EXIT_OK


def _cmd_construct(args) -> int:
    kind = args.kind
    graphs: list
    if kind == "star":
        graphs = [star(args.n, args.t)]
    elif kind == "matching":
        graphs = [matching(args.n, args.t)]
    elif kind == "kbip":
        graphs = [complete_bipartite(args.n, args.x)]
    elif kind == "clique-matching":
        graphs = [clique_plus_matching(args.n, args.r, args.m)]
    elif kind == "extremal":
        graphs = extremal_for_edges(args.n, args.e)
    elif kind == "thm2":
        params = Thm2Params.for_n(args.n, i=args.i, j=args.j, k=args.k, l=args.l)
        graphs = [thm2_family(params)]
    else:  # counterexample
        graphs = list(counterexample_pair())
    encoded = [graph6_encode(g) for g in graphs]
    results = {"graph6": encoded, "f": [f_scan(g) for g in graphs], "e": [g.e for g in graphs]}
    _emit("construct", {"kind": kind}, results, [])
    for s in encoded:
        _say(s)
    return EXIT_OK


def _cmd_table(args) -> int:
    table = interval_table(args.n)
    bd = bipartite_distance(args.n)
    if args.csv:
        sys.stdout.write(table.to_csv())
        sys.stdout.write("\n")
        sys.stdout.write(bd.to_csv())
        return EXIT_OK
    results = {"intervals": table.to_json_dict(), "bipartite_distance": bd.to_json_dict()}
    _emit("table", {"n": args.n}, results, [])
    _say(f"t_max = {table.t_max}, threshold = {table.threshold}")
    return EXIT_OK


def build_parser() -> _Parser:
    parser = _Parser(prog="frustra", description=__doc__)
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("count", help="count frustrated triangles three ways")
    p.add_argument("graph")
    p.set_defaults(func=_cmd_count)

    p = sub.add_parser("classify", help="place an f value in the interval/gap structure")
    p.add_argument("-n", type=int, required=True)
    p.add_argument("-f", type=int, required=True)
    p.set_defaults(func=_cmd_classify)

    p = sub.add_parser("tg", help="exact flip distance to the complete bipartite family")
    p.add_argument("graph")
    p.set_defaults(func=_cmd_tg)

    p = sub.add_parser("equiv", help="decide switching equivalence with a witness")
    p.add_argument("graph_a")
    p.add_argument("graph_b")
    p.set_defaults(func=_cmd_equiv)

    p = sub.add_parser("spectrum", help="exact attainable f values for small n")
    p.add_argument("-n", type=int, required=True)
    p.add_argument("--method", choices=("brute", "recursion"), default="brute")
    p.add_argument("--allow-large", action="store_true")
    p.add_argument("--threads", type=int, default=None)
    p.add_argument("--csv", action="store_true")
    p.set_defaults(func=_cmd_spectrum)

    p = sub.add_parser("verify", help="run one verification harness")
    p.add_argument(
        "--check",
        required=True,
        choices=("gaps", "thm1", "thm3", "thm2", "parity", "symmetry"),
    )
    p.add_argument("-n", type=int, required=True)
    p.add_argument("--allow-large", action="store_true")
    p.add_argument("--threads", type=int, default=None)
    p.set_defaults(func=_cmd_verify)

    p = sub.add_parser("construct", help="build a named family member, print graph6")
    p.add_argument(
        "--kind",
        required=True,
        choices=(
            "star",
            "matching",
            "kbip",
            "clique-matching",
            "extremal",
            "thm2",
            "counterexample",
        ),
    )
    p.add_argument("-n", type=int, default=6)
    p.add_argument("-t", type=int, default=1)
    p.add_argument("-x", type=int, default=1)
    p.add_argument("-r", type=int, default=0)
    p.add_argument("-m", type=int, default=0)
    p.add_argument("-e", type=int, default=0)
    p.add_argument("--i", type=int, default=0)
    p.add_argument("--j", type=int, default=1)
    p.add_argument("--k", type=int, default=1)
    p.add_argument("--l", type=int, default=1)
    p.set_defaults(func=_cmd_construct)

    p = sub.add_parser("table", help="interval and bipartite-distance tables")
    p.add_argument("-n", type=int, required=True)
    p.add_argument("--csv", action="store_true")
    p.set_defaults(func=_cmd_table)

    return parser


def run(argv: list[str]) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        if getattr(args, "threads", None) is None and hasattr(args, "threads"):
            args.threads = default_threads()
        return args.func(args)
    except UsageError as exc:
        _say(f"usage error: {exc}")
        return EXIT_USAGE
    except (Graph6Error,) as exc:
        _say(f"parse error: {exc}")
        return EXIT_PARSE
    except CapabilityError as exc:
        _say(f"capability error: {exc}")
        return EXIT_CAPABILITY
    except VerificationFailure as exc:
        _say(f"verification failure: {exc}")
        return EXIT_VERIFY
    except ValueError as exc:
        _say(f"parse error: {exc}")
        return EXIT_PARSE


def main() -> None:
    sys.exit(run(sys.argv[1:]))


if __name__ == "__main__":
    main()
