"""Command-line entry point: ``oddspan <subcommand> ...``.

All machine output is JSON (sorted keys, ``"schema": 1``) or graph6.
"""

from __future__ import annotations

import argparse
import json
import sys

from .constructions import ConstructionSpec
from .cycles import cycle_spectrum, shortest_odd_cycle
from .enumeration import EnumSpec, enumerate_graphs, worker_count
from .family import FamilyError, OddFamily, degree_threshold, family_profile
from .graph import GraphError, is_bipartite
from .graph6 import graph6_decode, graph6_encode
from .verify import DEFAULT_SAMPLERS, SAMPLERS, SCHEMA, random_counterexample_search, verify_theorem_exhaustive

_TYPES = {
    "turan": "turan",
    "kab": "complete-bipartite",
    "cycle": "cycle",
    "blowup": "cycle-blowup",
    "bc": "bc",
    "haggkvist": "haggkvist",
}


def _emit(obj) -> None:
    print(json.dumps(obj, sort_keys=True))


def _family(text: str) -> OddFamily:
    try:
        return OddFamily.parse(text)
    except FamilyError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def cmd_construct(args) -> int:
    params = {key: getattr(args, key) for key in ("n", "r", "a", "b", "m", "t", "ell") if getattr(args, key) is not None}
    g = ConstructionSpec(_TYPES[args.type], params).build()
    sys.stdout.write(graph6_encode(g).decode() + "\n")
    return 0


def cmd_analyze(args) -> int:
    for line in sys.stdin:
        line = line.strip()
        if not line:
            continue
        g = graph6_decode(line)
        odd = shortest_odd_cycle(g)
        cap = g.n if args.cap is None else min(args.cap, g.n)
        _emit({
            "schema": SCHEMA,
            "n": g.n,
            "minDegree": min(g.degrees()) if g.n else None,
            "oddGirth": None if odd is None else odd[0],
            "bipartite": is_bipartite(g) is not None,
            "spectrum": sorted(cycle_spectrum(g, cap).present),
            "cap": cap,
        })
    return 0


def cmd_profile(args) -> int:
    p = family_profile(args.family)
    thr = degree_threshold(p)
    out = {
        "schema": SCHEMA,
        "family": sorted(args.family.lengths),
        "ell": p.ell,
        "k": p.k,
        "regime": p.regime.value,
        "threshold": {"num": thr.numerator, "den": thr.denominator, "text": str(thr)},
    }
    if args.n is not None:
        bound = thr * args.n
        out["n"] = args.n
        out["bound"] = {"num": bound.numerator, "den": bound.denominator, "text": str(bound)}
    _emit(out)
    return 0


def cmd_verify(args) -> int:
    if not args.exhaustive:
        print("verify needs --exhaustive (use 'search' for random mode)", file=sys.stderr)
        return 2
    report = verify_theorem_exhaustive(args.family, args.n, worker_count())
    _emit(report.to_json())
    return 1 if report.suite_failure else 0


def cmd_search(args) -> int:
    samplers = tuple(args.samplers.split(","))
    report = random_counterexample_search(
        args.family, args.n, args.trials, args.seed, worker_count(), samplers=samplers
    )
    _emit(report.to_json())
    return 1 if report.suite_failure else 0


def cmd_enumerate(args) -> int:
    spec = EnumSpec(args.n, args.min_degree, args.free)
    count = 0
    with open(args.out, "wb") as fh:
        for g in enumerate_graphs(spec, worker_count()):
            fh.write(graph6_encode(g) + b"\n")
            count += 1
    _emit({"schema": SCHEMA, "n": args.n, "count": count, "out": args.out})
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="oddspan", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("construct", help="print a named graph as graph6")
    p.add_argument("--type", required=True, choices=sorted(_TYPES))
    for name in ("n", "r", "a", "b", "m", "t", "ell"):
        p.add_argument(f"--{name}", type=int)
    p.set_defaults(func=cmd_construct)

    p = sub.add_parser("analyze", help="graph6 lines on stdin to JSON lines")
    p.add_argument("--cap", type=int, help="longest cycle length to test (default n)")
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("profile", help="family parameters and degree threshold")
    p.add_argument("--family", required=True, type=_family)
    p.add_argument("--n", type=int)
    p.set_defaults(func=cmd_profile)

    p = sub.add_parser("verify", help="exhaustive check over canonical graphs")
    p.add_argument("--family", required=True, type=_family)
    p.add_argument("--n", required=True, type=int)
    p.add_argument("--exhaustive", action="store_true")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("search", help="seeded random counterexample search")
    p.add_argument("--family", required=True, type=_family)
    p.add_argument("--n", required=True, type=int)
    p.add_argument("--trials", required=True, type=int)
    p.add_argument("--seed", required=True, type=int)
    p.add_argument("--samplers", default=",".join(DEFAULT_SAMPLERS),
                   help=f"comma-separated subset of {','.join(SAMPLERS)}")
    p.set_defaults(func=cmd_search)

    p = sub.add_parser("enumerate", help="write canonical graphs as graph6 lines")
    p.add_argument("--n", required=True, type=int)
    p.add_argument("--min-degree", type=int)
    p.add_argument("--free", type=_family, help="forbidden cycle lengths, e.g. 3,5")
    p.add_argument("--out", required=True)
    p.set_defaults(func=cmd_enumerate)
    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (GraphError, ValueError) as exc:
        print(f"oddspan: error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
