"""Command-line interface.

Exit codes: 0 success / verdict holds; 1 failure or counterexample;
2 inconclusive (budget or guard), also used by argparse for usage errors.
"""

from __future__ import annotations

import argparse
import json
import sys
import time

from .circumference import Budget, circumference
from .enumeration import enumerate_connected
from .extremal import ExtremalParams, generate, verify_family
from .graphs import Graph, from_graph6, is_two_connected, to_graph6
from .harness import (
    SweepConfig,
    SweepError,
    analyze,
    certificate_to_dict,
    run_sweep,
    write_report,
)
from .ocycle import (
    CycleSeq,
    InvalidSequenceError,
    OCycleSeq,
    RealizationError,
    deficit,
    heavy_cycle_or_certificate,
    realize_info,
)
from .theorems import (
    verify_theorem1,
    verify_theorem2,
    verify_theorem3,
    verify_theorem4,
    verify_theorem5_necessity,
)


def _emit(obj) -> None:
    print(json.dumps(obj, sort_keys=True, indent=2))


def _family_params(args) -> ExtremalParams:
    if args.family in ("t1", "t2"):
        if args.n is None:
            raise SystemExit(f"family {args.family} needs --n")
        return ExtremalParams(args.family, n=args.n)
    if args.r is None or args.k is None:
        raise SystemExit(f"family {args.family} needs --r and --k")
    return ExtremalParams(args.family, r=args.r, k=args.k)


def _cmd_analyze(args) -> int:
    if args.graphs:
        recs = []
        for s in args.graphs:
            g = from_graph6(s)
            recs.append(analyze(g, Budget(args.budget_seconds, args.budget_nodes)))
        for r in recs:
            print(json.dumps(r, sort_keys=True))
        return 0
    cfg = SweepConfig(
        source=args.corpus or "enumerate",
        min_n=args.min_n,
        max_n=args.max_n,
        filters=tuple(args.filter or ()),
        task="analyze",
        budget_seconds=args.budget_seconds,
        budget_nodes=args.budget_nodes,
        output=args.output,
        output_format=args.format,
        jobs=args.jobs,
        on_malformed=args.on_malformed,
    )
    t0 = time.monotonic()
    result = run_sweep(cfg)
    write_report(result, cfg)
    print(
        f"analyzed {len(result.records)} graphs in {time.monotonic()-t0:.1f}s",
        file=sys.stderr,
    )
    return result.exit_code


def _cmd_realize(args) -> int:
    g = from_graph6(args.graph)
    seq = tuple(int(t) for t in args.sequence.split(","))
    try:
        oc = OCycleSeq(g, seq)
    except InvalidSequenceError as e:
        print(f"not an o-cycle: {e}", file=sys.stderr)
        return 1
    d0 = deficit(g, oc)
    try:
        cyc, iters = realize_info(g, oc)
    except RealizationError as e:
        print(f"realization failed: {e}", file=sys.stderr)
        return 1
    _emit(
        {
            "input": list(seq),
            "deficit": d0,
            "cycle": list(cyc.verts),
            "iterations": iters,
        }
    )
    return 0


def _cmd_heavycycle(args) -> int:
    g = from_graph6(args.graph)
    out = heavy_cycle_or_certificate(g)
    if isinstance(out, CycleSeq):
        _emit({"cycle": list(out.verts), "certificate": None})
    else:
        _emit({"cycle": None, "certificate": certificate_to_dict(out)})
    return 0


def _cmd_circumference(args) -> int:
    g = from_graph6(args.graph)
    res = circumference(g, Budget(args.budget_seconds, args.budget_nodes))
    _emit(
        {
            "length": res.length,
            "witness": list(res.witness.verts) if res.witness else None,
            "exhausted": res.exhausted,
            "upper_bound": res.upper_bound,
        }
    )
    return 0 if res.exhausted else 2


def _cmd_gen(args) -> int:
    g, roles = generate(_family_params(args))
    if args.roles:
        _emit({"graph6": to_graph6(g), "n": g.n, "roles": roles})
    else:
        print(to_graph6(g))
    return 0


def _cmd_verify_family(args) -> int:
    rep = verify_family(
        _family_params(args), Budget(args.budget_seconds, args.budget_nodes)
    )
    _emit(rep.to_dict())
    if not rep.passed:
        return 1
    return 0 if rep.exhausted else 2


def _corpus_graphs(args):
    if args.corpus:
        cfg = SweepConfig(source=args.corpus, on_malformed=args.on_malformed)
        from .harness import iter_corpus

        yield from iter_corpus(cfg)
    else:
        for n in range(args.min_n, args.max_n + 1):
            yield from enumerate_connected(n)


def _cmd_verify(args) -> int:
    budget = Budget(args.budget_seconds, args.budget_nodes)
    t0 = time.monotonic()
    if args.theorem == "5n":
        rep = verify_theorem5_necessity(budget)
    else:
        if args.jobs > 1 or args.corpus:
            cfg = SweepConfig(
                source=args.corpus or "enumerate",
                min_n=args.min_n,
                max_n=args.max_n,
                task=f"theorem:{args.theorem}",
                budget_seconds=args.budget_seconds,
                budget_nodes=args.budget_nodes,
                jobs=args.jobs,
                on_malformed=args.on_malformed,
            )
            result = run_sweep(cfg)
            doc = {
                "theorem": f"theorem{args.theorem}",
                "corpus": args.corpus or f"connected {args.min_n} <= n <= {args.max_n}",
                "summary": result.summary,
                "counterexamples": [
                    r for r in result.records if r["status"] == "fail"
                ],
                "inconclusive": [
                    r["graph6"] for r in result.records if r["status"] == "inconclusive"
                ],
                "verdict": {0: "holds", 1: "counterexample", 2: "inconclusive"}[
                    result.exit_code
                ],
            }
            _emit(doc)
            print(f"{time.monotonic()-t0:.1f}s", file=sys.stderr)
            return result.exit_code
        corpus_desc = args.corpus or f"connected {args.min_n} <= n <= {args.max_n}"
        fn = {
            "1": verify_theorem1,
            "2": verify_theorem2,
            "3": verify_theorem3,
            "4": verify_theorem4,
        }[args.theorem]
        if args.theorem == "4" and args.pattern:
            rep = fn(_corpus_graphs(args), corpus_desc, args.pattern)
        else:
            rep = fn(_corpus_graphs(args), corpus_desc)
    _emit(rep.to_dict())
    print(f"{rep.seconds:.1f}s", file=sys.stderr)
    return {"holds": 0, "counterexample": 1, "inconclusive": 2}[rep.verdict]


def _cmd_enumerate(args) -> int:
    gs = enumerate_connected(args.n)
    if args.two_connected:
        gs = [g for g in gs if is_two_connected(g)]
    for g in gs:
        print(to_graph6(g))
    print(f"{len(gs)} graphs", file=sys.stderr)
    return 0


def _cmd_obstruction(args) -> int:
    from .theorems import find_obstruction

    s = from_graph6(args.graph)
    try:
        ob = find_obstruction(s)
    except (ValueError, LookupError) as e:
        print(str(e), file=sys.stderr)
        return 1
    _emit(
        {
            "exceptional": ob.exceptional,
            "pattern": ob.pattern,
            "witness": list(ob.witness.mapping) if ob.witness else None,
        }
    )
    return 0


def _add_budget_args(p: argparse.ArgumentParser) -> None:
    p.add_argument("--budget-seconds", type=float, default=600.0)
    p.add_argument("--budget-nodes", type=int, default=100_000_000)


def _add_corpus_args(p: argparse.ArgumentParser) -> None:
    p.add_argument("--corpus", help="graph6 file, or - for stdin")
    p.add_argument("--min-n", type=int, default=1)
    p.add_argument("--max-n", type=int, default=8)
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument(
        "--on-malformed", choices=("abort", "skip"), default="abort",
        help="what to do with bad graph6 lines",
    )


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="heavycycle",
        description="heavy-cycle analysis: o-cycle realization, certificates, "
        "exact circumference, extremal families, exhaustive verification",
    )
    ap.add_argument("--config", help="JSON file of flag defaults")
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("analyze", help="per-graph record(s) for a corpus")
    p.add_argument("graphs", nargs="*", help="graph6 strings (else corpus/enumerate)")
    _add_corpus_args(p)
    p.add_argument("--filter", action="append", metavar="F",
                   help="connected | two-connected | pattern-free:<p> | pattern-heavy:<p>")
    p.add_argument("--output", help="write here instead of stdout")
    p.add_argument("--format", choices=("jsonl", "json", "g6"), default="jsonl")
    _add_budget_args(p)
    p.set_defaults(fn=_cmd_analyze)

    p = sub.add_parser("realize", help="turn an o-cycle into a real cycle")
    p.add_argument("graph", help="graph6")
    p.add_argument("sequence", help="comma-separated vertex sequence")
    p.set_defaults(fn=_cmd_realize)

    p = sub.add_parser("heavycycle", help="heavy cycle or no-heavy-cycle certificate")
    p.add_argument("graph", help="graph6")
    p.set_defaults(fn=_cmd_heavycycle)

    p = sub.add_parser("circumference", help="exact longest-cycle length")
    p.add_argument("graph", help="graph6")
    _add_budget_args(p)
    p.set_defaults(fn=_cmd_circumference)

    for name, helptext in (
        ("gen", "emit an extremal-family member"),
        ("verify-family", "check an extremal-family member's structure"),
    ):
        p = sub.add_parser(name, help=helptext)
        p.add_argument("family", choices=("t1", "t2", "g1", "g2", "g3"))
        p.add_argument("--n", type=int)
        p.add_argument("--r", type=int)
        p.add_argument("--k", type=int)
        if name == "gen":
            p.add_argument("--roles", action="store_true", help="include role map")
            p.set_defaults(fn=_cmd_gen)
        else:
            _add_budget_args(p)
            p.set_defaults(fn=_cmd_verify_family)

    p = sub.add_parser("verify", help="run a theorem verifier")
    p.add_argument("--theorem", choices=("1", "2", "3", "4", "5n"), required=True)
    p.add_argument("--pattern", help="heavy pattern for theorem 4 (default k1_4)")
    _add_corpus_args(p)
    _add_budget_args(p)
    p.set_defaults(fn=_cmd_verify)

    p = sub.add_parser("enumerate", help="connected graphs on n vertices, graph6")
    p.add_argument("n", type=int)
    p.add_argument("--two-connected", action="store_true")
    p.set_defaults(fn=_cmd_enumerate)

    p = sub.add_parser("obstruction", help="classify a candidate pattern graph")
    p.add_argument("graph", help="graph6")
    p.set_defaults(fn=_cmd_obstruction)

    return ap


def main(argv=None) -> int:
    argv = sys.argv[1:] if argv is None else list(argv)
    ap = build_parser()
    args = ap.parse_args(argv)
    if args.config:
        with open(args.config) as fh:
            overrides = json.load(fh)
        for key, value in overrides.items():
            flag = "--" + key.replace("_", "-")
            if hasattr(args, key) and flag not in argv:
                setattr(args, key, value)
    try:
        return args.fn(args)
    except SweepError as e:
        print(str(e), file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
