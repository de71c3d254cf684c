"""Command-line surface.

Subcommands map one-to-one onto library operations; no verification
logic lives here.  Exit codes: 0 check passed / task done, 1 check
failed, 2 usage error, 3 parse error, 4 timeout.
"""

from __future__ import annotations

import argparse
import itertools
import json
import sys
from fractions import Fraction

from . import euclid, io, l1, metric, search, separation
from .errors import ParseError, SepsysError
from .hamming import (
    hahn_banach_witness,
    hull_p3,
    segment,
)

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_USAGE = 2
EXIT_PARSE = 3
EXIT_TIMEOUT = 4

MEMBER_PRINT_LIMIT = 64


def _rational(token: str) -> Fraction:
    try:
        return io.parse_rational(token)
    except ParseError as e:
        raise argparse.ArgumentTypeError(str(e)) from e


def _emit(args, payload: dict, text_lines: list[str]) -> None:
    if args.json:
        print(json.dumps(payload, indent=2, sort_keys=True))
    else:
        for line in text_lines:
            print(line)


def _coord_sets(h) -> list[list[int]]:
    return [sorted(a) for a in h.sets]


def cmd_hull(args) -> int:
    code = io.load_code(args.file, q=args.q)
    h = hull_p3(code.space, code.words)
    sets = _coord_sets(h)
    lines = [f"projection hull over q={code.space.q}, n={code.space.n}"]
    for i, a in enumerate(sets, start=1):
        lines.append(f"  coordinate {i}: {{{', '.join(map(str, a))}}}")
    lines.append(f"cardinality: {h.cardinality}")
    _emit(args, {"q": code.space.q, "n": code.space.n, "sets": sets,
                 "cardinality": h.cardinality}, lines)
    return EXIT_OK


def cmd_segment(args) -> int:
    x = io.parse_word(args.x)
    y = io.parse_word(args.y)
    inferred = max(max(x), max(y)) + 1
    q = args.q if args.q else max(inferred, 2)
    from .hamming import HammingSpace

    space = HammingSpace(q, len(x))
    h = segment(space, x, y)
    sets = _coord_sets(h)
    lines = [f"segment [{args.x}, {args.y}] in q={q}, n={space.n}"]
    for i, a in enumerate(sets, start=1):
        lines.append(f"  coordinate {i}: {{{', '.join(map(str, a))}}}")
    lines.append(f"cardinality: {h.cardinality}")
    members = None
    if h.cardinality <= MEMBER_PRINT_LIMIT:
        members = sorted(io.word_to_str(w) for w in h.members())
        lines.append("members: " + " ".join(members))
    _emit(args, {"q": q, "n": space.n, "sets": sets,
                 "cardinality": h.cardinality, "members": members}, lines)
    return EXIT_OK


def _report_lines(report: separation.SeparationReport) -> list[str]:
    lines = [
        f"(s,t) = ({report.s},{report.t})  epsilon = {report.epsilon}  n = {report.n}",
        f"min separating coordinates: {report.min_lambda}"
        f" (need > {report.epsilon * report.n})",
        f"verdict: {'separating' if report.separating else 'NOT separating'}",
    ]
    if report.violation is not None:
        s_words = " ".join(io.word_to_str(w) for w in report.violation[0])
        t_words = " ".join(io.word_to_str(w) for w in report.violation[1])
        lines.append(f"violation: S = {{{s_words}}}  T = {{{t_words}}}")
    return lines


def cmd_check(args) -> int:
    code = io.load_code(args.file, q=args.q)
    if (args.s, args.t) == (2, 1) and code.space.q == 2:
        report = separation.check_21_fast(code, args.epsilon)
    else:
        report = separation.min_separating_count(code, args.s, args.t, args.epsilon)
    _emit(args, report.to_json(), _report_lines(report))
    return EXIT_OK if report.separating else EXIT_FAILED


def cmd_check_acute(args) -> int:
    points = io.load_points(args.file)
    report = euclid.is_eps_21_separating(points, args.epsilon)
    lines = [f"epsilon = {report.epsilon}: angles must stay below "
             f"{(1 - report.epsilon)} * pi"]
    if report.worst is not None:
        x, y, z = report.worst
        lines.append(
            f"worst angle {euclid.angle_at(x, y, z):.6f} rad at apex "
            f"({', '.join(map(str, z))})"
        )
    lines.append(f"verdict: {'separating' if report.separating else 'NOT separating'}")
    _emit(args, report.to_json(), lines)
    return EXIT_OK if report.separating else EXIT_FAILED


def cmd_check_l1(args) -> int:
    points = io.load_points(args.file)
    report = l1.l1_check_21(points)
    lines = []
    if report.separating:
        lines.append("verdict: separating (no point inside the box of two others)")
    else:
        x, y, z = report.violation
        lines.append(
            f"verdict: NOT separating; ({', '.join(map(str, z))}) lies in the box of "
            f"({', '.join(map(str, x))}) and ({', '.join(map(str, y))})"
        )
    _emit(args, report.to_json(), lines)
    return EXIT_OK if report.separating else EXIT_FAILED


def cmd_bridge(args) -> int:
    code = io.load_code(args.file, q=args.q)
    if code.space.q != 2:
        raise SepsysError("bridge audit requires a binary code")
    triples = 0
    mismatches = 0
    for x, y in itertools.combinations(code.words, 2):
        for z in code.words:
            if z in (x, y):
                continue
            dot, count, equal = euclid.bridge_check(x, y, z)
            triples += 1
            if not equal:
                mismatches += 1
    acute = euclid.is_eps_21_separating(euclid.embed_cube(code.words))
    hamm = separation.check_21_fast(code)
    agree = acute.separating == hamm.separating
    ok = mismatches == 0 and agree
    lines = [
        f"triples audited: {triples}, dot/count mismatches: {mismatches}",
        f"cube acute verdict: {acute.separating}; "
        f"Hamming (2,1) verdict: {hamm.separating}",
        f"verdict: {'consistent' if ok else 'INCONSISTENT'}",
    ]
    _emit(args, {"triples": triples, "mismatches": mismatches,
                 "acute": acute.separating, "hamming": hamm.separating,
                 "consistent": ok}, lines)
    return EXIT_OK if ok else EXIT_FAILED


def cmd_set_system(args) -> int:
    family = io.load_set_system(args.file)
    ok, triple = separation.set_system_check(family, strict=args.strict)
    lines = []
    if ok:
        lines.append("verdict: separating (no sandwiched triple)")
        payload_triple = None
    else:
        a, b, c = triple
        fmt = lambda s: "{" + ", ".join(sorted(map(str, s))) + "}"
        lines.append(
            f"verdict: NOT separating; {fmt(a)} & {fmt(b)} <= {fmt(c)} <= "
            f"{fmt(a)} | {fmt(b)}"
        )
        payload_triple = [sorted(map(str, s)) for s in triple]
    _emit(args, {"separating": ok, "violation": payload_triple}, lines)
    return EXIT_OK if ok else EXIT_FAILED


def cmd_construct(args) -> int:
    if args.method == "greedy":
        code = search.greedy_construct(
            args.n, order=args.order, seed=args.seed, restarts=args.restarts
        )
    else:
        m = args.m if args.m is not None else 2 * max(search.eq1_lower_bound(args.n), 2)
        code = search.random_repair_construct(args.n, m, seed=args.seed)
    verified = separation.check_21_fast(code).separating
    words = [io.word_to_str(w) for w in code.words]
    lines = [
        f"method = {args.method}, n = {args.n}, seed = {args.seed}",
        f"code size: {len(code)} (verified (2,1)-separating: {verified})",
    ]
    lines += [f"  {w}" for w in words]
    _emit(args, {"method": args.method, "n": args.n, "seed": args.seed,
                 "size": len(code), "verified": verified, "words": words}, lines)
    return EXIT_OK


def cmd_search(args) -> int:
    results = search.kappa_table(
        args.n_max, time_limit=args.time_limit, workers=args.parallel
    )
    lines = [f"exact kappa(n) search up to n = {args.n_max}"]
    for r in results:
        witness = " ".join(io.word_to_str(w) for w in r.witness)
        lines.append(
            f"n = {r.n}: kappa = {r.kappa} [{r.status}], nodes = {r.nodes}, "
            f"witness = {witness}"
        )
    if args.b_file:
        with open(args.b_file, "w") as fh:
            fh.write(search.b_file(results))
        lines.append(f"b-file written to {args.b_file}")
    if args.plot:
        from .plotting import plot_search

        plot_search(results, args.plot)
        lines.append(f"figure written to {args.plot}")
    _emit(args, {"results": [r.to_json() for r in results]}, lines)
    if any(r.status == "timeout" for r in results):
        return EXIT_TIMEOUT
    return EXIT_OK


def cmd_bounds(args) -> int:
    table = search.eval_bounds(args.n_max)
    lines = [
        f"r_prob = {table.r_prob:.9f} (probabilistic rate)",
        f"r_alg  = {table.r_alg:.9f} (algebraic rate)",
        f"{'n':>3} {'probabilistic':>14} {'bevan':>8} {'11^(3n/50)':>14}",
    ]
    for n, eq1, bevan, ref in table.rows:
        lines.append(f"{n:>3} {eq1:>14} {bevan:>8} {ref:>14.4f}")
    if args.plot:
        from .plotting import plot_bounds

        plot_bounds(table, args.plot)
        lines.append(f"figure written to {args.plot}")
    _emit(args, table.to_json(), lines)
    return EXIT_OK


def cmd_graph_hull(args) -> int:
    space = io.load_graph(args.file)
    seg = metric.segment_generic(space, args.src, args.dst)
    hull, depth = metric.hull_fixpoint(space, {args.src, args.dst})
    strict = seg < hull
    lines = [
        f"segment [{args.src}, {args.dst}]: size {len(seg)} "
        f"{{{', '.join(sorted(map(str, seg)))}}}",
        f"hull: size {len(hull)} {{{', '.join(sorted(map(str, hull)))}}} "
        f"(saturation depth {depth})",
        f"strict inclusion segment < hull: {strict}",
    ]
    _emit(args, {
        "segment": sorted(map(str, seg)),
        "hull": sorted(map(str, hull)),
        "depth": depth,
        "strict_inclusion": strict,
    }, lines)
    return EXIT_OK


def cmd_witness(args) -> int:
    code = io.load_code(args.file, q=args.q)
    h = hull_p3(code.space, code.words)
    w = io.parse_word(args.word)
    coord = hahn_banach_witness(h, w)
    if coord is None:
        lines = [f"{args.word} lies inside the hull"]
        payload = {"inside": True, "coordinate": None}
    else:
        lines = [f"{args.word} is separated from the hull at coordinate {coord}"]
        payload = {"inside": False, "coordinate": coord}
    _emit(args, payload, lines)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="sepsys",
        description="Separating systems and metric convexity toolkit",
    )
    parser.add_argument("--json", action="store_true", help="emit JSON instead of text")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("hull", help="projection hull of a word file")
    p.add_argument("file")
    p.add_argument("--q", type=int, default=None, help="alphabet size override")
    p.set_defaults(func=cmd_hull)

    p = sub.add_parser("segment", help="Hamming segment of two words")
    p.add_argument("x")
    p.add_argument("y")
    p.add_argument("--q", type=int, default=None)
    p.set_defaults(func=cmd_segment)

    p = sub.add_parser("check", help="Hamming epsilon-(s,t) separation check")
    p.add_argument("file")
    p.add_argument("--s", type=int, default=2)
    p.add_argument("--t", type=int, default=1)
    p.add_argument("--epsilon", type=_rational, default=Fraction(0))
    p.add_argument("--q", type=int, default=None)
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("check-acute", help="Euclidean epsilon-(2,1) angle check")
    p.add_argument("file")
    p.add_argument("--epsilon", type=_rational, default=Fraction(1, 2))
    p.set_defaults(func=cmd_check_acute)

    p = sub.add_parser("check-l1", help="L1 (2,1) box check")
    p.add_argument("file")
    p.set_defaults(func=cmd_check_l1)

    p = sub.add_parser("bridge", help="cube-lemma audit of a binary code")
    p.add_argument("file")
    p.add_argument("--q", type=int, default=None)
    p.set_defaults(func=cmd_bridge)

    p = sub.add_parser("set-system", help="sandwiched-triple check of a set family")
    p.add_argument("file")
    p.add_argument("--strict", action="store_true",
                   help="read the inclusions as proper")
    p.set_defaults(func=cmd_set_system)

    p = sub.add_parser("construct", help="build a (2,1)-separating binary code")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--method", choices=["greedy", "repair"], default="greedy")
    p.add_argument("--order", choices=["lex", "gray", "random"], default="lex")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--restarts", type=int, default=1)
    p.add_argument("--m", type=int, default=None,
                   help="sample size for the repair method")
    p.set_defaults(func=cmd_construct)

    p = sub.add_parser("search", help="exact kappa(n) by backtracking")
    p.add_argument("--n-max", type=int, required=True)
    p.add_argument("--time-limit", type=float, default=None,
                   help="per-n limit in seconds")
    p.add_argument("--parallel", type=int, default=1)
    p.add_argument("--b-file", default=None, help="write an OEIS-style b-file")
    p.add_argument("--plot", default=None, help="write a figure (png/pdf/svg)")
    p.set_defaults(func=cmd_search)

    p = sub.add_parser("bounds", help="closed-form lower-bound table")
    p.add_argument("--n-max", type=int, required=True)
    p.add_argument("--plot", default=None, help="write a figure (png/pdf/svg)")
    p.set_defaults(func=cmd_bounds)

    p = sub.add_parser("graph-hull", help="segment vs hull in a graph metric")
    p.add_argument("file")
    p.add_argument("--from", dest="src", required=True)
    p.add_argument("--to", dest="dst", required=True)
    p.set_defaults(func=cmd_graph_hull)

    p = sub.add_parser("witness", help="separating coordinate of a word vs a hull")
    p.add_argument("file")
    p.add_argument("word")
    p.add_argument("--q", type=int, default=None)
    p.set_defaults(func=cmd_witness)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except ParseError as e:
        print(f"parse error: {e}", file=sys.stderr)
        return EXIT_PARSE
    except SepsysError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
