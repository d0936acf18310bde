"""Command-line front end: ``antiramsey <command> ...``.

Exit codes
    construct     0 ok, 3 bad parameters
    check         0 no rainbow, 1 rainbow found, 4 unreadable or not latin
    decide        0 arrows, 1 does not arrow, 2 budget exhausted
    arv / are     0 complete sweep, 2 sweep left hosts undecided
    verify-suite  0 all criteria pass, 1 otherwise
Usage errors exit 3 for every command.
"""

from __future__ import annotations

import argparse
import json
import logging
import os
import sys
from typing import Optional, Sequence

from . import serialize
from .acceptance import CRITERIA, SuiteContext, run_criterion
from .algebra import plane_from_difference_set, singer_difference_set
from .constructions import block_blocker, kron_blocker, singer_blocker
from .decide import DEFAULT_MAX_NODES, SearchConfig, decide_arrow
from .errors import AntiRamseyError, BudgetExhausted, LatinError, ParseError
from .latin import LatinRectangle, find_rainbow_shape
from .ramsey import ar_edge, ar_vertex

EXIT_USAGE = 3
EXIT_BAD_INPUT = 4


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _default_workers() -> int:
    raw = os.environ.get("RAINBOW_WORKERS", "")
    try:
        return max(1, int(raw))
    except ValueError:
        return 1


def _positive(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}") from None
    if value < 1:
        raise argparse.ArgumentTypeError(f"must be >= 1, got {value}")
    return value


def _read(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    with open(path, encoding="utf-8") as fh:
        return fh.read()


def _load(path: str) -> LatinRectangle:
    return serialize.load_rectangle(_read(path))


def _search_config(args) -> SearchConfig:
    return SearchConfig(max_nodes=args.max_nodes, workers=args.workers,
                        column_symmetry_pruning=not getattr(args, "no_symmetry", False))


def _emit(text: str) -> None:
    sys.stdout.write(text if text.endswith("\n") else text + "\n")


# --- commands ---------------------------------------------------------------

def cmd_construct(args) -> int:
    try:
        if args.kind == "singer":
            R = singer_blocker(args.a)
        elif args.kind == "block":
            R = block_blocker(args.a, args.b)
        elif args.kind == "kron":
            R = kron_blocker(_load(args.file_a), _load(args.file_b), args.t)
        else:  # plane
            D = singer_difference_set(args.q)
            P = plane_from_difference_set(D)
            if args.json:
                _emit(serialize.plane_to_json(P, D))
            else:
                _emit("\n".join(" ".join(map(str, ln)) for ln in P.lines))
            return 0
    except (AntiRamseyError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    _emit(serialize.to_json(R) if args.json else serialize.to_text(R))
    return 0


def cmd_check(args) -> int:
    try:
        R = _load(args.file)
    except (ParseError, LatinError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_BAD_INPUT
    shapes = [(args.a, args.b)]
    if args.either and args.a != args.b:
        shapes.append((args.b, args.a))
    witness = None
    for h, w in shapes:
        if h <= R.rows and w <= R.cols:
            witness = find_rainbow_shape(R, h, w)
            if witness is not None:
                break
    if args.json:
        out = {"rainbow": witness is not None,
               "witness": serialize.witness_dict(witness) if witness else None}
        if witness:
            out["symbols"] = witness.symbols(R)
        _emit(json.dumps(out))
    elif witness is None:
        _emit("blocker verified")
    else:
        _emit(f"rainbow rows={list(witness.rows)} cols={list(witness.cols)} symbols={witness.symbols(R)}")
    return 0 if witness is None else 1


def cmd_decide(args) -> int:
    try:
        config = _search_config(args)
        dec = decide_arrow(args.m, args.n, args.a, args.b, config)
    except BudgetExhausted as exc:
        if args.json:
            _emit(json.dumps({"arrows": None, "certificate": None, "nodes": exc.nodes, "ms": None,
                              "budget_exhausted": True}))
        else:
            _emit(f"unknown: {exc}")
        return 2
    except AntiRamseyError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    if args.json:
        _emit(serialize.decision_to_json(dec))
    else:
        rel = "->" if dec.arrows else "-/->"
        _emit(f"K_{{{dec.m},{dec.n}}} {rel} K_{{{dec.a},{dec.b}}}  nodes={dec.nodes_explored} ms={dec.ms:.1f}")
        if dec.certificate is not None:
            sys.stdout.write(serialize.to_text(dec.certificate))
    return 0 if dec.arrows else 1


def _sweep(args, fn) -> int:
    try:
        res = fn(args.a, args.b, _search_config(args))
    except AntiRamseyError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    if args.json:
        _emit(serialize.ar_result_to_json(res))
    else:
        label = "AR_V" if res.kind == "vertex" else "AR_E"
        _emit(f"{label}(K_{{{res.a},{res.b}}}) = {res.value}  witness={res.witness_host} "
              f"complete={res.complete} searches={res.searches} nodes={res.nodes}")
        for h in res.refuted_hosts:
            _emit(f"  K_{{{h.m},{h.n}}}  blocked ({h.reason})")
        for m, n in res.unknown_hosts:
            _emit(f"  K_{{{m},{n}}}  undecided")
    return 0 if res.complete else 2


def cmd_arv(args) -> int:
    return _sweep(args, ar_vertex)


def cmd_are(args) -> int:
    return _sweep(args, ar_edge)


def cmd_verify_suite(args) -> int:
    ctx = SuiteContext(config=_search_config(args), seed=args.seed,
                       parallel_workers=max(2, args.workers))
    wanted = args.only or [num for num, *_ in CRITERIA]
    results = []
    for num in wanted:
        res = run_criterion(num, ctx)
        results.append(res)
        if not args.json:
            _emit(res.line())
            sys.stdout.flush()
    ok = all(r.passed for r in results)
    if args.json:
        _emit(json.dumps({
            "passed": ok,
            "criteria": [
                {"number": r.number, "name": r.name, "passed": r.passed, "detail": r.detail,
                 "seconds": round(r.seconds, 3), "budget": r.budget}
                for r in results
            ],
        }))
    else:
        _emit(f"{sum(r.passed for r in results)}/{len(results)} criteria passed")
    return 0 if ok else 1


# --- parser -----------------------------------------------------------------

def _criteria_list(text: str) -> list[int]:
    known = {num for num, *_ in CRITERIA}
    try:
        nums = [int(tok) for tok in text.split(",") if tok.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated criterion numbers, got {text!r}") from None
    bad = [n for n in nums if n not in known]
    if bad:
        raise argparse.ArgumentTypeError(f"unknown criteria {bad}")
    return nums


def _search_flags(p: argparse.ArgumentParser) -> None:
    p.add_argument("--workers", type=_positive, default=_default_workers(),
                   help="worker processes (default: $RAINBOW_WORKERS or 1)")
    p.add_argument("--max-nodes", type=_positive, default=DEFAULT_MAX_NODES)
    p.add_argument("--no-symmetry", action="store_true", help="disable second-row symmetry pruning")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="antiramsey", description="Rainbow subrectangles and bipartite anti-Ramsey numbers.")
    parser.add_argument("-v", "--verbose", action="store_true")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("construct", help="build a blocker rectangle")
    kinds = p.add_subparsers(dest="kind", required=True, parser_class=_Parser)
    k = kinds.add_parser("singer", help="a x (a^2-a+1) rectangle with no rainbow a x 2")
    k.add_argument("a", type=int)
    k = kinds.add_parser("block", help="a x (a^2-a+1)(b-1) rectangle with no rainbow a x b")
    k.add_argument("a", type=int)
    k.add_argument("b", type=int)
    k = kinds.add_parser("kron", help="product of two blockers")
    k.add_argument("file_a")
    k.add_argument("file_b")
    k.add_argument("--t", type=int, default=None, help="symbol offset (default: max(A) + 1)")
    k = kinds.add_parser("plane", help="projective plane of order q from a Singer difference set")
    k.add_argument("q", type=int)
    for k in kinds.choices.values():
        k.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_construct)

    p = sub.add_parser("check", help="look for a rainbow a x b subrectangle in a grid file")
    p.add_argument("file", help="text grid or JSON rectangle ('-' for stdin)")
    p.add_argument("a", type=_positive, help="rows of the rainbow subrectangle")
    p.add_argument("b", type=_positive, help="columns of the rainbow subrectangle")
    p.add_argument("--either", action="store_true", help="also look for the b x a orientation")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("decide", help="decide K_{m,n} ->_R K_{a,b}")
    for name in ("m", "n", "a", "b"):
        p.add_argument(name, type=int)
    _search_flags(p)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_decide)

    for name, func, what in (("arv", cmd_arv, "vertex"), ("are", cmd_are, "edge")):
        p = sub.add_parser(name, help=f"{what} anti-Ramsey number of K_{{a,b}}")
        p.add_argument("a", type=int)
        p.add_argument("b", type=int)
        _search_flags(p)
        p.add_argument("--json", action="store_true")
        p.set_defaults(func=func)

    p = sub.add_parser("verify-suite", help="run the acceptance battery")
    _search_flags(p)
    p.add_argument("--seed", type=int, default=SuiteContext().seed)
    p.add_argument("--only", type=_criteria_list, default=None, help="comma-separated criterion numbers")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_verify_suite)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                        format="%(levelname)s %(name)s: %(message)s")
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
