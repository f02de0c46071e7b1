"""Command-line front end.

Every command prints one JSON report on stdout with the keys ``command``,
``instance``, ``property``, ``cases``, ``failures``, ``verdict`` and
``elapsed_ms`` in that order.  Diagnostics go to stderr.

Exit codes: 0 pass, 1 property failure, 2 usage or input error.
"""
from __future__ import annotations

import argparse
import json
import sys
import time
from fractions import Fraction

from .duality import FillsToDepth, GapReason, NotGap, fills_proper_gap, k_embedding, k_finite, x_embedding, x_finite
from .dsl import element_to_text, parse, parse_element, parse_ordinal, to_text
from .errors import InvalidOrdinal, OrderError, ParseError
from .kurepa import build_filtration_presentation, stab_from_table, sup_stable_stream
from .oracle import exhaustive_duality, exhaustive_lemma33
from .orders import FiniteOrder, Ordering, materialize
from .points import Vec, YPoint, format_point, lex_compare

__all__ = ["main", "REPORT_SCHEMA", "read_stream_file"]

EXIT_PASS, EXIT_FAIL, EXIT_ERROR = 0, 1, 2

REPORT_SCHEMA = {
    "$schema": "https://json-schema.org/draft/2020-12/schema",
    "title": "compact-lines report",
    "type": "object",
    "required": ["command", "instance", "property", "cases", "failures", "verdict", "elapsed_ms"],
    "additionalProperties": False,
    "properties": {
        "command": {"enum": ["parse", "dual", "oracle", "gap", "kurepa-cmp", "sup-stream"]},
        "instance": {"type": "object"},
        "property": {"type": "string"},
        "cases": {"type": "integer", "minimum": 0},
        "failures": {"type": "array", "items": {"type": "object"}},
        "verdict": {"enum": ["pass", "fail", "error"]},
        "elapsed_ms": {"type": "number", "minimum": 0},
    },
}


class _UsageError(Exception):
    pass


def _segment_text(segment) -> list[str]:
    return [element_to_text(x) if not isinstance(x, frozenset) else _set_text(x) for x in segment]


def _set_text(s: frozenset) -> str:
    return "{" + ", ".join(sorted(_segment_text(s))) + "}"


def _chain_text(chain: FiniteOrder) -> list[str]:
    return [_set_text(x) if isinstance(x, frozenset) else element_to_text(x) for x in chain]


# -- commands -------------------------------------------------------------------


def cmd_parse(args):
    e = parse(args.expr)
    printed = to_text(e)
    ok = parse(printed) == e
    failures = [] if ok else [{"check": "print/parse round trip", "printed": printed}]
    return {"input": args.expr, "expr": printed}, "roundtrip", 1, failures


def _is_iso(embedding) -> bool:
    return embedding.is_increasing() and len(set(embedding.table)) == len(embedding.codomain) == len(embedding.domain)


def cmd_dual(args):
    e = parse(args.expr)
    chain = materialize(e)
    if args.direction == "k":
        result = k_finite(chain)
        ok = _is_iso(x_embedding(chain))
        check = "X(K(X)) canonically isomorphic to X"
    else:
        result = x_finite(chain)
        ok = _is_iso(k_embedding(chain))
        check = "K(X(K)) canonically isomorphic to K"
    instance = {
        "expr": to_text(e),
        "direction": args.direction,
        "input_size": len(chain),
        "size": len(result),
        "result": _chain_text(result),
    }
    return instance, "canonical_isomorphism", 1, [] if ok else [{"check": check}]


def cmd_oracle(args):
    runner = {"duality": exhaustive_duality, "lemma33": exhaustive_lemma33}[args.suite]
    report = runner(args.n)
    return {"suite": args.suite, "n": args.n, "description": report.instance}, report.property, report.cases, report.failures


def _ord_arg(text: str):
    try:
        return parse_ordinal(text)
    except ParseError as exc:
        raise InvalidOrdinal(f"invalid ordinal {text!r}: {exc}") from None


def cmd_gap(args):
    kappa = _ord_arg(args.kappa)
    delta = _ord_arg(args.delta)
    S = frozenset(_ord_arg(t) for t in args.s.split(",") if t.strip()) if args.s else frozenset()
    if args.depth < 1:
        raise _UsageError("--depth must be >= 1")
    if not delta.is_limit:
        raise InvalidOrdinal(f"delta {delta} is not a limit")
    if delta > kappa:
        raise InvalidOrdinal(f"delta {delta} exceeds kappa {kappa}")
    for d in S:
        if not d.is_limit or d >= kappa:
            raise InvalidOrdinal(f"S member {d} must be a limit below kappa {kappa}")
    instance = {
        "kappa": str(kappa),
        "S": [str(d) for d in sorted(S)],
        "delta": str(delta),
        "depth": args.depth,
    }
    if delta not in S:
        instance["result"] = f"NotGap({GapReason.NO_FILLER.value})"
        return instance, "fills_proper_gap", 1, [{"check": "no filler y(delta) in the ambient order"}]
    Y = build_filtration_presentation(kappa, S, delta)
    verdict = fills_proper_gap(YPoint(delta), Y, args.depth)
    shown = args.show
    instance["left_chain"] = [format_point(p) for p in verdict.left_chain[:shown]]
    instance["right_chain"] = [format_point(p) for p in verdict.right_chain[:shown]]
    if isinstance(verdict, FillsToDepth):
        instance["result"] = f"FillsToDepth({verdict.depth})"
        return instance, "fills_proper_gap", 1, []
    instance["result"] = f"NotGap({verdict.reason.value})"
    return instance, "fills_proper_gap", 1, [{"check": instance["result"]}]


def _point_arg(text: str):
    p = parse_element(text)
    if not isinstance(p, (Vec, YPoint)):
        raise ParseError(f"expected a vector v[...] or y(ord), got {text!r}")
    return p


def cmd_kurepa_cmp(args):
    p, q = _point_arg(args.left), _point_arg(args.right)
    c = Ordering(lex_compare(p, q))
    return {"left": format_point(p), "right": format_point(q), "ordering": c.name}, "lex_compare", 1, []


def read_stream_file(text: str):
    """Parse a stream file: one point per line, then ``stab:`` and ``ord index`` lines.

    Blank lines and ``#`` comments are ignored.  Indices past the last listed
    point repeat the last point.
    """
    points, table = [], {}
    in_stab = False
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if line.lower().startswith("stab:"):
            in_stab = True
            line = line[5:].strip()
            if not line:
                continue
        try:
            if in_stab:
                key, _, idx = line.replace("->", " ").replace(":", " ").rpartition(" ")
                table[parse_ordinal(key.strip())] = int(idx)
            else:
                points.append(_point_arg(line))
        except (ParseError, ValueError) as exc:
            raise ParseError(f"stream file: {exc}", lineno, 1) from None
    if not points:
        raise ParseError("stream file lists no points", 1, 1)
    return points, table


def cmd_sup_stream(args):
    try:
        with open(args.file, encoding="utf-8") as fh:
            points, table = read_stream_file(fh.read())
    except OSError as exc:
        raise _UsageError(f"cannot read {args.file}: {exc}") from None
    probe = args.probe or len(points)

    def stream(i: int):
        return points[min(i, len(points) - 1)]

    g = sup_stable_stream(stream, stab_from_table(table), probe, support_bound=args.support_bound)
    instance = {
        "file": args.file,
        "terms": len(points),
        "probe": probe,
        "sup": format_point(g),
        "coordinates": [[str(k), str(Fraction(v))] for k, v in g.entries],
    }
    return instance, "stream_supremum", probe, []


# -- plumbing -----------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="compact-lines", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("parse", help="parse an order expression and echo its canonical form")
    p.add_argument("expr")
    p.set_defaults(run=cmd_parse)

    p = sub.add_parser("dual", help="dual compact line (k) or dual order (x) of a finite order")
    p.add_argument("direction", choices=["k", "x"])
    p.add_argument("expr")
    p.set_defaults(run=cmd_dual)

    p = sub.add_parser("oracle", help="run an exhaustive brute-force suite")
    p.add_argument("suite", choices=["duality", "lemma33"])
    p.add_argument("--n", type=int, default=5)
    p.set_defaults(run=cmd_oracle)

    p = sub.add_parser("gap", help="certify that y(delta) fills a proper gap of X_delta")
    p.add_argument("--kappa", default="w.10")
    p.add_argument("--s", default="", help="comma-separated limit codes")
    p.add_argument("--delta", required=True)
    p.add_argument("--depth", type=int, default=100)
    p.add_argument("--show", type=int, default=3, help="witness-chain elements to print per side")
    p.set_defaults(run=cmd_gap)

    p = sub.add_parser("kurepa-cmp", help="compare two serialised points lexicographically")
    p.add_argument("left")
    p.add_argument("right")
    p.set_defaults(run=cmd_kurepa_cmp)

    p = sub.add_parser("sup-stream", help="supremum of a scripted stabilising stream")
    p.add_argument("file")
    p.add_argument("--probe", type=int, default=0)
    p.add_argument("--support-bound", type=int, default=64)
    p.set_defaults(run=cmd_sup_stream)
    return parser


def _emit(command, instance, prop, cases, failures, verdict, started) -> str:
    report = {
        "command": command,
        "instance": instance,
        "property": prop,
        "cases": cases,
        "failures": failures,
        "verdict": verdict,
        "elapsed_ms": round((time.perf_counter() - started) * 1000, 3),
    }
    return json.dumps(report, indent=2)


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    started = time.perf_counter()
    try:
        instance, prop, cases, failures = args.run(args)
    except (OrderError, _UsageError) as exc:
        print(f"compact-lines {args.command}: {type(exc).__name__}: {exc}", file=sys.stderr)
        print(_emit(args.command, {"argv": list(argv if argv is not None else sys.argv[1:])},
                    "input", 0, [{"error": type(exc).__name__, "message": str(exc)}], "error", started))
        return EXIT_ERROR
    verdict = "fail" if failures else "pass"
    print(_emit(args.command, instance, prop, cases, failures, verdict, started))
    return EXIT_FAIL if failures else EXIT_PASS


if __name__ == "__main__":
    sys.exit(main())
