"""Command-line front end.

Subcommands: ``compute`` (chromatic data and r-values for one graph),
``transform`` (graph operators, emitting graph6 or DOT), ``audit`` (one
catalogued claim), ``table1`` (the named-graph table), and ``sweep``
(universally quantified claims over the small-graph enumeration).

Identical invocations produce byte-identical output; refuted audits are
data, not errors (exit 0). Exit codes: 2 usage problems, 3 oracle-cap
violations without --allow-large.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import audits, families
from .colouring import (
    CapExceededError,
    chromatic_index,
    chromatic_number,
)
from .graph import GraphError, parse_graph6, to_dot, write_graph6
from .rainbow import r_conv, r_max, r_min
from .transforms import (
    chithra,
    corona,
    disjoint_union,
    expanded_line_graph,
    expanded_to_dot,
    join,
    line_graph,
)

USAGE_ERROR = 2
CAP_ERROR = 3

_SOURCE_KINDS = ("named", "g6", "file")


def load_graph(source: str):
    """Parse a graph source: family:params, named:NAME, g6:STRING, file:PATH."""
    head, _, rest = source.partition(":")
    if head == "named":
        return families.named_graph(rest)
    if head == "g6":
        return parse_graph6(rest)
    if head == "file":
        try:
            with open(rest, encoding="ascii") as handle:
                lines = [line.strip() for line in handle if line.strip()]
        except OSError as err:
            raise GraphError(f"cannot read graph6 file {rest!r}: {err}") from None
        if len(lines) != 1:
            raise GraphError(f"graph6 file {rest!r} must contain exactly one graph")
        return parse_graph6(lines[0])
    return families.generate(families.parse_family(source))


def _emit_graph(g, fmt: str) -> str:
    if fmt == "graph6":
        return write_graph6(g) + "\n"
    return to_dot(g)


def _partition_lists(partition) -> list[list[int]]:
    return [sorted(c) for c in partition.classes]


def cmd_compute(args) -> int:
    if args.partition_cap is not None and args.partition_cap < 1:
        raise GraphError("oracle caps must be positive")
    g = load_graph(args.graph)
    chi = chromatic_number(g)
    try:
        chi_index = chromatic_index(g, allow_large=args.allow_large) if g.size else None
        chi_index_note = ""
    except CapExceededError as err:
        chi_index = None
        chi_index_note = str(err)
    mode = args.mode
    if mode == "conv":
        value = r_conv(g, cap=args.partition_cap, allow_large=args.allow_large)
    elif mode == "min":
        value = r_min(g, cap=args.partition_cap, allow_large=args.allow_large)
    elif mode == "max":
        value = r_max(g, cap=args.partition_cap, allow_large=args.allow_large)
    else:  # formula
        try:
            value = r_conv(g, cap=0)  # force the closed-form path
        except CapExceededError:
            raise GraphError("no closed form applies to this graph") from None
    record = {
        "graph": args.graph,
        "n": g.n,
        "size": g.size,
        "chi": chi,
        "chi_index": chi_index,
        "chi_index_note": chi_index_note,
        "mode": mode,
        "r": value.value,
        "method": value.method,
        "claim": value.claim,
        "witness": _partition_lists(value.witness) if value.witness else None,
    }
    if args.format == "records":
        print(json.dumps(record, sort_keys=True))
    else:
        print(f"graph      {args.graph} (n={g.n}, size={g.size})")
        print(f"chi        {chi}")
        if chi_index is not None:
            print(f"chi-index  {chi_index}")
        else:
            print(f"chi-index  skipped ({chi_index_note or 'edgeless graph'})")
        source = value.method if value.claim is None else f"{value.method} {value.claim}"
        print(f"r ({mode:4s})   {value.value} [{source}]")
        if value.witness is not None:
            classes = " ".join("{" + ",".join(map(str, c)) + "}" for c in _partition_lists(value.witness))
            print(f"witness    {classes}")
    return 0


def cmd_transform(args) -> int:
    g = load_graph(args.graph)
    op = args.op
    if op in ("union", "join", "corona"):
        if args.graph2 is None:
            raise GraphError(f"transform {op} needs --graph2")
        h = load_graph(args.graph2)
        result = {"union": disjoint_union, "join": join, "corona": corona}[op](g, h)
    elif op == "chithra":
        if not args.subsets:
            raise GraphError("transform chithra needs --subsets, e.g. '0,1;2,3'")
        subsets = []
        for block in args.subsets.split(";"):
            try:
                subsets.append(frozenset(int(v) for v in block.split(",") if v != ""))
            except ValueError:
                raise GraphError(f"bad subset {block!r}") from None
        result = chithra(g, subsets)
    elif op == "linegraph":
        result, _ = line_graph(g)
    elif op == "expand":
        x = expanded_line_graph(g)
        if args.format == "dot":
            sys.stdout.write(expanded_to_dot(x))
            return 0
        result = x.graph  # broken-edge tags are only visible in DOT output
    else:  # pragma: no cover - argparse restricts choices
        raise GraphError(f"unknown op {op!r}")
    sys.stdout.write(_emit_graph(result, args.format))
    return 0


def _audit_params(args) -> dict:
    params: dict = {}
    if args.graph is not None:
        params["g"] = load_graph(args.graph)
    if args.graph2 is not None:
        params["h"] = load_graph(args.graph2)
    if args.n is not None:
        params["n"] = args.n
    if args.parts is not None:
        try:
            params["parts"] = tuple(int(p) for p in args.parts.split(","))
        except ValueError:
            raise GraphError(f"bad part sizes {args.parts!r}") from None
    if args.t is not None:
        params["t"] = args.t
    if args.a is not None:
        params["a"] = args.a
    if args.b is not None:
        params["b"] = args.b
    if args.order is not None:
        params["order"] = args.order
    if args.allow_large:
        params["allow_large"] = True
    return params


def _print_results(results, fmt: str) -> None:
    if fmt == "records":
        for r in results:
            print(r.to_json_line())
    else:
        sys.stdout.write(audits.format_table(results))


def cmd_audit(args) -> int:
    results = audits.audit(args.claim, **_audit_params(args))
    _print_results(results, args.format)
    return 0


def cmd_table1(args) -> int:
    results = audits.table1_report(direct_cap=args.direct_cap)
    _print_results(results, args.format)
    return 0


def cmd_sweep(args) -> int:
    if args.claim not in audits.SWEEP_CLAIMS:
        raise GraphError(
            f"claim {args.claim!r} is not a sweep claim (choose from {', '.join(audits.SWEEP_CLAIMS)})"
        )
    results = audits.audit(args.claim, order=args.order)
    _print_results(results, args.format)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="rainbowgraph",
        description="Rainbow neighbourhood numbers: exact oracles and claim audits.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_common(p):
        p.add_argument("--format", choices=("table", "records"), default="table")
        p.add_argument("--allow-large", action="store_true",
                       help="acknowledge oracle runs beyond the desk-scale caps")

    p = sub.add_parser("compute", help="chromatic data and an r-value for one graph")
    p.add_argument("--graph", required=True, help="family:params | named:NAME | g6:STR | file:PATH")
    p.add_argument("--mode", choices=("conv", "min", "max", "formula"), default="conv")
    p.add_argument("--partition-cap", type=int, default=None)
    add_common(p)
    p.set_defaults(func=cmd_compute)

    p = sub.add_parser("transform", help="apply a graph operator and emit graph6 or DOT")
    p.add_argument("--op", required=True,
                   choices=("union", "join", "corona", "chithra", "linegraph", "expand"))
    p.add_argument("--graph", required=True)
    p.add_argument("--graph2")
    p.add_argument("--subsets", help="chithra subsets, e.g. '0,1;2,3'")
    p.add_argument("--format", choices=("graph6", "dot"), default="graph6")
    p.set_defaults(func=cmd_transform)

    p = sub.add_parser("audit", help="run one catalogued claim audit")
    p.add_argument("claim", help="claim identifier, e.g. THM2.5ii or TABLE1:heawood")
    p.add_argument("--graph")
    p.add_argument("--graph2")
    p.add_argument("--n", type=int)
    p.add_argument("--parts", help="comma-separated part sizes for multipartite claims")
    p.add_argument("--t", type=int)
    p.add_argument("--a", type=int)
    p.add_argument("--b", type=int)
    p.add_argument("--order", type=int)
    add_common(p)
    p.set_defaults(func=cmd_audit)

    p = sub.add_parser("table1", help="audit every named-graph table row")
    p.add_argument("--direct-cap", type=int, default=audits.DIRECT_TABLE1_CAP)
    add_common(p)
    p.set_defaults(func=cmd_table1)

    p = sub.add_parser("sweep", help="sweep a universally quantified claim")
    p.add_argument("--claim", required=True)
    p.add_argument("--order", type=int, default=6)
    add_common(p)
    p.set_defaults(func=cmd_sweep)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except CapExceededError as err:
        print(f"error: {err} (re-run with --allow-large to acknowledge)", file=sys.stderr)
        return CAP_ERROR
    except GraphError as err:
        print(f"error: {err}", file=sys.stderr)
        return USAGE_ERROR


if __name__ == "__main__":
    sys.exit(main())
