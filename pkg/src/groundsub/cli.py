"""Command-line frontend.

Exit codes: 0 on success or agreement, 1 on usage or input errors, 2 when
the two subtyping deciders disagree.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from .builder import run, subtype_by_graph, sufficient_depth
from .errors import GroundsubError
from .export import FORMATS, render
from .rules import differential_check, is_subtype
from .typelang import parse_declarations, parse_ground_type


class _UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message: str):  # noqa: D102 - argparse hook
        raise _UsageError(message)


def _build_parser() -> _Parser:
    parser = _Parser(prog="groundsub", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    build = sub.add_parser("build", help="construct and export a subtyping graph")
    build.add_argument("--decls", required=True, help="path to a declarations file")
    build.add_argument("--iterations", type=int, required=True)
    build.add_argument("--format", choices=FORMATS, required=True)
    build.add_argument("--out", required=True, help="output file path")

    query = sub.add_parser("query", help="decide subtyping between two types")
    query.add_argument("--decls", required=True)
    query.add_argument("type1")
    query.add_argument("type2")

    stats = sub.add_parser("stats", help="print per-iteration graph sizes")
    stats.add_argument("--decls", required=True)
    stats.add_argument("--iterations", type=int, required=True)

    selfcheck = sub.add_parser(
        "selfcheck", help="compare the construction against the decision rules"
    )
    selfcheck.add_argument("--decls", required=True)
    selfcheck.add_argument("--max-rank", type=int, required=True)

    return parser


def _load_table(path: str):
    return parse_declarations(Path(path).read_text(encoding="utf-8"))


def _print_stats(trace) -> None:
    for i, (vertices, edges) in enumerate(trace.stats, start=1):
        print(i, vertices, edges)


def _cmd_build(args) -> int:
    if args.iterations < 1:
        raise _UsageError("--iterations must be at least 1")
    table = _load_table(args.decls)
    trace = run(table, args.iterations)
    Path(args.out).write_text(render(trace.last.graph, args.format), encoding="utf-8")
    _print_stats(trace)
    return 0


def _cmd_query(args) -> int:
    table = _load_table(args.decls)
    t1 = parse_ground_type(args.type1, table)
    t2 = parse_ground_type(args.type2, table)
    trace = run(table, sufficient_depth(t1, t2))
    by_graph = subtype_by_graph(trace, t1, t2)
    by_rules = is_subtype(t1, t2, table)
    print(f"graph: {str(by_graph).lower()}")
    print(f"oracle: {str(by_rules).lower()}")
    return 0 if by_graph == by_rules else 2


def _cmd_stats(args) -> int:
    if args.iterations < 1:
        raise _UsageError("--iterations must be at least 1")
    _print_stats(run(_load_table(args.decls), args.iterations))
    return 0


def _cmd_selfcheck(args) -> int:
    if args.max_rank < 1:
        raise _UsageError("--max-rank must be at least 1")
    report = differential_check(_load_table(args.decls), args.max_rank)
    print(
        f"checked {report.pair_count} ordered pairs over {report.type_count} types "
        f"(max rank {report.max_rank})"
    )
    for m in report.mismatches:
        print(f"mismatch: {m.left} <: {m.right}: graph={m.graph_verdict} rules={m.rule_verdict}")
    return 0 if report.ok else 2


_COMMANDS = {
    "build": _cmd_build,
    "query": _cmd_query,
    "stats": _cmd_stats,
    "selfcheck": _cmd_selfcheck,
}


def main(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
        return _COMMANDS[args.command](args)
    except _UsageError as err:
        print(f"error: {err}", file=sys.stderr)
        return 1
    except (GroundsubError, OSError) as err:
        print(f"error: {err}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
