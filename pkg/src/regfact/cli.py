"""Command-line interface.

Subcommands: construct, verify, query, embed, classify. All behavior is
deterministic; identical invocations produce byte-identical output. Exit
codes: 0 success (verify: all checks passed), 1 runtime failure or failed
verification, 2 usage or parse errors, 3 violated construction hypotheses
(UnsupportedByTheorem, DivisibilityViolation, InvolutionInU, and kin).
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from typing import Optional, Sequence

from .cardinals import parse_cardinal
from .connsets import DEFAULT_CLASSIFY_BUDGET, classify, parse_connection_spec
from .errors import THEOREM_VIOLATIONS, ParseError, RegfactError
from .export import render_dot, render_json, render_table
from .factorization import build, complete_equipartite
from .greedy import DEFAULT_SCAN_LIMIT
from .groups import parse_elements_csv, parse_group_spec, parse_subgroup_spec
from .subfact import nested, table_from_json
from .verify import verify_window


def _default_budget() -> int:
    env = os.environ.get("REGFACT_BUDGET")
    if env is None:
        return DEFAULT_SCAN_LIMIT
    try:
        value = int(env)
    except ValueError:
        raise ParseError(env, 0, "REGFACT_BUDGET must be an integer") from None
    if value < 1:
        raise ParseError(env, 0, "REGFACT_BUDGET must be positive")
    return value


def _add_handle_args(p: argparse.ArgumentParser) -> None:
    p.add_argument("--group", required=True, help="group spec, e.g. 'Z', 'Z x C2', 'Dinf'")
    target = p.add_mutually_exclusive_group(required=True)
    target.add_argument("--set", dest="conn", help="connection-set spec, e.g. 'all-nonzero'")
    target.add_argument(
        "--subgroup", help="subgroup spec for a complete equipartite graph, e.g. '3Z'"
    )
    p.add_argument("--budget", type=int, default=None, help="greedy scan budget per phase")
    p.add_argument(
        "--classify-budget",
        type=int,
        default=DEFAULT_CLASSIFY_BUDGET,
        help="elements scanned during classification",
    )


def _build_handle(args):
    group = parse_group_spec(args.group)
    budget = args.budget if args.budget is not None else _default_budget()
    if args.subgroup is not None:
        h = parse_subgroup_spec(group, args.subgroup)
        return complete_equipartite(
            group, h, scan_limit=budget, classify_budget=args.classify_budget
        )
    s = parse_connection_spec(group, args.conn)
    return build(group, s, scan_limit=budget, classify_budget=args.classify_budget)


def _cmd_construct(args) -> int:
    handle = _build_handle(args)
    if args.format == "json":
        print(render_json(handle, args.window))
    elif args.format == "dot":
        print(render_dot(handle, args.window))
    else:
        print(render_table(handle, args.window))
    return 0


def _cmd_verify(args) -> int:
    handle = _build_handle(args)
    report = verify_window(handle, args.window)
    if args.format == "json":
        print(report.to_json())
    else:
        print(report.format_table())
    return 0 if report.passed else 1


def _cmd_query(args) -> int:
    handle = _build_handle(args)
    group = handle.group
    if args.edge is not None:
        elements = parse_elements_csv(group, args.edge)
        if len(elements) != 2:
            raise ParseError(args.edge, 0, "an edge needs exactly two elements")
        fid = handle.factor_of_edge(elements[0], elements[1])
        print(json.dumps(handle.id_to_json(fid), sort_keys=True))
        return 0
    if args.factor is None or args.vertex is None:
        raise ParseError("", 0, "query needs --edge, or both --factor and --vertex")
    fid = handle.parse_id(args.factor)
    v = group.parse(args.vertex)
    p = handle.partner(fid, v)
    print(json.dumps({"partner": group.encode(p)}, sort_keys=True))
    return 0


def _cmd_embed(args) -> int:
    inner_group = parse_group_spec(args.inner_group)
    budget = args.budget if args.budget is not None else _default_budget()
    if args.inner_table is not None:
        with open(args.inner_table, "r", encoding="utf-8") as fh:
            inner = table_from_json(inner_group, json.load(fh))
    else:
        if args.inner_subgroup is None:
            raise ParseError("", 0, "embed needs --inner-subgroup or --inner-table")
        k = parse_subgroup_spec(inner_group, args.inner_subgroup)
        inner = complete_equipartite(
            inner_group, k, scan_limit=budget, classify_budget=args.classify_budget
        )
    m = parse_cardinal(args.m)
    n = parse_cardinal(args.n)
    g1 = parse_group_spec(args.g1) if args.g1 else None
    l1 = parse_group_spec(args.l1) if args.l1 else None
    handle = nested(
        inner, m, n, g1=g1, l1=l1, scan_limit=budget, classify_budget=args.classify_budget
    )
    if args.format == "dot":
        print(render_dot(handle, args.window))
    elif args.format == "table":
        print(render_table(handle, args.window))
    else:
        print(render_json(handle, args.window))
    return 0


def _cmd_classify(args) -> int:
    group = parse_group_spec(args.group)
    s = parse_connection_spec(group, args.conn)
    verdict = classify(s, args.budget)
    print(json.dumps(verdict.to_json(group), sort_keys=True))
    return 0


def _make_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="regfact",
        description=(
            "Construct, query and verify vertex-regular 1-factorizations of "
            "Cayley graphs on computable infinite groups."
        ),
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("construct", help="emit the factor table of a window")
    _add_handle_args(p)
    p.add_argument("--window", type=int, default=32)
    p.add_argument("--format", choices=("json", "dot", "table"), default="json")
    p.set_defaults(fn=_cmd_construct)

    p = sub.add_parser("verify", help="brute-force verification of a window")
    _add_handle_args(p)
    p.add_argument("--window", type=int, default=32)
    p.add_argument("--format", choices=("table", "json"), default="table")
    p.set_defaults(fn=_cmd_verify)

    p = sub.add_parser("query", help="factor id of an edge, or a partner vertex")
    _add_handle_args(p)
    p.add_argument("--edge", help="two elements, e.g. '(3,0),(3,1)' or '5,6'")
    p.add_argument("--factor", help="factor id, e.g. 'trans:5' or 'inv:(0,1)'")
    p.add_argument("--vertex", help="vertex for a partner query")
    p.set_defaults(fn=_cmd_query)

    p = sub.add_parser("embed", help="embed an inner factorization into K_m[n]")
    p.add_argument("--inner-group", required=True)
    p.add_argument("--inner-subgroup", help="parts subgroup of the inner factorization")
    p.add_argument("--inner-table", help="path to a factor-table JSON over a finite group")
    p.add_argument("--m", required=True, help="target part count (integer or 'aleph0')")
    p.add_argument("--n", required=True, help="target part size (integer or 'aleph0')")
    p.add_argument("--g1", help="override the group of order n/n'")
    p.add_argument("--l1", help="override the group of order m/m'")
    p.add_argument("--window", type=int, default=32)
    p.add_argument("--budget", type=int, default=None)
    p.add_argument("--classify-budget", type=int, default=DEFAULT_CLASSIFY_BUDGET)
    p.add_argument("--format", choices=("json", "dot", "table"), default="json")
    p.set_defaults(fn=_cmd_embed)

    p = sub.add_parser("classify", help="classify the non-involution part of a set")
    p.add_argument("--group", required=True)
    p.add_argument("--set", dest="conn", required=True)
    p.add_argument("--budget", type=int, default=DEFAULT_CLASSIFY_BUDGET)
    p.set_defaults(fn=_cmd_classify)

    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = _make_parser()
    args = parser.parse_args(argv)
    try:
        return args.fn(args)
    except ParseError as exc:
        print(f"error: ParseError: {exc}", file=sys.stderr)
        if exc.hint:
            print(f"hint: {exc.hint}", file=sys.stderr)
        return 2
    except THEOREM_VIOLATIONS as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        if exc.hint:
            print(f"hint: {exc.hint}", file=sys.stderr)
        return 3
    except RegfactError as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        if exc.hint:
            print(f"hint: {exc.hint}", file=sys.stderr)
        return 1
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    raise SystemExit(main())
