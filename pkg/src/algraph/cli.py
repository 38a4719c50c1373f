"""Command-line front end.

Commands: analyze, graph, synth, catalog, verify.
Exit codes: 0 success, 2 parse/validation error, 3 precondition error.
"""

from __future__ import annotations

import argparse
import json
import os
import re
import sys

from . import association, catalog, graphs, report, serialization, synthesis
from .algebra import Algebra
from .errors import (
    ConstraintError,
    MalformedInputError,
    PreconditionError,
    UnknownFixtureError,
)

EXIT_OK = 0
EXIT_PARSE = 2
EXIT_PRECONDITION = 3


def _load_algebra(source: str) -> tuple[Algebra, str, dict]:
    """Resolve a path or fixture name to (algebra, display name, printed claims)."""
    if os.path.exists(source):
        doc = serialization.load_json(source)
        return serialization.document_to_algebra(doc), source, {}
    try:
        fx = catalog.fixture(source)
    except UnknownFixtureError:
        raise MalformedInputError(
            f"{source!r} is neither an existing file nor a catalog fixture") from None
    return catalog.default_instance(source), source, dict(fx.printed_claims)


def _parse_params(pairs: list[str]) -> dict:
    params = {}
    for pair in pairs:
        if "=" not in pair:
            raise MalformedInputError(f"parameter {pair!r} is not of the form name=value")
        name, value = pair.split("=", 1)
        params[name] = serialization.parse_coeff(value, f"parameter {name}")
    return params


def cmd_analyze(args) -> int:
    A, name, printed_claims = _load_algebra(args.input)
    result = report.analyze(A, source=name, printed_claims=printed_claims)
    if args.json:
        sys.stdout.write(json.dumps(result.to_dict(), indent=2) + "\n")
    else:
        sys.stdout.write(result.format_text())
    return EXIT_OK


_GU_STAGE = re.compile(r"^GU(\d+)$")


def cmd_graph(args) -> int:
    A, name, _claims = _load_algebra(args.input)
    which = args.which
    if which == "GR":
        G = association.build_GR(A)
    elif which == "GL":
        G = association.build_GL(A)
    elif which == "GO":
        G = association.build_GO(A)
    elif which == "GU":
        G = association.build_GU(A)
    else:
        match = _GU_STAGE.match(which)
        if not match:
            raise MalformedInputError(f"unknown graph selector {which!r}")
        stage = int(match.group(1))
        if stage < 1:
            raise MalformedInputError("fine-sequence stages are numbered from 1")
        chain = association.fine_sequence(association.build_GU(A))
        G = chain[min(stage, len(chain)) - 1]
    sys.stdout.write(graphs.to_dot(G, name="G"))
    return EXIT_OK


def cmd_synth(args) -> int:
    doc = serialization.load_json(args.graph)
    kind, payload = serialization.document_to_graph(doc)
    if args.mode == "orient":
        if kind != "undirected":
            raise MalformedInputError("orient mode expects an undirected graph document")
        vertices, edges = payload
        oriented = synthesis.orient_undirected(vertices, edges)
        sys.stdout.write(graphs.to_dot(oriented))
        return EXIT_OK
    if kind != "directed":
        raise MalformedInputError(f"{args.mode} mode expects a directed graph document")
    G = payload
    if args.mode == "plain":
        A = synthesis.algebra_from_digraph(G)
    else:  # coloured
        if any(a.colour is None for a in G.arrows):
            G = synthesis.colouring_from_cells(G)
        A = synthesis.algebra_from_coloured_digraph(G)
    sys.stdout.write(serialization.dump_json(serialization.algebra_to_document(A)))
    return EXIT_OK


def cmd_catalog(args) -> int:
    if args.catalog_cmd == "list":
        for name, dim, claims in catalog.list_fixtures():
            tags = ", ".join(f"{k}={v}" for k, v in sorted(claims.items()))
            sys.stdout.write(f"{name}  dim={dim}" + (f"  [{tags}]" if tags else "") + "\n")
        return EXIT_OK
    fx = catalog.fixture(args.name)
    params = _parse_params(args.param)
    if not params and fx.param_names:
        params = dict(fx.default_params)
    A = catalog.instantiate(args.name, params)
    sys.stdout.write(serialization.dump_json(serialization.algebra_to_document(A)))
    return EXIT_OK


def cmd_verify(_args) -> int:
    rows = report.verify_catalog()
    sys.stdout.write(report.format_verify_table(rows))
    return EXIT_OK if not any(r.status == "FAIL" for r in rows) else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="algraph",
        description="Digraphs of finite-dimensional algebras: analysis and synthesis")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("analyze", help="full report for an algebra file or fixture")
    p.add_argument("input", help="path to an algebra JSON document or a fixture name")
    p.add_argument("--json", action="store_true", help="machine-readable output")
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("graph", help="export a digraph of the algebra as DOT")
    p.add_argument("input")
    p.add_argument("--which", required=True,
                   help="GR, GL, GO, GU, or GU<k> for fine-sequence stage k")
    p.add_argument("--format", default="dot", choices=["dot"])
    p.set_defaults(func=cmd_graph)

    p = sub.add_parser("synth", help="construct an algebra or orientation from a graph file")
    p.add_argument("graph", help="path to a graph JSON document")
    p.add_argument("--mode", required=True, choices=["plain", "coloured", "orient"])
    p.set_defaults(func=cmd_synth)

    p = sub.add_parser("catalog", help="list or export the shipped fixtures")
    catalog_sub = p.add_subparsers(dest="catalog_cmd", required=True)
    catalog_sub.add_parser("list").set_defaults(func=cmd_catalog)
    show = catalog_sub.add_parser("show")
    show.add_argument("name")
    show.add_argument("--param", action="append", default=[], metavar="NAME=VALUE")
    show.set_defaults(func=cmd_catalog)

    p = sub.add_parser("verify", help="run the theorem verification table over the catalog")
    p.set_defaults(func=cmd_verify)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (MalformedInputError, ConstraintError, UnknownFixtureError) as exc:
        sys.stderr.write(f"error: {exc}\n")
        return EXIT_PARSE
    except PreconditionError as exc:
        sys.stderr.write(f"error: {exc}\n")
        return EXIT_PRECONDITION


if __name__ == "__main__":
    sys.exit(main())
