"""Inverse constructions: from digraphs back to algebras.

Covers the plain realization (x_i * x_j = x_j per arrow), the coloured
realization from cell-covered digraphs, colour assignment from cells, and
orientation of triangle-covered undirected graphs.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Sequence

from .algebra import Algebra
from .association import check_union_cells
from .errors import MalformedInputError, RoleConditionError, UncoveredEdgeError
from .graphs import (
    Arrow,
    Colour3,
    Digraph,
    LEFT_BIT,
    OPERAND_BIT,
    RIGHT_BIT,
)


def algebra_from_digraph(G: Digraph) -> Algebra:
    """Algebra on V(G) with x_i * x_j = x_j for every arrow (x_i, x_j).

    Its action-to-the-right digraph equals G under the identity labeling.
    """
    if not G.vertices:
        raise MalformedInputError("digraph must have at least one vertex")
    index = {v: i for i, v in enumerate(G.vertices)}
    products = [(index[a.src], index[a.dst], {index[a.dst]: Fraction(1)}) for a in G.arrows]
    return Algebra.from_products(len(G.vertices), products, labels=G.vertices)


Edge = tuple[str, str]


def _normalize_edges(edges: Iterable) -> list[Edge]:
    out = []
    seen = set()
    for e in edges:
        u, v = tuple(e)
        if u == v:
            raise MalformedInputError(f"undirected simple graph cannot contain the loop {u!r}")
        key = frozenset((u, v))
        if key in seen:
            continue
        seen.add(key)
        out.append((u, v))
    return out


def orient_undirected(vertices: Sequence[str], edges: Iterable) -> Digraph:
    """Orient a triangle-covered undirected graph so every arrow lies in a cell.

    Every edge must belong to a 3-cycle.  Edges are processed in input order;
    each is oriented from its lexicographically smaller endpoint, which makes
    every triangle a transitive tournament (the cell configuration).
    """
    vertices = tuple(vertices)
    edge_list = _normalize_edges(edges)
    vset = set(vertices)
    for (u, v) in edge_list:
        if u not in vset or v not in vset:
            raise MalformedInputError(f"edge ({u!r}, {v!r}) references an unknown vertex")
    adjacency = {v: set() for v in vertices}
    for (u, v) in edge_list:
        adjacency[u].add(v)
        adjacency[v].add(u)
    for (u, v) in edge_list:
        if not (adjacency[u] & adjacency[v]):
            raise UncoveredEdgeError((u, v), f"edge ({u!r}, {v!r}) lies on no 3-cycle")
    arrows = tuple(
        Arrow(min(u, v), max(u, v)) for (u, v) in edge_list)
    return Digraph(vertices, arrows)


def colouring_from_cells(G: Digraph) -> Digraph:
    """Assign a Colour3 to every arrow of G from its cell memberships.

    An arrow gets the operand bit for each cell whose c role it plays, the
    right-action bit for the a role and the left-action bit for the b role.
    Every arrow must be covered by at least one cell.
    """
    pairs = G.arrow_pairs()
    bits: dict[tuple[str, str], list[int]] = {p: [0, 0, 0] for p in pairs}
    for i in G.vertices:
        for j in G.vertices:
            if (i, j) not in pairs:
                continue
            for k in G.vertices:
                if (i, k) in pairs and (j, k) in pairs:
                    bits[(i, j)][OPERAND_BIT] = 1
                    bits[(i, k)][RIGHT_BIT] = 1
                    bits[(j, k)][LEFT_BIT] = 1
    for p in sorted(pairs):
        if bits[p] == [0, 0, 0]:
            raise UncoveredEdgeError(p)
    arrows = tuple(
        Arrow(a.src, a.dst, a.weight, Colour3(tuple(bits[a.pair()]))) for a in G.arrows)
    return Digraph(G.vertices, arrows)


def algebra_from_coloured_digraph(G: Digraph) -> Algebra:
    """Realize a cell-valid coloured digraph as an algebra.

    For every arrow (x_i, x_j) with the operand bit set, x_i * x_j is the sum
    of x_k over all vertices k completing a cell with that arrow in the c
    role.  The union digraph of the result reproduces G's arrows and colours.
    """
    if not G.vertices:
        raise MalformedInputError("digraph must have at least one vertex")
    report = check_union_cells(G)
    if not report.valid:
        pair, role = report.violations[0]
        raise RoleConditionError(pair, role)
    colours = {a.pair(): a.colour for a in G.arrows}
    index = {v: i for i, v in enumerate(G.vertices)}
    products = []
    for a in G.arrows:
        if not a.colour.operand:
            continue
        i, j = a.pair()
        completers = {
            index[k] for k in G.vertices
            if colours.get((i, k)) is not None and colours[(i, k)].right
            and colours.get((j, k)) is not None and colours[(j, k)].left}
        products.append((index[i], index[j], {k: Fraction(1) for k in sorted(completers)}))
    return Algebra.from_products(len(G.vertices), products, labels=G.vertices)
