"""Finite digraphs and the graph algorithms the algebra theorems consume.

Cycle detection, topological levels, exact chromatic number, induced
subdigraphs, comparison and DOT export.  Digraphs are immutable; at most one
arrow exists per ordered vertex pair (loops and opposite parallels allowed).
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction

from .errors import CyclicGraphError, MalformedInputError, SizeLimitError
from .exactlin import RVector

ISOMORPHISM_SIZE_LIMIT = 8

OPERAND_BIT = 0
RIGHT_BIT = 1
LEFT_BIT = 2
ROLE_NAMES = ("operand", "right-action", "left-action")


@dataclass(frozen=True, order=True)
class Colour3:
    """Membership bits (in G_O?, in G_R?, in G_L?) of a union-digraph arrow."""

    bits: tuple[int, int, int]

    def __post_init__(self):
        if len(self.bits) != 3 or any(b not in (0, 1) for b in self.bits):
            raise MalformedInputError("colour must be a triple over {0, 1}")

    @property
    def operand(self) -> bool:
        return bool(self.bits[OPERAND_BIT])

    @property
    def right(self) -> bool:
        return bool(self.bits[RIGHT_BIT])

    @property
    def left(self) -> bool:
        return bool(self.bits[LEFT_BIT])

    def is_zero(self) -> bool:
        return self.bits == (0, 0, 0)


@dataclass(frozen=True)
class Arrow:
    src: str
    dst: str
    weight: RVector | None = None
    colour: Colour3 | None = None

    def pair(self) -> tuple[str, str]:
        return (self.src, self.dst)


@dataclass(frozen=True)
class Digraph:
    """Vertex list plus arrows; arrows are kept sorted for determinism."""

    vertices: tuple[str, ...]
    arrows: tuple[Arrow, ...]

    def __post_init__(self):
        if len(set(self.vertices)) != len(self.vertices):
            raise MalformedInputError("duplicate vertex labels")
        vset = set(self.vertices)
        pairs = set()
        for a in self.arrows:
            if a.src not in vset or a.dst not in vset:
                raise MalformedInputError(f"arrow {a.pair()} references an unknown vertex")
            if a.pair() in pairs:
                raise MalformedInputError(f"duplicate arrow for ordered pair {a.pair()}")
            pairs.add(a.pair())
        order = {v: i for i, v in enumerate(self.vertices)}
        object.__setattr__(
            self, "arrows",
            tuple(sorted(self.arrows, key=lambda a: (order[a.src], order[a.dst]))))

    def arrow_pairs(self) -> set[tuple[str, str]]:
        return {a.pair() for a in self.arrows}

    def arrow(self, src: str, dst: str) -> Arrow | None:
        for a in self.arrows:
            if a.src == src and a.dst == dst:
                return a
        return None

    def successors(self, v: str) -> list[str]:
        return [a.dst for a in self.arrows if a.src == v]

    def predecessors(self, v: str) -> list[str]:
        return [a.src for a in self.arrows if a.dst == v]


def degrees(G: Digraph, v: str) -> tuple[int, int]:
    """(indegree, outdegree) of a vertex; a loop contributes 1 to each."""
    if v not in G.vertices:
        raise MalformedInputError(f"unknown vertex {v!r}")
    indeg = sum(1 for a in G.arrows if a.dst == v)
    outdeg = sum(1 for a in G.arrows if a.src == v)
    return indeg, outdeg


def find_oriented_cycle(G: Digraph) -> list[str] | None:
    """A closed oriented walk with distinct vertices, or None; loops are 1-cycles."""
    succ = {v: G.successors(v) for v in G.vertices}
    state = {v: 0 for v in G.vertices}  # 0 unvisited, 1 on stack, 2 done
    for root in G.vertices:
        if state[root]:
            continue
        stack: list[tuple[str, int]] = [(root, 0)]
        path = [root]
        state[root] = 1
        while stack:
            v, idx = stack[-1]
            if idx < len(succ[v]):
                stack[-1] = (v, idx + 1)
                w = succ[v][idx]
                if state[w] == 1:
                    return path[path.index(w):]
                if state[w] == 0:
                    state[w] = 1
                    stack.append((w, 0))
                    path.append(w)
            else:
                state[v] = 2
                stack.pop()
                path.pop()
    return None


def is_acyclic(G: Digraph) -> bool:
    return find_oriented_cycle(G) is None


def topological_levels(G: Digraph) -> list[set[str]]:
    """Longest-path layering of an acyclic digraph.

    Level 1 holds the vertices with no incoming arrow; every other vertex sits
    one level above its deepest predecessor.
    """
    cycle = find_oriented_cycle(G)
    if cycle is not None:
        raise CyclicGraphError(cycle)
    level: dict[str, int] = {}
    remaining = list(G.vertices)
    while remaining:
        progressed = False
        still = []
        for v in remaining:
            preds = G.predecessors(v)
            if all(p in level for p in preds):
                level[v] = 1 + max((level[p] for p in preds), default=0)
                progressed = True
            else:
                still.append(v)
        remaining = still
        if remaining and not progressed:  # unreachable on acyclic inputs
            raise CyclicGraphError(remaining)
    if not level:
        return []
    count = max(level.values())
    return [{v for v, l in level.items() if l == k} for k in range(1, count + 1)]


def nilindex_upper_bound(G: Digraph) -> int:
    """m + 1 where m is the number of topological levels of an acyclic digraph."""
    return len(topological_levels(G)) + 1


def longest_directed_path(G: Digraph) -> int:
    """Number of arrows on a longest directed path of an acyclic digraph."""
    return max(len(topological_levels(G)) - 1, 0)


def induced_subdigraph(G: Digraph, keep: set[str]) -> Digraph:
    vertices = tuple(v for v in G.vertices if v in keep)
    arrows = tuple(a for a in G.arrows if a.src in keep and a.dst in keep)
    return Digraph(vertices, arrows)


def g_square(G: Digraph) -> Digraph:
    """Induced subdigraph on the vertices of positive indegree."""
    return induced_subdigraph(G, {a.dst for a in G.arrows})


def _undirected_adjacency(G: Digraph) -> dict[str, set[str]]:
    adj: dict[str, set[str]] = {v: set() for v in G.vertices}
    for a in G.arrows:
        if a.src != a.dst:  # loops are ignored for colouring
            adj[a.src].add(a.dst)
            adj[a.dst].add(a.src)
    return adj


def chromatic_number(G: Digraph) -> int:
    """Exact vertex chromatic number of the underlying undirected simple graph."""
    if not G.vertices:
        return 0
    adj = _undirected_adjacency(G)
    order = sorted(G.vertices, key=lambda v: (-len(adj[v]), v))

    def colourable(k: int) -> bool:
        assignment: dict[str, int] = {}

        def backtrack(pos: int) -> bool:
            if pos == len(order):
                return True
            v = order[pos]
            used = {assignment[w] for w in adj[v] if w in assignment}
            # symmetry break: never open more than one new colour
            cap = min(k, (max(assignment.values(), default=-1) + 1) + 1)
            for c in range(cap):
                if c not in used:
                    assignment[v] = c
                    if backtrack(pos + 1):
                        return True
                    del assignment[v]
            return False

        return backtrack(0)

    for k in range(1, len(G.vertices) + 1):
        if colourable(k):
            return k
    return len(G.vertices)


def same_digraph(G: Digraph, H: Digraph) -> bool:
    """Equality under the identity labeling; weights and colours ignored."""
    return set(G.vertices) == set(H.vertices) and G.arrow_pairs() == H.arrow_pairs()


def isomorphic(G: Digraph, H: Digraph) -> dict[str, str] | None:
    """Search all vertex bijections; limited to digraphs with at most 8 vertices."""
    if len(G.vertices) > ISOMORPHISM_SIZE_LIMIT or len(H.vertices) > ISOMORPHISM_SIZE_LIMIT:
        raise SizeLimitError(
            f"isomorphism search is limited to {ISOMORPHISM_SIZE_LIMIT} vertices")
    if len(G.vertices) != len(H.vertices) or len(G.arrows) != len(H.arrows):
        return None
    g_pairs = G.arrow_pairs()
    h_pairs = H.arrow_pairs()
    for perm in itertools.permutations(H.vertices):
        mapping = dict(zip(G.vertices, perm))
        if {(mapping[s], mapping[d]) for (s, d) in g_pairs} == h_pairs:
            return mapping
    return None


def _format_fraction(x: Fraction) -> str:
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


_BIT_COLOURS = ("red", "green", "blue")  # operand, right-action, left-action


def to_dot(G: Digraph, name: str = "G") -> str:
    """Deterministic DOT source; weights as labels, colour bits as edge colours."""
    lines = [f"digraph {name} {{"]
    for v in G.vertices:
        lines.append(f'  "{v}";')
    order = {v: i for i, v in enumerate(G.vertices)}
    for a in sorted(G.arrows, key=lambda a: (order[a.src], order[a.dst])):
        attrs = []
        if a.weight is not None:
            attrs.append('label="(%s)"' % ", ".join(_format_fraction(x) for x in a.weight))
        if a.colour is not None:
            active = [c for bit, c in zip(a.colour.bits, _BIT_COLOURS) if bit]
            if active:
                attrs.append('color="%s"' % ":".join(active))
        suffix = f" [{', '.join(attrs)}]" if attrs else ""
        lines.append(f'  "{a.src}" -> "{a.dst}"{suffix};')
    lines.append("}")
    return "\n".join(lines) + "\n"
