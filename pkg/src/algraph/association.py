"""Builders from an algebra to its digraphs (G_R, G_L, G_O, G_U),
the union-digraph cell validator and the fine sequence."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .algebra import Algebra
from .errors import MalformedInputError
from .exactlin import RVector, zero_vector
from .graphs import (
    Arrow,
    Colour3,
    Digraph,
    LEFT_BIT,
    OPERAND_BIT,
    RIGHT_BIT,
    ROLE_NAMES,
)


def build_GR(A: Algebra) -> Digraph:
    """Action-to-the-right digraph: arrow x_i -> x_l iff c_{ij}^l != 0 for some j.

    The weight of the arrow is the vector (c_{ij}^l) indexed by j.
    """
    arrows = []
    for i in range(A.dim):
        for l in range(A.dim):
            weight = tuple(A.basis_product(i, j)[l] for j in range(A.dim))
            if any(c != 0 for c in weight):
                arrows.append(Arrow(A.basis_labels[i], A.basis_labels[l], weight))
    return Digraph(A.basis_labels, tuple(arrows))


def build_GL(A: Algebra) -> Digraph:
    """Action-to-the-left digraph: arrow x_j -> x_l iff c_{ij}^l != 0 for some i."""
    arrows = []
    for j in range(A.dim):
        for l in range(A.dim):
            weight = tuple(A.basis_product(i, j)[l] for i in range(A.dim))
            if any(c != 0 for c in weight):
                arrows.append(Arrow(A.basis_labels[j], A.basis_labels[l], weight))
    return Digraph(A.basis_labels, tuple(arrows))


def build_GO(A: Algebra) -> Digraph:
    """Operands digraph: one arrow x_i -> x_j per nonzero product x_i * x_j."""
    arrows = []
    for (i, j), coeffs in sorted(A.constants.items()):
        arrows.append(Arrow(A.basis_labels[i], A.basis_labels[j], coeffs))
    return Digraph(A.basis_labels, tuple(arrows))


def build_GU(A: Algebra) -> Digraph:
    """Union digraph: edge union of G_O, G_R and G_L.

    Each arrow carries a 3n-coordinate weight (the G_O, G_R, G_L blocks,
    zero-padded where the arrow is absent from a constituent) and a colour in
    Z_2^3 recording membership in each constituent.
    """
    n = A.dim
    parts = (build_GO(A), build_GR(A), build_GL(A))
    pairs: set[tuple[str, str]] = set()
    for g in parts:
        pairs |= g.arrow_pairs()
    arrows = []
    for (src, dst) in pairs:
        weight: list[Fraction] = []
        bits = []
        for g in parts:
            a = g.arrow(src, dst)
            if a is None:
                weight.extend(zero_vector(n))
                bits.append(0)
            else:
                weight.extend(a.weight)
                bits.append(1)
        arrows.append(Arrow(src, dst, tuple(weight), Colour3(tuple(bits))))
    return Digraph(A.basis_labels, tuple(arrows))


@dataclass(frozen=True)
class Cell:
    """A matched product triple: operand arrow i->j, right arrow i->k, left arrow j->k."""

    i: str
    j: str
    k: str

    @property
    def kind(self) -> str:
        if self.i == self.j == self.k:
            return "i=j=k"
        if self.i == self.j:
            return "i=j"
        if self.j == self.k:
            return "j=k"
        if self.i == self.k:
            return "i=k"
        return "general"

    def arrows(self) -> tuple[tuple[str, str], tuple[str, str], tuple[str, str]]:
        """(operand pair, right-action pair, left-action pair)."""
        return ((self.i, self.j), (self.i, self.k), (self.j, self.k))


@dataclass(frozen=True)
class CellReport:
    valid: bool
    violations: tuple[tuple[tuple[str, str], str], ...]  # (arrow pair, missing role)
    cells: tuple[Cell, ...]


def _colour_map(G: Digraph) -> dict[tuple[str, str], Colour3]:
    colours = {}
    for a in G.arrows:
        if a.colour is None:
            raise MalformedInputError(f"arrow {a.pair()} carries no colour")
        colours[a.pair()] = a.colour
    return colours


def _has_bit(colours, pair, bit) -> bool:
    c = colours.get(pair)
    return c is not None and c.bits[bit] == 1


def enumerate_cells(G: Digraph) -> list[Cell]:
    """All coloured cells of G: (i,j) operand, (i,k) right, (j,k) left bits set."""
    colours = _colour_map(G)
    cells = []
    for i in G.vertices:
        for j in G.vertices:
            if not _has_bit(colours, (i, j), OPERAND_BIT):
                continue
            for k in G.vertices:
                if _has_bit(colours, (i, k), RIGHT_BIT) and _has_bit(colours, (j, k), LEFT_BIT):
                    cells.append(Cell(i, j, k))
    return cells


def _role_supported(colours, pair: tuple[str, str], bit: int, vertices) -> bool:
    src, dst = pair
    if bit == OPERAND_BIT:
        # pair = (i, j): need k with (i,k) right and (j,k) left
        return any(
            _has_bit(colours, (src, k), RIGHT_BIT) and _has_bit(colours, (dst, k), LEFT_BIT)
            for k in vertices)
    if bit == RIGHT_BIT:
        # pair = (i, k): need j with (i,j) operand and (j,k) left
        return any(
            _has_bit(colours, (src, j), OPERAND_BIT) and _has_bit(colours, (j, dst), LEFT_BIT)
            for j in vertices)
    # pair = (j, k): need i with (i,j) operand and (i,k) right
    return any(
        _has_bit(colours, (i, src), OPERAND_BIT) and _has_bit(colours, (i, dst), RIGHT_BIT)
        for i in vertices)


def check_union_cells(G: Digraph) -> CellReport:
    """Verify every set colour bit of every arrow belongs to a cell in its role.

    Degenerate cells (coinciding vertices) are handled uniformly by merging
    the ordered pairs, which reproduces the singular-case constraints.
    """
    colours = _colour_map(G)
    violations = []
    for a in G.arrows:
        for bit in (OPERAND_BIT, RIGHT_BIT, LEFT_BIT):
            if a.colour.bits[bit] == 1 and not _role_supported(colours, a.pair(), bit, G.vertices):
                violations.append((a.pair(), ROLE_NAMES[bit]))
    return CellReport(not violations, tuple(violations), tuple(enumerate_cells(G)))


def _fine_step(G: Digraph, block_len: int) -> Digraph:
    # 1. keep only heads of right-action arrows
    keep = {a.dst for a in G.arrows if a.colour.bits[RIGHT_BIT] == 1}
    vertices = tuple(v for v in G.vertices if v in keep)
    survivors = [a for a in G.arrows if a.src in keep and a.dst in keep]
    if not vertices:
        return G  # no longer a digraph: repeat the previous one
    # 2. clear colour bits whose cell support is gone; zero the weight block too
    current = Digraph(vertices, tuple(survivors))
    colours = _colour_map(current)
    pruned = []
    for a in survivors:
        bits = list(a.colour.bits)
        weight = None if a.weight is None else list(a.weight)
        for bit in (OPERAND_BIT, RIGHT_BIT, LEFT_BIT):
            if bits[bit] == 1 and not _role_supported(colours, a.pair(), bit, vertices):
                bits[bit] = 0
                if weight is not None:
                    for pos in range(bit * block_len, (bit + 1) * block_len):
                        weight[pos] = Fraction(0)
        colour = Colour3(tuple(bits))
        # 3. drop arrows whose colour became (0, 0, 0)
        if not colour.is_zero():
            pruned.append(Arrow(a.src, a.dst, None if weight is None else tuple(weight), colour))
    return Digraph(vertices, tuple(pruned))


def fine_sequence(G: Digraph) -> list[Digraph]:
    """Iterated pruning of a coloured union digraph until it stabilizes.

    Returns the chain G^(1), G^(2), ... up to (and excluding the repeat of)
    the first digraph equal to its predecessor.
    """
    _colour_map(G)  # validates that every arrow is coloured
    block_len = len(G.vertices)
    chain = [G]
    while True:
        nxt = _fine_step(chain[-1], block_len)
        if nxt == chain[-1]:
            return chain
        chain.append(nxt)
