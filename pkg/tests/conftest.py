"""Shared random generators and independent oracles for the test suite.

The oracles deliberately avoid the implementations under test: linear
algebra questions are answered by sympy, acyclicity by sink elimination and
chromatic numbers by exhaustive assignment search.
"""

from __future__ import annotations

import itertools
import random
from fractions import Fraction

import sympy

from algraph.algebra import Algebra
from algraph.graphs import Arrow, Digraph

COEFFS = [Fraction(1), Fraction(-1), Fraction(2), Fraction(-2),
          Fraction(1, 2), Fraction(-1, 3), Fraction(3)]


def nonzero_coeff(rng: random.Random) -> Fraction:
    return rng.choice(COEFFS)


def random_algebra(rng: random.Random, dim: int, density: float = 0.35) -> Algebra:
    products = []
    for i in range(dim):
        for j in range(dim):
            if rng.random() < density:
                targets = rng.sample(range(dim), rng.randint(1, min(2, dim)))
                products.append((i, j, {k: nonzero_coeff(rng) for k in targets}))
    return Algebra.from_products(dim, products)


def random_acyclic_gr_algebra(rng: random.Random, dim: int) -> Algebra:
    """Structure constants target strictly rank-increasing basis elements,
    so every G_R arrow increases a fixed linear order and G_R is acyclic."""
    rank = list(range(dim))
    rng.shuffle(rank)
    products = []
    for i in range(dim):
        higher = [k for k in range(dim) if rank[k] > rank[i]]
        if not higher:
            continue
        for j in range(dim):
            if rng.random() < 0.5:
                targets = rng.sample(higher, rng.randint(1, min(2, len(higher))))
                products.append((i, j, {k: nonzero_coeff(rng) for k in targets}))
    return Algebra.from_products(dim, products)


def random_multiplicative_algebra(rng: random.Random, dim: int) -> Algebra:
    """Every nonzero product is a nonzero multiple of a single basis element."""
    products = []
    for i in range(dim):
        for j in range(dim):
            if rng.random() < 0.45:
                products.append((i, j, {rng.randrange(dim): nonzero_coeff(rng)}))
    return Algebra.from_products(dim, products)


def random_digraph(rng: random.Random, n: int, density: float = 0.3,
                   loops: bool = True) -> Digraph:
    vertices = tuple(f"v{i}" for i in range(n))
    arrows = []
    for s in vertices:
        for d in vertices:
            if (s != d or loops) and rng.random() < density:
                arrows.append(Arrow(s, d))
    return Digraph(vertices, tuple(arrows))


def random_triangle_covered_digraph(rng: random.Random, n: int) -> Digraph:
    """Union of lexicographically oriented triangles on random vertex triples."""
    vertices = tuple(f"v{i}" for i in range(n))
    pairs: set[tuple[str, str]] = set()
    for _ in range(rng.randint(1, n)):
        tri = sorted(rng.sample(vertices, 3))
        pairs |= {(tri[0], tri[1]), (tri[1], tri[2]), (tri[0], tri[2])}
    return Digraph(vertices, tuple(Arrow(s, d) for (s, d) in sorted(pairs)))


def _sympy_matrix(rows):
    return sympy.Matrix([[sympy.Rational(x) for x in row] for row in rows])


def sympy_rank(rows) -> int:
    rows = list(rows)
    if not rows:
        return 0
    return _sympy_matrix(rows).rank()


def sympy_intersection_dim(S, T) -> int:
    """dim(S) + dim(T) - dim(S + T), each rank computed by sympy."""
    joint = sympy_rank(list(S.basis_rows) + list(T.basis_rows))
    return S.dim + T.dim - joint


def sink_elimination_acyclic(G: Digraph) -> bool:
    """Acyclicity by repeatedly deleting vertices of outdegree zero."""
    outdeg = {v: 0 for v in G.vertices}
    preds: dict[str, list[str]] = {v: [] for v in G.vertices}
    for a in G.arrows:
        outdeg[a.src] += 1
        preds[a.dst].append(a.src)
    ready = [v for v in G.vertices if outdeg[v] == 0]
    removed = 0
    while ready:
        v = ready.pop()
        removed += 1
        for p in preds[v]:
            outdeg[p] -= 1
            if outdeg[p] == 0:
                ready.append(p)
    return removed == len(G.vertices)


def brute_chromatic(G: Digraph) -> int:
    """Exhaustive colouring search on the underlying simple graph (small n)."""
    verts = list(G.vertices)
    if not verts:
        return 0
    edges = [tuple(e) for e in {frozenset((a.src, a.dst))
                                for a in G.arrows if a.src != a.dst}]
    for k in range(1, len(verts) + 1):
        for assign in itertools.product(range(k), repeat=len(verts)):
            colour = dict(zip(verts, assign))
            if all(colour[u] != colour[v] for (u, v) in edges):
                return k
    return len(verts)


def random_invertible(rng: random.Random, n: int):
    """Random rational matrix whose invertibility is certified by sympy."""
    while True:
        rows = [[rng.choice(COEFFS + [Fraction(0)]) for _ in range(n)]
                for _ in range(n)]
        if _sympy_matrix(rows).det() != 0:
            return tuple(tuple(row) for row in rows)
