"""Exact rational linear algebra: RREF, spans, kernels and subspace arithmetic.

All scalars are `fractions.Fraction`, so every computation is exact and
subspace equality is a syntactic comparison of canonical (RREF) bases.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from .errors import AmbientMismatchError, InvalidBasisError, MalformedInputError

RVector = tuple[Fraction, ...]
Matrix = tuple[RVector, ...]


def vector(entries: Iterable) -> RVector:
    """Coerce an iterable of rational-like entries to a tuple of Fractions."""
    return tuple(Fraction(e) for e in entries)


def zero_vector(n: int) -> RVector:
    return (Fraction(0),) * n


def unit_vector(n: int, i: int) -> RVector:
    v = [Fraction(0)] * n
    v[i] = Fraction(1)
    return tuple(v)


def vec_add(u: RVector, v: RVector) -> RVector:
    if len(u) != len(v):
        raise AmbientMismatchError(f"vector lengths differ: {len(u)} vs {len(v)}")
    return tuple(a + b for a, b in zip(u, v))


def vec_scale(c, v: RVector) -> RVector:
    c = Fraction(c)
    return tuple(c * a for a in v)


def is_zero_vector(v: RVector) -> bool:
    return all(a == 0 for a in v)


def _rref(rows: list[list[Fraction]]) -> list[list[Fraction]]:
    """In-place Gauss-Jordan; returns nonzero rows with pivots normalized to 1."""
    if not rows:
        return []
    ncols = len(rows[0])
    pivot_row = 0
    for col in range(ncols):
        pick = None
        for r in range(pivot_row, len(rows)):
            if rows[r][col] != 0:
                pick = r
                break
        if pick is None:
            continue
        rows[pivot_row], rows[pick] = rows[pick], rows[pivot_row]
        piv = rows[pivot_row][col]
        rows[pivot_row] = [a / piv for a in rows[pivot_row]]
        for r in range(len(rows)):
            if r != pivot_row and rows[r][col] != 0:
                factor = rows[r][col]
                rows[r] = [a - factor * b for a, b in zip(rows[r], rows[pivot_row])]
        pivot_row += 1
        if pivot_row == len(rows):
            break
    return [row for row in rows if any(a != 0 for a in row)]


@dataclass(frozen=True)
class Subspace:
    """A linear subspace of F^n stored as an RREF basis (zero rows removed).

    The RREF representation is canonical, so dataclass equality coincides with
    equality of subspaces.
    """

    ambient_dim: int
    basis_rows: Matrix

    @property
    def dim(self) -> int:
        return len(self.basis_rows)

    @classmethod
    def zero(cls, ambient_dim: int) -> "Subspace":
        return cls(ambient_dim, ())

    @classmethod
    def full(cls, ambient_dim: int) -> "Subspace":
        return cls(ambient_dim, tuple(unit_vector(ambient_dim, i) for i in range(ambient_dim)))

    def contains(self, v: RVector) -> bool:
        if len(v) != self.ambient_dim:
            raise AmbientMismatchError(
                f"vector length {len(v)} != ambient dimension {self.ambient_dim}")
        residual = list(v)
        for row in self.basis_rows:
            lead = next(i for i, a in enumerate(row) if a != 0)
            if residual[lead] != 0:
                factor = residual[lead]
                residual = [a - factor * b for a, b in zip(residual, row)]
        return all(a == 0 for a in residual)

    def contains_subspace(self, other: "Subspace") -> bool:
        self._check_ambient(other)
        return all(self.contains(row) for row in other.basis_rows)

    def __add__(self, other: "Subspace") -> "Subspace":
        self._check_ambient(other)
        return rref(self.basis_rows + other.basis_rows, ambient_dim=self.ambient_dim)

    def intersect(self, other: "Subspace") -> "Subspace":
        """Intersection via the kernel of [S^T | -T^T]."""
        self._check_ambient(other)
        s, t = self.dim, other.dim
        if s == 0 or t == 0:
            return Subspace.zero(self.ambient_dim)
        stacked = []
        for i in range(self.ambient_dim):
            stacked.append(
                vector([row[i] for row in self.basis_rows]
                       + [-row[i] for row in other.basis_rows]))
        vectors = []
        for k in kernel_basis(tuple(stacked)):
            combo = zero_vector(self.ambient_dim)
            for coeff, row in zip(k[:s], self.basis_rows):
                combo = vec_add(combo, vec_scale(coeff, row))
            vectors.append(combo)
        return span(vectors, ambient_dim=self.ambient_dim)

    def _check_ambient(self, other: "Subspace") -> None:
        if self.ambient_dim != other.ambient_dim:
            raise AmbientMismatchError(
                f"ambient dimensions differ: {self.ambient_dim} vs {other.ambient_dim}")


def rref(rows: Sequence[Sequence], ambient_dim: int | None = None) -> Subspace:
    """RREF basis of the row span of `rows`.

    `ambient_dim` is required when `rows` is empty and is validated otherwise.
    """
    rows = [list(vector(row)) for row in rows]
    if rows:
        n = len(rows[0])
        if any(len(row) != n for row in rows):
            raise MalformedInputError("ragged input rows")
        if ambient_dim is not None and ambient_dim != n:
            raise AmbientMismatchError(f"rows have length {n}, expected {ambient_dim}")
    else:
        if ambient_dim is None:
            raise MalformedInputError("empty input needs an explicit ambient dimension")
        n = ambient_dim
    if n < 1:
        raise MalformedInputError("ambient dimension must be >= 1")
    return Subspace(n, tuple(tuple(row) for row in _rref(rows)))


def span(vectors: Sequence[RVector], ambient_dim: int | None = None) -> Subspace:
    """Smallest subspace containing all given vectors."""
    return rref(list(vectors), ambient_dim=ambient_dim)


def kernel_basis(rows: Matrix) -> list[RVector]:
    """Basis of the right kernel {x : M x = 0} of the matrix with the given rows."""
    if not rows:
        raise MalformedInputError("kernel of an empty matrix is undefined without a width")
    ncols = len(rows[0])
    if any(len(row) != ncols for row in rows):
        raise MalformedInputError("ragged input rows")
    reduced = _rref([list(vector(row)) for row in rows])
    pivots = []
    for row in reduced:
        pivots.append(next(i for i, a in enumerate(row) if a != 0))
    free_cols = [c for c in range(ncols) if c not in pivots]
    basis = []
    for fc in free_cols:
        x = [Fraction(0)] * ncols
        x[fc] = Fraction(1)
        for row, pc in zip(reduced, pivots):
            x[pc] = -row[fc]
        basis.append(tuple(x))
    return basis


def identity_matrix(n: int) -> Matrix:
    return tuple(unit_vector(n, i) for i in range(n))


def mat_vec(rows: Matrix, v: RVector) -> RVector:
    return tuple(sum((a * b for a, b in zip(row, v)), Fraction(0)) for row in rows)


def mat_mul(a: Matrix, b: Matrix) -> Matrix:
    if not a or not b or len(a[0]) != len(b):
        raise MalformedInputError("incompatible matrix shapes")
    bt = list(zip(*b))
    return tuple(
        tuple(sum((x * y for x, y in zip(row, col)), Fraction(0)) for col in bt)
        for row in a)


def invert(matrix: Sequence[Sequence]) -> Matrix:
    """Inverse of a square rational matrix; raises InvalidBasisError if singular."""
    rows = [list(vector(row)) for row in matrix]
    n = len(rows)
    if n == 0 or any(len(row) != n for row in rows):
        raise InvalidBasisError("matrix is not square")
    augmented = [row + list(unit_vector(n, i)) for i, row in enumerate(rows)]
    reduced = _rref(augmented)
    if len(reduced) != n or any(reduced[i][i] != 1 for i in range(n)):
        raise InvalidBasisError("matrix is singular")
    return tuple(tuple(row[n:]) for row in reduced)
