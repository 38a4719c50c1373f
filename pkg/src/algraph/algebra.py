"""Finite-dimensional algebras given by structure constants.

Products, lower central / derived / left-normed series, annihilators,
identity checks (Leibniz, Jacobi, antisymmetry), multiplicative bases and
changes of basis.  Basis indices are 0-based internally; reported series
indices follow the usual 1-based convention (minimal m with term m = {0}).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Mapping, Sequence

from . import exactlin
from .errors import (
    AmbientMismatchError,
    InvalidBasisError,
    MalformedInputError,
    PreconditionError,
)
from .exactlin import Matrix, RVector, Subspace

LOWER_CENTRAL = "lower_central"
DERIVED = "derived"
LEFT_NORMED = "left_normed"

LEIBNIZ = "leibniz"
JACOBI = "jacobi"
ANTISYMMETRY = "antisymmetry"


def default_labels(dim: int) -> tuple[str, ...]:
    return tuple(f"x{i + 1}" for i in range(dim))


@dataclass(frozen=True)
class Algebra:
    """An algebra on a fixed basis, determined by its structure constants.

    `constants` maps a pair of 0-based basis indices (i, j) to the coordinate
    vector of x_i * x_j; absent entries mean the zero product and all-zero
    vectors are normalized away at construction.
    """

    dim: int
    basis_labels: tuple[str, ...]
    constants: Mapping[tuple[int, int], RVector]

    def __post_init__(self):
        if self.dim < 1:
            raise MalformedInputError("algebra dimension must be >= 1")
        if len(self.basis_labels) != self.dim:
            raise MalformedInputError("basis label count differs from dimension")
        if len(set(self.basis_labels)) != self.dim or any(not s for s in self.basis_labels):
            raise MalformedInputError("basis labels must be distinct and non-empty")
        cleaned = {}
        for (i, j), coeffs in self.constants.items():
            if not (0 <= i < self.dim and 0 <= j < self.dim):
                raise MalformedInputError(f"product index ({i}, {j}) out of range")
            v = exactlin.vector(coeffs)
            if len(v) != self.dim:
                raise MalformedInputError(f"product ({i}, {j}) has a coordinate vector of wrong length")
            if not exactlin.is_zero_vector(v):
                cleaned[(i, j)] = v
        object.__setattr__(self, "constants", cleaned)

    @classmethod
    def from_products(cls, dim: int,
                      products: Iterable[tuple[int, int, Mapping[int, object]]],
                      labels: Sequence[str] | None = None) -> "Algebra":
        """Build an algebra from sparse products (i, j, {k: coeff}), 0-based."""
        constants: dict[tuple[int, int], RVector] = {}
        for i, j, coeffs in products:
            if (i, j) in constants:
                raise MalformedInputError(f"duplicate product entry for ({i}, {j})")
            v = [Fraction(0)] * dim
            for k, c in coeffs.items():
                if not 0 <= k < dim:
                    raise MalformedInputError(f"coordinate index {k} out of range")
                v[k] = Fraction(c)
            constants[(i, j)] = tuple(v)
        return cls(dim, tuple(labels) if labels else default_labels(dim), constants)

    def basis_product(self, i: int, j: int) -> RVector:
        return self.constants.get((i, j), exactlin.zero_vector(self.dim))

    def label_index(self, label: str) -> int:
        try:
            return self.basis_labels.index(label)
        except ValueError:
            raise MalformedInputError(f"unknown basis label {label!r}") from None


@dataclass(frozen=True)
class SeriesResult:
    """Successive terms of a series with stabilization metadata.

    `terms` starts at the full space and stops at the first zero term or the
    first term equal to its predecessor (the repeat itself is not stored).
    `stabilized_at` is the 1-based index of the last stored term.
    """

    kind: str
    terms: tuple[Subspace, ...]
    stabilized_at: int
    converges_to_zero: bool
    index_if_zero: int | None


@dataclass(frozen=True)
class IdentityReport:
    """Violations of an identity on basis tuples; empty <=> identity holds."""

    identity: str
    violations: tuple[tuple[tuple[int, ...], RVector], ...]

    @property
    def holds(self) -> bool:
        return not self.violations


def product(A: Algebra, u: RVector, v: RVector) -> RVector:
    """Bilinear extension of the structure constants to arbitrary elements."""
    if len(u) != A.dim or len(v) != A.dim:
        raise AmbientMismatchError("operand length differs from the algebra dimension")
    out = [Fraction(0)] * A.dim
    for (i, j), coeffs in A.constants.items():
        factor = u[i] * v[j]
        if factor != 0:
            for k, c in enumerate(coeffs):
                if c != 0:
                    out[k] += factor * c
    return tuple(out)


def subspace_product(A: Algebra, S: Subspace, T: Subspace) -> Subspace:
    """Span of the pairwise products of the two subspaces' basis vectors."""
    if S.ambient_dim != A.dim or T.ambient_dim != A.dim:
        raise AmbientMismatchError("subspace ambient dimension differs from the algebra dimension")
    vectors = [product(A, s, t) for s in S.basis_rows for t in T.basis_rows]
    return exactlin.span(vectors, ambient_dim=A.dim)


def _run_series(A: Algebra, kind: str, step) -> SeriesResult:
    full = Subspace.full(A.dim)
    terms = [full]
    while True:
        nxt = step(terms[-1])
        if nxt.dim == 0:
            terms.append(nxt)
            m = len(terms)
            return SeriesResult(kind, tuple(terms), m, True, m)
        if nxt == terms[-1]:
            return SeriesResult(kind, tuple(terms), len(terms), False, None)
        terms.append(nxt)


def lower_central_series(A: Algebra) -> SeriesResult:
    """A^1 = A, A^{k+1} = A^k * A."""
    full = Subspace.full(A.dim)
    return _run_series(A, LOWER_CENTRAL, lambda S: subspace_product(A, S, full))


def derived_series(A: Algebra) -> SeriesResult:
    """A^[1] = A, A^[s+1] = A^[s] * A^[s]."""
    return _run_series(A, DERIVED, lambda S: subspace_product(A, S, S))


def left_normed_series(A: Algebra) -> SeriesResult:
    """A^(1) = A, A^(i) = A * A^(i-1)."""
    full = Subspace.full(A.dim)
    return _run_series(A, LEFT_NORMED, lambda S: subspace_product(A, full, S))


def is_nilpotent(A: Algebra) -> tuple[bool, int | None]:
    """Verdict and 1-based nilindex read off the lower central series."""
    result = lower_central_series(A)
    return result.converges_to_zero, result.index_if_zero


def is_solvable(A: Algebra) -> tuple[bool, int | None]:
    """Verdict and 1-based solvability index read off the derived series."""
    result = derived_series(A)
    return result.converges_to_zero, result.index_if_zero


def right_annihilator(A: Algebra) -> Subspace:
    """{x : A * x = 0}, the kernel of the stacked left-multiplication maps."""
    rows = []
    for i in range(A.dim):
        for k in range(A.dim):
            rows.append(tuple(A.basis_product(i, j)[k] for j in range(A.dim)))
    return exactlin.span(exactlin.kernel_basis(tuple(rows)), ambient_dim=A.dim)


def left_annihilator(A: Algebra) -> Subspace:
    """{x : x * A = 0}."""
    rows = []
    for j in range(A.dim):
        for k in range(A.dim):
            rows.append(tuple(A.basis_product(i, j)[k] for i in range(A.dim)))
    return exactlin.span(exactlin.kernel_basis(tuple(rows)), ambient_dim=A.dim)


def annihilator(A: Algebra) -> Subspace:
    """{x : x * A = A * x = 0}."""
    return left_annihilator(A).intersect(right_annihilator(A))


def _leibniz_residual(A: Algebra, x: RVector, y: RVector, z: RVector) -> RVector:
    xy_z = product(A, product(A, x, y), z)
    xz_y = product(A, product(A, x, z), y)
    x_yz = product(A, x, product(A, y, z))
    return tuple(a - b - c for a, b, c in zip(xy_z, xz_y, x_yz))


def _jacobi_residual(A: Algebra, x: RVector, y: RVector, z: RVector) -> RVector:
    t1 = product(A, product(A, x, y), z)
    t2 = product(A, product(A, y, z), x)
    t3 = product(A, product(A, z, x), y)
    return tuple(a + b + c for a, b, c in zip(t1, t2, t3))


def check_identity(A: Algebra, which: str) -> IdentityReport:
    """Evaluate an identity on all basis tuples (pairs for antisymmetry).

    Bilinearity makes the basis checks sufficient for the whole algebra.
    """
    basis = [exactlin.unit_vector(A.dim, i) for i in range(A.dim)]
    violations = []
    if which == ANTISYMMETRY:
        for i in range(A.dim):
            for j in range(i, A.dim):
                residual = exactlin.vec_add(A.basis_product(i, j), A.basis_product(j, i))
                if i == j:
                    residual = A.basis_product(i, i)
                if not exactlin.is_zero_vector(residual):
                    violations.append(((i, j), residual))
        return IdentityReport(which, tuple(violations))
    if which == LEIBNIZ:
        residual_fn = _leibniz_residual
    elif which == JACOBI:
        residual_fn = _jacobi_residual
    else:
        raise MalformedInputError(f"unknown identity {which!r}")
    for i in range(A.dim):
        for j in range(A.dim):
            for k in range(A.dim):
                residual = residual_fn(A, basis[i], basis[j], basis[k])
                if not exactlin.is_zero_vector(residual):
                    violations.append(((i, j, k), residual))
    return IdentityReport(which, tuple(violations))


def is_lie(A: Algebra) -> bool:
    return check_identity(A, ANTISYMMETRY).holds and check_identity(A, JACOBI).holds


def is_multiplicative_basis(A: Algebra) -> bool:
    """True iff every basis product is a scalar multiple of one basis element."""
    return all(sum(1 for c in coeffs if c != 0) <= 1 for coeffs in A.constants.values())


def change_basis(A: Algebra, P: Sequence[Sequence]) -> Algebra:
    """Transport the structure constants to the basis y_i = sum_j P[i][j] x_j."""
    P = tuple(exactlin.vector(row) for row in P)
    if len(P) != A.dim or any(len(row) != A.dim for row in P):
        raise InvalidBasisError("change-of-basis matrix must be square of the algebra dimension")
    P_inv = exactlin.invert(P)
    constants: dict[tuple[int, int], RVector] = {}
    for i in range(A.dim):
        for j in range(A.dim):
            w = product(A, P[i], P[j])
            if exactlin.is_zero_vector(w):
                continue
            # coordinates in the new basis: alpha with alpha . P = w
            constants[(i, j)] = tuple(
                sum((w[k] * P_inv[k][m] for k in range(A.dim)), Fraction(0))
                for m in range(A.dim))
    return Algebra(A.dim, A.basis_labels, constants)


def adapted_basis(A: Algebra) -> Matrix:
    """Basis matrix layering A by its lower central series.

    Rows are lifts of bases of A^i / A^{i+1}, level by level, so that the
    transported algebra's action-to-the-right digraph has no oriented cycles.
    Requires the lower central series to converge to {0}.
    """
    series = lower_central_series(A)
    if not series.converges_to_zero:
        raise PreconditionError("adapted_basis requires the lower central series to reach {0}")
    rows: list[RVector] = []
    terms = series.terms
    for level in range(len(terms) - 1):
        upper, lower = terms[level], terms[level + 1]
        accumulated = list(lower.basis_rows)
        for candidate in upper.basis_rows:
            current = exactlin.span(accumulated, ambient_dim=A.dim)
            if not current.contains(candidate):
                rows.append(candidate)
                accumulated.append(candidate)
    if len(rows) != A.dim:
        raise PreconditionError("series levels do not fill the whole space")
    return tuple(rows)
