"""Digraphs attached to finite-dimensional algebras by structure constants.

Core entry points: the `Algebra` type and series/identity oracles
(`algebra`), the digraph builders G_R / G_L / G_O / G_U (`association`),
graph algorithms (`graphs`), inverse constructions (`synthesis`), the
fixture catalog (`catalog`), and the CLI (`cli`).
"""

from .algebra import (
    Algebra,
    IdentityReport,
    SeriesResult,
    annihilator,
    change_basis,
    adapted_basis,
    check_identity,
    derived_series,
    is_lie,
    is_multiplicative_basis,
    is_nilpotent,
    is_solvable,
    left_normed_series,
    lower_central_series,
    product,
    right_annihilator,
    subspace_product,
)
from .association import (
    CellReport,
    build_GL,
    build_GO,
    build_GR,
    build_GU,
    check_union_cells,
    fine_sequence,
)
from .exactlin import RVector, Subspace, rref, span
from .graphs import (
    Arrow,
    Colour3,
    Digraph,
    chromatic_number,
    degrees,
    find_oriented_cycle,
    g_square,
    is_acyclic,
    isomorphic,
    nilindex_upper_bound,
    same_digraph,
    to_dot,
    topological_levels,
)
from .synthesis import (
    algebra_from_coloured_digraph,
    algebra_from_digraph,
    colouring_from_cells,
    orient_undirected,
)

__all__ = [name for name in dir() if not name.startswith("_")]
