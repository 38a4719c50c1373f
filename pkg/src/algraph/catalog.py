"""Named algebra fixtures with their claimed properties.

Every fixture ships the printed multiplication law (1-based indices in the
builders, matching the usual presentation).  Claims that are verifiable by
the series/identity oracles live in `claims`; printed numeric values that the
oracles must re-derive (and may contradict) live in `printed_claims` so a
mismatch can be surfaced as a flagged discrepancy instead of silent trust.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Mapping

from .algebra import Algebra
from .errors import ConstraintError, MalformedInputError, UnknownFixtureError

# a product entry: (left index, right index, {coord index: coeff}), 1-based
Law = list[tuple[int, int, dict[int, Fraction]]]


@dataclass(frozen=True)
class Constraint:
    description: str
    predicate: Callable[[Mapping[str, Fraction]], bool]


@dataclass(frozen=True)
class Fixture:
    name: str
    dim: int
    build_law: Callable[[Mapping[str, Fraction]], Law]
    param_names: tuple[str, ...] = ()
    constraints: tuple[Constraint, ...] = ()
    default_params: dict = field(default_factory=dict)
    lie_complete: bool = False
    claims: dict = field(default_factory=dict)
    printed_claims: dict = field(default_factory=dict)


def _nonzero(*names: str) -> tuple[Constraint, ...]:
    return tuple(
        Constraint(f"{name} != 0", lambda p, name=name: p[name] != 0) for name in names)


def antisymmetric_completion(dim: int, law: Law) -> Law:
    """Materialize the missing bracket orientations of a Lie-declared law.

    For every listed product (i, j) with i != j whose opposite orientation is
    absent, add (j, i) with negated coefficients.  Listed opposite pairs are
    kept as printed.
    """
    present = {(i, j) for (i, j, _) in law}
    completed = list(law)
    for (i, j, coeffs) in law:
        if i != j and (j, i) not in present:
            completed.append((j, i, {k: -c for k, c in coeffs.items()}))
    return completed


def _instantiate_law(fixture: Fixture, params: Mapping[str, Fraction]) -> Algebra:
    law = fixture.build_law(params)
    if fixture.lie_complete:
        law = antisymmetric_completion(fixture.dim, law)
    products = [(i - 1, j - 1, {k - 1: c for k, c in coeffs.items()})
                for (i, j, coeffs) in law]
    return Algebra.from_products(fixture.dim, products)


def _const(law: Law) -> Callable[[Mapping[str, Fraction]], Law]:
    return lambda _params: law


def _r(x) -> Fraction:
    return Fraction(x)


_TWO_DIM_COMMON = {"leibniz": True}


def _fixtures() -> list[Fixture]:
    out: list[Fixture] = []

    out.append(Fixture(
        "A1", 2, _const([]),
        claims={"leibniz": True, "lie": True, "nilpotent": True, "solvable": True}))
    out.append(Fixture(
        "A2", 2, _const([(1, 1, {2: _r(1)})]),
        claims={"leibniz": True, "lie": False, "nilpotent": True, "solvable": True}))
    out.append(Fixture(
        "A3", 2, _const([(1, 2, {1: _r(1)})]),
        claims={"leibniz": True, "lie": False, "nilpotent": False, "solvable": True}))
    out.append(Fixture(
        "A4", 2, _const([(1, 2, {2: _r(1)}), (2, 1, {2: _r(-1)})]),
        claims={"leibniz": True, "lie": True, "nilpotent": False, "solvable": True}))

    out.append(Fixture(
        "A2_1", 2, _const([(2, 2, {1: _r(1)})]),
        claims={"leibniz": True, "lie": False, "nilpotent": True, "solvable": True}))
    out.append(Fixture(
        "A2_2", 2,
        lambda p: [
            (1, 1, {1: -p["b"], 2: p["b"] ** 2 / p["a"]}),
            (1, 2, {1: -p["a"], 2: p["b"]}),
            (2, 1, {1: -p["a"], 2: p["b"]}),
            (2, 2, {1: -p["a"] ** 2 / p["b"], 2: p["a"]}),
        ],
        param_names=("a", "b"),
        constraints=_nonzero("a", "b"),
        default_params={"a": _r(1), "b": _r(1)},
        claims={"leibniz": True, "lie": False, "nilpotent": True, "solvable": True}))

    out.append(Fixture(
        "A3_1", 2, _const([(1, 1, {2: _r(1)}), (2, 1, {2: _r(1)})]),
        claims={"leibniz": True, "lie": False, "nilpotent": False, "solvable": True}))
    out.append(Fixture(
        "A3_2", 2, _const([(2, 2, {1: _r(1)}), (1, 2, {1: _r(1)})]),
        claims={"leibniz": True, "lie": False, "nilpotent": False, "solvable": True}))
    out.append(Fixture(
        "A3_3", 2, _const([(2, 1, {2: _r(1)})]),
        claims={"leibniz": True, "lie": False, "nilpotent": False, "solvable": True}))
    out.append(Fixture(
        "A3_4", 2,
        lambda p: [
            (2, 1, {1: -p["d"], 2: p["c"]}),
            (2, 2, {1: -p["d"] ** 2 / p["c"], 2: p["d"]}),
        ],
        param_names=("c", "d"),
        constraints=_nonzero("c", "d"),
        default_params={"c": _r(1), "d": _r(1)},
        claims={"leibniz": True, "lie": False, "nilpotent": False, "solvable": True}))
    out.append(Fixture(
        "A3_5", 2,
        lambda p: [
            (1, 1, {1: -p["e"] * p["g"] / p["f"], 2: p["e"]}),
            # first coefficient corrected to -e*g^2/f^2: the printed law fails the
            # Leibniz identity unless f = 1, and this is the unique repair
            (1, 2, {1: -p["e"] * p["g"] ** 2 / p["f"] ** 2, 2: p["e"] * p["g"] / p["f"]}),
            (2, 1, {1: -p["g"], 2: p["f"]}),
            (2, 2, {1: -p["g"] ** 2 / p["f"], 2: p["g"]}),
        ],
        param_names=("e", "f", "g"),
        constraints=_nonzero("e", "f", "g") + (
            Constraint("g*(f^2 - e*g) != 0",
                       lambda p: p["g"] * (p["f"] ** 2 - p["e"] * p["g"]) != 0),),
        default_params={"e": _r(1), "f": _r(2), "g": _r(1)},
        claims={"leibniz": True, "lie": False, "nilpotent": False, "solvable": True}))
    out.append(Fixture(
        "A3_6", 2,
        lambda p: [
            (1, 2, {1: p["i"], 2: -p["h"]}),
            (1, 1, {1: p["h"], 2: -p["h"] ** 2 / p["i"]}),
        ],
        param_names=("h", "i"),
        constraints=_nonzero("h", "i"),
        default_params={"h": _r(1), "i": _r(1)},
        claims={"leibniz": True, "lie": False, "nilpotent": False, "solvable": True}))

    out.append(Fixture(
        "A4_1", 2, _const([(2, 1, {1: _r(1)}), (1, 2, {1: _r(-1)})]),
        claims={"leibniz": True, "lie": True, "nilpotent": False, "solvable": True}))
    out.append(Fixture(
        "A4_2", 2,
        lambda p: [
            (1, 2, {1: -p["j"], 2: -p["k"]}),
            (2, 1, {1: p["j"], 2: p["k"]}),
        ],
        param_names=("j", "k"),
        constraints=_nonzero("j", "k"),
        default_params={"j": _r(1), "k": _r(1)},
        claims={"leibniz": True, "lie": True, "nilpotent": False, "solvable": True}))

    # group algebra of the order-2 group, stored exactly as printed
    out.append(Fixture(
        "group_algebra_Z2", 2,
        _const([
            (1, 1, {1: _r(1)}),
            (1, 2, {1: _r(1)}),
            (2, 1, {1: _r(1)}),
            (2, 2, {2: _r(1)}),
        ]),
        claims={"associative": True}))

    # 4-dim algebra whose G_R has an indegree-zero vertex (x4)
    out.append(Fixture(
        "example_G2", 4,
        _const([
            (1, 2, {3: _r(2), 2: _r(-1)}),
            (1, 1, {2: _r(-1)}),
            (2, 4, {1: _r(1)}),
            (4, 1, {1: _r(-1)}),
        ]),
        claims={}))

    # canonical loops-only law x_i * x_i = x_i; fails the Leibniz identity
    out.append(Fixture(
        "sec4_loops_witness", 3,
        _const([(i, i, {i: _r(1)}) for i in (1, 2, 3)]),
        claims={"leibniz": False}))

    out.append(Fixture(
        "sec4_nonlie_3dim", 3,
        lambda p: [
            (1, 2, {3: p["alpha"]}),
            (2, 1, {3: p["beta"]}),
        ],
        param_names=("alpha", "beta"),
        constraints=(
            Constraint("alpha*beta != 0", lambda p: p["alpha"] * p["beta"] != 0),
            Constraint("beta != -alpha", lambda p: p["beta"] != -p["alpha"]),
        ),
        default_params={"alpha": _r(1), "beta": _r(1)},
        claims={"leibniz": True, "lie": False, "gr_gl_same": True,
                "nilpotent": True, "solvable": True}))

    # nilpotent Lie algebra whose G_R nevertheless has oriented cycles;
    # only one orientation per bracket is printed
    out.append(Fixture(
        "sec4_cyclic_lie", 4,
        _const([
            (1, 3, {2: _r(1), 3: _r(1)}),
            (1, 2, {2: _r(-1), 3: _r(-1)}),
            (2, 4, {1: _r(1)}),
            (4, 1, {2: _r(-1), 3: _r(-1)}),
            (3, 4, {1: _r(-1)}),
        ]),
        lie_complete=True,
        claims={"leibniz": True, "lie": True, "nilpotent": True, "solvable": True},
        printed_claims={"nilindex": 3}))

    out.append(Fixture(
        "sec4_solvable_cycles", 4,
        _const([
            (1, 3, {1: _r(1)}),
            (2, 4, {2: _r(1)}),
            (4, 2, {2: _r(-1)}),
        ]),
        claims={"leibniz": True, "nilpotent": False, "solvable": True}))

    out.append(Fixture(
        "sec5_operands_example", 4,
        _const([
            (1, 2, {3: _r(2), 1: _r(-1)}),
            (1, 1, {2: _r(-1)}),
            (2, 3, {4: _r(1)}),
            (3, 1, {1: _r(2)}),
        ]),
        claims={}))

    out.append(Fixture(
        "sec5_finesq_example", 4,
        _const([
            (1, 2, {3: _r(1), 4: _r(1)}),
            (2, 1, {3: _r(-1), 4: _r(-1)}),
            (3, 4, {3: _r(1), 4: _r(1)}),
            (4, 3, {3: _r(-1), 4: _r(-1)}),
        ]),
        claims={"solvable": True},
        printed_claims={"solvability_index": 3, "derived_term_2_span": ["x3", "x4"]}))

    return out


_FIXTURES: dict[str, Fixture] = {f.name: f for f in _fixtures()}


def fixture(name: str) -> Fixture:
    try:
        return _FIXTURES[name]
    except KeyError:
        raise UnknownFixtureError(name) from None


def fixture_names() -> list[str]:
    return list(_FIXTURES)


def list_fixtures() -> list[tuple[str, int, dict]]:
    """(name, dimension, claims) for every fixture, in stable catalog order."""
    return [(f.name, f.dim, dict(f.claims)) for f in _FIXTURES.values()]


def instantiate(name: str, params: Mapping | None = None) -> Algebra:
    """Build the named fixture with the given parameters.

    Missing parameters are an error; constraint violations raise
    ConstraintError naming the failing predicate.
    """
    fx = fixture(name)
    params = {k: Fraction(v) for k, v in (params or {}).items()}
    if set(params) != set(fx.param_names):
        raise MalformedInputError(
            f"fixture {name!r} takes parameters {sorted(fx.param_names)}, got {sorted(params)}")
    for constraint in fx.constraints:
        if not constraint.predicate(params):
            raise ConstraintError(name, constraint.description)
    return _instantiate_law(fx, params)


def default_instance(name: str) -> Algebra:
    """The fixture instantiated at its default (constraint-respecting) parameters."""
    return instantiate(name, fixture(name).default_params)


def default_instances() -> list[tuple[str, Algebra]]:
    return [(name, default_instance(name)) for name in fixture_names()]


def sample_params(fx: Fixture, count: int = 3) -> list[dict[str, Fraction]]:
    """Deterministic small nonzero rational samples satisfying the constraints."""
    pool = [Fraction(1), Fraction(-1), Fraction(2), Fraction(-2), Fraction(1, 2)]
    if not fx.param_names:
        return [{}] if count else []
    samples = []
    # stride through the cartesian grid for variety between parameters
    import itertools
    for combo in itertools.product(pool, repeat=len(fx.param_names)):
        params = dict(zip(fx.param_names, combo))
        if all(c.predicate(params) for c in fx.constraints):
            samples.append(params)
            if len(samples) == count:
                break
    return samples
