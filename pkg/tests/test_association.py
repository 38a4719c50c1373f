"""Digraph builders, union-cell validation and the fine sequence."""

import random
from fractions import Fraction

import pytest

from algraph import catalog
from algraph.algebra import is_lie, is_solvable
from algraph.association import (
    Cell,
    build_GL,
    build_GO,
    build_GR,
    build_GU,
    check_union_cells,
    enumerate_cells,
    fine_sequence,
)
from algraph.errors import MalformedInputError
from algraph.graphs import Arrow, Colour3, Digraph, same_digraph
from conftest import random_algebra

F = Fraction


def test_builders_on_A2():
    A = catalog.default_instance("A2")  # x1 * x1 = x2
    gr = build_GR(A)
    assert [(a.pair(), a.weight) for a in gr.arrows] == [(("x1", "x2"), (F(1), F(0)))]
    gl = build_GL(A)
    assert [(a.pair(), a.weight) for a in gl.arrows] == [(("x1", "x2"), (F(1), F(0)))]
    go = build_GO(A)
    assert [(a.pair(), a.weight) for a in go.arrows] == [(("x1", "x1"), (F(0), F(1)))]

    gu = build_GU(A)
    by_pair = {a.pair(): a for a in gu.arrows}
    assert set(by_pair) == {("x1", "x1"), ("x1", "x2")}
    loop = by_pair[("x1", "x1")]
    assert loop.colour == Colour3((1, 0, 0))
    assert loop.weight == (F(0), F(1), F(0), F(0), F(0), F(0))
    edge = by_pair[("x1", "x2")]
    assert edge.colour == Colour3((0, 1, 1))
    assert edge.weight == (F(0), F(0), F(1), F(0), F(1), F(0))


def test_builders_agree_with_structure_constant_scan():
    rng = random.Random(61)
    for _ in range(50):
        A = random_algebra(rng, rng.randint(1, 5))
        lbl = A.basis_labels
        gr_pairs = {(lbl[i], lbl[l])
                    for (i, _j), coeffs in A.constants.items()
                    for l, c in enumerate(coeffs) if c != 0}
        gl_pairs = {(lbl[j], lbl[l])
                    for (_i, j), coeffs in A.constants.items()
                    for l, c in enumerate(coeffs) if c != 0}
        go_pairs = {(lbl[i], lbl[j]) for (i, j) in A.constants}
        assert build_GR(A).arrow_pairs() == gr_pairs
        assert build_GL(A).arrow_pairs() == gl_pairs
        assert build_GO(A).arrow_pairs() == go_pairs

        gu = build_GU(A)
        assert gu.arrow_pairs() == go_pairs | gr_pairs | gl_pairs
        n = A.dim
        for a in gu.arrows:
            memberships = (a.pair() in go_pairs, a.pair() in gr_pairs,
                           a.pair() in gl_pairs)
            assert a.colour.bits == tuple(int(m) for m in memberships)
            blocks = (a.weight[:n], a.weight[n:2 * n], a.weight[2 * n:])
            for member, block, g in zip(
                    memberships, blocks, (build_GO(A), build_GR(A), build_GL(A))):
                if member:
                    assert block == g.arrow(*a.pair()).weight
                else:
                    assert all(c == 0 for c in block)


def test_lie_fixtures_have_equal_action_digraphs():
    for name in catalog.fixture_names():
        A = catalog.default_instance(name)
        if is_lie(A):
            assert same_digraph(build_GR(A), build_GL(A)), name


def test_cells_of_A2_union_digraph():
    gu = build_GU(catalog.default_instance("A2"))
    cells = enumerate_cells(gu)
    assert cells == [Cell("x1", "x1", "x2")]
    assert cells[0].kind == "i=j"
    assert cells[0].arrows() == ((("x1", "x1")), ("x1", "x2"), ("x1", "x2"))
    assert Cell("a", "a", "a").kind == "i=j=k"
    assert Cell("a", "b", "b").kind == "j=k"
    assert Cell("a", "b", "a").kind == "i=k"
    assert Cell("a", "b", "c").kind == "general"


def test_check_union_cells_on_fixtures_and_randoms():
    for name in catalog.fixture_names():
        report = check_union_cells(build_GU(catalog.default_instance(name)))
        assert report.valid, (name, report.violations)
    rng = random.Random(67)
    for _ in range(40):
        A = random_algebra(rng, rng.randint(1, 5))
        assert check_union_cells(build_GU(A)).valid


def test_check_union_cells_rejects_bad_colourings():
    # triangle whose b-edge claims an operand role no cell supports
    counter = Digraph(
        ("i", "j", "k"),
        (Arrow("i", "k", None, Colour3((0, 1, 0))),
         Arrow("j", "k", None, Colour3((1, 0, 1))),
         Arrow("i", "j", None, Colour3((1, 0, 0)))))
    report = check_union_cells(counter)
    assert not report.valid
    assert (("j", "k"), "operand") in report.violations

    lonely = Digraph(("a", "b"), (Arrow("a", "b", None, Colour3((1, 0, 0))),))
    assert not check_union_cells(lonely).valid

    with pytest.raises(MalformedInputError):
        check_union_cells(Digraph(("a",), (Arrow("a", "a"),)))


def test_fine_sequence_of_edgeless_graph_is_immediate():
    gu = build_GU(catalog.default_instance("A1"))
    assert gu.arrows == ()
    assert fine_sequence(gu) == [gu]


def test_fine_sequence_reproduces_printed_example():
    A = catalog.default_instance("sec5_finesq_example")
    chain = fine_sequence(build_GU(A))
    assert len(chain) == 2
    final = chain[-1]
    assert set(final.vertices) == {"x3", "x4"}
    colours = {a.pair(): a.colour for a in final.arrows}
    assert colours == {
        ("x3", "x4"): Colour3((1, 1, 1)),
        ("x4", "x3"): Colour3((1, 1, 1)),
        ("x3", "x3"): Colour3((0, 1, 1)),
        ("x4", "x4"): Colour3((0, 1, 1)),
    }
    # the weight block of a cleared bit is zeroed alongside it
    n = len(build_GU(A).vertices)
    for a in final.arrows:
        for bit in range(3):
            if a.colour.bits[bit] == 0:
                assert all(c == 0 for c in a.weight[bit * n:(bit + 1) * n])
    # the derived series nevertheless reaches zero: the converse fails
    assert is_solvable(A) == (True, 3)


def test_fine_sequence_is_monotone():
    rng = random.Random(71)
    for _ in range(30):
        A = random_algebra(rng, rng.randint(1, 5))
        chain = fine_sequence(build_GU(A))
        assert len(chain) <= A.dim + 2
        for prev, nxt in zip(chain, chain[1:]):
            assert set(nxt.vertices) <= set(prev.vertices)
            assert nxt.arrow_pairs() <= prev.arrow_pairs()
            prev_colour = {a.pair(): a.colour for a in prev.arrows}
            for a in nxt.arrows:
                old = prev_colour[a.pair()].bits
                assert all(b <= o for b, o in zip(a.colour.bits, old))
        if not chain[-1].arrows:
            assert is_solvable(A)[0]
