import pytest
from hypothesis import given, settings, strategies as st

from blockstanley.core import Block, BlockDecomposition, MonomialIdeal
from blockstanley.elementary import elementary_decomposition
from blockstanley.gnomon import (
    add_generator,
    block_intersect_principal,
    block_subtract,
    cut_point,
    gnomon_decomposition,
)
from blockstanley.oracle import verify_partition

from helpers import (
    EX42_IDEAL,
    EX42_NATURAL,
    EX42_REVERSED,
    EX43_GNOMON,
    EX43_IDEAL,
    FIRST_GNOMON,
    FIRST_IDEAL,
    FIRST_PI_GNOMON,
    blk,
    blocks,
    bound_for,
    dec,
    ideal,
    ideals,
    points,
)

FULL2 = blk(("inf", "inf"), (0, 0))


def test_cut_point():
    assert cut_point(blk(("inf", 8), (3, 0)), (7, 5)) == (7, 5)
    assert cut_point(blk((9, 9), (5, 5)), (3, 3)) == (5, 5)
    assert cut_point(blk(("inf", "inf", 2), (0, 2, 0)), (3, 1, 1)) == (3, 2, 1)


def nonempty(pieces):
    return [B for B in pieces if not B.is_empty()]


def test_block_subtract_worked_steps():
    assert nonempty(block_subtract(FULL2, (3, 9))) == [blk((2, "inf"), (0, 0)), blk(("inf", 8), (3, 0))]
    left = blk((2, "inf"), (0, 0))
    pieces = block_subtract(left, (7, 5))
    assert pieces[0] == left and pieces[1].is_empty()
    right = blk(("inf", 4), (7, 0))
    assert nonempty(block_subtract(right, (3, 9))) == [right]
    assert nonempty(block_subtract(blk(("inf", 8), (3, 0)), (7, 5))) == [
        blk((6, 8), (3, 0)),
        blk(("inf", 4), (7, 0)),
    ]


def test_block_subtract_keeps_n_pieces():
    pieces = block_subtract(blk(("inf", "inf", 2), (0, 2, 0)), (3, 1, 1))
    assert len(pieces) == 3
    assert pieces[0] == blk((2, "inf", 2), (0, 2, 0))
    assert pieces[1].is_empty()
    assert pieces[2] == blk(("inf", "inf", 0), (3, 2, 0))


def test_block_intersect_principal_examples():
    assert block_intersect_principal(FULL2, (3, 9)) == blk(("inf", "inf"), (3, 9))
    X = block_intersect_principal(blk((2, "inf"), (0, 0)), (7, 5))
    assert X.is_empty()
    B = blk(("inf", 8), (3, 0))
    X = block_intersect_principal(B, (7, 5))
    assert X == blk(("inf", 8), (7, 5))
    assert points(X, 12) == {p for p in points(B, 12) if p[0] >= 7 and p[1] >= 5}


def test_add_generator():
    D = add_generator(dec(FULL2), (3, 9)).nonempty()
    assert list(D) == [blk((2, "inf"), (0, 0)), blk(("inf", 8), (3, 0))]
    assert list(add_generator(D, (7, 5)).nonempty()) == FIRST_GNOMON
    assert len(add_generator(D, (7, 5))) == 4
    assert len(add_generator(D, (0, 0)).nonempty()) == 0


def test_gnomon_examples():
    I = ideal(FIRST_IDEAL)
    assert list(gnomon_decomposition(I)) == FIRST_GNOMON
    assert list(gnomon_decomposition(I, [1, 0])) == FIRST_GNOMON
    assert list(gnomon_decomposition(I, pi=[1, 0])) == FIRST_PI_GNOMON
    J = ideal(EX42_IDEAL)
    assert list(gnomon_decomposition(J)) == EX42_NATURAL
    assert list(gnomon_decomposition(J, [1, 0])) == EX42_REVERSED
    assert list(gnomon_decomposition(ideal(EX43_IDEAL))) == EX43_GNOMON


def test_zero_ideal_and_bad_permutations():
    D = gnomon_decomposition(MonomialIdeal.zero(2))
    assert list(D) == [FULL2]
    with pytest.raises(ValueError):
        gnomon_decomposition(ideal(FIRST_IDEAL), pi=[0, 0])
    with pytest.raises(ValueError):
        gnomon_decomposition(ideal(FIRST_IDEAL), [0])


def _m(n):
    return st.tuples(*[st.integers(0, 7)] * n)


@given(st.integers(1, 4).flatmap(lambda n: st.tuples(blocks(n=n, allow_empty=True), _m(n))))
def test_block_subtract_matches_enumeration(case):
    B, m = case
    T = bound_for(B, m)
    expected = {p for p in points(B, T) if not all(mi <= x for mi, x in zip(m, p))}
    got = [points(P, T) for P in block_subtract(B, m)]
    assert sum(len(s) for s in got) == len(expected)
    assert set().union(*got) == expected


@given(st.integers(1, 4).flatmap(lambda n: st.tuples(blocks(n=n), _m(n))))
def test_telescoping_unions(case):
    B, m = case
    if not all(mi <= b for mi, b in zip(m, B.outer)):
        return
    T = bound_for(B, m)
    pieces = block_subtract(B, m)
    c = cut_point(B, m)
    tail = points(block_intersect_principal(B, m), T)
    for i in reversed(range(B.dim)):
        piece = points(pieces[i], T)
        assert not piece & tail
        tail |= piece
        assert tail == points(Block(c[:i] + B.inner[i:], B.outer), T)


@settings(max_examples=60, deadline=None)
@given(ideals(max_gens=4, top=4), st.randoms(use_true_random=False))
def test_gnomon_partitions_and_refines_elementary(I, rnd):
    order = list(range(len(I.generators)))
    rnd.shuffle(order)
    pi = list(range(I.n))
    rnd.shuffle(pi)
    D = gnomon_decomposition(I, order, pi)
    assert verify_partition(D, I)
    T = bound_for(*I.generators, *D.blocks)
    for E in elementary_decomposition(I):
        e = points(E, T)
        for B in D:
            inside = e & points(B, T)
            assert not inside or inside == e
