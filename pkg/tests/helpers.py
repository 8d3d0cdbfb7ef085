"""Shared strategies, worked-example fixtures and brute-force checks for the test suite.

The brute-force functions here work on explicit point sets and deliberately
avoid the library's own block and ideal logic.
"""

from __future__ import annotations

import random
from itertools import product

from hypothesis import strategies as st

from blockstanley.core import INF, Block, BlockDecomposition, MonomialIdeal, minimalize_generators


def blk(outer, inner):
    """Block written the way it is displayed: outer row first."""
    outer = tuple(INF if e in ("inf", None) else e for e in outer)
    return Block(tuple(inner), outer)


def dec(*blocks):
    return BlockDecomposition(blocks[0].dim, blocks)


# --- worked examples -------------------------------------------------------

FIRST_IDEAL = ((3, 9), (7, 5))
FIRST_ELEMENTARY = [
    blk((2, 4), (0, 0)),
    blk((2, 8), (0, 5)),
    blk((2, "inf"), (0, 9)),
    blk((6, 4), (3, 0)),
    blk((6, 8), (3, 5)),
    blk(("inf", 4), (7, 0)),
]
FIRST_GNOMON = [blk((2, "inf"), (0, 0)), blk((6, 8), (3, 0)), blk(("inf", 4), (7, 0))]
# Printed with outer (6, inf) for the middle block; that block would contain
# the generator (3, 9).  The algorithm gives outer (6, 8).
FIRST_PI_GNOMON = [blk(("inf", 4), (0, 0)), blk((6, 8), (0, 5)), blk((2, "inf"), (0, 9))]
FIRST_PI_GNOMON_AS_PRINTED = [
    blk(("inf", 4), (0, 0)),
    blk((6, "inf"), (0, 5)),
    blk((2, "inf"), (0, 9)),
]

BD1_IDEAL = ((1, 3), (3, 1))
BD1 = [blk(("inf", 0), (0, 0)), blk((0, "inf"), (0, 1)), blk((2, 2), (1, 1))]

EX42_IDEAL = ((5, 3, 7), (10, 6, 2))
EX42_NATURAL = [
    blk((4, "inf", "inf"), (0, 0, 0)),
    blk(("inf", 2, "inf"), (5, 0, 0)),
    blk((9, "inf", 6), (5, 3, 0)),
    blk(("inf", 5, 6), (10, 3, 0)),
    blk(("inf", "inf", 1), (10, 6, 0)),
]
EX42_REVERSED = [
    blk((4, "inf", "inf"), (0, 0, 0)),
    blk((9, 2, "inf"), (5, 0, 0)),
    blk((9, "inf", 6), (5, 3, 0)),
    blk(("inf", 2, "inf"), (10, 0, 0)),
    blk(("inf", 5, 6), (10, 3, 0)),
    blk(("inf", "inf", 1), (10, 6, 0)),
]

EX43_IDEAL = ((0, 0, 5), (0, 2, 3), (3, 1, 1))
EX43_GNOMON = [
    blk((2, 1, 4), (0, 0, 0)),
    blk(("inf", 0, 4), (3, 0, 0)),
    blk(("inf", 1, 0), (3, 1, 0)),
    blk((2, "inf", 2), (0, 2, 0)),
    blk(("inf", "inf", 0), (3, 2, 0)),
]
EX43_FILTRATION = [
    ((0, 0, 5), (0, 2, 3), (3, 1, 1)),
    ((0, 0, 5), (0, 2, 3), (3, 1, 1), (3, 2, 0)),
    ((0, 0, 5), (3, 1, 1), (0, 2, 0)),
    ((0, 0, 5), (0, 2, 0), (3, 1, 0)),
    ((0, 0, 5), (0, 2, 0), (3, 0, 0)),
    ((0, 0, 0),),
]

FIVE_BLOCKS = [
    blk((1, 0), (0, 0)),
    blk((0, 2), (0, 1)),
    blk((1, 1), (1, 1)),
    blk((2, 1), (2, 0)),
    blk((2, 2), (1, 2)),
]

N4_BLOCK = blk(("inf", "inf", 1, "inf"), (0, 0, 0, 0))

MS_IDEAL = ((1, 1, 1),)
MS_BLOCKS = [
    blk((0, 0, 0), (0, 0, 0)),
    blk(("inf", "inf", 0), (1, 0, 0)),
    blk((0, "inf", "inf"), (0, 1, 0)),
    blk(("inf", 0, "inf"), (0, 0, 1)),
]


def ideal(gens, n=None):
    return minimalize_generators(gens, n=n)


# --- brute force ----------------------------------------------------------

def bound_for(*things) -> int:
    """max finite coordinate among vectors/blocks, plus 2."""
    top = 0
    for t in things:
        if isinstance(t, Block):
            vals = list(t.inner) + [b for b in t.outer if b is not INF]
        else:
            vals = list(t)
        top = max([top] + [v for v in vals if v >= 0])
    return top + 2


def grid(n, T):
    return product(range(T), repeat=n)


def points(B: Block, T: int) -> set:
    """Points of ``B`` inside ``[0, T)^n``."""
    ranges = []
    for a, b in zip(B.inner, B.outer):
        hi = T - 1 if b is INF else min(b, T - 1)
        ranges.append(range(a, hi + 1))
    return set(product(*ranges))


def in_ideal(gens, p) -> bool:
    return any(all(g_i <= x for g_i, x in zip(g, p)) for g in gens)


def upward_closed(S: set, n: int, T: int) -> bool:
    for p in S:
        for i in range(n):
            if p[i] + 1 < T:
                q = p[:i] + (p[i] + 1,) + p[i + 1:]
                if q not in S:
                    return False
    return True


def min_stanley_partition(B: Block, window: int = 2) -> int:
    """Fewest Stanley blocks partitioning ``B``, by exhaustive search.

    Unbounded columns are cut to ``[a_i, a_i + window]``; each candidate piece
    fixes some columns and runs the others (unbounded in ``B``) to the window
    top.  Restricting a partition of ``B`` to the window gives one of these, so
    the search result is a lower bound for ``B`` itself.
    """
    n = B.dim
    unb = [i for i in range(n) if B.outer[i] is INF]
    tops = [B.inner[i] + window if B.outer[i] is INF else B.outer[i] for i in range(n)]
    cells = sorted(product(*(range(B.inner[i], tops[i] + 1) for i in range(n))))
    best = [len(cells) + 1]

    def piece(base, free):
        ranges = [range(base[i], tops[i] + 1) if i in free else (base[i],) for i in range(n)]
        return set(product(*ranges))

    frees = [frozenset(i for k, i in enumerate(unb) if mask >> k & 1) for mask in range(1 << len(unb))]

    def search(covered, count):
        if count >= best[0]:
            return
        rest = [p for p in cells if p not in covered]
        if not rest:
            best[0] = count
            return
        # every piece fixes the bounded columns, so it serves a single fiber
        if count + len({_fiber(q, unb) for q in rest}) >= best[0]:
            return
        p = rest[0]  # lex-least uncovered point must be the base of its piece
        for free in sorted(frees, key=len, reverse=True):
            cells_p = piece(p, free)
            if cells_p & covered:
                continue
            search(covered | cells_p, count + 1)

    search(frozenset(), 0)
    return best[0]


def _fiber(p, unb):
    return tuple(x for i, x in enumerate(p) if i not in unb)


# --- random generation ----------------------------------------------------

def random_ideal(rng: random.Random, n: int, r: int, top: int = 6) -> MonomialIdeal:
    """Ideal with exactly ``r`` minimal generators, coordinates <= top."""
    if n == 1 and r > 1:
        raise ValueError("a principal ideal is the only option in one variable")
    while True:
        gens = [tuple(rng.randint(0, top) for _ in range(n)) for _ in range(r)]
        I = minimalize_generators(gens, n=n)
        if len(I.generators) == r and (0,) * n not in I.generators:
            return I


def random_block(rng: random.Random, n: int, top: int = 6, inf_rate: float = 0.3) -> Block:
    inner, outer = [], []
    for _ in range(n):
        a = rng.randint(0, top)
        inner.append(a)
        outer.append(INF if rng.random() < inf_rate else rng.randint(a, top))
    return Block(tuple(inner), tuple(outer))


@st.composite
def blocks(draw, n=None, top=6, allow_empty=False):
    n = draw(st.integers(1, 4)) if n is None else n
    inner = draw(st.lists(st.integers(0, top), min_size=n, max_size=n))
    outer = []
    for a in inner:
        lo = -1 if allow_empty else a
        outer.append(draw(st.one_of(st.just(INF), st.integers(max(lo, -1), top))))
    return Block(tuple(inner), tuple(outer))


@st.composite
def ideals(draw, n=None, max_gens=5, top=6):
    n = draw(st.integers(1, 4)) if n is None else n
    gens = draw(
        st.lists(st.tuples(*[st.integers(0, top)] * n), min_size=0, max_size=max_gens)
    )
    return minimalize_generators(gens, n=n)
