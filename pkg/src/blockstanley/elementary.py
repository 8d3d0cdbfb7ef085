"""Elementary block decomposition: grid Newton space at generator coordinates."""

from __future__ import annotations

from bisect import bisect_right
from itertools import product
from typing import Sequence, Tuple

from .core import INF, Block, BlockDecomposition, MonomialIdeal, as_vector

CoordinateGrid = Tuple[Tuple[int, ...], ...]


def build_grid(I: MonomialIdeal) -> CoordinateGrid:
    """Per axis, the sorted distinct generator coordinates together with 0."""
    return tuple(
        tuple(sorted({0} | {g[i] for g in I.generators})) for i in range(I.n)
    )


def _cell(grid: CoordinateGrid, a: Sequence[int]) -> Block:
    outer = []
    for L, ai in zip(grid, a):
        k = L.index(ai)
        outer.append(L[k + 1] - 1 if k + 1 < len(L) else INF)
    return Block(tuple(a), tuple(outer))


def elementary_decomposition(I: MonomialIdeal) -> BlockDecomposition:
    """Grid cells lying outside ``I``, in ascending lex order of inner corner.

    ``itertools.product`` over sorted axes already yields lex order with the
    first coordinate most significant.
    """
    grid = build_grid(I)
    blocks = tuple(_cell(grid, a) for a in product(*grid) if a not in I)
    return BlockDecomposition(I.n, blocks)


def containing_block(I: MonomialIdeal, c: Sequence[int]) -> Block:
    """The elementary block holding the standard monomial ``c``.

    Its inner corner takes, on each axis, the largest grid value <= c_i.
    """
    c = as_vector(c)
    if len(c) != I.n:
        raise ValueError(f"dimension mismatch: {len(c)} != {I.n}")
    if c in I:
        raise ValueError(f"{c} lies in the ideal")
    grid = build_grid(I)
    a = tuple(L[bisect_right(L, ci) - 1] for L, ci in zip(grid, c))
    return _cell(grid, a)
