"""Subprime filtrations of ordered block decompositions.

An ordered decomposition ``B_1, ..., B_s`` of ``S/I`` is subprime when adding
the blocks one at a time to ``mon(I)`` yields the monomial set of an ideal at
every step.  A block can be added to an ideal ``J`` exactly when each of its
outer adjacent faces already lies in ``J``; the new ideal is then
``J + <inner corner>``.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product
from typing import List, Optional, Tuple

from .core import INF, Block, BlockDecomposition, MonomialIdeal

MAX_SEARCH_BLOCKS = 20


class SearchLimitExceeded(RuntimeError):
    """Ordering search refused: too many blocks for exhaustive backtracking."""


def outer_adjacent_face(B: Block, i: int) -> Block:
    """Block ``B`` with column ``i`` replaced by ``[b_i + 1, b_i + 1]``.

    Empty when column ``i`` is unbounded.  ``i`` is 0-based.
    """
    if not 0 <= i < B.dim:
        raise IndexError(f"axis {i} out of range for dimension {B.dim}")
    if B.is_empty():
        raise ValueError("block is empty")
    b = B.outer[i]
    if b is INF:
        return Block(B.inner, tuple(a - 1 for a in B.inner))
    inner = B.inner[:i] + (b + 1,) + B.inner[i + 1:]
    outer = B.outer[:i] + (b + 1,) + B.outer[i + 1:]
    return Block(inner, outer)


def block_in_ideal(C: Block, I: MonomialIdeal) -> bool:
    """Whether every point of ``C`` lies in ``I``, without enumerating ``C``.

    Ideal membership only changes where some coordinate crosses a generator
    coordinate, so it suffices to test the points whose coordinates are the
    inner corner or generator coordinates inside the block's range.
    """
    if C.is_empty():
        return True
    axes = []
    for i, (a, b) in enumerate(zip(C.inner, C.outer)):
        vals = {a} | {g[i] for g in I.generators if a < g[i] <= b}
        axes.append(sorted(vals))
    return all(p in I for p in product(*axes))


def block_meets_ideal(C: Block, I: MonomialIdeal) -> bool:
    """Whether ``C`` shares a point with ``I``: true iff some generator is
    below the outer corner once raised to the inner corner."""
    if C.is_empty():
        return False
    return any(
        all(max(a, g_i) <= b for a, g_i, b in zip(C.inner, g, C.outer))
        for g in I.generators
    )


def spans_ideal_with(B: Block, I: MonomialIdeal) -> bool:
    """True iff ``B ⊔ mon(I)`` is the monomial set of an ideal (then ``I + <inner(B)>``)."""
    if B.is_empty():
        raise ValueError("block is empty")
    if block_meets_ideal(B, I):
        raise ValueError("block intersects the ideal")
    return all(block_in_ideal(outer_adjacent_face(B, i), I) for i in range(B.dim))


def _check_disjoint(D: BlockDecomposition) -> None:
    if not D.is_disjoint():
        raise ValueError("blocks of the decomposition are not pairwise disjoint")


def is_subprime_ordered(D: BlockDecomposition, I: MonomialIdeal) -> bool:
    """Ordered criterion, applied incrementally: each nonempty block in
    turn must span an ideal with everything added so far."""
    _check_disjoint(D)
    J = I
    for B in D.blocks:
        if B.is_empty():
            continue
        if not spans_ideal_with(B, J):
            return False
        J = J.add(B.inner)
    return True


def exists_subprime_ordering(
    D: BlockDecomposition, I: MonomialIdeal, max_blocks: int = MAX_SEARCH_BLOCKS
) -> Optional[Tuple[int, ...]]:
    """Indices into ``D.blocks`` (nonempty ones only) giving a subprime order, or None.

    Depth-first search: at each step try the addable blocks in index order.
    The current ideal depends only on which blocks have been placed, so dead
    placed-sets are memoized.
    """
    _check_disjoint(D)
    live = [k for k, B in enumerate(D.blocks) if not B.is_empty()]
    if len(live) > max_blocks:
        raise SearchLimitExceeded(
            f"{len(live)} blocks exceeds the search cap of {max_blocks}"
        )
    dead = set()

    def search(placed: frozenset, J: MonomialIdeal, path: List[int]):
        if len(placed) == len(live):
            return tuple(path)
        if placed in dead:
            return None
        for k in live:
            if k in placed:
                continue
            B = D.blocks[k]
            if block_meets_ideal(B, J) or not spans_ideal_with(B, J):
                continue
            path.append(k)
            found = search(placed | {k}, J.add(B.inner), path)
            if found is not None:
                return found
            path.pop()
        dead.add(placed)
        return None

    return search(frozenset(), I, [])


@dataclass(frozen=True)
class Filtration:
    """``I_0 ⊂ I_1 ⊂ ... ⊂ I_s`` with ``blocks[k-1] = mon(I_k) \\ mon(I_{k-1})``."""

    ideals: Tuple[MonomialIdeal, ...]
    blocks: Tuple[Block, ...]

    def __post_init__(self):
        if len(self.ideals) != len(self.blocks) + 1:
            raise ValueError("a filtration needs one more ideal than blocks")

    def __len__(self):
        return len(self.blocks)


def subprime_filtration(D: BlockDecomposition, I: MonomialIdeal) -> Filtration:
    """Ideals obtained by adding each block's inner corner in turn, with
    generators that become redundant deleted."""
    if not is_subprime_ordered(D, I):
        raise ValueError("decomposition is not subprime in the given order")
    ideals = [I]
    blocks = []
    for B in D.blocks:
        if B.is_empty():
            continue
        ideals.append(ideals[-1].add(B.inner))
        blocks.append(B)
    if not ideals[-1].is_unit():
        raise ValueError("blocks do not exhaust the standard monomials")
    return Filtration(tuple(ideals), tuple(blocks))


def is_prime_filtration(F: Filtration) -> bool:
    return all(B.is_stanley() for B in F.blocks)

