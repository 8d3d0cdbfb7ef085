"""Brute-force ground truth on a finite grid ``[0, T)^n``.

If every generator coordinate and every finite block bound is below ``T - 1``,
clamping a point's coordinates to ``T - 1`` changes neither its ideal
membership nor its membership in any block.  A partition check on the grid
therefore certifies the partition of all of ``N^n``.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product
from typing import Iterable, Optional, Set, Tuple

import numpy as np

from .core import INF, Block, BlockDecomposition, MonomialIdeal

Point = Tuple[int, ...]


def _max_coordinate(I: MonomialIdeal, blocks: Iterable[Block]) -> int:
    top = 0
    for g in I.generators:
        top = max(top, *g)
    for B in blocks:
        top = max(top, *B.inner)
        top = max([top] + [b for b in B.outer if b is not INF])
    return top


def sufficient_truncation(I: MonomialIdeal, D: BlockDecomposition | None = None) -> int:
    return _max_coordinate(I, D.blocks if D is not None else ()) + 2


def clamp(p: Point, T: int) -> Point:
    return tuple(min(c, T - 1) for c in p)


def ideal_mask(I: MonomialIdeal, T: int) -> np.ndarray:
    """Boolean array over ``[0, T)^n``: True where the point lies in ``I``."""
    mask = np.zeros((T,) * I.n, dtype=bool)
    for g in I.generators:
        mask[tuple(slice(gi, None) for gi in g)] = True
    return mask


def _block_slices(B: Block, T: int):
    return tuple(
        slice(a, T if b is INF else min(b, T - 1) + 1) for a, b in zip(B.inner, B.outer)
    )


def coverage(D: BlockDecomposition, T: int) -> np.ndarray:
    """How many blocks of ``D`` contain each point of ``[0, T)^n``."""
    counts = np.zeros((T,) * D.n, dtype=np.int32)
    for B in D.blocks:
        if not B.is_empty():
            counts[_block_slices(B, T)] += 1
    return counts


def truncated_points(B: Block, T: int) -> Set[Point]:
    """Points of ``B`` with every coordinate below ``T``."""
    if B.is_empty():
        return set()
    ranges = [range(a, T if b is INF else min(b, T - 1) + 1) for a, b in zip(B.inner, B.outer)]
    return set(product(*ranges))


def enumerate_standard_monomials(I: MonomialIdeal, T: int) -> Set[Point]:
    if T < 1:
        raise ValueError("truncation bound must be >= 1")
    return {tuple(int(c) for c in p) for p in np.argwhere(~ideal_mask(I, T))}


@dataclass(frozen=True)
class PartitionReport:
    ok: bool
    truncation: int
    counterexample: Optional[Point] = None
    reason: str = ""

    def __bool__(self):
        return self.ok


def verify_partition(
    D: BlockDecomposition, I: MonomialIdeal, T: int | None = None
) -> PartitionReport:
    """Check that the nonempty blocks of ``D`` partition the standard monomials of ``I``.

    On failure the lexicographically least offending point is reported.
    """
    if D.n != I.n:
        raise ValueError(f"dimension mismatch: {D.n} != {I.n}")
    needed = sufficient_truncation(I, D)
    if T is None:
        T = needed
    elif T < needed:
        raise ValueError(f"truncation {T} is below the sufficient bound {needed}")
    in_ideal = ideal_mask(I, T)
    counts = coverage(D, T)
    expected = (~in_ideal).astype(np.int32)
    bad = np.argwhere(counts != expected)
    if len(bad) == 0:
        return PartitionReport(True, T)
    p = tuple(int(c) for c in bad[0])
    k = int(counts[p])
    if in_ideal[p]:
        reason = f"point {p} lies in the ideal but is covered by {k} block(s)"
    elif k == 0:
        reason = f"standard monomial {p} is not covered"
    else:
        reason = f"standard monomial {p} is covered by {k} blocks"
    return PartitionReport(False, T, p, reason)
