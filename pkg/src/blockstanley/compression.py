"""Compressibility: finding subsets of blocks whose union is again a block."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations, product
from typing import List, Optional, Sequence, Tuple

from .core import INF, Block, BlockDecomposition, blocks_disjoint, bounding_box

MAX_SUBSET_BLOCKS = 20


class CompressionLimitExceeded(RuntimeError):
    """Subset search refused: too many blocks."""


@dataclass(frozen=True)
class CompressionReport:
    compressible: bool
    witness: Optional[Tuple[int, ...]] = None
    merged: Optional[Block] = None


def _covered(box: Block, blocks: Sequence[Block]) -> bool:
    """Every cell of ``box`` (cut at all block boundaries) lies in some block.

    Cells are represented by their lowest point; block faces lie on the cuts,
    so a block holds a whole cell as soon as it holds that point.
    """
    axes = []
    for i in range(box.dim):
        cuts = {box.inner[i]}
        for B in blocks:
            cuts.add(B.inner[i])
            if B.outer[i] is not INF:
                cuts.add(B.outer[i] + 1)
        axes.append(sorted(v for v in cuts if box.inner[i] <= v <= box.outer[i]))
    return all(any(p in B for B in blocks) for p in product(*axes))


def union_is_block(blocks: Sequence[Block]) -> Optional[Block]:
    """The block equal to the union of the given disjoint blocks, if there is one."""
    blocks = list(blocks)
    if not blocks:
        raise ValueError("no blocks given")
    if len({B.dim for B in blocks}) != 1:
        raise ValueError("blocks of mixed dimension")
    if any(B.is_empty() for B in blocks):
        raise ValueError("empty block in union")
    for i in range(len(blocks)):
        for j in range(i + 1, len(blocks)):
            if not blocks_disjoint(blocks[i], blocks[j]):
                raise ValueError(f"blocks {i} and {j} overlap")
    box = bounding_box(blocks)
    return box if _covered(box, blocks) else None


def is_compressible(
    D: BlockDecomposition, max_blocks: int = MAX_SUBSET_BLOCKS
) -> CompressionReport:
    """Search subsets of at least two nonempty blocks, smallest first, then in
    lex order of index sets.  Indices in the witness refer to ``D.blocks``.

    A subset can only union to a block if its bounding box avoids every other
    block, which rules out most candidates before the coverage test.
    """
    live = [k for k, B in enumerate(D.blocks) if not B.is_empty()]
    if len(live) > max_blocks:
        raise CompressionLimitExceeded(
            f"{len(live)} blocks exceeds the subset search cap of {max_blocks}"
        )
    if not D.is_disjoint():
        raise ValueError("blocks of the decomposition are not pairwise disjoint")
    blocks = D.blocks
    for size in range(2, len(live) + 1):
        for subset in combinations(live, size):
            members = [blocks[k] for k in subset]
            box = bounding_box(members)
            if any(
                not blocks_disjoint(box, blocks[k]) for k in live if k not in subset
            ):
                continue
            if _covered(box, members):
                return CompressionReport(True, subset, box)
    return CompressionReport(False)


def compress_greedy(
    D: BlockDecomposition, max_blocks: int = MAX_SUBSET_BLOCKS
) -> BlockDecomposition:
    """Merge witnesses until none remain.  The result is incompressible but
    not necessarily minimal.  A merged block takes the place of its earliest
    member; empty blocks are dropped."""
    current: List[Block] = list(D.nonempty().blocks)
    while True:
        report = is_compressible(BlockDecomposition(D.n, tuple(current)), max_blocks)
        if not report.compressible:
            return BlockDecomposition(D.n, tuple(current))
        first, rest = report.witness[0], set(report.witness[1:])
        current = [
            report.merged if k == first else B
            for k, B in enumerate(current)
            if k not in rest
        ]
