"""Block subtraction and the gnomon decomposition.

Removing a principal ideal ``<m>`` from a block leaves an L-shaped set (a
gnomon) which splits into at most ``n`` blocks by cutting successively along
the hyperplanes ``x_i = m_i``.
"""

from __future__ import annotations

from typing import Sequence, Tuple

from .core import (
    Block,
    BlockDecomposition,
    MonomialIdeal,
    as_vector,
    check_permutation,
    divides,
    inverse_permutation,
)

GnomonResult = Tuple[Block, ...]


def _check(B: Block, m: Sequence[int]) -> Tuple[int, ...]:
    m = as_vector(m)
    if len(m) != B.dim:
        raise ValueError(f"dimension mismatch: {len(m)} != {B.dim}")
    return m


def cut_point(B: Block, m: Sequence[int]) -> Tuple[int, ...]:
    m = _check(B, m)
    return tuple(max(a, mi) for a, mi in zip(B.inner, m))


def block_subtract(B: Block, m: Sequence[int]) -> GnomonResult:
    """Split ``B \\ <m>`` into exactly ``n`` pieces, empty ones included.

    Piece ``i`` has outer ``m_i - 1`` in column ``i``, inner ``c_j`` in the
    columns before it, and agrees with ``B`` elsewhere.  When ``m`` is not
    below the outer corner the block misses ``<m>`` entirely; piece 0 is then
    ``B`` itself and the rest are empty.
    """
    m = _check(B, m)
    n = B.dim
    a, b = B.inner, B.outer
    if not divides(m, b):
        empty = Block(a, tuple(ai - 1 for ai in a))
        return (B,) + (empty,) * (n - 1)
    c = cut_point(B, m)
    pieces = []
    for i in range(n):
        inner = c[:i] + a[i:]
        outer = b[:i] + (m[i] - 1,) + b[i + 1:]
        pieces.append(Block(inner, outer))
    return tuple(pieces)


def block_intersect_principal(B: Block, m: Sequence[int]) -> Block:
    """``B`` intersected with ``<m>``: same outer corner, inner raised to the cut point."""
    return Block(cut_point(B, m), B.outer)


def add_generator(D: BlockDecomposition, m: Sequence[int]) -> BlockDecomposition:
    """Decomposition of ``S/(I + <m>)`` from one of ``S/I``; block-major, piece-minor.

    Empty blocks of ``D`` contribute ``n`` empty pieces so that piece ``(k, i)``
    stays at position ``k*n + i``.
    """
    m = as_vector(m)
    if len(m) != D.n:
        raise ValueError(f"dimension mismatch: {len(m)} != {D.n}")
    pieces = []
    for B in D.blocks:
        pieces.extend(block_subtract(B, m))
    return BlockDecomposition(D.n, tuple(pieces))


def gnomon_decomposition(
    I: MonomialIdeal,
    generator_order: Sequence[int] | None = None,
    pi: Sequence[int] | None = None,
    keep_empty: bool = False,
) -> BlockDecomposition:
    """The (pi-)gnomon decomposition of ``S/I``.

    ``generator_order`` lists indices into ``I.generators`` (default: as
    given).  ``pi`` is a 0-based variable order: the computation runs in the
    variables ``y_i = x_{pi[i]}`` and maps the blocks back at the end.
    """
    n = I.n
    gens = I.generators
    if generator_order is None:
        generator_order = range(len(gens))
    generator_order = tuple(generator_order)
    if sorted(generator_order) != list(range(len(gens))):
        raise ValueError(f"{list(generator_order)} is not a permutation of the generators")
    pi = check_permutation(range(n) if pi is None else pi, n)

    D = BlockDecomposition(n, (Block.full(n),))
    for k in generator_order:
        g = gens[k]
        D = add_generator(D, tuple(g[p] for p in pi))
        if not keep_empty:
            D = D.nonempty()
    return D.permuted(inverse_permutation(pi))
