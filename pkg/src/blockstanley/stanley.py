"""Minimal Stanley decompositions of blocks."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product
from typing import FrozenSet, List, Sequence, Tuple

from .core import INF, Block, BlockDecomposition, as_vector


@dataclass(frozen=True)
class StanleySpace:
    """``K[x_i : i in free_variables] * x^base``; variable indices are 0-based."""

    free_variables: FrozenSet[int]
    base: Tuple[int, ...]

    def __post_init__(self):
        base = as_vector(self.base)
        free = frozenset(self.free_variables)
        if any(not 0 <= i < len(base) for i in free):
            raise ValueError(f"free variable index out of range: {sorted(free)}")
        object.__setattr__(self, "base", base)
        object.__setattr__(self, "free_variables", free)

    def to_block(self) -> Block:
        outer = tuple(INF if i in self.free_variables else e for i, e in enumerate(self.base))
        return Block(self.base, outer)

    def __contains__(self, m) -> bool:
        return m in self.to_block()

    def render(self, names: Sequence[str] | None = None) -> str:
        n = len(self.base)
        names = list(names) if names else [f"x{i + 1}" for i in range(n)]
        ring = "K"
        if self.free_variables:
            ring += "[" + ",".join(names[i] for i in sorted(self.free_variables)) + "]"
        mono = render_monomial(self.base, names)
        return ring if mono == "1" else f"{ring}·{mono}"

    def __str__(self):
        return self.render()


def render_monomial(m: Sequence[int], names: Sequence[str]) -> str:
    factors = []
    for e, name in zip(m, names):
        if e == 1:
            factors.append(name)
        elif e > 1:
            factors.append(f"{name}^{e}")
    return "*".join(factors) if factors else "1"


def _require_nonempty(B: Block) -> None:
    if B.is_empty():
        raise ValueError("block is empty")


def split_bounded_unbounded(B: Block) -> Tuple[Block, Block]:
    """Bounded part (unbounded columns zeroed) and unbounded part (bounded columns zeroed)."""
    _require_nonempty(B)
    bounded_inner, bounded_outer, unb_inner, unb_outer = [], [], [], []
    for a, b in zip(B.inner, B.outer):
        if b is INF:
            bounded_inner.append(0)
            bounded_outer.append(0)
            unb_inner.append(a)
            unb_outer.append(INF)
        else:
            bounded_inner.append(a)
            bounded_outer.append(b)
            unb_inner.append(0)
            unb_outer.append(0)
    return (
        Block(tuple(bounded_inner), tuple(bounded_outer)),
        Block(tuple(unb_inner), tuple(unb_outer)),
    )


def stanley_space_count(B: Block) -> int:
    _require_nonempty(B)
    s = 1
    for a, b in zip(B.inner, B.outer):
        if b is not INF:
            s *= b - a + 1
    return s


def minimal_stanley_decomposition(B: Block) -> List[StanleySpace]:
    """One Stanley space per point of the bounded part, all sharing the
    unbounded columns as free variables.  Bases come out in lex order."""
    bounded, unbounded = split_bounded_unbounded(B)
    free = frozenset(i for i, b in enumerate(B.outer) if b is INF)
    psi = unbounded.inner
    ranges = [range(a, b + 1) for a, b in zip(bounded.inner, bounded.outer)]
    return [
        StanleySpace(free, tuple(t + p for t, p in zip(theta, psi)))
        for theta in product(*ranges)
    ]


def decomposition_to_stanley(D: BlockDecomposition) -> List[StanleySpace]:
    spaces: List[StanleySpace] = []
    for B in D.nonempty():
        spaces.extend(minimal_stanley_decomposition(B))
    return spaces
