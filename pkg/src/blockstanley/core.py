"""Exponent vectors, extents, blocks and monomial ideals.

A monomial ``x1^m1 ... xn^mn`` is identified with its exponent vector
``(m1, ..., mn)``.  A block is a product of integer intervals
``[a1, b1] x ... x [an, bn]`` where each upper end ``bi`` may be ``INF``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence, Tuple, Union


class _Infinity:
    """The unbounded extent.  Compares above every natural; no arithmetic."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self):
        return "INF"

    def __str__(self):
        return "inf"

    def __reduce__(self):
        return (_Infinity, ())

    def __eq__(self, other):
        return other is self

    def __hash__(self):
        return hash("blockstanley.INF")

    def __lt__(self, other):
        if other is self or isinstance(other, int):
            return False
        return NotImplemented

    def __le__(self, other):
        if other is self:
            return True
        if isinstance(other, int):
            return False
        return NotImplemented

    def __gt__(self, other):
        if other is self:
            return False
        if isinstance(other, int):
            return True
        return NotImplemented

    def __ge__(self, other):
        if other is self or isinstance(other, int):
            return True
        return NotImplemented


INF = _Infinity()

ExponentVector = Tuple[int, ...]
Extent = Union[int, _Infinity]


def is_finite(e: Extent) -> bool:
    return e is not INF


def as_vector(coords: Iterable[int]) -> ExponentVector:
    """Validate and freeze an exponent vector."""
    v = tuple(coords)
    if not v:
        raise ValueError("exponent vector must have at least one coordinate")
    for c in v:
        if isinstance(c, bool) or not isinstance(c, int):
            raise TypeError(f"exponents must be integers, got {c!r}")
        if c < 0:
            raise ValueError(f"exponents must be nonnegative, got {v}")
    return v


def as_extent(e) -> Extent:
    if e is INF:
        return INF
    if isinstance(e, str) and e.strip().lower() in ("inf", "infinity", "oo", "∞"):
        return INF
    if isinstance(e, float) and e == float("inf"):
        return INF
    if isinstance(e, bool) or not isinstance(e, int):
        raise TypeError(f"extent must be a natural or INF, got {e!r}")
    if e < 0:
        # an outer extent of -1 arises legitimately (m_i - 1 with m_i = 0)
        if e != -1:
            raise ValueError(f"extent out of range: {e}")
    return e


def _check_dims(u: Sequence, v: Sequence) -> None:
    if len(u) != len(v):
        raise ValueError(f"dimension mismatch: {len(u)} != {len(v)}")


def divides(g: Sequence[int], m: Sequence[int]) -> bool:
    """True iff x^g divides x^m, i.e. g <= m coordinatewise."""
    _check_dims(g, m)
    return all(gi <= mi for gi, mi in zip(g, m))


@dataclass(frozen=True)
class Block:
    """The rectangular set ``{m : inner[i] <= m[i] <= outer[i]}``.

    Empty blocks (some ``outer[i] < inner[i]``) are valid values; gnomon
    subtraction produces them and keeps them for uniform indexing.
    """

    inner: ExponentVector
    outer: Tuple[Extent, ...]

    def __post_init__(self):
        inner = as_vector(self.inner)
        outer = tuple(as_extent(e) for e in self.outer)
        _check_dims(inner, outer)
        object.__setattr__(self, "inner", inner)
        object.__setattr__(self, "outer", outer)

    @classmethod
    def full(cls, n: int) -> "Block":
        """The whole of N^n."""
        return cls((0,) * n, (INF,) * n)

    @classmethod
    def point(cls, m: Sequence[int]) -> "Block":
        m = as_vector(m)
        return cls(m, m)

    @property
    def dim(self) -> int:
        return len(self.inner)

    def is_empty(self) -> bool:
        return any(b < a for a, b in zip(self.inner, self.outer))

    def __contains__(self, m) -> bool:
        _check_dims(self.inner, m)
        return all(a <= mi <= b for a, mi, b in zip(self.inner, m, self.outer))

    def is_bounded(self) -> bool:
        return all(is_finite(b) for b in self.outer)

    def is_stanley(self) -> bool:
        """Each column is either a single value or unbounded."""
        return all(b is INF or b == a for a, b in zip(self.inner, self.outer))

    def size(self) -> Extent:
        """Number of points, or INF for a nonempty unbounded block."""
        if self.is_empty():
            return 0
        if not self.is_bounded():
            return INF
        count = 1
        for a, b in zip(self.inner, self.outer):
            count *= b - a + 1
        return count

    def permuted(self, perm: Sequence[int]) -> "Block":
        """Column ``i`` of the result is column ``perm[i]`` of this block."""
        return Block(
            tuple(self.inner[p] for p in perm), tuple(self.outer[p] for p in perm)
        )

    def __str__(self):
        return render_block(self)


def block_is_empty(B: Block) -> bool:
    return B.is_empty()


def block_contains(B: Block, m: Sequence[int]) -> bool:
    return m in B


def block_intersection(B1: Block, B2: Block) -> Block:
    _check_dims(B1.inner, B2.inner)
    inner = tuple(max(a1, a2) for a1, a2 in zip(B1.inner, B2.inner))
    outer = tuple(min(b1, b2) for b1, b2 in zip(B1.outer, B2.outer))
    return Block(inner, outer)


def blocks_disjoint(B1: Block, B2: Block) -> bool:
    return block_intersection(B1, B2).is_empty()


def bounding_box(blocks: Sequence[Block]) -> Block:
    inner = tuple(min(col) for col in zip(*(B.inner for B in blocks)))
    outer = tuple(max(col) for col in zip(*(B.outer for B in blocks)))
    return Block(inner, outer)


def render_block(B: Block) -> str:
    """Two-row matrix: outer corner on top, inner corner below."""
    top = [str(b) for b in B.outer]
    bottom = [str(a) for a in B.inner]
    widths = [max(len(t), len(u)) for t, u in zip(top, bottom)]
    row = lambda cells: "[ " + " ".join(c.rjust(w) for c, w in zip(cells, widths)) + " ]"
    return row(top) + "\n" + row(bottom)


@dataclass(frozen=True)
class MonomialIdeal:
    """Monomial ideal given by a minimal generating set.

    Generator order is kept: the gnomon algorithm depends on it.  Build
    instances with :func:`minimalize_generators` unless the generators are
    already known to be minimal.
    """

    n: int
    generators: Tuple[ExponentVector, ...] = ()

    def __post_init__(self):
        if self.n < 1:
            raise ValueError("ambient dimension must be >= 1")
        gens = tuple(as_vector(g) for g in self.generators)
        for g in gens:
            if len(g) != self.n:
                raise ValueError(f"generator {g} does not have dimension {self.n}")
        for i, g in enumerate(gens):
            for j, h in enumerate(gens):
                if i != j and divides(g, h):
                    raise ValueError(f"generators not minimal: {g} divides {h}")
        object.__setattr__(self, "generators", gens)

    @classmethod
    def zero(cls, n: int) -> "MonomialIdeal":
        return cls(n, ())

    @classmethod
    def unit(cls, n: int) -> "MonomialIdeal":
        return cls(n, ((0,) * n,))

    def __contains__(self, m) -> bool:
        _check_dims((0,) * self.n, m)
        return any(divides(g, m) for g in self.generators)

    def is_unit(self) -> bool:
        return (0,) * self.n in self.generators

    def add(self, m: Sequence[int]) -> "MonomialIdeal":
        """``I + <m>`` with generators re-minimalized, new one appended last."""
        return minimalize_generators(self.generators + (tuple(m),), n=self.n)

    def permuted(self, perm: Sequence[int]) -> "MonomialIdeal":
        return MonomialIdeal(self.n, tuple(tuple(g[p] for p in perm) for g in self.generators))

    def same_ideal(self, other: "MonomialIdeal") -> bool:
        return self.n == other.n and set(self.generators) == set(other.generators)


def ideal_contains(I: MonomialIdeal, m: Sequence[int]) -> bool:
    return m in I


def minimalize_generators(
    gens: Iterable[Sequence[int]], n: int | None = None
) -> MonomialIdeal:
    """Drop duplicate and redundant generators, keeping first-seen order."""
    vectors = [as_vector(g) for g in gens]
    if n is None:
        if not vectors:
            raise ValueError("dimension required for the zero ideal")
        n = len(vectors[0])
    for v in vectors:
        if len(v) != n:
            raise ValueError(f"dimension mismatch: {v} is not in N^{n}")
    kept = []
    for i, v in enumerate(vectors):
        redundant = False
        for j, w in enumerate(vectors):
            if j == i:
                continue
            # strict divisor elsewhere, or an equal copy seen earlier
            if divides(w, v) and (w != v or j < i):
                redundant = True
                break
        if not redundant:
            kept.append(v)
    return MonomialIdeal(n, tuple(kept))


@dataclass(frozen=True)
class BlockDecomposition:
    """Ordered sequence of blocks.  Empty blocks may be present."""

    n: int
    blocks: Tuple[Block, ...] = ()

    def __post_init__(self):
        blocks = tuple(self.blocks)
        for B in blocks:
            if B.dim != self.n:
                raise ValueError(f"block of dimension {B.dim} in a decomposition of N^{self.n}")
        object.__setattr__(self, "blocks", blocks)

    def __len__(self):
        return len(self.blocks)

    def __iter__(self):
        return iter(self.blocks)

    def __getitem__(self, k):
        return self.blocks[k]

    def nonempty(self) -> "BlockDecomposition":
        return BlockDecomposition(self.n, tuple(B for B in self.blocks if not B.is_empty()))

    def reversed(self) -> "BlockDecomposition":
        return BlockDecomposition(self.n, self.blocks[::-1])

    def reordered(self, order: Sequence[int]) -> "BlockDecomposition":
        if sorted(order) != list(range(len(self.blocks))):
            raise ValueError(f"{list(order)} is not a permutation of the block indices")
        return BlockDecomposition(self.n, tuple(self.blocks[k] for k in order))

    def permuted(self, perm: Sequence[int]) -> "BlockDecomposition":
        return BlockDecomposition(self.n, tuple(B.permuted(perm) for B in self.blocks))

    def is_disjoint(self) -> bool:
        live = [B for B in self.blocks if not B.is_empty()]
        return all(
            blocks_disjoint(live[i], live[j])
            for i in range(len(live))
            for j in range(i + 1, len(live))
        )

    def __str__(self):
        return "\n\n".join(render_block(B) for B in self.nonempty())


def check_permutation(perm: Sequence[int], n: int) -> Tuple[int, ...]:
    """Validate a 0-based permutation of ``range(n)``."""
    perm = tuple(perm)
    if sorted(perm) != list(range(n)):
        raise ValueError(f"{list(perm)} is not a permutation of 0..{n - 1}")
    return perm


def inverse_permutation(perm: Sequence[int]) -> Tuple[int, ...]:
    inv = [0] * len(perm)
    for i, p in enumerate(perm):
        inv[p] = i
    return tuple(inv)
