"""Block Stanley decompositions of monomial ideals."""

from .compression import CompressionReport, compress_greedy, is_compressible, union_is_block
from .core import (
    INF,
    Block,
    BlockDecomposition,
    MonomialIdeal,
    block_contains,
    block_intersection,
    block_is_empty,
    divides,
    ideal_contains,
    minimalize_generators,
)
from .elementary import build_grid, containing_block, elementary_decomposition
from .gnomon import (
    add_generator,
    block_intersect_principal,
    block_subtract,
    cut_point,
    gnomon_decomposition,
)
from .oracle import enumerate_standard_monomials, sufficient_truncation, verify_partition
from .stanley import (
    StanleySpace,
    decomposition_to_stanley,
    minimal_stanley_decomposition,
    split_bounded_unbounded,
    stanley_space_count,
)
from .subprime import (
    Filtration,
    exists_subprime_ordering,
    is_prime_filtration,
    is_subprime_ordered,
    outer_adjacent_face,
    spans_ideal_with,
    subprime_filtration,
)
