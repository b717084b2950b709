"""
Lexicographic ranks and the counting functions k, q and sigma

Ranks are 1-based: the lex ℓ-segment is the set of vertices of rank 1..ℓ.
All arithmetic is exact; numpy tables use int64, which holds (ℓ-1)(m-1)
for every ℓ <= 2^32 and m <= 36.
"""

from functools import lru_cache
from typing import NamedTuple, NewType, Optional, Tuple

import numpy as np

from utils.errors import InvalidParamsError, RangeError
from utils.graph import GraphParams, Vertex, repunit, validate_vertex

LexRank = NewType("LexRank", int)


class SplitResult(NamedTuple):
    """ℓ = k·m^(n-1) + ℓ′ with 0 <= ℓ′ < m^(n-1); ℓ = m^n gives (m, 0)"""

    k: int
    ell_prime: int


def _check_ell(n: int, m: int, ell: int) -> None:
    if not 0 <= ell <= m ** n:
        raise RangeError(f"ℓ={ell} outside [0, {m ** n}] for S({n},{m})")


def lex_rank(v: Vertex, p: GraphParams) -> LexRank:
    """1 + Σ v_j·m^(n-j)"""
    validate_vertex(v, p)
    rank = 0
    for d in v.digits:
        rank = rank * p.m + d
    return LexRank(rank + 1)


def lex_unrank(r: int, p: GraphParams) -> Vertex:
    if not 1 <= r <= p.order:
        raise RangeError(f"rank {r} outside [1, {p.order}] for {p}")
    value = r - 1
    digits = [0] * p.n
    for pos in range(p.n - 1, -1, -1):
        value, digits[pos] = divmod(value, p.m)
    return Vertex(tuple(digits))


def corner_rank(label: int, p: GraphParams) -> LexRank:
    """Rank of label^n: 1 + label·(m^n - 1)/(m - 1)"""
    return LexRank(1 + label * repunit(p.n, p.m))


def k_of(n: int, m: int, ell: int) -> int:
    """Number of full top-level copies in the lex ℓ-segment, ⌊ℓ/m^(n-1)⌋"""
    if n < 1:
        raise InvalidParamsError("k is defined for n >= 1")
    _check_ell(n, m, ell)
    return ell // m ** (n - 1)


def split(n: int, m: int, ell: int) -> SplitResult:
    k = k_of(n, m, ell)
    return SplitResult(k, ell - k * m ** (n - 1))


def q_of(n: int, m: int, ell: int) -> int:
    """Number of corner vertices in the lex ℓ-segment"""
    if n < 0:
        raise InvalidParamsError("q is defined for n >= 0")
    _check_ell(n, m, ell)
    if n == 0 or ell == 0:
        return 0
    return 1 + (ell - 1) * (m - 1) // (m ** n - 1)


def sigma(n: int, m: int, ell_a: int, ell_b: int) -> int:
    """
    Corner correction of the subadditivity+σ inequality

    Args:
        n, m: Graph parameters
        ell_a, ell_b: Segment sizes with 0 <= ℓ_b <= ℓ_a <= m^n

    Returns:
        q(ℓ_b) + q(ℓ_a+ℓ_b) - q(ℓ_a) when ℓ_a + ℓ_b < m^n, otherwise
        q(ℓ_b) - q(ℓ_a+ℓ_b-m^n) + m - q(ℓ_a)
    """
    total = m ** n
    if not 0 <= ell_b <= ell_a <= total:
        raise RangeError(f"σ needs 0 <= ℓ_b <= ℓ_a <= {total}, got ℓ_a={ell_a}, ℓ_b={ell_b}")
    if ell_a + ell_b < total:
        return q_of(n, m, ell_b) + q_of(n, m, ell_a + ell_b) - q_of(n, m, ell_a)
    return q_of(n, m, ell_b) - q_of(n, m, ell_a + ell_b - total) + m - q_of(n, m, ell_a)


def sigma_branches(n: int, m: int, ell_a: int, ell_b: int) -> Tuple[Optional[int], Optional[int]]:
    """
    Both σ formulas, each evaluated only where its q arguments are in range

    The first is defined for ℓ_a + ℓ_b <= m^n, the second for ℓ_a + ℓ_b >= m^n;
    at equality both are returned and must coincide.
    """
    total = m ** n
    first = second = None
    if ell_a + ell_b <= total:
        first = q_of(n, m, ell_b) + q_of(n, m, ell_a + ell_b) - q_of(n, m, ell_a)
    if ell_a + ell_b >= total:
        second = q_of(n, m, ell_b) - q_of(n, m, ell_a + ell_b - total) + m - q_of(n, m, ell_a)
    return first, second


@lru_cache(maxsize=64)
def q_table(n: int, m: int) -> np.ndarray:
    """q_{n,m}(ℓ) for ℓ = 0..m^n as a read-only int64 array"""
    total = m ** n
    ell = np.arange(total + 1, dtype=np.int64)
    if n == 0:
        table = np.zeros(total + 1, dtype=np.int64)
    else:
        table = np.where(ell == 0, 0, 1 + (ell - 1) * (m - 1) // (total - 1))
    table.setflags(write=False)
    return table


@lru_cache(maxsize=64)
def k_table(n: int, m: int) -> np.ndarray:
    """k_{n,m}(ℓ) for ℓ = 0..m^n as a read-only int64 array"""
    if n < 1:
        raise InvalidParamsError("k is defined for n >= 1")
    table = np.arange(m ** n + 1, dtype=np.int64) // m ** (n - 1)
    table.setflags(write=False)
    return table
