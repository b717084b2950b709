"""
Vectorized pair sweep for the subadditivity+σ check

Each worker receives the profile table once through the pool initializer and
then scans disjoint ℓ_a ranges. Within a range, ℓ_a is the outer loop and every
ℓ_b in [1, ℓ_a] is handled as one numpy vector.
"""

import logging
from dataclasses import dataclass, field
from typing import Dict, List, Optional, Tuple

import numpy as np

from utils.lex_order import k_table, q_table

logger = logging.getLogger(__name__)

CASE_COUNT = 16

# Worker state, filled by init_worker
_STATE: Dict[str, object] = {}


@dataclass
class ChunkResult:
    """Partial sweep over ℓ_a in [start, stop)"""

    start: int
    stop: int
    pairs: int = 0
    violations: List[Tuple[int, int, int]] = field(default_factory=list)
    branch_mismatches: List[Tuple[int, int]] = field(default_factory=list)
    case_counts: np.ndarray = field(default_factory=lambda: np.zeros(CASE_COUNT, dtype=np.int64))
    case_min: np.ndarray = field(default_factory=lambda: np.full(CASE_COUNT, np.iinfo(np.int64).max, dtype=np.int64))
    min_slack: Optional[int] = None


def init_worker(n: int, m: int, values: np.ndarray) -> None:
    """Pool initializer: keep the read-only tables of S(n,m) in this process"""
    _STATE.clear()
    _STATE["n"] = n
    _STATE["m"] = m
    _STATE["values"] = np.asarray(values, dtype=np.int64)
    _STATE["q"] = q_table(n, m)
    if n >= 2:
        _STATE["k"] = k_table(n, m)
        _STATE["q_lower"] = q_table(n - 1, m)


def sweep_chunk(bounds: Tuple[int, int]) -> ChunkResult:
    """Check Σ >= 0 for every pair 1 <= ℓ_b <= ℓ_a with ℓ_a in [start, stop)"""
    start, stop = bounds
    n, m = _STATE["n"], _STATE["m"]
    values, q = _STATE["values"], _STATE["q"]
    total = m ** n
    result = ChunkResult(start, stop)
    for ell_a in range(start, stop):
        ell_b = np.arange(1, ell_a + 1, dtype=np.int64)
        ell_sum = ell_a + ell_b
        low = ell_sum < total
        # first σ branch for ℓ_a+ℓ_b < m^n, second one from m^n on
        first = q[ell_b] + q[np.minimum(ell_sum, total)] - q[ell_a]
        second = q[ell_b] - q[np.maximum(ell_sum - total, 0)] + m - q[ell_a]
        wrapped = np.where(ell_sum > total, ell_sum - total, ell_sum)
        gap = values[ell_a] + values[ell_b] - values[wrapped] - np.where(low, first, second)
        result.pairs += len(ell_b)

        bad = np.flatnonzero(gap < 0)
        for i in bad:
            result.violations.append((ell_a, int(ell_b[i]), int(gap[i])))

        # at ℓ_a+ℓ_b = m^n both inequalities apply and must coincide
        boundary = np.flatnonzero(ell_sum == total)
        for i in boundary:
            gap_first = values[ell_a] + values[ell_b[i]] - values[total] - first[i]
            gap_second = values[ell_a] + values[ell_b[i]] - values[0] - second[i]
            if gap_first != gap_second:
                result.branch_mismatches.append((ell_a, int(ell_b[i])))

        smallest = int(gap.min())
        result.min_slack = smallest if result.min_slack is None else min(result.min_slack, smallest)

        if n >= 2:
            _classify_into(result, ell_a, ell_b[ell_sum <= total], gap[ell_sum <= total])
    return result


def case_codes(n: int, m: int, ell_a, ell_b) -> np.ndarray:
    """
    Case codes 0..15 of pairs at level n >= 2, most significant bit first

    A bit is set when the conditional takes its second alternative.
    """
    k, q_lower = k_table(n, m), q_table(n - 1, m)
    return _codes(n, m, k, q_lower, np.asarray(ell_a, dtype=np.int64), np.asarray(ell_b, dtype=np.int64))


def _codes(n: int, m: int, k: np.ndarray, q_lower: np.ndarray, ell_a: np.ndarray, ell_b: np.ndarray) -> np.ndarray:
    size = m ** (n - 1)
    ell_sum = ell_a + ell_b
    rest_a = ell_a - k[ell_a] * size
    rest_b = ell_b - k[ell_b] * size
    rest_sum = ell_sum - k[ell_sum] * size
    first = (rest_a + rest_b >= size).astype(np.int64)
    second = (q_lower[rest_a] > k[ell_a]).astype(np.int64)
    third = (q_lower[rest_b] > k[ell_b]).astype(np.int64)
    fourth = (q_lower[rest_sum] > k[ell_sum]).astype(np.int64)
    return first * 8 + second * 4 + third * 2 + fourth


def _classify_into(result: ChunkResult, ell_a: int, ell_b: np.ndarray, gap: np.ndarray) -> None:
    if not len(ell_b):
        return
    codes = _codes(_STATE["n"], _STATE["m"], _STATE["k"], _STATE["q_lower"], np.full(len(ell_b), ell_a, dtype=np.int64), ell_b)
    result.case_counts += np.bincount(codes, minlength=CASE_COUNT)
    np.minimum.at(result.case_min, codes, gap)


def chunk_bounds(order: int, chunk_size: int) -> List[Tuple[int, int]]:
    """Split ℓ_a in [1, order] into consecutive ranges"""
    return [(start, min(start + chunk_size, order + 1)) for start in range(1, order + 1, chunk_size)]
