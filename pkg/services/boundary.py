"""
Edge boundaries and isoperimetric profiles of lex segments

Three ways to get |Θ|(n,m;ℓ): the recurrence over n (fast, whole table),
direct counting on the lex segment (the oracle), and brute force over all
ℓ-subsets (tiny graphs only).
"""

import logging
from dataclasses import dataclass, field
from functools import lru_cache
from itertools import combinations
from math import comb
from typing import Dict, Iterator, List, NamedTuple, Optional, Tuple

import numpy as np

from config.settings import SIZE_LIMITS
from utils.errors import InvalidParamsError, RangeError, RecurrenceCalibrationError, SizeCapError
from utils.graph import Decoration, GraphParams, corner_index, edge_index_array, neighbor_indices
from utils.lex_order import q_table
from utils.vertex_set import VertexSet

logger = logging.getLogger(__name__)


@dataclass(frozen=True, eq=False)
class ProfileTable:
    """values[ℓ] = |Θ|(n,m;ℓ) for ℓ = 0..m^n"""

    params: GraphParams
    values: np.ndarray
    method: str = field(default="recurrence")

    def __post_init__(self):
        values = np.asarray(self.values, dtype=np.int64)
        if values.shape != (self.params.order + 1,):
            raise InvalidParamsError(f"profile of {self.params} needs {self.params.order + 1} entries, got {values.shape}")
        if values[0] != 0 or values[-1] != 0:
            raise InvalidParamsError(f"profile of {self.params} must vanish at ℓ=0 and ℓ=m^n")
        if not np.array_equal(values, values[::-1]):
            raise InvalidParamsError(f"profile of {self.params} is not symmetric under ℓ -> m^n - ℓ")
        values = values.copy()
        values.setflags(write=False)
        object.__setattr__(self, "values", values)

    def __getitem__(self, ell: int) -> int:
        if not 0 <= ell <= self.params.order:
            raise RangeError(f"ℓ={ell} outside [0, {self.params.order}]")
        return int(self.values[ell])

    def __len__(self) -> int:
        return len(self.values)

    def __eq__(self, other) -> bool:
        if not isinstance(other, ProfileTable):
            return NotImplemented
        return self.params == other.params and np.array_equal(self.values, other.values)

    def __hash__(self) -> int:
        return hash((self.params, self.values.tobytes()))

    def tolist(self) -> List[int]:
        return [int(v) for v in self.values]


class CornerVariant(NamedTuple):
    """Constant added to the q > k branch q - 2k of the corner term"""

    correction: int
    label: str


CORNER_VARIANTS = (
    CornerVariant(0, "q-2k"),
    CornerVariant(-1, "q-2k-1"),
)


class CalibrationResult(NamedTuple):
    variant: CornerVariant
    matches: Dict[Tuple[int, int], Tuple[int, ...]]


def _check_params(S: VertexSet, p: Optional[GraphParams]) -> GraphParams:
    if p is None:
        return S.params
    if S.params != p:
        raise InvalidParamsError(f"vertex set lives on {S.params}, not on {p}")
    return p


def theta(S: VertexSet, p: GraphParams = None) -> int:
    """Number of edges with exactly one endpoint in S"""
    p = _check_params(S, p)
    members = S.members
    if p.order <= SIZE_LIMITS["edge_scan_max_vertices"]:
        pairs = edge_index_array(p)
        return int(np.count_nonzero(members[pairs[:, 0]] != members[pairs[:, 1]]))
    cut = 0
    for index in S.indices():
        cut += sum(1 for other in neighbor_indices(int(index), p) if not members[other])
    return cut


def exterior_cut(S: VertexSet, p: GraphParams, d: Decoration) -> int:
    """Cut exterior edges: I-corners outside S plus K-corners inside S"""
    d.validate_for(p.m)
    members = S.members
    cut = sum(1 for i in d.inner_labels() if not members[corner_index(i, p)])
    cut += sum(1 for i in d.outer_labels(p.m) if members[corner_index(i, p)])
    return cut


def theta_decorated(S: VertexSet, p: GraphParams, d: Decoration) -> int:
    """Θ_{s,t}(S): the boundary in S(n,m) plus the cut exterior edges"""
    p = _check_params(S, p)
    return theta(S, p) + exterior_cut(S, p, d)


def profile_direct(p: GraphParams, ell: int) -> int:
    """Θ of the lex ℓ-segment, counted on the graph"""
    return theta(VertexSet.lex_segment(p, ell), p)


@lru_cache(maxsize=128)
def _direct_array(n: int, m: int) -> np.ndarray:
    p = GraphParams(n, m)
    p.require_enumerable()
    values = np.zeros(p.order + 1, dtype=np.int64)
    current = 0
    # adding vertex v to the segment cuts its later neighbors and uncuts earlier ones
    for index in range(p.order):
        adjacent = neighbor_indices(index, p)
        earlier = sum(1 for other in adjacent if other < index)
        current += len(adjacent) - 2 * earlier
        values[index + 1] = current
    values.setflags(write=False)
    return values


def profile_direct_table(p: GraphParams) -> ProfileTable:
    """Direct boundary of every lex segment, built incrementally"""
    return ProfileTable(p, _direct_array(p.n, p.m), method="direct")


@lru_cache(maxsize=256)
def _recurrence_array(n: int, m: int, correction: int) -> np.ndarray:
    if n == 0:
        values = np.zeros(2, dtype=np.int64)
        values.setflags(write=False)
        return values
    lower = _recurrence_array(n - 1, m, correction)
    size = m ** (n - 1)
    ell = np.arange(m ** n + 1, dtype=np.int64)
    k = ell // size
    rest = ell - k * size
    q = q_table(n - 1, m)[rest]
    corner = np.where(q <= k, -q, q - 2 * k + correction)
    values = k * (m - k) + lower[rest] + corner
    values.setflags(write=False)
    return values


def calibration_instances(max_vertices: int = None) -> List[GraphParams]:
    """All (n, m) with n >= 1 and m^n within the calibration cap, smallest first"""
    cap = SIZE_LIMITS["calibration_max_vertices"] if max_vertices is None else max_vertices
    instances = []
    for m in range(2, SIZE_LIMITS["max_m"] + 1):
        n = 1
        while m ** n <= cap:
            instances.append(GraphParams(n, m))
            n += 1
    return sorted(instances, key=lambda p: (p.order, p.m))


@lru_cache(maxsize=8)
def calibrate_corner_term(max_vertices: int = None) -> CalibrationResult:
    """
    Select the corner-term constant of the recurrence against the direct count

    Every variant is compared entry-wise with the direct profile on every
    calibration instance; the first variant that matches all of them wins.

    Raises:
        RecurrenceCalibrationError: no variant matches uniformly
    """
    matches: Dict[Tuple[int, int], Tuple[int, ...]] = {}
    for p in calibration_instances(max_vertices):
        direct = _direct_array(p.n, p.m)
        matches[(p.n, p.m)] = tuple(
            variant.correction
            for variant in CORNER_VARIANTS
            if np.array_equal(_recurrence_array(p.n, p.m, variant.correction), direct)
        )
    for variant in CORNER_VARIANTS:
        if all(variant.correction in found for found in matches.values()):
            logger.info(f"Corner term variant {variant.label} matches the direct count on {len(matches)} instances")
            return CalibrationResult(variant, matches)
    failing = sorted(key for key, found in matches.items() if not found)
    logger.error(f"No corner term variant matches the direct count; unmatched instances: {failing[:10]}")
    raise RecurrenceCalibrationError(f"no corner-term variant matches the direct profile (e.g. {failing[:3]})")


def corner_term_variant() -> CornerVariant:
    return calibrate_corner_term().variant


def corner_term(k: int, q: int, correction: int = None) -> int:
    """Corner term of the recurrence for k full copies and q corners in the partial copy"""
    if correction is None:
        correction = corner_term_variant().correction
    return -q if q <= k else q - 2 * k + correction


@lru_cache(maxsize=128)
def profile_recurrence(p: GraphParams) -> ProfileTable:
    """
    Profile table from the recurrence over n

    |Θ|(n,m;ℓ) = k(m-k) + |Θ|(n-1,m;ℓ′) + corner term, where (k, ℓ′) = split(ℓ)
    and the corner term is -q_{n-1}(ℓ′) when q_{n-1}(ℓ′) <= k and
    q_{n-1}(ℓ′) - 2k plus the calibrated constant otherwise.
    """
    if p.order > SIZE_LIMITS["sweep_max_vertices"]:
        raise SizeCapError(f"{p} has {p.order} vertices; profile tables are capped at {SIZE_LIMITS['sweep_max_vertices']}")
    variant = corner_term_variant()
    table = ProfileTable(p, _recurrence_array(p.n, p.m, variant.correction), method="recurrence")
    logger.debug(f"Built recurrence profile of {p} with corner variant {variant.label}")
    return table


def _adjacency_masks(p: GraphParams) -> List[int]:
    masks = [0] * p.order
    for u, v in edge_index_array(p):
        masks[u] |= 1 << int(v)
        masks[v] |= 1 << int(u)
    return masks


def _require_brute_force(p: GraphParams, ell: int, side: int) -> None:
    """Small graphs are always allowed; larger ones only when C(m^n, side) fits the subset budget"""
    if not 0 <= ell <= p.order:
        raise RangeError(f"ℓ={ell} outside [0, {p.order}]")
    if p.order <= SIZE_LIMITS["brute_force_max_vertices"]:
        return
    if comb(p.order, side) > SIZE_LIMITS["brute_force_max_subsets"]:
        raise SizeCapError(
            f"{p} has {p.order} vertices; brute force is capped at {SIZE_LIMITS['brute_force_max_vertices']} "
            f"vertices or {SIZE_LIMITS['brute_force_max_subsets']} subsets"
        )


def brute_force_affordable(p: GraphParams, ell: int, decorated: bool = False) -> bool:
    """Whether profile_bruteforce(_decorated) accepts ℓ on p"""
    side = ell if decorated else min(ell, p.order - ell)
    try:
        _require_brute_force(p, ell, side)
    except (SizeCapError, RangeError):
        return False
    return True


def profile_bruteforce(p: GraphParams, ell: int) -> int:
    """Exact minimum of Θ over all ℓ-subsets"""
    # Θ(S) = Θ(complement of S), so enumerate the smaller side
    size = min(ell, p.order - ell) if 0 <= ell <= p.order else ell
    _require_brute_force(p, ell, size)
    if size == 0:
        return 0
    masks = _adjacency_masks(p)
    degrees = [mask.bit_count() for mask in masks]
    best = None
    for chosen in combinations(range(p.order), size):
        subset = 0
        for v in chosen:
            subset |= 1 << v
        cut = sum(degrees[v] - (masks[v] & subset).bit_count() for v in chosen)
        if best is None or cut < best:
            best = cut
    return best


def _decorated_cuts(p: GraphParams, d: Decoration, ell: int) -> Iterator[Tuple[Tuple[int, ...], int]]:
    """Every ℓ-subset as (indices, Θ_{s,t})"""
    _require_brute_force(p, ell, ell)
    d.validate_for(p.m)
    masks = _adjacency_masks(p)
    degrees = [mask.bit_count() for mask in masks]
    inner = [corner_index(i, p) for i in d.inner_labels()]
    outer = [corner_index(i, p) for i in d.outer_labels(p.m)]
    for chosen in combinations(range(p.order), ell):
        subset = 0
        for v in chosen:
            subset |= 1 << v
        cut = sum(degrees[v] - (masks[v] & subset).bit_count() for v in chosen)
        cut += sum(1 for c in inner if not subset >> c & 1)
        cut += sum(1 for c in outer if subset >> c & 1)
        yield chosen, cut


def profile_bruteforce_decorated(p: GraphParams, d: Decoration, ell: int) -> int:
    """Exact minimum of Θ_{s,t} over all ℓ-subsets"""
    return min(cut for _, cut in _decorated_cuts(p, d, ell))


class DecoratedOptimum(NamedTuple):
    theta: int
    ell_vector: Tuple[int, ...]


@lru_cache(maxsize=1024)
def decorated_optimum(p: GraphParams, d: Decoration, ell: int) -> DecoratedOptimum:
    """
    Minimum of Θ_{s,t} over all ℓ-subsets, with the lexicographically largest
    copy occupancy among the minimizers

    Raises:
        InvalidParamsError: n = 0 (no copies)
        SizeCapError: C(m^n, ℓ) is above the brute-force budget
    """
    if p.n < 1:
        raise InvalidParamsError("copy occupancy needs n >= 1")
    best = None
    for chosen, cut in _decorated_cuts(p, d, ell):
        counts = [0] * p.m
        for v in chosen:
            counts[v // p.copy_size] += 1
        key = (-cut, tuple(counts))
        if best is None or key > best:
            best = key
    return DecoratedOptimum(-best[0], best[1])


def profile_bruteforce_table(p: GraphParams) -> ProfileTable:
    for ell in range(p.order + 1):
        _require_brute_force(p, ell, min(ell, p.order - ell))
    return ProfileTable(p, [profile_bruteforce(p, ell) for ell in range(p.order + 1)], method="brute")
