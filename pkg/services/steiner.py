"""
Steiner operations on decorated Sierpinski graphs

Copy h of S(n,m) is the block of vertices with leading digit h. Its local
corners are h·j^(n-1); for j != h the corner is joined to j·h^(n-1) in copy j,
and for j = h it is the global corner h^n carrying the decoration of label h.
"""

import logging
from dataclasses import dataclass, field
from typing import List, Optional, Tuple

import numpy as np

from services.boundary import brute_force_affordable, decorated_optimum, theta_decorated
from utils.errors import (
    CanonicalSetError,
    InvalidParamsError,
    IterationBoundError,
    NotCompressedError,
    SteinerPropertyError,
)
from utils.graph import Decoration, GraphParams, repunit
from utils.vertex_set import VertexSet

logger = logging.getLogger(__name__)

EllVector = Tuple[int, ...]


@dataclass(frozen=True)
class LocalOrder:
    """
    Relabeling of the trailing digits of copy h

    Labels whose external edge ends inside S come first, undecorated labels
    next and labels whose external edge ends outside S last; each block keeps
    the natural order of its labels.
    """

    h: int
    inner: Tuple[int, ...]
    neutral: Tuple[int, ...]
    outer: Tuple[int, ...]

    @property
    def sequence(self) -> Tuple[int, ...]:
        """Labels listed by their new position"""
        return self.inner + self.neutral + self.outer

    @property
    def permutation(self) -> Tuple[int, ...]:
        """permutation[label] = new position of label"""
        result = [0] * len(self.sequence)
        for position, label in enumerate(self.sequence):
            result[label] = position
        return tuple(result)

    def is_identity(self) -> bool:
        return self.sequence == tuple(range(len(self.sequence)))


@dataclass
class SteinerStep:
    operation: str
    vertex_set: VertexSet
    boundary: int
    delta: int = 0


@dataclass
class SteinerTrace:
    """Every set visited while reducing S to its lex segment"""

    steps: List[SteinerStep] = field(default_factory=list)

    @property
    def final(self) -> VertexSet:
        return self.steps[-1].vertex_set

    @property
    def monotone(self) -> bool:
        """No step increased Θ_{s,t}"""
        return all(step.delta <= 0 for step in self.steps)

    def boundaries(self) -> List[int]:
        return [step.boundary for step in self.steps]


def _require_copies(p: GraphParams) -> None:
    if p.n < 1:
        raise InvalidParamsError("Steiner operations need n >= 1")


def _check_copy(p: GraphParams, h: int) -> None:
    if not 0 <= h < p.m:
        raise InvalidParamsError(f"copy index {h} outside [0, {p.m - 1}]")


def _copy_start(p: GraphParams, h: int) -> int:
    return h * p.copy_size


def ell_vector(S: VertexSet, p: GraphParams = None) -> EllVector:
    """Occupancy of S in each top-level copy"""
    p = p or S.params
    _require_copies(p)
    counts = S.members.reshape(p.m, p.copy_size).sum(axis=1)
    return tuple(int(c) for c in counts)


def local_order(S: VertexSet, p: GraphParams, d: Decoration, h: int) -> LocalOrder:
    _require_copies(p)
    _check_copy(p, h)
    d.validate_for(p.m)
    ones = repunit(p.n - 1, p.m)
    inner, neutral, outer = [], [], []
    for label in range(p.m):
        if label == h:
            kind = d.label_class(h)
            {"I": inner, "J": neutral, "K": outer}[kind].append(label)
        elif S.members[label * p.copy_size + h * ones]:
            inner.append(label)
        else:
            outer.append(label)
    return LocalOrder(h, tuple(inner), tuple(neutral), tuple(outer))


def ordered_prefix(order: LocalOrder, sub: GraphParams, count: int) -> np.ndarray:
    """
    Membership of the first count words of S(n-1,m) in the relabeled lex order

    Rank r maps to the word whose digits are sequence[x_i], x being the plain
    lex word of rank r.
    """
    block = np.zeros(sub.order, dtype=bool)
    if count == 0:
        return block
    sequence = np.asarray(order.sequence, dtype=np.int64)
    ranks = np.arange(count, dtype=np.int64)
    indices = np.zeros(count, dtype=np.int64)
    weight = 1
    for _ in range(sub.n):
        ranks, digit = np.divmod(ranks, sub.m)
        indices += sequence[digit] * weight
        weight *= sub.m
    block[indices] = True
    return block


def compress_h(S: VertexSet, p: GraphParams, d: Decoration, h: int) -> VertexSet:
    """Replace the content of copy h by the initial segment of its local lex order"""
    order = local_order(S, p, d, h)
    start = _copy_start(p, h)
    count = int(S.block(start, start + p.copy_size).sum())
    return S.with_block(start, ordered_prefix(order, p.sub(), count))


def compress_inf(S: VertexSet, p: GraphParams, d: Decoration) -> VertexSet:
    """
    Apply compress_h for h = 0, 1, ... (mod m) until m consecutive applications
    leave the set unchanged

    Raises:
        IterationBoundError: more than m·m^n full cycles were needed
    """
    _require_copies(p)
    limit = p.m * p.m * p.order
    current = S
    unchanged = 0
    steps = 0
    h = 0
    while unchanged < p.m:
        if steps >= limit:
            logger.error(f"compress_inf on {p} did not stabilize after {steps} applications")
            raise IterationBoundError(f"cyclic compression exceeded {limit} applications on {p}")
        following = compress_h(current, p, d, h)
        unchanged = unchanged + 1 if following == current else 0
        current = following
        h = (h + 1) % p.m
        steps += 1
    logger.debug(f"compress_inf stabilized after {steps} applications")
    return current


def is_compressed(S: VertexSet, p: GraphParams, d: Decoration) -> bool:
    return all(compress_h(S, p, d, h) == S for h in range(p.m))


def subadd(S: VertexSet, p: GraphParams, d: Decoration) -> VertexSet:
    """
    Subadditivation: merge the last non-empty copy into the first non-full one

    With h_min the first copy that is not full and h_max the last non-empty
    copy: if ℓ_min + ℓ_max <= m^(n-1), copy h_max is emptied and copy h_min
    refilled to ℓ_min + ℓ_max; otherwise copy h_min is filled and copy h_max
    keeps ℓ_max - (m^(n-1) - ℓ_min). Refills follow the local lex order of the
    receiving copy. |S| is always kept; Θ_{s,t} is only guaranteed not to grow
    on inputs meeting subadd_precondition.

    Raises:
        NotCompressedError: S is not compressed
        CanonicalSetError: h_min >= h_max, i.e. S is already the lex segment
    """
    _require_copies(p)
    d.validate_for(p.m)
    if not is_compressed(S, p, d):
        raise NotCompressedError("subadd needs a compressed set; apply compress_inf first")
    counts = ell_vector(S, p)
    size = p.copy_size
    not_full = [h for h, c in enumerate(counts) if c < size]
    non_empty = [h for h, c in enumerate(counts) if c > 0]
    if not not_full or not non_empty or not_full[0] >= non_empty[-1]:
        raise CanonicalSetError("set is already the lex segment; subadd has nothing to do")
    h_min, h_max = not_full[0], non_empty[-1]
    ell_min, ell_max = counts[h_min], counts[h_max]

    members = S.members.copy()
    members[_copy_start(p, h_min):_copy_start(p, h_min) + size] = False
    members[_copy_start(p, h_max):_copy_start(p, h_max) + size] = False
    base = VertexSet(p, members)
    sub = p.sub()
    if ell_min + ell_max <= size:
        order = local_order(base, p, d, h_min)
        return base.with_block(_copy_start(p, h_min), ordered_prefix(order, sub, ell_min + ell_max))
    filled = base.with_block(_copy_start(p, h_min), np.ones(size, dtype=bool))
    order = local_order(filled, p, d, h_max)
    remaining = ell_max - (size - ell_min)
    return filled.with_block(_copy_start(p, h_max), ordered_prefix(order, sub, remaining))


def check_steiner_step(before: VertexSet, after: VertexSet, p: GraphParams, d: Decoration, operation: str) -> Tuple[int, int]:
    """
    Check that a Steiner step kept |S| and did not increase Θ_{s,t}

    Returns:
        Boundary before and after

    Raises:
        SteinerPropertyError: either property fails
    """
    if after.size != before.size:
        raise SteinerPropertyError(f"{operation} changed |S| from {before.size} to {after.size}")
    old, new = theta_decorated(before, p, d), theta_decorated(after, p, d)
    if new > old:
        raise SteinerPropertyError(f"{operation} increased the boundary from {old} to {new}")
    return old, new


def subadd_precondition(S: VertexSet, p: GraphParams, d: Decoration) -> Optional[bool]:
    """
    Whether S is compressed, minimizes Θ_{s,t} among sets of its size and has
    the lexicographically largest ℓ-vector among those minimizers

    Only under this condition is subadd guaranteed not to increase Θ_{s,t}.
    None when brute force over C(m^n, |S|) subsets is out of reach.
    """
    if not brute_force_affordable(p, S.size, decorated=True):
        return None
    if not is_compressed(S, p, d):
        return False
    optimum = decorated_optimum(p, d, S.size)
    return theta_decorated(S, p, d) == optimum.theta and ell_vector(S, p) == optimum.ell_vector


def check_subadd_step(before: VertexSet, after: VertexSet, p: GraphParams, d: Decoration) -> Tuple[int, int]:
    """
    Check a subadd step: |S| is always kept, and Θ_{s,t} may only grow when
    the input does not meet subadd_precondition

    Returns:
        Boundary before and after

    Raises:
        SteinerPropertyError: |S| changed, or Θ_{s,t} grew on an input meeting the precondition
    """
    if after.size != before.size:
        raise SteinerPropertyError(f"subadd changed |S| from {before.size} to {after.size}")
    old, new = theta_decorated(before, p, d), theta_decorated(after, p, d)
    if new > old:
        if subadd_precondition(before, p, d):
            raise SteinerPropertyError(f"subadd increased the boundary from {old} to {new} on an optimal set")
        logger.info(f"subadd raised the boundary from {old} to {new} on a set outside its optimality precondition")
    return old, new


def reduce_to_lex(S: VertexSet, p: GraphParams, d: Decoration) -> SteinerTrace:
    """
    Alternate compress_inf and subadd until S becomes the lex segment of its size

    Every step is recorded with its Θ_{s,t} delta. compress_inf never increases
    the boundary; subadd can on sets outside subadd_precondition, which leaves the
    trace non-monotone without failing.

    Raises:
        SteinerPropertyError: a step changed |S|, compress_inf increased Θ_{s,t},
            or subadd increased it on a set meeting subadd_precondition
    """
    _require_copies(p)
    trace = SteinerTrace([SteinerStep("start", S, theta_decorated(S, p, d))])
    current = S
    # each subadd fills the first non-full copy or empties the last non-empty one
    for _ in range(2 * p.m + 1):
        compressed = compress_inf(current, p, d)
        old, new = check_steiner_step(current, compressed, p, d, "compress_inf")
        trace.steps.append(SteinerStep("compress_inf", compressed, new, new - old))
        if compressed.is_lex_segment():
            return trace
        merged = subadd(compressed, p, d)
        old, new = check_subadd_step(compressed, merged, p, d)
        trace.steps.append(SteinerStep("subadd", merged, new, new - old))
        current = merged
    raise IterationBoundError(f"reduction on {p} did not reach the lex segment")
