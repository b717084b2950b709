"""
Numeric verification engines

Covers the subadditivity+σ inequality Σ >= 0 over all pairs, its four-part
decomposition and sixteen-case classifier, the k/q additivity lemmas, and
lex-optimality against brute force.
"""

import logging
import sys
from dataclasses import dataclass, field
from multiprocessing import Pool
from typing import Any, Dict, List, NamedTuple, Optional, Tuple

import numpy as np
from tqdm import tqdm

from config.settings import OPTIMALITY_SAMPLE_SIZE, SIZE_LIMITS, SWEEP_CHUNK_SIZE, get_default_jobs
from services.boundary import (
    ProfileTable,
    brute_force_affordable,
    calibrate_corner_term,
    corner_term,
    corner_term_variant,
    profile_bruteforce,
    profile_bruteforce_decorated,
    profile_direct_table,
    profile_recurrence,
    theta_decorated,
)
from services.sweep import CASE_COUNT, ChunkResult, chunk_bounds, init_worker, sweep_chunk
from utils.errors import InvalidParamsError, RangeError, SizeCapError
from utils.graph import Decoration, GraphParams
from utils.lex_order import corner_rank, k_table, q_of, q_table, sigma, sigma_branches, split
from utils.vertex_set import VertexSet

logger = logging.getLogger(__name__)

# Failure details kept per lemma; counts are always complete
MAX_RECORDED_FAILURES = 10


class CaseId(NamedTuple):
    """The four binary conditionals of a pair, each 1 or 2"""

    i: int
    ii: int
    iii: int
    iv: int

    @classmethod
    def from_code(cls, code: int) -> "CaseId":
        return cls(*(2 if code >> shift & 1 else 1 for shift in (3, 2, 1, 0)))

    @property
    def code(self) -> int:
        return (self.i - 1) * 8 + (self.ii - 1) * 4 + (self.iii - 1) * 2 + (self.iv - 1)

    def __str__(self) -> str:
        return f"{self.i}{self.ii}{self.iii}{self.iv}"


ALL_CASES = tuple(CaseId.from_code(code) for code in range(CASE_COUNT))


class SigmaDecomposition(NamedTuple):
    """Σ at level n+1 split into inter-copy, inner-copy, corner and σ parts"""

    inter_copy: int
    inner: int
    corner: int
    sigma: int

    @property
    def total(self) -> int:
        return self.inter_copy + self.inner + self.corner + self.sigma


@dataclass
class SubaddReport:
    params: GraphParams
    pairs_checked: int = 0
    violations: List[Tuple[int, int, int]] = field(default_factory=list)
    case_histogram: Dict[str, int] = field(default_factory=dict)
    min_sigma_slack: Optional[int] = None
    case_min_slack: Dict[str, int] = field(default_factory=dict)
    branch_mismatches: List[Tuple[int, int]] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.violations and not self.branch_mismatches

    def add_chunk(self, chunk: ChunkResult) -> None:
        """Fold a partial sweep into this report"""
        self.pairs_checked += chunk.pairs
        self.violations.extend(chunk.violations)
        self.branch_mismatches.extend(chunk.branch_mismatches)
        if chunk.min_slack is not None:
            self.min_sigma_slack = chunk.min_slack if self.min_sigma_slack is None else min(self.min_sigma_slack, chunk.min_slack)
        for code in np.flatnonzero(chunk.case_counts):
            label = str(CaseId.from_code(int(code)))
            self.case_histogram[label] = self.case_histogram.get(label, 0) + int(chunk.case_counts[code])
            low = int(chunk.case_min[code])
            self.case_min_slack[label] = min(self.case_min_slack.get(label, low), low)

    def merge(self, other: "SubaddReport") -> "SubaddReport":
        """Combine two partial reports of the same instance"""
        if other.params != self.params:
            raise InvalidParamsError(f"cannot merge a report of {other.params} into one of {self.params}")
        merged = SubaddReport(self.params)
        for report in (self, other):
            merged.pairs_checked += report.pairs_checked
            merged.violations.extend(report.violations)
            merged.branch_mismatches.extend(report.branch_mismatches)
            for label, count in report.case_histogram.items():
                merged.case_histogram[label] = merged.case_histogram.get(label, 0) + count
            for label, low in report.case_min_slack.items():
                merged.case_min_slack[label] = min(merged.case_min_slack.get(label, low), low)
            if report.min_sigma_slack is not None:
                merged.min_sigma_slack = (
                    report.min_sigma_slack if merged.min_sigma_slack is None else min(merged.min_sigma_slack, report.min_sigma_slack)
                )
        merged.finalize()
        return merged

    def finalize(self) -> None:
        """Sort every collection so the report does not depend on chunk order"""
        self.violations.sort()
        self.branch_mismatches.sort()
        self.case_histogram = dict(sorted(self.case_histogram.items()))
        self.case_min_slack = dict(sorted(self.case_min_slack.items()))

    def to_dict(self) -> Dict[str, Any]:
        return {
            "n": self.params.n,
            "m": self.params.m,
            "pairs": self.pairs_checked,
            "violations": [{"la": a, "lb": b, "sigma_gap": gap} for a, b, gap in self.violations],
            "cases": dict(self.case_histogram),
            "min_slack": self.min_sigma_slack,
            "case_min_slack": dict(self.case_min_slack),
            "branch_mismatches": [{"la": a, "lb": b} for a, b in self.branch_mismatches],
        }


@dataclass
class OptimalityReport:
    """Brute-force minimum against the lex segment for each checked ℓ"""

    params: GraphParams
    decoration: Decoration
    checked: List[int] = field(default_factory=list)
    mismatches: List[Tuple[int, int, int]] = field(default_factory=list)
    sampled: bool = False

    @property
    def ok(self) -> bool:
        return not self.mismatches

    def to_dict(self) -> Dict[str, Any]:
        return {
            "n": self.params.n,
            "m": self.params.m,
            "s": self.decoration.s,
            "t": self.decoration.t,
            "sampled": self.sampled,
            "checked": list(self.checked),
            "violations": [{"ell": ell, "brute": brute, "lex": lex} for ell, brute, lex in self.mismatches],
        }


@dataclass
class LemmaReport:
    """Assertion counts and failures of the lemma suite on one instance"""

    params: GraphParams
    corner_variant: str
    checks: Dict[str, int] = field(default_factory=dict)
    failure_counts: Dict[str, int] = field(default_factory=dict)
    failures: List[Tuple[str, str]] = field(default_factory=list)
    diagnostics: Dict[str, Any] = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return not any(self.failure_counts.values())

    def record(self, name: str, passed: np.ndarray, describe) -> None:
        """
        Count one vectorized assertion

        Args:
            name: Lemma name
            passed: Boolean array, one entry per checked case
            describe: Maps a failing position to a readable detail
        """
        passed = np.asarray(passed, dtype=bool)
        self.checks[name] = self.checks.get(name, 0) + int(passed.size)
        failing = np.flatnonzero(~passed)
        self.failure_counts[name] = self.failure_counts.get(name, 0) + len(failing)
        recorded = sum(1 for entry in self.failures if entry[0] == name)
        for position in failing[:max(0, MAX_RECORDED_FAILURES - recorded)]:
            self.failures.append((name, describe(int(position))))

    def to_dict(self) -> Dict[str, Any]:
        return {
            "n": self.params.n,
            "m": self.params.m,
            "corner_variant": self.corner_variant,
            "checks": dict(self.checks),
            "violations": [{"lemma": name, "detail": detail} for name, detail in self.failures],
            "failure_counts": dict(self.failure_counts),
            "diagnostics": dict(self.diagnostics),
        }


@dataclass
class SweepReport:
    """Reports of one verification kind over every (n, m) with n + m <= bound"""

    kind: str
    max_nm: int
    reports: List[Any] = field(default_factory=list)
    skipped: List[Tuple[int, int, str]] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return all(report.ok for report in self.reports)

    def to_dict(self) -> Dict[str, Any]:
        return {
            "kind": self.kind,
            "max_nm": self.max_nm,
            "instances": [report.to_dict() for report in self.reports],
            "skipped": [{"n": n, "m": m, "reason": reason} for n, m, reason in self.skipped],
            "ok": self.ok,
        }


def _pair_detail(ell_a: int, ell_b: np.ndarray):
    return lambda i: f"ℓ_a={ell_a}, ℓ_b={int(ell_b[i])}"


def _check_table(table: ProfileTable, n: int, m: int) -> None:
    if table.params != GraphParams(n, m):
        raise InvalidParamsError(f"profile table of {table.params} given for S({n},{m})")


def _check_pair(level: int, m: int, ell_a: int, ell_b: int) -> None:
    if level < 2:
        raise InvalidParamsError(f"the case split needs level n+1 >= 2, got {level}")
    if not 1 <= ell_b <= ell_a or ell_a + ell_b > m ** level:
        raise RangeError(f"need 1 <= ℓ_b <= ℓ_a and ℓ_a+ℓ_b <= {m ** level}, got ℓ_a={ell_a}, ℓ_b={ell_b}")


def sigma_gap(n: int, m: int, ell_a: int, ell_b: int, table: ProfileTable) -> int:
    """
    Σ_{n,m}(ℓ_a,ℓ_b) = |Θ|(ℓ_a) + |Θ|(ℓ_b) - |Θ|(wrap(ℓ_a+ℓ_b)) - σ(ℓ_a,ℓ_b)

    wrap(x) is x up to m^n and x - m^n above it.
    """
    _check_table(table, n, m)
    total = m ** n
    if not 1 <= ell_b <= ell_a <= total:
        raise RangeError(f"Σ needs 1 <= ℓ_b <= ℓ_a <= {total}, got ℓ_a={ell_a}, ℓ_b={ell_b}")
    ell_sum = ell_a + ell_b
    wrapped = ell_sum if ell_sum <= total else ell_sum - total
    return table[ell_a] + table[ell_b] - table[wrapped] - sigma(n, m, ell_a, ell_b)


def classify_case(n_plus_1: int, m: int, ell_a: int, ell_b: int) -> CaseId:
    """
    Conditionals of a pair at level n+1, each 1 for the first alternative:
    i: ℓ_a′+ℓ_b′ < m^n; ii, iii: q_n(ℓ′) <= k_{n+1}(ℓ) for ℓ_a, ℓ_b;
    iv: the same for ℓ_a+ℓ_b
    """
    _check_pair(n_plus_1, m, ell_a, ell_b)
    n = n_plus_1 - 1
    k_a, rest_a = split(n_plus_1, m, ell_a)
    k_b, rest_b = split(n_plus_1, m, ell_b)
    k_sum, rest_sum = split(n_plus_1, m, ell_a + ell_b)
    return CaseId(
        1 if rest_a + rest_b < m ** n else 2,
        1 if q_of(n, m, rest_a) <= k_a else 2,
        1 if q_of(n, m, rest_b) <= k_b else 2,
        1 if q_of(n, m, rest_sum) <= k_sum else 2,
    )


def sigma_decomposition(n_plus_1: int, m: int, ell_a: int, ell_b: int, tables: Tuple[ProfileTable, ProfileTable]) -> SigmaDecomposition:
    """
    Split Σ_{n+1,m}(ℓ_a,ℓ_b) along the recurrence

    Args:
        tables: Profile tables of levels n and n+1

    Returns:
        Inter-copy k(m-k) part, inner |Θ|(n;ℓ′) part, corner part (with the
        calibrated corner constant) and -σ_{n+1}; their sum is Σ exactly
    """
    _check_pair(n_plus_1, m, ell_a, ell_b)
    lower, upper = tables
    n = n_plus_1 - 1
    _check_table(lower, n, m)
    _check_table(upper, n_plus_1, m)
    correction = corner_term_variant().correction
    parts = [split(n_plus_1, m, ell) for ell in (ell_a, ell_b, ell_a + ell_b)]
    signs = (1, 1, -1)
    inter_copy = sum(sign * k * (m - k) for sign, (k, _) in zip(signs, parts))
    inner = sum(sign * lower[rest] for sign, (_, rest) in zip(signs, parts))
    corner = sum(sign * corner_term(k, q_of(n, m, rest), correction) for sign, (k, rest) in zip(signs, parts))
    return SigmaDecomposition(inter_copy, inner, corner, -sigma(n_plus_1, m, ell_a, ell_b))


def inner_sigma_slack(n_plus_1: int, m: int, ell_a: int, ell_b: int, tables: Tuple[ProfileTable, ProfileTable]) -> int:
    """Inner part minus σ_n of the remainders; equals Σ_n of the remainders, so it is never negative"""
    n = n_plus_1 - 1
    rest_a = split(n_plus_1, m, ell_a).ell_prime
    rest_b = split(n_plus_1, m, ell_b).ell_prime
    inner = sigma_decomposition(n_plus_1, m, ell_a, ell_b, tables).inner
    return inner - sigma(n, m, max(rest_a, rest_b), min(rest_a, rest_b))


def sweep_instances(max_nm: int, cap: int) -> Tuple[List[GraphParams], List[Tuple[int, int, str]]]:
    """All (n, m) with n >= 1, m >= 2 and n + m <= max_nm, split by the vertex cap"""
    inside, skipped = [], []
    for m in range(2, min(max_nm - 1, SIZE_LIMITS["max_m"]) + 1):
        for n in range(1, max_nm - m + 1):
            if m ** n > cap:
                skipped.append((n, m, f"{m ** n} vertices above cap {cap}"))
                continue
            inside.append(GraphParams(n, m))
    return inside, skipped


class SubadditivityVerifier:
    """Run the verification kinds on single instances or over n + m <= B"""

    def __init__(self, jobs: int = None, progress: bool = True):
        if jobs is not None and jobs < 1:
            raise InvalidParamsError(f"--jobs must be at least 1, got {jobs}")
        self.jobs = jobs or get_default_jobs()
        self.progress = progress
        self.chunk_size = SWEEP_CHUNK_SIZE
        self.sample_size = OPTIMALITY_SAMPLE_SIZE

    def verify_subadditivity(self, n: int, m: int) -> SubaddReport:
        """
        Check Σ >= 0 for every pair 1 <= ℓ_b <= ℓ_a <= m^n

        At ℓ_a+ℓ_b = m^n both forms of the inequality are evaluated and must
        agree. Pairs are also classified into the sixteen cases when n >= 2
        and ℓ_a+ℓ_b <= m^n.
        """
        p = GraphParams(n, m)
        if n < 1:
            raise InvalidParamsError("subadditivity+σ is stated for n >= 1")
        if p.order > SIZE_LIMITS["sweep_max_vertices"]:
            raise SizeCapError(f"{p} has {p.order} vertices; pair sweeps are capped at {SIZE_LIMITS['sweep_max_vertices']}")
        table = profile_recurrence(p)
        bounds = chunk_bounds(p.order, self.chunk_size)
        report = SubaddReport(p)
        progress = dict(total=len(bounds), desc=f"Σ on {p}", file=sys.stderr, disable=None if self.progress else True)
        if self.jobs <= 1 or len(bounds) <= 1:
            init_worker(n, m, table.values)
            for chunk in tqdm(map(sweep_chunk, bounds), **progress):
                report.add_chunk(chunk)
        else:
            initargs = (n, m, np.asarray(table.values))
            with Pool(processes=min(self.jobs, len(bounds)), initializer=init_worker, initargs=initargs) as pool:
                for chunk in tqdm(pool.imap_unordered(sweep_chunk, bounds), **progress):
                    report.add_chunk(chunk)
        report.finalize()
        if report.ok:
            logger.info(f"Σ >= 0 holds on {p}: {report.pairs_checked} pairs, min slack {report.min_sigma_slack}")
        else:
            logger.error(f"Σ violated on {p}: {len(report.violations)} pairs, {len(report.branch_mismatches)} branch mismatches")
        return report

    def _optimality_ells(self, p: GraphParams, decorated: bool) -> Tuple[List[int], bool]:
        if p.order <= SIZE_LIMITS["brute_force_max_vertices"]:
            return list(range(p.order + 1)), False
        affordable = [ell for ell in range(p.order + 1) if brute_force_affordable(p, ell, decorated)]
        if len(affordable) <= self.sample_size:
            return affordable, True
        picks = np.linspace(0, len(affordable) - 1, self.sample_size).round().astype(int)
        return sorted({affordable[i] for i in picks}), True

    def verify_lex_optimality(self, n: int, m: int, decoration: Decoration = None) -> OptimalityReport:
        """
        Compare the brute-force minimum of Θ_{s,t} with the lex segment

        Every ℓ is checked up to the brute-force vertex cap; above it only ℓ
        whose subset count fits the budget are sampled.
        """
        p = GraphParams(n, m)
        if p.order > SIZE_LIMITS["optimality_max_vertices"]:
            raise SizeCapError(f"{p} has {p.order} vertices; optimality checks are capped at {SIZE_LIMITS['optimality_max_vertices']}")
        d = decoration or Decoration.plain(m)
        d.validate_for(m)
        plain = d == Decoration.plain(m)
        ells, sampled = self._optimality_ells(p, decorated=not plain)
        report = OptimalityReport(p, d, sampled=sampled)
        direct = profile_direct_table(p) if plain else None
        for ell in ells:
            if plain:
                brute, lex = profile_bruteforce(p, ell), direct[ell]
            else:
                brute = profile_bruteforce_decorated(p, d, ell)
                lex = theta_decorated(VertexSet.lex_segment(p, ell), p, d)
            report.checked.append(ell)
            if brute != lex:
                report.mismatches.append((ell, brute, lex))
        if report.ok:
            logger.info(f"Lex segments are optimal on {p} with d=({d.s},{d.t}) for {len(ells)} values of ℓ")
        else:
            logger.error(f"Lex segments are not optimal on {p} with d=({d.s},{d.t}): {report.mismatches[:5]}")
        return report

    def verify_lemma_suite(self, n: int, m: int) -> LemmaReport:
        """
        Exhaustive checks of the k/q arithmetic and profile symmetries

        Covers q duality and its corner-rank oracle, k <= q <= k+1, monotonicity,
        k additivity, both q additivity statements, agreement of the two σ
        forms at ℓ_a+ℓ_b = m^n, profile duality, the strengthened inequalities
        for m = 3 and, on small instances, the Σ decomposition identity.
        """
        p = GraphParams(n, m)
        if n < 1:
            raise InvalidParamsError("the lemma suite needs n >= 1")
        if p.order > SIZE_LIMITS["lemma_max_vertices"]:
            raise SizeCapError(f"{p} has {p.order} vertices; the lemma suite is capped at {SIZE_LIMITS['lemma_max_vertices']}")
        report = LemmaReport(p, corner_variant=corner_term_variant().label)
        total, size = p.order, p.copy_size
        q, k = q_table(n, m), k_table(n, m)
        ell = np.arange(total + 1, dtype=np.int64)
        values = profile_recurrence(p).values

        corner_ranks = np.array([corner_rank(i, p) for i in range(m)], dtype=np.int64)
        report.record("q_duality", q[::-1] == m - q, lambda i: f"ℓ={i}")
        report.record("q_corner_oracle", q == np.searchsorted(corner_ranks, ell, side="right"), lambda i: f"ℓ={i}")
        report.record("k_q_sandwich", (k <= q) & (q <= k + 1) & (k >= 0) & (k <= m), lambda i: f"ℓ={i}")
        report.record("monotone", (np.diff(q) >= 0) & (np.diff(k) >= 0), lambda i: f"ℓ={i + 1}")
        report.record("profile_duality", values == values[::-1], lambda i: f"ℓ={i}")

        wrap_offsets = {0: 0, 1: 0}
        for ell_a in range(total + 1):
            ell_b = np.arange(ell_a + 1, dtype=np.int64)
            ell_sum = ell_a + ell_b
            inside = ell_sum <= total
            b_in, s_in = ell_b[inside], ell_sum[inside]
            rest_a = ell_a - k[ell_a] * size
            rest_b, rest_s = b_in - k[b_in] * size, s_in - k[s_in] * size
            carry = (rest_a + rest_b >= size).astype(np.int64)
            report.record(
                "k_additivity",
                (k[s_in] == k[ell_a] + k[b_in] + carry) & (rest_s == rest_a + rest_b - carry * size),
                _pair_detail(ell_a, b_in),
            )

            low = ell_sum < total
            offset = q[ell_sum[low]] - q[ell_a] - q[ell_b[low]]
            report.record("q_additivity", (offset == 0) | (offset == -1), _pair_detail(ell_a, ell_b[low]))

            high = ~low
            b_hi = ell_b[high]
            offset = q[ell_sum[high] - total] - (q[ell_a] + q[b_hi] - m)
            report.record("q_additivity_wrapped", (offset == 0) | (offset == 1), _pair_detail(ell_a, b_hi))
            wrap_offsets[0] += int(np.count_nonzero(offset == 0))
            wrap_offsets[1] += int(np.count_nonzero(offset == 1))

            for b in ell_b[ell_sum == total]:
                first, second = sigma_branches(n, m, ell_a, int(b))
                report.record("sigma_branches_agree", np.array([first == second]), lambda i, b=int(b): f"ℓ_a={ell_a}, ℓ_b={b}")

            if m == 3:
                self._record_m3(report, values, ell_a, ell_b, total)

        report.diagnostics["q_wrapped_offsets"] = {"0": wrap_offsets[0], "+1": wrap_offsets[1]}
        calibration = calibrate_corner_term()
        if (n, m) in calibration.matches:
            report.diagnostics["corner_calibration"] = {
                "selected": calibration.variant.label,
                "matching_corrections": list(calibration.matches[(n, m)]),
                "selected_matches_here": calibration.variant.correction in calibration.matches[(n, m)],
            }
        if n >= 2 and p.order <= SIZE_LIMITS["decomposition_max_vertices"]:
            self._record_decomposition(report, p)
        if report.ok:
            logger.info(f"Lemma suite passed on {p} ({sum(report.checks.values())} assertions)")
        else:
            logger.error(f"Lemma suite failed on {p}: {report.failure_counts}")
        return report

    @staticmethod
    def _record_m3(report: LemmaReport, values: np.ndarray, ell_a: int, ell_b: np.ndarray, total: int) -> None:
        ell_sum = ell_a + ell_b
        combined = values[ell_a] + values[ell_b]
        first = (ell_a < total) & (ell_b > 0) & (ell_sum <= total)
        b_first = ell_b[first]
        report.record(
            "m3_strict_subadditivity",
            values[ell_sum[first]] + 1 <= combined[first],
            lambda i: f"ℓ_a={ell_a}, ℓ_b={int(b_first[i])}",
        )
        second = (2 * ell_a < total) & (ell_b > 0) & (2 * ell_sum > total)
        b_second = ell_b[second]
        report.record(
            "m3_half_crossing",
            values[ell_sum[second]] + 2 <= combined[second],
            lambda i: f"ℓ_a={ell_a}, ℓ_b={int(b_second[i])}",
        )

    @staticmethod
    def _record_decomposition(report: LemmaReport, p: GraphParams) -> None:
        tables = (profile_recurrence(p.sub()), profile_recurrence(p))
        identity, inner_bound, labels = [], [], []
        for ell_a in range(1, p.order + 1):
            for ell_b in range(1, min(ell_a, p.order - ell_a) + 1):
                parts = sigma_decomposition(p.n, p.m, ell_a, ell_b, tables)
                identity.append(parts.total == sigma_gap(p.n, p.m, ell_a, ell_b, tables[1]))
                inner_bound.append(inner_sigma_slack(p.n, p.m, ell_a, ell_b, tables) >= 0)
                labels.append((ell_a, ell_b))
        describe = lambda i: f"ℓ_a={labels[i][0]}, ℓ_b={labels[i][1]}"
        report.record("decomposition_identity", np.array(identity, dtype=bool), describe)
        report.record("decomposition_inner_bound", np.array(inner_bound, dtype=bool), describe)

    def verify_subadditivity_sweep(self, max_nm: int) -> SweepReport:
        return self._sweep("subadd", max_nm, SIZE_LIMITS["sweep_max_vertices"], self.verify_subadditivity)

    def verify_lex_optimality_sweep(self, max_nm: int, s: int = None, t: int = None) -> SweepReport:
        """Decorated when s or t is given; instances whose m cannot hold the decoration are skipped"""
        decorated = s is not None or t is not None

        def decoration_for(m: int) -> Optional[Decoration]:
            inner = s or 0
            neutral = m - inner if t is None else t
            if neutral < 0 or inner + neutral > m:
                return None
            return Decoration(inner, neutral)

        def excluded(p: GraphParams) -> Optional[str]:
            if decorated and decoration_for(p.m) is None:
                return f"m={p.m} cannot hold s={s or 0}, t={t}"
            return None

        def run(n: int, m: int) -> OptimalityReport:
            return self.verify_lex_optimality(n, m, decoration_for(m) if decorated else None)

        return self._sweep("optimal", max_nm, SIZE_LIMITS["optimality_max_vertices"], run, excluded)

    def verify_lemma_suite_sweep(self, max_nm: int) -> SweepReport:
        return self._sweep("lemmas", max_nm, SIZE_LIMITS["lemma_max_vertices"], self.verify_lemma_suite)

    def _sweep(self, kind: str, max_nm: int, cap: int, run, excluded=None) -> SweepReport:
        if max_nm < 3:
            raise InvalidParamsError(f"--max-nm must be at least 3 (n >= 1, m >= 2), got {max_nm}")
        instances, skipped = sweep_instances(max_nm, cap)
        result = SweepReport(kind, max_nm, skipped=skipped)
        for p in instances:
            reason = excluded(p) if excluded else None
            if reason:
                skipped.append((p.n, p.m, reason))
                continue
            result.reports.append(run(p.n, p.m))
        for n, m, reason in skipped:
            logger.info(f"Skipping S({n},{m}) in the {kind} sweep: {reason}")
        return result


# Create a global verifier instance
verifier = SubadditivityVerifier()


def verify_subadditivity(n: int, m: int, jobs: int = None) -> SubaddReport:
    return SubadditivityVerifier(jobs=jobs, progress=False).verify_subadditivity(n, m)


def verify_lex_optimality(n: int, m: int, decoration: Decoration = None) -> OptimalityReport:
    return verifier.verify_lex_optimality(n, m, decoration)


def verify_lemma_suite(n: int, m: int) -> LemmaReport:
    return verifier.verify_lemma_suite(n, m)
