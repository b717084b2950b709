import pytest

from services.boundary import profile_recurrence
from services.sweep import case_codes, chunk_bounds, init_worker, sweep_chunk
from services.verifier import (
    ALL_CASES,
    CaseId,
    SubaddReport,
    SubadditivityVerifier,
    classify_case,
    inner_sigma_slack,
    sigma_decomposition,
    sigma_gap,
    sweep_instances,
    verify_lemma_suite,
    verify_lex_optimality,
    verify_subadditivity,
)
from utils.errors import InvalidParamsError, RangeError, SizeCapError
from utils.graph import Decoration, GraphParams


@pytest.fixture
def inline_verifier() -> SubadditivityVerifier:
    return SubadditivityVerifier(jobs=1, progress=False)


def tables(n: int, m: int):
    return profile_recurrence(GraphParams(n - 1, m)), profile_recurrence(GraphParams(n, m))


class TestSigmaGap:
    def test_examples(self):
        assert sigma_gap(2, 3, 3, 3, profile_recurrence(GraphParams(2, 3))) == 0
        assert sigma_gap(1, 3, 2, 1, profile_recurrence(GraphParams(1, 3))) == 2

    def test_single_level_closed_form(self):
        for m in range(2, 9):
            table = profile_recurrence(GraphParams(1, m))
            for a in range(1, m + 1):
                for b in range(1, min(a, m - a) + 1):
                    assert sigma_gap(1, m, a, b, table) == 2 * b * (a - 1)

    def test_wrong_table(self):
        with pytest.raises(InvalidParamsError):
            sigma_gap(2, 3, 3, 3, profile_recurrence(GraphParams(2, 4)))

    def test_bad_pair(self):
        with pytest.raises(RangeError):
            sigma_gap(2, 3, 2, 3, profile_recurrence(GraphParams(2, 3)))


class TestCases:
    def test_labels(self):
        assert len(set(ALL_CASES)) == 16
        assert str(CaseId.from_code(0)) == "1111"
        assert str(CaseId.from_code(15)) == "2222"
        assert CaseId(2, 1, 2, 1).code == 10

    def test_examples(self):
        assert str(classify_case(2, 3, 4, 4)) == "1111"
        assert str(classify_case(2, 3, 1, 1)) == "1222"

    def test_level_one_is_rejected(self):
        with pytest.raises(InvalidParamsError):
            classify_case(1, 3, 1, 1)

    @pytest.mark.parametrize("n,m", [(2, 3), (3, 3), (2, 5), (4, 2)])
    def test_vectorized_codes_agree(self, n, m):
        total = m ** n
        pairs = [(a, b) for a in range(1, total + 1) for b in range(1, min(a, total - a) + 1)]
        codes = case_codes(n, m, [a for a, _ in pairs], [b for _, b in pairs])
        assert [int(c) for c in codes] == [classify_case(n, m, a, b).code for a, b in pairs]


class TestDecomposition:
    def test_inter_copy_example(self):
        parts = sigma_decomposition(2, 3, 3, 3, tables(2, 3))
        assert parts.inter_copy == 2
        assert parts.total == 0

    @pytest.mark.parametrize("n,m", [(2, 3), (2, 4), (3, 3), (3, 2)])
    def test_parts_sum_to_sigma_gap(self, n, m):
        lower, upper = tables(n, m)
        total = m ** n
        for a in range(1, total + 1):
            for b in range(1, min(a, total - a) + 1):
                parts = sigma_decomposition(n, m, a, b, (lower, upper))
                assert parts.total == sigma_gap(n, m, a, b, upper)
                assert inner_sigma_slack(n, m, a, b, (lower, upper)) >= 0

    def test_tables_must_match(self):
        lower, _ = tables(2, 3)
        with pytest.raises(InvalidParamsError):
            sigma_decomposition(2, 3, 3, 3, (lower, lower))


class TestSubadditivity:
    def test_s23(self, inline_verifier):
        report = inline_verifier.verify_subadditivity(2, 3)
        assert report.ok
        assert report.pairs_checked == 45
        assert report.min_sigma_slack >= 0
        assert sum(report.case_histogram.values()) == 20
        assert report.case_histogram["1111"] > 0
        assert report.case_histogram["1222"] > 0

    def test_s13(self):
        report = verify_subadditivity(1, 3)
        assert report.ok
        assert report.pairs_checked == 6
        assert report.case_histogram == {}

    @pytest.mark.parametrize("m", range(2, 13))
    def test_single_level(self, inline_verifier, m):
        assert inline_verifier.verify_subadditivity(1, m).ok

    def test_rejects_level_zero(self, inline_verifier):
        with pytest.raises(InvalidParamsError):
            inline_verifier.verify_subadditivity(0, 3)

    def test_size_cap(self, inline_verifier):
        with pytest.raises(SizeCapError):
            inline_verifier.verify_subadditivity(25, 2)

    def test_result_does_not_depend_on_jobs(self):
        single = SubadditivityVerifier(jobs=1, progress=False)
        pooled = SubadditivityVerifier(jobs=2, progress=False)
        single.chunk_size = pooled.chunk_size = 5
        assert single.verify_subadditivity(3, 3).to_dict() == pooled.verify_subadditivity(3, 3).to_dict()

    def test_merge_matches_single_pass(self, inline_verifier):
        p = GraphParams(3, 3)
        init_worker(3, 3, profile_recurrence(p).values)
        chunks = [sweep_chunk(bounds) for bounds in chunk_bounds(p.order, 4)]
        first, second = SubaddReport(p), SubaddReport(p)
        for i, chunk in enumerate(chunks):
            (first if i % 2 else second).add_chunk(chunk)
        merged = first.merge(second)
        assert merged.to_dict() == inline_verifier.verify_subadditivity(3, 3).to_dict()

    def test_merge_rejects_other_instances(self):
        with pytest.raises(InvalidParamsError):
            SubaddReport(GraphParams(2, 3)).merge(SubaddReport(GraphParams(3, 2)))

    def test_chunk_bounds_cover_every_ell(self):
        bounds = chunk_bounds(10, 4)
        assert bounds == [(1, 5), (5, 9), (9, 11)]

    def test_sweep(self, inline_verifier):
        result = inline_verifier.verify_subadditivity_sweep(8)
        assert result.ok
        assert not result.skipped
        assert {(r.params.n, r.params.m) for r in result.reports} >= {(6, 2), (5, 3), (1, 7)}

    @pytest.mark.slow
    def test_wide_sweep(self, inline_verifier):
        assert inline_verifier.verify_subadditivity_sweep(12).ok


class TestOptimality:
    @pytest.mark.parametrize("n,m", [(2, 3), (1, 5), (3, 2), (2, 2), (2, 4)])
    def test_plain(self, n, m):
        report = verify_lex_optimality(n, m)
        assert report.ok
        assert not report.sampled
        assert report.checked == list(range(m ** n + 1))

    def test_decorated(self):
        report = verify_lex_optimality(2, 3, Decoration(1, 1))
        assert report.ok
        assert report.to_dict()["s"] == 1

    def test_sampled_above_the_vertex_cap(self):
        report = verify_lex_optimality(2, 5)
        assert report.ok
        assert report.sampled
        assert 0 < len(report.checked) <= 16

    def test_cap(self):
        with pytest.raises(SizeCapError):
            verify_lex_optimality(13, 2)

    def test_sweep(self, inline_verifier):
        result = inline_verifier.verify_lex_optimality_sweep(6)
        assert result.ok
        assert result.to_dict()["ok"] is True

    def test_decorated_sweep(self, inline_verifier):
        result = inline_verifier.verify_lex_optimality_sweep(5, s=1)
        assert result.ok
        assert all(r.decoration.s == 1 for r in result.reports)

    def test_decorated_sweep_skips_small_alphabets(self, inline_verifier):
        result = inline_verifier.verify_lex_optimality_sweep(5, s=2, t=1)
        assert result.ok
        assert [(n, m) for n, m, _ in result.skipped] == [(1, 2), (2, 2), (3, 2)]
        assert result.skipped[0][2] == "m=2 cannot hold s=2, t=1"
        assert {(r.params.n, r.params.m) for r in result.reports} == {(1, 3), (2, 3), (1, 4)}
        assert all((r.decoration.s, r.decoration.t) == (2, 1) for r in result.reports)


class TestLemmaSuite:
    @pytest.mark.parametrize("n,m", [(2, 3), (4, 2), (1, 3), (3, 3), (2, 5)])
    def test_passes(self, n, m):
        report = verify_lemma_suite(n, m)
        assert report.ok, report.failures
        assert report.checks["q_duality"] == m ** n + 1

    def test_wrapped_offsets_include_plus_one(self):
        report = verify_lemma_suite(2, 3)
        assert report.diagnostics["q_wrapped_offsets"]["+1"] > 0
        assert report.checks["decomposition_identity"] > 0

    def test_m3_checks_only_for_m3(self):
        assert "m3_strict_subadditivity" in verify_lemma_suite(2, 3).checks
        assert "m3_strict_subadditivity" not in verify_lemma_suite(2, 4).checks

    def test_calibration_diagnostic(self):
        diagnostic = verify_lemma_suite(2, 3).diagnostics["corner_calibration"]
        assert diagnostic["selected"] == "q-2k-1"
        assert diagnostic["selected_matches_here"]

    def test_rejects_level_zero(self):
        with pytest.raises(InvalidParamsError):
            verify_lemma_suite(0, 3)

    def test_sweep(self, inline_verifier):
        assert inline_verifier.verify_lemma_suite_sweep(7).ok

    @pytest.mark.slow
    def test_wide_sweep(self, inline_verifier):
        assert inline_verifier.verify_lemma_suite_sweep(10).ok


class TestSweepInstances:
    def test_split_by_cap(self):
        inside, skipped = sweep_instances(5, 8)
        assert GraphParams(3, 2) in inside
        assert skipped == [(2, 3, "9 vertices above cap 8")]

    def test_bound_too_small(self, inline_verifier):
        with pytest.raises(InvalidParamsError):
            inline_verifier.verify_subadditivity_sweep(2)


@pytest.mark.parametrize("jobs", [0, -1])
def test_rejects_non_positive_jobs(jobs):
    with pytest.raises(InvalidParamsError):
        SubadditivityVerifier(jobs=jobs)
