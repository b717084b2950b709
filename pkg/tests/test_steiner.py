import itertools

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from services.boundary import decorated_optimum, theta_decorated
from services.steiner import (
    LocalOrder,
    check_steiner_step,
    check_subadd_step,
    compress_h,
    compress_inf,
    ell_vector,
    is_compressed,
    local_order,
    reduce_to_lex,
    subadd,
    subadd_precondition,
)
from utils.errors import CanonicalSetError, InvalidParamsError, NotCompressedError, SteinerPropertyError
from utils.graph import Decoration, GraphParams, Vertex
from utils.vertex_set import VertexSet


def vs(p: GraphParams, *words: str) -> VertexSet:
    return VertexSet.from_vertices(p, [Vertex(tuple(int(c) for c in w)) for w in words])


SMALL_GRAPHS = [(1, 2), (1, 3), (1, 4), (2, 2), (2, 3), (3, 2), (2, 4), (3, 3), (4, 2)]


@st.composite
def decorated_sets(draw):
    n, m = draw(st.sampled_from(SMALL_GRAPHS))
    p = GraphParams(n, m)
    s = draw(st.integers(0, m))
    t = draw(st.integers(0, m - s))
    indices = draw(st.sets(st.integers(0, p.order - 1)))
    return p, Decoration(s, t), VertexSet.from_indices(p, indices)


class TestLocalOrder:
    def test_plain_order(self, s23, plain3):
        order = local_order(vs(s23, "00", "01", "11"), s23, plain3, 1)
        assert (order.inner, order.neutral, order.outer) == ((0,), (1,), (2,))
        assert order.is_identity()

    def test_inner_label_moves_first(self, s23, plain3):
        order = local_order(vs(s23, "00", "20"), s23, plain3, 0)
        assert order.sequence == (2, 0, 1)
        assert order.permutation == (1, 2, 0)
        assert not order.is_identity()

    def test_decorated_labels(self, s23):
        d = Decoration(1, 1)
        empty = VertexSet.empty(s23)
        assert local_order(empty, s23, d, 0) == LocalOrder(0, (0,), (), (1, 2))
        assert local_order(empty, s23, d, 1) == LocalOrder(1, (), (1,), (0, 2))
        assert local_order(empty, s23, d, 2) == LocalOrder(2, (), (), (0, 1, 2))

    def test_bad_copy(self, s23, plain3):
        with pytest.raises(InvalidParamsError):
            local_order(VertexSet.empty(s23), s23, plain3, 3)

    def test_needs_copies(self):
        p = GraphParams(0, 3)
        with pytest.raises(InvalidParamsError):
            ell_vector(VertexSet.full(p))


class TestCompression:
    def test_compress_single_copy(self, s23, plain3):
        S = vs(s23, "00", "01", "11")
        T = compress_h(S, s23, plain3, 1)
        assert T == vs(s23, "00", "01", "10")
        assert check_steiner_step(S, T, s23, plain3, "compress") == (5, 4)

    def test_compress_follows_inner_label(self, s23, plain3):
        S = vs(s23, "00", "20")
        T = compress_h(S, s23, plain3, 0)
        assert T == vs(s23, "02", "20")
        assert theta_decorated(S, s23, plain3) == 5
        assert theta_decorated(T, s23, plain3) == 4

    def test_full_cycle(self, s23, plain3):
        S = vs(s23, "00", "01", "11")
        T = compress_inf(S, s23, plain3)
        assert T == vs(s23, "00", "01", "10")
        assert is_compressed(T, s23, plain3)

    def test_compressed_detection(self, s23, plain3):
        assert is_compressed(vs(s23, "00", "02", "20"), s23, plain3)
        assert not is_compressed(vs(s23, "00", "01", "20"), s23, plain3)

    def test_ell_vector(self, s23):
        assert ell_vector(vs(s23, "00", "02", "20")) == (2, 0, 1)
        assert ell_vector(VertexSet.full(s23)) == (3, 3, 3)


class TestSubadd:
    def test_merges_into_first_copy(self, s23, plain3):
        S = vs(s23, "00", "02", "20")
        T = subadd(S, s23, plain3)
        assert T == vs(s23, "00", "01", "02")
        assert check_steiner_step(S, T, s23, plain3, "subadd") == (4, 2)

    def test_overflow_fills_first_copy(self, s23, plain3):
        S = compress_inf(vs(s23, "00", "01", "02", "10", "11", "20", "21"), s23, plain3)
        assert ell_vector(S) == (3, 2, 2)
        T = subadd(S, s23, plain3)
        assert ell_vector(T) == (3, 3, 1)
        assert T.size == S.size
        assert theta_decorated(T, s23, plain3) <= theta_decorated(S, s23, plain3)

    def test_requires_compressed_set(self, s23, plain3):
        with pytest.raises(NotCompressedError):
            subadd(vs(s23, "00", "01", "20"), s23, plain3)

    def test_canonical_sets(self, s23, plain3):
        with pytest.raises(CanonicalSetError):
            subadd(VertexSet.lex_segment(s23, 2), s23, plain3)
        with pytest.raises(CanonicalSetError):
            subadd(VertexSet.full(s23), s23, plain3)
        with pytest.raises(CanonicalSetError):
            subadd(VertexSet.empty(s23), s23, plain3)

    def test_can_grow_the_boundary_of_an_optimal_set(self, s23, plain3):
        S = vs(s23, "12", "20", "21", "22")
        assert is_compressed(S, s23, plain3)
        T = subadd(S, s23, plain3)
        assert T == vs(s23, "00", "01", "02", "12")
        assert check_subadd_step(S, T, s23, plain3) == (3, 5)
        # optimal, but a larger ℓ-vector is reachable
        assert decorated_optimum(s23, plain3, 4) == (3, (3, 1, 0))
        assert subadd_precondition(S, s23, plain3) is False

    def test_can_grow_the_boundary_with_outer_corners(self, s23):
        d = Decoration(0, 0)
        S = vs(s23, "12", "21")
        assert is_compressed(S, s23, d)
        T = subadd(S, s23, d)
        assert T == vs(s23, "00", "12")
        assert check_subadd_step(S, T, s23, d) == (4, 6)
        assert decorated_optimum(s23, d, 2) == (4, (2, 0, 0))
        assert not subadd_precondition(S, s23, d)


class TestSubaddPrecondition:
    def test_lex_segment_meets_it(self, s23, plain3):
        assert subadd_precondition(VertexSet.lex_segment(s23, 4), s23, plain3) is True

    def test_uncompressed_set_fails_it(self, s23, plain3):
        assert subadd_precondition(vs(s23, "00", "01", "20"), s23, plain3) is False

    def test_unknown_beyond_brute_force(self):
        p = GraphParams(4, 3)
        S = VertexSet.lex_segment(p, 10)
        assert subadd_precondition(S, p, Decoration.plain(3)) is None

    def test_growth_on_a_set_meeting_it_is_an_error(self, s23, plain3):
        S = VertexSet.lex_segment(s23, 4)
        with pytest.raises(SteinerPropertyError):
            check_subadd_step(S, vs(s23, "00", "01", "02", "12"), s23, plain3)

    def test_size_change_is_an_error(self, s23, plain3):
        with pytest.raises(SteinerPropertyError):
            check_subadd_step(vs(s23, "00", "02", "20"), vs(s23, "00", "01"), s23, plain3)

    def test_optimum_needs_copies(self):
        with pytest.raises(InvalidParamsError):
            decorated_optimum(GraphParams(0, 3), Decoration.plain(3), 1)


def assert_reduction_contract(S: VertexSet, p: GraphParams, d: Decoration) -> None:
    trace = reduce_to_lex(S, p, d)
    assert trace.final == VertexSet.lex_segment(p, S.size)
    assert all(step.vertex_set.size == S.size for step in trace.steps)
    assert all(step.operation == "subadd" for step in trace.steps if step.delta > 0)
    # the lex segment is optimal, so the reduction never ends above its start
    assert trace.boundaries()[-1] <= trace.boundaries()[0]


class TestReduction:
    def test_trace(self, s23, plain3):
        trace = reduce_to_lex(vs(s23, "00", "01", "20"), s23, plain3)
        assert trace.final == VertexSet.lex_segment(s23, 3)
        assert trace.steps[0].operation == "start"
        assert trace.boundaries() == [6, 4, 2, 2]
        assert [step.delta for step in trace.steps] == [0, -2, -2, 0]
        assert [step.operation for step in trace.steps] == ["start", "compress_inf", "subadd", "compress_inf"]
        assert trace.monotone

    def test_non_monotone_trace(self, s23, plain3):
        trace = reduce_to_lex(vs(s23, "12", "20", "21", "22"), s23, plain3)
        assert trace.final == VertexSet.lex_segment(s23, 4)
        assert trace.boundaries() == [3, 3, 5, 3]
        assert [step.delta for step in trace.steps] == [0, 0, 2, -2]
        assert not trace.monotone

    def test_lex_segment_is_fixed(self, s23, plain3):
        trace = reduce_to_lex(VertexSet.lex_segment(s23, 5), s23, plain3)
        assert [step.operation for step in trace.steps] == ["start", "compress_inf"]

    def test_step_check_rejects_growth(self, s23, plain3):
        with pytest.raises(SteinerPropertyError):
            check_steiner_step(vs(s23, "00", "01", "02"), vs(s23, "00", "01", "11"), s23, plain3, "compress")
        with pytest.raises(SteinerPropertyError):
            check_steiner_step(vs(s23, "00"), vs(s23, "00", "01"), s23, plain3, "compress")


class TestSteinerProperties:
    @settings(max_examples=150, deadline=None)
    @given(decorated_sets(), st.data())
    def test_compress_h_keeps_size_and_never_grows_boundary(self, case, data):
        p, d, S = case
        h = data.draw(st.integers(0, p.m - 1))
        T = compress_h(S, p, d, h)
        assert ell_vector(T) == ell_vector(S)
        assert theta_decorated(T, p, d) <= theta_decorated(S, p, d)
        assert compress_h(T, p, d, h) == T

    @settings(max_examples=100, deadline=None)
    @given(decorated_sets())
    def test_compress_inf_reaches_a_compressed_set(self, case):
        p, d, S = case
        T = compress_inf(S, p, d)
        assert is_compressed(T, p, d)
        assert T.size == S.size

    @settings(max_examples=100, deadline=None)
    @given(decorated_sets())
    def test_reduction_ends_on_the_lex_segment(self, case):
        p, d, S = case
        assert_reduction_contract(S, p, d)


RANDOM_GRAPHS = [(4, 3), (3, 4), (6, 2), (2, 9)]


@pytest.mark.slow
def test_random_sets_on_larger_graphs():
    rng = np.random.default_rng(20240517)
    for _ in range(10_000):
        n, m = RANDOM_GRAPHS[rng.integers(len(RANDOM_GRAPHS))]
        p = GraphParams(n, m)
        s = int(rng.integers(0, m + 1))
        d = Decoration(s, int(rng.integers(0, m - s + 1)))
        size = int(rng.integers(0, p.order + 1))
        S = VertexSet.from_indices(p, rng.choice(p.order, size=size, replace=False))

        h = int(rng.integers(0, m))
        check_steiner_step(S, compress_h(S, p, d, h), p, d, f"compress_{h}")
        T = compress_inf(S, p, d)
        check_steiner_step(S, T, p, d, "compress_inf")
        assert is_compressed(T, p, d)
        assert_reduction_contract(S, p, d)


@pytest.mark.slow
@pytest.mark.parametrize("n,m", [(1, 3), (2, 2), (1, 4), (2, 3), (3, 2)])
def test_every_subset_reduces(n, m):
    p = GraphParams(n, m)
    for s in range(m + 1):
        for t in range(m + 1 - s):
            d = Decoration(s, t)
            for bits in itertools.product((False, True), repeat=p.order):
                assert_reduction_contract(VertexSet(p, bits), p, d)


@pytest.mark.slow
@pytest.mark.parametrize("n,m", [(2, 4), (4, 2)])
@pytest.mark.parametrize("s,t", [(0, None), (0, 0), (1, 1)])
def test_every_subset_of_sixteen_vertices_reduces(n, m, s, t):
    p = GraphParams(n, m)
    d = Decoration(s, m - s if t is None else t)
    reduced = set()
    for bits in itertools.product((False, True), repeat=p.order):
        S = VertexSet(p, bits)
        T = compress_inf(S, p, d)
        check_steiner_step(S, T, p, d, "compress_inf")
        if T not in reduced:
            assert_reduction_contract(T, p, d)
            reduced.add(T)
