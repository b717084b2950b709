from fractions import Fraction

import pytest

from services.boundary import profile_recurrence
from services.metrics import (
    bisection_width,
    bisection_width_formula,
    cheeger,
    cheeger_formula,
    cheeger_with_argmin,
    max_profile,
    max_profile_formula,
    metrics_report,
)
from utils.errors import InvalidParamsError
from utils.graph import GraphParams

SMALL_INSTANCES = [(n, m) for m in range(2, 7) for n in range(1, 12) if m ** n <= 2187]


class TestExamples:
    def test_s23(self):
        assert bisection_width(2, 3) == 3
        assert max_profile(2, 3) == 3
        assert cheeger_with_argmin(2, 3) == (Fraction(2, 3), 3)

    @pytest.mark.parametrize(
        "n,m,expected",
        [(2, 2, Fraction(1, 2)), (1, 2, Fraction(1)), (3, 3, Fraction(2, 9)), (2, 5, Fraction(3, 5)), (2, 4, Fraction(1, 2))],
    )
    def test_cheeger(self, n, m, expected):
        assert cheeger(n, m) == expected
        assert cheeger_formula(n, m) == expected

    def test_complete_graph(self):
        assert bisection_width(1, 5) == 6
        assert max_profile(1, 5) == 6
        assert cheeger(1, 5) == 3

    def test_explicit_table(self):
        table = profile_recurrence(GraphParams(2, 3))
        assert bisection_width(2, 3, table) == 3
        with pytest.raises(InvalidParamsError):
            bisection_width(2, 4, table)

    def test_level_zero(self):
        with pytest.raises(InvalidParamsError):
            cheeger(0, 3)


class TestClosedForms:
    @pytest.mark.parametrize("n,m", SMALL_INSTANCES)
    def test_bisection_width(self, n, m):
        assert bisection_width(n, m) == bisection_width_formula(n, m)

    @pytest.mark.parametrize("n,m", [(n, m) for n, m in SMALL_INSTANCES if m % 2])
    def test_max_profile_for_odd_m(self, n, m):
        assert max_profile(n, m) == max_profile_formula(n, m)

    @pytest.mark.parametrize("n,m", SMALL_INSTANCES)
    def test_cheeger(self, n, m):
        assert cheeger(n, m) == cheeger_formula(n, m)


class TestReport:
    def test_payload(self):
        report = metrics_report(2, 3)
        assert report["bisection_width"] == 3
        assert report["cheeger"] == {"num": 2, "den": 3}
        assert report["cheeger_argmin"] == 3
        assert report["bw_formula_agrees"]
        assert report["max_formula_agrees"]
        assert report["cheeger_formula_agrees"]

    def test_even_m_max_profile_can_differ(self, caplog):
        with caplog.at_level("INFO"):
            report = metrics_report(2, 2)
        assert report["max_profile"] == 1
        assert not report["max_formula_agrees"]
        assert report["bw_formula_agrees"]
