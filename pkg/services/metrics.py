"""
Closed-form corollaries of the profile: bisection width, maximum profile
value and Cheeger constant, each checked against the exhaustive table value
"""

import logging
from fractions import Fraction
from typing import Any, Dict, NamedTuple

from services.boundary import ProfileTable, profile_recurrence
from utils.errors import InvalidParamsError
from utils.graph import GraphParams

logger = logging.getLogger(__name__)


class CheegerResult(NamedTuple):
    value: Fraction
    argmin: int


def _table(n: int, m: int, table: ProfileTable = None) -> ProfileTable:
    p = GraphParams(n, m)
    if n < 1:
        raise InvalidParamsError("metrics are defined for n >= 1")
    if table is None:
        return profile_recurrence(p)
    if table.params != p:
        raise InvalidParamsError(f"profile table of {table.params} given for {p}")
    return table


def bisection_width_formula(n: int, m: int) -> int:
    """m²/4 for even m, n⌊m/2⌋² + ⌊m/2⌋ for odd m"""
    if m % 2 == 0:
        return m * m // 4
    return n * (m // 2) ** 2 + m // 2


def max_profile_formula(n: int, m: int) -> int:
    return n * (m // 2) ** 2 + m // 2


def cheeger_formula(n: int, m: int) -> Fraction:
    """1/(2m^(n-2)) for even m, (m+1)/(2m^(n-1)) for odd m"""
    if m % 2 == 0:
        return Fraction(m * m, 2 * m ** n)
    return Fraction((m + 1) * m, 2 * m ** n)


def bisection_width(n: int, m: int, table: ProfileTable = None) -> int:
    """|Θ|(n,m;⌊m^n/2⌋) read from the profile table"""
    table = _table(n, m, table)
    return table[table.params.order // 2]


def max_profile(n: int, m: int, table: ProfileTable = None) -> int:
    table = _table(n, m, table)
    return int(table.values.max())


def cheeger_with_argmin(n: int, m: int, table: ProfileTable = None) -> CheegerResult:
    """
    Exact minimum of |Θ|(ℓ)/ℓ over 1 <= ℓ <= ⌊m^n/2⌋ and its smallest minimizer

    Ratios are compared by cross-multiplication.
    """
    table = _table(n, m, table)
    values = table.values
    best_theta, best_ell = int(values[1]), 1
    for ell in range(2, table.params.order // 2 + 1):
        current = int(values[ell])
        if current * best_ell < best_theta * ell:
            best_theta, best_ell = current, ell
    return CheegerResult(Fraction(best_theta, best_ell), best_ell)


def cheeger(n: int, m: int, table: ProfileTable = None) -> Fraction:
    return cheeger_with_argmin(n, m, table).value


def metrics_report(n: int, m: int, table: ProfileTable = None) -> Dict[str, Any]:
    """
    All three metrics with their closed-form agreement flags

    Disagreements are reported and logged; the exhaustive value is returned.
    """
    table = _table(n, m, table)
    width = bisection_width(n, m, table)
    peak = max_profile(n, m, table)
    constant = cheeger_with_argmin(n, m, table)

    width_agrees = width == bisection_width_formula(n, m)
    peak_agrees = peak == max_profile_formula(n, m)
    constant_agrees = constant.value == cheeger_formula(n, m)
    if not peak_agrees:
        level = logging.INFO if m % 2 == 0 else logging.WARNING
        logger.log(level, f"Maximum profile of S({n},{m}) is {peak}, closed form gives {max_profile_formula(n, m)}")
    if not width_agrees:
        logger.warning(f"Bisection width of S({n},{m}) is {width}, closed form gives {bisection_width_formula(n, m)}")
    if not constant_agrees:
        logger.warning(f"Cheeger constant of S({n},{m}) is {constant.value}, closed form gives {cheeger_formula(n, m)}")

    return {
        "n": n,
        "m": m,
        "bisection_width": width,
        "bw_formula_agrees": width_agrees,
        "max_profile": peak,
        "max_formula_agrees": peak_agrees,
        "cheeger": {"num": constant.value.numerator, "den": constant.value.denominator},
        "cheeger_formula_agrees": constant_agrees,
        "cheeger_argmin": constant.argmin,
    }
