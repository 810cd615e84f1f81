"""Besicovitch sets over finite planes: construction, verification, search and statistics."""

from fractions import Fraction

from . import _core
from ._core import (
    Field,
    KakeyaError,
    b0_config,
    chebyshev_bound,
    conditional_check,
    incidence_report,
    min_excess_search,
    monte_carlo,
    normalize,
    run_cli,
    triple_point_exceptions,
    verify_conjectures,
)


def expected_cardinality(q: int) -> Fraction:
    return Fraction(_core.expected_cardinality(q))


def variance_cardinality(q: int) -> Fraction:
    return Fraction(_core.variance_cardinality(q))


def joint_point_probability(q: int, distinct: bool) -> Fraction:
    return Fraction(_core.joint_point_probability(q, distinct))


def exact_moments(field: Field) -> tuple[Fraction, Fraction]:
    mean, variance = _core.exact_moments(field)
    return Fraction(mean), Fraction(variance)


__all__ = [
    "Field",
    "KakeyaError",
    "b0_config",
    "chebyshev_bound",
    "conditional_check",
    "exact_moments",
    "expected_cardinality",
    "incidence_report",
    "joint_point_probability",
    "min_excess_search",
    "monte_carlo",
    "normalize",
    "run_cli",
    "triple_point_exceptions",
    "variance_cardinality",
    "verify_conjectures",
]
