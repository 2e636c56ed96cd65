from __future__ import annotations

from fractions import Fraction

from .errors import PreconditionError
from .exactmath import Interval, Precision, certify, evaluate, pi_interval, smallest_integer_above

__all__ = ("ball_C", "bakker_tsimerman_alpha", "ball_min_general_type_dim", "ball_level_quantity")


def _check_dimension(n: int) -> None:
    if n < 1:
        raise PreconditionError("n", n, "n >= 1")


def ball_C(n: int, p: int) -> Fraction:
    _check_dimension(n)
    if not 1 <= p <= n:
        raise PreconditionError("p", p, f"1 <= p <= {n}")
    return Fraction(p + 1, n + 1)


def bakker_tsimerman_alpha(n: int, prec: Precision) -> Interval:
    """(n + 1) / (2 pi)"""
    _check_dimension(n)
    return evaluate(lambda working: (n + 1) / (2 * pi_interval(working)), prec)


def ball_level_quantity(n: int, p: int, prec: Precision) -> Interval:
    """1 / (alpha * C_p) with the Bakker-Tsimerman alpha, which simplifies to 2 pi / (p + 1)."""
    c_p = ball_C(n, p)
    return evaluate(lambda working: 1 / (bakker_tsimerman_alpha(n, working) * c_p), prec)


def _ceiling_minus_one(value: Interval) -> int:
    # 2 pi / l is irrational, so its ceiling is floor + 1 once the floor is certified
    return smallest_integer_above(value) - 1


def ball_min_general_type_dim(l: int, prec: Precision) -> int:
    if l < 1:
        raise PreconditionError("l", l, "l >= 1")
    p = certify(lambda working: 2 * pi_interval(working) / l, _ceiling_minus_one, prec)
    # for l >= 7 the raw value is 0, subvarieties of interest start at curves
    return max(1, p)
