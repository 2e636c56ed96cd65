from __future__ import annotations

import logging
import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Callable, Optional, Union

from .ball import ball_level_quantity
from .bounds import (
    grushevsky_alpha_eff,
    ht06_alpha_base,
    satisfies_weissauer_condition,
    weissauer_alpha_base,
)
from .errors import CertificationFailed, PreconditionError
from .exactmath import (
    Interval,
    Precision,
    certify,
    e_interval,
    evaluate,
    pi_interval,
    smallest_integer_above,
)
from .siegel import dimension, holomorphic_bound, siegel_D, table_C, table_indices

__all__ = (
    "LevelReport",
    "PUBLISHED_MG_LEVELS",
    "UNIFORM_LEVEL",
    "level_threshold",
    "ag_kobayashi_level",
    "ag_uniform_level",
    "mg_level",
    "ball_level",
    "ht06_level",
    "ag_max_general_type_codim",
    "volume_factor",
)

logger = logging.getLogger("hypconst.thresholds")

# smallest admissible level l_0 for the moduli space of curves, genus 2..11
PUBLISHED_MG_LEVELS: dict[int, int] = {2: 37, 3: 49, 4: 49, 5: 37, 6: 25, 7: 22, 8: 13, 9: 13, 10: 9, 11: 8}
UNIFORM_LEVEL = 54
UNIFORM_RANGE = range(2, 31)
# exact siegel_D is used up to this genus, the closed-form table beyond it
MG_EXACT_MAX_GENUS = 11

Alpha = Union[Fraction, Interval, Callable[[Precision], Interval]]


@dataclass
class LevelReport:
    """A certified level next to the quantity 1/(alpha C_p) it comes from.

    published_value is the published bound, read as "l > v" when published_strict and "l >= v" otherwise.
    """

    g: Optional[int]
    quantity: Union[Fraction, Interval]
    certified_level: int
    published_value: Optional[int] = None
    published_strict: bool = True
    subject: str = ""
    details: dict[str, Any] = field(default_factory=dict)
    checks: list[LevelReport] = field(default_factory=list)

    @property
    def published_level(self) -> Optional[int]:
        if self.published_value is None:
            return None
        return self.published_value + 1 if self.published_strict else self.published_value

    @property
    def agrees(self) -> Optional[bool]:
        if self.published_level is None:
            return None
        return self.certified_level == self.published_level

    @property
    def offset(self) -> Optional[int]:
        if self.published_level is None:
            return None
        return self.certified_level - self.published_level


def _positive(name: str, value: Union[Fraction, Interval]) -> None:
    lower = value.lo if isinstance(value, Interval) else value
    if lower <= 0:
        raise PreconditionError(name, value, f"{name} > 0")


def _with_level(quantity: Interval) -> tuple[Interval, int]:
    return quantity, smallest_integer_above(quantity)


def level_threshold(
    alpha: Alpha,
    c_p: Fraction,
    prec: Precision = Precision(128),
    *,
    g: Optional[int] = None,
) -> LevelReport:
    """Smallest integer l with l > 1 / (alpha * c_p)."""
    c_p = Fraction(c_p)
    _positive("c_p", c_p)

    if isinstance(alpha, (int, Fraction)):
        alpha = Fraction(alpha)
        _positive("alpha", alpha)
        quantity = 1 / (alpha * c_p)
        return LevelReport(g, quantity, smallest_integer_above(quantity))

    if isinstance(alpha, Interval):
        fixed = alpha
        _positive("alpha", fixed)

        def alpha_at(_: Precision) -> Interval:
            return fixed

    else:
        alpha_at = alpha

    quantity, level = certify(lambda working: 1 / (alpha_at(working) * c_p), _with_level, prec)
    return LevelReport(g, quantity, level)


def ag_kobayashi_level(g: int) -> LevelReport:
    gamma = holomorphic_bound(g)
    report = level_threshold(weissauer_alpha_base(g), gamma, g=g)
    if report.quantity != 6 * g:
        raise CertificationFailed(f"1/(alpha gamma) = 6g at g={g}", report.quantity)

    report.published_value = 6 * g
    report.subject = "A_g, Kobayashi hyperbolicity"
    return report


def _uniform_quantity(working: Precision) -> Interval:
    # e (2 pi)^2 / 2, the limit of the per-genus quantities
    return e_interval(working) * (2 * pi_interval(working)) ** 2 / 2


def ag_uniform_level(prec: Precision) -> LevelReport:
    quantity, level = certify(_uniform_quantity, _with_level, prec)
    if level != UNIFORM_LEVEL:
        raise CertificationFailed(f"{UNIFORM_LEVEL - 1} < e (2 pi)^2 / 2 < {UNIFORM_LEVEL}", quantity)

    report = LevelReport(
        None,
        quantity,
        level,
        published_value=UNIFORM_LEVEL,
        published_strict=False,
        subject="A_g, every genus",
    )

    for g in UNIFORM_RANGE:
        check = level_threshold(lambda working, g=g: grushevsky_alpha_eff(g, working), holomorphic_bound(g), prec, g=g)
        if not check.quantity.certainly_below(quantity.lo):
            raise CertificationFailed(f"1/(alpha_eff gamma) < e (2 pi)^2 / 2 at g={g}", check.quantity)
        report.checks.append(check)
        logger.debug("uniform level check g=%d: %s", g, float(check.quantity))

    return report


def mg_level(g: int, *, jobs: int = 1) -> LevelReport:
    """Level for the moduli space of curves of genus g, through A_g with p = 3g - 3."""
    if g < 2:
        raise PreconditionError("g", g, "g >= 2")

    p = 3 * g - 3
    k, r = table_indices(p)
    closed_k = (math.isqrt(24 * g - 31) - 1) // 2
    if k != closed_k:
        raise CertificationFailed(f"k = {closed_k} at g={g}", k)

    c_p = siegel_D(g, p, jobs=jobs).C if g <= MG_EXACT_MAX_GENUS else table_C(g, p)
    report = level_threshold(weissauer_alpha_base(g), c_p, g=g)
    report.subject = "M_g, general type"
    report.details = {"p": p, "k": k, "r": r, "C": c_p}
    report.published_strict = False
    if g <= MG_EXACT_MAX_GENUS:
        report.published_value = PUBLISHED_MG_LEVELS[g]
    else:
        report.published_value = 6 * (g - k - 1)

    if report.agrees is False:
        logger.info("g=%d: computed level %d, published %d", g, report.certified_level, report.published_value)
    return report


def ball_level(n: int, p: int, prec: Precision) -> LevelReport:
    """Smallest l with l > 1/(alpha C_p) on a ball quotient, alpha from Bakker-Tsimerman."""
    quantity, level = certify(lambda working: ball_level_quantity(n, p, working), _with_level, prec)
    return LevelReport(None, quantity, level, subject="B^n", details={"n": n, "p": p})


def ht06_level(n: int, gamma: Fraction, *, g: Optional[int] = None) -> LevelReport:
    """Level from the general alpha_base bound, valid for subvarieties of every dimension."""
    gamma = Fraction(gamma)
    report = level_threshold(ht06_alpha_base(n), gamma, g=g)
    report.subject = "any quotient, every dimension"
    report.details = {"n": n, "gamma": gamma}
    return report


def ag_max_general_type_codim(g: int) -> int:
    """Largest codimension c such that every subvariety of A_g of codimension <= c is of general type."""
    if g < 12:
        raise PreconditionError("g", g, "g >= 12")

    n = dimension(g)
    alpha = weissauer_alpha_base(g)
    qualifying = [c for c in range(g) if alpha * table_C(g, n - c) > 1]
    best = max(qualifying)

    if best != g - 12:
        raise CertificationFailed(f"codimension bound g - 12 at g={g}", best)
    if table_C(g, n - best) != Fraction(g + 1 - best, g + 1):
        raise CertificationFailed(f"C_p = (g + 1 - c)/(g + 1) at g={g}", table_C(g, n - best))
    if not satisfies_weissauer_condition(g, n - best):
        raise CertificationFailed(f"isotropy condition at p = {n - best}, g={g}")

    return best


def volume_factor(c_p: Fraction, lambda_: Fraction, alpha: Fraction, q: int, prec: Precision) -> Interval:
    """((C_p - lambda/alpha) / (2 pi))^q"""
    c_p, lambda_, alpha = Fraction(c_p), Fraction(lambda_), Fraction(alpha)
    _positive("alpha", alpha)
    if not 0 < lambda_ < c_p * alpha:
        raise PreconditionError("lambda", lambda_, f"0 < lambda < C_p alpha = {c_p * alpha}")
    if q < 0:
        raise PreconditionError("q", q, "q >= 0")
    if q == 0:
        return Interval.point(1)

    base = c_p - lambda_ / alpha
    return evaluate(lambda working: (base / (2 * pi_interval(working))) ** q, prec)
