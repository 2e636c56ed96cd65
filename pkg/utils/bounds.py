from __future__ import annotations

import enum
import logging
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Union

import gmpy2

from .ball import bakker_tsimerman_alpha
from .errors import PrecisionExhausted, PreconditionError
from .exactmath import Interval, Precision, bernoulli, evaluate, nth_root_interval, pi_interval
from .siegel import dimension

__all__ = (
    "BoundKind",
    "AlphaBound",
    "IsotropyData",
    "weissauer_alpha_base",
    "ht06_alpha_base",
    "grushevsky_alpha_eff",
    "grushevsky_alpha_eff_series",
    "zeta_even",
    "alpha_bound",
    "check_condition_I",
    "beta_level",
    "beta_upper_bound",
    "weissauer_condition_threshold",
    "satisfies_weissauer_condition",
)

logger = logging.getLogger("hypconst.bounds")

ZETA_MAX_TERMS = 1 << 20


class BoundKind(enum.Enum):
    WEISSAUER_BASE = "weissauer-base"
    GRUSHEVSKY_EFF = "grushevsky-eff"
    HT06_BASE = "ht06-base"
    BAKKER_TSIMERMAN = "bakker-tsimerman"


@dataclass(frozen=True)
class AlphaBound:
    kind: BoundKind
    value: Union[Fraction, Interval]
    applicability: str

    def __post_init__(self) -> None:
        lower = self.value.lo if isinstance(self.value, Interval) else self.value
        if lower <= 0:
            raise PreconditionError("value", self.value, "a positive bound")


@dataclass(frozen=True)
class IsotropyData:
    """Rotation exponents a_1..a_n of a cyclic isotropy action of order r."""

    a: tuple[int, ...]
    r: int

    def __post_init__(self) -> None:
        object.__setattr__(self, "a", tuple(self.a))
        if not self.a:
            raise PreconditionError("a", self.a, "at least one exponent")
        if min(self.a) < 1:
            raise PreconditionError("a", self.a, "every a_i >= 1")
        if self.r < 1:
            raise PreconditionError("r", self.r, "r >= 1")

    def smallest_sum(self, d: int) -> int:
        if not 1 <= d <= len(self.a):
            raise PreconditionError("d", d, f"1 <= d <= {len(self.a)}")
        return sum(sorted(self.a)[:d])


def weissauer_alpha_base(g: int) -> Fraction:
    if g < 2:
        raise PreconditionError("g", g, "g >= 2")
    return Fraction(g + 1, 12)


def ht06_alpha_base(n: int) -> Fraction:
    if n < 1:
        raise PreconditionError("n", n, "n >= 1")
    return Fraction(1, math.comb(n + 1, 2) + 2)


def _grushevsky_radicand(g: int) -> Fraction:
    # zeta(2g) = (2 pi)^(2g) |B_2g| / (2 (2g)!), so the (2 pi)^2 factors cancel under the g-th root
    return math.factorial(g) * abs(bernoulli(2 * g)) / math.factorial(2 * g)


def grushevsky_alpha_eff(g: int, prec: Precision) -> Interval:
    if g < 2:
        raise PreconditionError("g", g, "g >= 2")
    radicand = _grushevsky_radicand(g)
    return evaluate(lambda working: (g + 1) * nth_root_interval(radicand, g, working), prec)


def zeta_even(g: int, prec: Precision) -> Interval:
    """zeta(2g) from a directed fixed-point partial sum and integral bounds on the tail."""
    if g < 1:
        raise PreconditionError("g", g, "g >= 1")

    s = 2 * g
    bits = prec.bits
    # the tail bracket has width below N^-s
    terms = int(gmpy2.iroot(1 << (bits + 1), s)[0]) + 1
    if terms > ZETA_MAX_TERMS:
        raise PrecisionExhausted(bits, f"zeta({s}) series")

    scale_bits = bits + terms.bit_length() + 3
    one = 1 << scale_bits
    lower = upper = 0
    for k in range(1, terms + 1):
        q, rem = divmod(one, k**s)
        lower += q
        upper += q + (rem != 0)

    tail_lo = Fraction(1, (s - 1) * (terms + 1) ** (s - 1))
    tail_hi = Fraction(1, (s - 1) * terms ** (s - 1))
    logger.debug("zeta(%d): %d terms at %d bits", s, terms, scale_bits)
    return Interval(Fraction(lower, one) + tail_lo, Fraction(upper, one) + tail_hi)


def grushevsky_alpha_eff_series(g: int, prec: Precision) -> Interval:
    """The same bound as grushevsky_alpha_eff, evaluated through zeta(2g) and pi."""
    if g < 2:
        raise PreconditionError("g", g, "g >= 2")

    def expression(working: Precision) -> Interval:
        inner = 2 * math.factorial(g) * zeta_even(g, working)
        return (g + 1) * inner.nth_root(g, working) / (2 * pi_interval(working)) ** 2

    return evaluate(expression, prec)


_REGISTRY: dict[BoundKind, tuple[Callable[[int, Precision], Union[Fraction, Interval]], str]] = {
    BoundKind.WEISSAUER_BASE: (lambda g, _: weissauer_alpha_base(g), "alpha_base on A_g, g >= 2"),
    BoundKind.GRUSHEVSKY_EFF: (grushevsky_alpha_eff, "alpha_eff on A_g, g >= 2"),
    BoundKind.HT06_BASE: (lambda n, _: ht06_alpha_base(n), "alpha_base on any n-dimensional quotient"),
    BoundKind.BAKKER_TSIMERMAN: (bakker_tsimerman_alpha, "alpha_base on ball quotients B^n"),
}


def alpha_bound(kind: BoundKind | str, parameter: int, prec: Precision) -> AlphaBound:
    kind = BoundKind(kind)
    compute, applicability = _REGISTRY[kind]
    return AlphaBound(kind, compute(parameter, prec), applicability)


def check_condition_I(data: IsotropyData, d: int) -> bool:
    return data.smallest_sum(d) >= data.r


def beta_level(data: IsotropyData, p: int) -> Fraction:
    return max(Fraction(0), 1 - Fraction(data.smallest_sum(p), data.r))


def beta_upper_bound(p: int, group_order: int) -> Fraction:
    if p < 1:
        raise PreconditionError("p", p, "p >= 1")
    if group_order < 1:
        raise PreconditionError("group_order", group_order, "group_order >= 1")
    return max(Fraction(0), 1 - Fraction(p, group_order))


def weissauer_condition_threshold(g: int) -> int:
    """Dimension from which the isotropy condition holds at every exceptional point of A_g."""
    if g < 2:
        raise PreconditionError("g", g, "g >= 2")
    return dimension(g) - g + 7


def satisfies_weissauer_condition(g: int, p: int) -> bool:
    return p >= weissauer_condition_threshold(g)
