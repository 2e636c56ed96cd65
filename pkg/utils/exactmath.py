from __future__ import annotations

import functools
import logging
import math
import threading
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, TypeVar, Union

import gmpy2

from .errors import PrecisionExhausted, PreconditionError, Uncertifiable

__all__ = (
    "Rational",
    "Number",
    "Precision",
    "Interval",
    "as_interval",
    "parse_rational",
    "format_rational",
    "bernoulli",
    "pi_interval",
    "e_interval",
    "nth_root_interval",
    "smallest_integer_above",
    "evaluate",
    "certify",
)

logger = logging.getLogger("hypconst.exactmath")

Rational = Fraction
Number = Union[int, Fraction]
T = TypeVar("T")

GUARD_BITS = 8


@dataclass(frozen=True)
class Precision:
    """Target width 2**-bits for a result interval, capped by max_bits."""

    bits: int
    max_bits: int = 4096

    def __post_init__(self) -> None:
        if self.bits < 8:
            raise PreconditionError("bits", self.bits, "bits >= 8")
        if self.bits > self.max_bits:
            raise PrecisionExhausted(self.max_bits, f"a {self.bits}-bit request")

    @property
    def tolerance(self) -> Fraction:
        return Fraction(1, 1 << self.bits)

    def refined(self) -> Precision:
        return Precision(self.bits * 2, self.max_bits)

    def extended(self, extra: int) -> Precision:
        # guard bits for intermediate steps may exceed the user-facing cap
        return Precision(self.bits + extra, self.max_bits + extra)


def _fraction(value: Number) -> Fraction:
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    raise TypeError(f"expected an exact rational, got {type(value).__name__}")


@dataclass(frozen=True)
class Interval:
    lo: Fraction
    hi: Fraction

    def __post_init__(self) -> None:
        object.__setattr__(self, "lo", _fraction(self.lo))
        object.__setattr__(self, "hi", _fraction(self.hi))
        if self.lo > self.hi:
            raise PreconditionError("interval", f"[{self.lo},{self.hi}]", "lo <= hi")

    @classmethod
    def point(cls, value: Number) -> Interval:
        return cls(value, value)

    @classmethod
    def parse(cls, text: str) -> Interval:
        body = text.strip()
        if not (body.startswith("[") and body.endswith("]")):
            raise ValueError(f"not an interval: {text!r}")
        lo, sep, hi = body[1:-1].partition(",")
        if not sep:
            raise ValueError(f"not an interval: {text!r}")
        return cls(parse_rational(lo), parse_rational(hi))

    def __str__(self) -> str:
        return f"[{format_rational(self.lo)},{format_rational(self.hi)}]"

    def __float__(self) -> float:
        return float(self.mid)

    def __contains__(self, value: Number) -> bool:
        return self.lo <= value <= self.hi

    @property
    def mid(self) -> Fraction:
        return (self.lo + self.hi) / 2

    @property
    def width(self) -> Fraction:
        return self.hi - self.lo

    def intersects(self, other: Interval) -> bool:
        return self.lo <= other.hi and other.lo <= self.hi

    def issubset(self, other: Interval) -> bool:
        return other.lo <= self.lo and self.hi <= other.hi

    def certainly_below(self, value: Number) -> bool:
        return self.hi < value

    def rounded(self, bits: int) -> Interval:
        """Outward rounding onto the dyadic grid of step 2**-bits."""
        scale = 1 << bits
        return Interval(Fraction(math.floor(self.lo * scale), scale), Fraction(math.ceil(self.hi * scale), scale))

    def __neg__(self) -> Interval:
        return Interval(-self.hi, -self.lo)

    def __add__(self, other: Interval | Number) -> Interval:
        other = as_interval(other)
        return Interval(self.lo + other.lo, self.hi + other.hi)

    __radd__ = __add__

    def __sub__(self, other: Interval | Number) -> Interval:
        other = as_interval(other)
        return Interval(self.lo - other.hi, self.hi - other.lo)

    def __rsub__(self, other: Number) -> Interval:
        return as_interval(other) - self

    def __mul__(self, other: Interval | Number) -> Interval:
        other = as_interval(other)
        products = (self.lo * other.lo, self.lo * other.hi, self.hi * other.lo, self.hi * other.hi)
        return Interval(min(products), max(products))

    __rmul__ = __mul__

    def reciprocal(self) -> Interval:
        if self.lo <= 0 <= self.hi:
            raise PreconditionError("divisor", self, "an interval excluding 0")
        return Interval(1 / self.hi, 1 / self.lo)

    def __truediv__(self, other: Interval | Number) -> Interval:
        return self * as_interval(other).reciprocal()

    def __rtruediv__(self, other: Number) -> Interval:
        return as_interval(other) * self.reciprocal()

    def __pow__(self, exponent: int) -> Interval:
        if not isinstance(exponent, int):
            return NotImplemented
        if exponent < 0:
            return (self**-exponent).reciprocal()
        if exponent == 0:
            return Interval.point(1)

        lo, hi = self.lo**exponent, self.hi**exponent
        if exponent % 2 == 1:
            return Interval(lo, hi)
        if self.lo >= 0:
            return Interval(lo, hi)
        if self.hi <= 0:
            return Interval(hi, lo)
        return Interval(0, max(lo, hi))

    def nth_root(self, n: int, prec: Precision) -> Interval:
        if self.lo < 0:
            raise PreconditionError("x", self, "x >= 0")
        return Interval(nth_root_interval(self.lo, n, prec).lo, nth_root_interval(self.hi, n, prec).hi)


def as_interval(value: Interval | Number) -> Interval:
    if isinstance(value, Interval):
        return value
    return Interval.point(value)


def parse_rational(text: str) -> Fraction:
    """Parses "p/q" or "p"; decimal input such as "0.25" is accepted exactly."""
    try:
        return Fraction(text.strip())
    except (ValueError, ZeroDivisionError):
        raise ValueError(f"not a rational number: {text!r}") from None


def format_rational(value: Number) -> str:
    return str(_fraction(value))


_bernoulli_lock = threading.Lock()
_bernoulli_cache: list[Fraction] = [Fraction(1)]


def bernoulli(n: int) -> Fraction:
    """B_n with B_1 = -1/2, from sum_{k<=n} C(n+1, k) B_k = 0."""
    if n < 0:
        raise PreconditionError("n", n, "n >= 0")

    with _bernoulli_lock:
        while len(_bernoulli_cache) <= n:
            m = len(_bernoulli_cache)
            total = sum(math.comb(m + 1, k) * b for k, b in enumerate(_bernoulli_cache))
            _bernoulli_cache.append(-total / (m + 1))
        return _bernoulli_cache[n]


def _arctan_inverse(x: int, tolerance: Fraction) -> Interval:
    # alternating series with decreasing terms: consecutive partial sums bracket the limit
    total = Fraction(0)
    power = Fraction(1, x)
    square = x * x
    k = 0
    while True:
        term = power / (2 * k + 1)
        previous = total
        total = total + term if k % 2 == 0 else total - term
        if term <= tolerance:
            return Interval(min(previous, total), max(previous, total))
        power /= square
        k += 1


@functools.lru_cache(maxsize=32)
def _pi(bits: int) -> Interval:
    tolerance = Fraction(1, 1 << (bits + 6))
    # Machin: pi = 16 atan(1/5) - 4 atan(1/239)
    value = 16 * _arctan_inverse(5, tolerance) - 4 * _arctan_inverse(239, tolerance)
    return value.rounded(bits + 2)


def pi_interval(prec: Precision) -> Interval:
    return _pi(prec.bits)


@functools.lru_cache(maxsize=32)
def _e(bits: int) -> Interval:
    bound = Fraction(1, 1 << (bits + 1))
    total = Fraction(2)
    term = Fraction(1)
    n = 1
    while True:
        # after adding 1/n!, the remaining tail is below 1/(n * n!)
        tail = term / n
        if tail <= bound:
            return Interval(total, total + tail).rounded(bits + 2)
        n += 1
        term /= n
        total += term


def e_interval(prec: Precision) -> Interval:
    return _e(prec.bits)


def _exact_root(value: int, n: int) -> int | None:
    root, exact = gmpy2.iroot(value, n)
    return int(root) if exact else None


def nth_root_interval(x: Number, n: int, prec: Precision) -> Interval:
    x = _fraction(x)
    if x < 0:
        raise PreconditionError("x", x, "x >= 0")
    if n < 1:
        raise PreconditionError("n", n, "n >= 1")
    if x == 0 or n == 1:
        return Interval.point(x)

    num, den = _exact_root(x.numerator, n), _exact_root(x.denominator, n)
    if num is not None and den is not None:
        return Interval.point(Fraction(num, den))

    bits = prec.bits
    # floor(root(y)) == floor(root(floor(y))) for integer roots
    scaled = (x.numerator << (bits * n)) // x.denominator
    root = int(gmpy2.iroot(scaled, n)[0])
    return Interval(Fraction(root, 1 << bits), Fraction(root + 1, 1 << bits))


def smallest_integer_above(x: Interval | Number) -> int:
    if not isinstance(x, Interval):
        return math.floor(_fraction(x)) + 1

    lower, upper = math.floor(x.lo), math.floor(x.hi)
    if lower != upper:
        raise Uncertifiable(x)
    return lower + 1


def evaluate(expression: Callable[[Precision], Interval], prec: Precision) -> Interval:
    """Evaluates expression until its width is at most 2**-prec.bits.

    The working precision starts with a few guard bits and doubles on every miss,
    giving up once it passes twice the configured maximum.
    """
    target = prec.tolerance
    working = prec.extended(GUARD_BITS)
    limit = 2 * prec.max_bits
    while True:
        result = expression(working)
        if result.width <= target:
            return result

        if working.bits * 2 > limit:
            raise PrecisionExhausted(working.bits)

        logger.debug("width %s above %s at %d bits, refining", float(result.width), float(target), working.bits)
        working = Precision(working.bits * 2, limit)


def certify(
    expression: Callable[[Precision], Interval],
    decide: Callable[[Interval], T],
    prec: Precision,
) -> T:
    """Runs decide on expression(prec), doubling the precision on every Uncertifiable."""
    current = prec
    while True:
        try:
            return decide(expression(current))
        except Uncertifiable as exc:
            if current.bits * 2 > current.max_bits:
                raise PrecisionExhausted(current.bits, "certification") from exc
            logger.info("could not certify %s at %d bits, refining", exc.interval, current.bits)
            current = current.refined()
