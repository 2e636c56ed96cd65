"""Curvature constants D_p and C_p of the Siegel half-space H_g.

D_p is the minimum of a piecewise quadratic function over the ordered simplex and over
subsets of the upper triangle T = {(i, j): 1 <= i <= j <= g}. Only packed subsets
(off-diagonal elements pushed to the right of each row, diagonal elements at the bottom)
can be minimal, so a subset is described by a GammaShape (k, rows).
"""

from __future__ import annotations

import functools
import logging
import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

from .errors import PreconditionError
from .extra import pool_map

__all__ = (
    "GammaShape",
    "SiegelConstant",
    "Mismatch",
    "TableCheck",
    "CASE_TWO_VALUES",
    "dimension",
    "holomorphic_bound",
    "enumerate_shapes",
    "lin_part",
    "min_quadratic",
    "shape_value",
    "siegel_D",
    "table_indices",
    "table_D",
    "table_C",
    "verify_table",
    "case_two_value",
    "case_two_parameters",
)

logger = logging.getLogger("hypconst.siegel")

# (g - k, r) -> D_p where the last partially filled row keeps the optimum away from zero
CASE_TWO_VALUES: dict[tuple[int, int], Fraction] = {
    (2, 1): Fraction(23, 16),
    (2, 2): Fraction(7, 4),
    (2, 3): Fraction(31, 16),
    (3, 1): Fraction(11, 12),
    (4, 1): Fraction(21, 32),
}


@dataclass(frozen=True, order=True)
class GammaShape:
    k: int
    rows: tuple[int, ...]

    def __str__(self) -> str:
        return f"({self.k},({','.join(map(str, self.rows))}))"

    @property
    def size(self) -> int:
        return self.k + sum(self.rows)

    def elements(self, g: int) -> list[tuple[int, int]]:
        """The packed subset of T this shape stands for, 1-based."""
        cells = [(j, g - i) for j, a in enumerate(self.rows, start=1) for i in range(a)]
        cells.extend((i, i) for i in range(g - self.k + 1, g + 1))
        return sorted(cells)


@dataclass(frozen=True)
class SiegelConstant:
    g: int
    p: int
    D: Fraction
    witness: GammaShape

    @property
    def C(self) -> Fraction:
        return self.D / (self.g + 1)

    @property
    def gamma(self) -> Fraction:
        return holomorphic_bound(self.g)


@dataclass(frozen=True)
class Mismatch:
    g: int
    p: int
    computed: Fraction
    table: Fraction


@dataclass
class TableCheck:
    g_max: int
    checked: int = 0
    mismatches: list[Mismatch] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.mismatches


def dimension(g: int) -> int:
    return g * (g + 1) // 2


def holomorphic_bound(g: int) -> Fraction:
    _check_genus(g)
    return Fraction(2, g * (g + 1))


def _check_genus(g: int) -> None:
    if g < 2:
        raise PreconditionError("g", g, "g >= 2")


def _check_range(g: int, p: int) -> None:
    _check_genus(g)
    if not 1 <= p <= dimension(g):
        raise PreconditionError("p", p, f"1 <= p <= {dimension(g)}")


@functools.lru_cache(maxsize=None)
def _shapes(g: int, p: int) -> frozenset[GammaShape]:
    if p == 1:
        return frozenset({GammaShape(0, (0,) * (g - 1))})

    result: set[GammaShape] = set()
    for shape in _shapes(g, p - 1):
        k, rows = shape.k, shape.rows
        if k < g - 1:
            result.add(GammaShape(k + 1, rows))

        for i in range(g - 2):
            # row i+1 (1-based) has room for g-1-i elements and stays packed against the row below
            if rows[i] < g - 1 - i and (rows[i] < rows[i + 1] or rows[i + 1] == g - i - 2):
                result.add(GammaShape(k, rows[:i] + (rows[i] + 1,) + rows[i + 1 :]))

        if rows[g - 2] == 0:
            result.add(GammaShape(k, rows[:-1] + (1,)))

    return frozenset(result)


def enumerate_shapes(g: int, p: int) -> frozenset[GammaShape]:
    _check_range(g, p)
    # fill the cache level by level so the recursion never goes deep
    for q in range(1, p):
        _shapes(g, q)
    return _shapes(g, p)


def lin_part(g: int, shape: GammaShape) -> tuple[int, ...]:
    b = [0] * g
    for i, a in enumerate(shape.rows):
        b[i] += a
        for j in range(a):
            b[g - j - 1] += 1
    for i in range(shape.k):
        b[g - i - 1] += 2
    return tuple(b)


def min_quadratic(b: Sequence[int]) -> tuple[Fraction, int]:
    """Minimum of 2 sum(m_i^2) + sum(b_i m_i) over the ordered simplex, for non-decreasing b.

    Returns the value and the support size t of the minimiser.
    """
    if not b:
        raise PreconditionError("b", b, "a non-empty coefficient vector")
    if b[0] < 0 or any(x > y for x, y in zip(b, b[1:])):
        raise PreconditionError("b", tuple(b), "non-negative and non-decreasing")

    t = len(b)
    while True:
        spread = sum(b[t - 1] - b[i] for i in range(t))
        if spread < 4 or t == 1:
            break
        t -= 1

    s1 = sum(b[:t])
    s2 = sum(x * x for x in b[:t])
    return Fraction((s1 + 4) ** 2, 8 * t) - Fraction(s2, 8), t


def shape_value(g: int, shape: GammaShape) -> Fraction:
    if shape.k == g - 1:
        # linear branch: the off-diagonal counts are non-decreasing, so m = (1, 0, ..., 0) is optimal
        return Fraction(2 + shape.rows[0])
    return min_quadratic(lin_part(g, shape))[0]


def _shape_value(args: tuple[int, GammaShape]) -> Fraction:
    return shape_value(*args)


def siegel_D(g: int, p: int, *, jobs: int = 1) -> SiegelConstant:
    shapes = sorted(enumerate_shapes(g, p))
    values = pool_map(_shape_value, [(g, shape) for shape in shapes], jobs)
    D, witness = min(zip(values, shapes))
    logger.debug("g=%d p=%d: %d shapes, D=%s at %s", g, p, len(shapes), D, witness)
    return SiegelConstant(g, p, D, witness)


def table_indices(p: int) -> tuple[int, int]:
    if p < 1:
        raise PreconditionError("p", p, "p >= 1")
    k = (math.isqrt(8 * (p - 1) + 1) - 1) // 2
    return k, p - 1 - k * (k + 1) // 2


def case_two_value(width: int, r: int) -> Fraction | None:
    """D_p for a full bottom triangle of the given width plus r elements in the row above it."""
    if width == 1:
        return Fraction(r + 2)
    return CASE_TWO_VALUES.get((width, r))


def table_D(g: int, p: int) -> Fraction:
    _check_range(g, p)
    k, r = table_indices(p)
    width = g - k
    if width == 1:
        return Fraction(r + 2)
    if r == 0:
        return Fraction(2, width)
    if (width, r) in CASE_TWO_VALUES:
        return CASE_TWO_VALUES[width, r]
    return Fraction(2, width - 1)


def table_C(g: int, p: int) -> Fraction:
    return table_D(g, p) / (g + 1)


def verify_table(g_max: int, *, jobs: int = 1) -> TableCheck:
    _check_genus(g_max)

    check = TableCheck(g_max)
    for g in range(2, g_max + 1):
        for p in range(1, dimension(g) + 1):
            computed = siegel_D(g, p, jobs=jobs).C
            expected = table_C(g, p)
            check.checked += 1
            if computed != expected:
                check.mismatches.append(Mismatch(g, p, computed, expected))
        logger.info("table checked up to g=%d, %d mismatch(es) so far", g, len(check.mismatches))

    return check


def case_two_parameters(g: int, shape: GammaShape) -> tuple[int, int] | None:
    """Returns (k, r) when shape is a full bottom triangle plus a partial row r, else None.

    Recognised only when the optimum does not vanish on the partial row.
    """
    k, rows = shape.k, shape.rows
    width = g - k
    if k < 1:
        return None

    # rows are 1-based: j >= width + 1 full, j == width partial, j < width empty
    if any(rows[j - 1] != g - j for j in range(width + 1, g)):
        return None
    r = rows[width - 1]
    if not 0 < r < k:
        return None
    if any(rows[j - 1] for j in range(1, width)):
        return None

    if k <= g - 2 and min_quadratic(lin_part(g, shape))[1] < width:
        return None

    return k, r
