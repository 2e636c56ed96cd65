"""Independent checks on siegel: an unpruned exact search and a floating-point evaluation."""

from __future__ import annotations

import functools
import itertools
import logging
from fractions import Fraction
from typing import Iterator, Sequence

import numpy as np

from .errors import PreconditionError
from .extra import pool_map
from .siegel import dimension

__all__ = (
    "ordered_simplex_qp",
    "ordered_simplex_lp",
    "triangle",
    "subset_value",
    "brute_force_D",
    "simplex_grid",
    "numeric_D",
)

logger = logging.getLogger("hypconst.oracle")

BRUTE_FORCE_MAX_GENUS = 6
NUMERIC_MAX_GENUS = 4


def _compositions(size: int) -> Iterator[tuple[int, ...]]:
    """Every split of range(size) into consecutive blocks, as block lengths."""
    for cuts in itertools.product((False, True), repeat=size - 1):
        lengths, current = [], 1
        for cut in cuts:
            if cut:
                lengths.append(current)
                current = 1
            else:
                current += 1
        lengths.append(current)
        yield tuple(lengths)


@functools.lru_cache(maxsize=None)
def _qp(b: tuple[int, ...]) -> Fraction:
    best: Fraction | None = None
    for support in range(1, len(b) + 1):
        # stationarity on the face: 4 m_i + b_i = multiplier, averaged over each block
        multiplier = Fraction(4 + sum(b[:support]), support)
        for lengths in _compositions(support):
            values, start = [], 0
            for length in lengths:
                mean = Fraction(sum(b[start : start + length]), length)
                values.append(((multiplier - mean) / 4, start, length))
                start += length

            if values[-1][0] < 0 or any(x[0] < y[0] for x, y in zip(values, values[1:])):
                continue

            objective = sum(
                2 * length * v * v + v * sum(b[start : start + length]) for v, start, length in values
            )
            if best is None or objective < best:
                best = objective

    assert best is not None
    return best


def ordered_simplex_qp(b: Sequence[int]) -> Fraction:
    """Exact minimum of 2 sum(m_i^2) + sum(b_i m_i) over m_1 >= ... >= m_g >= 0, sum(m) = 1.

    b may be in any order. Every candidate active set (a support size plus a split of the
    support into blocks of equal m) is solved in closed form and the feasible minimum kept.
    """
    b = tuple(b)
    if not b:
        raise PreconditionError("b", b, "a non-empty coefficient vector")
    if min(b) < 0:
        raise PreconditionError("b", b, "non-negative entries")
    return _qp(b)


def ordered_simplex_lp(c: Sequence[int]) -> Fraction:
    # a linear function is minimised at a vertex (1/j, ..., 1/j, 0, ..., 0)
    return min(Fraction(sum(c[:j]), j) for j in range(1, len(c) + 1))


def triangle(g: int) -> list[tuple[int, int]]:
    return [(i, j) for i in range(1, g + 1) for j in range(i, g + 1)]


def subset_value(g: int, subset: Sequence[tuple[int, int]]) -> Fraction | None:
    """Minimum over the ordered simplex for one subset of the triangle, None when it has g diagonal cells."""
    off = [0] * g
    full = [0] * g
    diagonal = 0
    for i, j in subset:
        if i == j:
            diagonal += 1
            full[i - 1] += 2
        else:
            off[i - 1] += 1
            off[j - 1] += 1
            full[i - 1] += 1
            full[j - 1] += 1

    if diagonal > g - 1:
        return None
    if diagonal == g - 1:
        return 2 + ordered_simplex_lp(off)
    return ordered_simplex_qp(full)


def _subset_value(args: tuple[int, tuple[tuple[int, int], ...]]) -> Fraction | None:
    return subset_value(*args)


def brute_force_D(g: int, p: int, *, jobs: int = 1) -> Fraction:
    if not 2 <= g <= BRUTE_FORCE_MAX_GENUS:
        raise PreconditionError("g", g, f"2 <= g <= {BRUTE_FORCE_MAX_GENUS}")
    if not 1 <= p <= dimension(g):
        raise PreconditionError("p", p, f"1 <= p <= {dimension(g)}")

    subsets = [(g, subset) for subset in itertools.combinations(triangle(g), p - 1)]
    values = [value for value in pool_map(_subset_value, subsets, jobs) if value is not None]
    logger.debug("g=%d p=%d: %d subsets searched", g, p, len(subsets))
    return min(values)


def simplex_grid(g: int, steps: int) -> Iterator[tuple[int, ...]]:
    """Non-increasing g-tuples of non-negative integers summing to steps."""

    def parts(count: int, total: int, largest: int) -> Iterator[tuple[int, ...]]:
        if count == 1:
            if total <= largest:
                yield (total,)
            return
        for first in range(min(total, largest), -1, -1):
            if first * count < total:
                break
            for rest in parts(count - 1, total - first, first):
                yield (first,) + rest

    yield from parts(g, steps, steps)


def _curvature_value(m: np.ndarray, p: int) -> float:
    g = len(m)
    x = np.sqrt(m)
    q, _ = np.linalg.qr(np.column_stack([x, np.eye(g)]))
    basis = q[:, 1:]
    compressed = basis.T @ np.diag(2 * m) @ basis
    eigenvalues = list(np.linalg.eigvalsh(compressed))
    eigenvalues.extend(m[i] + m[j] for i in range(g) for j in range(i + 1, g))
    eigenvalues.sort()
    return float(2 * np.sum(m * m) + sum(eigenvalues[: p - 1]))


def numeric_D(g: int, p: int, grid_steps: int) -> float:
    """Grid minimum of the curvature quantity, straight from its eigenvalue description."""
    if not 2 <= g <= NUMERIC_MAX_GENUS:
        raise PreconditionError("g", g, f"2 <= g <= {NUMERIC_MAX_GENUS}")
    if not 1 <= p <= dimension(g):
        raise PreconditionError("p", p, f"1 <= p <= {dimension(g)}")
    if grid_steps < 10:
        raise PreconditionError("grid_steps", grid_steps, "grid_steps >= 10")

    best = min(_curvature_value(np.array(point, dtype=float) / grid_steps, p) for point in simplex_grid(g, grid_steps))
    logger.debug("numeric g=%d p=%d grid=%d: %.6f", g, p, grid_steps, best)
    return best
