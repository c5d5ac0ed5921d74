"""Finite candidate set for the optimal constrained radius.

At the optimum some two interval endpoints sit exactly ``t * alpha``
apart for an integer ``0 <= t < p + q``.  With ``s_i = sqrt(r^2 - h_i^2)``
the four endpoint pairings of points ``i != k`` reduce to

    s_i + s_k = gamma        (left of one against right of the other)
    s_i - s_k = beta         (left/left or right/right)

and a single point gives ``2 s_i = t * alpha``.  Pairs of points at equal
height whose x-gap is an exact multiple of alpha keep a constant
endpoint gap for every r; they are detected and skipped.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterator, Optional

import numpy as np

from .geometry import DEFAULT_TOL, Instance, half_width, line_distances

SAME_INDEX = "same-index"
SUM = "sum"
DIFFERENCE = "difference"

BACKSUB_RTOL = 1e-7


def _backsub_ok(residual: float, r: float) -> bool:
    return abs(residual) <= BACKSUB_RTOL * max(1.0, r)


def solve_same_index(d_i: float, t: int, alpha: float) -> float:
    """Radius at which the interval of a point at height ``d_i`` is ``t*alpha`` wide."""
    return math.hypot(t * alpha / 2.0, d_i)


def solve_sum_equation(d_i: float, d_k: float, gamma: float) -> Optional[float]:
    """Solve ``sqrt(r^2-d_i^2) + sqrt(r^2-d_k^2) = gamma`` for r >= max(d_i, d_k)."""
    if gamma <= 0:
        return None
    diff = (d_k * d_k - d_i * d_i) / gamma
    if gamma < abs(diff):
        return None
    s_i = 0.5 * (gamma + diff)
    r = math.hypot(d_i, s_i)
    r = max(r, d_i, d_k)
    if not _backsub_ok(half_width(d_i, r) + half_width(d_k, r) - gamma, r):
        return None
    return r


def solve_difference_equation(d_i: float, d_k: float, beta: float) -> Optional[float]:
    """Solve ``sqrt(r^2-d_i^2) - sqrt(r^2-d_k^2) = beta`` for r >= max(d_i, d_k).

    Raises ValueError for ``d_i == d_k`` with ``beta == 0``, where every
    radius is a solution.
    """
    if beta == 0:
        if d_i == d_k:
            raise ValueError("degenerate difference equation: every radius solves it")
        return None
    total = (d_k * d_k - d_i * d_i) / beta
    if total <= 0 or total < abs(beta):
        return None
    s_i = 0.5 * (total + beta)
    r = math.hypot(d_i, s_i)
    r = max(r, d_i, d_k)
    if not _backsub_ok(half_width(d_i, r) - half_width(d_k, r) - beta, r):
        return None
    return r


@dataclass(frozen=True)
class RadiusEquation:
    i: int
    k: int
    t: int
    kind: str
    constant: float

    def __post_init__(self):
        if self.t < 0:
            raise ValueError("t must be non-negative")
        if self.kind == SAME_INDEX and self.i != self.k:
            raise ValueError("same-index equation needs i == k")

    def solve(self, heights: np.ndarray) -> Optional[float]:
        d_i, d_k = float(heights[self.i]), float(heights[self.k])
        if self.kind == SAME_INDEX:
            # constant holds t * alpha
            return math.hypot(self.constant / 2.0, d_i)
        if self.kind == SUM:
            return solve_sum_equation(d_i, d_k, self.constant)
        return solve_difference_equation(d_i, d_k, self.constant)

    def residual(self, heights: np.ndarray, r: float) -> float:
        s_i = half_width(float(heights[self.i]), r)
        s_k = half_width(float(heights[self.k]), r)
        if self.kind == SAME_INDEX:
            return 2.0 * s_i - self.constant
        if self.kind == SUM:
            return s_i + s_k - self.constant
        return s_i - s_k - self.constant


@dataclass(frozen=True)
class ExceptionalPair:
    i: int
    k: int
    t: int


def exceptional_pairs(inst: Instance, tol: float = DEFAULT_TOL) -> list[ExceptionalPair]:
    """Ordered pairs at equal height whose x-gap ``x_i - x_k`` is ``t * alpha``."""
    eps = tol * inst.scale()
    h = line_distances(inst.points)
    x = inst.points[:, 0]
    out = []
    for i in range(inst.n):
        for k in range(inst.n):
            if i == k or abs(h[i] - h[k]) > eps:
                continue
            for t in range(inst.p + inst.q):
                if abs((x[i] - x[k]) - t * inst.alpha) <= eps:
                    out.append(ExceptionalPair(i, k, t))
    return out


def radius_equations(inst: Instance, tol: float = DEFAULT_TOL) -> Iterator[RadiusEquation]:
    """Every endpoint-gap equation, minus the degenerate ones from exceptional pairs."""
    x = inst.points[:, 0]
    alpha = inst.alpha
    skip = {(e.i, e.k, e.t) for e in exceptional_pairs(inst, tol)}
    skip |= {(k, i, t) for (i, k, t) in skip}
    for t in range(inst.p + inst.q):
        for i in range(inst.n):
            yield RadiusEquation(i, i, t, SAME_INDEX, t * alpha)
            for k in range(inst.n):
                if k == i:
                    continue
                gap = float(x[i] - x[k])
                # a_i = b_k + t*alpha and b_i = a_k + t*alpha
                yield RadiusEquation(i, k, t, SUM, gap - t * alpha)
                yield RadiusEquation(i, k, t, SUM, -gap + t * alpha)
                if (i, k, t) in skip:
                    continue
                # a_i = a_k + t*alpha and b_i = b_k + t*alpha
                yield RadiusEquation(i, k, t, DIFFERENCE, gap - t * alpha)
                yield RadiusEquation(i, k, t, DIFFERENCE, -gap + t * alpha)


def dedupe_sorted(values, tol: float = DEFAULT_TOL) -> list[float]:
    """Collapse runs of sorted values closer than ``tol`` (relative to magnitude)."""
    out: list[float] = []
    for v in sorted(values):
        if out and v - out[-1] <= tol * max(1.0, abs(v)):
            continue
        out.append(float(v))
    return out


def solved_equations(inst: Instance, tol: float = DEFAULT_TOL) -> list[tuple[float, RadiusEquation]]:
    """All (radius, equation) pairs with a root at or above the largest height."""
    h = line_distances(inst.points)
    floor = float(np.max(h))
    out = []
    for eq in radius_equations(inst, tol):
        r = eq.solve(h)
        if r is None or r < floor:
            continue
        out.append((r, eq))
    return out


def candidate_radii(inst: Instance, tol: float = DEFAULT_TOL) -> list[float]:
    """Sorted, deduplicated candidate radii; always contains the largest height."""
    h = line_distances(inst.points)
    floor = float(np.max(h))
    values = [floor] + [r for r, _ in solved_equations(inst, tol)]
    return dedupe_sorted(values, tol)
