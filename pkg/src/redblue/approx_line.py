"""4-approximation for the line-constrained problem, plus grid refinement
down to a (1 + eps) factor."""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .feasibility import feasible
from .geometry import DEFAULT_TOL, Instance, Solution
from .kcenter import constrained_k_center


@dataclass
class Cluster:
    core: float
    members: list[float]


def cluster_balls(centers, radius: float) -> list[Cluster]:
    """Group equal-radius balls on the axis, left to right.

    Each cluster starts at the leftmost unassigned ball (its core) and
    takes every later ball that intersects the core.
    """
    xs = sorted(float(c) for c in centers)
    clusters: list[Cluster] = []
    for x in xs:
        if clusters and x - clusters[-1].core <= 2.0 * radius:
            clusters[-1].members.append(x)
        else:
            clusters.append(Cluster(x, [x]))
    return clusters


def _split(core: float, half: float, alpha: float) -> tuple[float, float]:
    lo, hi = core - half, core + half
    while hi - lo < alpha:
        lo = float(np.nextafter(lo, -np.inf))
        hi = float(np.nextafter(hi, np.inf))
    return lo, hi


def constrained_4_approx(inst: Instance, tol: float = DEFAULT_TOL) -> Solution:
    if inst.p > inst.q:
        return constrained_4_approx(inst.swapped(), tol).swapped()
    centers, rp = constrained_k_center(inst.points, inst.p, tol)
    # balls smaller than alpha/2 are blown up to alpha/2
    ball = max(rp, inst.alpha / 2.0)
    red, blue = [], []
    for i, cl in enumerate(cluster_balls(centers, ball)):
        left, right = _split(cl.core, ball, inst.alpha)
        if i % 2 == 0:
            red.append(left)
            blue.append(right)
        else:
            red.append(right)
            blue.append(left)
    radius = 2.0 * inst.alpha if rp < inst.alpha / 2.0 else 4.0 * rp
    red += [red[0]] * (inst.p - len(red))
    blue += [blue[0]] * (inst.q - len(blue))
    return Solution(red, blue, radius)


def refine_eps(inst: Instance, R: float, eps: float, tol: float = DEFAULT_TOL) -> tuple[float, Solution]:
    """Smallest feasible radius on the grid ``R/4 * (1+eps)**t`` capped at R.

    ``R`` must be feasible and at most four times the optimum for the
    (1 + eps) guarantee to hold.
    """
    if eps <= 0:
        raise ValueError("eps must be positive")
    top = feasible(inst, R, tol)
    if top is None:
        raise ValueError(f"R={R!r} is not a feasible radius")
    steps = math.ceil(math.log(4.0) / math.log1p(eps))
    grid = [min(R / 4.0 * (1.0 + eps) ** t, R) for t in range(steps + 1)]
    grid[-1] = R
    lo, hi, best = 0, len(grid) - 1, top
    while lo < hi:
        mid = (lo + hi) // 2
        sol = feasible(inst, grid[mid], tol)
        if sol is not None:
            hi, best = mid, sol
        else:
            lo = mid + 1
    return grid[hi], best
