"""Constant-factor approximation in R^d (radius at most 14 times optimal).

Pipeline: farthest-point p-center on min(p, q) centers, inflate the
radius to at least alpha/2, thin the centers so kept ones are 4r' apart,
then put red on each kept center and blue at distance exactly alpha.
"""

from __future__ import annotations

import numpy as np

from .geometry import Instance, Solution, distance
from .kcenter import gonzalez_p_center


def greedy_separation_filter(centers, threshold: float) -> list[np.ndarray]:
    """Keep the first center, drop everything closer than ``threshold``, repeat."""
    if threshold < 0:
        raise ValueError("threshold must be non-negative")
    rest = [np.atleast_1d(np.asarray(c, dtype=float)) for c in centers]
    kept = []
    while rest:
        x = rest[0]
        kept.append(x)
        rest = [y for y in rest[1:] if distance(x, y) >= threshold]
    return kept


def _offset_exactly(x: np.ndarray, alpha: float) -> np.ndarray:
    """``x + alpha * e1``, nudged so the float distance is not below alpha."""
    y = x.copy()
    y[0] = x[0] + alpha
    while distance(x, y) < alpha:
        y[0] = np.nextafter(y[0], np.inf)
    return y


def construct_red_blue(kept, r_prime: float, inst: Instance) -> Solution:
    t = len(kept)
    if t == 0:
        raise ValueError("need at least one kept center")
    if t > inst.p or t > inst.q:
        raise ValueError(f"{t} kept centers but p={inst.p}, q={inst.q}")
    red = [np.asarray(x, dtype=float) for x in kept]
    blue = [_offset_exactly(x, inst.alpha) for x in red]
    red += [red[0]] * (inst.p - t)
    blue += [blue[0]] * (inst.q - t)
    return Solution(red, blue, 7.0 * r_prime)


def approx_general_solve(inst: Instance) -> Solution:
    if inst.p > inst.q:
        return approx_general_solve(inst.swapped()).swapped()
    centers, r = gonzalez_p_center(inst.points, inst.p)
    r_prime = max(r, inst.alpha / 2.0)
    kept = greedy_separation_filter(centers, 4.0 * r_prime)
    return construct_red_blue(kept, r_prime, inst)


def lower_bound(inst: Instance) -> float:
    """max(alpha/2, half the farthest-point radius on min(p, q) centers)."""
    _, r = gonzalez_p_center(inst.points, min(inst.p, inst.q))
    return max(inst.alpha / 2.0, r / 2.0)
