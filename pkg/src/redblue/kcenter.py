"""Plain k-center subroutines: farthest-point traversal and the exact
line-constrained k-center radius."""

from __future__ import annotations

import numpy as np

from .geometry import DEFAULT_TOL, Instance, as_points, intervals_at, line_distances
from .radii import solve_same_index, solve_sum_equation


def gonzalez_p_center(points, k: int) -> tuple[np.ndarray, float]:
    """Farthest-point traversal seeded with the first point.

    Returns ``(centers, radius)`` where ``centers`` is a subset of the
    input rows and ``radius <= 2 * r_k(points)``.  Stops early once every
    point coincides with a center, so fewer than ``k`` centers come back
    when the set has fewer than ``k`` distinct points.
    """
    pts = as_points(points)
    if k < 1:
        raise ValueError("k must be >= 1")
    chosen = [0]
    nearest = np.linalg.norm(pts - pts[0], axis=1)
    while len(chosen) < k:
        far = int(np.argmax(nearest))
        if nearest[far] == 0.0:
            break
        chosen.append(far)
        nearest = np.minimum(nearest, np.linalg.norm(pts - pts[far], axis=1))
    return pts[chosen].copy(), float(np.max(nearest))


def hitting_number(intervals, eps: float = 0.0) -> tuple[int, list[float]]:
    """Minimum number of points stabbing every interval, with a witness.

    Classic greedy: sweep by right endpoint and drop a point at the right
    end of each interval not yet stabbed.
    """
    witness: list[float] = []
    last = None
    for iv in sorted(intervals, key=lambda iv: iv.right):
        if last is not None and iv.left <= last + eps:
            continue
        last = iv.right
        witness.append(last)
    return len(witness), witness


def constrained_radius_candidates(points) -> list[float]:
    """Radii at which the stabbing number of the axis intervals can change.

    These are the interval birth radii and the radii where a left endpoint
    meets a right endpoint.
    """
    pts = as_points(points)
    h = line_distances(pts)
    x = pts[:, 0]
    hmax = float(np.max(h))
    out = {solve_same_index(float(hi), 0, 1.0) for hi in h}
    n = len(pts)
    for i in range(n):
        for k in range(n):
            if i == k:
                continue
            r = solve_sum_equation(float(h[i]), float(h[k]), float(x[i] - x[k]))
            if r is not None and r >= hmax:
                out.add(r)
    return sorted(r for r in out if r >= hmax)


def constrained_k_center(points, k: int, tol: float = DEFAULT_TOL) -> tuple[list[float], float]:
    """Exact k-center with centers restricted to the x-axis.

    Binary search over :func:`constrained_radius_candidates` with the
    greedy stabbing number as the decision step.
    """
    pts = as_points(points)
    if k < 1:
        raise ValueError("k must be >= 1")
    # alpha and the color counts are irrelevant here; the instance only
    # carries the tolerance scale
    inst = Instance(pts, 1, 1, 1.0)
    eps = tol * inst.scale()
    cands = constrained_radius_candidates(pts)

    def stab(r):
        ivs = intervals_at(inst, r, tol)
        if ivs is None:
            return None
        count, witness = hitting_number(ivs, eps)
        return witness if count <= k else None

    lo, hi = 0, len(cands) - 1
    best = stab(cands[hi])
    if best is None:
        raise RuntimeError("largest candidate radius is not feasible")
    best_r = cands[hi]
    while lo < hi:
        mid = (lo + hi) // 2
        w = stab(cands[mid])
        if w is not None:
            hi, best, best_r = mid, w, cands[mid]
        else:
            lo = mid + 1
    return best, best_r


__all__ = [
    "gonzalez_p_center",
    "hitting_number",
    "constrained_k_center",
    "constrained_radius_candidates",
]
