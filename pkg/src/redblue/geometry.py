"""Points, instances, solutions and the line-intersection intervals.

The constrained problem always places centers on the x-axis; a point
``p`` at radius ``r`` can then be covered from any x in
``[p[0] - s, p[0] + s]`` with ``s = sqrt(r**2 - h**2)`` and ``h`` the
distance of ``p`` from the axis.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Optional, Sequence, Union

import numpy as np

DEFAULT_TOL = 1e-9

Center = Union[float, Sequence[float], np.ndarray]


def as_points(points) -> np.ndarray:
    """Return ``points`` as a float array of shape (n, d)."""
    arr = np.asarray(points, dtype=float)
    if arr.ndim == 1:
        arr = arr.reshape(-1, 1)
    if arr.ndim != 2:
        raise ValueError(f"points must be a 2-d array, got shape {arr.shape}")
    if arr.shape[0] == 0:
        raise ValueError("point set is empty")
    if arr.shape[1] == 0:
        raise ValueError("points must have dimension >= 1")
    if not np.all(np.isfinite(arr)):
        raise ValueError("point coordinates must be finite")
    return arr


@dataclass(frozen=True)
class Instance:
    points: np.ndarray
    p: int
    q: int
    alpha: float

    def __post_init__(self):
        object.__setattr__(self, "points", as_points(self.points))
        if int(self.p) != self.p or self.p < 1:
            raise ValueError(f"p must be a positive integer, got {self.p}")
        if int(self.q) != self.q or self.q < 1:
            raise ValueError(f"q must be a positive integer, got {self.q}")
        if not (self.alpha > 0 and math.isfinite(self.alpha)):
            raise ValueError(f"alpha must be positive and finite, got {self.alpha}")
        object.__setattr__(self, "p", int(self.p))
        object.__setattr__(self, "q", int(self.q))
        object.__setattr__(self, "alpha", float(self.alpha))

    @property
    def n(self) -> int:
        return self.points.shape[0]

    @property
    def dim(self) -> int:
        return self.points.shape[1]

    def scale(self) -> float:
        """Magnitude used to turn the relative tolerance into an absolute one."""
        return max(1.0, float(np.max(np.abs(self.points))), self.alpha)

    def swapped(self) -> "Instance":
        return Instance(self.points, self.q, self.p, self.alpha)


@dataclass(frozen=True)
class Interval:
    left: float
    right: float
    source_index: int = -1

    def __post_init__(self):
        if self.left > self.right:
            raise ValueError(f"empty interval [{self.left}, {self.right}]")

    @property
    def width(self) -> float:
        return self.right - self.left

    def contains(self, x: float, eps: float = 0.0) -> bool:
        return self.left - eps <= x <= self.right + eps


@dataclass
class Solution:
    """Red and blue centers sharing one covering radius.

    Centers are plain floats (x-coordinates on the axis) for the
    constrained problem and coordinate vectors otherwise.
    """

    red: list
    blue: list
    radius: float

    def __post_init__(self):
        if self.radius < 0:
            raise ValueError("radius must be non-negative")

    def to_dict(self) -> dict:
        def plain(c):
            if np.ndim(c) == 0:
                return float(c)
            return [float(v) for v in np.asarray(c).ravel()]

        return {
            "radius": float(self.radius),
            "red": [plain(c) for c in self.red],
            "blue": [plain(c) for c in self.blue],
        }

    def swapped(self) -> "Solution":
        return Solution(self.blue, self.red, self.radius)


@dataclass
class CheckReport:
    covers_red: bool
    covers_blue: bool
    min_separation: float
    valid: bool
    max_red_gap: float = field(default=0.0)
    max_blue_gap: float = field(default=0.0)

    def to_dict(self) -> dict:
        return {
            "covers_red": self.covers_red,
            "covers_blue": self.covers_blue,
            "min_separation": self.min_separation,
            "valid": self.valid,
        }


def distance(a, b) -> float:
    a = np.asarray(a, dtype=float).ravel()
    b = np.asarray(b, dtype=float).ravel()
    if a.shape != b.shape:
        raise ValueError(f"dimension mismatch: {a.shape[0]} vs {b.shape[0]}")
    return float(np.linalg.norm(a - b))


def line_distance(point) -> float:
    """Distance of ``point`` from the x-axis."""
    x = np.asarray(point, dtype=float).ravel()
    return float(np.linalg.norm(x[1:])) if x.shape[0] > 1 else 0.0


def line_distances(points) -> np.ndarray:
    pts = as_points(points)
    return np.linalg.norm(pts[:, 1:], axis=1)


def half_width(h: float, r: float) -> float:
    """``sqrt(r**2 - h**2)`` clamped at zero."""
    # factored form keeps precision when r is close to h
    return math.sqrt(max((r - h) * (r + h), 0.0))


def interval_on_line(point, r: float, tol: float = 0.0, index: int = -1) -> Optional[Interval]:
    """Positions on the x-axis within ``r`` of ``point``, or None if there are none.

    ``tol`` lets a radius that falls short of the point's height by at
    most ``tol`` still produce the tangent (zero-width) interval.
    """
    if r < 0:
        raise ValueError("radius must be non-negative")
    x = np.asarray(point, dtype=float).ravel()
    h = line_distance(x)
    if r < h - tol:
        return None
    s = half_width(h, r)
    return Interval(float(x[0]) - s, float(x[0]) + s, index)


def intervals_at(inst: Instance, r: float, tol: float = DEFAULT_TOL) -> Optional[list[Interval]]:
    """All intervals at radius ``r`` sorted by (left, right); None if any is empty."""
    eps = tol * inst.scale()
    out = []
    for i, pt in enumerate(inst.points):
        iv = interval_on_line(pt, r, eps, i)
        if iv is None:
            return None
        out.append(iv)
    out.sort(key=lambda iv: (iv.left, iv.right))
    return out


def lift(center, dim: int) -> np.ndarray:
    """Embed an x-coordinate into R^dim on the x-axis; vectors pass through."""
    c = np.asarray(center, dtype=float)
    if c.ndim == 0:
        out = np.zeros(dim)
        out[0] = float(c)
        return out
    c = c.ravel()
    if c.shape[0] != dim:
        raise ValueError(f"center has dimension {c.shape[0]}, expected {dim}")
    return c


def check_solution(inst: Instance, sol: Solution, tol: float = DEFAULT_TOL) -> CheckReport:
    """Verify both coverings and the red-blue separation of ``sol``."""
    eps = tol * max(inst.scale(), sol.radius)
    pts = inst.points
    red = np.array([lift(c, inst.dim) for c in sol.red]).reshape(-1, inst.dim)
    blue = np.array([lift(c, inst.dim) for c in sol.blue]).reshape(-1, inst.dim)

    def gap(centers):
        if len(centers) == 0:
            return math.inf
        d = np.linalg.norm(pts[:, None, :] - centers[None, :, :], axis=2)
        return float(np.max(np.min(d, axis=1)))

    red_gap = gap(red)
    blue_gap = gap(blue)
    if len(red) and len(blue):
        sep = float(np.min(np.linalg.norm(red[:, None, :] - blue[None, :, :], axis=2)))
    else:
        sep = math.inf
    covers_red = red_gap <= sol.radius + eps
    covers_blue = blue_gap <= sol.radius + eps
    counts_ok = len(sol.red) == inst.p and len(sol.blue) == inst.q
    valid = covers_red and covers_blue and sep >= inst.alpha - eps and counts_ok
    return CheckReport(covers_red, covers_blue, sep, valid, red_gap, blue_gap)
