"""Decide whether a radius is feasible for the line-constrained problem.

Centers only need to be tried at a finite set of axis positions: the
face endpoints of the interval arrangement, each pushed forward by
multiples of alpha, keeping at most three hits per face.  A memoized
search then places centers left to right over those positions.
"""

from __future__ import annotations

import bisect
import math
from dataclasses import dataclass
from typing import NamedTuple, Optional

from .geometry import DEFAULT_TOL, Instance, Interval, Solution, intervals_at

RED, BLUE = 0, 1
PER_FACE = 3


@dataclass(frozen=True)
class FaceClosure:
    left: float
    right: float


@dataclass
class CandidateCenterSet:
    positions: list[float]
    next_index: list[int]

    @property
    def m(self) -> int:
        return len(self.positions)


class FeasibilityState(NamedTuple):
    """Search key: place ``color`` at ``positions[k]``.

    ``red_suffix``/``blue_suffix`` index the first interval (in left-endpoint
    order) not yet hit by that color; ``a``/``b`` are the remaining budgets.
    """

    color: int
    k: int
    red_suffix: int
    blue_suffix: int
    a: int
    b: int


def _merge_close(values, eps):
    out = []
    for v in sorted(values):
        if out and v - out[-1] <= eps:
            continue
        out.append(v)
    return out


def compute_faces(intervals, eps: float = 0.0) -> list[FaceClosure]:
    """Closures of the arrangement faces covered by at least one interval."""
    if not intervals:
        raise ValueError("no intervals")
    pts = _merge_close([e for iv in intervals for e in (iv.left, iv.right)], eps)
    faces = []
    for lo, hi in zip(pts, pts[1:]):
        mid = 0.5 * (lo + hi)
        if any(iv.left <= mid <= iv.right for iv in intervals):
            faces.append(FaceClosure(lo, hi))
    # isolated endpoints (zero-width intervals away from everything else)
    for x in pts:
        if not any(f.left - eps <= x <= f.right + eps for f in faces):
            faces.append(FaceClosure(x, x))
    faces.sort(key=lambda f: (f.left, f.right))
    return faces


def compute_seq(start: float, faces, alpha: float, eps: float = 0.0) -> list[float]:
    """Points ``start + k*alpha`` (k >= 0), at most three per face."""
    if alpha <= 0:
        raise ValueError("alpha must be positive")
    slack = eps / alpha
    out = []
    for f in faces:
        if f.right < start - eps:
            continue
        lo = max(0, math.ceil((f.left - start) / alpha - slack))
        hi = math.floor((f.right - start) / alpha + slack)
        for k in range(lo, min(hi, lo + PER_FACE - 1) + 1):
            out.append(min(max(start + k * alpha, f.left), f.right))
    out.sort()
    return out


def candidate_centers(intervals, alpha: float, eps: float = 0.0) -> CandidateCenterSet:
    faces = compute_faces(intervals, eps)
    starts = _merge_close([e for f in faces for e in (f.left, f.right)], eps)
    pos: list[float] = []
    for s in starts:
        pos.extend(compute_seq(s, faces, alpha, eps))
    pos = _merge_close(pos, eps)
    nxt = [bisect.bisect_left(pos, c + alpha - eps) for c in pos]
    return CandidateCenterSet(pos, nxt)


class _Search:
    def __init__(self, ivs: list[Interval], cands: CandidateCenterSet, p: int, q: int,
                 eps: float, check_invariants: bool = False):
        self.ivs = ivs
        self.lefts = [iv.left for iv in ivs]
        self.n = len(ivs)
        sufmin = [math.inf] * (self.n + 1)
        for i in range(self.n - 1, -1, -1):
            sufmin[i] = min(ivs[i].right, sufmin[i + 1])
        self.sufmin = sufmin
        self.c = cands.positions
        self.nxt = cands.next_index
        self.p, self.q = p, q
        self.eps = eps
        self.check = check_invariants
        self.memo: dict[FeasibilityState, bool] = {}
        self.choice: dict[FeasibilityState, Optional[FeasibilityState]] = {}

    def _hit_suffix(self, suffix: int, x: float) -> int:
        h = max(suffix, bisect.bisect_right(self.lefts, x + self.eps))
        if self.check:
            rest = {i for i in range(suffix, self.n) if not self.ivs[i].contains(x, self.eps)}
            assert rest == set(range(h, self.n)), "unhit intervals are not a suffix"
        return h

    def can(self, st: FeasibilityState) -> bool:
        hit = self.memo.get(st)
        if hit is None:
            hit = self.memo[st] = self._can(st)
        return hit

    def _can(self, st: FeasibilityState) -> bool:
        n, eps, c = self.n, self.eps, self.c
        color, k, sr, sb, a, b = st
        if sr == n and sb == n:
            self.choice[st] = None
            return True
        if (a if color == RED else b) == 0:
            return False
        x = c[k]
        if min(self.sufmin[sr], self.sufmin[sb]) < x - eps:
            return False
        if color == RED:
            sr, a = self._hit_suffix(sr, x), a - 1
        else:
            sb, b = self._hit_suffix(sb, x), b - 1
        if sr == n and sb == n:
            self.choice[st] = None
            return True
        if (sr < n and a == 0) or (sb < n and b == 0):
            return False
        limit = min(self.sufmin[sr], self.sufmin[sb]) + eps
        other = BLUE if color == RED else RED
        for nc, first in ((color, k + 1), (other, self.nxt[k])):
            for j in range(first, len(c)):
                if c[j] > limit:
                    break
                nst = FeasibilityState(nc, j, sr, sb, a, b)
                if self.can(nst):
                    self.choice[st] = nst
                    return True
        return False

    def solve(self) -> Optional[list[FeasibilityState]]:
        limit = self.sufmin[0] + self.eps
        for k, x in enumerate(self.c):
            if x > limit:
                break
            for color in (RED, BLUE):
                st = FeasibilityState(color, k, 0, 0, self.p, self.q)
                if self.can(st):
                    path = [st]
                    while self.choice.get(path[-1]) is not None:
                        path.append(self.choice[path[-1]])
                    return path
        return None


def feasible(inst: Instance, r: float, tol: float = DEFAULT_TOL,
             check_invariants: bool = False) -> Optional[Solution]:
    """Witness solution on the x-axis with covering radius ``r``, or None."""
    if r < 0:
        raise ValueError("radius must be non-negative")
    ivs = intervals_at(inst, r, tol)
    if ivs is None:
        return None
    eps = tol * inst.scale()
    cands = candidate_centers(ivs, inst.alpha, eps)
    path = _Search(ivs, cands, inst.p, inst.q, eps, check_invariants).solve()
    if path is None:
        return None
    red = [cands.positions[st.k] for st in path if st.color == RED]
    blue = [cands.positions[st.k] for st in path if st.color == BLUE]
    return Solution(_pad(red, inst.p), _pad(blue, inst.q), r)


def _pad(xs: list, count: int) -> list:
    if not xs:
        raise AssertionError("witness has no center of one color")
    return xs + [xs[0]] * (count - len(xs))
