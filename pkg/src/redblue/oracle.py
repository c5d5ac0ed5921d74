"""Exponential-time ground truth for tiny constrained instances.

Deliberately independent of the candidate-position set and the memoized
search in :mod:`redblue.feasibility`: it enumerates ordered sequences of
(face, color) choices and packs each sequence as far left as the
constraints allow.  For a fixed sequence every constraint is a lower
bound on a position (face start, order, alpha after the last point of the
other color), so leftmost packing is feasible whenever any placement is.
"""

from __future__ import annotations

from typing import Optional

from .geometry import DEFAULT_TOL, Instance, Solution, intervals_at
from .radii import candidate_radii

MAX_N = 8
MAX_CENTERS = 5


class OracleTooLarge(ValueError):
    pass


def _guard(inst: Instance) -> None:
    if inst.n > MAX_N or inst.p + inst.q > MAX_CENTERS:
        raise OracleTooLarge(
            f"oracle limited to n <= {MAX_N}, p + q <= {MAX_CENTERS}; "
            f"got n={inst.n}, p+q={inst.p + inst.q}"
        )


def _slots(ivs, eps):
    """Closed faces of the interval arrangement, as (left, right) pairs."""
    pts = []
    for x in sorted(e for iv in ivs for e in (iv.left, iv.right)):
        if not pts or x - pts[-1] > eps:
            pts.append(x)
    slots = []
    for lo, hi in zip(pts, pts[1:]):
        mid = 0.5 * (lo + hi)
        if any(iv.left <= mid <= iv.right for iv in ivs):
            slots.append((lo, hi))
    for x in pts:
        if not any(lo - eps <= x <= hi + eps for lo, hi in slots):
            slots.append((x, x))
    slots.sort()
    return slots


def brute_force_feasible(inst: Instance, r: float, tol: float = DEFAULT_TOL) -> Optional[Solution]:
    _guard(inst)
    ivs = intervals_at(inst, r, tol)
    if ivs is None:
        return None
    eps = tol * inst.scale()
    alpha = inst.alpha
    slots = _slots(ivs, eps)
    n = len(ivs)
    full = (1 << n) - 1
    inf = float("inf")

    def hits(x):
        mask = 0
        for i, iv in enumerate(ivs):
            if iv.left - eps <= x <= iv.right + eps:
                mask |= 1 << i
        return mask

    def dead(mask, x):
        # an interval missed so far that ends before x can never be hit
        for i, iv in enumerate(ivs):
            if not mask >> i & 1 and iv.right < x - eps:
                return True
        return False

    placed: list[tuple[int, float]] = []

    def search(slot_from, used, pos, last, a, b, red_mask, blue_mask):
        if red_mask == full and blue_mask == full:
            return True
        for s in range(slot_from, len(slots)):
            lo, hi = slots[s]
            if hi < pos - eps:
                continue
            in_slot = used if s == slot_from else 0
            for color in (0, 1):
                # a second center of one color in the same slot never helps
                if (a if color == 0 else b) == 0 or in_slot >> color & 1:
                    continue
                x = max(lo, pos, last[1 - color] + alpha)
                if x > hi + eps:
                    continue
                rm = red_mask | hits(x) if color == 0 else red_mask
                bm = blue_mask | hits(x) if color == 1 else blue_mask
                if dead(rm, x) or dead(bm, x):
                    continue
                nl = (x, last[1]) if color == 0 else (last[0], x)
                placed.append((color, x))
                if search(s, in_slot | 1 << color, x, nl,
                          a - (color == 0), b - (color == 1), rm, bm):
                    return True
                placed.pop()
        return False

    if not search(0, 0, -inf, (-inf, -inf), inst.p, inst.q, 0, 0):
        return None
    red = [x for c, x in placed if c == 0]
    blue = [x for c, x in placed if c == 1]
    red += [red[0]] * (inst.p - len(red))
    blue += [blue[0]] * (inst.q - len(blue))
    return Solution(red, blue, r)


def brute_force_optimal(inst: Instance, tol: float = DEFAULT_TOL) -> float:
    """Smallest candidate radius the oracle accepts.

    Also checks that the midpoint between it and the next smaller
    candidate is rejected; by monotonicity that covers every gap below.
    """
    _guard(inst)
    cands = candidate_radii(inst, tol)
    lo, hi = 0, len(cands) - 1
    if brute_force_feasible(inst, cands[hi], tol) is None:
        raise RuntimeError("largest candidate radius rejected by the oracle")
    while lo < hi:
        mid = (lo + hi) // 2
        if brute_force_feasible(inst, cands[mid], tol) is not None:
            hi = mid
        else:
            lo = mid + 1
    if hi > 0:
        gap = 0.5 * (cands[hi - 1] + cands[hi])
        if brute_force_feasible(inst, gap, tol) is not None:
            raise AssertionError(
                f"radius {gap!r} between candidates {cands[hi - 1]!r} and {cands[hi]!r} is feasible"
            )
    return cands[hi]
