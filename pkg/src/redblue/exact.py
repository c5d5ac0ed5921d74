"""Optimal radius for the line-constrained problem."""

from __future__ import annotations

from dataclasses import dataclass

from .feasibility import feasible
from .geometry import DEFAULT_TOL, Instance, Solution
from .radii import candidate_radii


@dataclass
class ExactResult:
    radius: float
    solution: Solution
    candidates: int
    feasibility_calls: int

    def __iter__(self):
        # allows ``r, sol = solve_constrained(inst)``
        return iter((self.radius, self.solution))


def solve_constrained(inst: Instance, tol: float = DEFAULT_TOL) -> ExactResult:
    """Binary search over the candidate radii, by index, with the feasibility test."""
    cands = candidate_radii(inst, tol)
    calls = 1
    lo, hi = 0, len(cands) - 1
    best = feasible(inst, cands[hi], tol)
    if best is None:
        raise RuntimeError(
            f"largest candidate radius {cands[hi]!r} is infeasible; candidate set incomplete"
        )
    while lo < hi:
        mid = (lo + hi) // 2
        sol = feasible(inst, cands[mid], tol)
        calls += 1
        if sol is not None:
            hi, best = mid, sol
        else:
            lo = mid + 1
    return ExactResult(cands[hi], best, len(cands), calls)
