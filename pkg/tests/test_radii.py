import math

import numpy as np
import pytest
from conftest import random_instance, scan_has_root

from redblue import (
    Instance,
    brute_force_feasible,
    candidate_radii,
    exceptional_pairs,
    solve_constrained,
    solve_difference_equation,
    solve_same_index,
    solve_sum_equation,
)
from redblue.geometry import half_width, line_distances
from redblue.radii import DIFFERENCE, radius_equations, solved_equations


def test_same_index_examples():
    assert solve_same_index(3.0, 0, 2.0) == 3.0
    r = solve_same_index(3.0, 2, 2.0)
    assert r == pytest.approx(math.sqrt(13))
    assert 2 * half_width(3.0, r) == pytest.approx(4.0)
    assert solve_same_index(0.0, 4, 1.0) == 2.0


def test_sum_examples():
    r = solve_sum_equation(3.0, 4.0, 7.0)
    assert r == pytest.approx(5.0)
    assert half_width(3.0, r) + half_width(4.0, r) == pytest.approx(7.0)
    assert solve_sum_equation(3.0, 4.0, -1.0) is None
    assert solve_sum_equation(0.0, 0.0, 10.0) == pytest.approx(5.0)


def test_difference_examples():
    assert solve_difference_equation(4.0, 3.0, -1.0) == pytest.approx(5.0)
    assert solve_difference_equation(3.0, 4.0, 1.0) == pytest.approx(5.0)
    assert solve_difference_equation(2.0, 5.0, 10.0) is None
    f = lambda r: half_width(2.0, r) - half_width(5.0, r) - 10.0
    assert not scan_has_root(f, 5.0)


def test_difference_degenerate_raises():
    with pytest.raises(ValueError):
        solve_difference_equation(2.0, 2.0, 0.0)
    assert solve_difference_equation(2.0, 3.0, 0.0) is None


def test_exceptional_pair_examples():
    inst = Instance([[0.0, 3.0], [2.0, 3.0]], 1, 1, 2.0)
    pairs = exceptional_pairs(inst)
    assert [(e.i, e.k, e.t) for e in pairs] == [(1, 0, 1)]
    assert exceptional_pairs(Instance([[0.0, 3.0], [2.0, 4.0]], 1, 1, 2.0)) == []
    assert exceptional_pairs(Instance([[0.0, 3.0], [1.0, 3.0]], 1, 1, 2.0)) == []


def test_exceptional_difference_equations_skipped():
    inst = Instance([[0.0, 3.0], [2.0, 3.0], [5.0, 1.0]], 1, 1, 2.0)
    skip = {(e.i, e.k, e.t) for e in exceptional_pairs(inst)}
    assert skip
    for eq in radius_equations(inst):
        if eq.kind == DIFFERENCE:
            assert (eq.i, eq.k, eq.t) not in skip and (eq.k, eq.i, eq.t) not in skip


def test_candidate_examples(two_points, one_point):
    assert 6.0 in candidate_radii(two_points)
    assert 1.0 in candidate_radii(one_point)
    inst = Instance([[0.0, 0.0], [10.0, 0.0]], 2, 2, 0.5)
    assert 0.25 in candidate_radii(inst)


def test_candidate_structure(rng):
    for _ in range(40):
        inst = random_instance(rng, grid=bool(rng.integers(2)))
        cands = candidate_radii(inst)
        hmax = float(np.max(line_distances(inst.points)))
        assert cands[0] == hmax
        assert all(b > a for a, b in zip(cands, cands[1:]))
        assert len(cands) <= 5 * inst.n ** 2 * (inst.p + inst.q)


def test_back_substitution(rng):
    for _ in range(40):
        inst = random_instance(rng, grid=bool(rng.integers(2)))
        h = line_distances(inst.points)
        for r, eq in solved_equations(inst):
            assert abs(eq.residual(h, r)) <= 1e-7 * max(1.0, r)


def test_midpoint_below_optimum_is_infeasible(rng):
    for _ in range(25):
        inst = random_instance(rng, grid=bool(rng.integers(2)))
        res = solve_constrained(inst)
        cands = candidate_radii(inst)
        i = cands.index(res.radius)
        assert brute_force_feasible(inst, res.radius) is not None
        if i:
            assert brute_force_feasible(inst, 0.5 * (cands[i - 1] + cands[i])) is None
