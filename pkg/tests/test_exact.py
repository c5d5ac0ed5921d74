import numpy as np
import pytest
from conftest import random_instance

from redblue import (
    Instance,
    brute_force_optimal,
    check_solution,
    constrained_4_approx,
    feasible,
    lower_bound,
    solve_constrained,
)


def test_examples(one_point, two_points):
    r, sol = solve_constrained(one_point)
    assert r == 1.0 and sorted([sol.red[0], sol.blue[0]]) == [-1.0, 1.0]
    assert solve_constrained(two_points).radius == 6.0
    inst = Instance([[0.0, 0.0], [10.0, 0.0]], 2, 2, 0.5)
    res = solve_constrained(inst)
    assert res.radius == pytest.approx(0.25) == brute_force_optimal(inst)
    assert check_solution(inst, res.solution).valid


def test_result_fields(two_points):
    res = solve_constrained(two_points)
    assert res.candidates >= 1
    assert res.feasibility_calls <= int(np.ceil(np.log2(res.candidates))) + 1


@pytest.mark.parametrize("grid", [False, True])
def test_matches_oracle_and_sandwich(rng, grid):
    for _ in range(60):
        inst = random_instance(rng, grid=grid)
        res = solve_constrained(inst)
        assert res.radius == pytest.approx(brute_force_optimal(inst), rel=1e-9, abs=1e-12)
        assert check_solution(inst, res.solution).valid
        assert lower_bound(inst) <= res.radius + 1e-9
        approx = constrained_4_approx(inst)
        assert res.radius <= approx.radius + 1e-9
        assert approx.radius <= 4 * res.radius + 1e-9


def test_just_below_optimum_is_infeasible(rng):
    for _ in range(30):
        inst = random_instance(rng)
        res = solve_constrained(inst)
        if res.radius > 0:
            assert feasible(inst, res.radius * (1 - 1e-6)) is None
