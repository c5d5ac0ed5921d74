import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st
from hypothesis.extra.numpy import arrays

from redblue import (
    Instance,
    approx_general_solve,
    check_solution,
    construct_red_blue,
    distance,
    gonzalez_p_center,
    greedy_separation_filter,
    lower_bound,
    solve_constrained,
)
from conftest import random_instance


def flat(xs):
    return [float(np.asarray(x).ravel()[0]) for x in xs]


def test_filter_examples():
    assert flat(greedy_separation_filter([[0.0], [1.0], [5.0]], 4.0)) == [0.0, 5.0]
    assert flat(greedy_separation_filter([[0.0]], 4.0)) == [0.0]
    assert flat(greedy_separation_filter([[0.0], [4.0], [8.0]], 4.0)) == [0.0, 4.0, 8.0]


@settings(max_examples=60)
@given(arrays(float, st.tuples(st.integers(1, 15), st.integers(1, 3)),
              elements=st.floats(-20, 20)), st.floats(0, 10))
def test_filter_postconditions(centers, threshold):
    kept = greedy_separation_filter(centers, threshold)
    for i, a in enumerate(kept):
        for b in kept[i + 1:]:
            assert distance(a, b) >= threshold
    for c in centers:
        assert min(distance(c, k) for k in kept) < threshold or any(
            np.array_equal(c, k) for k in kept)


def test_construct_examples():
    inst = Instance([[0.0, 0.0]], 1, 1, 2.0)
    sol = construct_red_blue([np.array([0.0, 0.0])], 10.0, inst)
    assert [r.tolist() for r in sol.red] == [[0.0, 0.0]]
    assert [b.tolist() for b in sol.blue] == [[2.0, 0.0]]
    assert sol.radius == 70.0
    inst = Instance([[0.0, 0.0]], 2, 1, 2.0)
    sol = construct_red_blue([np.array([0.0, 0.0])], 1.0, inst)
    assert [r.tolist() for r in sol.red] == [[0.0, 0.0], [0.0, 0.0]]
    assert [b.tolist() for b in sol.blue] == [[2.0, 0.0]]
    assert sol.radius == 7.0


def test_construct_rejects_too_many():
    inst = Instance([[0.0], [100.0]], 1, 2, 1.0)
    with pytest.raises(ValueError):
        construct_red_blue([np.array([0.0]), np.array([100.0])], 1.0, inst)


def test_solve_examples(one_point, two_points):
    sol = approx_general_solve(one_point)
    assert sol.radius == 7.0
    assert sol.blue[0].tolist() == [2.0, 0.0] and sol.red[0].tolist() == [0.0, 0.0]
    assert approx_general_solve(two_points).radius == 70.0


def test_lower_bound_examples():
    assert lower_bound(Instance([[1.0, 2.0]], 1, 1, 4.0)) == 2.0
    assert lower_bound(Instance([[0.0, 0.0], [10.0, 0.0]], 1, 1, 0.1)) == 5.0


def test_p_greater_than_q_swaps_roles():
    inst = Instance([[0.0, 0.0], [10.0, 0.0], [30.0, 1.0]], 3, 1, 1.0)
    sol = approx_general_solve(inst)
    assert len(sol.red) == 3 and len(sol.blue) == 1
    assert check_solution(inst, sol).valid


def test_random_instances(rng):
    for _ in range(60):
        n = int(rng.integers(1, 80))
        d = int(rng.integers(1, 5))
        inst = Instance(rng.normal(0, 10, size=(n, d)), int(rng.integers(1, 6)),
                        int(rng.integers(1, 6)), float(rng.uniform(0.01, 30)))
        sol = approx_general_solve(inst)
        rep = check_solution(inst, sol, tol=0.0)
        assert rep.valid and rep.min_separation >= inst.alpha
        _, g = gonzalez_p_center(inst.points, min(inst.p, inst.q))
        assert sol.radius <= 7 * max(g, inst.alpha / 2)
        assert sol.radius / lower_bound(inst) <= 14 + 1e-12


def test_fourteen_times_line_optimum(rng):
    for _ in range(30):
        inst = random_instance(rng)
        assert approx_general_solve(inst).radius <= 14 * solve_constrained(inst).radius + 1e-9
