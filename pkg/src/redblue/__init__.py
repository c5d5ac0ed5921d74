"""Alpha-separated red-blue k-center: exact solver for centers on a line,
approximations in R^d, and a brute-force oracle for small instances."""

from .approx_general import approx_general_solve, construct_red_blue, greedy_separation_filter, lower_bound
from .approx_line import constrained_4_approx, refine_eps
from .exact import solve_constrained
from .feasibility import candidate_centers, compute_faces, compute_seq, feasible
from .geometry import (
    DEFAULT_TOL,
    Instance,
    Interval,
    Solution,
    check_solution,
    distance,
    interval_on_line,
    intervals_at,
    line_distance,
)
from .kcenter import constrained_k_center, gonzalez_p_center, hitting_number
from .oracle import brute_force_feasible, brute_force_optimal
from .radii import (
    candidate_radii,
    exceptional_pairs,
    solve_difference_equation,
    solve_same_index,
    solve_sum_equation,
)

__version__ = "0.1.0"
