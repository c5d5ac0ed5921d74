"""Command-line front end.

    redblue gen --seed 1 --n 6 --d 2 --p 2 --q 1 --alpha 1.5 > inst.json
    redblue solve inst.json --mode exact
    redblue solve inst.json --mode approx | redblue verify inst.json -
    redblue plotdata inst.json --radius 6

Exit codes: 0 success, 1 bad input, 2 infeasible ``--mode feasible`` query.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
import time
from pathlib import Path

import numpy as np

from .approx_general import approx_general_solve
from .approx_line import constrained_4_approx, refine_eps
from .exact import solve_constrained
from .feasibility import candidate_centers, compute_faces, feasible
from .geometry import DEFAULT_TOL, Instance, Solution, check_solution, intervals_at, line_distances
from .oracle import brute_force_feasible, brute_force_optimal

EXIT_OK, EXIT_INPUT, EXIT_INFEASIBLE = 0, 1, 2
MODES = ("exact", "approx", "approx-line", "feasible", "refine")


class InputError(Exception):
    pass


def _dump(obj) -> str:
    return json.dumps(obj, sort_keys=True, indent=2)


def _read_text(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    try:
        return Path(path).read_text()
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc}") from exc


def instance_to_dict(inst: Instance) -> dict:
    return {
        "dim": inst.dim,
        "alpha": inst.alpha,
        "p": inst.p,
        "q": inst.q,
        "points": inst.points.tolist(),
    }


def load_instance(path: str, p=None, q=None, alpha=None) -> Instance:
    """Read a JSON instance, or a CSV with one point per row plus flags."""
    text = _read_text(path)
    try:
        if path.endswith(".csv"):
            rows = [r for r in csv.reader(io.StringIO(text)) if r and not r[0].startswith("#")]
            points = [[float(v) for v in row] for row in rows]
            data = {}
        else:
            data = json.loads(text)
            points = data["points"]
        p = p if p is not None else data.get("p")
        q = q if q is not None else data.get("q")
        alpha = alpha if alpha is not None else data.get("alpha")
        if p is None or q is None or alpha is None:
            raise InputError("p, q and alpha are required (instance file or --p/--q/--alpha)")
        inst = Instance(np.asarray(points, dtype=float), p, q, float(alpha))
        if "dim" in data and int(data["dim"]) != inst.dim:
            raise InputError(f"dim={data['dim']} does not match point dimension {inst.dim}")
        return inst
    except (KeyError, TypeError, ValueError) as exc:
        raise InputError(f"bad instance {path}: {exc}") from exc


def load_solution(path: str) -> Solution:
    try:
        data = json.loads(_read_text(path))
        return Solution(list(data["red"]), list(data["blue"]), float(data["radius"]))
    except (KeyError, TypeError, ValueError) as exc:
        raise InputError(f"bad solution {path}: {exc}") from exc


def cmd_gen(args) -> int:
    if args.n < 1 or args.d < 1 or args.p < 1 or args.q < 1:
        raise InputError("n, d, p and q must be >= 1")
    if not args.alpha > 0 or not args.spread > 0:
        raise InputError("alpha and spread must be positive")
    rng = np.random.default_rng(args.seed)
    pts = rng.uniform(0.0, args.spread, size=(args.n, args.d))
    inst = Instance(pts, args.p, args.q, args.alpha)
    text = _dump(instance_to_dict(inst)) + "\n"
    if args.output:
        Path(args.output).write_text(text)
    else:
        sys.stdout.write(text)
    return EXIT_OK


def cmd_solve(args) -> int:
    inst = load_instance(args.instance, args.p, args.q, args.alpha)
    tol = args.tol
    start = time.perf_counter()
    out: dict = {"mode": args.mode}
    code = EXIT_OK
    if args.mode == "exact":
        res = solve_constrained(inst, tol)
        sol = res.solution
        out["candidates"] = res.candidates
        if args.oracle:
            ref = brute_force_optimal(inst, tol)
            out["oracle_radius"] = ref
            out["oracle_agrees"] = abs(ref - res.radius) <= 1e-9 * max(1.0, ref)
    elif args.mode == "approx":
        sol = approx_general_solve(inst)
    elif args.mode == "approx-line":
        sol = constrained_4_approx(inst, tol)
    elif args.mode == "feasible":
        if args.radius is None:
            raise InputError("--mode feasible needs --radius")
        sol = feasible(inst, args.radius, tol)
        out["feasible"] = sol is not None
        if args.oracle:
            ref = brute_force_feasible(inst, args.radius, tol) is not None
            out["oracle_agrees"] = ref == (sol is not None)
        if sol is None:
            out["radius"] = args.radius
            code = EXIT_INFEASIBLE
    else:
        if args.eps is None or args.eps <= 0:
            raise InputError("--mode refine needs a positive --eps")
        start_sol = constrained_4_approx(inst, tol)
        _, sol = refine_eps(inst, start_sol.radius, args.eps, tol)
        out["start_radius"] = start_sol.radius
    if sol is not None:
        out.update(sol.to_dict())
        out["valid"] = check_solution(inst, sol, tol).valid
    out["elapsed_ms"] = round(1000.0 * (time.perf_counter() - start), 3)
    print(_dump(out))
    return code


def cmd_verify(args) -> int:
    inst = load_instance(args.instance, args.p, args.q, args.alpha)
    sol = load_solution(args.solution)
    try:
        report = check_solution(inst, sol, args.tol)
    except ValueError as exc:
        raise InputError(str(exc)) from exc
    print(_dump(report.to_dict()))
    return EXIT_OK


def cmd_plotdata(args) -> int:
    inst = load_instance(args.instance, args.p, args.q, args.alpha)
    ivs = intervals_at(inst, args.radius, args.tol)
    if ivs is None:
        hmax = float(np.max(line_distances(inst.points)))
        raise InputError(
            f"radius {args.radius} is below the largest distance to the line "
            f"(max d_i = {hmax!r}); some point cannot be covered"
        )
    eps = args.tol * inst.scale()
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    buf.write("# intervals\n")
    w.writerow(["index", "left", "right"])
    for iv in sorted(ivs, key=lambda iv: iv.source_index):
        w.writerow([iv.source_index, repr(iv.left), repr(iv.right)])
    buf.write("# faces\n")
    w.writerow(["left", "right"])
    for f in compute_faces(ivs, eps):
        w.writerow([repr(f.left), repr(f.right)])
    buf.write("# candidates\n")
    w.writerow(["position"])
    for c in candidate_centers(ivs, inst.alpha, eps).positions:
        w.writerow([repr(c)])
    sys.stdout.write(buf.getvalue())
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="redblue", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    def instance_args(sp):
        sp.add_argument("instance", help="instance file (.json, or .csv with --p/--q/--alpha)")
        sp.add_argument("--p", type=int, help="red center count (overrides the file)")
        sp.add_argument("--q", type=int, help="blue center count (overrides the file)")
        sp.add_argument("--alpha", type=float, help="separation distance (overrides the file)")
        sp.add_argument("--tol", type=float, default=DEFAULT_TOL, help="comparison tolerance")

    g = sub.add_parser("gen", help="generate a random instance")
    g.add_argument("--seed", type=int, default=0)
    g.add_argument("--n", type=int, default=6)
    g.add_argument("--d", type=int, default=2)
    g.add_argument("--p", type=int, default=1)
    g.add_argument("--q", type=int, default=1)
    g.add_argument("--alpha", type=float, default=1.0)
    g.add_argument("--spread", type=float, default=10.0)
    g.add_argument("-o", "--output")
    g.set_defaults(func=cmd_gen)

    s = sub.add_parser("solve", help="solve an instance")
    instance_args(s)
    s.add_argument("--mode", choices=MODES, default="exact")
    s.add_argument("--radius", type=float, help="radius for --mode feasible")
    s.add_argument("--eps", type=float, help="accuracy for --mode refine")
    s.add_argument("--oracle", action="store_true", help="cross-check with the brute-force oracle")
    s.set_defaults(func=cmd_solve)

    v = sub.add_parser("verify", help="check a solution against an instance")
    instance_args(v)
    v.add_argument("solution", help="solution JSON ('-' for stdin)")
    v.set_defaults(func=cmd_verify)

    pd = sub.add_parser("plotdata", help="emit intervals, faces and candidate centers as CSV")
    instance_args(pd)
    pd.add_argument("--radius", type=float, required=True)
    pd.set_defaults(func=cmd_plotdata)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (InputError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
