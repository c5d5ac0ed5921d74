import numpy as np
import pytest

from redblue import Instance


def random_instance(rng, n_range=(2, 6), dims=(1, 2, 3), pq=(1, 2), spread=10.0, grid=False):
    n = int(rng.integers(n_range[0], n_range[1] + 1))
    d = int(rng.choice(dims))
    p, q = (int(rng.choice(pq)) for _ in range(2))
    if grid:
        pts = rng.integers(-3, 4, size=(n, d)).astype(float)
        alpha = float(rng.choice([0.5, 1.0, 2.0, 3.0, 7.0]))
    else:
        pts = rng.uniform(0.0, spread, size=(n, d))
        if rng.random() < 0.5:
            alpha = float(rng.uniform(0.1, 0.5 * spread))
        else:
            alpha = float(rng.uniform(spread, 3 * spread))
    return Instance(pts, p, q, alpha)


@pytest.fixture
def rng():
    return np.random.default_rng(12345)


@pytest.fixture
def two_points():
    return Instance([[0.0, 0.0], [10.0, 0.0]], 1, 1, 2.0)


@pytest.fixture
def one_point():
    return Instance([[0.0, 0.0]], 1, 1, 2.0)


def scan_has_root(f, r0, lo_exp=-8, hi_exp=8, samples=40000):
    """Dense scan of a continuous f on [r0, r0 + 1e8] for a sign change or zero."""
    offs = np.concatenate([[0.0], np.logspace(lo_exp, hi_exp, samples)])
    vals = np.array([f(r0 + o) for o in offs])
    return bool(np.any(vals >= 0) and np.any(vals <= 0))
