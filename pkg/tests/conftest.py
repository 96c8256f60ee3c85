import math

import numpy as np
import pytest

from qtrig import ControlPolygon, Interval, basis_all_direct, certify_interval

ARCH_POINTS = [[0.0, 0.0], [1.0, 2.0], [2.0, 2.0], [3.0, 0.0]]

_CASE_POOL = [Interval.quarter(k) for k in (-1, 0, 1, 2)] + [Interval(math.pi / 8, math.pi / 4)]


def random_curve_case(rng, max_degree=10):
    """Random (polygon, x, q, interval) with a certified, well-conditioned setup.

    The basis-mass guard rejects parameter points where sum |B_k| blows up
    (possible off the quarter-period grid); there the evaluation itself is
    ill-conditioned in float64 and no method can be expected to agree with
    any other to fine tolerance.
    """
    while True:
        n = int(rng.integers(1, max_degree + 1))
        q = float(np.exp(rng.uniform(np.log(0.4), np.log(3.5))))
        if rng.random() < 0.75:
            iv = _CASE_POOL[int(rng.integers(0, len(_CASE_POOL)))]
        else:
            a = float(rng.uniform(-3.0, 3.0))
            iv = Interval(a, a + float(rng.uniform(0.3, 1.2)))
        if not certify_interval(iv, q, n).valid:
            continue
        x = float(rng.uniform(iv.a, iv.b))
        if float(np.sum(np.abs(basis_all_direct(n, x, q, iv).values))) > 50.0:
            continue
        dim = int(rng.integers(1, 4))
        poly = ControlPolygon(rng.uniform(-3.0, 3.0, size=(n + 1, dim)))
        return poly, x, q, iv


@pytest.fixture
def quarter():
    return Interval(0.0, math.pi / 2)


@pytest.fixture
def narrow():
    return Interval(math.pi / 8, math.pi / 4)


@pytest.fixture
def arch_polygon():
    return ControlPolygon(np.array(ARCH_POINTS))


def rel_err(got, want, floor=1.0):
    got = np.asarray(got, dtype=float)
    want = np.asarray(want, dtype=float)
    scale = max(float(np.max(np.abs(want))), floor)
    return float(np.max(np.abs(got - want))) / scale
