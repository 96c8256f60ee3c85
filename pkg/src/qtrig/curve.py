"""Quantum trigonometric Bezier-type curves and their corner-cutting schemes.

A control polygon b_0..b_n and a certified interval define the curve
P(x) = sum_k b_k B_k(x; q).  Two de Casteljau-style algorithms evaluate P by
repeated convex-like combinations; their intermediate points also satisfy
closed-form expressions that this module exposes for cross-checking.

Sampled curves can be tested for membership in the trigonometric space

    T_n = span{sin^(n-k)(x) cos^k(x), k = 0..n}
        = span{1, cos 2x, sin 2x, ..., cos nx, sin nx}        (n even)
        = span{cos x, sin x, cos 3x, sin 3x, ..., cos nx, sin nx}  (n odd)

by a least-squares fit; the curve coordinates always live in T_n.
"""

import math
from dataclasses import dataclass

import numpy as np

from .basis import basis_all_direct
from .errors import IllConditionedFitError
from .kernel import Interval, kernel_tables, require_valid_interval
from .qcalc import q_binomial_row, q_powers, validate_q

__all__ = [
    "ControlPolygon",
    "CurveSample",
    "DeCasteljauTableau",
    "evaluate_direct",
    "evaluate_alg1",
    "evaluate_alg2",
    "intermediate_explicit",
    "sample_curve",
    "tn_design_matrix",
    "tn_membership_residual",
]

FIT_CONDITION_LIMIT = 1e12


@dataclass(frozen=True)
class ControlPolygon:
    """Ordered control points, shape (n+1, dim)."""

    points: np.ndarray

    def __post_init__(self):
        pts = np.asarray(self.points, dtype=float)
        if pts.ndim == 1:  # scalar controls are allowed as a flat list
            pts = pts[:, None]
        if pts.ndim != 2 or pts.shape[0] < 1 or pts.shape[1] < 1:
            raise ValueError(f"control points must be (n+1, dim), got {pts.shape}")
        if not np.all(np.isfinite(pts)):
            raise ValueError("control points must be finite")
        object.__setattr__(self, "points", pts)

    @property
    def degree(self) -> int:
        return self.points.shape[0] - 1

    @property
    def dim(self) -> int:
        return self.points.shape[1]

    @property
    def diameter(self) -> float:
        diffs = self.points[:, None, :] - self.points[None, :, :]
        return float(np.sqrt((diffs ** 2).sum(axis=2)).max())


@dataclass(frozen=True)
class CurveSample:
    x: float
    point: np.ndarray
    method: str


@dataclass(frozen=True)
class DeCasteljauTableau:
    """Triangular scheme: rows[r] holds the n+1-r points of stage r."""

    variant: str  # "alg1" or "alg2"
    x: float
    q: float
    interval: Interval
    rows: tuple[np.ndarray, ...]

    @property
    def degree(self) -> int:
        return len(self.rows) - 1

    @property
    def apex(self) -> np.ndarray:
        return self.rows[-1][0]

    def entry(self, r: int, k: int) -> np.ndarray:
        return self.rows[r][k]


def evaluate_direct(polygon: ControlPolygon, x: float, q: float, interval: Interval) -> np.ndarray:
    """P(x) as the basis-weighted sum of control points."""
    bv = basis_all_direct(polygon.degree, x, q, interval)
    return bv.values @ polygon.points


def _tableau(polygon, x, q, interval, variant):
    n = polygon.degree
    q = validate_q(q)
    require_valid_interval(interval, q, n)
    d_ax, d_xb, d_ab = kernel_tables(interval, x, q, n)
    powers = q_powers(q, n + 1)
    rows = [polygon.points.copy()]
    for r in range(n):
        den = d_ab[n - r - 1]
        prev = rows[-1]
        cur = np.empty((n - r, polygon.dim))
        for k in range(n - r):
            lower = d_xb[n - r - k - 1] / den  # multiplies the kept point
            upper = d_ax[k] / den              # multiplies the next point
            if variant == "alg1":
                cur[k] = powers[k] * lower * prev[k] + upper * prev[k + 1]
            else:
                cur[k] = lower * prev[k] + powers[n - r - k - 1] * upper * prev[k + 1]
        rows.append(cur)
    return DeCasteljauTableau(
        variant=variant, x=x, q=q, interval=interval, rows=tuple(rows)
    )


def evaluate_alg1(polygon: ControlPolygon, x: float, q: float, interval: Interval) -> DeCasteljauTableau:
    """Corner-cutting scheme with weight q^k on the kept point:

    b_k^(r+1) = q^k (d(x,b;q^(n-r-k-1))/d(a,b;q^(n-r-1))) b_k^r
              +     (d(a,x;q^k)        /d(a,b;q^(n-r-1))) b_(k+1)^r
    """
    return _tableau(polygon, x, q, interval, "alg1")


def evaluate_alg2(polygon: ControlPolygon, x: float, q: float, interval: Interval) -> DeCasteljauTableau:
    """Corner-cutting scheme with weight q^(n-r-k-1) on the advanced point:

    b_k^(r+1) =               (d(x,b;q^(n-r-k-1))/d(a,b;q^(n-r-1))) b_k^r
              + q^(n-r-k-1)   (d(a,x;q^k)        /d(a,b;q^(n-r-1))) b_(k+1)^r
    """
    return _tableau(polygon, x, q, interval, "alg2")


def intermediate_explicit(
    variant: str,
    r: int,
    k: int,
    x: float,
    polygon: ControlPolygon,
    q: float,
    interval: Interval,
) -> np.ndarray:
    """Closed form of the stage-r tableau point k, without running the scheme.

    Both variants share the structure

        sum_{j=0}^{r} prefactor(j) b_(k+j) [r choose j]_q
            * prod_{i=0}^{j-1}   d(a, x; q^(i+k))
            * prod_{i=0}^{r-j-1} d(x, b; q^(i+n-r-k))
            / prod_{i=0}^{r-1}   d(a, b; q^(i+n-r))

    with prefactor q^(k(r-j)) for "alg1" and q^(j(n-r-k)) for "alg2".
    """
    if variant not in ("alg1", "alg2"):
        raise ValueError(f"variant must be 'alg1' or 'alg2', got {variant!r}")
    n = polygon.degree
    if r < 0 or r > n or k < 0 or k > n - r:
        raise IndexError(f"tableau entry (r={r}, k={k}) outside degree-{n} scheme")
    q = validate_q(q)
    require_valid_interval(interval, q, n)
    d_ax, d_xb, d_ab = kernel_tables(interval, x, q, n)
    den = 1.0
    for i in range(r):
        den *= d_ab[i + n - r]
    qb = q_binomial_row(r, q)
    acc = np.zeros(polygon.dim)
    for j in range(r + 1):
        exponent = k * (r - j) if variant == "alg1" else j * (n - r - k)
        term = q ** exponent * qb[j]
        for i in range(j):
            term *= d_ax[i + k]
        for i in range(r - j):
            term *= d_xb[i + n - r - k]
        acc += (term / den) * polygon.points[k + j]
    return acc


_METHODS = {
    "direct": lambda poly, x, q, iv: evaluate_direct(poly, x, q, iv),
    "alg1": lambda poly, x, q, iv: evaluate_alg1(poly, x, q, iv).apex,
    "alg2": lambda poly, x, q, iv: evaluate_alg2(poly, x, q, iv).apex,
}


def sample_curve(
    polygon: ControlPolygon,
    q: float,
    interval: Interval,
    count: int,
    method: str = "direct",
) -> list[CurveSample]:
    """Uniform samples of P over [a, b], endpoints included."""
    if count < 2:
        raise ValueError(f"need at least 2 samples, got {count}")
    if method not in _METHODS:
        raise ValueError(f"unknown method {method!r}, expected one of {sorted(_METHODS)}")
    evaluate = _METHODS[method]
    xs = np.linspace(interval.a, interval.b, count)
    return [CurveSample(float(x), evaluate(polygon, float(x), q, interval), method) for x in xs]


def tn_design_matrix(xs: np.ndarray, n: int) -> np.ndarray:
    """Columns of the order-n trigonometric space evaluated at xs."""
    xs = np.asarray(xs, dtype=float)
    cols = []
    if n % 2 == 0:
        cols.append(np.ones_like(xs))
        freqs = range(2, n + 1, 2)
    else:
        freqs = range(1, n + 1, 2)
    for f in freqs:
        cols.append(np.cos(f * xs))
        cols.append(np.sin(f * xs))
    return np.column_stack(cols)


def tn_membership_residual(samples: list[CurveSample], n: int) -> float:
    """Worst per-coordinate RMS residual of a least-squares fit in T_n.

    A residual near zero certifies that the sampled coordinates lie in the
    trigonometric space; a residual far from zero rules membership out.
    Needs at least 2(n+1) samples.  Solved by normal equations, guarded by
    a condition-number cap.
    """
    if n < 0:
        raise ValueError(f"n must be >= 0, got {n}")
    if len(samples) < 2 * (n + 1):
        raise ValueError(
            f"need at least {2 * (n + 1)} samples for degree {n}, got {len(samples)}"
        )
    xs = np.array([s.x for s in samples])
    ys = np.vstack([np.atleast_1d(s.point) for s in samples])
    design = tn_design_matrix(xs, n)
    gram = design.T @ design
    condition = float(np.linalg.cond(gram))
    if condition > FIT_CONDITION_LIMIT:
        raise IllConditionedFitError(condition, FIT_CONDITION_LIMIT)
    coef = np.linalg.solve(gram, design.T @ ys)
    resid = design @ coef - ys
    rms = np.sqrt((resid ** 2).mean(axis=0))
    return float(rms.max())
