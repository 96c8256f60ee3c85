"""The two-argument trigonometric kernel and parameter-interval bookkeeping.

The kernel

    d(x, y; q) = (q+1)/2 * sin(y - x) + (q-1)/2 * sin(y + x)

drives every basis and curve evaluation in this package.  It is affine in q
and collapses to sin(y - x) at q = 1.  A degree-n evaluation on [a, b]
divides by d(a, b; q^i) for a range of i, so intervals are certified before
use: every such denominator must stay clear of zero in float64.
"""

import math
from dataclasses import dataclass
from typing import Optional

from .errors import InvalidIntervalError
from .qcalc import q_powers, validate_q

__all__ = [
    "SINGULARITY_TOL",
    "QUARTER_SNAP_TOL",
    "trig_kernel",
    "Interval",
    "ValidityCertificate",
    "certify_interval",
    "require_valid_interval",
    "kernel_tables",
    "circular_barycentric",
]

# Denominators with |d(a,b;q^i)| at or below this are treated as singular.
SINGULARITY_TOL = 1e-12
# Endpoint distance to the k*pi/2 grid for quarter-period detection.
QUARTER_SNAP_TOL = 1e-12

_HALF_PI = math.pi / 2


def trig_kernel(x: float, y: float, q: float) -> float:
    """d(x, y; q) = (q+1)/2 sin(y-x) + (q-1)/2 sin(y+x)."""
    return 0.5 * (q + 1.0) * math.sin(y - x) + 0.5 * (q - 1.0) * math.sin(y + x)


@dataclass(frozen=True)
class Interval:
    """A parameter interval [a, b] with a < b."""

    a: float
    b: float

    def __post_init__(self):
        if not (math.isfinite(self.a) and math.isfinite(self.b)):
            raise ValueError(f"interval endpoints must be finite: [{self.a}, {self.b}]")
        if not self.a < self.b:
            raise ValueError(f"interval requires a < b, got [{self.a}, {self.b}]")

    @property
    def length(self) -> float:
        return self.b - self.a

    @property
    def quarter_period(self) -> bool:
        """True when [a, b] sits on the grid [k*pi/2, (k+1)*pi/2]."""
        k = round(self.a / _HALF_PI)
        return (
            abs(self.a - k * _HALF_PI) <= QUARTER_SNAP_TOL
            and abs(self.b - (k + 1) * _HALF_PI) <= QUARTER_SNAP_TOL
        )

    @classmethod
    def quarter(cls, k: int) -> "Interval":
        return cls(k * _HALF_PI, (k + 1) * _HALF_PI)


@dataclass(frozen=True)
class ValidityCertificate:
    """Outcome of checking d(a, b; q^i) for i = 0..n on an interval."""

    interval: Interval
    q: float
    n: int
    valid: bool
    min_abs_denominator: float
    failing_index: Optional[int]


def certify_interval(interval: Interval, q: float, n: int) -> ValidityCertificate:
    """Certify [a, b] for degree-n work at parameter q.

    Checks |d(a, b; q^i)| > SINGULARITY_TOL for i = 0..n inclusive; the
    extra index n covers the denominators of degree-raising recurrences.
    """
    q = validate_q(q)
    if n < 0:
        raise ValueError(f"n must be >= 0, got {n}")
    min_abs = math.inf
    failing = None
    for i, qi in enumerate(q_powers(q, n + 1)):
        v = abs(trig_kernel(interval.a, interval.b, qi))
        if v < min_abs:
            min_abs = v
        if failing is None and v <= SINGULARITY_TOL:
            failing = i
    return ValidityCertificate(
        interval=interval,
        q=q,
        n=n,
        valid=failing is None,
        min_abs_denominator=min_abs,
        failing_index=failing,
    )


def require_valid_interval(interval: Interval, q: float, n: int) -> None:
    """Raise InvalidIntervalError unless certify_interval passes."""
    cert = certify_interval(interval, q, n)
    if not cert.valid:
        i = cert.failing_index
        value = trig_kernel(interval.a, interval.b, q ** i)
        raise InvalidIntervalError(interval.a, interval.b, q, i, value)


def kernel_tables(
    interval: Interval, x: float, q: float, n: int
) -> tuple[list[float], list[float], list[float]]:
    """Kernel values at the geometric powers q^0..q^(n-1).

    Returns (d_ax, d_xb, d_ab) with d_ax[i] = d(a, x; q^i) and so on.
    Every evaluator in the package shares these tables so that identical
    subexpressions are bit-identical across methods.
    """
    a, b = interval.a, interval.b
    powers = q_powers(q, n)
    d_ax = [trig_kernel(a, x, qi) for qi in powers]
    d_xb = [trig_kernel(x, b, qi) for qi in powers]
    d_ab = [trig_kernel(a, b, qi) for qi in powers]
    return d_ax, d_xb, d_ab


def circular_barycentric(interval: Interval, x: float) -> tuple[float, float]:
    """Circular barycentric coordinates (u, v) of x on an arc shorter than pi.

    u = sin(x - a) / sin(b - a) and v = sin(b - x) / sin(b - a), so that
    u(a) = 0, v(a) = 1 and u(b) = 1, v(b) = 0.  Arcs of length >= pi are
    rejected: the coordinates degenerate there.
    """
    if interval.length >= math.pi:
        raise InvalidIntervalError(interval.a, interval.b, 1.0, 0, 0.0)
    s = math.sin(interval.b - interval.a)
    if abs(s) <= SINGULARITY_TOL:
        raise InvalidIntervalError(interval.a, interval.b, 1.0, 0, s)
    return math.sin(x - interval.a) / s, math.sin(interval.b - x) / s
