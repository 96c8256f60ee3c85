"""Quantum trigonometric Bernstein bases.

Degree-n basis on a certified interval [a, b]:

    B_k(x; q) = [n choose k]_q
                * prod_{i=0}^{k-1} d(a, x; q^i)
                * prod_{i=0}^{n-k-1} d(x, b; q^i)
                / prod_{i=0}^{n-1} d(a, b; q^i)

with empty products equal to 1.  At q = 1 this is the classical circular
Bernstein basis.  Two degree-raising recurrences evaluate the whole vector;
they agree with the product formula and with each other.
"""

import math
from dataclasses import dataclass

import numpy as np

from .kernel import Interval, trig_kernel, kernel_tables, require_valid_interval
from .errors import InvalidIntervalError
from .qcalc import q_binomial_row, q_powers

__all__ = [
    "BasisVector",
    "basis_value_direct",
    "basis_all_direct",
    "basis_all_recurrence1",
    "basis_all_recurrence2",
    "classical_trig_basis",
]


@dataclass(frozen=True)
class BasisVector:
    """All degree-n basis values at one parameter location."""

    degree: int
    q: float
    interval: Interval
    x: float
    values: np.ndarray  # shape (degree + 1,)

    def __post_init__(self):
        object.__setattr__(self, "values", np.asarray(self.values, dtype=float))
        if self.values.shape != (self.degree + 1,):
            raise ValueError(
                f"expected {self.degree + 1} values, got shape {self.values.shape}"
            )


def _value_from_tables(n, k, qbinom_row, d_ax, d_xb, den):
    num = qbinom_row[k]
    for i in range(k):
        num *= d_ax[i]
    for i in range(n - k):
        num *= d_xb[i]
    return num / den


def _denominator(d_ab):
    den = 1.0
    for v in d_ab:
        den *= v
    return den


def basis_value_direct(n: int, k: int, x: float, q: float, interval: Interval) -> float:
    """One basis value via the product formula."""
    if k < 0 or k > n:
        raise IndexError(f"basis index k={k} outside 0..{n}")
    require_valid_interval(interval, q, n)
    d_ax, d_xb, d_ab = kernel_tables(interval, x, q, n)
    return _value_from_tables(n, k, q_binomial_row(n, q), d_ax, d_xb, _denominator(d_ab))


def basis_all_direct(n: int, x: float, q: float, interval: Interval) -> BasisVector:
    """The full basis vector via the product formula."""
    require_valid_interval(interval, q, n)
    d_ax, d_xb, d_ab = kernel_tables(interval, x, q, n)
    row = q_binomial_row(n, q)
    den = _denominator(d_ab)
    values = [_value_from_tables(n, k, row, d_ax, d_xb, den) for k in range(n + 1)]
    return BasisVector(degree=n, q=q, interval=interval, x=x, values=np.array(values))


def _recurrence(n, x, q, interval, second_form):
    require_valid_interval(interval, q, n)
    d_ax, d_xb, d_ab = kernel_tables(interval, x, q, n)
    powers = q_powers(q, n + 1)
    row = [1.0]
    for m in range(1, n + 1):
        prev = row
        den = d_ab[m - 1]
        row = [0.0] * (m + 1)
        for k in range(m + 1):
            v = 0.0
            # out-of-range terms of the previous row count as zero
            if k >= 1:
                lower = d_ax[k - 1] / den * prev[k - 1]
                v += lower if second_form else powers[m - k] * lower
            if k <= m - 1:
                upper = d_xb[m - k - 1] / den * prev[k]
                v += powers[k] * upper if second_form else upper
            row[k] = v
    return BasisVector(degree=n, q=q, interval=interval, x=x, values=np.array(row))


def basis_all_recurrence1(n: int, x: float, q: float, interval: Interval) -> BasisVector:
    """Degree-raising recurrence, variant with q^(m-k) on the lower term:

    B_k^m = q^(m-k) (d(a,x;q^(k-1)) / d(a,b;q^(m-1))) B_(k-1)^(m-1)
          +         (d(x,b;q^(m-k-1)) / d(a,b;q^(m-1))) B_k^(m-1)
    """
    return _recurrence(n, x, q, interval, second_form=False)


def basis_all_recurrence2(n: int, x: float, q: float, interval: Interval) -> BasisVector:
    """Degree-raising recurrence, variant with q^k on the upper term:

    B_k^m =     (d(a,x;q^(k-1)) / d(a,b;q^(m-1))) B_(k-1)^(m-1)
          + q^k (d(x,b;q^(m-k-1)) / d(a,b;q^(m-1))) B_k^(m-1)
    """
    return _recurrence(n, x, q, interval, second_form=True)


def classical_trig_basis(n: int, k: int, x: float, interval: Interval) -> float:
    """Classical circular Bernstein basis, the q = 1 special case:

    binom(n, k) (sin(x-a)/sin(b-a))^k (sin(b-x)/sin(b-a))^(n-k)
    """
    if k < 0 or k > n:
        raise IndexError(f"basis index k={k} outside 0..{n}")
    s = math.sin(interval.b - interval.a)
    if abs(s) <= 1e-12:
        raise InvalidIntervalError(interval.a, interval.b, 1.0, 0, s)
    u = math.sin(x - interval.a) / s
    v = math.sin(interval.b - x) / s
    return math.comb(n, k) * u ** k * v ** (n - k)
