"""Dominant singularity and first-order asymptotics of r(n) for d = -1.

All floating point in the package lives here, in mpmath multiprecision.
Exact counts come from :mod:`ddyck.recurrences` and are converted only at
the comparison.

The estimate converges slowly: ``1 - 4x + 2x^2`` (the denominator of the
closed form) vanishes at ``1 - 1/sqrt(2) ~ 0.29289``, just below the branch
point, so the amplitude is large (~29.33) and the relative error decays
like ``O(1/n)`` with a big constant (about 35% at n = 400).
"""
from __future__ import annotations

from dataclasses import dataclass

import mpmath

from .recurrences import r_minus1

__all__ = [
    "DEFAULT_PRECISION",
    "SingularityData",
    "quartic",
    "compute_rho",
    "r_asymptotic",
    "relative_error",
    "asymptotic_table",
]

DEFAULT_PRECISION = 50


def quartic(x):
    return 1 - 4 * x + 2 * x**2 + x**4


@dataclass(frozen=True)
class SingularityData:
    rho: mpmath.mpf
    amplitude: mpmath.mpf
    rho_closed: mpmath.mpf
    rho_bisect: mpmath.mpf
    precision: int

    @property
    def residual(self) -> mpmath.mpf:
        return abs(quartic(self.rho))


def _rho_closed() -> mpmath.mpf:
    w = 13 + 3 * mpmath.sqrt(33)
    return (-1 - 4 * mpmath.cbrt(2) ** 2 / mpmath.cbrt(w) + mpmath.cbrt(2 * w)) / 3


def _rho_bisect(tol) -> mpmath.mpf:
    # quartic(0) = 1 > 0 and quartic(1/2) < 0; the first sign change is rho.
    lo, hi = mpmath.mpf(0), mpmath.mpf(1) / 2
    while hi - lo > tol:
        mid = (lo + hi) / 2
        if quartic(mid) > 0:
            lo = mid
        else:
            hi = mid
    return (lo + hi) / 2


def compute_rho(precision: int = DEFAULT_PRECISION) -> SingularityData:
    """Smallest positive root of 1 - 4x + 2x^2 + x^4, two independent ways."""
    if precision < 6:
        raise ValueError("precision must be at least 6 digits")
    with mpmath.workdps(precision + 15):
        closed = _rho_closed()
        bisect = _rho_bisect(mpmath.mpf(10) ** -(precision + 10))
        if abs(closed - bisect) > mpmath.mpf(10) ** -precision:
            raise ArithmeticError("closed-form and bisection roots disagree")
        rho = closed
        amp = mpmath.sqrt(rho * (4 - 4 * rho - 4 * rho**3)) / (4 * (-1 + 4 * rho - 2 * rho**2))
    with mpmath.workdps(precision):
        return SingularityData(+rho, +amp, +closed, +bisect, precision)


def r_asymptotic(n: int, data: SingularityData | None = None) -> mpmath.mpf:
    """First-order estimate rho^-n / sqrt(pi n^3) * amplitude."""
    if n < 1:
        raise ValueError("n must be >= 1")
    data = data or compute_rho()
    with mpmath.workdps(data.precision):
        return data.rho ** (-n) / mpmath.sqrt(mpmath.pi * mpmath.mpf(n) ** 3) * data.amplitude


def relative_error(n: int, data: SingularityData | None = None) -> mpmath.mpf:
    data = data or compute_rho()
    with mpmath.workdps(data.precision):
        exact = mpmath.mpf(r_minus1(n))
        return abs(r_asymptotic(n, data) / exact - 1)


def asymptotic_table(ns, precision: int = DEFAULT_PRECISION) -> list[dict]:
    """Rows ``{n, exact, estimate, relative_error}`` (the last two as mpf)."""
    data = compute_rho(precision)
    rows = []
    with mpmath.workdps(precision):
        for n in ns:
            exact = r_minus1(n)
            est = r_asymptotic(n, data)
            rows.append({"n": n, "exact": exact, "estimate": est, "relative_error": abs(est / exact - 1)})
    return rows
