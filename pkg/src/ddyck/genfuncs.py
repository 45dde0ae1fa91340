"""Generating functions for restricted d-Dyck paths, as exact truncated series.

Two kinds of routine live here:

* solvers for the functional systems (peaks for d = -e < 0, area for
  d = -1), iterated to a fixed point from zero; every unknown enters its
  right-hand side with a factor x, so each sweep fixes at least one more
  coefficient;
* expansions of the closed forms (rational for d >= 0, radicals for d = -1,
  and the Lagrange-inversion sum for L_e(x, 1)).

The two kinds are deliberately independent so that they can check each other.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb, factorial
from typing import Iterator, Optional

from .series import BivariateSeries, Coeff

__all__ = [
    "NonConvergence",
    "LeSystem",
    "AreaSystem",
    "series_L_nonneg",
    "solve_Le_system",
    "le_residuals",
    "series_L_closed_minus1",
    "series_L_minus1_univariate",
    "series_L_unrestricted",
    "series_Q_closed",
    "series_b",
    "lagrange_Le",
    "series_V",
    "solve_area_system",
]


class NonConvergence(RuntimeError):
    pass


def _ints(values: list[Coeff]) -> list[int]:
    out = []
    for v in values:
        if isinstance(v, Fraction):
            if v.denominator != 1:
                raise ArithmeticError(f"non-integral coefficient {v}")
            v = v.numerator
        out.append(int(v))
    return out


def _xy(order: int, cap: Optional[int] = None) -> tuple[BivariateSeries, BivariateSeries]:
    return BivariateSeries.x(order, cap), BivariateSeries.marker(order, cap)


# d >= 0


def series_L_nonneg(d: int, order: int) -> BivariateSeries:
    """Rational generating function of d-Dyck paths for d >= 0 (peaks marked by y)."""
    if d < 0:
        raise ValueError("d must be nonnegative")
    x, y = _xy(order)
    xd1y = x ** (d + 1) * y
    num = x * y * (1 - 2 * x + x * x + x * y - xd1y)
    den = (1 - x) * (1 - 2 * x + x * x - xd1y)
    return 1 + num / den


# d = -e < 0: the peaks system


@dataclass(frozen=True)
class LeSystem:
    """Fixed point of the peaks system for d = -e.

    ``L`` counts nonempty (-e)-Dyck paths, ``S`` the paths with no valley or
    last valley below level e, ``Q[i]`` the paths whose last valley is at i.
    """

    e: int
    L: BivariateSeries
    S: BivariateSeries
    Q: tuple[BivariateSeries, ...]


def _stable(old: tuple, new: tuple) -> bool:
    return all(a == b for a, b in zip(old, new))


def solve_Le_system(e: int, order: int) -> LeSystem:
    if e < 1:
        raise ValueError("e must be >= 1")
    if order < 1:
        raise ValueError("order must be >= 1")
    x, y = _xy(order)
    zero = BivariateSeries.constant(0, order)
    pyramids = y / (1 - x)
    xy_pyramids = x * pyramids
    L, S, Q = zero, zero, [zero] * e
    for _ in range(order + 2):
        S_new = pyramids + sum(Q, zero)
        xS = x * S_new
        Q_new = [xS * xy_pyramids + xS * Q[0]]
        for i in range(1, e):
            Q_new.append(x * Q_new[i - 1] + xS * Q[i])
        L_new = x * y + x * L + xS * L
        if _stable((L, S, *Q), (L_new, S_new, *Q_new)):
            return LeSystem(e, L_new, S_new, tuple(Q_new))
        L, S, Q = L_new, S_new, Q_new
    raise NonConvergence(f"peaks system for e={e} did not stabilise within {order + 2} sweeps")


def le_residuals(system: LeSystem) -> dict[str, BivariateSeries]:
    """Every identity the solved system must satisfy, as series that should vanish.

    Identities involving a division by x are one order shorter.
    """
    L, S, Q, e = system.L, system.S, system.Q, system.e
    order = L.order
    x, y = _xy(order)
    out = {
        "first_return": L - (x * y + x * L + x * S * L),
        "S_definition": S - (y / (1 - x) + sum(Q, BivariateSeries.constant(0, order))),
        "Q_0": Q[0] - (x * S * x * y / (1 - x) + x * S * Q[0]),
    }
    for i in range(1, e):
        out[f"Q_{i}"] = Q[i] - (x * Q[i - 1] + x * S * Q[i])
    base = y / (1 - x)
    out["summed_rows"] = (S - base) - (
        x * (S - base - Q[e - 1]) + x * S * (S - base) + x * x * y / (1 - x) * S
    )
    one_minus_xS = 1 - x * S
    for i in range(e):
        out[f"Q_{i}_closed"] = Q[i] - x ** (i + 2) * y * S / ((1 - x) * one_minus_xS ** (i + 1))
    out["algebraic"] = (
        one_minus_xS**e * (y + (1 - y) * x * S)
        - S * one_minus_xS ** (e + 1)
        - x ** (e + 2) * y / (1 - x) * S
    )
    radicand = 1 - 2 * x + x * x - 2 * x * y - 2 * x * x * y + x * x * y * y + 4 * x * x * Q[e - 1]
    S_closed = ((1 - x + x * y - radicand.sqrt()).div_x() * Fraction(1, 2))
    out["S_closed"] = S.truncate(order - 1) - S_closed
    out["L_via_S"] = L - x * y / (1 - x - x * S)
    return out


# d = -1 closed forms


def series_L_closed_minus1(order: int) -> BivariateSeries:
    """Closed radical form of the peaks generating function for d = -1."""
    x, y = _xy(order)
    R = 1 - x - 2 * x * y - 2 * x * x * y + x * x * y * y - x**3 * y * y
    num = (x - 1) * y * (1 - x * (2 + y) - (R / (1 - x)).sqrt())
    return num / (2 * (1 - 2 * x + x * x - 2 * x * y + x * x * y))


def series_L_minus1_univariate(order: int) -> list[int]:
    """Coefficients r(0..order) from the closed form of L(x, 1) for d = -1."""
    x = BivariateSeries.x(order)
    L = (-1 + 4 * x - 3 * x * x + (1 - 4 * x + 2 * x * x + x**4).sqrt()) / (2 * (1 - 4 * x + 2 * x * x))
    return _ints(L.at_marker(1))


def series_L_unrestricted(order: int) -> BivariateSeries:
    """Narayana generating function: every nonempty Dyck path, peaks marked."""
    x, y = _xy(order + 1)
    rad = (1 - 2 * x + x * x - 2 * x * y - 2 * x * x * y + x * x * y * y).sqrt()
    return (1 - x - x * y - rad).div_x() * Fraction(1, 2)


def series_Q_closed(order: int) -> BivariateSeries:
    """(-1)-Dyck paths whose last valley (at least one) is on the ground."""
    x, y = _xy(order + 1)
    R = 1 - x - 2 * x * y - 2 * x * x * y + x * x * y * y - x**3 * y * y
    num = 1 - x - x * y - x * x * y - ((1 - x) * R).sqrt()
    return num.div_x() / (2 * (1 - x))


def series_b(order: int) -> list[int]:
    """b(0..order): pyramids plus ground-last-valley (-1)-Dyck paths."""
    x = BivariateSeries.x(order + 1)
    num = 1 - x * x - (1 - 4 * x + 2 * x * x + x**4).sqrt()
    return _ints((num.div_x() / (2 * (1 - x))).at_marker(1))


# Lagrange inversion for L_e(x, 1)


def _weighted_compositions(total: int, parts: list[int]) -> Iterator[tuple[int, ...]]:
    """Tuples (i_p for p in parts) of nonnegative ints with sum(p * i_p) == total."""
    if not parts:
        if total == 0:
            yield ()
        return
    p, rest = parts[0], parts[1:]
    for k in range(total // p + 1):
        for tail in _weighted_compositions(total - p * k, rest):
            yield (k, *tail)


class _Powers:
    def __init__(self, base: BivariateSeries):
        self._p = [BivariateSeries.constant(1, base.order), base]

    def __getitem__(self, k: int) -> BivariateSeries:
        while len(self._p) <= k:
            self._p.append(self._p[-1] * self._p[1])
        return self._p[k]


def lagrange_Le(e: int, order: int) -> list[int]:
    """Coefficients of L_e(x, 1), indices 0..order, from the Lagrange-inversion sum.

    The n-th summand is divisible by x^ceil((n+1)/2), so summands with
    n <= 2*order - 1 determine the series to the requested order.
    """
    if e < 1:
        raise ValueError("e must be >= 1")
    x = BivariateSeries.x(order)
    inv = _Powers(1 / (1 - (e + 2) * x))
    t = _Powers(((e + 2) * x * (1 - x) - 1 + x * (1 + x)) / (1 - x))
    mids = {j: _Powers(comb(e + 2, j) * x - comb(e, j - 1)) for j in range(2, e + 1)}
    weights = list(range(2, e + 2))
    total = BivariateSeries.constant(0, order)
    for n in range(1, 2 * order):
        for idx in _weighted_compositions(n - 1, weights):
            i0 = n - sum(idx)
            if i0 > order:
                continue
            multinom = factorial(n)
            for k in (i0, *idx):
                multinom //= factorial(k)
            term = x**i0 * t[idx[-1]] * inv[n]
            for j, k in zip(weights[:-1], idx[:-1]):
                if k:
                    term = term * mids[j][k]
            total = total + term * Fraction(multinom, n)
    return _ints(total.at_marker(1))


# area, d = -1


def series_V(order: int) -> list[int]:
    """Total area a(0..order) of (-1)-Dyck paths, from the closed radical form."""
    x = BivariateSeries.x(order)
    b = (
        2 * x - 23 * x**2 + 107 * x**3 - 262 * x**4 + 359 * x**5 - 256 * x**6
        + 82 * x**7 - 5 * x**8 - 10 * x**9 + 6 * x**10
    )
    c = x - 10 * x**2 + 41 * x**3 - 89 * x**4 + 108 * x**5 - 73 * x**6 + 18 * x**7 + 2 * x**8
    rad = (1 - 4 * x + 2 * x**2 + x**4).sqrt()
    den = (1 - x) ** 2 * (1 - 4 * x + 2 * x**2) ** 3 * (1 - 3 * x - x**2 - x**3)
    return _ints(((b - c * rad) / den).at_marker(1))


@dataclass(frozen=True)
class AreaSystem:
    """Area-marked series for d = -1: ``A`` all paths, ``B`` ground-last-valley
    paths, ``E`` nonempty pyramids.  Marker degree is capped at order**2."""

    A: BivariateSeries
    B: BivariateSeries
    E: BivariateSeries


def solve_area_system(order: int) -> AreaSystem:
    if order < 1:
        raise ValueError("order must be >= 1")
    cap = order * order
    x, q = _xy(order, cap)
    E = BivariateSeries.from_terms({(j, j * j): 1 for j in range(1, order + 1)}, order, cap)
    zero = BivariateSeries.constant(0, order, cap)
    xq = x * q
    EE = E * E
    A, B = zero, zero
    for _ in range(order + 2):
        Bs = xq * B.subst_xq(2)
        B_new = EE + E * B + Bs * B + Bs * E
        A_new = xq + xq * A.subst_xq(2) + E * A + xq * B_new.subst_xq(2) * A
        if A_new == A and B_new == B:
            return AreaSystem(A_new, B_new, E)
        A, B = A_new, B_new
    raise NonConvergence(f"area system did not stabilise within {order + 2} sweeps")
