"""Integer sequences of the d-Dyck family, computed exactly.

Every sequence is kept in a :class:`SequenceTable`, an extend-only memo: a
value, once computed, never changes, and concurrent readers see the same
prefix no matter how extensions interleave.

Indexing follows the usual conventions: ``r(n)``, ``q_n``, ``A_n`` and
``a(n)`` start at n = 1 (with ``r(0) = q_0 = A_0 = a(0) = 0`` stored for
convenience), ``b(n)`` and the Catalan numbers start at n = 0.
"""
from __future__ import annotations

import threading
from fractions import Fraction
from functools import lru_cache
from math import comb
from typing import Callable, Optional

__all__ = [
    "IndexOutOfRange",
    "SequenceTable",
    "binom",
    "catalan",
    "narayana",
    "r_nonneg",
    "r_nonneg_closed",
    "p_nonneg",
    "q_seq",
    "r_minus1",
    "R_METHODS",
    "q_power",
    "b_closed",
    "B_FORMULAS",
    "A_seq",
    "a_seq",
    "TABLES",
    "sequence",
]


class IndexOutOfRange(IndexError):
    pass


def binom(n: int, k: int) -> int:
    """Binomial coefficient, zero outside 0 <= k <= n."""
    if n < 0 or k < 0 or k > n:
        return 0
    return comb(n, k)


class SequenceTable:
    """Memoized prefix of an integer sequence.

    ``step(values, n)`` returns the n-th value given the list of all earlier
    ones (``values[i]`` is the value at index ``first + i``).
    """

    def __init__(self, name: str, step: Callable[[list[int], int], int], first: int = 0, seeds=()):
        self.name = name
        self.first = first
        self._step = step
        self._values: list[int] = list(seeds)
        self._lock = threading.Lock()

    def __len__(self) -> int:
        return len(self._values)

    def __getitem__(self, n: int) -> int:
        i = n - self.first
        if i < 0:
            raise IndexOutOfRange(f"{self.name}({n}) is below the first index {self.first}")
        if i >= len(self._values):
            self.extend(n)
        return self._values[i]

    def extend(self, n: int) -> None:
        with self._lock:
            values = self._values
            while len(values) <= n - self.first:
                values.append(self._step(values, self.first + len(values)))

    def prefix(self, n: int) -> list[int]:
        """Values at indices first..n."""
        self.extend(n)
        return self._values[: n - self.first + 1]


# Catalan / Narayana


def catalan(n: int) -> int:
    if n < 0:
        raise IndexOutOfRange("catalan(n) needs n >= 0")
    return comb(2 * n, n) // (n + 1)


def _narayana(n: int, k: int) -> int:
    if n == 0:
        return 1 if k == 0 else 0
    if k < 1 or k > n:
        return 0
    return comb(n, k) * comb(n, k - 1) // n


def narayana(n: int, k: int) -> int:
    """Narayana number N(n, k) = binom(n,k) binom(n,k-1) / n, with N(0,0) = 1."""
    if n < 0 or k < 0 or k > n:
        raise IndexOutOfRange(f"narayana({n}, {k}) needs 0 <= k <= n")
    return _narayana(n, k)


# d >= 0


@lru_cache(maxsize=None)
def _nonneg_table(d: int) -> SequenceTable:
    def step(v: list[int], n: int) -> int:
        if n <= max(d, 1):
            return binom(n, 2) + 1
        return 2 * v[n - 1] - v[n - 2] + v[n - d - 1]

    return SequenceTable(f"r_{d}", step)


def r_nonneg(d: int, n: int) -> int:
    """r_d(n) for d >= 0 by the linear recursion."""
    if d < 0 or n < 0:
        raise IndexOutOfRange("r_nonneg needs d >= 0 and n >= 0")
    return _nonneg_table(d)[n]


def r_nonneg_closed(d: int, n: int) -> int:
    """r_d(n) for d >= 1, n >= 1 by the single binomial sum."""
    if d < 1 or n < 1:
        raise IndexOutOfRange("the closed sum needs d >= 1 and n >= 1")
    return sum(binom(n - (d - 1) * (k - 1), 2 * k) for k in range((n + d - 2) // d + 1))


def p_nonneg(d: int, n: int, k: int) -> int:
    """Number of d-Dyck paths (d >= 0) of semi-length n with exactly k peaks."""
    if d < 0 or n < 1 or k < 1:
        raise IndexOutOfRange("p_nonneg needs d >= 0, n >= 1, k >= 1")
    return binom(n + k - d * (k - 2) - 2, 2 * (k - 1))


# d = -1


def _q_step(q: list[int], n: int) -> int:
    if n <= 3:
        return (0, 0, 1, 3)[n]
    s = sum(q[i] * (q[n - i - 1] - q[n - i - 2]) for i in range(2, n - 3))
    return 2 * q[n - 1] + q[n - 2] + q[n - 3] + s + 1


_Q = SequenceTable("q", _q_step)


def q_seq(n: int) -> int:
    """q_n: (-1)-Dyck paths of semi-length n whose last valley is on the ground."""
    if n < 1:
        raise IndexOutOfRange("q_n is defined for n >= 1")
    return _Q[n]


def _r_conv_step(r: list[int], n: int) -> int:
    if n <= 3:
        return (0, 1, 2, 5)[n]
    _Q.extend(n)
    s = sum(_Q[i] * (r[n - i - 1] - r[n - i - 2]) for i in range(2, n - 2))
    return 3 * r[n - 1] - r[n - 2] + _Q[n - 2] + s


def _r_prec_step(r: list[int], m: int) -> int:
    # The order-6 relation at shift n = m - 6, solved for r(n + 6).
    n = m - 6
    s = (
        2 * n * r[n]
        - 4 * n * r[n + 1]
        + (12 + 5 * n) * r[n + 2]
        - 4 * (15 + 4 * n) * r[n + 3]
        + 10 * (9 + 2 * n) * r[n + 4]
        - 2 * (21 + 4 * n) * r[n + 5]
    )
    lead = 6 + n
    assert lead != 0
    value, rem = divmod(-s, lead)
    if rem:
        raise ArithmeticError(f"P-recurrence produced a non-integer at n={m}")
    return value


@lru_cache(maxsize=None)
def _b_table() -> SequenceTable:
    return SequenceTable("b", lambda v, n: b_closed(n, "narayana_sum"))


@lru_cache(maxsize=None)
def _q_power_row(i: int) -> SequenceTable:
    """Row i of the i-fold convolution of b, as a function of the total."""
    if i == 0:
        return SequenceTable("q^(0)", lambda v, n: 1 if n == 0 else 0)
    prev = _q_power_row(i - 1)
    b = _b_table()
    return SequenceTable(f"q^({i})", lambda v, n: sum(b[m] * prev[n - m] for m in range(n + 1)))


def q_power(i: int, ell: int) -> int:
    """Number of i-tuples of ground-last-valley paths (empty path allowed) of total size ell."""
    if i < 0 or ell < 0:
        raise IndexOutOfRange("q_power needs i >= 0 and ell >= 0")
    return _q_power_row(i)[ell]


def _r_double_sum(n: int) -> int:
    return sum(
        binom(n - ell - 1, i) * q_power(i, ell)
        for ell in range(n + 1)
        for i in range(n - ell)
    )


_R_CONV = SequenceTable("r[convolution]", _r_conv_step)
_R_PREC = SequenceTable("r[p_recurrence]", _r_prec_step, seeds=(0, 1, 2, 5, 14, 41))
_R_DSUM = SequenceTable("r[double_sum]", lambda v, n: _r_double_sum(n))

R_METHODS = {"convolution": _R_CONV, "p_recurrence": _R_PREC, "double_sum": _R_DSUM}


def r_minus1(n: int, method: str = "p_recurrence") -> int:
    """r(n) = number of (-1)-Dyck paths of semi-length n, by the chosen method."""
    try:
        table = R_METHODS[method]
    except KeyError:
        raise ValueError(f"unknown method {method!r}; expected one of {sorted(R_METHODS)}") from None
    if n < 0:
        raise IndexOutOfRange("r(n) needs n >= 0")
    return table[n]


def _b_inclusion_exclusion(n: int) -> int:
    if n == 0:
        return 1
    total = sum(
        Fraction((-1) ** j * binom(n - j, j) * binom(2 * n - 3 * j, n - j + 1), n - j)
        for j in range((n - 1) // 2 + 1)
    )
    assert total.denominator == 1
    return total.numerator


def _b_narayana_sum(n: int) -> int:
    return sum(
        binom(n - k, j) * _narayana(j, k) for k in range(n // 2 + 1) for j in range(n - k + 1)
    )


B_FORMULAS = {"inclusion_exclusion": _b_inclusion_exclusion, "narayana_sum": _b_narayana_sum}


def b_closed(n: int, formula: str = "narayana_sum") -> int:
    """b(n): (-1)-Dyck paths of semi-length n with no valley or last valley on the ground."""
    if n < 0:
        raise IndexOutOfRange("b(n) needs n >= 0")
    try:
        return B_FORMULAS[formula](n)
    except KeyError:
        raise ValueError(f"unknown formula {formula!r}; expected one of {sorted(B_FORMULAS)}") from None


# area, d = -1


def _A_step(A: list[int], n: int) -> int:
    if n <= 4:
        return (0, 0, 2, 13, 58)[n]
    q = _Q.prefix(n)
    s = sum(
        2 * (A[i] + i * q[i] + i * (i + 1)) * (q[n - i - 1] - q[n - i - 2]) for i in range(2, n - 3)
    )
    return (
        2 * A[n - 1] + A[n - 2] + 2 * A[n - 3]
        + q[n] - q[n - 1] + 2 * n * q[n - 2] + 2 * (n - 5) * q[n - 3]
        + 4 * n * n - 14 * n + 13 + s
    )


_A = SequenceTable("A", _A_step)

# a(1..3) are seeds taken from exhaustive enumeration; the recursion
# reproduces the oracle from n = 4 on (it references q_{n-2}, A_{n-2}, r(n-3)).
_A_SMALL_SEEDS = (0, 1, 6, 29)


def _a_step(a: list[int], n: int) -> int:
    if n < len(_A_SMALL_SEEDS):
        return _A_SMALL_SEEDS[n]
    q, A, r = _Q.prefix(n), _A.prefix(n), _R_PREC.prefix(n)
    s1 = sum(q[i - 1] * (a[n - i] - a[n - i - 1]) for i in range(3, n - 1))
    s2 = sum((A[i - 1] + (2 * i - 1) * q[i - 1] + i * i) * (r[n - i] - r[n - i - 1]) for i in range(3, n - 1))
    return (
        3 * a[n - 1] - a[n - 2] + A[n - 2] + 2 * (n - 1) * q[n - 2]
        + 2 * n * r[n - 1] + 2 * (3 - n) * r[n - 2] - 4 * r[n - 3] + (n - 1) ** 2
        + s1 + s2
    )


_a = SequenceTable("a", _a_step)


def A_seq(n: int) -> int:
    """A_n: total area of the ground-last-valley (-1)-Dyck paths of semi-length n."""
    if n < 1:
        raise IndexOutOfRange("A_n is defined for n >= 1")
    return _A[n]


def a_seq(n: int) -> int:
    """a(n): total area of all (-1)-Dyck paths of semi-length n."""
    if n < 1:
        raise IndexOutOfRange("a(n) is defined for n >= 1")
    return _a[n]


#: Named sequence accessors, for export.
TABLES: dict[str, Callable[[int], int]] = {
    "catalan": catalan,
    "r": lambda n: r_minus1(n),
    "q": q_seq,
    "b": lambda n: b_closed(n),
    "A": A_seq,
    "a": a_seq,
}


def sequence(name: str, n: int, first: Optional[int] = None) -> list[tuple[int, int]]:
    """``[(index, value), ...]`` for a named table up to index n."""
    fn = TABLES[name]
    start = first if first is not None else (0 if name in ("catalan", "b") else 1)
    return [(k, fn(k)) for k in range(start, n + 1)]
