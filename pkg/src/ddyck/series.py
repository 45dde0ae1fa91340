"""Truncated power series in x with polynomial coefficients in a marker.

The marker is ``y`` when counting peaks and ``q`` when counting area.  All
arithmetic is exact: coefficients are ``int`` or :class:`fractions.Fraction`
(fractions with unit denominator are folded back to ``int``).

A series of order ``N`` knows its coefficients of ``x^0 .. x^N``; binary
operations truncate to the smaller order.  An optional *marker cap* bounds
the marker degree, which keeps area series finite: truncating modulo
``q^(cap+1)`` commutes with every ring operation used here.

>>> x, y = BivariateSeries.x(4), BivariateSeries.marker(4)
>>> (1 / (1 - x*y)).coefficient(3)
MarkerPoly((0, 0, 0, 1))
>>> ((1 + x) ** 2).sqrt() == 1 + x
True
"""
from __future__ import annotations

from fractions import Fraction
from numbers import Rational
from typing import Iterable, Optional, Sequence, Union

__all__ = [
    "SeriesError",
    "DivisionByNonUnit",
    "SqrtOfNonUnitConstant",
    "MarkerPoly",
    "BivariateSeries",
]

Coeff = Union[int, Fraction]
Poly = tuple  # tuple[Coeff, ...], lowest degree first, no trailing zeros


class SeriesError(ArithmeticError):
    pass


class DivisionByNonUnit(SeriesError):
    pass


class SqrtOfNonUnitConstant(SeriesError):
    pass


def _fold(c: Coeff) -> Coeff:
    if type(c) is Fraction and c.denominator == 1:
        return c.numerator
    return c


def _clean(coeffs: Iterable[Coeff]) -> Poly:
    r = [_fold(c) for c in coeffs]
    while r and r[-1] == 0:
        r.pop()
    return tuple(r)


def _padd(a: Poly, b: Poly) -> Poly:
    if not b:
        return a
    if not a:
        return b
    if len(a) < len(b):
        a, b = b, a
    r = list(a)
    for i, v in enumerate(b):
        r[i] += v
    return _clean(r)


def _pscale(a: Poly, s: Coeff) -> Poly:
    if s == 0 or not a:
        return ()
    return _clean(v * s for v in a)


def _pmul(a: Poly, b: Poly, cap: Optional[int]) -> Poly:
    if not a or not b:
        return ()
    n = len(a) + len(b) - 1
    if cap is not None:
        n = min(n, cap + 1)
    r = [0] * n
    lb = len(b)
    for i, ai in enumerate(a):
        if i >= n:
            break
        if ai == 0:
            continue
        for j in range(min(lb, n - i)):
            r[i + j] += ai * b[j]
    return _clean(r)


def _cap(p: Poly, cap: Optional[int]) -> Poly:
    if cap is None or len(p) <= cap + 1:
        return p
    return _clean(p[: cap + 1])


def _min_cap(a: Optional[int], b: Optional[int]) -> Optional[int]:
    if a is None:
        return b
    if b is None:
        return a
    return min(a, b)


class MarkerPoly:
    """Polynomial in the marker variable with exact coefficients."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[Coeff] = ()):
        self.coeffs: Poly = _clean(coeffs)

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def __getitem__(self, k: int) -> Coeff:
        return self.coeffs[k] if 0 <= k < len(self.coeffs) else 0

    def __eq__(self, other: object) -> bool:
        if isinstance(other, MarkerPoly):
            return self.coeffs == other.coeffs
        if isinstance(other, Rational):
            return self.coeffs == _clean([other])
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __add__(self, other: "MarkerPoly") -> "MarkerPoly":
        return MarkerPoly(_padd(self.coeffs, other.coeffs))

    def __mul__(self, other: "MarkerPoly") -> "MarkerPoly":
        return MarkerPoly(_pmul(self.coeffs, other.coeffs, None))

    def __call__(self, value: Coeff) -> Coeff:
        acc: Coeff = 0
        for c in reversed(self.coeffs):
            acc = acc * value + c
        return _fold(acc)

    def derivative_at(self, value: Coeff) -> Coeff:
        acc: Coeff = 0
        for k in range(len(self.coeffs) - 1, 0, -1):
            acc = acc * value + k * self.coeffs[k]
        return _fold(acc)

    def as_dict(self) -> dict[int, Coeff]:
        return {k: c for k, c in enumerate(self.coeffs) if c != 0}

    def format(self, var: str = "y") -> str:
        if not self.coeffs:
            return "0"
        terms = []
        for k in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[k]
            if c == 0:
                continue
            mono = "" if k == 0 else (var if k == 1 else f"{var}^{k}")
            if mono and c == 1:
                body = mono
            elif mono and c == -1:
                body = "-" + mono
            else:
                body = f"{c}{'*' if mono and type(c) is Fraction else ''}{mono}"
            terms.append(body)
        return " + ".join(terms).replace("+ -", "- ")

    def __repr__(self) -> str:
        return f"MarkerPoly({self.coeffs!r})"

    def __str__(self) -> str:
        return self.format()


class BivariateSeries:
    """Exact truncated series ``sum_n c_n(marker) x^n`` for ``n <= order``."""

    __slots__ = ("_c", "order", "cap")

    def __init__(
        self,
        coeffs: Sequence[Iterable[Coeff]] = (),
        order: Optional[int] = None,
        cap: Optional[int] = None,
    ):
        rows = [_cap(_clean(c), cap) for c in coeffs]
        if order is None:
            order = max(len(rows) - 1, 0)
        if order < 0:
            raise ValueError("order must be nonnegative")
        rows = rows[: order + 1]
        rows.extend(() for _ in range(order + 1 - len(rows)))
        self._c: tuple[Poly, ...] = tuple(rows)
        self.order = order
        self.cap = cap

    @classmethod
    def _raw(cls, rows: list, order: int, cap: Optional[int]) -> "BivariateSeries":
        s = object.__new__(cls)
        s._c = tuple(rows)
        s.order = order
        s.cap = cap
        return s

    # constructors

    @classmethod
    def constant(cls, c: Coeff, order: int, cap: Optional[int] = None) -> "BivariateSeries":
        return cls([[c]], order, cap)

    @classmethod
    def x(cls, order: int, cap: Optional[int] = None) -> "BivariateSeries":
        return cls([[], [1]], order, cap)

    @classmethod
    def marker(cls, order: int, cap: Optional[int] = None) -> "BivariateSeries":
        return cls([[0, 1]], order, cap)

    @classmethod
    def from_terms(
        cls, terms: dict[tuple[int, int], Coeff], order: int, cap: Optional[int] = None
    ) -> "BivariateSeries":
        """Build from ``{(x_power, marker_power): coefficient}``."""
        rows: list[list[Coeff]] = [[] for _ in range(order + 1)]
        for (i, j), c in terms.items():
            if i > order:
                continue
            row = rows[i]
            row.extend([0] * (j + 1 - len(row)))
            row[j] += c
        return cls(rows, order, cap)

    # access

    def coefficient(self, n: int) -> MarkerPoly:
        if not 0 <= n <= self.order:
            raise IndexError(f"x^{n} outside order {self.order}")
        return MarkerPoly(self._c[n])

    def __getitem__(self, n: int) -> MarkerPoly:
        return self.coefficient(n)

    def rows(self) -> tuple[Poly, ...]:
        return self._c

    def at_marker(self, value: Coeff) -> list[Coeff]:
        """Univariate coefficient list after setting the marker to ``value``."""
        return [MarkerPoly(r)(value) for r in self._c]

    def marker_derivative_at(self, value: Coeff) -> list[Coeff]:
        return [MarkerPoly(r).derivative_at(value) for r in self._c]

    def truncate(self, order: int) -> "BivariateSeries":
        if order > self.order:
            raise ValueError("cannot raise the order by truncation")
        return BivariateSeries._raw(list(self._c[: order + 1]), order, self.cap)

    def padded(self, order: int) -> "BivariateSeries":
        """Same coefficients, with unknown higher terms taken to be zero."""
        rows = list(self._c[: order + 1]) + [()] * max(0, order - self.order)
        return BivariateSeries._raw(rows, order, self.cap)

    def with_cap(self, cap: Optional[int]) -> "BivariateSeries":
        return BivariateSeries._raw([_cap(r, cap) for r in self._c], self.order, cap)

    def is_zero(self) -> bool:
        return not any(self._c)

    # comparison

    def __eq__(self, other: object) -> bool:
        if isinstance(other, Rational):
            other = BivariateSeries.constant(other, self.order)
        if not isinstance(other, BivariateSeries):
            return NotImplemented
        n = min(self.order, other.order)
        return self._c[: n + 1] == other._c[: n + 1]

    __hash__ = None  # type: ignore[assignment]

    # arithmetic

    def _coerce(self, other: object) -> "BivariateSeries":
        if isinstance(other, BivariateSeries):
            return other
        if isinstance(other, Rational):
            return BivariateSeries.constant(other, self.order, self.cap)
        if isinstance(other, MarkerPoly):
            return BivariateSeries([other.coeffs], self.order, self.cap)
        raise TypeError(f"cannot combine series with {type(other).__name__}")

    def __add__(self, other) -> "BivariateSeries":
        try:
            o = self._coerce(other)
        except TypeError:
            return NotImplemented
        n = min(self.order, o.order)
        cap = _min_cap(self.cap, o.cap)
        return BivariateSeries._raw(
            [_cap(_padd(self._c[i], o._c[i]), cap) for i in range(n + 1)], n, cap
        )

    __radd__ = __add__

    def __neg__(self) -> "BivariateSeries":
        return BivariateSeries._raw([_pscale(r, -1) for r in self._c], self.order, self.cap)

    def __sub__(self, other) -> "BivariateSeries":
        try:
            o = self._coerce(other)
        except TypeError:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other) -> "BivariateSeries":
        return (-self) + other

    def __mul__(self, other) -> "BivariateSeries":
        if isinstance(other, Rational):
            return BivariateSeries._raw([_pscale(r, other) for r in self._c], self.order, self.cap)
        try:
            o = self._coerce(other)
        except TypeError:
            return NotImplemented
        n = min(self.order, o.order)
        cap = _min_cap(self.cap, o.cap)
        a, b = self._c, o._c
        nz_a = [i for i in range(n + 1) if a[i]]
        nz_b = [j for j in range(n + 1) if b[j]]
        rows: list[Poly] = [()] * (n + 1)
        for i in nz_a:
            ai = a[i]
            for j in nz_b:
                k = i + j
                if k > n:
                    break
                rows[k] = _padd(rows[k], _pmul(ai, b[j], cap))
        return BivariateSeries._raw(rows, n, cap)

    __rmul__ = __mul__

    def inverse(self) -> "BivariateSeries":
        """Multiplicative inverse; the x^0 coefficient must be a nonzero constant."""
        c0 = self._c[0]
        if len(c0) != 1:
            raise DivisionByNonUnit(f"constant term {MarkerPoly(c0)} is not a unit")
        inv0 = Fraction(1, 1) / c0[0]
        n, cap, a = self.order, self.cap, self._c
        out: list[Poly] = [(_fold(inv0),)]
        for k in range(1, n + 1):
            acc: Poly = ()
            for i in range(1, k + 1):
                if a[i] and out[k - i]:
                    acc = _padd(acc, _pmul(a[i], out[k - i], cap))
            out.append(_pscale(acc, -inv0))
        return BivariateSeries._raw(out, n, cap)

    def __truediv__(self, other) -> "BivariateSeries":
        if isinstance(other, Rational):
            if other == 0:
                raise DivisionByNonUnit("division by zero")
            return self * (Fraction(1) / other)
        try:
            o = self._coerce(other)
        except TypeError:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other) -> "BivariateSeries":
        return self._coerce(other) * self.inverse()

    def __pow__(self, k: int) -> "BivariateSeries":
        if not isinstance(k, int) or k < 0:
            raise ValueError("only nonnegative integer powers are supported")
        result = BivariateSeries.constant(1, self.order, self.cap)
        base = self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    def sqrt(self) -> "BivariateSeries":
        """Square root with constant term 1, by Newton iteration."""
        if self._c[0] != (1,):
            raise SqrtOfNonUnitConstant(f"constant term {MarkerPoly(self._c[0])} is not 1")
        half = Fraction(1, 2)
        s = BivariateSeries.constant(1, 0, self.cap)
        m = 0
        while m < self.order:
            m = min(2 * m + 1, self.order)
            s = s.padded(m)
            s = (s + self.truncate(m) / s) * half
        return s

    def shift_x(self, k: int) -> "BivariateSeries":
        """Multiply by x^k (order is kept)."""
        rows = [()] * k + list(self._c)
        return BivariateSeries._raw(rows[: self.order + 1], self.order, self.cap)

    def div_x(self, k: int = 1) -> "BivariateSeries":
        """Divide by x^k; the low coefficients must vanish.  Order drops by k."""
        if any(self._c[:k]):
            raise DivisionByNonUnit(f"series is not divisible by x^{k}")
        if k > self.order:
            raise ValueError("not enough terms to divide by x^k")
        return BivariateSeries._raw(list(self._c[k:]), self.order - k, self.cap)

    def subst_xq(self, power: int = 2) -> "BivariateSeries":
        """Substitute x -> x*marker^power, i.e. c_n -> c_n * marker^(power*n)."""
        rows = [_cap(((0,) * (power * n) + r) if r else (), self.cap) for n, r in enumerate(self._c)]
        return BivariateSeries._raw(rows, self.order, self.cap)

    # presentation

    def __repr__(self) -> str:
        return f"BivariateSeries({[list(r) for r in self._c]!r}, order={self.order}, cap={self.cap})"

    def format(self, var: str = "y") -> str:
        parts = []
        for n, r in enumerate(self._c):
            if r:
                parts.append(f"x^{n}({MarkerPoly(r).format(var)})")
        return " + ".join(parts) + f" + O(x^{self.order + 1})"

    def to_json(self) -> list:
        """Nested list: one entry per x-power, each a list of [numerator, denominator]."""
        out = []
        for r in self._c:
            out.append([[int(Fraction(c).numerator), int(Fraction(c).denominator)] for c in r])
        return out

    @classmethod
    def from_json(cls, data: list, cap: Optional[int] = None) -> "BivariateSeries":
        rows = [[Fraction(num, den) for num, den in row] for row in data]
        return cls(rows, order=len(rows) - 1, cap=cap)
