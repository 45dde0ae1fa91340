"""Brute-force enumeration of Dyck paths.

Everything here walks the full set of Dyck paths of a given semi-length, so
it is the ground truth the closed forms and recurrences are checked against.
Paths are produced in lexicographic order with ``U < D`` and streamed; the
exhaustive bound (default 16, override with ``DDYCK_MAX_EXHAUSTIVE``) guards
the aggregate functions against accidental multi-hour runs.
"""
from __future__ import annotations

import os
from collections import Counter
from dataclasses import dataclass
from typing import Iterator, Optional

from .paths import (
    UNRESTRICTED,
    DParam,
    Path,
    area,
    is_d_dyck,
    last_valley_level,
    peaks,
)

__all__ = [
    "DEFAULT_MAX_EXHAUSTIVE",
    "ExhaustiveBoundExceeded",
    "max_exhaustive",
    "PathFilter",
    "gen_dyck",
    "iter_filtered",
    "count_filtered",
    "count_Q",
    "count_B",
    "total_area",
    "statistic_distribution",
]

DEFAULT_MAX_EXHAUSTIVE = 16


class ExhaustiveBoundExceeded(ValueError):
    pass


def max_exhaustive() -> int:
    """Current exhaustive bound, honouring ``DDYCK_MAX_EXHAUSTIVE``."""
    raw = os.environ.get("DDYCK_MAX_EXHAUSTIVE")
    return int(raw) if raw else DEFAULT_MAX_EXHAUSTIVE


def _check_bound(n: int, bound: Optional[int]) -> None:
    limit = max_exhaustive() if bound is None else bound
    if n > limit:
        raise ExhaustiveBoundExceeded(
            f"n={n} exceeds the exhaustive bound {limit} (set DDYCK_MAX_EXHAUSTIVE to raise it)"
        )


@dataclass(frozen=True)
class PathFilter:
    """Conjunction of path predicates.

    ``last_valley`` is the set of allowed last-valley levels, with ``None``
    standing for "no valley at all".  So ``{0}`` selects paths whose last
    valley is on the ground and ``{None, 0}`` additionally admits pyramids.
    ``avoid`` rejects paths containing the given factor.
    """

    d: DParam = UNRESTRICTED
    peak_count: Optional[int] = None
    last_valley: Optional[frozenset] = None
    avoid: Optional[str] = None

    def __post_init__(self) -> None:
        if self.avoid is not None and set(self.avoid) - {"U", "D"}:
            raise ValueError(f"avoided factor {self.avoid!r} must be a U/D word")

    def __call__(self, p: Path) -> bool:
        if self.peak_count is not None and peaks(p) != self.peak_count:
            return False
        if self.avoid is not None and self.avoid in p.steps:
            return False
        if self.last_valley is not None and last_valley_level(p) not in self.last_valley:
            return False
        return is_d_dyck(p, self.d)

    @classmethod
    def q_paths(cls) -> "PathFilter":
        """(-1)-Dyck paths with a valley, the last one on the ground."""
        return cls(d=-1, last_valley=frozenset({0}))

    @classmethod
    def b_paths(cls) -> "PathFilter":
        """(-1)-Dyck paths with no valley or the last valley on the ground."""
        return cls(d=-1, last_valley=frozenset({None, 0}))

    @classmethod
    def low_last_valley(cls, e: int) -> "PathFilter":
        """(-e)-Dyck paths with no valley or the last valley below level e."""
        return cls(d=-e, last_valley=frozenset({None, *range(e)}))


def gen_dyck(n: int) -> Iterator[Path]:
    """Yield every Dyck path of semi-length ``n`` in lexicographic order (U < D)."""
    if n < 0:
        raise ValueError("semi-length must be nonnegative")
    if n == 0:
        yield Path._trusted("")
        return
    # Explicit stack of (prefix, ups, downs); D pushed first so U pops first.
    stack = [("", 0, 0)]
    pop, push = stack.pop, stack.append
    while stack:
        s, u, d = pop()
        if u == n:
            yield Path._trusted(s + "D" * (n - d))
            continue
        if d < u:
            push((s + "D", u, d + 1))
        push((s + "U", u + 1, d))


def iter_filtered(n: int, f: Optional[PathFilter] = None) -> Iterator[Path]:
    for p in gen_dyck(n):
        if f is None or f(p):
            yield p


def count_filtered(n: int, f: Optional[PathFilter] = None, *, bound: Optional[int] = None) -> int:
    _check_bound(n, bound)
    return sum(1 for _ in iter_filtered(n, f))


def count_Q(n: int, *, bound: Optional[int] = None) -> int:
    return count_filtered(n, PathFilter.q_paths(), bound=bound)


def count_B(n: int, *, bound: Optional[int] = None) -> int:
    return count_filtered(n, PathFilter.b_paths(), bound=bound)


def total_area(n: int, f: Optional[PathFilter] = None, *, bound: Optional[int] = None) -> int:
    _check_bound(n, bound)
    return sum(area(p) for p in iter_filtered(n, f))


_STATS = {"peaks": peaks, "area": area}


def statistic_distribution(
    n: int, f: Optional[PathFilter] = None, stat: str = "peaks", *, bound: Optional[int] = None
) -> dict[int, int]:
    """Histogram ``{value: count}`` of ``stat`` over the matching paths, keys sorted."""
    try:
        fn = _STATS[stat]
    except KeyError:
        raise ValueError(f"unknown statistic {stat!r}; expected one of {sorted(_STATS)}") from None
    _check_bound(n, bound)
    hist = Counter(fn(p) for p in iter_filtered(n, f))
    return dict(sorted(hist.items()))
