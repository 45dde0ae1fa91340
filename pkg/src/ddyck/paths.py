"""Dyck paths and their pointwise statistics.

A path is stored as a string over ``U``/``D``.  Construction validates the
Dyck conditions, so every :class:`Path` in circulation is a genuine Dyck
path (possibly empty).

>>> p = parse_path("UUUDUDDDUD")
>>> p.semi_length, valley_vector(p), area(p)
(5, (2, 0), 15)
>>> is_d_dyck(p, -1)
False
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from functools import cached_property
from typing import Optional, Union

__all__ = [
    "UNRESTRICTED",
    "PathError",
    "BadToken",
    "BelowAxis",
    "Unbalanced",
    "Path",
    "parse_path",
    "pyramid",
    "valley_vector",
    "is_d_dyck",
    "peaks",
    "valleys",
    "area",
    "last_valley_level",
]

#: The d = -infinity restriction: every Dyck path qualifies.
UNRESTRICTED = -math.inf

DParam = Union[int, float]

_ALIASES = {"U": "U", "D": "D", "X": "U", "Y": "D"}


class PathError(ValueError):
    """Base class for rejected path text."""


class BadToken(PathError):
    pass


class BelowAxis(PathError):
    pass


class Unbalanced(PathError):
    pass


@dataclass(frozen=True)
class Path:
    """An immutable Dyck path.

    ``steps`` is a string over ``"U"`` and ``"D"``.  Use :func:`parse_path`
    to build one from user text (it accepts aliases and lower case).
    """

    steps: str = ""

    def __post_init__(self) -> None:
        h = 0
        for i, c in enumerate(self.steps):
            if c == "U":
                h += 1
            elif c == "D":
                h -= 1
                if h < 0:
                    raise BelowAxis(f"prefix {self.steps[:i + 1]!r} goes below the axis")
            else:
                raise BadToken(f"invalid step {c!r} at position {i}")
        if h != 0:
            raise Unbalanced(f"path ends at height {h}, not on the axis")

    @classmethod
    def _trusted(cls, steps: str) -> "Path":
        # Skips validation; only for generators that build Dyck words by construction.
        p = object.__new__(cls)
        object.__setattr__(p, "steps", steps)
        return p

    def __str__(self) -> str:
        return self.steps

    def __len__(self) -> int:
        return len(self.steps)

    def __add__(self, other: "Path") -> "Path":
        if not isinstance(other, Path):
            return NotImplemented
        return Path._trusted(self.steps + other.steps)

    @property
    def semi_length(self) -> int:
        return len(self.steps) // 2

    @cached_property
    def heights(self) -> tuple[int, ...]:
        """Heights of the 2n+1 lattice points, left to right."""
        h = 0
        out = [0]
        for c in self.steps:
            h += 1 if c == "U" else -1
            out.append(h)
        return tuple(out)

    @cached_property
    def valley_points(self) -> tuple[int, ...]:
        """Point indices of the valley vertices (the vertex between D and U)."""
        s = self.steps
        return tuple(i for i in range(1, len(s)) if s[i - 1] == "D" and s[i] == "U")

    def render(self) -> str:
        return self.steps


def parse_path(text: str) -> Path:
    """Parse ``U``/``D`` text (``X``/``Y`` accepted as aliases, any case)."""
    out = []
    for i, c in enumerate(text.strip().upper()):
        try:
            out.append(_ALIASES[c])
        except KeyError:
            raise BadToken(f"invalid token {c!r} at position {i}") from None
    return Path("".join(out))


def pyramid(a: int) -> Path:
    """The pyramid U^a D^a."""
    if a < 0:
        raise ValueError("pyramid height must be nonnegative")
    return Path._trusted("U" * a + "D" * a)


def valley_vector(p: Path) -> tuple[int, ...]:
    """Levels of the valley vertices, left to right."""
    h = p.heights
    return tuple(h[i] for i in p.valley_points)


def valleys(p: Path) -> int:
    return len(p.valley_points)


def is_d_dyck(p: Path, d: DParam) -> bool:
    """True when ``p`` has at most one valley or consecutive valley levels
    never drop by more than ``-d``.  ``d = UNRESTRICTED`` accepts everything."""
    if d == UNRESTRICTED:
        return True
    nu = valley_vector(p)
    return all(b - a >= d for a, b in zip(nu, nu[1:]))


def peaks(p: Path) -> int:
    s = p.steps
    return sum(1 for i in range(1, len(s)) if s[i - 1] == "U" and s[i] == "D")


def area(p: Path) -> int:
    """Sum of the heights of all 2n+1 points of the path."""
    return sum(p.heights)


def last_valley_level(p: Path) -> Optional[int]:
    pts = p.valley_points
    if not pts:
        return None
    return p.heights[pts[-1]]
