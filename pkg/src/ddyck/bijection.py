"""Bijective encoding of (-1)-Dyck paths.

An :class:`Encoding` is a tuple of component paths ``P_1..P_i`` (each empty,
a pyramid, or a (-1)-Dyck path whose last valley is on the ground) together
with a composition ``C_1..C_{i+1}`` into positive parts.  :func:`phi` glues
them into the path

    U^C_1 M_1 U^C_2 M_2 ... U^C_i M_i U^C_{i+1} D^h

where ``M_j`` is ``D^C_j`` for an empty component, the pyramid itself for a
pyramid, and ``P_j D`` otherwise, and the final descent returns to the axis.
Every ``P_j D`` block ends in a (-1)-valley, which is how
:func:`phi_inverse` finds the blocks again: it strips them off right to
left at the rightmost remaining (-1)-valley and reads the increasing pieces
in between one peak at a time.

>>> enc = phi_inverse(parse_path("UUDUDDUD"))
>>> enc.flat()
(1, 'UDUD', 1)
>>> str(phi(enc))
'UUDUDDUD'
"""
from __future__ import annotations

import json
from dataclasses import dataclass
from itertools import combinations
from typing import Iterator, Sequence

from .enumeration import PathFilter, iter_filtered
from .paths import Path, is_d_dyck, parse_path, valley_vector

__all__ = [
    "MalformedEncoding",
    "NotMinusOneDyck",
    "Encoding",
    "phi",
    "phi_inverse",
    "minus1_valley_positions",
    "component_kind",
    "iter_encodings",
]


class MalformedEncoding(ValueError):
    pass


class NotMinusOneDyck(ValueError):
    pass


EMPTY, PYRAMID, GROUNDED = "empty", "pyramid", "grounded"


def component_kind(p: Path) -> str:
    """Classify a component as ``"empty"``, ``"pyramid"`` or ``"grounded"``.

    Raises :class:`MalformedEncoding` for paths outside the allowed set.
    """
    if not p.steps:
        return EMPTY
    nu = valley_vector(p)
    if not nu:
        return PYRAMID
    if nu[-1] != 0 or not is_d_dyck(p, -1):
        raise MalformedEncoding(f"component {p} is not a ground-last-valley (-1)-Dyck path")
    return GROUNDED


@dataclass(frozen=True)
class Encoding:
    components: tuple[Path, ...]
    exponents: tuple[int, ...]

    def __post_init__(self) -> None:
        if len(self.exponents) != len(self.components) + 1:
            raise MalformedEncoding("need exactly one more exponent than components")
        if any(not isinstance(c, int) or c < 1 for c in self.exponents):
            raise MalformedEncoding("exponents must be positive integers")
        for p in self.components:
            component_kind(p)

    @property
    def semi_length(self) -> int:
        return sum(self.exponents) + sum(p.semi_length for p in self.components)

    def flat(self) -> tuple:
        """Interleaved form ``(C_1, P_1, C_2, ..., P_i, C_{i+1})``, components as strings."""
        out: list = []
        for c, p in zip(self.exponents, self.components):
            out += [c, p.steps]
        out.append(self.exponents[-1])
        return tuple(out)

    def to_json(self) -> str:
        return json.dumps({"components": [p.steps for p in self.components], "exponents": list(self.exponents)})

    @classmethod
    def from_json(cls, text: str) -> "Encoding":
        try:
            data = json.loads(text)
            comps, exps = data["components"], data["exponents"]
        except (ValueError, KeyError, TypeError) as exc:
            raise MalformedEncoding(f"bad encoding JSON: {exc}") from None
        return cls(tuple(parse_path(s) for s in comps), tuple(exps))

    @classmethod
    def of(cls, components: Sequence, exponents: Sequence[int]) -> "Encoding":
        comps = tuple(p if isinstance(p, Path) else parse_path(p) for p in components)
        return cls(comps, tuple(exponents))


def phi(enc: Encoding) -> Path:
    steps: list[str] = []
    h = 0
    for c, p in zip(enc.exponents, enc.components):
        steps.append("U" * c)
        kind = component_kind(p)
        if kind == EMPTY:
            steps.append("D" * c)
        elif kind == PYRAMID:
            steps.append(p.steps)
            h += c
        else:
            steps.append(p.steps + "D")
            h += c - 1
    c = enc.exponents[-1]
    steps.append("U" * c + "D" * (h + c))
    return Path("".join(steps))


def minus1_valley_positions(p: Path) -> list[int]:
    """Point indices of the valleys sitting exactly one below the previous valley."""
    pts, nu = p.valley_points, valley_vector(p)
    return [pts[k] for k in range(1, len(nu)) if nu[k] - nu[k - 1] == -1]


def _increasing_blocks(p: Path, start: int, end: int, closing: bool) -> list[tuple[int, Path]]:
    """Read the peaks between points ``start`` and ``end`` as empty/pyramid blocks.

    With ``closing`` the last peak is the final descent to the axis and is
    returned as ``(C, None)``.
    """
    s, h = p.steps, p.heights
    blocks: list = []
    i = start
    while i < end:
        base = h[i]
        j = i
        while j < end and s[j] == "U":
            j += 1
        k = j
        while k < end and s[k] == "D":
            k += 1
        up, down = j - i, k - j
        if closing and k == end:
            blocks.append((up, None))
        elif down == up:
            blocks.append((up, Path._trusted("")))
        elif down < up:
            blocks.append((up - down, Path._trusted("U" * down + "D" * down)))
        else:
            raise NotMinusOneDyck(f"valley at point {k} drops below {base} without a (-1)-valley")
        i = k
    return blocks


def phi_inverse(p: Path) -> Encoding:
    if not is_d_dyck(p, -1):
        raise NotMinusOneDyck(f"{p} is not a (-1)-Dyck path")
    if not p.steps:
        raise NotMinusOneDyck("the empty path has no encoding")
    h = p.heights
    marks = minus1_valley_positions(p)
    blocks: list = []
    end = len(p.steps)
    closing = True
    while True:
        while marks and marks[-1] > end:
            marks.pop()
        if not marks:
            blocks[:0] = _increasing_blocks(p, 0, end, closing)
            break
        v = marks.pop()
        blocks[:0] = _increasing_blocks(p, v, end, closing)
        closing = False
        # v - 1 is the top of the red down step; the component is the
        # longest Dyck factor at that level ending there.
        top = h[v - 1]
        s = v - 1
        while s > 0 and h[s - 1] >= top:
            s -= 1
        while h[s] != top:
            s += 1
        t = s
        while t > 0 and p.steps[t - 1] == "U":
            t -= 1
        blocks.insert(0, (s - t, Path._trusted(p.steps[s : v - 1])))
        end = t
    exps = tuple(c for c, _ in blocks)
    comps = tuple(q for _, q in blocks[:-1])
    return Encoding(comps, exps)


def _compositions(total: int, parts: int) -> Iterator[tuple[int, ...]]:
    if parts == 0:
        if total == 0:
            yield ()
        return
    for cuts in combinations(range(1, total), parts - 1):
        edges = (0, *cuts, total)
        yield tuple(b - a for a, b in zip(edges, edges[1:]))


def _component_tuples(i: int, total: int, pool: list[list[Path]]) -> Iterator[tuple[Path, ...]]:
    if i == 0:
        if total == 0:
            yield ()
        return
    for m in range(total + 1):
        for p in pool[m]:
            for rest in _component_tuples(i - 1, total - m, pool):
                yield (p, *rest)


def iter_encodings(n: int) -> Iterator[Encoding]:
    """Every well-formed encoding of total semi-length ``n`` (the domain of :func:`phi`)."""
    pool = [list(iter_filtered(m, PathFilter.b_paths())) for m in range(n + 1)]
    for ell in range(n):
        for i in range(n - ell):
            for comps in _component_tuples(i, ell, pool):
                for exps in _compositions(n - ell, i + 1):
                    yield Encoding(comps, exps)
