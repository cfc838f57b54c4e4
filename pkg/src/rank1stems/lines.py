"""Graded dimensions built from arithmetic-progression lines.

A :class:`LineSet` describes a function from integer degrees to
:data:`ExtendedNat` (a non-negative int or :data:`INF`).  Each line is either a
single spot (step 0) or a progression ``start, start+step, ...`` bounded
below, with finite or countably infinite multiplicity.  Corrections subtract
finite amounts at single degrees (the diagonal classes).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Union

from .groups import Subgroup


class InvariantError(RuntimeError):
    """A computed answer violated a structural invariant."""


class CountablyInfinite:
    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __add__(self, other):
        if isinstance(other, (int, CountablyInfinite)):
            return self
        return NotImplemented

    __radd__ = __add__

    def __sub__(self, other):
        if isinstance(other, int):
            return self
        return NotImplemented

    def __repr__(self) -> str:
        return "INF"

    def __str__(self) -> str:
        return "inf"

    def __reduce__(self):
        return (CountablyInfinite, ())


INF = CountablyInfinite()
ExtendedNat = Union[int, CountablyInfinite]


def is_inf(x: ExtendedNat) -> bool:
    return x is INF


def ext_sub(x: ExtendedNat, n: int) -> ExtendedNat:
    if x is INF:
        return INF
    if n > x:
        raise InvariantError(f"subtracting {n} from {x} leaves a negative dimension")
    return x - n


GENERIC = "generic"
SECTIONS = "sections"

Label = Union[Subgroup, str, None]


@dataclass(frozen=True)
class Line:
    start: int
    step: int
    mult: ExtendedNat
    label: Label = None

    def __post_init__(self):
        if self.step not in (0, 2, 4):
            raise ValueError(f"line step must be 0, 2 or 4, not {self.step}")
        if self.mult is not INF and (not isinstance(self.mult, int) or self.mult <= 0):
            raise ValueError("line multiplicity must be positive or INF")

    def covers(self, k: int) -> bool:
        if self.step == 0:
            return k == self.start
        return k >= self.start and (k - self.start) % self.step == 0

    def shifted(self, d: int) -> Line:
        return Line(self.start + d, self.step, self.mult, self.label)


def spot(degree: int, mult: ExtendedNat = 1, label: Label = None) -> Line:
    return Line(degree, 0, mult, label)


@dataclass(frozen=True)
class LineSet:
    lines: tuple[Line, ...] = ()
    corrections: tuple[tuple[int, int], ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "lines", tuple(self.lines))
        object.__setattr__(self, "corrections", tuple((int(k), int(a)) for k, a in self.corrections))
        for k, amount in self.corrections:
            if amount <= 0:
                raise ValueError("correction amounts must be positive")
            if any(ln.mult is INF and ln.covers(k) for ln in self.lines):
                raise InvariantError(f"correction at degree {k} hits an infinite line")
        for k, _ in self.corrections:
            self.query(k)

    def query(self, k: int) -> ExtendedNat:
        total: ExtendedNat = sum((ln.mult for ln in self.lines if ln.covers(k)), 0)
        for deg, amount in self.corrections:
            if deg == k:
                total = ext_sub(total, amount)
        return total

    __getitem__ = query

    def __add__(self, other: LineSet) -> LineSet:
        return LineSet(self.lines + other.lines, self.corrections + other.corrections)

    def shift(self, d: int) -> LineSet:
        return LineSet(tuple(ln.shifted(d) for ln in self.lines), tuple((k + d, a) for k, a in self.corrections))

    def window(self, a: int, b: int) -> dict[int, ExtendedNat]:
        return {k: self.query(k) for k in range(a, b + 1)}

    def min_nonzero_degree(self) -> int | None:
        if not self.lines:
            return None
        lo = min(ln.start for ln in self.lines)
        hi = max([ln.start for ln in self.lines] + [k for k, _ in self.corrections]) + 4
        for k in range(lo, hi + 1):
            if self.query(k) != 0:
                return k
        return None

    def infinite_lines(self) -> list[Line]:
        return [ln for ln in self.lines if ln.mult is INF]

    def __bool__(self) -> bool:
        return bool(self.lines)


def sum_linesets(*parts: LineSet) -> LineSet:
    out = LineSet()
    for p in parts:
        out = out + p
    return out
