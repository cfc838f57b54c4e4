"""Fixed-point dimensions of W(2i+1) on the finite rotation groups.

Everything is exact: characters are sums of roots of unity held as
:class:`CyclotomicInt`, and class averages are reduced modulo the cyclotomic
polynomial before being read off as integers.

The class tables list rotations by angle ``2*pi*k/n`` with their class sizes.
They come from the axis census of the polyhedral groups: e.g. the
octahedral group S4 has 6 quarter turns about the coordinate axes, 3 half
turns about the same axes, 8 third turns about the body diagonals and 6 half
turns about the edge midpoints.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from math import gcd

from .groups import EXCEPTIONAL, TILDE_OF, GroupId, RepError, VirtualRep


def _divisors(n: int) -> list[int]:
    return [d for d in range(1, n + 1) if n % d == 0]


def _poly_divmod(num: list[int], den: tuple[int, ...]) -> tuple[list[int], list[int]]:
    # coefficients low -> high; den is monic
    num = list(num)
    dd = len(den) - 1
    if len(num) - 1 < dd:
        return [0], num
    quot = [0] * (len(num) - dd)
    for i in range(len(num) - 1, dd - 1, -1):
        c = num[i]
        if c:
            quot[i - dd] = c
            for j, dc in enumerate(den):
                num[i - dd + j] -= c * dc
    return quot, num[:dd] or [0]


@lru_cache(maxsize=None)
def cyclotomic_poly(n: int) -> tuple[int, ...]:
    """Integer coefficients (low -> high) of the n-th cyclotomic polynomial."""
    poly = [-1] + [0] * (n - 1) + [1]
    for d in _divisors(n)[:-1]:
        poly, rem = _poly_divmod(poly, cyclotomic_poly(d))
        assert not any(rem)
    return tuple(poly)


@dataclass(frozen=True)
class CyclotomicInt:
    """Element of Z[zeta_N] as coefficients of zeta_N^0 .. zeta_N^(N-1)."""

    modulus: int
    coeffs: tuple[int, ...]

    def __post_init__(self):
        if self.modulus < 1 or len(self.coeffs) != self.modulus:
            raise ValueError("need exactly one coefficient per exponent 0..N-1")

    @classmethod
    def from_exponents(cls, modulus: int, exponents) -> CyclotomicInt:
        coeffs = [0] * modulus
        for e in exponents:
            coeffs[e % modulus] += 1
        return cls(modulus, tuple(coeffs))

    @classmethod
    def integer(cls, n: int, modulus: int = 1) -> CyclotomicInt:
        return cls(modulus, (n,) + (0,) * (modulus - 1))

    def lift(self, modulus: int) -> CyclotomicInt:
        if modulus % self.modulus:
            raise ValueError(f"cannot lift from zeta_{self.modulus} to zeta_{modulus}")
        k = modulus // self.modulus
        coeffs = [0] * modulus
        for e, c in enumerate(self.coeffs):
            coeffs[e * k] = c
        return CyclotomicInt(modulus, tuple(coeffs))

    def __add__(self, other: CyclotomicInt) -> CyclotomicInt:
        m = self.modulus * other.modulus // gcd(self.modulus, other.modulus)
        a, b = self.lift(m), other.lift(m)
        return CyclotomicInt(m, tuple(x + y for x, y in zip(a.coeffs, b.coeffs)))

    def __rmul__(self, k: int) -> CyclotomicInt:
        return CyclotomicInt(self.modulus, tuple(k * c for c in self.coeffs))

    def reduced(self) -> tuple[int, ...]:
        _, rem = _poly_divmod(list(self.coeffs), cyclotomic_poly(self.modulus))
        while len(rem) > 1 and rem[-1] == 0:
            rem.pop()
        return tuple(rem)

    def to_int(self) -> int:
        rem = self.reduced()
        if len(rem) != 1:
            raise ValueError(f"{self} is not a rational integer")
        return rem[0]

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            other = CyclotomicInt.integer(other)
        if not isinstance(other, CyclotomicInt):
            return NotImplemented
        m = self.modulus * other.modulus // gcd(self.modulus, other.modulus)
        diff = self.lift(m) + (-1) * other.lift(m)
        return not any(diff.reduced())

    def __hash__(self):
        return hash((self.modulus, self.reduced()))


def char_value(i: int, order: int, exponent: int) -> CyclotomicInt:
    """Trace of a rotation by 2*pi*exponent/order on W(2i+1): sum of zeta^(j*k), |j| <= i."""
    if order < 1 or i < 0:
        raise ValueError("need order >= 1 and i >= 0")
    return CyclotomicInt.from_exponents(order, (j * exponent for j in range(-i, i + 1)))


@dataclass(frozen=True)
class RotationClassTable:
    tag: str
    classes: tuple[tuple[int, int, int], ...]  # (size, order, exponent)

    def __post_init__(self):
        if not any(n == 1 for _, n, _ in self.classes):
            raise ValueError(f"{self.tag}: identity class missing")

    @property
    def order(self) -> int:
        return sum(size for size, _, _ in self.classes)


TABLES = {
    "KleinD4": RotationClassTable("KleinD4", ((1, 1, 0), (3, 2, 1))),
    "D8": RotationClassTable("D8", ((1, 1, 0), (2, 4, 1), (1, 2, 1), (4, 2, 1))),
    "A4": RotationClassTable("A4", ((1, 1, 0), (3, 2, 1), (8, 3, 1))),
    "S4": RotationClassTable("S4", ((1, 1, 0), (6, 4, 1), (3, 2, 1), (8, 3, 1), (6, 2, 1))),
    "A5": RotationClassTable("A5", ((1, 1, 0), (15, 2, 1), (20, 3, 1), (12, 5, 1), (12, 5, 2))),
}
_TABLE_ORDERS = {"KleinD4": 4, "D8": 8, "A4": 12, "S4": 24, "A5": 60}
assert all(TABLES[t].order == n for t, n in _TABLE_ORDERS.items())


def _rotations(n: int) -> tuple[tuple[int, int, int], ...]:
    # the n rotations about one axis, each written in lowest terms
    return tuple((1, n // gcd(k, n), k // gcd(k, n)) for k in range(n))


def cyclic_table(s: int) -> RotationClassTable:
    return RotationClassTable(f"C{s}", _rotations(s))


def dihedral_table(t: int) -> RotationClassTable:
    """D_{2t}: t rotations about the main axis plus t half turns about perpendicular axes."""
    return RotationClassTable(f"D{2 * t}", _rotations(t) + ((t, 2, 1),))


def _table(h) -> RotationClassTable:
    if isinstance(h, RotationClassTable):
        return h
    try:
        return TABLES[h]
    except KeyError:
        raise RepError(f"no class table for {h!r}") from None


def fixed_dim(i: int, h) -> int:
    """dim W(2i+1)^H by averaging the character over H."""
    table = _table(h)
    total = CyclotomicInt.integer(0)
    for size, n, k in table.classes:
        total = total + size * char_value(i, n, k)
    q, r = divmod(total.to_int(), table.order)
    if r or q < 0:
        raise AssertionError(f"class average for i={i} on {table.tag} is not a dimension")
    return q


def fixed_dim_virtual(rep: VirtualRep, h: str) -> int:
    """dim U^H for U over SO(3) (H an SO(3) tag or D8) or SU(2) (H a tilde tag).

    V(2i) has no fixed vectors on any binary polyhedral group since the
    central element acts by -1.
    """
    if rep.group == GroupId.SU2:
        if h not in TILDE_OF:
            raise RepError(f"{h!r} is not an isolated subgroup of SU(2)")
        h = TILDE_OF[h]
    elif rep.group != GroupId.SO3:
        raise RepError(f"isolated subgroups live in SO(3) or SU(2), not {rep.group.name}")
    if h == "SO3":
        return rep.trivial
    total = rep.trivial
    for irr, m in rep.terms:
        if irr.kind == "W":
            total += m * fixed_dim(irr.half, h)
    return total


_WEYL_PROBE = {"A4": ("A4", "S4"), "KleinD4": ("KleinD4", "D8")}


def weyl_det_trivial(rep: VirtualRep, h: str) -> bool:
    """Whether the Weyl group of H acts trivially on the top homology of S^(U^H).

    A4 has Weyl group C2 = S4/A4, whose generator has +1-eigenspace U^S4.
    KleinD4 has Weyl group S3 = S4/D4; 3-cycles have determinant +1 and a
    transposition lifts into D8, so its +1-eigenspace is U^D8.
    """
    base = TILDE_OF.get(h, h)
    if base not in _WEYL_PROBE:
        raise RepError(f"{h!r} has trivial Weyl group")
    small, big = _WEYL_PROBE[base]
    if rep.group == GroupId.SU2:
        rep = VirtualRep(GroupId.SO3, tuple((irr, m) for irr, m in rep.terms if irr.kind == "W"), rep.trivial)
    elif rep.group != GroupId.SO3:
        raise RepError(f"isolated subgroups live in SO(3) or SU(2), not {rep.group.name}")
    return (fixed_dim_virtual(rep, small) - fixed_dim_virtual(rep, big)) % 2 == 0


__all__ = [
    "CyclotomicInt",
    "EXCEPTIONAL",
    "RotationClassTable",
    "TABLES",
    "char_value",
    "cyclic_table",
    "cyclotomic_poly",
    "dihedral_table",
    "fixed_dim",
    "fixed_dim_virtual",
    "weyl_det_trivial",
]
