"""Groups, irreducible catalogs, virtual representations and fixed-point dimensions.

The six groups are the circles SO(2) and Spin(2), their normalizers O(2) and
Pin(2), and SO(3), SU(2).  Every real representation is tracked by its
restriction to the maximal torus (a multiset of non-negative weights); that
restriction is the single source of truth for cyclic fixed-point dimensions.

Irreducible labels:

=========  ==============================  ===========================
group      irreducibles                    torus weights
=========  ==============================  ===========================
SO2/SPIN2  z(n), n >= 1                    pair n
O2         delta, sigma(n)                 delta: 0, sigma(n): pair n
PIN2       delta, sigma(n), h(m), m odd    sigma(n): pair 2n, h(m): 2x pair m
SO3        W(2i+1), i >= 1                 0, pairs 1..i
SU2        W(2i+1), V(2i), i >= 1          W: 0, pairs 2,4..2i; V: 2x pairs 1,3..2i-1
=========  ==============================  ===========================

W and V carry their real/complex *dimension* as label, so ``W(5)`` is the
5-dimensional irreducible of SO(3) (highest weight i = 2).
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from enum import Enum
from typing import Iterable, Mapping


class RepError(ValueError):
    """An irreducible or virtual representation is not valid for its group."""


class GroupId(str, Enum):
    SO2 = "so2"
    SPIN2 = "spin2"
    O2 = "o2"
    SO3 = "so3"
    PIN2 = "pin2"
    SU2 = "su2"

    @property
    def is_torus(self) -> bool:
        return self in (GroupId.SO2, GroupId.SPIN2)

    def __str__(self) -> str:
        return self.value


_KIND_ORDER = {"delta": 0, "sigma": 1, "h": 2, "z": 3, "W": 4, "V": 5}

_CATALOG = {
    GroupId.SO2: {"z"},
    GroupId.SPIN2: {"z"},
    GroupId.O2: {"delta", "sigma"},
    GroupId.PIN2: {"delta", "sigma", "h"},
    GroupId.SO3: {"W"},
    GroupId.SU2: {"W", "V"},
}


@dataclass(frozen=True, order=False)
class Irreducible:
    kind: str
    index: int | None = None

    def __post_init__(self):
        if self.kind not in _KIND_ORDER:
            raise RepError(f"unknown irreducible kind {self.kind!r}")
        if self.kind == "delta":
            if self.index is not None:
                raise RepError("delta takes no index")
            return
        n = self.index
        if not isinstance(n, int) or isinstance(n, bool):
            raise RepError(f"{self.kind} needs an integer index")
        if self.kind in ("z", "sigma") and n < 1:
            raise RepError(f"{self.kind}({n}): index must be >= 1")
        if self.kind == "h" and (n < 1 or n % 2 == 0):
            raise RepError(f"h({n}): index must be odd and >= 1")
        if self.kind == "W" and (n < 3 or n % 2 == 0):
            raise RepError(f"W({n}): dimension must be odd and >= 3")
        if self.kind == "V" and (n < 2 or n % 2 == 1):
            raise RepError(f"V({n}): dimension must be even and >= 2")

    @property
    def half(self) -> int:
        """Highest-weight index i of W(2i+1) or V(2i)."""
        if self.kind not in ("W", "V"):
            raise AttributeError("half is only defined for W and V")
        return self.index // 2

    def sort_key(self):
        return (_KIND_ORDER[self.kind], self.index or 0)

    def __str__(self) -> str:
        return "delta" if self.kind == "delta" else f"{self.kind}({self.index})"


delta = Irreducible("delta")


def z(n: int) -> Irreducible:
    return Irreducible("z", n)


def sigma(n: int) -> Irreducible:
    return Irreducible("sigma", n)


def h(m: int) -> Irreducible:
    return Irreducible("h", m)


def W(dim: int) -> Irreducible:
    return Irreducible("W", dim)


def V(dim: int) -> Irreducible:
    return Irreducible("V", dim)


def in_catalog(group: GroupId, irr: Irreducible) -> bool:
    return irr.kind in _CATALOG[GroupId(group)]


@dataclass(frozen=True)
class VirtualRep:
    """Integer combination of irreducibles of one group.

    ``trivial`` is the multiplicity of the trivial representation.  It is 0
    for every representation a user can build (``U^G = 0``); restriction from
    SO(3)/SU(2) is the only operation that produces a nonzero value, since
    ``W(2i+1)`` restricts with a trivial summand when i is even.
    """

    group: GroupId
    terms: tuple[tuple[Irreducible, int], ...] = ()
    trivial: int = 0

    def __post_init__(self):
        group = GroupId(self.group)
        acc: Counter = Counter()
        for irr, m in self.terms:
            if not in_catalog(group, irr):
                raise RepError(f"{irr} is not an irreducible of {group.name}")
            acc[irr] += int(m)
        canon = tuple(sorted(((k, v) for k, v in acc.items() if v), key=lambda kv: kv[0].sort_key()))
        object.__setattr__(self, "group", group)
        object.__setattr__(self, "terms", canon)

    @classmethod
    def of(cls, group: GroupId | str, mults: Mapping[Irreducible, int] | None = None, trivial: int = 0) -> VirtualRep:
        return cls(GroupId(group), tuple((mults or {}).items()), trivial)

    @classmethod
    def zero(cls, group: GroupId | str) -> VirtualRep:
        return cls(GroupId(group))

    @property
    def mults(self) -> dict[Irreducible, int]:
        return dict(self.terms)

    def mult(self, irr: Irreducible) -> int:
        return self.mults.get(irr, 0)

    def is_zero(self) -> bool:
        return not self.terms and self.trivial == 0

    def without_trivial(self) -> VirtualRep:
        return VirtualRep(self.group, self.terms)

    def _check(self, other: VirtualRep) -> None:
        if not isinstance(other, VirtualRep) or other.group != self.group:
            raise RepError("cannot combine representations of different groups")

    def __add__(self, other: VirtualRep) -> VirtualRep:
        self._check(other)
        return VirtualRep(self.group, self.terms + other.terms, self.trivial + other.trivial)

    def __neg__(self) -> VirtualRep:
        return VirtualRep(self.group, tuple((k, -v) for k, v in self.terms), -self.trivial)

    def __sub__(self, other: VirtualRep) -> VirtualRep:
        return self + (-other)

    def __rmul__(self, k: int) -> VirtualRep:
        return VirtualRep(self.group, tuple((irr, k * v) for irr, v in self.terms), k * self.trivial)

    __mul__ = __rmul__

    def __str__(self) -> str:
        return render_rep(self)


def render_rep(rep: VirtualRep) -> str:
    """Canonical text form, accepted back by the CLI parser."""
    parts = []
    if rep.trivial:
        parts.append((rep.trivial, "1"))
    parts.extend((m, str(irr)) for irr, m in rep.terms)
    if not parts:
        return "0"
    out = []
    for i, (m, tok) in enumerate(parts):
        sign = "-" if m < 0 else "+"
        body = tok if abs(m) == 1 else f"{abs(m)}*{tok}"
        if i == 0:
            out.append(body if m > 0 else f"-{body}")
        else:
            out.append(f" {sign} {body}")
    return "".join(out)


@dataclass(frozen=True)
class WeightMultiset:
    """Restriction to the maximal torus as real summands.

    ``zero`` counts the weight-0 lines, ``pairs`` the 2-dimensional real
    summands of each positive weight.
    """

    zero: int = 0
    pairs: tuple[tuple[int, int], ...] = ()

    def __post_init__(self):
        acc: Counter = Counter()
        for w, m in self.pairs:
            if w <= 0:
                raise ValueError("pair weights must be positive")
            acc[w] += m
        object.__setattr__(self, "pairs", tuple(sorted((w, m) for w, m in acc.items() if m)))

    @classmethod
    def build(cls, zero: int, pairs: Mapping[int, int] | Iterable[tuple[int, int]]) -> WeightMultiset:
        items = pairs.items() if isinstance(pairs, Mapping) else pairs
        return cls(zero, tuple(items))

    def pair(self, w: int) -> int:
        return dict(self.pairs).get(w, 0)

    @property
    def real_dim(self) -> int:
        return self.zero + 2 * sum(m for _, m in self.pairs)

    @property
    def max_weight(self) -> int:
        return max((w for w, _ in self.pairs), default=0)

    def __add__(self, other: WeightMultiset) -> WeightMultiset:
        return WeightMultiset(self.zero + other.zero, self.pairs + other.pairs)


def _irreducible_weights(group: GroupId, irr: Irreducible) -> tuple[int, dict[int, int]]:
    kind, n = irr.kind, irr.index
    if kind == "z":
        return 0, {n: 1}
    if kind == "delta":
        return 1, {}
    if kind == "sigma":
        # Pin(2) sees sigma(n) through the degree-2 cover Spin(2) -> SO(2)
        return 0, {2 * n if group == GroupId.PIN2 else n: 1}
    if kind == "h":
        return 0, {n: 2}
    if kind == "W":
        i = irr.half
        step = 2 if group == GroupId.SU2 else 1
        return 1, {step * j: 1 for j in range(1, i + 1)}
    if kind == "V":
        # complex weights +-1, +-3, ..., +-(2i-1); each +-w pair gives two real planes of weight w
        return 0, {2 * j - 1: 2 for j in range(1, irr.half + 1)}
    raise RepError(f"no weights for {irr}")


def restrict_to_torus(rep: VirtualRep) -> WeightMultiset:
    zero = rep.trivial
    pairs: Counter = Counter()
    for irr, m in rep.terms:
        z0, ps = _irreducible_weights(rep.group, irr)
        zero += m * z0
        for w, k in ps.items():
            pairs[w] += m * k
    return WeightMultiset.build(zero, pairs)


_RESTRICTIONS = {(GroupId.SO3, GroupId.O2), (GroupId.SU2, GroupId.PIN2)}


def restrict(rep: VirtualRep, target: GroupId | str) -> VirtualRep:
    """Restrict from SO(3) to O(2), or from SU(2) to Pin(2).

    ``W(2i+1) -> delta^i + sigma(1) + ... + sigma(i)``, where ``delta^i`` is
    the trivial representation for even i and lands in ``trivial``.
    ``V(2i) -> h(1) + h(3) + ... + h(2i-1)``.
    """
    target = GroupId(target)
    if (rep.group, target) not in _RESTRICTIONS:
        raise RepError(f"no restriction rule from {rep.group.name} to {target.name}")
    terms: list[tuple[Irreducible, int]] = []
    trivial = rep.trivial
    for irr, m in rep.terms:
        i = irr.half
        if irr.kind == "W":
            if i % 2:
                terms.append((delta, m))
            else:
                trivial += m
            terms.extend((sigma(j), m) for j in range(1, i + 1))
        else:
            terms.extend((h(2 * j - 1), m) for j in range(1, i + 1))
    return VirtualRep(target, tuple(terms), trivial)


def dim_cyclic(rep: VirtualRep, s: int) -> int:
    """Real dimension of the fixed points of the cyclic subgroup of order s of the torus."""
    if s < 1:
        raise ValueError("s must be >= 1")
    wm = restrict_to_torus(rep)
    return wm.zero + 2 * sum(m for w, m in wm.pairs if w % s == 0)


@dataclass(frozen=True)
class DimFunction:
    """Eventually constant integer function on s = 1, 2, 3, ..."""

    exceptions: tuple[tuple[int, int], ...] = ()
    tail: int = 0

    def __post_init__(self):
        ex = tuple(sorted((s, v) for s, v in dict(self.exceptions).items() if v != self.tail))
        if any(s < 1 for s, _ in ex):
            raise ValueError("dimension functions are indexed by s >= 1")
        object.__setattr__(self, "exceptions", ex)

    @classmethod
    def build(cls, values: Mapping[int, int], tail: int) -> DimFunction:
        return cls(tuple(values.items()), tail)

    def __call__(self, s: int) -> int:
        return dict(self.exceptions).get(s, self.tail)

    value = __call__

    @property
    def exception_table(self) -> dict[int, int]:
        return dict(self.exceptions)

    def values(self) -> list[int]:
        return [v for _, v in self.exceptions] + [self.tail]

    def range(self) -> tuple[int, int]:
        vals = self.values()
        return min(vals), max(vals)

    def minimum(self) -> int:
        return min(self.values())

    def shifted(self, k: int) -> DimFunction:
        return DimFunction(tuple((s, v + k) for s, v in self.exceptions), self.tail + k)


def dim_function_cyclic(rep: VirtualRep) -> DimFunction:
    wm = restrict_to_torus(rep)
    values = {s: dim_cyclic(rep, s) for s in range(1, wm.max_weight + 1)}
    return DimFunction.build(values, wm.zero)


def dim_dihedral(rep: VirtualRep, t: int) -> int:
    """Real dimension of the fixed points of D_{2t} (O(2), SO(3)) or Q_{4t} (Pin(2), SU(2))."""
    if t < 1:
        raise ValueError("t must be >= 1")
    if rep.group in (GroupId.SO3, GroupId.SU2):
        return dim_dihedral(restrict(rep, GroupId.O2 if rep.group == GroupId.SO3 else GroupId.PIN2), t)
    if rep.group not in (GroupId.O2, GroupId.PIN2):
        raise RepError(f"{rep.group.name} has no dihedral or quaternion block")
    # sigma(n)^{D_2t} is a line iff t | n; delta and h(m) have no dihedral fixed points
    return rep.trivial + sum(m for irr, m in rep.terms if irr.kind == "sigma" and irr.index % t == 0)


def dihedral_sign(rep: VirtualRep, t: int) -> int:
    """Parity (0 even, 1 odd) of the Weyl sign on the D_{2t}/Q_{4t} fixed sphere."""
    if t < 1:
        raise ValueError("t must be >= 1")
    if rep.group in (GroupId.SO3, GroupId.SU2):
        return dihedral_sign(restrict(rep, GroupId.O2 if rep.group == GroupId.SO3 else GroupId.PIN2), t)
    if rep.group not in (GroupId.O2, GroupId.PIN2):
        raise RepError(f"{rep.group.name} has no dihedral or quaternion block")
    total = sum(
        m for irr, m in rep.terms if irr.kind == "sigma" and irr.index % t == 0 and irr.index % (2 * t) != 0
    )
    return total % 2


def b_of(rep: VirtualRep) -> int:
    """Multiplicity of delta."""
    if rep.group not in (GroupId.O2, GroupId.PIN2):
        raise RepError(f"b is only defined over O(2) and Pin(2), not {rep.group.name}")
    return rep.mult(delta)


# -- subgroups ---------------------------------------------------------------

EXCEPTIONAL = ("SO3", "A5", "S4", "A4", "KleinD4")
EXCEPTIONAL_TILDE = ("SU2", "BinI", "BinO", "BinT", "Q8")
TILDE_OF = dict(zip(EXCEPTIONAL_TILDE, EXCEPTIONAL))

_WEYL_ORDER = {"A4": 2, "BinT": 2, "KleinD4": 6, "Q8": 6}
_FIXED_NAMES = {"torus": "SO(2)", "o2": "O(2)", "pin2": "Pin(2)"}


@dataclass(frozen=True)
class Subgroup:
    """Conjugacy class of a closed subgroup.

    kind is one of ``cyclic`` (order), ``torus``, ``dihedral`` (order 2t),
    ``o2``, ``quaternion`` (order 4t), ``pin2``, ``exc`` / ``exc~`` (tag).
    """

    kind: str
    param: int | str | None = field(default=None)

    @classmethod
    def cyclic(cls, s: int) -> Subgroup:
        return cls("cyclic", s)

    @classmethod
    def dihedral(cls, t: int) -> Subgroup:
        return cls("dihedral", 2 * t)

    @classmethod
    def quaternion(cls, t: int) -> Subgroup:
        return cls("quaternion", 4 * t)

    @classmethod
    def exceptional(cls, tag: str) -> Subgroup:
        if tag in EXCEPTIONAL:
            return cls("exc", tag)
        if tag in EXCEPTIONAL_TILDE:
            return cls("exc~", tag)
        raise RepError(f"unknown isolated subgroup {tag!r}")

    @property
    def weyl_order(self) -> int:
        if self.kind in ("exc", "exc~"):
            return _WEYL_ORDER.get(self.param, 1)
        if self.kind in ("dihedral", "quaternion"):
            return 2
        return 1

    def __str__(self) -> str:
        if self.kind == "cyclic":
            return f"C_{self.param}"
        if self.kind == "dihedral":
            return f"D_{self.param}"
        if self.kind == "quaternion":
            return f"Q_{self.param}"
        if self.kind in ("exc", "exc~"):
            return str(self.param)
        return _FIXED_NAMES[self.kind]

    @classmethod
    def parse(cls, text: str) -> Subgroup:
        for prefix, kind in (("C_", "cyclic"), ("D_", "dihedral"), ("Q_", "quaternion")):
            if text.startswith(prefix):
                return cls(kind, int(text[2:]))
        for kind, name in _FIXED_NAMES.items():
            if text == name:
                return cls(kind)
        return cls.exceptional(text)
