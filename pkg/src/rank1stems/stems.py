"""Rational stable stems [S^0, S^U]^G_* for the six rank-1 groups.

The answer splits over blocks of subgroups.  The cyclic block is computed
from the fixed-point dimension function on the torus, the dihedral (or
quaternion) block from the sheaf of fixed spheres over the D_{2t}, and the
isolated blocks of SO(3)/SU(2) from Weyl-invariants of a single fixed sphere.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .characters import fixed_dim_virtual, weyl_det_trivial
from .groups import (
    EXCEPTIONAL,
    EXCEPTIONAL_TILDE,
    GroupId,
    RepError,
    Subgroup,
    VirtualRep,
    b_of,
    dihedral_sign,
    dim_dihedral,
    dim_function_cyclic,
    restrict,
)
from .lines import GENERIC, INF, SECTIONS, ExtendedNat, Line, LineSet, spot


class PreconditionError(RepError):
    """The representation has nonzero G-fixed points."""


def _require_no_fixed(rep: VirtualRep) -> None:
    if rep.trivial:
        raise PreconditionError(f"U^G must be 0, got {rep.trivial} trivial summands")


# -- circle groups -------------------------------------------------------------


def stems_torus(rep: VirtualRep) -> LineSet:
    if not rep.group.is_torus:
        raise RepError(f"stems_torus needs SO(2) or Spin(2), not {rep.group.name}")
    _require_no_fixed(rep)
    d = dim_function_cyclic(rep)
    if d.tail != 0:
        raise PreconditionError("zero weight present")
    negative = d.minimum() < 0
    lines = [] if negative else [spot(0, 1)]
    lines += [Line(v + 1, 2, 1, Subgroup.cyclic(s)) for s, v in d.exceptions]
    lines.append(Line(1, 2, INF, GENERIC))
    corrections = [(-1, 1)] if negative else []
    return LineSet(tuple(lines), tuple(corrections))


# -- O(2) and Pin(2) -----------------------------------------------------------


def stems_cyclic_block(rep: VirtualRep) -> LineSet:
    """Cyclic block for O(2) or Pin(2): W-invariants of the circle answer."""
    if rep.group not in (GroupId.O2, GroupId.PIN2):
        raise RepError(f"stems_cyclic_block needs O(2) or Pin(2), not {rep.group.name}")
    _require_no_fixed(rep)
    b = b_of(rep)
    d = dim_function_cyclic(rep)
    d_prime = d.shifted(-b)
    negative = d_prime.minimum() < 0
    # start offsets for (d' = 0 mod 4, d' = 2 mod 4)
    offsets = (3, 1) if b % 2 == 0 else (1, 3)

    lines: list[Line] = []
    if b % 2 == 0 and not negative:
        lines.append(spot(b, 1))
    for s, v in d.exceptions:
        off = offsets[0] if (v - b) % 4 == 0 else offsets[1]
        lines.append(Line(v + off, 4, 1, Subgroup.cyclic(s)))
    lines.append(Line(b + offsets[0], 4, INF, GENERIC))
    corrections = [(b - 1, 1)] if b % 2 == 0 and negative else []
    return LineSet(tuple(lines), tuple(corrections))


def _relevant_t(rep: VirtualRep) -> list[int]:
    idx = {irr.index for irr, _ in rep.terms if irr.kind == "sigma"}
    return sorted({t for n in idx for t in range(1, n + 1) if n % t == 0})


@dataclass(frozen=True)
class DihedralStalk:
    t: int
    degree: int
    odd_sign: bool


def dihedral_stalks(rep: VirtualRep, omit=frozenset()) -> list[DihedralStalk]:
    """Stalks of the suspended sheaf that differ from the generic degree-0 stalk."""
    out = []
    for t in _relevant_t(rep):
        if t in omit:
            continue
        dt = dim_dihedral(rep, t)
        odd = bool(dihedral_sign(rep, t))
        if dt != 0 or odd:
            out.append(DihedralStalk(t, dt, odd))
    return out


def stems_dihedral_block(rep: VirtualRep, omit=frozenset()) -> LineSet:
    """Dihedral block of O(2) (quaternion block of Pin(2)).

    Generic stalks give the countably infinite cluster in degree 0.  Each
    special stalk leaves that cluster and reappears in degree d'_U(t) when the
    Weyl group acts trivially on it.
    """
    if rep.group not in (GroupId.O2, GroupId.PIN2):
        raise RepError(f"stems_dihedral_block needs O(2) or Pin(2), not {rep.group.name}")
    _require_no_fixed(rep)
    if not set(omit) <= {1, 2}:
        raise ValueError("only D_2 and D_4 can be omitted")
    label = Subgroup.dihedral if rep.group == GroupId.O2 else Subgroup.quaternion
    lines = [spot(0, INF, SECTIONS)]
    lines += [spot(st.degree, 1, label(st.t)) for st in dihedral_stalks(rep, omit) if not st.odd_sign]
    return LineSet(tuple(lines))


# -- SO(3) and SU(2) -----------------------------------------------------------


def stems_isolated(rep: VirtualRep) -> list[tuple[str, LineSet]]:
    if rep.group not in (GroupId.SO3, GroupId.SU2):
        raise RepError(f"isolated blocks exist only for SO(3) and SU(2), not {rep.group.name}")
    _require_no_fixed(rep)
    tags = EXCEPTIONAL if rep.group == GroupId.SO3 else EXCEPTIONAL_TILDE
    out = []
    for tag in tags:
        sub = Subgroup.exceptional(tag)
        dim = fixed_dim_virtual(rep, tag)
        if sub.weyl_order == 1 or weyl_det_trivial(rep, tag):
            out.append((tag, LineSet((spot(dim, 1, sub),))))
        else:
            out.append((tag, LineSet()))
    return out


# -- full answer ---------------------------------------------------------------


@dataclass(frozen=True)
class BlockId:
    kind: str  # cyclic, dihedral, quaternion, isolated
    tag: str | None = None

    def __str__(self) -> str:
        return self.kind if self.tag is None else f"{self.kind}:{self.tag}"

    @classmethod
    def parse(cls, text: str) -> BlockId:
        kind, _, tag = text.partition(":")
        return cls(kind, tag or None)


@dataclass(frozen=True)
class BlockAnswer:
    group: GroupId
    rep: VirtualRep
    blocks: tuple[tuple[BlockId, LineSet], ...]
    range: tuple[int, int]
    notes: tuple[str, ...] = field(default=(), compare=False)

    def query(self, k: int) -> ExtendedNat:
        return sum((ls.query(k) for _, ls in self.blocks), 0)

    __getitem__ = query

    def window(self, a: int, b: int) -> dict[int, ExtendedNat]:
        return {k: self.query(k) for k in range(a, b + 1)}

    def block(self, kind: str, tag: str | None = None) -> LineSet:
        for bid, ls in self.blocks:
            if bid.kind == kind and bid.tag == tag:
                return ls
        raise KeyError(f"{kind}:{tag}")

    def shift(self, d: int) -> BlockAnswer:
        return BlockAnswer(
            self.group,
            self.rep,
            tuple((bid, ls.shift(d)) for bid, ls in self.blocks),
            self.range,
            self.notes,
        )


def _sign_twisted_notes(rep: VirtualRep, omit, label) -> tuple[str, ...]:
    return tuple(
        f"{label(st.t)}: fixed sphere of dimension 0 with sign-twisted Weyl action; stalk removed"
        for st in dihedral_stalks(rep, omit)
        if st.degree == 0 and st.odd_sign
    )


def stems(rep: VirtualRep) -> BlockAnswer:
    _require_no_fixed(rep)
    g = rep.group
    rng = dim_function_cyclic(rep).range()
    if g.is_torus:
        return BlockAnswer(g, rep, ((BlockId("cyclic"), stems_torus(rep)),), rng)
    if g in (GroupId.O2, GroupId.PIN2):
        kind = "dihedral" if g == GroupId.O2 else "quaternion"
        label = Subgroup.dihedral if g == GroupId.O2 else Subgroup.quaternion
        blocks = ((BlockId("cyclic"), stems_cyclic_block(rep)), (BlockId(kind), stems_dihedral_block(rep)))
        return BlockAnswer(g, rep, blocks, rng, _sign_twisted_notes(rep, (), label))

    # SO(3)/SU(2): cyclic and dihedral blocks agree with those of the
    # normalizer of the torus; a trivial summand in the restriction shifts them
    sub = restrict(rep, GroupId.O2 if g == GroupId.SO3 else GroupId.PIN2)
    shift, sub = sub.trivial, sub.without_trivial()
    omit = frozenset({1, 2})
    kind = "dihedral" if g == GroupId.SO3 else "quaternion"
    label = Subgroup.dihedral if g == GroupId.SO3 else Subgroup.quaternion
    blocks = [
        (BlockId("cyclic"), stems_cyclic_block(sub).shift(shift)),
        (BlockId(kind), stems_dihedral_block(sub, omit).shift(shift)),
    ]
    blocks += [(BlockId("isolated", tag), ls) for tag, ls in stems_isolated(rep)]
    return BlockAnswer(g, rep, tuple(blocks), rng, _sign_twisted_notes(sub, omit, label))


__all__ = [
    "BlockAnswer",
    "BlockId",
    "PreconditionError",
    "stems",
    "stems_cyclic_block",
    "stems_dihedral_block",
    "stems_isolated",
    "stems_torus",
]
