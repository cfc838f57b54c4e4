"""Brute-force cross-checks for the closed-form calculators.

``oracle_torus`` and ``oracle_o2_cyclic`` build the two-term cochain complex
``Q -> Sigma^U II`` (truncated to finitely many subgroups and a degree
window), take W-invariants degreewise where relevant, and read off kernel and
cokernel with explicit linear algebra.  The fixed-point dimensions they use
come from the per-group closed formulas, not from torus weights.

The W-weights follow the convention that W negates c, so the Laurent ring has
trivial W-action in internal degrees 0 mod 4 and sign action in degrees
2 mod 4; a delta summand shifts by one and tensors with the sign.  This
encodes the same bookkeeping as the closed forms and cannot adjudicate it
independently.

``oracle_char_matrix`` and ``oracle_weyl_det`` work with explicit 3x3 rotation
matrices in floating point.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache

import numpy as np
from scipy.linalg import expm, null_space
from scipy.spatial.transform import Rotation

from .groups import GroupId, RepError, VirtualRep
from .lines import INF, ExtendedNat


class TruncationError(ValueError):
    pass


class OracleError(RuntimeError):
    pass


# -- closed-form fixed-point dimensions ------------------------------------------


def _count(i: int, s: int) -> int:
    return sum(1 for j in range(1, i + 1) if j % s == 0)


def closed_form_dim(rep: VirtualRep, s: int) -> int:
    """dim U^{C_s} from the per-group formulas, term by term."""
    g = rep.group
    total = rep.trivial
    for irr, m in rep.terms:
        k, n = irr.kind, irr.index
        if k == "z":
            v = 2 if n % s == 0 else 0
        elif k == "delta":
            v = 1
        elif k == "sigma" and g == GroupId.O2:
            v = 2 if n % s == 0 else 0
        elif k == "sigma":
            ok = n % s == 0 if s % 2 else n % (s // 2) == 0
            v = 2 if ok else 0
        elif k == "h":
            v = 4 if n % s == 0 else 0
        elif k == "W" and g == GroupId.SO3:
            v = 1 + 2 * _count(irr.half, s)
        elif k == "W":
            # C_s in SU(2) maps onto C_s or C_{s/2} in SO(3)
            v = 1 + 2 * _count(irr.half, s if s % 2 else s // 2)
        elif k == "V":
            v = 4 * sum(1 for j in range(1, irr.half + 1) if (2 * j - 1) % s == 0)
        else:
            raise RepError(f"no closed form for {irr}")
        total += m * v
    return total


def _max_weight(rep: VirtualRep) -> int:
    g = rep.group
    best = 0
    for irr, _ in rep.terms:
        if irr.kind in ("z", "h"):
            best = max(best, irr.index)
        elif irr.kind == "sigma":
            best = max(best, 2 * irr.index if g == GroupId.PIN2 else irr.index)
        elif irr.kind == "W":
            best = max(best, irr.index - 1 if g == GroupId.SU2 else irr.half)
        elif irr.kind == "V":
            best = max(best, irr.index - 1)
    return best


# -- truncated torsion modules ---------------------------------------------------


@dataclass
class TruncatedTorsionModule:
    """Sigma^U II restricted to s <= s_max and internal degrees in a window.

    ``dims[(s, m)]`` is 1 when the s-th copy of I, suspended by d(s), has a
    class in internal degree m; ``w_sign`` records the W-weight of that class.
    """

    s_max: int
    window: tuple[int, int]
    shifts: dict[int, int]
    dims: dict[tuple[int, int], int] = field(default_factory=dict)
    w_sign: dict[tuple[int, int], int] = field(default_factory=dict)

    @classmethod
    def build(cls, shifts: dict[int, int], window, twist: int | None = None) -> TruncatedTorsionModule:
        lo, hi = window
        mod = cls(max(shifts), window, shifts)
        for s, d in shifts.items():
            for m in range(lo, hi + 1):
                # I = Q[c,1/c]/Q[c] lives in degrees 2, 4, 6, ...
                if m >= d + 2 and (m - d) % 2 == 0:
                    mod.dims[(s, m)] = 1
                    if twist is not None:
                        mod.w_sign[(s, m)] = (1 if m % 4 == 0 else -1) * twist
        return mod

    def basis(self, m: int, invariant_only: bool = False) -> list[int]:
        return [
            s
            for (s, k), v in sorted(self.dims.items())
            if k == m and v and (not invariant_only or self.w_sign.get((s, k), 1) == 1)
        ]


def _homology(source_dim: int, target: list[int]) -> tuple[int, int]:
    """Kernel and cokernel dimensions of the diagonal map Q^source_dim -> Q^target."""
    if source_dim == 0 or not target:
        return source_dim, len(target)
    diag = np.ones((len(target), source_dim))
    r = int(np.linalg.matrix_rank(diag))
    return source_dim - r, len(target) - r


def _solve(rep: VirtualRep, window, s_max, b: int, equivariant: bool) -> dict[int, ExtendedNat]:
    top = _max_weight(rep)
    if s_max <= top:
        raise TruncationError(f"truncation unsound: s_max={s_max} must exceed the largest weight {top}")
    a, z = window
    shifts = {s: closed_form_dim(rep, s) - b for s in range(1, s_max + 1)}
    # homotopy degree k <-> internal degree k - b + 1 for the odd part
    inner = (a - b + 1, z - b + 1)
    twist = (-1) ** (b % 2) if equivariant else None
    mod = TruncatedTorsionModule.build(shifts, (min(inner[0], 0), max(inner[1], 0)), twist)
    source = 1 if twist in (None, 1) else 0

    table: dict[int, ExtendedNat] = {k: 0 for k in range(a, z + 1)}
    for m in range(inner[0], inner[1] + 1):
        target = mod.basis(m, invariant_only=equivariant)
        if m == 0:
            ker, coker = _homology(source, target)
            if a <= b <= z:
                table[b] += ker
        else:
            coker = len(target)
        k = m - 1 + b
        tail = [s for s in target if s > top]
        table[k] += INF if tail else coker
    if 0 not in range(inner[0], inner[1] + 1) and a <= b <= z:
        ker, _ = _homology(source, mod.basis(0, invariant_only=equivariant))
        table[b] += ker
    return table


def oracle_torus(rep: VirtualRep, window: tuple[int, int], s_max: int = 64) -> dict[int, ExtendedNat]:
    if not rep.group.is_torus:
        raise RepError("oracle_torus needs SO(2) or Spin(2)")
    return _solve(rep, window, s_max, 0, equivariant=False)


def oracle_o2_cyclic(rep: VirtualRep, window: tuple[int, int], s_max: int = 64) -> dict[int, ExtendedNat]:
    """Cyclic block of O(2) or Pin(2) via W-invariants of the truncated complex."""
    if rep.group not in (GroupId.O2, GroupId.PIN2):
        raise RepError("oracle_o2_cyclic needs O(2) or Pin(2)")
    b = sum(m for irr, m in rep.terms if irr.kind == "delta")
    return _solve(rep, window, s_max, b, equivariant=True)


# -- rotation matrices -------------------------------------------------------------

_PHI = (1 + 5**0.5) / 2


def _rot(axis, angle) -> np.ndarray:
    axis = np.asarray(axis, dtype=float)
    return Rotation.from_rotvec(angle * axis / np.linalg.norm(axis)).as_matrix()


_CYCLE = np.array([[0.0, 0.0, 1.0], [1.0, 0.0, 0.0], [0.0, 1.0, 0.0]])
_HALF_X = _rot((1, 0, 0), np.pi)
_HALF_Z = _rot((0, 0, 1), np.pi)
_QUARTER_Z = _rot((0, 0, 1), np.pi / 2)

GENERATORS = {
    "KleinD4": [_HALF_X, _HALF_Z],
    "D8": [_QUARTER_Z, _HALF_X],
    "A4": [_HALF_X, _HALF_Z, _CYCLE],
    "S4": [_HALF_X, _CYCLE, _QUARTER_Z],
    "A5": [_HALF_X, _HALF_Z, _CYCLE, _rot((0, 1, _PHI), 2 * np.pi / 5)],
}

# elements of the normalizer representing Weyl group generators
WEYL_ELEMENTS = {
    "A4": {"involution": _QUARTER_Z},
    "KleinD4": {"transposition": _QUARTER_Z, "three_cycle": _CYCLE},
}


def _key(m: np.ndarray) -> tuple:
    return tuple(np.round(m, 6).ravel() + 0.0)


@lru_cache(maxsize=None)
def _closure(tag: str) -> tuple:
    gens = GENERATORS[tag]
    seen = {_key(np.eye(3)): np.eye(3)}
    frontier = [np.eye(3)]
    while frontier:
        nxt = []
        for g in frontier:
            for x in gens:
                y = x @ g
                k = _key(y)
                if k not in seen:
                    seen[k] = y
                    nxt.append(y)
        frontier = nxt
    return tuple(seen.values())


def rotation_group(tag: str) -> list[np.ndarray]:
    if tag not in GENERATORS:
        raise RepError(f"no matrix generators for {tag!r}")
    return list(_closure(tag))


def harmonic_trace(r: np.ndarray, degree: int) -> float:
    """Trace of r on harmonic polynomials of the given degree in x, y, z.

    Traces on symmetric powers come from power sums tr(r^k) via Newton's
    identities; harmonics are Sym^l minus r^2 Sym^(l-2).
    """
    p = [0.0]
    power = np.eye(3)
    for _ in range(degree):
        power = power @ r
        p.append(float(np.trace(power)))
    hs = [1.0]
    for n in range(1, degree + 1):
        hs.append(sum(p[k] * hs[n - k] for k in range(1, n + 1)) / n)
    return hs[degree] - (hs[degree - 2] if degree >= 2 else 0.0)


def oracle_char_matrix(tag: str, i: int) -> int:
    """dim W(2i+1)^H by averaging traces over explicit rotation matrices."""
    if i > 20 or i < 0:
        raise ValueError("oracle_char_matrix supports 0 <= i <= 20")
    group = rotation_group(tag)
    avg = sum(harmonic_trace(g, i) for g in group) / len(group)
    n = round(avg)
    if abs(avg - n) > 1e-6:
        raise OracleError(f"trace average {avg} for {tag}, i={i} is not an integer")
    return int(n)


@lru_cache(maxsize=None)
def _spin_matrices(l: int):
    m = np.arange(l, -l - 1, -1, dtype=float)
    jz = np.diag(m).astype(complex)
    jp = np.zeros((2 * l + 1, 2 * l + 1), dtype=complex)
    for a in range(1, 2 * l + 1):
        mm = m[a]
        jp[a - 1, a] = np.sqrt(l * (l + 1) - mm * (mm + 1))
    jm = jp.conj().T
    return (jp + jm) / 2, (jp - jm) / 2j, jz


def wigner(r: np.ndarray, l: int) -> np.ndarray:
    """Matrix of r on the (2l+1)-dimensional irreducible, complexified."""
    jx, jy, jz = _spin_matrices(l)
    v = Rotation.from_matrix(r).as_rotvec()
    return expm(-1j * (v[0] * jx + v[1] * jy + v[2] * jz))


def oracle_weyl_det(tag: str, i: int, element: str | None = None) -> int:
    """Determinant (+1 or -1) of a Weyl element acting on W(2i+1)^H."""
    choices = WEYL_ELEMENTS[tag]
    g = choices[element or next(iter(choices))]
    stack = np.vstack([wigner(h, i) - np.eye(2 * i + 1) for h in rotation_group(tag)])
    fixed = null_space(stack, rcond=1e-9)
    if fixed.shape[1] == 0:
        return 1
    act = fixed.conj().T @ wigner(g, i) @ fixed
    det = np.linalg.det(act)
    if abs(abs(det) - 1) > 1e-6 or abs(det.imag) > 1e-6:
        raise OracleError(f"Weyl element does not preserve the fixed space ({det})")
    return int(round(det.real))


def oracle_weyl_trivial(rep: VirtualRep, tag: str) -> bool:
    base = {"BinT": "A4", "Q8": "KleinD4"}.get(tag, tag)
    sign = 1
    for irr, m in rep.terms:
        if irr.kind != "W":
            continue
        for element in WEYL_ELEMENTS[base]:
            det = oracle_weyl_det(base, irr.half, element)
            if element == "three_cycle" and det != 1:
                raise OracleError("order-3 Weyl element acted with determinant -1")
        sign *= oracle_weyl_det(base, irr.half) ** (m % 2)
    return sign == 1
