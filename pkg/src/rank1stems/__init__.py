"""Rational RO(G)-graded stable stems [S^0, S^U]^G_* for the rank-1 compact Lie groups
SO(2), Spin(2), O(2), Pin(2), SO(3) and SU(2)."""

from .groups import (
    DimFunction,
    GroupId,
    Irreducible,
    RepError,
    Subgroup,
    VirtualRep,
    W,
    V,
    WeightMultiset,
    b_of,
    delta,
    dihedral_sign,
    dim_cyclic,
    dim_dihedral,
    dim_function_cyclic,
    h,
    restrict,
    restrict_to_torus,
    sigma,
    z,
)
from .lines import INF, Line, LineSet, spot
from .stems import BlockAnswer, stems

__all__ = [
    "BlockAnswer",
    "DimFunction",
    "GroupId",
    "INF",
    "Irreducible",
    "Line",
    "LineSet",
    "RepError",
    "Subgroup",
    "V",
    "VirtualRep",
    "W",
    "WeightMultiset",
    "b_of",
    "delta",
    "dihedral_sign",
    "dim_cyclic",
    "dim_dihedral",
    "dim_function_cyclic",
    "h",
    "restrict",
    "restrict_to_torus",
    "sigma",
    "spot",
    "stems",
    "z",
]
