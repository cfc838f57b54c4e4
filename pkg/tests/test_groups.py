import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from rank1stems.characters import cyclic_table, dihedral_table, fixed_dim
from rank1stems.groups import (
    DimFunction,
    GroupId,
    RepError,
    Subgroup,
    V,
    VirtualRep,
    W,
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
from rank1stems.oracle import closed_form_dim

from .conftest import reps

O2, SO3, PIN2, SU2, SO2 = GroupId.O2, GroupId.SO3, GroupId.PIN2, GroupId.SU2, GroupId.SO2


# -- catalog --------------------------------------------------------------------


@pytest.mark.parametrize(
    "group, irr",
    [(SO3, z(2)), (SO2, delta), (O2, h(1)), (SO3, V(2)), (PIN2, W(3)), (SU2, sigma(1))],
)
def test_catalog_rejects_foreign_irreducibles(group, irr):
    with pytest.raises(RepError):
        VirtualRep.of(group, {irr: 1})


@pytest.mark.parametrize("kind, n", [("z", 0), ("h", 2), ("W", 4), ("W", 1), ("V", 3), ("sigma", -1)])
def test_index_ranges(kind, n):
    from rank1stems.groups import Irreducible

    with pytest.raises(RepError):
        Irreducible(kind, n)


def test_canonical_form_is_insensitive_to_cancellation():
    u = VirtualRep.of(O2, {sigma(1): 2, delta: -1})
    extra = VirtualRep.of(O2, {sigma(5): 1})
    assert (u + extra) - extra == u
    assert ((u + extra) - extra).terms == u.terms
    assert VirtualRep.of(O2, {sigma(3): 0}).is_zero()


# -- restriction to the torus ---------------------------------------------------


def test_torus_weights_of_w5_on_so3():
    assert restrict_to_torus(VirtualRep.of(SO3, {W(5): 1})) == WeightMultiset.build(1, {1: 1, 2: 1})


def test_torus_weights_of_natural_su2_rep():
    # natural rep: complex weights +1, -1, i.e. two real planes of weight 1
    assert restrict_to_torus(VirtualRep.of(SU2, {V(2): 1})) == WeightMultiset.build(0, {1: 2})


def test_torus_weights_of_zero():
    assert restrict_to_torus(VirtualRep.zero(O2)) == WeightMultiset()


@pytest.mark.parametrize("group, irr", [(SO3, W(7)), (SU2, W(7)), (SU2, V(6)), (PIN2, h(3)), (O2, sigma(4))])
def test_torus_restriction_preserves_dimension(group, irr):
    expected = {"W": irr.index, "V": 2 * irr.index, "h": 4, "sigma": 2}[irr.kind]
    assert restrict_to_torus(VirtualRep.of(group, {irr: 1})).real_dim == expected


# -- restriction SO3 -> O2, SU2 -> Pin2 ------------------------------------------


def test_restrict_w5():
    r = restrict(VirtualRep.of(SO3, {W(5): 1}), O2)
    assert r.mults == {sigma(1): 1, sigma(2): 1}
    # delta^2 is the trivial representation
    assert r.trivial == 1


def test_restrict_w3():
    r = restrict(VirtualRep.of(SO3, {W(3): 1}), O2)
    assert r.mults == {delta: 1, sigma(1): 1}
    assert r.trivial == 0


def test_restrict_v4():
    u = VirtualRep.of(SU2, {V(4): 1})
    r = restrict(u, PIN2)
    assert r.mults == {h(1): 1, h(3): 1}
    assert restrict_to_torus(r) == restrict_to_torus(u)


def test_restrict_unsupported_pair():
    with pytest.raises(RepError, match="no restriction rule"):
        restrict(VirtualRep.of(SO3, {W(3): 1}), PIN2)


@given(st.one_of(reps(SO3), reps(SU2)))
def test_restriction_commutes_with_torus(u):
    target = O2 if u.group == SO3 else PIN2
    assert restrict_to_torus(restrict(u, target)) == restrict_to_torus(u)


@given(reps(SO3), st.integers(1, 30))
def test_restriction_preserves_cyclic_dimension(u, s):
    assert dim_cyclic(u, s) == dim_cyclic(restrict(u, O2), s)


# -- cyclic fixed points --------------------------------------------------------


def test_dim_cyclic_examples():
    assert dim_cyclic(VirtualRep.of(SO3, {W(5): 1}), 2) == 3
    assert dim_cyclic(VirtualRep.of(PIN2, {h(3): 1}), 3) == 4
    assert dim_cyclic(VirtualRep.of(PIN2, {sigma(1): 1}), 2) == 2
    for g in GroupId:
        assert dim_cyclic(VirtualRep.zero(g), 7) == 0


@settings(max_examples=60)
@given(st.sampled_from(list(GroupId)).flatmap(lambda g: st.tuples(reps(g), st.integers(1, 30))))
def test_dim_cyclic_matches_closed_forms(case):
    u, s = case
    assert dim_cyclic(u, s) == closed_form_dim(u, s)


@given(st.sampled_from(list(GroupId)).flatmap(lambda g: st.tuples(reps(g), st.integers(1, 40))))
def test_dim_cyclic_parity(case):
    u, s = case
    zero = restrict_to_torus(u).zero
    assert (dim_cyclic(u, s) - zero) % 2 == 0
    if u.group in (O2, PIN2):
        assert (dim_cyclic(u, s) - b_of(u)) % 2 == 0


@pytest.mark.parametrize("i", range(0, 8))
@pytest.mark.parametrize("s", range(1, 13))
def test_dim_cyclic_agrees_with_class_average(i, s):
    u = VirtualRep.of(SO3, {W(2 * i + 1): 1}) if i else VirtualRep.zero(SO3)
    expected = fixed_dim(i, cyclic_table(s)) if i else 0
    assert dim_cyclic(u, s) == expected


def test_dim_function_examples():
    d = dim_function_cyclic(VirtualRep.of(SO2, {z(1): -1}))
    assert d.exception_table == {1: -2} and d.tail == 0
    assert d.range() == (-2, 0)

    d = dim_function_cyclic(VirtualRep.of(O2, {delta: 2, sigma(1): -1}))
    assert d.exception_table == {1: 0} and d.tail == 2

    d = dim_function_cyclic(VirtualRep.of(SO3, {W(5): 1}))
    assert d.exception_table == {1: 5, 2: 3} and d.tail == 1


@given(st.sampled_from(list(GroupId)).flatmap(reps))
def test_dim_function_is_eventually_constant(u):
    d = dim_function_cyclic(u)
    top = restrict_to_torus(u).max_weight
    for s in range(top + 1, top + 30):
        assert dim_cyclic(u, s) == d.tail == d(s)
    for s in range(1, top + 1):
        assert d(s) == dim_cyclic(u, s)


def test_dim_function_never_stores_tail():
    assert DimFunction.build({1: 3, 2: 0}, 0).exceptions == ((1, 3),)


# -- dihedral fixed points -------------------------------------------------------


def test_dim_dihedral_examples():
    assert dim_dihedral(VirtualRep.of(O2, {sigma(1): 1, sigma(2): -1}), 2) == -1
    assert dim_dihedral(VirtualRep.of(SU2, {V(4): 1}), 1) == 0
    # W(5)^{D_4} is 2-dimensional: the zonal harmonic plus one line from sigma(2)
    assert dim_dihedral(VirtualRep.of(SO3, {W(5): 1}), 2) == 2


def test_dim_dihedral_rejects_torus():
    with pytest.raises(RepError):
        dim_dihedral(VirtualRep.of(SO2, {z(1): 1}), 1)


@pytest.mark.parametrize("i", range(1, 11))
@pytest.mark.parametrize("t", range(1, 13))
def test_dim_dihedral_agrees_with_class_average(i, t):
    u = VirtualRep.of(SO3, {W(2 * i + 1): 1})
    assert dim_dihedral(u, t) == fixed_dim(i, dihedral_table(t))
    v = VirtualRep.of(SU2, {W(2 * i + 1): 1, V(2 * i): 3})
    assert dim_dihedral(v, t) == fixed_dim(i, dihedral_table(t))


def test_dihedral_sign_examples():
    assert dihedral_sign(VirtualRep.of(O2, {sigma(1): 1}), 1) == 1
    assert dihedral_sign(VirtualRep.of(O2, {sigma(2): 1}), 1) == 0
    # W(5) restricts to 1 + sigma(1) + sigma(2); only sigma(1) is twisted at t = 1
    assert dihedral_sign(VirtualRep.of(SO3, {W(5): 1}), 1) == 1


def test_b_of():
    assert b_of(VirtualRep.of(O2, {delta: 2, sigma(1): -1})) == 2
    assert b_of(VirtualRep.of(O2, {sigma(3): 1})) == 0
    assert b_of(VirtualRep.of(PIN2, {delta: 1, h(1): -1})) == 1
    with pytest.raises(RepError):
        b_of(VirtualRep.of(SO3, {W(3): 1}))


def test_subgroup_descriptors():
    assert Subgroup.exceptional("A4").weyl_order == 2
    assert Subgroup.exceptional("BinT").weyl_order == 2
    assert Subgroup.exceptional("KleinD4").weyl_order == 6
    assert Subgroup.exceptional("Q8").weyl_order == 6
    assert Subgroup.exceptional("A5").weyl_order == 1
    for text in ("C_3", "D_6", "Q_12", "SO(2)", "O(2)", "A5", "BinO"):
        assert str(Subgroup.parse(text)) == text
