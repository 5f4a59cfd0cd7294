import pytest
from hypothesis import given
from hypothesis import strategies as st

from lcistruct import Ideal, MultipleStructure
from lcistruct.construct import example5, example6
from lcistruct.multistruct import InvalidStructure
from lcistruct.poly import GREVLEX, PolyRing, apply_ring_map
from oracles import colon_space, monomials_below, terms, truncated_length, truncated_member

R = PolyRing(["x", "y"], order=GREVLEX)


def ideal(*gens):
    return Ideal(R, [R(g) for g in gens])


I_XY = ideal("x", "y")
RUNNING = MultipleStructure(I_XY, ideal("x^3", "x*y", "y^4"))


def test_nilpotency_examples():
    assert RUNNING.nilpotency_index() == 3
    assert MultipleStructure(I_XY, ideal("x^2", "x*y", "y^2")).nilpotency_index() == 1
    assert MultipleStructure(I_XY, ideal("x^2", "y^2")).nilpotency_index() == 2


def test_running_filtrations():
    M = RUNNING.filtration("M")
    A = RUNNING.filtration("A")
    B = RUNNING.filtration("BF")
    assert list(M.ideals[1:]) == [ideal("x", "y"), ideal("x", "y^2"), ideal("x^2", "x*y", "y^3"), RUNNING.structure]
    assert list(A.ideals[1:]) == [
        ideal("x", "y"),
        ideal("x^2", "x*y", "y^2"),
        ideal("x^2", "x*y", "y^3"),
        RUNNING.structure,
    ]
    assert list(B.ideals[1:4]) == [ideal("x", "y"), ideal("x^2", "x*y", "y^2"), ideal("x^3", "x*y", "y^3")]
    assert M.ideals[0].is_unit() and A.ideals[0].is_unit()
    # pairwise distinct
    assert M.ideals != A.ideals and A.ideals != B.ideals and M.ideals != B.ideals


def test_running_lengths_and_type():
    t = RUNNING.structure_type()
    assert t.m == 3
    assert t.M_lengths[1:] == (1, 2, 4, 6)
    assert t.A_lengths[1:] == (1, 3, 4, 6)
    assert t.B_lengths[1:] == (1, 3, 5, 6)
    assert t.M_ranks == (1, 1, 2, 2)
    assert t.A_ranks == (1, 2, 1, 2)
    assert t.multiplicity == 6 == sum(t.M_ranks) == sum(t.A_ranks)


def test_running_lengths_against_colon_oracle():
    # M_l = J : I^(4-l) and A_l = J : (J : I^l), solved by linear algebra in R/m^6
    n = 6
    J = [terms(g) for g in RUNNING.structure.gens]
    total = len(monomials_below(2, n))
    m_lengths, a_lengths = [], []
    for l in range(1, 5):
        K = [terms(g) for g in (I_XY ** (4 - l)).gens]
        m_lengths.append(total - len(colon_space(J, K, 2, n)))
        inner = colon_space(J, [terms(g) for g in (I_XY**l).gens], 2, n)
        a_lengths.append(total - len(colon_space(J, inner, 2, n)))
    assert m_lengths == [1, 2, 4, 6]
    assert a_lengths == [1, 3, 4, 6]


def test_running_properties():
    rep = RUNNING.check_properties()
    assert rep.passed
    duality = [c for c in rep.all_checks() if not c.required and c.name.startswith("rank A_l = rank M_(m-l)")]
    assert duality and not duality[0].passed


def test_invalid_structures():
    with pytest.raises(InvalidStructure):
        MultipleStructure(ideal("x"), ideal("y"))  # J not inside I
    with pytest.raises(InvalidStructure):
        MultipleStructure(I_XY, ideal("x^2"))  # y is not nilpotent mod J
    with pytest.raises(InvalidStructure):
        MultipleStructure(ideal("x+y^2", "y"), ideal("x^2", "y^2"), params=[])


def test_double_structure_trivial():
    S = MultipleStructure(I_XY, ideal("x^2", "x*y", "y^2"))
    t = S.structure_type()
    assert t.m == 1 and t.M_ranks == (1, 2) and t.multiplicity == 3
    S1 = MultipleStructure(I_XY, ideal("x", "y^2"))
    assert S1.structure_type().M_ranks == (1, 1)
    assert S1.check_properties().passed


def test_n2_structure_all_checks():
    S = MultipleStructure(I_XY, ideal("x^2", "y^2"))
    t = S.structure_type()
    assert t.M_ranks == t.A_ranks == (1, 2, 1)
    assert all(c.passed for c in S.check_properties().all_checks())


def test_line_in_p3_multiplicity():
    P = PolyRing(["x", "y", "z", "w"])
    S = MultipleStructure(Ideal(P, [P("x"), P("y")]), Ideal(P, [P("x^2"), P("y^2")]))
    assert S.multiplicity() == 4
    # BF needs the generic point on a line
    with pytest.raises(InvalidStructure):
        S.filtration("BF", localized=False)
    assert S.filtration("BF").ranks() == [1, 2, 1]


def test_local_model_multiplicity_six():
    assert MultipleStructure(I_XY, ideal("x*y", "x^3+y^3")).multiplicity() == 6


@pytest.mark.parametrize("r", [0, 1])
def test_example5_generic_point(r):
    I, _, J, _ = example5(r)
    S = MultipleStructure(I, J)
    model = S.localize()
    assert model.ring.variables == ("x", "y", "z")
    assert str(model.ring.domain) == "QQ(u)"
    assert S.multiplicity() == 4
    gens = [terms(g) for g in model.structure.gens]
    assert truncated_length(gens, 3, 4) == 4
    t = S.structure_type()
    assert t.m == 2 and t.M_ranks == (1, 2, 1)


@pytest.mark.parametrize("r", [0, 1])
def test_example6_generic_point(r):
    I, J, _ = example6(r)
    S = MultipleStructure(I, J)
    model = S.localize()
    assert str(model.ring.domain) == "QQ(u,v)"
    gens = [terms(g) for g in model.structure.gens]
    # route 1: linear algebra over QQ(u,v)
    assert truncated_length(gens, 4, 4) == 4
    z_t = {(0, 0, 1, 1): 1}
    assert not truncated_member(z_t, gens, 4, 4)  # I^2 is not inside J
    support = [terms(g) for g in model.support.gens]
    assert truncated_length(support, 4, 4) == 1
    assert truncated_length(gens + [z_t], 4, 4) == 3
    # route 2: the structure's own computation
    t = S.structure_type()
    assert t.multiplicity == 4
    assert t.m == 2
    assert t.M_ranks == (1, 2, 1)
    assert not model.structure.contains(model.ring("z*t"))


def test_linear_change_preserves_multiplicity():
    for g in (("x^3", "x*y", "y^4"), ("x*y", "x^3+y^3")):
        base = ideal(*g)
        phi = {"x": R("x + 2*y"), "y": R("x - y")}
        moved = Ideal(R, [apply_ring_map(phi, p, R) for p in base.gens])
        a = MultipleStructure(I_XY, base)
        b = MultipleStructure(I_XY, moved)
        assert a.multiplicity() == b.multiplicity()
        assert a.structure_type().M_ranks == b.structure_type().M_ranks


# -- colon identities on random structures ----------------------------------------

POOL = ["x^2", "x*y", "y^2", "x^3", "y^3", "x^2+y^2", "x*y+y^3", "x^2-x*y", "x^2*y", "x*y^2"]


@given(st.lists(st.sampled_from(POOL), min_size=1, max_size=3, unique=True), st.integers(2, 4), st.integers(2, 4))
def test_filtration_chain_identities(chosen, a, b):
    J = ideal(*chosen, f"x^{a}", f"y^{b}")
    S = MultipleStructure(I_XY, J)
    m = S.nilpotency_index()
    M = S.filtration("M")
    A = S.filtration("A")
    assert M.ideals[m + 1] == J and A.ideals[m + 1] == J
    for l in range(m + 2):
        low = (I_XY**l) + J
        assert low.is_subset(A.ideals[l])
        assert A.ideals[l].is_subset(M.ideals[l])
        assert A.ideals[l] == J.colon(J.colon(I_XY**l))
    for l in range(m + 1):
        assert M.ideals[l + 1].is_subset(M.ideals[l])
        assert A.ideals[l + 1].is_subset(A.ideals[l])
    # length additivity
    lengths = M.lengths()
    ranks = S.structure_type().M_ranks
    for l, r in enumerate(ranks):
        assert lengths[l + 1] == lengths[l] + r
    assert sum(ranks) == S.multiplicity()
