import random
from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from lcistruct import Ideal
from lcistruct.construct import (
    OTHER,
    ConstructionError,
    ConstructionPlan,
    closed_form,
    example4_ideals,
    example4_report,
    example5_report,
    example6_report,
    extra_variables,
    local_ring,
    paper_examples,
    recognize_normal_form,
    run_construction,
    step3_change,
    stepk_change,
    verify_coordinate_change,
)
from lcistruct.invariants import TruncationTooSmall, hilbert
from lcistruct.poly import PolyRing
from oracles import min_gens_linear_algebra, terms, truncated_length

R = local_ring(2)


def ideal(*gens, ring=R):
    return Ideal(ring, [ring(g) for g in gens])


def test_extra_variables():
    assert extra_variables(2) == []
    assert extra_variables(4) == ["z", "w"]
    assert extra_variables(7) == ["z", "w", "t", "u", "z5"]


def test_n2_branch_a_example():
    res = run_construction(ConstructionPlan(2, "A", (), 2, r=0, s=1))
    assert res.final == ideal("x^2", "y^2")
    assert res.multiplicity == 4


def test_n3_branch_b_chain():
    res = run_construction(ConstructionPlan(3, "B"))
    assert res.ideals == [
        ideal("x", "y"),
        ideal("x^2", "x*y", "y^2"),
        ideal("x^3", "x*y", "y^3"),
        ideal("x^3+y^3", "x*y"),
    ]
    assert res.multiplicity == 6
    assert [c.length_drop for c in res.certificates] == [2, 2, 1]


def test_n4_branch_a_length():
    res = run_construction(ConstructionPlan(4, "A", (1, Fraction(1, 2))))
    assert res.final == ideal("x^4", "y^2 + x^2 + 1/2*x^3")
    assert res.multiplicity == 8


def test_invalid_plans():
    with pytest.raises(ConstructionError):
        run_construction(ConstructionPlan(3, "B", r=0))
    with pytest.raises(ConstructionError):
        run_construction(ConstructionPlan(3, "A", s=0))
    with pytest.raises(ConstructionError):
        run_construction(ConstructionPlan(3, "A", (1, 2, 3)))
    with pytest.raises(ConstructionError):
        run_construction(ConstructionPlan(1))
    with pytest.raises(ConstructionError):
        run_construction(ConstructionPlan(3, "C"))


PLANS = st.builds(
    lambda n, branch, codim, alphas: ConstructionPlan(
        n, branch, tuple(alphas[: n - 2]) if branch == "A" else (), codim
    ),
    st.integers(2, 6),
    st.sampled_from("AB"),
    st.integers(2, 3),
    st.lists(st.fractions(min_value=-2, max_value=2, max_denominator=3), min_size=4, max_size=4),
)


@given(PLANS)
def test_chain_invariants(plan):
    res = run_construction(plan)
    n = plan.n
    assert res.report().passed
    # lengths from the linear-algebra oracle, independent of Groebner bases
    nv = res.ring.nvars
    lengths = [truncated_length([terms(g) for g in q.gens], nv, 2 * n + 2) for q in res.ideals]
    assert lengths[-1] == 2 * n
    drops = [lengths[k] - lengths[k - 1] for k in range(1, n + 1)]
    assert drops == [2] * (n - 1) + [1]
    assert min_gens_linear_algebra([terms(g) for g in res.final.gens], nv, 2 * n + 2) == plan.codim
    assert res.final == closed_form(plan, n + 1)
    nf = recognize_normal_form(res.final)
    assert (nf.kind, nf.n) == (plan.branch, n)
    if plan.branch == "A":
        assert nf.alphas == tuple(plan.alpha(i) for i in range(2, n))


def test_certificates_record_bundle_ranks():
    res = run_construction(ConstructionPlan(5, "B"))
    ranks = [c.next_bundle_rank for c in res.certificates]
    assert ranks == [None, 2, 2, 2, None]
    side = res.certificates[-1].side_condition
    x, y = side["hessian"].ring.var("x"), side["hessian"].ring.var("y")
    assert side["hessian"] == (x * y) ** 3 * 400


def test_branch_a_prime_label():
    res = run_construction(ConstructionPlan(4, "A", (1, 0)))
    assert res.certificates[1].side_condition["case"] == "a'"
    res = run_construction(ConstructionPlan(4, "A", (0, 1)))
    assert res.certificates[1].side_condition["case"] == "a"


def test_rotation_relates_n2_branches():
    a = closed_form(ConstructionPlan(2, "A"), 3)
    b = closed_form(ConstructionPlan(2, "B"), 3)
    x, y = R.gens
    assert a != b
    assert verify_coordinate_change(b, a, {"x": x + y, "y": x - y}, 6)


# -- coordinate changes ------------------------------------------------------------

VALUES = [1, 2, -3]


@pytest.mark.parametrize("lam", VALUES)
@pytest.mark.parametrize("mu", VALUES)
def test_step3_change(lam, mu):
    src, dst, phi = step3_change(lam, mu)
    assert verify_coordinate_change(src, dst, phi, 10)


@pytest.mark.parametrize("k", range(3, 7))
@pytest.mark.parametrize("lam", VALUES)
@pytest.mark.parametrize("mu", VALUES)
def test_stepk_change(k, lam, mu):
    src, dst, phi = stepk_change(k, lam, mu)
    assert verify_coordinate_change(src, dst, phi, 2 * k + 6)


def test_stepk_documented_instance():
    src, dst, phi = stepk_change(4, 2, 3)
    assert verify_coordinate_change(src, dst, phi, 14)


def test_identity_change():
    J = ideal("x^3", "x*y", "y^4")
    assert verify_coordinate_change(J, J, {}, 3)


def test_change_rejections():
    src, dst, phi = step3_change(1, 1)
    with pytest.raises(TruncationTooSmall) as err:
        verify_coordinate_change(src, dst, phi, 3)
    assert err.value.required == 4
    X, Y = dst.ring.gens
    with pytest.raises(ValueError):
        verify_coordinate_change(src, dst, {"x": X, "y": X + Y**2}, 10)  # singular
    with pytest.raises(ValueError):
        verify_coordinate_change(src, dst, {"x": X + 1, "y": Y}, 10)  # moves the origin


def test_wrong_change_is_detected():
    src, dst, phi = step3_change(1, 1)
    X, Y = dst.ring.gens
    assert not verify_coordinate_change(src, dst, {"x": X, "y": Y}, 10)


# -- recognizer -----------------------------------------------------------------


def test_recognizer_examples():
    nf = recognize_normal_form(ideal("y^2+x^2", "x^4"))
    assert (nf.kind, nf.n, nf.alphas) == ("A", 4, (1, 0))
    nf = recognize_normal_form(ideal("x^2+y^2", "x*y"))
    assert (nf.kind, nf.n) == ("B", 2)
    assert recognize_normal_form(ideal("x^3", "x*y", "y^4")) == OTHER
    nf = recognize_normal_form(ideal("x^2", "y^3"))
    assert (nf.kind, nf.n) == ("A", 3)
    nf = recognize_normal_form(ideal("x*y", "x^3+y^3"))
    assert (nf.kind, nf.n) == ("B", 3)


def test_recognizer_with_transverse_variables():
    S = local_ring(4)
    J = Ideal(S, [S("x*y"), S("x^4+y^4"), S("z - x^2"), S("w + y")])
    nf = recognize_normal_form(J)
    assert nf.kind == "B" and nf.n == 4


# -- worked examples ------------------------------------------------------------------


def test_example4_hilbert_data():
    (n2,) = example4_ideals(2)
    h = hilbert(n2)
    assert h.degree == 4 and h.polynomial_str() == "4t"
    for J in example4_ideals(3):
        h = hilbert(J)
        assert h.degree == 6 and h.polynomial_str() == "6t - 3"
    assert example4_report().passed


@pytest.mark.parametrize("r", [0, 1])
def test_example_reports(r):
    assert example5_report(r).passed
    assert example6_report(r).passed


def test_worked_examples_deterministic():
    a = paper_examples((0,)).to_json()
    b = paper_examples((0,)).to_json()
    assert a == b
