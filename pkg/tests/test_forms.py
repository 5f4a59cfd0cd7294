from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from lcistruct.forms import (
    NO_COMMON_ZERO,
    UNIT,
    BinaryForm,
    UnsupportedContext,
    discriminant,
    hessian,
    hessian_of,
    no_common_zero_artinian,
    nowhere_vanishing,
    resultant,
)
from lcistruct.poly import FractionField, PolyRing, apply_ring_map

P = PolyRing(["a", "b", "c"])
UV = PolyRing(["u", "v"])


def test_discriminant_examples():
    assert discriminant(BinaryForm((1, 0, 1))) == -1
    assert discriminant(BinaryForm((0, Fraction(1, 2), 0))) == Fraction(1, 4)
    F = FractionField(["a2"])
    a2 = F.param("a2")
    assert discriminant(BinaryForm((F.one, F.zero, a2), base=F)) == -a2


def test_discriminant_needs_quadratic():
    with pytest.raises(ValueError):
        discriminant(BinaryForm((1, 0, 0, 1)))


def test_form_e1e2():
    q = BinaryForm((0, Fraction(1, 2), 0))
    assert q.expand() == q.ring("e1*e2")
    assert BinaryForm.from_monomial_values((0, 1, 0)).coeffs == (0, Fraction(1, 2), 0)


def test_hessian_is_minus_four_discriminant_symbolically():
    a, b, c = P.gens
    q = BinaryForm((a, b, c), base=P)
    h = hessian(q)
    assert h == (discriminant(q) * -4).to_ring(h.ring)


SYM = PolyRing(["a2", "r", "s"])


@pytest.mark.parametrize("n", range(2, 7))
def test_hessian_case_b(n):
    a2, r, s = SYM.gens
    values = [r] + [SYM.zero] * (n - 1) + [s]
    form = BinaryForm.from_monomial_values(values, base=SYM, names=("x", "y"))
    h = hessian(form)
    expected = form.ring.monomial(_exp(form.ring, r=1, s=1, x=n - 2, y=n - 2), n**2 * (n - 1) ** 2)
    assert h == expected


@pytest.mark.parametrize("n", range(2, 7))
def test_hessian_case_a_mod_alpha2(n):
    a2, r, s = SYM.gens
    values = [(-a2) ** (i // 2) * (r if i % 2 == 0 else s) for i in range(n + 1)]
    form = BinaryForm.from_monomial_values(values, base=SYM, names=("x", "y"))
    h = hessian(form).subs({"a2": 0})
    expected = form.ring.monomial(_exp(form.ring, s=2, x=2 * n - 4), -((n - 1) ** 2))
    assert h == expected


def _exp(ring, **powers):
    return tuple(powers.get(v, 0) for v in ring.variables)


@given(
    st.lists(st.integers(-4, 4), min_size=3, max_size=4),
    st.lists(st.integers(-3, 3), min_size=4, max_size=4).filter(lambda m: m[0] * m[3] - m[1] * m[2] != 0),
)
def test_hessian_covariance(coeffs, m):
    form = BinaryForm(tuple(Fraction(c) for c in coeffs))
    R = form.ring
    e1, e2 = R.gens
    al, be, ga, de = (Fraction(t) for t in m)
    phi = {"e1": e1 * al + e2 * be, "e2": e1 * ga + e2 * de}
    moved = apply_ring_map(phi, form.expand(), R)
    lhs = hessian_of(moved)
    rhs = apply_ring_map(phi, hessian(form), R) * (al * de - be * ga) ** 2
    assert lhs == rhs


def test_nowhere_vanishing_unit():
    assert nowhere_vanishing(Fraction(3) * Fraction(-2), UNIT)
    assert not nowhere_vanishing(0, UNIT)
    with pytest.raises(UnsupportedContext):
        nowhere_vanishing(1, "somewhere")


@pytest.mark.parametrize("r", [0, 1, 2])
def test_pure_powers_have_no_common_zero(r):
    a, b = UV(f"u^{r + 1}"), UV(f"v^{r + 1}")
    assert abs(resultant(a, b, "u", "v")) == 1
    assert nowhere_vanishing([a, b], NO_COMMON_ZERO)


def test_common_zero_detected():
    assert not nowhere_vanishing([UV("u*v"), UV("u^2")], NO_COMMON_ZERO)
    assert not nowhere_vanishing([UV("u*v"), UV("u^2")], NO_COMMON_ZERO, method="artinian")


def test_three_forms():
    S = PolyRing(["u", "v", "w"])
    assert nowhere_vanishing([S("u"), S("v"), S("w")], NO_COMMON_ZERO)
    assert not nowhere_vanishing([S("u*v"), S("v*w"), S("w*u")], NO_COMMON_ZERO)


binary = st.lists(st.integers(-3, 3), min_size=2, max_size=4).filter(any)


def _form(cs):
    d = len(cs) - 1
    return UV.from_terms({(d - i, i): Fraction(c) for i, c in enumerate(cs) if c})


@given(binary, binary)
def test_resultant_agrees_with_artinian_route(f, g):
    F, G = _form(f), _form(g)
    by_res = resultant(F, G, "u", "v") != 0
    assert by_res == no_common_zero_artinian([F, G], ["u", "v"])
