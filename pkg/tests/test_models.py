import itertools

import pytest

from wittid.fields import Field
from wittid.freealg import LiePoly, Var
from wittid.models import (
    ModelElement,
    evaluate,
    onedim_model,
    parse_model,
    satisfies_multilinear,
    u1_model,
    ut3_model,
    w1_model,
)

GF2 = Field.gf(2)
GF3 = Field.gf(3)


def basis_bracket(model, i, j):
    return model.bracket(model.basis_element(i), model.basis_element(j))


def test_u1_bracket_examples():
    m = u1_model(GF2)
    assert basis_bracket(m, 1, 2) == ModelElement(GF2, {(3, 0): 1})
    assert basis_bracket(m, 1, 3).is_zero()
    m3 = u1_model(GF3)
    assert basis_bracket(m3, 1, 3) == ModelElement(GF3, {(4, 0): 2})


def test_w1_examples():
    m = w1_model(GF2)
    assert basis_bracket(m, -1, 0) == ModelElement(GF2, {(-1, 0): 1})
    assert m.dim(-2) == 0
    assert basis_bracket(m, -1, 1).is_zero()
    with pytest.raises(ValueError):
        m.basis_element(-2)


def test_w1_agrees_with_u1_on_common_support():
    mu = u1_model(GF2)
    mw = w1_model(GF2)
    for i in range(-1, 13):
        for j in range(-1, 13):
            assert basis_bracket(mu, i, j) == basis_bracket(mw, i, j)


def test_grading_compatibility_window():
    for model in (u1_model(GF2), w1_model(GF2), u1_model(GF3)):
        for i in range(-12, 13):
            for j in range(-12, 13):
                if model.dim(i) == 0 or model.dim(j) == 0:
                    continue
                value = basis_bracket(model, i, j)
                assert value.is_homogeneous(i + j)


def _all_basis_elements(model, window=None):
    degrees = model.finite_support()
    if degrees is None:
        degrees = range(-12, 13)
    out = []
    for d in degrees:
        for slot in range(model.dim(d)):
            out.append(model.basis_element(d, slot))
    return out


@pytest.mark.parametrize(
    "model",
    [
        u1_model(GF2),
        w1_model(GF2),
        u1_model(GF3),
        ut3_model(GF2, 0, 2),
        ut3_model(GF2, 2, 2),
        ut3_model(GF2, 0, 0),
        ut3_model(GF3, -2, 0),
        onedim_model(GF2, -3),
    ],
)
def test_alternation_and_jacobi(model):
    elements = _all_basis_elements(model)
    for x in elements:
        assert model.bracket(x, x).is_zero()
    f = model.field
    for x, y in itertools.product(elements, repeat=2):
        # antisymmetry: [x,y] + [y,x] = 0 (equality of brackets in char 2)
        s = model.bracket(x, y) + model.bracket(y, x)
        assert s.is_zero()
    small = elements[:8]
    for x, y, z in itertools.product(small, repeat=3):
        jac = (
            model.bracket(model.bracket(x, y), z)
            + model.bracket(model.bracket(y, z), x)
            + model.bracket(model.bracket(z, x), y)
        )
        assert jac.is_zero()


def test_ut3_gradings():
    m = ut3_model(GF2, 0, 2)
    assert m.component_slots(0) == ("E12",)
    assert m.component_slots(2) == ("E23", "E13")  # collision r + s = s merged
    assert m.collision_merged
    f = LiePoly.monomial(GF2, (Var(1, 0), Var(2, 2)))
    assert not satisfies_multilinear(m, f)

    m = ut3_model(GF2, 2, 2)
    assert m.component_slots(2) == ("E12", "E23")
    assert m.component_slots(4) == ("E13",)
    assert not m.collision_merged

    m = ut3_model(GF2, 0, 0)
    assert m.component_slots(0) == ("E12", "E23", "E13")
    assert m.dim(1) == 0

    with pytest.raises(ValueError):
        ut3_model(GF2, 2, 0)
    with pytest.raises(ValueError):
        ut3_model(GF2, 0, 1)


def test_ut3_bracket_is_e13():
    m = ut3_model(GF2, 0, 2)
    e12 = m.basis_element(0, 0)
    e23 = m.basis_element(2, 0)
    value = m.bracket(e12, e23)
    assert m.format_element(value) == "E13"
    assert not value.is_zero()


def test_onedim_model():
    m = onedim_model(GF2, -3)
    assert not satisfies_multilinear(m, LiePoly.variable(GF2, Var(1, -3)))
    assert satisfies_multilinear(m, LiePoly.variable(GF2, Var(1, -2)))
    x = m.basis_element(-3)
    assert m.bracket(x, x).is_zero()


def test_parse_model():
    assert parse_model("u1", GF2).name == "u1"
    assert parse_model("w1", GF2).name == "w1"
    assert parse_model("ut3:0:2", GF2).name == "ut3:0:2"
    assert parse_model("ut3:-2:0", GF2).name == "ut3:-2:0"
    assert parse_model("onedim:-3", GF2).name == "onedim:-3"
    with pytest.raises(ValueError):
        parse_model("sl2", GF2)


def test_evaluate_examples():
    m = u1_model(GF2)
    sub = {
        Var(1, 2): m.basis_element(2),
        Var(2, 4): m.basis_element(4),
        Var(3, 1): m.basis_element(1),
    }
    # [e2, e4] = 2 e6 = 0 kills the first ordering
    f = LiePoly.monomial(GF2, (Var(1, 2), Var(2, 4), Var(3, 1)))
    assert evaluate(f, sub, m).is_zero()
    g = LiePoly.monomial(GF2, (Var(3, 1), Var(1, 2), Var(2, 4)))
    assert evaluate(g, sub, m) == ModelElement(GF2, {(7, 0): 1})

    single = LiePoly.variable(GF2, Var(1, 5))
    assert evaluate(single, {Var(1, 5): m.basis_element(5)}, m) == ModelElement(
        GF2, {(5, 0): 1}
    )

    h = LiePoly.monomial(GF2, (Var(1, 1), Var(2, 3)))
    sub2 = {Var(1, 1): m.basis_element(1), Var(2, 3): m.basis_element(3)}
    assert evaluate(h, sub2, m).is_zero()


def test_evaluate_rejects_bad_substitutions():
    m = u1_model(GF2)
    f = LiePoly.monomial(GF2, (Var(1, 2), Var(2, 4)))
    with pytest.raises(ValueError, match="misses"):
        evaluate(f, {Var(1, 2): m.basis_element(2)}, m)
    with pytest.raises(ValueError, match="x2\\^4"):
        evaluate(
            f,
            {Var(1, 2): m.basis_element(2), Var(2, 4): m.basis_element(3)},
            m,
        )


def test_satisfies_multilinear_examples():
    m = u1_model(GF2)
    assert satisfies_multilinear(m, LiePoly.monomial(GF2, (Var(1, 2), Var(2, 4))))
    assert not satisfies_multilinear(m, LiePoly.monomial(GF2, (Var(1, 1), Var(2, 2))))
    ut = ut3_model(GF2, 0, 2)
    assert satisfies_multilinear(ut, LiePoly.monomial(GF2, (Var(1, 0), Var(2, 4))))


def test_satisfies_multilinear_rejects_nonmultilinear():
    m = u1_model(GF2)
    square = LiePoly.monomial(GF2, (Var(1, 0), Var(2, 1), Var(1, 0)))
    with pytest.raises(ValueError):
        satisfies_multilinear(m, square)
