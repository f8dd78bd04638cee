import pytest

from laurentkit import AlgebraPresentation
from laurentkit.errors import NotARelation, NotHomogeneous, ZeroPolynomial
from laurentkit.gradings import (
    Grading,
    extend_to_laurent_vars,
    grading_lattice,
    homogeneous_components,
    leading_form,
    presentation_neutral,
    restrict_grading,
    support,
    top_form_relation,
)
from laurentkit.laurent import LaurentPoly
from laurentkit.syntax import parse_poly

XY = ["x", "y"]


def P(text, names=XY):
    return parse_poly(text, names)


def test_components_sum_back():
    p = P("x^2*y + 3*x - y^-1 + 5")
    g = Grading((1, 1))
    comps = homogeneous_components(g, p)
    assert sorted(comps) == [-1, 0, 1, 3]
    total = LaurentPoly.zero(2)
    for c in comps.values():
        total = total + c
        assert g.is_homogeneous(c)
    assert total == p
    assert support(g, p) == frozenset({-1, 0, 1, 3})


def test_leading_form_and_errors():
    g = Grading((2, -1))
    d, top = leading_form(g, P("x^2 + x*y + y^-3"))
    assert d == 4 and top == P("x^2")
    with pytest.raises(ZeroPolynomial):
        leading_form(g, LaurentPoly.zero(2))
    with pytest.raises(NotHomogeneous):
        g.poly_degree(P("x + y"))


def test_top_forms_of_relation_cancel():
    # (x^2 - 1) * a^0 + (-1) * a^2 = 0 with a = x + y
    t = ["t"]
    a = parse_poly("t + 1", t)
    h0 = parse_poly("t^2 + 2*t + 1", t)
    h2 = parse_poly("-1", t)
    tops = top_form_relation(Grading((1,)), [(h0, 0), (h2, 2)], a)
    assert [i for i, _ in tops] == [0, 2]
    with pytest.raises(NotARelation):
        top_form_relation(Grading((1,)), [(h0, 0)], a)


def test_extend_and_restrict():
    g = extend_to_laurent_vars(Grading((1, 2)), 2, (0, 5))
    assert g.weights == (1, 2, 0, 5)
    assert restrict_grading(g, [1, 3]).weights == (2, 5)


def test_cubic_has_no_gradings():
    cubic = AlgebraPresentation.build(XY, ["x^2 - y^3 - 1"])
    assert grading_lattice(cubic).rank == 0
    rep = presentation_neutral(cubic)
    assert rep.algebra_neutral and rep.neutral_generators == ("x", "y")


def test_hyperbola_grading():
    h = AlgebraPresentation.build(XY, ["x*y - 1"], {"x": "y"})
    lat = grading_lattice(h)
    assert lat.rank == 1 and lat.admits((1, -1)) and not lat.admits((1, 1))
    assert presentation_neutral(h).neutral_generators == ()


def test_free_generator_moves():
    line = AlgebraPresentation.build(["x"])
    rep = presentation_neutral(line)
    assert not rep.algebra_neutral and rep.neutral_generators == ()


def test_base_generators_have_degree_zero():
    a = AlgebraPresentation.build(["r", "x"], base=["r"])
    lat = grading_lattice(a)
    assert all(g.weights[0] == 0 for g in lat.gradings())
