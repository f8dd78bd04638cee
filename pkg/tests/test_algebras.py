from fractions import Fraction

import pytest

from laurentkit import AlgebraPresentation, AssertedFlags, MonomialSubalgebra
from laurentkit.algebras import algebraic_closure_of_unit, localize, unit_lattice, units_mod_scalars
from laurentkit.domains import ZZ
from laurentkit.errors import NotAUnit, ZeroElement, ZeroExponent
from laurentkit.laurent import LaurentPoly


def test_presentation_adds_inverse_relation():
    a = AlgebraPresentation.build(["x", "xinv"], units={"x": "xinv"})
    assert a.is_unit(a.variable(0))
    assert any(a.format(r) == "x*xinv - 1" for r in a.relations)
    assert a.normalize(a.parse("x*xinv")) == LaurentPoly.one(2)


def test_laurent_extension_bumps_trdeg():
    a = AlgebraPresentation.build(["x"], asserted=AssertedFlags(transcendence_degree=1))
    ext = a.laurent_extension(["y"])
    assert ext.names[-1] == "y" and ext.asserted.transcendence_degree == 2
    assert ext.is_unit(ext.variable(1))


def test_monomial_units_and_trdeg():
    a = MonomialSubalgebra.build([("a", (2, 0), 1, True), ("b", (0, 1), 1, False)], ["u", "v"])
    assert unit_lattice(a).rank == 1
    assert a.transcendence_degree() == 2
    assert a.is_unit(a.monomial((-2, 0), 1))
    assert not a.is_unit(a.monomial((0, 1), 1))
    assert units_mod_scalars(a) == [(Fraction(1), (2, 0))]


def test_base_closure_witness():
    # v is in A and v^2 is in R, but v is not
    a = MonomialSubalgebra.build([("u", (1, 0), 1, True), ("v", (0, 1), 1, False)], ["u", "v"], base=[("r", (0, 2), 1, False)])
    ok, offender = a.base_algebraically_closed()
    assert not ok and offender is not None
    closed = MonomialSubalgebra.build([("u", (1, 0), 1, True)], ["u", "v"], base=[("r", (0, 2), 1, False)])
    assert closed.base_algebraically_closed()[0]


def test_closure_of_unit():
    a = MonomialSubalgebra.build([("a", (2,), 1, True), ("b", (3,), 1, True)], ["t"])
    closure, w = algebraic_closure_of_unit(a, (1, (2,)))
    assert closure.format(w) == "t"
    with pytest.raises(ZeroExponent):
        algebraic_closure_of_unit(a, (1, (0,)))
    with pytest.raises(NotAUnit):
        algebraic_closure_of_unit(MonomialSubalgebra.build([("b", (1,), 1, False)], ["t"]), (1, (1,)))


def test_full_torus_and_coefficients():
    t = MonomialSubalgebra.torus(2, ZZ)
    assert t.is_full_torus()
    assert not t.is_unit(t.monomial((1, 0), 2))


def test_localize_presentation():
    a = AlgebraPresentation.build(["x"])
    loc = localize(a, "x")
    assert loc.presentation.is_unit(loc.presentation.variable(0))
    assert loc.extend_grading((1,)) == (1, -1)
    with pytest.raises(ZeroElement):
        localize(a, "0")
    assert str(localize(AlgebraPresentation.build(["x"], domain=ZZ), "2").presentation.domain) == "ZZ[1/2]"
