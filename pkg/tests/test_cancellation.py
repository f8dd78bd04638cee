from fractions import Fraction

import pytest

from laurentkit import AlgebraPresentation, AssertedFlags, MonomialSubalgebra
from laurentkit.cancellation import (
    AlgebraMap,
    HypothesisLedger,
    Isomorphism,
    LaurentHom,
    bg_cancel,
    characterize_laurent,
    laurent_cancel,
    localized_normalize,
    reconstruct_iso,
    unit_normalize,
)
from laurentkit.domains import ZZ
from laurentkit.errors import (
    DecompositionFailed,
    HypothesisFailed,
    MissingHypothesis,
    NoBranchApplies,
    NotRankOne,
)
from laurentkit.gradings import Grading
from laurentkit.lattice import determinant
from laurentkit.laurent import LaurentPoly


def units(*exps, domain=None, coefs=None):
    coefs = coefs or [1] * len(exps)
    kw = {"domain": domain} if domain else {}
    return MonomialSubalgebra.build([(f"u{i}", e, c, True) for i, (e, c) in enumerate(zip(exps, coefs))], None, **kw)


def cusp(names):
    return MonomialSubalgebra.build([("a", (2,), 1, False), ("b", (3,), 1, False)], names)


class TestNormalize:
    def test_two_three(self):
        trace = unit_normalize(units((2,), (3,)), Grading((1,)))
        assert trace.w == (1, (1,))
        (step,) = trace.steps
        assert (step.m, step.n) == (-1, 1)
        assert trace.degrees(Grading((1,))) == [2, 1]

    def test_redundant_unit_needs_no_step(self):
        trace = unit_normalize(units((2,), (4,)), Grading((1,)))
        assert trace.steps == [] and trace.w[1] == (2,)

    def test_integers_need_localization(self):
        a = units((2,), (3,), domain=ZZ, coefs=[2, 1])
        with pytest.raises(HypothesisFailed):
            unit_normalize(a, Grading((1,)))
        loc, trace = localized_normalize(a, Grading((1,)))
        assert str(loc.domain) == "ZZ[1/2]"
        assert trace.w == (Fraction(1, 2), (1,))

    def test_rank_and_grading_guards(self):
        with pytest.raises(NotRankOne):
            unit_normalize(units((1, 0), (0, 1)), Grading((1, 1)))
        with pytest.raises(HypothesisFailed):
            unit_normalize(units((1, -1)), Grading((1, 1)))
        with pytest.raises(HypothesisFailed):
            unit_normalize(MonomialSubalgebra.build([("a", (1,), 1, False)], ["t"]), Grading((1,)))


class TestReconstruct:
    def test_cusp_twist(self):
        A, B = cusp(["t"]), cusp(["s"])
        F = LaurentHom.build(A, B, {"t": "s", "y": "2*z^-1"}, {"s": "t", "z": "2*y^-1"}, ["y"], ["z"])
        rep = reconstruct_iso(F)
        assert rep.E.tolist() == [[-1]] and rep.D.tolist() == [[-1]]
        assert not rep.iso.failures()
        assert rep.ledger.status("D*E = I") == "verified"

    def test_unit_image_must_avoid_new_variables(self):
        A = units((1,))
        T = MonomialSubalgebra.torus(1, names=["s"])
        F = LaurentHom.build(A, T, {"t": "s*z", "y": "z"}, {"s": "t*y^-1", "z": "y"}, ["y"], ["z"])
        with pytest.raises(HypothesisFailed):
            reconstruct_iso(F)

    def test_non_unit_image_of_new_variable(self):
        A, B = cusp(["t"]), cusp(["s"])
        F = LaurentHom.build(A, B, {"t": "s", "y": "s^2*z"}, {"s": "t", "z": "t^-2*y"}, ["y"], ["z"])
        with pytest.raises(DecompositionFailed):
            reconstruct_iso(F)


class TestCharacterize:
    def test_presentation_needs_assertions(self):
        h = AlgebraPresentation.build(["x", "y"], ["x*y - 1"], {"x": "y"})
        with pytest.raises(MissingHypothesis):
            characterize_laurent(h)
        hz = AlgebraPresentation.build(["x", "y"], ["x*y - 1"], {"x": "y"}, ZZ, asserted=AssertedFlags(True, 1))
        with pytest.raises(HypothesisFailed):
            characterize_laurent(hz)

    def test_monomial_line(self):
        v = characterize_laurent(units((2,), (3,)))
        assert v.is_laurent_line and v.status == "true"

    def test_base_not_closed_is_a_negative_verdict(self):
        a = MonomialSubalgebra.build(
            [("u", (1, 0), 1, True), ("v", (0, 1), 1, False)], ["u", "v"], base=[("r", (0, 2), 1, False)]
        )
        v = characterize_laurent(a)
        assert not v.is_laurent_line
        assert v.ledger.status("R algebraically closed in A") == "failed"


class TestTorus:
    def test_rank_mismatch(self):
        A = units((1, 0), (0, 1))
        S = MonomialSubalgebra.torus(1, names=["s"])
        F = LaurentHom.build(A, S, {"t1": "s", "t2": "z1", "y1": "z2", "y2": "z2"}, None, ["y1", "y2"], ["z1", "z2"])
        with pytest.raises(HypothesisFailed):
            bg_cancel(F)

    def test_rank_two_torus(self):
        A = units((1, 0), (0, 1))
        T2 = MonomialSubalgebra.torus(2, names=["s1", "s2"])
        F = LaurentHom.build(A, T2, {"t1": "s1*z", "t2": "s2", "y": "z"}, {"s1": "t1*y^-1", "s2": "t2", "z": "y"}, ["y"], ["z"])
        assert bg_cancel(F).m == 2

    def test_twist(self):
        A = units((1,))
        S = MonomialSubalgebra.torus(1, names=["s"])
        F = LaurentHom.build(A, S, {"t": "2*s*z", "y": "s^2*z"}, {"s": "2*t^-1*y", "z": "1/4*t^2*y^-1"}, ["y"], ["z"])
        res = bg_cancel(F)
        assert res.m == 1 and abs(determinant(res.E)) == 1


class TestDispatch:
    def test_branch_a(self):
        A, B = cusp(["t"]), cusp(["s"])
        F = LaurentHom.build(A, B, {"t": "s", "y": "z"}, {"s": "t", "z": "y"}, ["y"], ["z"])
        assert laurent_cancel(F).branch == "a"

    def test_branch_b(self):
        flags = AssertedFlags(transcendence_degree=1)
        C = AlgebraPresentation.build(["x", "y"], ["x^2 - y^3 - 1"], asserted=flags, name="C")
        D = AlgebraPresentation.build(["u", "v"], ["u^2 - v^3 - 1"], asserted=flags, name="D")
        F = LaurentHom.build(C, D, {"x": "u", "y": "v", "w": "z^-1"}, {"u": "x", "v": "y", "z": "w^-1"}, ["w"], ["z"])
        rep = laurent_cancel(F)
        assert rep.branch == "b" and rep.ledger.status("A = B") == "verified"

    def test_branch_c(self):
        A = units((1,))
        S = MonomialSubalgebra.torus(1, names=["s"])
        F = LaurentHom.build(A, S, {"t": "2*s*z", "y": "s^2*z"}, {"s": "2*t^-1*y", "z": "1/4*t^2*y^-1"}, ["y"], ["z"])
        rep = laurent_cancel(F)
        assert rep.branch == "c" and not rep.iso.failures()

    def test_no_branch_over_integers(self):
        A = units((1,), domain=ZZ)
        S = MonomialSubalgebra.torus(1, ZZ, names=["s"])
        F = LaurentHom.build(A, S, {"t": "s*z", "y": "z"}, {"s": "t*y^-1", "z": "y"}, ["y"], ["z"])
        with pytest.raises(NoBranchApplies):
            laurent_cancel(F)


def test_isomorphism_detects_non_inverse():
    T = MonomialSubalgebra.torus(1, names=["t"])
    t = LaurentPoly.variable(0, 1, T.element_domain)
    iso = Isomorphism(AlgebraMap(T, T, (2 * t,)), AlgebraMap(T, T, (t,)))
    assert iso.failures() and not iso.is_verified()


def test_ledger_keeps_latest_status():
    led = HypothesisLedger()
    led.asserted("h")
    led.verified("h", "checked")
    assert led.status("h") == "verified" and len(led.as_list()) == 2
