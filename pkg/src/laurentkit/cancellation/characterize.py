"""Decide whether A is a Laurent polynomial ring ``R[w, w^-1]``."""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional, Tuple

from ..algebras import AlgebraPresentation, MonomialSubalgebra
from ..errors import HypothesisFailed, MissingHypothesis
from ..gradings import Grading, grading_lattice
from ..lattice import IntMatrix, LatticeBasis, ext_gcd, integer_kernel, lattice_membership
from ..laurent import LaurentPoly
from .maps import HypothesisLedger
from .normalize import NormalizationTrace, unit_normalize

TRUE = "true"
FALSE = "false"
FALSE_PRESENTATION = "false under presentation gradings"


@dataclass
class Verdict:
    is_laurent_line: bool
    status: str
    witness_w: Optional[LaurentPoly] = None
    grading: Optional[Grading] = None
    reason: str = ""
    counterexample: Optional[Tuple[int, ...]] = None
    trace: Optional[NormalizationTrace] = None
    ledger: HypothesisLedger = field(default_factory=HypothesisLedger)


def _grading_over_base(a: MonomialSubalgebra):
    """Weight gradings of the torus that vanish on R, as a kernel lattice."""
    if a.base:
        return integer_kernel(IntMatrix([g.exponent for g in a.base], cols=a.ambient_rank))
    return LatticeBasis.full(a.ambient_rank)


def characterize_monomial(a: MonomialSubalgebra) -> Verdict:
    ledger = HypothesisLedger()
    closed, offender = a.base_algebraically_closed()
    if not closed:
        ledger.failed("R algebraically closed in A", f"{offender.name} is algebraic over R but not in R")
        return Verdict(False, FALSE, reason=f"{offender.name} is algebraic over R but not in R", ledger=ledger)
    ledger.verified("R algebraically closed in A", "saturation of the base lattice")
    trdeg = a.transcendence_degree()
    if trdeg != 1:
        ledger.failed("tr.deg = 1", f"tr.deg = {trdeg}")
        return Verdict(False, FALSE, reason=f"transcendence degree is {trdeg}", ledger=ledger)
    ledger.verified("tr.deg = 1", "lattice rank difference")

    weights = _grading_over_base(a)
    units = a.unit_gens
    chosen = None
    for wvec in weights.basis:
        g = Grading(wvec)
        if any(g.degree(u.exponent) for u in units):
            chosen = g
            break
    if chosen is None:
        ledger.failed("A* not neutral", "every unit has degree 0 under every weight grading over R")
        return Verdict(False, FALSE, reason="all units are neutral", ledger=ledger)
    ledger.verified("A* not neutral", f"grading {list(chosen.weights)}")

    trace = unit_normalize(a, chosen)
    c, e = trace.w
    w = a.monomial(e, c)
    # A = R[w, w^-1] iff every generator is (R-multiple of) w^k times a monomial of R
    gens = [e] + [b.exponent for b in a.base]
    for g in a.gens:
        coords = lattice_membership(g.exponent, gens, a.ambient_rank)
        if coords is None or any(x < 0 for x in coords[1:]):
            basis = ", ".join(str(list(v)) for v in gens)
            reason = f"{g.name} has exponent {list(g.exponent)} outside span{{{basis}}}"
            ledger.failed("A = R[w, w^-1]", reason)
            return Verdict(
                False, FALSE, w, chosen, reason, counterexample=g.exponent, trace=trace, ledger=ledger
            )
    ledger.verified("A = R[w, w^-1]", "every generator is a monomial in w and R")
    if not a.domain.is_field:
        ledger.asserted("coefficient ring is a field", f"{a.domain} is not a field; verdict decided directly")
    return Verdict(True, TRUE, w, chosen, "A is generated by w^{+-1} over R", trace=trace, ledger=ledger)


def _bezout_unit(degrees):
    """Integer combination ``x`` of the degrees with ``sum x_i deg_i = gcd``."""
    coeffs = [0] * len(degrees)
    g = 0
    for i, d in enumerate(degrees):
        if d == 0:
            continue
        if g == 0:
            g, coeffs[i] = abs(d), (1 if d > 0 else -1)
            continue
        h, s, t = ext_gcd(g, d)
        coeffs = [s * x for x in coeffs]
        coeffs[i] = t
        g = h
    return g, coeffs


def characterize_presentation(p: AlgebraPresentation) -> Verdict:
    ledger = HypothesisLedger()
    if not p.domain.is_field:
        raise HypothesisFailed(f"the coefficient ring {p.domain} is not a field")
    ledger.verified("coefficient ring is a field")
    if not p.asserted.base_algebraically_closed:
        raise MissingHypothesis("assert base_alg_closed: it cannot be decided from a presentation")
    ledger.asserted("k algebraically closed in A")
    if p.asserted.transcendence_degree is None:
        raise MissingHypothesis("assert trdeg=1: it cannot be decided from a presentation")
    if p.asserted.transcendence_degree != 1:
        ledger.failed("tr.deg = 1", f"asserted tr.deg = {p.asserted.transcendence_degree}")
        return Verdict(False, FALSE, reason="transcendence degree is not 1", ledger=ledger)
    ledger.asserted("tr.deg = 1")

    lattice = grading_lattice(p).lattice
    primaries = [i for i, _ in p.units]
    for wvec in lattice.basis:
        degrees = [wvec[i] for i in primaries]
        if any(degrees):
            g = Grading(wvec)
            ledger.verified("A* not neutral", f"grading {list(wvec)} of the generators")
            _, coeffs = _bezout_unit(degrees)
            exp = [0] * p.rank
            for i, k in zip(primaries, coeffs):
                exp[i] += k
            w = LaurentPoly({tuple(exp): 1}, p.rank, p.domain)
            ledger.asserted("declared units generate A*", "units are read off the presentation")
            return Verdict(True, TRUE, w, g, "a declared unit has nonzero degree", ledger=ledger)
    ledger.failed("A* not neutral", "no presentation grading gives a declared unit nonzero degree")
    return Verdict(False, FALSE_PRESENTATION, reason="no presentation grading moves a unit", ledger=ledger)


def characterize_laurent(a) -> Verdict:
    if isinstance(a, MonomialSubalgebra):
        return characterize_monomial(a)
    return characterize_presentation(a)
