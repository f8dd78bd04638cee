"""Pick a provable route to ``A = B`` from an isomorphism ``A[y^{+-1}] = B[z^{+-1}]``."""
from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from ..algebras import MonomialSubalgebra, unit_lattice
from ..errors import HypothesisFailed, MissingHypothesis, NoBranchApplies
from ..gradings import presentation_neutral
from ..lattice import saturate
from ..laurent import LaurentPoly
from .characterize import Verdict, characterize_laurent
from .maps import AlgebraMap, HypothesisLedger, Isomorphism, LaurentHom
from .reconstruct import IsoReport, reconstruct_iso
from .torus import TorusCancellation, bg_cancel, standard_torus


@dataclass
class CancelReport:
    branch: str
    iso: Isomorphism
    ledger: HypothesisLedger
    reconstruction: Optional[IsoReport] = None
    verdict: Optional[Verdict] = None
    torus: Optional[TorusCancellation] = None


def _check_trdeg(a, ledger: HypothesisLedger) -> None:
    if isinstance(a, MonomialSubalgebra):
        t = a.transcendence_degree()
        if t != 1:
            ledger.failed("tr.deg_R A = 1", f"tr.deg = {t}")
            raise HypothesisFailed(f"tr.deg of {a.name} over R is {t}, not 1")
        ledger.verified("tr.deg_R A = 1", "lattice rank difference")
        return
    t = a.asserted.transcendence_degree
    if t is None:
        raise MissingHypothesis(f"tr.deg of {a.name} cannot be decided from a presentation; assert trdeg=1")
    if t != 1:
        ledger.failed("tr.deg_R A = 1", f"asserted tr.deg = {t}")
        raise HypothesisFailed(f"asserted tr.deg of {a.name} is {t}, not 1")
    ledger.asserted("tr.deg_R A = 1")


def _units_trivial(a, ledger: HypothesisLedger) -> bool:
    if isinstance(a, MonomialSubalgebra):
        if unit_lattice(a).rank == 0:
            ledger.verified("(a) R[A*] algebraic over R", "unit lattice is zero")
            return True
        ledger.failed("(a) R[A*] algebraic over R", f"unit lattice has rank {unit_lattice(a).rank}")
        return False
    if a.asserted.units_trivial:
        ledger.asserted("(a) R[A*] algebraic over R", "units_trivial asserted")
        return True
    ledger.failed("(a) R[A*] algebraic over R", "not asserted and not decidable from a presentation")
    return False


def _units_neutral(a, ledger: HypothesisLedger) -> bool:
    if isinstance(a, MonomialSubalgebra):
        closure = saturate(a.base_lattice())
        if all(u.exponent in closure for u in a.unit_gens):
            ledger.verified("(b) A* in N_R(A)", "unit exponents vanish under every weight grading over R")
            return True
        ledger.failed("(b) A* in N_R(A)", "some unit has nonzero degree under a weight grading over R")
        return False
    report = presentation_neutral(a)
    units = [a.names[i] for i, _ in a.units]
    moving = [u for u in units if u not in report.neutral_generators]
    if moving:
        ledger.failed("(b) A* in N_R(A)", f"units {', '.join(moving)} have nonzero degree")
        return False
    ledger.verified("(b) A* in N_R(A)", "declared units are neutral for presentation gradings")
    ledger.asserted("declared units generate A*", report.caveat)
    return True


def _field_branch(F: LaurentHom, ledger: HypothesisLedger) -> CancelReport:
    A, B = F.source_base, F.target_base
    if not isinstance(A, MonomialSubalgebra) or not isinstance(B, MonomialSubalgebra):
        raise NoBranchApplies("branch (c) needs both algebras in the monomial model")
    if F.backward is None:
        raise NoBranchApplies("branch (c) needs the inverse of F")
    verdict = characterize_laurent(A)
    ledger.extend(verdict.ledger, "(c) ")
    if not verdict.is_laurent_line:
        raise NoBranchApplies(f"branch (c): {A.name} is not certified to be R[w, w^-1]: {verdict.reason}")
    # A = R[w^+-1] via w -> s, then alpha = tau o F^-1 : B[z^+-1] -> R^[+-(1+n)]
    w = verdict.witness_w
    exp, coef = next(iter(w.terms.items()))
    S = standard_torus(1, A.domain)
    tau = Isomorphism(
        AlgebraMap(A, S, (LaurentPoly({(1,): 1 / coef}, 1, S.element_domain),), basis=(exp,)),
        AlgebraMap(S, A, (w,)),
    )
    if not tau.is_verified():
        raise NoBranchApplies("branch (c): the characterization witness does not give an isomorphism")
    n = F.n
    T = standard_torus(1 + n, A.domain, name="T")
    ext_basis = (exp + (0,) * n,) + tuple(tuple(int(i == A.rank + j) for i in range(A.rank + n)) for j in range(n))
    tau_ext = AlgebraMap(
        F.source,
        T,
        (LaurentPoly({(1,) + (0,) * n: 1 / coef}, 1 + n, T.element_domain),)
        + tuple(LaurentPoly.variable(1 + j, 1 + n, T.element_domain) for j in range(n)),
        basis=ext_basis,
    )
    tau_ext_inv = AlgebraMap(
        T, F.source, (w.extend_rank(n),) + tuple(LaurentPoly.variable(A.rank + j, A.rank + n, F.source.element_domain) for j in range(n))
    )
    alpha = LaurentHom(B, T, n, F.backward.then(tau_ext), tau_ext_inv.then(F.forward), "alpha")
    torus = bg_cancel(alpha)
    ledger.extend(torus.ledger, "(c) ")
    iso = tau.then(torus.iso.inverse())
    return CancelReport("c", iso, ledger, verdict=verdict, torus=torus)


def _base_generators(a):
    return a.base if isinstance(a, MonomialSubalgebra) else tuple(a.base_generators)


def laurent_cancel(F: LaurentHom) -> CancelReport:
    """Return a verified isomorphism ``A -> B`` and the branch that certified it."""
    A = F.source_base
    ledger = HypothesisLedger()
    _check_trdeg(A, ledger)
    report = None
    if _units_trivial(A, ledger):
        report = CancelReport("a", None, ledger)
    elif _units_neutral(A, ledger):
        report = CancelReport("b", None, ledger)
    if report is not None:
        rec = reconstruct_iso(F)
        ledger.extend(rec.ledger, f"({report.branch}) ")
        report.iso, report.reconstruction = rec.iso, rec
    elif A.domain.is_field and not _base_generators(A):
        ledger.verified("(c) R is a field", str(A.domain))
        report = _field_branch(F, ledger)
    else:
        ledger.failed("(c) R is a field", f"R = {A.domain}" + (" with extra generators" if _base_generators(A) else ""))
        raise NoBranchApplies("none of the branches (a), (b), (c) can be certified")
    bad = report.iso.failures()
    if bad:
        raise HypothesisFailed("the returned map is not an isomorphism on: " + "; ".join(bad))
    ledger.verified("A = B", "both composites fix all generators")
    return report
