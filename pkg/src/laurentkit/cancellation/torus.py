"""Cancel Laurent variables against a torus: ``A[y^{+-1}] = R^{[+-(m+n)]}`` gives ``A = R^{[+-m]}``."""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Tuple

from ..algebras import MonomialSubalgebra, units_mod_scalars
from ..automorphisms import MonomialAutomorphism, apply
from ..errors import DecompositionFailed, HypothesisFailed, MalformedHom, NotUnimodular
from ..lattice import IntMatrix, determinant, lattice_membership
from ..laurent import LaurentPoly, is_unit_poly
from .maps import AlgebraMap, default_ext_names, HypothesisLedger, Isomorphism, LaurentHom


@dataclass(frozen=True)
class TorusCancellation:
    m: int
    E: IntMatrix
    scalars: Tuple[Fraction, ...]
    units: Tuple[LaurentPoly, ...]
    iso: Isomorphism
    automorphism: MonomialAutomorphism
    ledger: HypothesisLedger


def standard_torus(m: int, domain, prefix: str = "s", name: str = "S") -> MonomialSubalgebra:
    names = [prefix] if m == 1 else [f"{prefix}{i + 1}" for i in range(m)]
    return MonomialSubalgebra.torus(m, domain, names, name)


def bg_cancel(alpha: LaurentHom, torus_names=None) -> TorusCancellation:
    A = alpha.source_base
    if not isinstance(A, MonomialSubalgebra):
        raise HypothesisFailed("torus cancellation needs A in the monomial model")
    if A.base:
        raise HypothesisFailed("torus cancellation needs R to be the coefficient ring")
    C, D, n = alpha.source, alpha.target, alpha.n
    if not isinstance(D, MonomialSubalgebra) or not D.is_full_torus():
        raise HypothesisFailed("the target of alpha must be a Laurent polynomial ring over R")
    ledger = HypothesisLedger()
    if alpha.backward is not None:
        bad = alpha.iso.failures()
        if bad:
            raise MalformedHom("the supplied inverse does not invert alpha on: " + "; ".join(bad))
        ledger.verified("alpha invertible", "both composites fix all generators")
    else:
        ledger.asserted("alpha invertible")

    w = units_mod_scalars(A)
    m = len(w)
    if m + n != D.rank:
        ledger.failed("unit rank", f"A*/R* has rank {m}, expected {D.rank - n}")
        raise HypothesisFailed(f"A*/R* has rank {m} but the target torus has rank {D.rank} = m + {n} needs m = {D.rank - n}")
    ledger.verified("A* = R* x Z^m", f"m = {m}")

    # every generator of A must be a unit monomial in the w_i (A = R[A*])
    w_exps = [e for _, e in w]
    for g in A.gens:
        coords = lattice_membership(g.exponent, w_exps, A.ambient_rank)
        if coords is None:
            raise HypothesisFailed(f"generator {g.name} is not in R[A*]")
        c = Fraction(g.coefficient)
        for (wc, _), k in zip(w, coords):
            c /= Fraction(wc) ** k
        if c not in A.domain:
            raise HypothesisFailed(f"generator {g.name} is not in R[A*]")
    ledger.verified("A = R[A*]")

    dom = C.element_domain
    unit_elems = [LaurentPoly({e + (0,) * n: c}, C.rank, dom) for c, e in w]
    unit_elems += [LaurentPoly.variable(A.ambient_rank + j, C.rank, dom) for j in range(n)]
    rows, scalars = [], []
    for k, u in enumerate(unit_elems):
        img = alpha.forward(u)
        unit = is_unit_poly(img)
        if unit is None:
            raise DecompositionFailed(f"alpha sends a unit to {D.format(img)}, which is not a unit")
        if not A.domain.is_unit(unit[0]):
            raise DecompositionFailed(f"alpha sends a unit to {D.format(img)}, whose coefficient is not a unit of R")
        scalars.append(unit[0])
        rows.append(unit[1])
    E = IntMatrix(rows, cols=D.rank)
    if determinant(E) not in (1, -1):
        raise NotUnimodular(f"exponent matrix {E.tolist()} of the unit images is not unimodular")
    ledger.verified("unit images form a torus basis", f"det E = {determinant(E)}")

    S = standard_torus(m, A.domain, *(torus_names or ()))
    sdom = S.element_domain
    fwd_imgs = tuple(LaurentPoly({tuple(int(i == k) for i in range(m)): 1 / Fraction(c)}, m, sdom) for k, (c, _) in enumerate(w))
    forward = AlgebraMap(A, S, fwd_imgs, basis=tuple(e for _, e in w))
    backward = AlgebraMap(S, A, tuple(LaurentPoly({e: c}, A.ambient_rank, A.element_domain) for c, e in w))
    iso = Isomorphism(forward, backward)
    bad = iso.failures()
    if bad:
        raise HypothesisFailed("A -> R^[+-m] is not an isomorphism on: " + "; ".join(bad))
    ledger.verified("A = R^[+-m]", "both composites fix all generators")

    # extension of the iso to C, followed by the monomial automorphism, must reproduce alpha
    auto = MonomialAutomorphism(E, tuple(scalars), dom)
    S_ext = S.laurent_extension(default_ext_names("y", n, S.names))
    ext_forward = AlgebraMap(
        C,
        S_ext,
        tuple(LaurentPoly({tuple(int(i == k) for i in range(m + n)): 1 / Fraction(c)}, m + n, sdom) for k, (c, _) in enumerate(w))
        + tuple(LaurentPoly.variable(m + j, m + n, sdom) for j in range(n)),
        basis=tuple(e + (0,) * n for _, e in w) + tuple(tuple(int(i == A.ambient_rank + j) for i in range(C.rank)) for j in range(n)),
    )
    for g in C.generators():
        expected = alpha.forward(g)
        got = apply(auto, ext_forward(g).change_domain(dom))
        if got != expected.change_domain(dom):
            raise HypothesisFailed(f"extension does not reproduce alpha on {C.format(g)}")
    ledger.verified("extension reproduces alpha", "on all generators of A[y]")
    return TorusCancellation(m, E, tuple(scalars), tuple(unit_elems[:m]), iso, auto, ledger)
