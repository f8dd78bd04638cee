"""Recover an isomorphism ``A -> B`` from ``F: A[y^{+-1}] -> B[z^{+-1}]`` when ``F(A*)`` lies in ``B``."""
from __future__ import annotations

from dataclasses import dataclass
from typing import List, Tuple

from ..errors import DecompositionFailed, HypothesisFailed, MalformedHom, NotUnimodular
from ..lattice import IntMatrix
from ..laurent import LaurentPoly, invert_unit_poly, is_unit_poly
from .maps import AlgebraMap, HypothesisLedger, Isomorphism, LaurentHom


@dataclass(frozen=True)
class IsoReport:
    E: IntMatrix
    D: IntMatrix
    b: Tuple[LaurentPoly, ...]
    a: Tuple[LaurentPoly, ...]
    ideal_generators: Tuple[LaurentPoly, ...]
    iso: Isomorphism
    ledger: HypothesisLedger


def split_unit(ext, base_rank: int, p: LaurentPoly, what: str) -> Tuple[LaurentPoly, Tuple[int, ...]]:
    """Write a unit ``p`` of ``base[x_1^{+-1}..x_n^{+-1}]`` as ``c * prod x_k^{e_k}`` with ``c`` a unit of the base."""
    if not ext.is_unit(p):
        raise DecompositionFailed(f"{what} = {ext.format(p)} is not a unit")
    coef, exp = is_unit_poly(p)
    base_part = LaurentPoly({exp[:base_rank] + (0,) * (len(exp) - base_rank): coef}, p.rank, p.domain)
    return base_part.restrict_rank(range(base_rank)), exp[base_rank:]


def _lift(p: LaurentPoly, extra: int) -> LaurentPoly:
    return p.extend_rank(extra)


def _monomial_product(factors, exponents, rank, domain) -> LaurentPoly:
    out = LaurentPoly.one(rank, domain)
    for f, k in zip(factors, exponents):
        if k > 0:
            out = out * f ** k
        elif k < 0:
            out = out * invert_unit_poly(f) ** (-k)
    return out


def reconstruct_iso(F: LaurentHom) -> IsoReport:
    A, B, n = F.source_base, F.target_base, F.n
    src, tgt = F.source, F.target
    if F.backward is None:
        raise MalformedHom("an inverse of F is required")
    if F.forward.basis is not None or F.backward.basis is not None:
        raise MalformedHom("F must be given on coordinate variables")
    ledger = HypothesisLedger()

    bad = F.iso.failures()
    if bad:
        raise MalformedHom("the supplied inverse does not invert F on: " + "; ".join(bad))
    ledger.verified("F_invertible", "both composites fix all generators")

    ra, rb = A.rank, B.rank
    for u in A.unit_generators():
        img = F.forward(_lift(u, n))
        if any(any(e[rb:]) for e in img.terms):
            ledger.failed("F(A*) in B", f"F({A.format(u)}) = {tgt.format(img)}")
            raise HypothesisFailed(f"F({A.format(u)}) = {tgt.format(img)} does not lie in {B.name}")
    ledger.verified("F(A*) in B", "images of all unit generators of A avoid the new variables")

    b, rows = [], []
    for i in range(n):
        y = LaurentPoly.variable(ra + i, src.rank, src.element_domain)
        bi, ei = split_unit(tgt, rb, F.forward(y), f"F({src.names[ra + i]})")
        b.append(bi)
        rows.append(ei)
    a, drows = [], []
    for i in range(n):
        z = LaurentPoly.variable(rb + i, tgt.rank, tgt.element_domain)
        ai, di = split_unit(src, ra, F.backward(z), f"F^-1({tgt.names[rb + i]})")
        a.append(ai)
        drows.append(di)
    E = IntMatrix(rows, cols=n)
    D = IntMatrix(drows, cols=n)
    if D @ E != IntMatrix.identity(n):
        raise NotUnimodular(f"D*E = {(D @ E).tolist()} is not the identity")
    ledger.verified("D*E = I")

    dom_b = B.element_domain
    for i in range(n):
        fa = F.forward(_lift(a[i], n))
        if any(any(e[rb:]) for e in fa.terms):
            raise HypothesisFailed(f"F(a_{i + 1}) does not lie in {B.name}")
        fa = fa.restrict_rank(range(rb))
        check = B.normalize(fa * _monomial_product(b, D.row(i), rb, dom_b))
        if check != LaurentPoly.one(rb, dom_b):
            raise HypothesisFailed(f"F(a_{i + 1}) * prod b_k^d_ik = {B.format(check)}, expected 1")
    ledger.verified("F(a_i) prod b_k^d_ik = 1")

    # z_k -> c_k with c_k = prod_i b_i^{-D[k][i]} sends every F(y_i) to 1
    c = [
        B.normalize(_monomial_product(b, [-D[k, i] for i in range(n)], rb, dom_b)) for k in range(n)
    ]
    to_b = AlgebraMap(
        tgt,
        B,
        tuple(LaurentPoly.variable(k, rb, dom_b) for k in range(rb)) + tuple(c),
    )
    y_to_one = AlgebraMap(
        src,
        A,
        tuple(LaurentPoly.variable(k, ra, A.element_domain) for k in range(ra))
        + tuple(LaurentPoly.one(ra, A.element_domain) for _ in range(n)),
    )
    forward = AlgebraMap(A, B, tuple(to_b(F.forward(_lift(LaurentPoly.variable(k, ra, A.element_domain), n))) for k in range(ra)))
    backward = AlgebraMap(B, A, tuple(y_to_one(F.backward(_lift(LaurentPoly.variable(k, rb, dom_b), n))) for k in range(rb)))
    iso = Isomorphism(forward, backward)
    bad = iso.failures()
    if bad:
        raise HypothesisFailed("induced map is not an isomorphism on: " + "; ".join(bad))
    ledger.verified("induced map is an isomorphism", "both composites fix all generators")

    ideal = tuple(
        tgt.normalize(F.forward(LaurentPoly.variable(ra + i, src.rank, src.element_domain)) - 1) for i in range(n)
    )
    return IsoReport(E, D, tuple(b), tuple(a), ideal, iso, ledger)
