"""Reduce a rank-one unit group to a single generator by repeated Bezout steps."""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import gcd
from typing import List, Optional, Tuple

from ..algebras import MonomialGenerator, MonomialSubalgebra, unit_lattice
from ..domains import CoefficientDomain, localize_domain
from ..errors import HypothesisFailed, NotRankOne
from ..gradings import Grading
from ..lattice import LatticeBasis, ext_gcd, lattice_membership
from ..laurent import LaurentPoly

Monomial = Tuple[Fraction, Tuple[int, ...]]


@dataclass(frozen=True)
class NormalizationStep:
    u: Monomial
    v: Monomial
    deg_u: int
    deg_v: int
    d: int
    a: int
    b: int
    m: int
    n: int
    r: Fraction
    w: Monomial
    localized_at: Optional[Fraction] = None


@dataclass
class NormalizationTrace:
    seed: Monomial
    steps: List[NormalizationStep] = field(default_factory=list)
    w: Optional[Monomial] = None
    domain: Optional[CoefficientDomain] = None
    localizations: List[Fraction] = field(default_factory=list)

    def degrees(self, g: Grading) -> List[int]:
        return [g.degree(self.seed[1])] + [s.d for s in self.steps]


def _mono_pow(x: Monomial, k: int) -> Monomial:
    c, e = x
    return Fraction(c) ** k, tuple(k * t for t in e)


def _mono_mul(x: Monomial, y: Monomial) -> Monomial:
    return Fraction(x[0]) * y[0], tuple(s + t for s, t in zip(x[1], y[1]))


def monomial_poly(x: Monomial, names_or_rank, domain) -> LaurentPoly:
    rank = names_or_rank if isinstance(names_or_rank, int) else len(names_or_rank)
    return LaurentPoly({x[1]: x[0]}, rank, domain)


def _covered(u: Monomial, v: Monomial, domain: CoefficientDomain, need_unit: bool) -> bool:
    """Is ``v`` in ``R[u, u^-1]`` (and a unit there when ``need_unit``)?"""
    coords = lattice_membership(v[1], [u[1]], len(u[1]))
    if coords is None:
        return False
    ratio = Fraction(v[0]) / _mono_pow(u, coords[0] if coords else 0)[0]
    return domain.is_unit(ratio) if need_unit else ratio in domain


def _step(u: Monomial, v: Monomial, g: Grading) -> NormalizationStep:
    du, dv = g.degree(u[1]), g.degree(v[1])
    if dv < 0:
        v, dv = _mono_pow(v, -1), -dv
    d = gcd(du, dv)
    a, b = du // d, dv // d
    # b*e_u == a*e_v holds for units in a rank-one lattice with nonzero degrees
    if tuple(b * x for x in u[1]) != tuple(a * x for x in v[1]):
        raise NotRankOne(f"exponents {u[1]} and {v[1]} are not proportional")
    r = -(Fraction(v[0]) ** a) / Fraction(u[0]) ** b
    assert r != 0
    _, m, n = ext_gcd(a, b)
    w = _mono_mul(_mono_pow(u, m), _mono_pow(v, n))
    assert _mono_pow(w, a) == _mono_mul(((-r) ** n, (0,) * len(u[1])), u)
    assert _mono_pow(w, b) == _mono_mul(((-r) ** (-m), (0,) * len(u[1])), v)
    return NormalizationStep(u, v, du, dv, d, a, b, m, n, r, w)


def _check_grading(a: MonomialSubalgebra, g: Grading) -> None:
    if g.ambient_rank != a.ambient_rank:
        raise HypothesisFailed(f"grading has {g.ambient_rank} weights, the torus has rank {a.ambient_rank}")
    for bgen in a.base:
        if g.degree(bgen.exponent):
            raise HypothesisFailed(f"grading gives base element {bgen.name} nonzero degree, so it is not a grading over R")


def _seed(a: MonomialSubalgebra, g: Grading) -> Monomial:
    lat = unit_lattice(a)
    if lat.rank == 0:
        raise HypothesisFailed(f"{a.name} has no units beyond the coefficients")
    if lat.rank > 1:
        raise NotRankOne(f"the unit lattice of {a.name} has rank {lat.rank}")
    graded = [(abs(g.degree(u.exponent)), u) for u in a.unit_gens if g.degree(u.exponent)]
    if not graded:
        raise HypothesisFailed("every unit has degree 0, so the units are neutral for this grading")
    _, u = min(graded, key=lambda t: t[0])
    seed = (Fraction(u.coefficient), u.exponent)
    return _mono_pow(seed, -1) if g.degree(u.exponent) < 0 else seed


def _run(a: MonomialSubalgebra, g: Grading, localize: bool) -> NormalizationTrace:
    g = g if isinstance(g, Grading) else Grading(tuple(g))
    _check_grading(a, g)
    u = _seed(a, g)
    domain = a.domain
    trace = NormalizationTrace(seed=u)
    pending = [(gen, True) for gen in a.unit_gens]
    if localize:
        pending += [(gen, False) for gen in a.gens if not gen.unit]
    changed = True
    while changed:
        changed = False
        for gen, is_unit in pending:
            v = (Fraction(gen.coefficient), gen.exponent)
            if _covered(u, v, domain, need_unit=is_unit):
                continue
            if not any(v[1]):
                raise HypothesisFailed(f"generator {gen.name} is a constant outside the coefficient ring")
            if g.degree(v[1]) == 0:
                raise HypothesisFailed(f"generator {gen.name} has degree 0 but is not in R")
            step = _step(u, v, g)
            if not domain.is_unit(step.r):
                if not localize:
                    raise HypothesisFailed(
                        f"relation coefficient {step.r} is not a unit of {domain}; localization is required"
                    )
                domain = localize_domain(domain, [step.r])
                trace.localizations.append(step.r)
                step = NormalizationStep(**{**step.__dict__, "localized_at": step.r})
            trace.steps.append(step)
            u = step.w
            changed = True
    trace.w = u
    trace.domain = domain
    units = unit_lattice(a)
    if not localize and LatticeBasis.span([u[1]], a.ambient_rank) != units:
        raise HypothesisFailed("the final generator does not span the unit lattice")
    degs = trace.degrees(g)
    assert all(x > y > 0 for x, y in zip(degs, degs[1:])) or localize
    return trace


def unit_normalize(a: MonomialSubalgebra, g) -> NormalizationTrace:
    """Find ``w`` with ``R[A*] = R[w, w^-1]``."""
    return _run(a, g, localize=False)


def localized_normalize(a: MonomialSubalgebra, g) -> Tuple[MonomialSubalgebra, NormalizationTrace]:
    """Find ``r`` and ``w`` with ``A_r = R_r[w, w^-1]``; returns the localized algebra and the trace."""
    if a.base:
        raise HypothesisFailed("localized normalization needs R to be the coefficient ring")
    trace = _run(a, g, localize=True)
    w = trace.w
    gen = MonomialGenerator("w", w[0], w[1], True)
    localized = MonomialSubalgebra(trace.domain, a.ambient_names, (gen,), (), f"{a.name}_r")
    return localized, trace
