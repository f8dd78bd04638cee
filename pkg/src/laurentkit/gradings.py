"""Z-gradings of Laurent rings and of presented algebras."""
from __future__ import annotations

from dataclasses import dataclass
from typing import Dict, List, Sequence, Tuple

from .algebras import AlgebraPresentation
from .errors import NotARelation, NotHomogeneous, RankMismatch, ZeroPolynomial
from .lattice import IntMatrix, LatticeBasis, integer_kernel
from .laurent import LaurentPoly


@dataclass(frozen=True)
class Grading:
    """Weight vector: the monomial with exponent ``e`` has degree ``<weights, e>``."""

    weights: Tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "weights", tuple(int(w) for w in self.weights))

    @property
    def ambient_rank(self) -> int:
        return len(self.weights)

    def degree(self, exp: Sequence[int]) -> int:
        if len(exp) != len(self.weights):
            raise RankMismatch(f"exponent of length {len(exp)} for a grading of rank {self.ambient_rank}")
        return sum(w * x for w, x in zip(self.weights, exp))

    def _check(self, p: LaurentPoly):
        if p.rank != self.ambient_rank:
            raise RankMismatch(f"polynomial of rank {p.rank} for a grading of rank {self.ambient_rank}")

    def is_homogeneous(self, p: LaurentPoly) -> bool:
        return len(support(self, p)) <= 1

    def poly_degree(self, p: LaurentPoly) -> int:
        s = support(self, p)
        if len(s) != 1:
            raise NotHomogeneous("polynomial is zero or not homogeneous")
        return next(iter(s))


def _grading(g) -> Grading:
    return g if isinstance(g, Grading) else Grading(tuple(g))


def support(g, p: LaurentPoly) -> frozenset:
    g = _grading(g)
    g._check(p)
    return frozenset(g.degree(e) for e in p.terms)


def homogeneous_components(g, p: LaurentPoly) -> Dict[int, LaurentPoly]:
    g = _grading(g)
    g._check(p)
    buckets: Dict[int, dict] = {}
    for e, c in p.terms.items():
        buckets.setdefault(g.degree(e), {})[e] = c
    return {d: LaurentPoly(buckets[d], p.rank, p.domain) for d in sorted(buckets)}


def leading_form(g, p: LaurentPoly) -> Tuple[int, LaurentPoly]:
    """Component of maximal degree."""
    if p.is_zero():
        raise ZeroPolynomial("the zero polynomial has no leading form")
    comps = homogeneous_components(g, p)
    d = max(comps)
    return d, comps[d]


def top_form_relation(g, relation: Sequence[Tuple[LaurentPoly, int]], a: LaurentPoly) -> List[Tuple[int, LaurentPoly]]:
    """Top-degree part of a relation ``sum h_i a^i = 0``.

    Returns ``(i, leading_form(h_i))`` for the indices where ``deg(h_i a^i)`` is
    maximal; these satisfy ``sum h̄_i ā^i = 0``, which is re-checked.
    """
    g = _grading(g)
    if a.is_zero():
        raise ZeroPolynomial("a must be nonzero")
    relation = [(h, int(i)) for h, i in relation]
    if all(h.is_zero() for h, _ in relation):
        raise ZeroPolynomial("all coefficients of the relation are zero")
    total = LaurentPoly.zero(a.rank, a.domain)
    for h, i in relation:
        total = total + h * a ** i
    if not total.is_zero():
        raise NotARelation("the coefficients do not annihilate a")
    da, abar = leading_form(g, a)
    tops = {}
    for h, i in relation:
        if h.is_zero():
            continue
        dh, hbar = leading_form(g, h)
        tops[i] = (dh + i * da, hbar)
    top = max(d for d, _ in tops.values())
    out = sorted((i, hbar) for i, (d, hbar) in tops.items() if d == top)
    check = LaurentPoly.zero(a.rank, a.domain)
    for i, hbar in out:
        check = check + hbar * abar ** i
    assert check.is_zero(), "top forms of a relation must cancel"
    return out


def extend_to_laurent_vars(g, extra: int, extra_weights: Sequence[int]) -> Grading:
    g = _grading(g)
    extra_weights = tuple(extra_weights)
    if len(extra_weights) != extra:
        raise RankMismatch(f"expected {extra} extra weights, got {len(extra_weights)}")
    return Grading(g.weights + extra_weights)


def restrict_grading(g, keep: Sequence[int]) -> Grading:
    g = _grading(g)
    return Grading(tuple(g.weights[k] for k in keep))


@dataclass(frozen=True)
class GradingLattice:
    presentation: AlgebraPresentation
    lattice: LatticeBasis

    @property
    def rank(self) -> int:
        return self.lattice.rank

    def gradings(self) -> List[Grading]:
        return [Grading(v) for v in self.lattice.basis]

    def admits(self, degrees: Sequence[int]) -> bool:
        return tuple(degrees) in self.lattice


def relation_constraints(p: AlgebraPresentation) -> List[Tuple[int, ...]]:
    """Rows ``c`` with ``<c, d> = 0`` for every admissible generator-degree vector ``d``."""
    n = p.rank
    rows = []
    for rel in p.relations:
        exps = rel.sorted_terms()
        first = exps[0][0]
        for e, _ in exps[1:]:
            rows.append(tuple(x - y for x, y in zip(first, e)))
        # a constant term forces the whole relation into degree 0
        if any(not any(e) for e, _ in exps):
            rows.append(first)
    for k in sorted(p.base_generators):
        rows.append(tuple(int(j == k) for j in range(n)))
    return [r for r in rows if any(r)]


def grading_lattice(p: AlgebraPresentation) -> GradingLattice:
    rows = relation_constraints(p)
    lattice = integer_kernel(IntMatrix(rows, cols=p.rank), cols=p.rank) if rows else LatticeBasis.full(p.rank)
    return GradingLattice(p, lattice)


@dataclass(frozen=True)
class NeutralReport:
    neutral_generators: Tuple[str, ...]
    algebra_neutral: bool
    lattice: LatticeBasis
    caveat: str = "certified only for gradings induced by the presentation"


def presentation_neutral(p: AlgebraPresentation) -> NeutralReport:
    lat = grading_lattice(p).lattice
    neutral = tuple(name for k, name in enumerate(p.names) if all(v[k] == 0 for v in lat.basis))
    return NeutralReport(neutral, lat.rank == 0, lat)
