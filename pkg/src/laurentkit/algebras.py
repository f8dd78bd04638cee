"""Concrete models of an R-algebra A.

Two models are supported:

* :class:`AlgebraPresentation` -- generators and relations.  Elements are
  Laurent polynomials in the generators; a generator declared as a unit may
  carry an explicit inverse partner, which :meth:`AlgebraPresentation.normalize`
  rewrites as a negative power.  Equality of elements is syntactic after that
  rewrite; no ideal membership is decided.
* :class:`MonomialSubalgebra` -- the R-subalgebra of a torus K[t^{+-1}]
  generated by monomials.  Units, transcendence degree and algebraic closures
  are decided exactly by lattice computations.
"""
from __future__ import annotations

from dataclasses import dataclass, field, replace
from fractions import Fraction
from typing import Dict, FrozenSet, Iterable, List, Mapping, Optional, Sequence, Tuple

from .domains import QQ, CoefficientDomain, localize_domain
from .errors import MalformedPresentation, NotAUnit, NotHomogeneous, RankMismatch, ZeroElement, ZeroExponent
from .lattice import (
    IntMatrix,
    LatticeBasis,
    intersect_with_subspace,
    lattice_membership,
    saturate,
)
from .laurent import ExponentVector, LaurentPoly, format_poly, is_unit_poly, substitute
from .syntax import parse_poly


@dataclass(frozen=True)
class AssertedFlags:
    """Hypotheses a user vouches for because they cannot be decided from a presentation."""

    base_algebraically_closed: bool = False
    transcendence_degree: Optional[int] = None
    units_trivial: bool = False

    def items(self) -> List[str]:
        out = []
        if self.base_algebraically_closed:
            out.append("base_alg_closed")
        if self.transcendence_degree is not None:
            out.append(f"trdeg={self.transcendence_degree}")
        if self.units_trivial:
            out.append("units_trivial")
        return out


@dataclass(frozen=True)
class AlgebraPresentation:
    domain: CoefficientDomain
    names: Tuple[str, ...]
    relations: Tuple[LaurentPoly, ...] = ()
    units: Tuple[Tuple[int, Optional[int]], ...] = ()
    base_generators: FrozenSet[int] = frozenset()
    asserted: AssertedFlags = AssertedFlags()
    name: str = "A"

    def __post_init__(self):
        n = len(self.names)
        if len(set(self.names)) != n:
            raise MalformedPresentation("duplicate generator names")
        seen = set()
        for i, j in self.units:
            if not 0 <= i < n or (j is not None and not 0 <= j < n) or i == j:
                raise MalformedPresentation("bad unit declaration")
            for k in (i, j):
                if k is not None:
                    if k in seen:
                        raise MalformedPresentation(f"generator {self.names[k]} declared as a unit twice")
                    seen.add(k)
        for k in self.base_generators:
            if not 0 <= k < n:
                raise MalformedPresentation("base generator index out of range")
        invertible = self.unit_indices
        for rel in self.relations:
            if rel.rank != n:
                raise MalformedPresentation(f"relation of rank {rel.rank} in a presentation with {n} generators")
            if rel.domain != self.domain:
                raise MalformedPresentation("relation over the wrong coefficient domain")
            if rel.is_zero():
                raise MalformedPresentation("zero relation")
            for e in rel.terms:
                for k, x in enumerate(e):
                    if x < 0 and k not in invertible:
                        raise MalformedPresentation(
                            f"negative power of non-unit generator {self.names[k]} in a relation"
                        )
        for i, j in self.units:
            if j is not None:
                pair = self._pair_relation(i, j)
                if pair not in self.relations and -pair not in self.relations:
                    raise MalformedPresentation(
                        f"inverse pair {self.names[i]}:{self.names[j]} lacks its relation"
                    )

    def _pair_relation(self, i, j) -> LaurentPoly:
        x = LaurentPoly.variable(i, self.rank, self.domain)
        y = LaurentPoly.variable(j, self.rank, self.domain)
        return x * y - 1

    @classmethod
    def build(
        cls,
        names: Sequence[str],
        relations: Iterable = (),
        units: Mapping[str, Optional[str]] | Iterable[str] = (),
        domain: CoefficientDomain = QQ,
        base: Iterable[str] = (),
        asserted: AssertedFlags = AssertedFlags(),
        name: str = "A",
    ) -> "AlgebraPresentation":
        """Convenience constructor taking names and relation strings; adds missing inverse-pair relations."""
        names = tuple(names)
        index = {n: k for k, n in enumerate(names)}
        if not isinstance(units, Mapping):
            units = {u: None for u in units}
        unit_pairs = tuple((index[u], None if v is None else index[v]) for u, v in units.items())
        rels = []
        for r in relations:
            rels.append(r if isinstance(r, LaurentPoly) else parse_poly(r, names, domain))
        draft = cls.__new__(cls)
        object.__setattr__(draft, "names", names)
        object.__setattr__(draft, "domain", domain)
        for i, j in unit_pairs:
            if j is not None:
                pair = draft._pair_relation(i, j)
                if pair not in rels and -pair not in rels:
                    rels.append(pair)
        return cls(domain, names, tuple(rels), unit_pairs, frozenset(index[b] for b in base), asserted, name)

    # algebra interface

    @property
    def rank(self) -> int:
        return len(self.names)

    @property
    def element_domain(self) -> CoefficientDomain:
        return self.domain

    @property
    def partners(self) -> Dict[int, int]:
        """Map inverse-partner generator -> the generator it inverts."""
        return {j: i for i, j in self.units if j is not None}

    @property
    def unit_indices(self) -> FrozenSet[int]:
        out = set()
        for i, j in self.units:
            out.add(i)
            if j is not None:
                out.add(j)
        return frozenset(out)

    def variable(self, name_or_index) -> LaurentPoly:
        k = self.names.index(name_or_index) if isinstance(name_or_index, str) else name_or_index
        return LaurentPoly.variable(k, self.rank, self.domain)

    def normalize(self, p: LaurentPoly) -> LaurentPoly:
        """Rewrite inverse-partner generators as negative powers of their partners."""
        if p.rank != self.rank:
            raise RankMismatch(f"element of rank {p.rank} in an algebra with {self.rank} generators")
        partners = self.partners
        if not partners or not any(e[j] for e in p.terms for j in partners):
            return p
        out: Dict[ExponentVector, object] = {}
        for e, c in p.terms.items():
            e = list(e)
            for j, i in partners.items():
                if e[j]:
                    e[i] -= e[j]
                    e[j] = 0
            key = tuple(e)
            out[key] = out.get(key, 0) + c
        return LaurentPoly(out, self.rank, self.domain)

    def generators(self) -> List[LaurentPoly]:
        return [self.normalize(self.variable(k)) for k in range(self.rank)]

    def unit_generators(self) -> List[LaurentPoly]:
        return [self.variable(i) for i, _ in self.units]

    def is_unit(self, p: LaurentPoly) -> bool:
        """Sound test: ``p`` is a domain unit times a monomial in declared units."""
        p = self.normalize(p)
        unit = is_unit_poly(p)
        if unit is None:
            return False
        _, e = unit
        allowed = self.unit_indices
        return all(x == 0 or k in allowed for k, x in enumerate(e))

    def parse(self, text: str) -> LaurentPoly:
        return self.normalize(parse_poly(text, self.names, self.domain))

    def format(self, p: LaurentPoly) -> str:
        return format_poly(p, self.names)

    def laurent_extension(self, names: Sequence[str]) -> "AlgebraPresentation":
        """``A[y_1^{+-1}, ..., y_n^{+-1}]`` with the given new variable names."""
        names = tuple(names)
        n = len(names)
        trdeg = self.asserted.transcendence_degree
        return AlgebraPresentation(
            self.domain,
            self.names + names,
            tuple(r.extend_rank(n) for r in self.relations),
            self.units + tuple((self.rank + k, None) for k in range(n)),
            self.base_generators,
            replace(self.asserted, transcendence_degree=None if trdeg is None else trdeg + n),
            f"{self.name}[{','.join(names)}]" if names else self.name,
        )

    def with_relations(self, relations: Sequence[LaurentPoly]) -> "AlgebraPresentation":
        return replace(self, relations=tuple(relations))


@dataclass(frozen=True)
class MonomialGenerator:
    name: str
    coefficient: Fraction
    exponent: ExponentVector
    unit: bool = False


@dataclass(frozen=True)
class MonomialSubalgebra:
    """R-subalgebra of the torus ``K[t_1^{+-1},...,t_n^{+-1}]`` generated by monomials.

    ``domain`` is the coefficient ring; ``base`` lists extra monomials
    generating R over it (empty when R is the coefficient ring itself).
    Elements are polynomials over the fraction field of ``domain`` in the
    ambient torus coordinates.
    """

    domain: CoefficientDomain
    ambient_names: Tuple[str, ...]
    gens: Tuple[MonomialGenerator, ...]
    base: Tuple[MonomialGenerator, ...] = ()
    name: str = "A"

    def __post_init__(self):
        n = len(self.ambient_names)
        for g in self.gens + self.base:
            if len(g.exponent) != n:
                raise RankMismatch(f"generator {g.name} has exponent of length {len(g.exponent)}, expected {n}")
            if g.coefficient == 0:
                raise ZeroElement(f"generator {g.name} is zero")

    @classmethod
    def build(
        cls,
        gens: Iterable,
        ambient_names: Optional[Sequence[str]] = None,
        domain: CoefficientDomain = QQ,
        base: Iterable = (),
        name: str = "A",
    ) -> "MonomialSubalgebra":
        """``gens``/``base`` items: ``(exponent, coef, unit)`` or ``(name, exponent, coef, unit)`` tuples."""

        def make(items, prefix):
            out = []
            for k, item in enumerate(items):
                if isinstance(item, MonomialGenerator):
                    out.append(item)
                    continue
                item = tuple(item)
                if item and isinstance(item[0], str):
                    nm, rest = item[0], item[1:]
                else:
                    nm, rest = f"{prefix}{k + 1}", item
                exp = tuple(rest[0])
                coef = Fraction(rest[1]) if len(rest) > 1 else Fraction(1)
                unit = bool(rest[2]) if len(rest) > 2 else False
                out.append(MonomialGenerator(nm, coef, exp, unit))
            return tuple(out)

        g = make(gens, "g")
        b = make(base, "r")
        if ambient_names is None:
            rank = len((g + b)[0].exponent)
            ambient_names = ["t"] if rank == 1 else [f"t{i + 1}" for i in range(rank)]
        return cls(domain, tuple(ambient_names), g, b, name)

    @classmethod
    def torus(cls, rank: int, domain: CoefficientDomain = QQ, names: Optional[Sequence[str]] = None, name="T"):
        if names is None:
            names = ["t"] if rank == 1 else [f"t{i + 1}" for i in range(rank)]
        gens = tuple(
            MonomialGenerator(names[i], Fraction(1), tuple(int(i == j) for j in range(rank)), True) for i in range(rank)
        )
        return cls(domain, tuple(names), gens, (), name)

    # algebra interface

    @property
    def ambient_rank(self) -> int:
        return len(self.ambient_names)

    @property
    def rank(self) -> int:
        return self.ambient_rank

    @property
    def names(self) -> Tuple[str, ...]:
        return self.ambient_names

    @property
    def element_domain(self) -> CoefficientDomain:
        return self.domain.fraction_field()

    def monomial(self, exp: Sequence[int], coef=1) -> LaurentPoly:
        return LaurentPoly({tuple(exp): coef}, self.ambient_rank, self.element_domain)

    def element(self, g: MonomialGenerator) -> LaurentPoly:
        return self.monomial(g.exponent, g.coefficient)

    def generators(self) -> List[LaurentPoly]:
        return [self.element(g) for g in self.base + self.gens]

    def unit_generators(self) -> List[LaurentPoly]:
        return [self.element(g) for g in self.gens if g.unit]

    @property
    def unit_gens(self) -> Tuple[MonomialGenerator, ...]:
        return tuple(g for g in self.gens if g.unit)

    def normalize(self, p: LaurentPoly) -> LaurentPoly:
        if p.rank != self.ambient_rank:
            raise RankMismatch(f"element of rank {p.rank} in a torus of rank {self.ambient_rank}")
        return p

    def unit_lattice(self) -> LatticeBasis:
        return unit_lattice(self)

    def base_lattice(self) -> LatticeBasis:
        return LatticeBasis.span((g.exponent for g in self.base), self.ambient_rank)

    def exponent_lattice(self) -> LatticeBasis:
        return LatticeBasis.span((g.exponent for g in self.base + self.gens), self.ambient_rank)

    def unit_coefficient(self, exp: Sequence[int]):
        """Coefficient of the unit of A with exponent ``exp`` built from the unit generators, or None."""
        ug = self.unit_gens
        coords = lattice_membership(exp, [g.exponent for g in ug], self.ambient_rank)
        if coords is None:
            return None
        c = Fraction(1)
        for g, k in zip(ug, coords):
            c *= g.coefficient ** k
        return c

    def is_unit(self, p: LaurentPoly) -> bool:
        unit = is_unit_poly(self.normalize(p))
        if unit is None:
            return False
        c, e = unit
        expected = self.unit_coefficient(e)
        if expected is None:
            return False
        return self.domain.is_field or self.domain.is_unit(Fraction(c) / expected)

    def transcendence_degree(self) -> int:
        return self.exponent_lattice().rank - self.base_lattice().rank

    def base_algebraically_closed(self) -> Tuple[bool, Optional[MonomialGenerator]]:
        """Is R algebraically closed in A?  Returns ``(ok, offending generator)``.

        A generator whose exponent lies in the saturation of R's exponent
        lattice is algebraic over R; it must then literally be an element of R
        (a constant of the coefficient ring or a base generator).
        """
        closure = saturate(self.base_lattice())
        base_exps = {g.exponent: g.coefficient for g in self.base}
        for g in self.gens:
            if g.exponent not in closure:
                continue
            if not any(g.exponent):
                if g.coefficient in self.domain and not g.unit:
                    continue
                if g.unit and self.domain.is_unit(g.coefficient):
                    continue
                return False, g
            if g.exponent in base_exps and not g.unit:
                ratio = g.coefficient / base_exps[g.exponent]
                if ratio in self.domain:
                    continue
            return False, g
        return True, None

    def parse(self, text: str) -> LaurentPoly:
        return parse_poly(text, self.ambient_names, self.element_domain)

    def format(self, p: LaurentPoly) -> str:
        return format_poly(p, self.ambient_names)

    def laurent_extension(self, names: Sequence[str]) -> "MonomialSubalgebra":
        names = tuple(names)
        n = len(names)
        rank = self.ambient_rank + n

        def pad(g):
            return replace(g, exponent=g.exponent + (0,) * n)

        new = tuple(
            MonomialGenerator(nm, Fraction(1), tuple(int(j == self.ambient_rank + k) for j in range(rank)), True)
            for k, nm in enumerate(names)
        )
        return MonomialSubalgebra(
            self.domain,
            self.ambient_names + names,
            tuple(pad(g) for g in self.gens) + new,
            tuple(pad(g) for g in self.base),
            f"{self.name}[{','.join(names)}]" if names else self.name,
        )

    def is_full_torus(self) -> bool:
        return (
            not self.base
            and self.unit_lattice() == LatticeBasis.full(self.ambient_rank)
            and all(g.exponent in self.unit_lattice() for g in self.gens)
        )


@dataclass(frozen=True)
class LocalizedAlgebra:
    base: AlgebraPresentation
    inverted: LaurentPoly
    presentation: AlgebraPresentation
    inverse_index: Optional[int] = None

    def extend_grading(self, weights: Sequence[int]) -> Tuple[int, ...]:
        """Extend generator degrees to the localization; the new inverse gets ``-deg(r)``."""
        weights = tuple(weights)
        if len(weights) != self.base.rank:
            raise RankMismatch("grading has the wrong number of generator degrees")
        if self.inverse_index is None:
            return weights
        degs = {sum(w * x for w, x in zip(weights, e)) for e in self.inverted.terms}
        if len(degs) != 1:
            raise NotHomogeneous("the inverted element is not homogeneous for this grading")
        return weights + (-degs.pop(),)


def unit_lattice(a: MonomialSubalgebra) -> LatticeBasis:
    """HNF basis of the exponent lattice of A* / R*."""
    return LatticeBasis.span((g.exponent for g in a.gens if g.unit), a.ambient_rank)


def units_mod_scalars(a: MonomialSubalgebra) -> List[Tuple[Fraction, ExponentVector]]:
    """Free generators ``w_1..w_m`` of A*/R*, as ``(coefficient, exponent)`` pairs."""
    out = []
    for row in unit_lattice(a).basis:
        out.append((a.unit_coefficient(row), row))
    return out


def algebraic_closure_of_unit(a: MonomialSubalgebra, u) -> Tuple[MonomialSubalgebra, Optional[LaurentPoly]]:
    """Algebraic closure of ``k[u]`` in A, and the generator ``w`` of its units when they have rank one.

    ``u`` is a unit of A given as a polynomial or a ``(coefficient, exponent)`` pair.
    """
    if isinstance(u, LaurentPoly):
        unit = is_unit_poly(u)
        if unit is None:
            raise NotAUnit(f"{a.format(u)} is not a monomial unit")
        coef, exp = unit
    else:
        coef, exp = u
        exp = tuple(exp)
    if not any(exp):
        raise ZeroExponent("u has exponent zero, so it lies in the coefficient ring")
    if not a.is_unit(a.monomial(exp, coef)):
        raise NotAUnit(f"{a.format(a.monomial(exp, coef))} is not a unit of {a.name}")
    n = a.ambient_rank
    direction = saturate(LatticeBasis.span([exp], n))
    units = intersect_with_subspace(unit_lattice(a), direction)
    new_gens = []
    for k, row in enumerate(units.basis):
        new_gens.append(MonomialGenerator(f"w{k + 1}" if units.rank > 1 else "w", a.unit_coefficient(row), row, True))
    unit_rows = set(units.basis)
    for g in a.gens:
        if g.exponent in direction and not (g.unit and g.exponent in unit_rows):
            if g.unit:
                continue
            new_gens.append(g)
    closure = MonomialSubalgebra(a.domain, a.ambient_names, tuple(new_gens), (), f"Alg[{a.name}]")
    w = closure.element(new_gens[0]) if units.rank == 1 else None
    return closure, w


def localize(p: AlgebraPresentation, r) -> LocalizedAlgebra:
    """Adjoin an inverse of ``r`` (a polynomial in the generators, or its text)."""
    if isinstance(r, str):
        r = parse_poly(r, p.names, p.domain)
    r = p.normalize(r)
    if r.is_zero():
        raise ZeroElement("cannot localize at zero")
    if r.is_constant():
        c = r.constant_value()
        new_domain = localize_domain(p.domain, [c])
        relations = tuple(rel.change_domain(new_domain) for rel in p.relations)
        new = replace(p, domain=new_domain, relations=relations, name=f"{p.name}_{c}")
        return LocalizedAlgebra(p, r, new, None)
    if p.is_unit(r):
        return LocalizedAlgebra(p, r, p, None)
    names = list(p.names)
    inv_name = "rinv"
    if r.is_monomial() and sum(abs(x) for x in r.exponents()[0]) == 1 and 1 in r.exponents()[0]:
        inv_name = p.names[r.exponents()[0].index(1)] + "_inv"
    while inv_name in names:
        inv_name += "_"
    names.append(inv_name)
    k = len(names) - 1
    lifted = r.extend_rank(1)
    rinv = LaurentPoly.variable(k, len(names), p.domain)
    relations = tuple(rel.extend_rank(1) for rel in p.relations) + (lifted * rinv - 1,)
    units = p.units
    e = r.exponents()[0]
    if r.is_monomial() and r.terms[e] == 1 and sum(e) == 1 and sorted(e)[-1] == 1 and e.count(0) == len(e) - 1:
        units = units + ((e.index(1), k),)
    else:
        units = units + ((k, None),)
    new = AlgebraPresentation(p.domain, tuple(names), relations, units, p.base_generators, p.asserted, f"{p.name}_r")
    return LocalizedAlgebra(p, r, new, k)


Algebra = object  # AlgebraPresentation | MonomialSubalgebra


def element_matrix(vectors: Sequence[Sequence[int]], cols: int) -> IntMatrix:
    return IntMatrix(vectors, cols=cols)
