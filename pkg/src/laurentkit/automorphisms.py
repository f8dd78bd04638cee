"""Monomial automorphisms ``y_i -> a_i * prod_j y_j^{E[i][j]}`` of a Laurent ring."""
from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence, Tuple

from .domains import QQ, CoefficientDomain
from .errors import DomainMismatch, NotAUnit, NotUnimodular, RankMismatch
from .lattice import IntMatrix, as_matrix, determinant, invert_unimodular
from .laurent import LaurentPoly, substitute


@dataclass(frozen=True)
class MonomialAutomorphism:
    matrix: IntMatrix
    scalars: Tuple
    domain: CoefficientDomain = QQ

    def __post_init__(self):
        m = as_matrix(self.matrix)
        object.__setattr__(self, "matrix", m)
        if not m.is_square() or determinant(m) not in (1, -1):
            raise NotUnimodular(f"matrix {m.tolist()} is not unimodular")
        scalars = tuple(self.domain.convert(a) for a in self.scalars)
        if len(scalars) != m.rows:
            raise RankMismatch(f"{len(scalars)} scalars for a rank {m.rows} automorphism")
        for a in scalars:
            if not self.domain.is_unit(a):
                raise NotAUnit(f"scalar {a} is not a unit of {self.domain}")
        object.__setattr__(self, "scalars", scalars)

    @property
    def rank(self) -> int:
        return self.matrix.rows

    def images(self) -> list:
        n = self.rank
        return [LaurentPoly({self.matrix.row(i): a}, n, self.domain) for i, a in enumerate(self.scalars)]

    def __call__(self, p: LaurentPoly) -> LaurentPoly:
        return apply(self, p)

    def format(self, names=None) -> str:
        names = names or [f"y{i + 1}" for i in range(self.rank)]
        return ", ".join(f"{n} -> {img.format(names)}" for n, img in zip(names, self.images()))


def identity(n: int, domain: CoefficientDomain = QQ) -> MonomialAutomorphism:
    return MonomialAutomorphism(IntMatrix.identity(n), (1,) * n, domain)


def phi(e, domain: CoefficientDomain = QQ) -> MonomialAutomorphism:
    e = as_matrix(e)
    return MonomialAutomorphism(e, (1,) * e.rows, domain)


def psi(a: Sequence, domain: CoefficientDomain = QQ) -> MonomialAutomorphism:
    a = tuple(a)
    return MonomialAutomorphism(IntMatrix.identity(len(a)), a, domain)


def _scalar_of(alpha: MonomialAutomorphism, exp: Sequence[int]):
    d = alpha.domain
    c = d.one
    for a, k in zip(alpha.scalars, exp):
        c = d.multiply(c, d.power(a, k))
    return c


def compose(alpha: MonomialAutomorphism, beta: MonomialAutomorphism) -> MonomialAutomorphism:
    """``alpha`` first, then ``beta``; the matrix is ``E_alpha @ E_beta``."""
    if alpha.rank != beta.rank:
        raise RankMismatch("automorphisms of different ranks")
    if alpha.domain != beta.domain:
        raise DomainMismatch("automorphisms over different domains")
    d = alpha.domain
    scalars = tuple(d.multiply(a, _scalar_of(beta, alpha.matrix.row(i))) for i, a in enumerate(alpha.scalars))
    return MonomialAutomorphism(alpha.matrix @ beta.matrix, scalars, d)


def inverse(alpha: MonomialAutomorphism) -> MonomialAutomorphism:
    d_mat = invert_unimodular(alpha.matrix)
    d = alpha.domain
    scalars = tuple(d.invert_unit(_scalar_of(alpha, d_mat.row(j))) for j in range(alpha.rank))
    return MonomialAutomorphism(d_mat, scalars, d)


def apply(alpha: MonomialAutomorphism, p: LaurentPoly) -> LaurentPoly:
    if p.rank != alpha.rank:
        raise RankMismatch(f"polynomial of rank {p.rank} for an automorphism of rank {alpha.rank}")
    if p.domain != alpha.domain:
        raise DomainMismatch("polynomial and automorphism over different domains")
    return substitute(p, alpha.images())
