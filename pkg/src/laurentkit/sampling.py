"""Random instance generators for self-checks and property tests."""
from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from math import gcd
from typing import List, Sequence, Tuple

from .algebras import MonomialGenerator, MonomialSubalgebra
from .automorphisms import MonomialAutomorphism, apply, inverse
from .domains import QQ
from .lattice import IntMatrix
from .laurent import LaurentPoly


def random_rational(rng: random.Random, bound: int = 9, nonzero: bool = True) -> Fraction:
    while True:
        x = Fraction(rng.randint(-bound, bound), rng.randint(1, bound))
        if x or not nonzero:
            return x


def random_poly(rng: random.Random, rank: int, terms: Tuple[int, int] = (2, 5), window: int = 3, domain=QQ) -> LaurentPoly:
    """A polynomial with a number of distinct terms drawn from ``terms``."""
    count = rng.randint(*terms)
    out = {}
    while len(out) < count:
        out[tuple(rng.randint(-window, window) for _ in range(rank))] = random_rational(rng)
    return LaurentPoly(out, rank, domain)


def random_unit_monomial(rng: random.Random, rank: int, window: int = 5) -> Tuple[Fraction, Tuple[int, ...], LaurentPoly]:
    c = random_rational(rng)
    e = tuple(rng.randint(-window, window) for _ in range(rank))
    return c, e, LaurentPoly({e: c}, rank, QQ)


def random_unimodular(rng: random.Random, n: int, factors: int = 8) -> IntMatrix:
    """Product of at most ``factors`` elementary matrices (row additions, swaps, sign flips)."""
    rows = [[int(i == j) for j in range(n)] for i in range(n)]
    for _ in range(rng.randint(0, factors)):
        if n == 1:
            kind = "neg"
        else:
            kind = rng.choice(["add", "add", "add", "swap", "neg"])
        if kind == "add":
            i, j = rng.sample(range(n), 2)
            q = rng.choice([-2, -1, 1, 2])
            rows[i] = [a + q * b for a, b in zip(rows[i], rows[j])]
        elif kind == "swap":
            i, j = rng.sample(range(n), 2)
            rows[i], rows[j] = rows[j], rows[i]
        else:
            i = rng.randrange(n)
            rows[i] = [-a for a in rows[i]]
    return IntMatrix(rows, cols=n)


def random_automorphism(rng: random.Random, n: int, factors: int = 6, domain=QQ) -> MonomialAutomorphism:
    scalars = tuple(random_rational(rng, 5) for _ in range(n))
    return MonomialAutomorphism(random_unimodular(rng, n, factors), scalars, domain)


def torus_names(prefix: str, n: int) -> List[str]:
    return [prefix] if n == 1 else [f"{prefix}{i + 1}" for i in range(n)]


def random_monomial_subalgebra(rng: random.Random, rank: int, name: str = "A", names=None) -> MonomialSubalgebra:
    """Monomial subalgebra with a random mix of unit and non-unit generators."""
    names = names or torus_names("t", rank)
    gens = []
    for k in range(rng.randint(1, rank + 2)):
        e = tuple(rng.randint(-3, 3) for _ in range(rank))
        gens.append(MonomialGenerator(f"g{k + 1}", random_rational(rng, 5), e, rng.random() < 0.5))
    return MonomialSubalgebra(QQ, tuple(names), tuple(gens), (), name)


def image_subalgebra(a: MonomialSubalgebra, sigma: MonomialAutomorphism, names, name="B") -> MonomialSubalgebra:
    gens = []
    for g in a.gens:
        img = apply(sigma, LaurentPoly({g.exponent: g.coefficient}, a.ambient_rank, QQ))
        (e, c), = img.terms.items()
        gens.append(MonomialGenerator(g.name, c, e, g.unit))
    return MonomialSubalgebra(a.domain, tuple(names), tuple(gens), (), name)


def block_automorphism(top: MonomialAutomorphism, bottom_rows: Sequence[Sequence[int]], e: IntMatrix, scalars) -> MonomialAutomorphism:
    """Automorphism of a rank ``r + n`` torus with matrix ``[[G, 0], [Bexp, E]]``."""
    r, n = top.rank, e.rows
    rows = [tuple(top.matrix.row(i)) + (0,) * n for i in range(r)]
    rows += [tuple(bottom_rows[j]) + tuple(e.row(j)) for j in range(n)]
    return MonomialAutomorphism(IntMatrix(rows, cols=r + n), tuple(top.scalars) + tuple(scalars), top.domain)


@dataclass
class Disguise:
    """``F = sigma`` on A and ``y_j -> b_j z^{E_j}``; reconstructing F should recover ``sigma``."""

    A: MonomialSubalgebra
    B: MonomialSubalgebra
    sigma: MonomialAutomorphism
    full: MonomialAutomorphism
    n: int
    E: IntMatrix


def random_disguise(rng: random.Random, max_rank: int = 3, max_n: int = 4) -> Disguise:
    r = rng.randint(1, max_rank)
    n = rng.randint(1, max_n)
    sigma = random_automorphism(rng, r, 4)
    A = random_monomial_subalgebra(rng, r, "A")
    B = image_subalgebra(A, sigma, torus_names("s", r), "B")
    e = random_unimodular(rng, n, 8)
    # y_j may only pick up unit monomials of B, so draw from B's unit exponents
    unit_exps = [g.exponent for g in B.gens if g.unit]
    bottom = []
    for _ in range(n):
        row = [0] * r
        for u in unit_exps:
            k = rng.randint(-1, 1)
            row = [a + k * b for a, b in zip(row, u)]
        bottom.append(row)
    scalars = [random_rational(rng, 5) for _ in range(n)]
    full = block_automorphism(sigma, bottom, e, scalars)
    return Disguise(A, B, sigma, full, n, e)


def random_rank_one_units(rng: random.Random, ambient: int = 4, max_units: int = 5, max_multiple: int = 50):
    """Unit generators ``c_i t^{k_i g}`` with ``gcd(k_i) = 1``; returns (algebra, hidden g)."""
    while True:
        g = tuple(rng.randint(-4, 4) for _ in range(ambient))
        if any(g):
            break
    while True:
        count = rng.randint(1, max_units)
        ks = [rng.choice([-1, 1]) * rng.randint(1, max_multiple) for _ in range(count)]
        total = 0
        for k in ks:
            total = gcd(total, k)
        if total == 1:
            break
    gens = tuple(
        MonomialGenerator(f"u{i + 1}", random_rational(rng, 5), tuple(k * x for x in g), True) for i, k in enumerate(ks)
    )
    a = MonomialSubalgebra(QQ, tuple(torus_names("t", ambient)), gens, (), "A")
    return a, g


def disguised_torus(rng: random.Random, m: int):
    """``A = k[w_1^{+-1}..w_m^{+-1}]`` with ``w_i = c_i t^{V_i}`` for a random unimodular V."""
    v = random_unimodular(rng, m, 6)
    gens = tuple(MonomialGenerator(f"w{i + 1}", random_rational(rng, 5), v.row(i), True) for i in range(m))
    return MonomialSubalgebra(QQ, tuple(torus_names("t", m)), gens, (), "A")


def twist_alpha(rng: random.Random, a: MonomialSubalgebra) -> MonomialAutomorphism:
    """A torus automorphism of rank ``m + 1`` used as ``alpha`` on ``A[y]`` in ambient coordinates."""
    m = a.ambient_rank
    return random_automorphism(rng, m + 1, 8)


def hom_from_automorphism(source_base, target_base, full: MonomialAutomorphism, n: int, name="F"):
    """The Laurent hom ``source[y] -> target[z]`` whose coordinate images are those of ``full``."""
    from .cancellation.maps import AlgebraMap, LaurentHom, default_ext_names

    src = source_base.laurent_extension(default_ext_names("y", n, source_base.names))
    tgt = target_base.laurent_extension(default_ext_names("z", n, target_base.names))
    forward = AlgebraMap(src, tgt, tuple(full.images()))
    backward = AlgebraMap(tgt, src, tuple(inverse(full).images()))
    return LaurentHom(source_base, target_base, n, forward, backward, name)


__all__ = [
    "Disguise",
    "block_automorphism",
    "disguised_torus",
    "hom_from_automorphism",
    "image_subalgebra",
    "random_automorphism",
    "random_disguise",
    "random_monomial_subalgebra",
    "random_poly",
    "random_rank_one_units",
    "random_rational",
    "random_unimodular",
    "random_unit_monomial",
    "torus_names",
    "twist_alpha",
]
