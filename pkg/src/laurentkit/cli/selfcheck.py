"""Seeded randomized checks that can be run from the command line."""
from __future__ import annotations

import random
from typing import Callable, Dict

from ..automorphisms import apply, compose, inverse
from ..cancellation import bg_cancel, reconstruct_iso, unit_normalize
from ..algebras import MonomialSubalgebra
from ..gradings import Grading
from ..lattice import IntMatrix, determinant, hermite_normal_form, integer_kernel, smith_normal_form
from ..sampling import (
    disguised_torus,
    hom_from_automorphism,
    random_automorphism,
    random_disguise,
    random_poly,
    random_rank_one_units,
    torus_names,
    twist_alpha,
)


def _automorphism_laws(rng: random.Random) -> bool:
    n = rng.randint(1, 3)
    a, b = random_automorphism(rng, n), random_automorphism(rng, n)
    p = random_poly(rng, n)
    ab = compose(a, b)
    return (
        apply(ab, p) == apply(b, apply(a, p))
        and ab.matrix == a.matrix @ b.matrix
        and apply(inverse(a), apply(a, p)) == p
    )


def _normal_forms(rng: random.Random) -> bool:
    rows, cols = rng.randint(1, 3), rng.randint(1, 3)
    m = [[rng.randint(-3, 3) for _ in range(cols)] for _ in range(rows)]
    h, u = hermite_normal_form(m)
    s, su, sv = smith_normal_form(m)
    kernel = integer_kernel(m, cols)
    return (
        (u @ IntMatrix(m, cols=cols)) == h
        and abs(determinant(u)) == 1
        and (su @ IntMatrix(m, cols=cols) @ sv) == s
        and all(sum(r[j] * k[j] for j in range(cols)) == 0 for r in m for k in kernel)
    )


def _normalize(rng: random.Random) -> bool:
    a, g = random_rank_one_units(rng)
    while True:
        weights = tuple(rng.randint(-3, 3) for _ in range(len(g)))
        if sum(x * y for x, y in zip(weights, g)):
            break
    w = unit_normalize(a, Grading(weights)).w[1]
    return w in (g, tuple(-x for x in g))


def _reconstruct(rng: random.Random) -> bool:
    d = random_disguise(rng)
    rep = reconstruct_iso(hom_from_automorphism(d.A, d.B, d.full, d.n))
    return rep.iso.forward.images == tuple(d.sigma.images()) and (rep.D @ rep.E) == IntMatrix.identity(d.n)


def _torus(rng: random.Random) -> bool:
    m = rng.randint(1, 3)
    a = disguised_torus(rng, m)
    target = MonomialSubalgebra.torus(m, names=torus_names("s", m))
    bg_cancel(hom_from_automorphism(a, target, twist_alpha(rng, a), 1))
    return True


CHECKS: Dict[str, Callable[[random.Random], bool]] = {
    "automorphism_laws": _automorphism_laws,
    "normal_forms": _normal_forms,
    "normalize": _normalize,
    "reconstruct": _reconstruct,
    "torus_cancel": _torus,
}


def run_selfcheck(seed: int = 0, trials: int = 25) -> Dict[str, Dict[str, int]]:
    rng = random.Random(seed)
    summary = {}
    for name, check in CHECKS.items():
        passed = 0
        for _ in range(trials):
            try:
                passed += bool(check(rng))
            except Exception:
                pass
        summary[name] = {"passed": passed, "total": trials}
    return summary
