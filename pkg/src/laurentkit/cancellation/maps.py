"""Ring maps between algebra models, Laurent extensions of them, and hypothesis ledgers."""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import List, Mapping, Optional, Sequence, Tuple

from ..algebras import AlgebraPresentation, MonomialSubalgebra
from ..errors import MalformedHom, RankMismatch
from ..lattice import lattice_membership
from ..laurent import LaurentPoly, invert_unit_poly, is_unit_poly, substitute
from ..syntax import parse_poly

VERIFIED, ASSERTED, FAILED = "verified", "asserted", "failed"


@dataclass(frozen=True)
class LedgerEntry:
    name: str
    status: str
    detail: str = ""

    def as_dict(self):
        return {"name": self.name, "status": self.status, "detail": self.detail}


@dataclass
class HypothesisLedger:
    entries: List[LedgerEntry] = field(default_factory=list)

    def record(self, name: str, status: str, detail: str = "") -> None:
        self.entries.append(LedgerEntry(name, status, detail))

    def verified(self, name, detail=""):
        self.record(name, VERIFIED, detail)

    def asserted(self, name, detail=""):
        self.record(name, ASSERTED, detail)

    def failed(self, name, detail=""):
        self.record(name, FAILED, detail)

    def extend(self, other: "HypothesisLedger", prefix: str = "") -> None:
        for e in other.entries:
            self.entries.append(LedgerEntry(prefix + e.name, e.status, e.detail))

    def status(self, name: str) -> Optional[str]:
        for e in reversed(self.entries):
            if e.name == name:
                return e.status
        return None

    def as_list(self):
        return [e.as_dict() for e in self.entries]


@dataclass(frozen=True)
class AlgebraMap:
    """Ring map out of ``source`` determined on a torus-like set of coordinates.

    With ``basis=None`` the images belong to the source's coordinate variables
    and the map is plain substitution.  Otherwise ``basis`` is a list of
    exponent vectors spanning the source's exponent lattice and ``images[j]``
    is the image of the monomial ``t^{basis[j]}``; this form is needed for
    maps out of monomial subalgebras whose lattice is not all of Z^n.
    """

    source: object
    target: object
    images: Tuple[LaurentPoly, ...]
    basis: Optional[Tuple[Tuple[int, ...], ...]] = None

    def __post_init__(self):
        images = tuple(self.target.normalize(im) for im in self.images)
        object.__setattr__(self, "images", images)
        expected = self.source.rank if self.basis is None else len(self.basis)
        if len(images) != expected:
            raise MalformedHom(f"expected {expected} images, got {len(images)}")
        for im in images:
            if im.rank != self.target.rank:
                raise RankMismatch("image lives in the wrong ring")
        if self.basis is not None:
            for im in images:
                if is_unit_poly(im) is None:
                    raise MalformedHom("lattice-basis images must be unit monomials")

    def __call__(self, p: LaurentPoly) -> LaurentPoly:
        src, tgt = self.source, self.target
        p = src.normalize(p)
        if self.basis is None:
            out = substitute(p, self.images, tgt.rank, tgt.element_domain)
            return tgt.normalize(out)
        domain = tgt.element_domain
        out = LaurentPoly.zero(tgt.rank, domain)
        basis = list(self.basis)
        for e, c in p.terms.items():
            coords = lattice_membership(e, basis, src.rank)
            if coords is None:
                raise MalformedHom(f"exponent {e} is outside the lattice the map is defined on")
            term = LaurentPoly.constant(domain.convert(c), tgt.rank, domain)
            for im, k in zip(self.images, coords):
                if k:
                    term = term * (im ** k if k > 0 else invert_unit_poly(im) ** (-k))
            out = out + term
        return tgt.normalize(out)

    def then(self, other: "AlgebraMap") -> "AlgebraMap":
        """``self`` first, then ``other``."""
        return AlgebraMap(self.source, other.target, tuple(other(im) for im in self.images), self.basis)

    def format(self) -> List[str]:
        if self.basis is None:
            keys = list(self.source.names)
        else:
            keys = [self.source.format(self.source.monomial(b)) for b in self.basis]
        return [f"{k} -> {self.target.format(im)}" for k, im in zip(keys, self.images)]


def identity_map(a) -> AlgebraMap:
    return AlgebraMap(a, a, tuple(LaurentPoly.variable(k, a.rank, a.element_domain) for k in range(a.rank)))


@dataclass(frozen=True)
class Isomorphism:
    forward: AlgebraMap
    backward: AlgebraMap

    @property
    def source(self):
        return self.forward.source

    @property
    def target(self):
        return self.forward.target

    def failures(self) -> List[str]:
        """Generators on which a composite is not the identity."""
        bad = []
        for g in self.source.generators():
            if self.backward(self.forward(g)) != self.source.normalize(g):
                bad.append(f"{self.source.name}: {self.source.format(g)}")
        for g in self.target.generators():
            if self.forward(self.backward(g)) != self.target.normalize(g):
                bad.append(f"{self.target.name}: {self.target.format(g)}")
        return bad

    def is_verified(self) -> bool:
        return not self.failures()

    def inverse(self) -> "Isomorphism":
        return Isomorphism(self.backward, self.forward)

    def then(self, other: "Isomorphism") -> "Isomorphism":
        return Isomorphism(self.forward.then(other.forward), other.backward.then(self.backward))


def default_ext_names(prefix: str, n: int, taken: Sequence[str]) -> Tuple[str, ...]:
    names = [prefix] if n == 1 else [f"{prefix}{i + 1}" for i in range(n)]
    while any(x in taken for x in names):
        prefix += "_"
        names = [prefix] if n == 1 else [f"{prefix}{i + 1}" for i in range(n)]
    return tuple(names)


@dataclass(frozen=True)
class LaurentHom:
    """Ring map ``F: A[y_1^{+-1}..y_n^{+-1}] -> B[z_1^{+-1}..z_n^{+-1}]`` with an optional inverse.

    ``forward`` is defined on the coordinate variables of the source
    extension (ambient torus coordinates in the monomial model).
    """

    source_base: object
    target_base: object
    n: int
    forward: AlgebraMap
    backward: Optional[AlgebraMap] = None
    name: str = "F"

    @property
    def source(self):
        return self.forward.source

    @property
    def target(self):
        return self.forward.target

    @property
    def iso(self) -> Isomorphism:
        if self.backward is None:
            raise MalformedHom(f"{self.name} has no inverse")
        return Isomorphism(self.forward, self.backward)

    @classmethod
    def build(
        cls,
        source_base,
        target_base,
        images: Mapping[str, object],
        inverse: Optional[Mapping[str, object]] = None,
        ynames: Optional[Sequence[str]] = None,
        znames: Optional[Sequence[str]] = None,
        n: Optional[int] = None,
        name: str = "F",
    ) -> "LaurentHom":
        """Build from images keyed by variable name (values: polynomials or text).

        Images of inverse-partner generators may be omitted; they are filled
        in as inverses of their partners' images.
        """
        if n is None:
            n = len(ynames) if ynames is not None else len(znames)
        ynames = tuple(ynames) if ynames is not None else default_ext_names("y", n, source_base.names)
        znames = tuple(znames) if znames is not None else default_ext_names("z", n, target_base.names)
        if len(ynames) != n or len(znames) != n:
            raise MalformedHom("the two Laurent extensions must have the same number of variables")
        src = source_base.laurent_extension(ynames)
        tgt = target_base.laurent_extension(znames)
        fwd = _map_from_names(src, tgt, images)
        bwd = _map_from_names(tgt, src, inverse) if inverse is not None else None
        return cls(source_base, target_base, n, fwd, bwd, name)

    def check_units(self) -> List[str]:
        """Images of unit coordinates that fail to be units of the target."""
        bad = []
        for m, dom, cod in ((self.forward, self.source, self.target), (self.backward, self.target, self.source)):
            if m is None or m.basis is not None:
                continue
            for k in _unit_coordinates(dom):
                if not cod.is_unit(m.images[k]):
                    bad.append(f"{dom.names[k]} -> {cod.format(m.images[k])}")
        return bad

    def inverse(self) -> "LaurentHom":
        if self.backward is None:
            raise MalformedHom(f"{self.name} has no inverse")
        return LaurentHom(self.target_base, self.source_base, self.n, self.backward, self.forward, self.name + "^-1")


def _unit_coordinates(a) -> List[int]:
    if isinstance(a, AlgebraPresentation):
        return sorted(a.unit_indices)
    return list(range(a.rank))


def _map_from_names(src, tgt, images: Mapping[str, object]) -> AlgebraMap:
    index = {nm: k for k, nm in enumerate(src.names)}
    out: List[Optional[LaurentPoly]] = [None] * src.rank
    for key, value in images.items():
        if key not in index:
            raise MalformedHom(f"unknown variable {key!r} in map definition")
        if isinstance(value, str):
            value = parse_poly(value, tgt.names, tgt.element_domain)
        out[index[key]] = tgt.normalize(value)
    if isinstance(src, AlgebraPresentation):
        for j, i in src.partners.items():
            if out[j] is None and out[i] is not None:
                out[j] = tgt.normalize(invert_unit_poly(out[i]))
    missing = [src.names[k] for k, im in enumerate(out) if im is None]
    if missing:
        raise MalformedHom(f"no image given for {', '.join(missing)}")
    return AlgebraMap(src, tgt, tuple(out))


__all__ = [
    "AlgebraMap",
    "ASSERTED",
    "FAILED",
    "HypothesisLedger",
    "Isomorphism",
    "LaurentHom",
    "LedgerEntry",
    "VERIFIED",
    "identity_map",
]
