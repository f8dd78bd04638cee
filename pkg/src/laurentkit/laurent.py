"""Sparse Laurent polynomials over exact coefficient domains.

A :class:`LaurentPoly` of rank ``n`` is a finitely supported map from
exponent vectors in Z^n to nonzero coefficients.  Values are immutable and
always kept in canonical form (no zero coefficients), so structural equality
is ring equality.
"""
from __future__ import annotations

from types import MappingProxyType
from typing import Dict, Iterable, List, Mapping, Optional, Sequence, Tuple

from .domains import QQ, CoefficientDomain
from .errors import DomainMismatch, NotAUnit, RankMismatch

ExponentVector = Tuple[int, ...]


def term_order_key(exp: ExponentVector):
    """Graded-lex key: total degree first, ties broken lexicographically."""
    return (sum(exp), exp)


def default_names(rank: int) -> List[str]:
    if rank == 1:
        return ["y"]
    return [f"y{i + 1}" for i in range(rank)]


class LaurentPoly:
    __slots__ = ("rank", "domain", "_terms", "_hash")

    def __init__(self, terms: Mapping[Sequence[int], object], rank: int, domain: CoefficientDomain = QQ):
        clean: Dict[ExponentVector, object] = {}
        for exp, coef in dict(terms).items():
            exp = tuple(int(e) for e in exp)
            if len(exp) != rank:
                raise RankMismatch(f"exponent {exp} does not have length {rank}")
            c = domain.convert(coef)
            if c != 0:
                clean[exp] = c
        self._init(rank, domain, clean)

    def _init(self, rank, domain, terms):
        self.rank = rank
        self.domain = domain
        self._terms = terms
        self._hash = None

    @classmethod
    def _raw(cls, rank, domain, terms) -> "LaurentPoly":
        p = cls.__new__(cls)
        p._init(rank, domain, terms)
        return p

    # constructors

    @classmethod
    def zero(cls, rank: int, domain: CoefficientDomain = QQ) -> "LaurentPoly":
        return cls._raw(rank, domain, {})

    @classmethod
    def constant(cls, c, rank: int, domain: CoefficientDomain = QQ) -> "LaurentPoly":
        return cls({(0,) * rank: c}, rank, domain)

    @classmethod
    def one(cls, rank: int, domain: CoefficientDomain = QQ) -> "LaurentPoly":
        return cls.constant(1, rank, domain)

    @classmethod
    def monomial(cls, exp: Sequence[int], coef=1, domain: CoefficientDomain = QQ) -> "LaurentPoly":
        return cls({tuple(exp): coef}, len(exp), domain)

    @classmethod
    def variable(cls, i: int, rank: int, domain: CoefficientDomain = QQ) -> "LaurentPoly":
        exp = [0] * rank
        exp[i] = 1
        return cls._raw(rank, domain, {tuple(exp): domain.one})

    @classmethod
    def variables(cls, rank: int, domain: CoefficientDomain = QQ) -> List["LaurentPoly"]:
        return [cls.variable(i, rank, domain) for i in range(rank)]

    # inspection

    @property
    def terms(self) -> Mapping[ExponentVector, object]:
        return MappingProxyType(self._terms)

    def sorted_terms(self) -> List[Tuple[ExponentVector, object]]:
        """Terms in canonical (descending graded-lex) order."""
        return sorted(self._terms.items(), key=lambda t: term_order_key(t[0]), reverse=True)

    def exponents(self) -> List[ExponentVector]:
        return [e for e, _ in self.sorted_terms()]

    def coefficient(self, exp: Sequence[int]):
        return self._terms.get(tuple(exp), self.domain.zero)

    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self):
        return bool(self._terms)

    def __len__(self):
        return len(self._terms)

    def is_monomial(self) -> bool:
        return len(self._terms) == 1

    def is_constant(self) -> bool:
        return not self._terms or (len(self._terms) == 1 and not any(next(iter(self._terms))))

    def constant_value(self):
        if not self.is_constant():
            raise ValueError("polynomial is not constant")
        return self._terms.get((0,) * self.rank, self.domain.zero)

    def min_exponents(self) -> ExponentVector:
        return tuple(min(col) for col in zip(*self._terms)) if self._terms else (0,) * self.rank

    # arithmetic

    def _check(self, other: "LaurentPoly"):
        if self.rank != other.rank:
            raise RankMismatch(f"rank {self.rank} vs rank {other.rank}")
        if self.domain != other.domain:
            raise DomainMismatch(f"{self.domain} vs {other.domain}")

    def _coerce(self, other) -> Optional["LaurentPoly"]:
        if isinstance(other, LaurentPoly):
            self._check(other)
            return other
        try:
            return LaurentPoly.constant(other, self.rank, self.domain)
        except (TypeError, ValueError, ZeroDivisionError):
            return None

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        d = self.domain
        out = dict(self._terms)
        for e, c in other._terms.items():
            if e in out:
                s = d.add(out[e], c)
                if s == 0:
                    del out[e]
                else:
                    out[e] = s
            else:
                out[e] = c
        return LaurentPoly._raw(self.rank, d, out)

    __radd__ = __add__

    def __neg__(self):
        d = self.domain
        return LaurentPoly._raw(self.rank, d, {e: d.negate(c) for e, c in self._terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        d = self.domain
        out: Dict[ExponentVector, object] = {}
        for e1, c1 in self._terms.items():
            for e2, c2 in other._terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                c = d.multiply(c1, c2)
                if e in out:
                    c = d.add(out[e], c)
                    if c == 0:
                        del out[e]
                        continue
                if c != 0:
                    out[e] = c
        return LaurentPoly._raw(self.rank, d, out)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        return pow_poly(self, k)

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self * invert_unit_poly(other)

    def __eq__(self, other):
        if isinstance(other, LaurentPoly):
            return self.rank == other.rank and self.domain == other.domain and self._terms == other._terms
        o = self._coerce(other)
        return o is not None and self._terms == o._terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.rank, frozenset(self._terms.items())))
        return self._hash

    # conversions

    def change_domain(self, domain: CoefficientDomain) -> "LaurentPoly":
        return LaurentPoly(self._terms, self.rank, domain)

    def extend_rank(self, extra: int, at: Optional[int] = None) -> "LaurentPoly":
        """Same polynomial viewed in ``rank + extra`` variables; new variables are inserted at ``at`` (default: end)."""
        at = self.rank if at is None else at
        pad = (0,) * extra
        return LaurentPoly._raw(
            self.rank + extra, self.domain, {e[:at] + pad + e[at:]: c for e, c in self._terms.items()}
        )

    def restrict_rank(self, keep: Sequence[int]) -> "LaurentPoly":
        """Project onto the variables in ``keep``; every other exponent must be zero."""
        keep = list(keep)
        drop = [i for i in range(self.rank) if i not in keep]
        out = {}
        for e, c in self._terms.items():
            if any(e[i] for i in drop):
                raise ValueError("polynomial involves a dropped variable")
            out[tuple(e[i] for i in keep)] = c
        return LaurentPoly._raw(len(keep), self.domain, out)

    def format(self, names: Optional[Sequence[str]] = None) -> str:
        return format_poly(self, names)

    def __str__(self):
        return format_poly(self)

    def __repr__(self):
        return f"LaurentPoly({format_poly(self)!r}, rank={self.rank}, domain={self.domain})"


# function forms of the operators


def add(p: LaurentPoly, q: LaurentPoly) -> LaurentPoly:
    p._check(q)
    return p + q


def mul(p: LaurentPoly, q: LaurentPoly) -> LaurentPoly:
    p._check(q)
    return p * q


def neg(p: LaurentPoly) -> LaurentPoly:
    return -p


def pow_poly(p: LaurentPoly, k: int) -> LaurentPoly:
    k = int(k)
    if k < 0:
        return pow_poly(invert_unit_poly(p), -k)
    if p.is_monomial():
        (e, c), = p._terms.items()
        return LaurentPoly._raw(p.rank, p.domain, {tuple(k * x for x in e): p.domain.power(c, k)})
    result = LaurentPoly.one(p.rank, p.domain)
    base = p
    while k:
        if k & 1:
            result = result * base
        k >>= 1
        if k:
            base = base * base
    return result


def is_unit_poly(p: LaurentPoly) -> Optional[Tuple[object, ExponentVector]]:
    """``(r, d)`` with ``p == r * y^d`` when ``p`` is a unit, else ``None``.

    Units of a Laurent ring over a domain are exactly the monomials whose
    coefficient is a unit of the coefficient domain.
    """
    if len(p._terms) != 1:
        return None
    (e, c), = p._terms.items()
    if not p.domain.is_unit(c):
        return None
    return c, e


def invert_unit_poly(p: LaurentPoly) -> LaurentPoly:
    unit = is_unit_poly(p)
    if unit is None:
        raise NotAUnit(f"{format_poly(p)} is not a unit over {p.domain}")
    c, e = unit
    return LaurentPoly._raw(p.rank, p.domain, {tuple(-x for x in e): p.domain.invert_unit(c)})


def substitute(
    p: LaurentPoly,
    images: Sequence[LaurentPoly],
    target_rank: Optional[int] = None,
    target_domain: Optional[CoefficientDomain] = None,
) -> LaurentPoly:
    """Image of ``p`` under the coefficient-fixing homomorphism ``y_i -> images[i]``."""
    images = list(images)
    if len(images) != p.rank:
        raise RankMismatch(f"{len(images)} images for a rank-{p.rank} polynomial")
    if images:
        rank, domain = images[0].rank, images[0].domain
        for im in images[1:]:
            if im.rank != rank:
                raise RankMismatch("images have different ranks")
            if im.domain != domain:
                raise DomainMismatch("images have different coefficient domains")
    else:
        if target_rank is None:
            target_rank = 0
        rank, domain = target_rank, target_domain or p.domain
    used = {}
    for e in p._terms:
        for i, x in enumerate(e):
            if x:
                lo, hi = used.get(i, (0, 0))
                used[i] = (min(lo, x), max(hi, x))
    inverses = {}
    for i, (lo, _) in used.items():
        if lo < 0:
            if is_unit_poly(images[i]) is None:
                raise NotAUnit(f"variable {i} occurs with a negative exponent but its image is not a unit")
            inverses[i] = invert_unit_poly(images[i])
    cache: Dict[Tuple[int, int], LaurentPoly] = {}

    def power(i, k):
        key = (i, k)
        if key not in cache:
            cache[key] = pow_poly(images[i] if k > 0 else inverses[i], abs(k))
        return cache[key]

    result = LaurentPoly.zero(rank, domain)
    for e, c in p._terms.items():
        term = LaurentPoly.constant(domain.convert(c), rank, domain)
        for i, x in enumerate(e):
            if x:
                term = term * power(i, x)
        result = result + term
    return result


def _format_coef(domain: CoefficientDomain, c) -> str:
    return domain.format(c)


def format_poly(p: LaurentPoly, names: Optional[Sequence[str]] = None) -> str:
    """Canonical text form, e.g. ``5*x^2*y^-1 + 1/3``."""
    if names is None:
        names = default_names(p.rank)
    if len(names) != p.rank:
        raise RankMismatch("wrong number of variable names")
    if not p._terms:
        return "0"
    parts = []
    for exp, c in p.sorted_terms():
        negative = _is_negative(c)
        mag = -c if negative else c
        factors = []
        for name, x in zip(names, exp):
            if x == 1:
                factors.append(name)
            elif x:
                factors.append(f"{name}^{x}")
        coef_text = _format_coef(p.domain, mag)
        if not factors:
            body = coef_text
        elif mag == 1:
            body = "*".join(factors)
        else:
            body = "*".join([coef_text] + factors)
        if not parts:
            parts.append(("-" if negative else "") + body)
        else:
            parts.append((" - " if negative else " + ") + body)
    return "".join(parts)


def _is_negative(c) -> bool:
    try:
        return c < 0
    except TypeError:
        return False
