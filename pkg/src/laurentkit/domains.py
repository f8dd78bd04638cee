"""Exact coefficient domains: ZZ, QQ, GF(p) and localizations ZZ[1/S]."""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import FrozenSet, Iterable

from .errors import NotAUnit


def prime_factors(n: int) -> FrozenSet[int]:
    n = abs(int(n))
    out = set()
    p = 2
    while p * p <= n:
        while n % p == 0:
            out.add(p)
            n //= p
        p += 1
    if n > 1:
        out.add(n)
    return frozenset(out)


class CoefficientDomain:
    """Abstract exact commutative integral domain.

    Subclasses provide ``convert``, ``is_unit`` and ``invert_unit``; the
    arithmetic defaults work for any element type with Python operators.
    """

    tag = "?"
    is_field = False

    def convert(self, x):
        raise NotImplementedError

    def __contains__(self, x) -> bool:
        try:
            self.convert(x)
        except (TypeError, ValueError, ZeroDivisionError, NotAUnit):
            return False
        return True

    @property
    def zero(self):
        return self.convert(0)

    @property
    def one(self):
        return self.convert(1)

    def add(self, a, b):
        return self.convert(a + b)

    def negate(self, a):
        return self.convert(-a)

    def multiply(self, a, b):
        return self.convert(a * b)

    def equal(self, a, b) -> bool:
        return self.convert(a) == self.convert(b)

    def is_zero(self, a) -> bool:
        return a == 0

    def is_unit(self, a) -> bool:
        raise NotImplementedError

    def invert_unit(self, a):
        raise NotImplementedError

    def power(self, a, k: int):
        if k < 0:
            return self.power(self.invert_unit(a), -k)
        return self.convert(a ** k)

    def fraction_field(self) -> "CoefficientDomain":
        raise NotImplementedError

    def format(self, a) -> str:
        return str(a)

    def __str__(self):
        return self.tag


@dataclass(frozen=True)
class IntegerRing(CoefficientDomain):
    tag = "ZZ"

    def convert(self, x):
        if isinstance(x, Fraction):
            if x.denominator != 1:
                raise ValueError(f"{x} is not an integer")
            return x.numerator
        if isinstance(x, float):
            raise TypeError("floats are not exact coefficients")
        return int(x)

    def is_unit(self, a) -> bool:
        return a in (1, -1)

    def invert_unit(self, a):
        if not self.is_unit(a):
            raise NotAUnit(f"{a} is not a unit of ZZ")
        return a

    def fraction_field(self):
        return QQ


@dataclass(frozen=True)
class RationalField(CoefficientDomain):
    tag = "QQ"
    is_field = True

    def convert(self, x):
        if isinstance(x, float):
            raise TypeError("floats are not exact coefficients")
        return Fraction(x)

    def is_unit(self, a) -> bool:
        return a != 0

    def invert_unit(self, a):
        if a == 0:
            raise NotAUnit("0 is not invertible")
        return 1 / Fraction(a)

    def fraction_field(self):
        return self


@dataclass(frozen=True)
class PrimeField(CoefficientDomain):
    p: int
    is_field = True

    def __post_init__(self):
        if self.p < 2 or prime_factors(self.p) != {self.p}:
            raise ValueError(f"{self.p} is not prime")

    @property
    def tag(self):
        return f"GF({self.p})"

    def convert(self, x):
        if isinstance(x, Fraction):
            if x.denominator % self.p == 0:
                raise ZeroDivisionError(f"{x} has no image in GF({self.p})")
            return x.numerator * pow(x.denominator, -1, self.p) % self.p
        if isinstance(x, float):
            raise TypeError("floats are not exact coefficients")
        return int(x) % self.p

    def is_unit(self, a) -> bool:
        return a % self.p != 0

    def invert_unit(self, a):
        if a % self.p == 0:
            raise NotAUnit("0 is not invertible")
        return pow(a, -1, self.p)

    def power(self, a, k: int):
        if k < 0:
            a, k = self.invert_unit(a), -k
        return pow(a, k, self.p)

    def fraction_field(self):
        return self


@dataclass(frozen=True)
class LocalizedIntegers(CoefficientDomain):
    """``ZZ[1/p : p in primes]``: rationals whose denominators only involve ``primes``."""

    primes: FrozenSet[int] = frozenset()

    def __post_init__(self):
        object.__setattr__(self, "primes", frozenset(int(p) for p in self.primes))
        for p in self.primes:
            if prime_factors(p) != {p}:
                raise ValueError(f"{p} is not prime")

    @classmethod
    def inverting(cls, values: Iterable[int]) -> "CoefficientDomain":
        primes = set()
        for v in values:
            primes |= prime_factors(v)
        return cls(frozenset(primes)) if primes else ZZ

    @property
    def tag(self):
        if not self.primes:
            return "ZZ"
        return "ZZ[1/" + ",".join(str(p) for p in sorted(self.primes)) + "]"

    def _only_inverted(self, n: int) -> bool:
        return prime_factors(n) <= self.primes

    def convert(self, x):
        if isinstance(x, float):
            raise TypeError("floats are not exact coefficients")
        x = Fraction(x)
        if not self._only_inverted(x.denominator):
            raise ValueError(f"{x} is not in {self.tag}")
        return x

    def is_unit(self, a) -> bool:
        a = Fraction(a)
        return a != 0 and self._only_inverted(a.numerator)

    def invert_unit(self, a):
        if not self.is_unit(a):
            raise NotAUnit(f"{a} is not a unit of {self.tag}")
        return 1 / Fraction(a)

    def localize(self, values: Iterable) -> "LocalizedIntegers":
        primes = set(self.primes)
        for v in values:
            v = Fraction(v)
            primes |= prime_factors(v.numerator) | prime_factors(v.denominator)
        return LocalizedIntegers(frozenset(primes)) if primes else ZZ

    def fraction_field(self):
        return QQ


ZZ = IntegerRing()
QQ = RationalField()


def GF(p: int) -> PrimeField:
    return PrimeField(p)


def localize_domain(domain: CoefficientDomain, values: Iterable) -> CoefficientDomain:
    """Smallest domain in which every nonzero value of ``values`` becomes a unit."""
    values = [Fraction(v) for v in values if v != 0]
    if domain.is_field:
        return domain
    if isinstance(domain, IntegerRing):
        domain = LocalizedIntegers()
    if isinstance(domain, LocalizedIntegers):
        return domain.localize(values)
    raise TypeError(f"cannot localize {domain}")


def parse_domain(text: str) -> CoefficientDomain:
    t = text.strip().replace(" ", "")
    if t in ("QQ", "Q"):
        return QQ
    if t in ("ZZ", "Z"):
        return ZZ
    if t.startswith("GF(") and t.endswith(")"):
        return GF(int(t[3:-1]))
    if t.startswith("ZZ[1/") and t.endswith("]"):
        return LocalizedIntegers.inverting(int(x) for x in t[5:-1].split(","))
    raise ValueError(f"unknown coefficient domain {text!r}")
