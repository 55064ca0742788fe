"""Exact Dirichlet characters.

A character mod m is stored as an exponent vector on the generators of
(Z/m)*: ``chi(g_i) = exp(2*pi*i * e_i / order_i)``.  Values are kept as exact
rational angles; the complex embedding only happens in :meth:`RationalAngle.to_complex`.
"""

from __future__ import annotations

import cmath
import itertools
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property, lru_cache
from math import gcd

from .modular import euler_phi
from .unitgroups import UnitGroupStructure, _structure

_EXACT = {
    Fraction(0): 1 + 0j,
    Fraction(1, 4): 1j,
    Fraction(1, 2): -1 + 0j,
    Fraction(3, 4): -1j,
}


@dataclass(frozen=True, order=True)
class RationalAngle:
    """The root of unity exp(2*pi*i*q) for a rational q reduced into [0, 1)."""

    value: Fraction

    def __post_init__(self):
        object.__setattr__(self, "value", Fraction(self.value) % 1)

    @property
    def numerator(self) -> int:
        return self.value.numerator

    @property
    def denominator(self) -> int:
        return self.value.denominator

    def __add__(self, other: RationalAngle) -> RationalAngle:
        return RationalAngle(self.value + other.value)

    def __neg__(self) -> RationalAngle:
        return RationalAngle(-self.value)

    def __mul__(self, k: int) -> RationalAngle:
        return RationalAngle(self.value * k)

    __rmul__ = __mul__

    def is_one(self) -> bool:
        return self.value == 0

    def to_complex(self) -> complex:
        if self.value in _EXACT:
            return _EXACT[self.value]
        return cmath.exp(2j * cmath.pi * float(self.value))

    def __str__(self) -> str:
        return str(self.value)


# ``evaluate`` returns None for the zero value (argument not coprime to the modulus)
CharacterValue = RationalAngle | None


@dataclass(frozen=True)
class DirichletCharacter:
    modulus: int
    exponents: tuple[int, ...]

    def __post_init__(self):
        s = self.structure
        if len(self.exponents) != len(s.orders):
            raise ValueError(
                f"modulus {self.modulus} has {len(s.orders)} generators, "
                f"got {len(self.exponents)} exponents"
            )
        object.__setattr__(
            self, "exponents", tuple(e % o for e, o in zip(self.exponents, s.orders))
        )

    @property
    def structure(self) -> UnitGroupStructure:
        return _structure(self.modulus)

    @property
    def label(self) -> str:
        return f"{self.modulus}:" + ",".join(map(str, self.exponents))

    def __str__(self) -> str:
        return self.label

    def is_principal(self) -> bool:
        return not any(self.exponents)

    def conjugate(self) -> DirichletCharacter:
        return DirichletCharacter(self.modulus, tuple(-e for e in self.exponents))

    def __call__(self, n: int) -> CharacterValue:
        return evaluate(self, n)

    def value(self, n: int) -> complex:
        """Complex value chi(n), using exp(2*pi*i*q) for the angle q."""
        a = evaluate(self, n)
        return 0j if a is None else a.to_complex()

    @cached_property
    def period_values(self) -> tuple[complex, ...]:
        """Complex values at 0, 1, ..., m-1."""
        return tuple(self.value(n) for n in range(self.modulus))


def parse_label(label: str) -> DirichletCharacter:
    """Inverse of :attr:`DirichletCharacter.label` ("m:e1,e2,...")."""
    try:
        m_text, _, exps_text = label.partition(":")
        m = int(m_text)
        exps = tuple(int(x) for x in exps_text.split(",") if x.strip())
    except ValueError:
        raise ValueError(f"malformed character label {label!r}") from None
    if m < 1:
        raise ValueError(f"malformed character label {label!r}")
    return DirichletCharacter(m, exps)


def evaluate(chi: DirichletCharacter, n: int) -> CharacterValue:
    m = chi.modulus
    if gcd(n, m) != 1:
        return None
    s = chi.structure
    v = s.dlog(n)
    return RationalAngle(sum(Fraction(e * d, o) for e, d, o in zip(chi.exponents, v, s.orders)))


def trivial_character() -> DirichletCharacter:
    """The degenerate character mod 1, equal to 1 everywhere."""
    return DirichletCharacter(1, ())


def character_group(m: int) -> list[DirichletCharacter]:
    """All phi(m) characters mod m, lexicographic in their exponent vectors."""
    if m <= 2:
        raise ValueError(f"character_group needs m >= 3, got {m}")
    orders = _structure(m).orders
    return [DirichletCharacter(m, e) for e in itertools.product(*(range(o) for o in orders))]


def parity(chi: DirichletCharacter) -> str:
    if chi.modulus <= 2:
        return "even"
    a = evaluate(chi, chi.modulus - 1)
    if a.value == 0:
        return "even"
    if a.value == Fraction(1, 2):
        return "odd"
    raise ArithmeticError(f"chi(-1) = exp(2 pi i {a}) is not +-1 for {chi.label}")


@lru_cache(maxsize=8192)
def _conductor(m: int, exponents: tuple[int, ...]) -> int:
    chi = DirichletCharacter(m, exponents)
    if chi.is_principal():
        return 1
    units = [k for k in range(1, m) if gcd(k, m) == 1]
    for f in (d for d in range(1, m + 1) if m % d == 0):
        if all(evaluate(chi, k).is_one() for k in units if k % f == 1 % f):
            return f
    raise AssertionError("unreachable: f = m always qualifies")


def conductor(chi: DirichletCharacter) -> int:
    """Smallest f | m such that chi is trivial on units congruent to 1 mod f."""
    return _conductor(chi.modulus, chi.exponents)


def is_primitive(chi: DirichletCharacter) -> bool:
    return conductor(chi) == chi.modulus


def induce_primitive(chi: DirichletCharacter) -> DirichletCharacter:
    """The primitive character mod conductor(chi) agreeing with chi on units mod m."""
    f = conductor(chi)
    if f == chi.modulus:
        return chi
    if f == 1:
        return trivial_character()
    m = chi.modulus
    target = _structure(f)
    exps = []
    for h, order in zip(target.generators, target.orders):
        k = next(k for k in range(h, h + f * m, f) if gcd(k, m) == 1)
        angle = evaluate(chi, k).value * order
        assert angle.denominator == 1, "chi does not factor through its conductor"
        exps.append(int(angle))
    return DirichletCharacter(f, tuple(exps))


def even_nontrivial(m: int) -> list[DirichletCharacter]:
    """Non-principal even characters mod m; these are the non-trivial characters of G."""
    if m % 4 == 2:
        raise ValueError(f"m = {m} is congruent to 2 mod 4")
    out = [c for c in character_group(m) if not c.is_principal() and parity(c) == "even"]
    assert len(out) == euler_phi(m) // 2 - 1
    return out


def primitive_characters(f: int) -> list[DirichletCharacter]:
    """Primitive characters of conductor exactly f (including the trivial one for f = 1)."""
    if f == 1:
        return [trivial_character()]
    if f == 2:
        return []
    return [c for c in character_group(f) if is_primitive(c)]
