"""The unit group (Z/m)* and its quotient G = (Z/m)*/{+-1}."""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from functools import lru_cache
from math import gcd, prod

from .modular import crt_split, euler_phi, prime_power, primitive_root


@dataclass(frozen=True)
class UnitGroupStructure:
    """(Z/m)* as a product of cyclic groups.

    Every unit a is uniquely ``prod(g_i ** e_i) mod m`` with ``0 <= e_i < orders[i]``;
    ``dlog_table`` maps a (reduced mod m) to that exponent vector.
    """

    modulus: int
    generators: tuple[int, ...]
    orders: tuple[int, ...]
    dlog_table: dict[int, tuple[int, ...]] = field(repr=False, compare=False)

    def dlog(self, a: int) -> tuple[int, ...]:
        try:
            return self.dlog_table[a % self.modulus]
        except KeyError:
            raise ValueError(f"{a} is not a unit mod {self.modulus}") from None

    def element(self, exponents) -> int:
        m = self.modulus
        return prod(pow(g, e, m) for g, e in zip(self.generators, exponents)) % m


def _local_generators(q: int) -> list[tuple[int, int]]:
    """(generator, order) pairs for (Z/q)*, q a prime power."""
    p, n = prime_power(q)
    if p != 2:
        return [(primitive_root(q), euler_phi(q))]
    if n == 1:
        return []
    if n == 2:
        return [(3, 2)]
    return [(q - 1, 2), (5, 2 ** (n - 2))]


@lru_cache(maxsize=512)
def _structure(m: int) -> UnitGroupStructure:
    split = crt_split(m)
    gens: list[int] = []
    orders: list[int] = []
    for i, q in enumerate(split.moduli):
        for g, o in _local_generators(q):
            gens.append(split.idempotent_lift(i, g))
            orders.append(o)
    table: dict[int, tuple[int, ...]] = {}
    for exps in itertools.product(*(range(o) for o in orders)):
        a = prod(pow(g, e, m) for g, e in zip(gens, exps)) % m
        table[a] = exps
    assert len(table) == euler_phi(m)
    return UnitGroupStructure(m, tuple(gens), tuple(orders), table)


def unit_group(m: int) -> UnitGroupStructure:
    """Generators and orders of (Z/m)*, 2-part first then odd primes ascending.

    >>> unit_group(16).generators, unit_group(16).orders
    ((15, 5), (2, 4))
    """
    if m <= 2:
        raise ValueError(f"unit_group needs m >= 3, got {m}")
    return _structure(m)


def dlog(s: UnitGroupStructure, a: int) -> tuple[int, ...]:
    return s.dlog(a)


def canonical(a: int, m: int) -> int:
    """Representative of the class of a in (Z/m)*/{+-1}, in [1, m/2]."""
    a %= m
    return min(a, m - a)


@dataclass(frozen=True)
class HalfGroup:
    """G = (Z/m)*/{+-1}, represented by the units in [1, m/2) sorted ascending."""

    modulus: int
    representatives: tuple[int, ...]

    def __len__(self) -> int:
        return len(self.representatives)

    def __iter__(self):
        return iter(self.representatives)

    @property
    def identity(self) -> int:
        return 1

    def mul(self, a: int, b: int) -> int:
        return canonical(a * b, self.modulus)

    def inv(self, a: int) -> int:
        return canonical(pow(a, -1, self.modulus), self.modulus)

    def characters(self) -> list[dict[int, complex]]:
        """Value tables of all characters of G (the even characters mod m)."""
        from .characters import character_group, parity

        return [
            {k: chi.value(k) for k in self.representatives}
            for chi in character_group(self.modulus)
            if parity(chi) == "even"
        ]


@lru_cache(maxsize=512)
def half_group(m: int) -> HalfGroup:
    if m <= 2:
        raise ValueError(f"half_group needs m >= 3, got {m}")
    reps = tuple(k for k in range(1, (m + 1) // 2) if gcd(k, m) == 1)
    return HalfGroup(m, reps)


def minus_one_two_generate(q: int) -> bool:
    """True iff -1 and 2 generate (Z/q)* for an odd prime power q."""
    pp = prime_power(q)
    if pp is None or pp[0] == 2:
        raise ValueError(f"expected an odd prime power, got {q}")
    s = _structure(q)
    (order,) = s.orders
    # cyclic group: <x, y> has index gcd(order, dlog x, dlog y)
    (e2,) = s.dlog(2)
    (em1,) = s.dlog(q - 1)
    return gcd(order, e2, em1) == 1
