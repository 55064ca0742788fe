"""Integer and modular arithmetic: factorization, totient, primitive roots, CRT."""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from math import gcd, prod

Factorization = list[tuple[int, int]]


def _require_positive(n: int) -> None:
    if n <= 0:
        raise ValueError(f"expected a positive integer, got {n}")


@lru_cache(maxsize=4096)
def _factor(n: int) -> tuple[tuple[int, int], ...]:
    out = []
    p = 2
    while p * p <= n:
        if n % p == 0:
            e = 0
            while n % p == 0:
                n //= p
                e += 1
            out.append((p, e))
        p += 1 if p == 2 else 2
    if n > 1:
        out.append((n, 1))
    return tuple(out)


def factorize(n: int) -> Factorization:
    """Prime factorization by trial division, ascending by prime.

    >>> factorize(12)
    [(2, 2), (3, 1)]
    """
    _require_positive(n)
    return list(_factor(n))


def euler_phi(n: int) -> int:
    _require_positive(n)
    return prod(p ** (e - 1) * (p - 1) for p, e in _factor(n))


def prime_power(q: int) -> tuple[int, int] | None:
    """Return (p, n) if q = p**n with n >= 1, else None."""
    if q < 2:
        return None
    f = _factor(q)
    return f[0] if len(f) == 1 else None


def multiplicative_order(a: int, m: int) -> int:
    if gcd(a, m) != 1:
        raise ValueError(f"{a} is not a unit mod {m}")
    a %= m
    x, k = a, 1
    while x != 1 % m:
        x = x * a % m
        k += 1
    return k


@lru_cache(maxsize=1024)
def primitive_root(q: int) -> int:
    """Smallest generator of (Z/q)* for an odd prime power q."""
    pp = prime_power(q)
    if pp is None or pp[0] == 2:
        raise ValueError(f"primitive_root needs an odd prime power, got {q}")
    p = pp[0]
    phi = euler_phi(q)
    # g generates iff g^(phi/r) != 1 for every prime r | phi
    rs = [r for r, _ in _factor(phi)]
    for g in range(2, q):
        if g % p == 0:
            continue
        if all(pow(g, phi // r, q) != 1 for r in rs):
            return g
    raise AssertionError(f"no primitive root mod {q}")  # unreachable for odd prime powers


@dataclass(frozen=True)
class CRTSplit:
    """Chinese-remainder decomposition of Z/m into prime-power factors."""

    modulus: int
    moduli: tuple[int, ...]

    def project(self, a: int) -> tuple[int, ...]:
        return tuple(a % q for q in self.moduli)

    def lift(self, residues) -> int:
        residues = tuple(residues)
        if len(residues) != len(self.moduli):
            raise ValueError("one residue per factor expected")
        m = self.modulus
        x = 0
        for r, q in zip(residues, self.moduli):
            n = m // q
            x += r * n * pow(n, -1, q)
        return x % m

    def idempotent_lift(self, index: int, r: int) -> int:
        """Lift r mod moduli[index] to m, with residue 1 at every other factor."""
        res = [1] * len(self.moduli)
        res[index] = r
        return self.lift(res)


def crt_split(m: int) -> CRTSplit:
    _require_positive(m)
    return CRTSplit(m, tuple(p**e for p, e in _factor(m)))
