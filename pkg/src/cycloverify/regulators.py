"""Cyclotomic units, their regulators, and the index relation.

Two families of units of Q(zeta_m) are compared:

* classical cyclotomic units ``g_k = (zeta^k - 1) / (zeta - 1)``
* the "plus" units ``g~_k = (zeta^k + 1) / (zeta + 1)``

For a prime power m, ``R~_cyc / R_cyc = |eta|`` with
``eta = prod over even chi != 1 of (1 - chi(2))``, and the plus units have
infinite index exactly when eta = 0.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

import mpmath

from .characters import (
    DirichletCharacter,
    conductor,
    evaluate,
    even_nontrivial,
    induce_primitive,
)
from .lfunctions import euler_factor_two
from .linalg import det, hadamard_bound
from .modular import prime_power
from .unitgroups import HalfGroup, half_group, minus_one_two_generate

KINDS = ("classic", "new")
DEFAULT_TOL_DET = 1e-8
DEDEKIND_MAX_ORDER = 24


def _check_kind(kind: str) -> None:
    if kind not in KINDS:
        raise ValueError(f"unit kind must be one of {KINDS}, got {kind!r}")


def _log_norm(j: int, m: int, kind: str, extended: bool = False):
    """log|1 - zeta_m^j| (classic) or log|1 + zeta_m^j| (new), zeta_m = exp(2 pi i / m)."""
    j %= m
    if extended:
        x = mpmath.pi * j / m
        t = mpmath.sin(x) if kind == "classic" else mpmath.cos(x)
        return mpmath.log(2 * abs(t))
    x = math.pi * j / m
    t = math.sin(x) if kind == "classic" else math.cos(x)
    return math.log(2 * abs(t))


def log_unit(m: int, a: int, k: int, kind: str, dps: int | None = None):
    """log|sigma_a(u_k)| where sigma_a: zeta -> zeta^a and u is g or g~."""
    _check_kind(kind)
    if m < 3:
        raise ValueError(f"m must be >= 3, got {m}")
    if math.gcd(a, m) != 1 or math.gcd(k, m) != 1:
        raise ValueError(f"a = {a} and k = {k} must both be prime to m = {m}")
    if dps is None:
        return _log_norm(a * k, m, kind) - _log_norm(a, m, kind)
    with mpmath.workdps(dps):
        return _log_norm(a * k, m, kind, True) - _log_norm(a, m, kind, True)


def log_embedding_matrix(m: int, kind: str, dps: int | None = None) -> list[list]:
    """Rows a, columns k over the half-group representatives other than 1."""
    reps = half_group(m).representatives[1:]
    return [[log_unit(m, a, k, kind, dps) for k in reps] for a in reps]


def _require_regulator_modulus(m: int) -> tuple[int, int]:
    pp = prime_power(m)
    if pp is None:
        raise ValueError(f"m = {m} is not a prime power")
    if m == 2:
        raise ValueError("m = 2 has no plus units (1 + zeta_2 = 0)")
    return pp


def regulator(m: int, kind: str, dps: int | None = None) -> float:
    """|det| of the log-embedding matrix; 1 for m = 3, 4 where the matrix is empty."""
    _check_kind(kind)
    _require_regulator_modulus(m)
    rows = log_embedding_matrix(m, kind, dps)
    if dps is None:
        return abs(det(rows))
    with mpmath.workdps(dps):
        return float(abs(det(rows)))


def is_singular(m: int, kind: str, tol: float = DEFAULT_TOL_DET, dps: int | None = None) -> bool:
    """Whether |det| falls below tol times the Hadamard bound of the matrix."""
    rows = log_embedding_matrix(m, kind, dps)
    return regulator(m, kind, dps) < tol * hadamard_bound(rows)


def _angle_value(chi: DirichletCharacter, k: int, extended: bool):
    a = evaluate(chi, k)
    if a is None:
        return 0
    if not extended:
        return a.to_complex()
    return mpmath.expjpi(2 * mpmath.mpf(a.numerator) / a.denominator)


def character_log_sum(chi: DirichletCharacter, m: int, kind: str, extended: bool = False):
    """sum over k in (Z/m)*/{+-1} of chi(k) log|1 -+ zeta_m^k| for even chi mod m."""
    return sum(_angle_value(chi, k, extended) * _log_norm(k, m, kind, extended) for k in half_group(m))


def regulator_via_characters(m: int, kind: str, dps: int | None = None) -> float:
    """|prod over even chi != 1 of the character log sums| (the Dedekind factorization)."""
    _check_kind(kind)
    _require_regulator_modulus(m)
    chars = even_nontrivial(m)
    if dps is None:
        return abs(math.prod(character_log_sum(c, m, kind) for c in chars))
    with mpmath.workdps(dps):
        p = mpmath.mpf(1)
        for c in chars:
            p *= character_log_sum(c, m, kind, True)
        return float(abs(p))


def eta_factor(m: int) -> complex:
    """prod over non-trivial even chi mod m of (1 - chi(2)); real up to round-off."""
    if m < 3:
        raise ValueError(f"m must be >= 3, got {m}")
    return math.prod((euler_factor_two(c) for c in even_nontrivial(m)), start=1 + 0j)


@dataclass(frozen=True)
class DedekindResult:
    full_det: complex
    factored: complex
    reduced_det: complex
    char_product: complex
    residual: float


def _rel(a: complex, b: complex) -> float:
    return abs(a - b) / max(1.0, abs(a), abs(b))


def dedekind_det_check(group: HalfGroup, f, max_order: int = DEDEKIND_MAX_ORDER) -> DedekindResult:
    """Evaluate both sides of the Dedekind group-determinant identities.

    ``f`` is a callable or mapping on group elements.  Checks

        det f(a b^-1) = (sum_a f(a)) * det_{a,b != 1} [f(a b^-1) - f(a)]
        prod_{chi != 1} sum_a chi(a) f(a^-1) = det_{a,b != 1} [f(a b^-1) - f(a)]
    """
    if len(group) > max_order:
        raise ValueError(f"group order {len(group)} exceeds bound {max_order}")
    fn = f.__getitem__ if hasattr(f, "__getitem__") else f
    elems = list(group)
    one = group.identity
    rest = [a for a in elems if a != one]
    full = det([[fn(group.mul(a, group.inv(b))) for b in elems] for a in elems])
    reduced = det([[fn(group.mul(a, group.inv(b))) - fn(a) for b in rest] for a in rest])
    factored = sum(fn(a) for a in elems) * reduced
    chars = [t for t in group.characters() if any(abs(v - 1) > 1e-12 for v in t.values())]
    cprod = math.prod((sum(t[a] * fn(group.inv(a)) for a in elems) for t in chars), start=1 + 0j)
    residual = max(_rel(full, factored), _rel(cprod, reduced))
    return DedekindResult(full, factored, reduced, cprod, residual)


@dataclass(frozen=True)
class DescentResult:
    modulus: int
    conductor: int
    lhs: complex  # conductor-level sum over G_chi
    rhs: complex  # modulus-level sum over G
    sign: int
    expected_sign: int
    residual: float

    @property
    def matches(self) -> bool:
        return self.sign == self.expected_sign


def conductor_descent_check(m: int, chi: DirichletCharacter) -> DescentResult:
    """Compare the plus-unit character sums at level f_chi and level m.

    They agree up to a sign, which is -1 exactly when m is a power of 2.
    """
    pp = prime_power(m)
    if pp is None:
        raise ValueError(f"m = {m} is not a prime power")
    if chi.modulus != m:
        raise ValueError(f"{chi.label} is not a character mod {m}")
    if chi.is_principal() or chi.value(m - 1) != 1:
        raise ValueError(f"{chi.label} must be even and non-trivial")
    f = conductor(chi)
    if f == m:
        raise ValueError(f"{chi.label} is primitive; nothing to descend")
    lhs = character_log_sum(induce_primitive(chi), f, "new")
    rhs = character_log_sum(chi, m, "new")
    expected = -1 if pp[0] == 2 else 1
    res = {s: abs(lhs - s * rhs) for s in (1, -1)}
    sign = min(res, key=res.get)
    if abs(res[1] - res[-1]) <= 1e-12 * max(1.0, abs(lhs)):
        # both sums vanish; the sign is not observable
        sign = expected
    return DescentResult(m, f, lhs, rhs, sign, expected, res[sign])


@dataclass(frozen=True)
class RegulatorReport:
    modulus: int
    r_cyc: float
    r_tilde_cyc: float
    eta: complex
    eta_abs: float
    ratio: float | None  # None on the singular branch (infinite index)
    singular: bool
    generates: bool | None  # <-1, 2> = (Z/m)* for odd p; None for p = 2
    # |ratio - |eta|| / |eta|, or on the singular branch R~_cyc over its Hadamard bound
    residual: float
    trivial: bool = False

    def passed(self, tol_ratio: float = 1e-6, tol_det: float = DEFAULT_TOL_DET) -> bool:
        return self.residual < (tol_det if self.singular else tol_ratio)


def verify_index_relation(m: int, eta_threshold: float = 1e-8, dps: int | None = None) -> RegulatorReport:
    """Compare R~_cyc / R_cyc with |eta| for a prime power m."""
    p, _ = _require_regulator_modulus(m)
    gen = None if p == 2 else minus_one_two_generate(m)
    eta = eta_factor(m)
    r = regulator(m, "classic", dps)
    rt = regulator(m, "new", dps)
    trivial = len(half_group(m)) == 1
    if abs(eta) <= eta_threshold:
        bound = hadamard_bound(log_embedding_matrix(m, "new"))
        return RegulatorReport(m, r, rt, eta, abs(eta), None, True, gen, rt / bound, trivial)
    ratio = rt / r
    residual = abs(ratio - abs(eta)) / abs(eta)
    return RegulatorReport(m, r, rt, eta, abs(eta), ratio, False, gen, residual, trivial)


def regulator_duality(m: int, kind: str, tol: float = DEFAULT_TOL_DET, dps: int | None = None) -> float:
    """Relative gap between the determinant and character-product regulators.

    When both fall below ``tol`` times the Hadamard bound they are both zero to
    working precision, and the larger one, scaled by that bound, is returned.
    """
    a = regulator(m, kind, dps)
    b = regulator_via_characters(m, kind, dps)
    bound = hadamard_bound(log_embedding_matrix(m, kind))
    if max(a, b) < tol * bound:
        return max(a, b) / bound
    return abs(a - b) / max(a, b)


@dataclass(frozen=True)
class HPlusCheck:
    modulus: int
    classical: float  # implied h+
    eta_h_plus: float  # implied eta * h+ from the plus-unit formula
    eta: float
    new: float | None  # eta_h_plus / eta, None when eta = 0


def h_plus_formula_check(m: int, r_plus: float, eta_threshold: float = 1e-8) -> HPlusCheck:
    """Class numbers implied by the two conductor-level product formulas, given R+."""
    if m % 4 == 2 or m < 3:
        raise ValueError(f"m must be odd or divisible by 4, got {m}")
    if r_plus <= 0:
        raise ValueError("R+ must be positive")
    classical = 1 + 0j
    plus = 1 + 0j
    for chi in even_nontrivial(m):
        prim = induce_primitive(chi)
        f = prim.modulus
        classical *= -character_log_sum(prim, f, "classic")
        plus *= character_log_sum(prim, f, "new")
    eta = eta_factor(m).real
    eta_h = plus.real / r_plus
    new = eta_h / eta if abs(eta) > eta_threshold else None
    return HPlusCheck(m, classical.real / r_plus, eta_h, eta, new)
