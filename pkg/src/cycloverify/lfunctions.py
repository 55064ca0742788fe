"""Gauss sums and the values L(1, chi), L_E(1, chi).

``L_E(s, chi) = sum (-1)**(n-1) chi(n) / n**s`` is the alternating (Euler) twin
of the Dirichlet series.  Both values at s = 1 are computed two ways: by the
finite closed forms in terms of the Gauss sum, and by extrapolated summation
of the defining series.  The two routes share nothing beyond character values.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .characters import DirichletCharacter, RationalAngle, evaluate, is_primitive, parity

DEFAULT_BUDGET = 10**6
EPS = np.finfo(float).eps
# relative disagreement tolerated between the two even-case closed forms
FORM_AGREEMENT = 1e-9


class ConvergenceError(ArithmeticError):
    """Series extrapolation did not reach the requested tolerance within budget."""


@dataclass(frozen=True)
class SeriesResult:
    value: complex
    error: float
    terms: int


def _require_primitive(chi: DirichletCharacter, allow_principal: bool = False) -> None:
    if not is_primitive(chi):
        raise ValueError(f"{chi.label} is not primitive; induce it first")
    if not allow_principal and chi.is_principal():
        raise ValueError(f"{chi.label} is principal; L(s, chi) has a pole at s = 1")


def twisted_sum(chi: DirichletCharacter, k: int) -> complex:
    """sum over r mod f of chi(r) * zeta_f**(r k), with zeta_f = exp(2 pi i / f)."""
    f = chi.modulus
    total = 0j
    for r in range(f):
        a = evaluate(chi, r)
        if a is not None:
            total += (a + RationalAngle(Fraction(r * k, f))).to_complex()
    return total


def gauss_sum(chi: DirichletCharacter) -> complex:
    _require_primitive(chi, allow_principal=True)
    return twisted_sum(chi, 1)


def _conj_values(chi: DirichletCharacter) -> list[complex]:
    return [v.conjugate() for v in chi.period_values]


def l_one_closed(chi: DirichletCharacter) -> complex:
    """L(1, chi) for primitive non-principal chi from the finite log-sine / linear sums."""
    _require_primitive(chi)
    f = chi.modulus
    cbar = _conj_values(chi)
    tau = gauss_sum(chi)
    if parity(chi) == "even":
        s = sum(cbar[k] * math.log(math.sin(k * math.pi / f)) for k in range(1, (f + 1) // 2) if cbar[k])
        return -2 * tau / f * s
    s = sum(cbar[k] * k for k in range(1, f))
    return math.pi * 1j * tau / f**2 * s


def l_e_one_closed_forms(chi: DirichletCharacter) -> tuple[complex, complex]:
    """The two closed forms of L_E(1, chi) for even chi: (cosine form, |1+zeta^k| form)."""
    _require_primitive(chi)
    if parity(chi) != "even":
        raise ValueError(f"{chi.label} is odd")
    f = chi.modulus
    cbar = _conj_values(chi)
    tau = gauss_sum(chi)
    cos_form = sum(
        cbar[k] * math.log(abs(math.cos(math.pi * k / f))) for k in range(1, (f + 1) // 2) if cbar[k]
    )
    # |1 + zeta_f^k| = 2|cos(pi k / f)|; computed from the complex point to stay independent
    norm_form = sum(
        cbar[k % f] * math.log(abs(1 + RationalAngle(Fraction(k, f)).to_complex()))
        for k in range(1, f + 1)
        if cbar[k % f]
    )
    return 2 * tau / f * cos_form, tau / f * norm_form


def l_e_one_closed(chi: DirichletCharacter) -> complex:
    """L_E(1, chi) for primitive non-principal chi.

    For even chi both closed forms are evaluated and must agree; the cosine
    form is returned.
    """
    _require_primitive(chi)
    f = chi.modulus
    if parity(chi) == "even":
        a, b = l_e_one_closed_forms(chi)
        if abs(a - b) > FORM_AGREEMENT * max(1.0, abs(a)):
            raise ArithmeticError(f"closed forms disagree for {chi.label}: {a} vs {b}")
        return a
    cbar = _conj_values(chi)
    s = sum(cbar[k] * k for k in range(1, (f + 1) // 2))
    return -2 * math.pi * 1j * gauss_sum(chi) / f**2 * s


def block_series(coeffs, tol: float, budget: int = DEFAULT_BUDGET) -> SeriesResult:
    """Sum ``c[(n-1) % P] / n`` over n >= 1 for a zero-mean periodic sequence c.

    Partial sums over whole periods S(N) approach the limit with an expansion
    in powers of 1/N, so Richardson extrapolation over N = N0, 2 N0, 4 N0, ...
    removes them one order at a time.  The error estimate is the change between
    successive diagonal entries of the Richardson table.
    """
    c = np.asarray(coeffs, dtype=complex)
    period = len(c)
    if abs(c.sum()) > 1e-12 * max(1.0, np.abs(c).sum()):
        raise ValueError("coefficients do not sum to zero over a period; the series diverges")
    r = np.arange(1, period + 1, dtype=float)

    def blocks(q0: int, q1: int) -> complex:
        q = np.arange(q0, q1, dtype=float)[:, None]
        return (c[None, :] / (q * period + r[None, :])).sum(axis=1)[::-1].sum()

    n = 4
    partial = blocks(0, n)
    table: list[list[complex]] = [[partial]]
    err = math.inf
    while True:
        if 2 * n * period > budget:
            raise ConvergenceError(
                f"error estimate {err:.3g} above tolerance {tol:.3g} after {n * period} terms"
            )
        partial += blocks(n, 2 * n)
        n *= 2
        row = [partial]
        for k in range(1, len(table) + 1):
            prev = table[-1][k - 1]
            row.append(row[k - 1] + (row[k - 1] - prev) / (2**k - 1))
        table.append(row)
        # successive entries can coincide exactly; never claim better than rounding
        err = max(abs(table[-1][-1] - table[-2][-1]), 8 * EPS * abs(table[-1][-1]))
        if len(table) >= 3 and err < tol:
            return SeriesResult(complex(table[-1][-1]), float(err), n * period)


def l_e_one_series(chi: DirichletCharacter, tol: float = 1e-10, budget: int = DEFAULT_BUDGET) -> SeriesResult:
    """L_E(1, chi) by extrapolated summation of the alternating series.

    The trivial character mod 1 gives the alternating harmonic series, log 2.
    """
    period = math.lcm(2, chi.modulus)
    vals = chi.period_values
    coeffs = [(1 if r % 2 else -1) * vals[r % chi.modulus] for r in range(1, period + 1)]
    return block_series(coeffs, tol, budget)


def l_one_series(chi: DirichletCharacter, tol: float = 1e-10, budget: int = DEFAULT_BUDGET) -> SeriesResult:
    """L(1, chi) from series.

    When chi(2) != 1 this divides the alternating value by 1 - chi(2); otherwise
    the plain Dirichlet series is summed in full periods and extrapolated.
    """
    if chi.is_principal():
        raise ValueError(f"{chi.label} is principal; L(s, chi) has a pole at s = 1")
    two = evaluate(chi, 2)
    if two is None or not two.is_one():
        factor = euler_factor_two(chi)
        res = l_e_one_series(chi, tol * min(1.0, abs(factor)), budget)
        return SeriesResult(res.value / factor, res.error / abs(factor), res.terms)
    return block_series(chi.period_values[1:] + chi.period_values[:1], tol, budget)


def euler_factor_two(chi: DirichletCharacter) -> complex:
    """1 - chi(2), with chi(2) = 0 when the modulus is even."""
    return 1 - chi.value(2)
