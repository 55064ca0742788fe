"""Per-modulus verification suite producing :class:`VerificationRecord` streams."""

from __future__ import annotations

import math
import random
from dataclasses import asdict, dataclass, field

from .characters import (
    character_group,
    conductor,
    even_nontrivial,
    induce_primitive,
    parity,
    primitive_characters,
)
from .lfunctions import (
    ConvergenceError,
    euler_factor_two,
    gauss_sum,
    l_e_one_closed,
    l_e_one_series,
    l_one_closed,
    l_one_series,
    twisted_sum,
)
from .modular import prime_power
from .regulators import (
    KINDS,
    conductor_descent_check,
    dedekind_det_check,
    regulator_duality,
    verify_index_relation,
)
from .unitgroups import half_group

CHECKS = (
    "closed-vs-series",
    "conductor-discriminant",
    "dedekind",
    "descent",
    "euler-factor",
    "gauss-magnitude",
    "orthogonality",
    "ratio",
)


@dataclass(frozen=True)
class Tolerances:
    orthogonality: float = 1e-12
    gauss: float = 1e-9
    series: float = 1e-6
    euler: float = 1e-10
    det: float = 1e-8
    ratio: float = 1e-6
    descent: float = 1e-9
    discriminant: float = 1e-8

    def header(self) -> str:
        return " ".join(f"{k}={v:g}" for k, v in asdict(self).items())


@dataclass(frozen=True)
class VerificationRecord:
    modulus: int
    check: str
    status: str  # pass | fail | skipped
    residual: float
    details: str = ""

    def to_dict(self) -> dict:
        return asdict(self)


@dataclass
class Verifier:
    tol: Tolerances = field(default_factory=Tolerances)
    dps: int | None = None
    dedekind_trials: int = 3

    def _record(self, m: int, check: str, residual: float, tol: float, details: str) -> VerificationRecord:
        ok = residual < tol and not math.isnan(residual)
        return VerificationRecord(m, check, "pass" if ok else "fail", float(residual), details)

    def run(self, m: int) -> list[VerificationRecord]:
        if m < 3:
            raise ValueError(f"modulus must be >= 3, got {m}")
        if m % 4 == 2:
            return [VerificationRecord(m, c, "skipped", 0.0, "m ≡ 2 (mod 4)") for c in CHECKS]
        out = []
        for check in CHECKS:
            fn = getattr(self, "check_" + check.replace("-", "_"))
            try:
                out.append(fn(m))
            except ConvergenceError as exc:
                out.append(VerificationRecord(m, check, "fail", math.inf, str(exc)))
        return out

    def run_many(self, moduli) -> list[VerificationRecord]:
        return [r for m in sorted(set(moduli)) for r in self.run(m)]

    def check_orthogonality(self, m: int) -> VerificationRecord:
        chars = [c for c in character_group(m) if not c.is_principal()]
        res = max(abs(sum(c.period_values)) for c in chars)
        return self._record(m, "orthogonality", res, self.tol.orthogonality, f"{len(chars)} non-principal characters")

    def check_gauss_magnitude(self, m: int) -> VerificationRecord:
        chars = primitive_characters(m)
        mag = max(abs(abs(gauss_sum(c)) ** 2 - m) for c in chars)
        tw = max(
            abs(twisted_sum(c, k) - c.value(k).conjugate() * gauss_sum(c)) for c in chars for k in range(m)
        )
        return self._record(
            m, "gauss-magnitude", max(mag, tw), self.tol.gauss,
            f"{len(chars)} primitive; |tau|^2 residual {mag:.3g}, twisted-sum residual {tw:.3g}",
        )

    def _primitive_nonprincipal(self, m: int):
        return [c for c in primitive_characters(m) if not c.is_principal()]

    def check_closed_vs_series(self, m: int) -> VerificationRecord:
        chars = self._primitive_nonprincipal(m)
        stol = self.tol.series * 1e-2
        res = 0.0
        for c in chars:
            res = max(
                res,
                abs(l_one_closed(c) - l_one_series(c, stol).value),
                abs(l_e_one_closed(c) - l_e_one_series(c, stol).value),
            )
        return self._record(m, "closed-vs-series", res, self.tol.series, f"{len(chars)} primitive characters")

    def check_euler_factor(self, m: int) -> VerificationRecord:
        chars = self._primitive_nonprincipal(m)
        res = max(abs(l_e_one_closed(c) - euler_factor_two(c) * l_one_closed(c)) for c in chars)
        return self._record(m, "euler-factor", res, self.tol.euler, f"{len(chars)} primitive characters")

    def check_dedekind(self, m: int) -> VerificationRecord:
        g = half_group(m)
        rng = random.Random(m)
        res = 0.0
        notes = []
        if len(g) <= 24:
            for _ in range(self.dedekind_trials):
                f = {a: complex(rng.gauss(0, 1), rng.gauss(0, 1)) for a in g}
                res = max(res, dedekind_det_check(g, f).residual)
            notes.append(f"{self.dedekind_trials} random functions on G of order {len(g)}")
        pp = prime_power(m)
        if pp is not None and m >= 5:
            dual = max(regulator_duality(m, k, self.tol.det, self.dps) for k in KINDS)
            res = max(res, dual)
            notes.append(f"regulator duality {dual:.3g}")
        if not notes:
            return VerificationRecord(m, "dedekind", "skipped", 0.0, f"group order {len(g)} above bound")
        return self._record(m, "dedekind", res, self.tol.det, "; ".join(notes))

    def check_descent(self, m: int) -> VerificationRecord:
        if prime_power(m) is None:
            return VerificationRecord(m, "descent", "skipped", 0.0, "not a prime power")
        chars = [c for c in even_nontrivial(m) if conductor(c) < m]
        if not chars:
            return VerificationRecord(m, "descent", "skipped", 0.0, "no imprimitive even characters")
        results = [conductor_descent_check(m, c) for c in chars]
        bad = [r for r in results if not r.matches]
        res = max(r.residual for r in results)
        if bad:
            return VerificationRecord(m, "descent", "fail", res, f"sign rule violated for conductors {[r.conductor for r in bad]}")
        sign = results[0].expected_sign
        return self._record(m, "descent", res, self.tol.descent, f"{len(chars)} characters, sign {sign:+d}")

    def check_ratio(self, m: int) -> VerificationRecord:
        if prime_power(m) is None:
            return VerificationRecord(m, "ratio", "skipped", 0.0, "not a prime power")
        rep = verify_index_relation(m, dps=self.dps)
        if rep.singular:
            details = f"singular: eta=0, R~cyc={rep.r_tilde_cyc:.3g} (infinite index)"
            return self._record(m, "ratio", rep.residual, self.tol.det, details)
        details = f"ratio={rep.ratio:.12g} |eta|={rep.eta_abs:.12g}"
        if rep.trivial:
            details += " (empty determinant)"
        return self._record(m, "ratio", rep.residual, self.tol.ratio, details)

    def check_conductor_discriminant(self, m: int) -> VerificationRecord:
        chars = [c for c in character_group(m) if parity(c) == "even"]
        prims = [induce_primitive(c) for c in chars]
        prod_tau = math.prod((gauss_sum(c) for c in prims), start=1 + 0j)
        d = math.prod(c.modulus for c in prims)
        root = math.sqrt(d)
        res = abs(prod_tau - root) / root
        return self._record(
            m, "conductor-discriminant", res, self.tol.discriminant,
            f"prod tau = {prod_tau.real:.10g}{prod_tau.imag:+.2g}i, sqrt(d) = {root:.10g}",
        )
