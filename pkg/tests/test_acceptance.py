"""Exit criteria for the package, one test per criterion.

Run ``pytest tests/test_acceptance.py -v``; the terminal summary prints one
PASS/FAIL line per criterion.
"""

import math
import random
import subprocess
import sys
import time

from cycloverify.characters import character_group, conductor, even_nontrivial, induce_primitive, parity, primitive_characters
from cycloverify.lfunctions import (
    euler_factor_two,
    gauss_sum,
    l_e_one_closed,
    l_e_one_series,
    l_one_closed,
    l_one_series,
    twisted_sum,
)
from cycloverify.modular import prime_power
from cycloverify.regulators import (
    conductor_descent_check,
    dedekind_det_check,
    eta_factor,
    h_plus_formula_check,
    regulator,
    regulator_duality,
    regulator_via_characters,
    verify_index_relation,
)
from cycloverify.unitgroups import half_group, minus_one_two_generate

RATIO_MODULI = [5, 7, 8, 9, 11, 13, 16, 25, 27, 32]


def primitive_nonprincipal(limit):
    return [
        c for f in range(3, limit + 1) if f % 4 != 2 for c in primitive_characters(f) if not c.is_principal()
    ]


def test_criterion_01_closed_vs_series(criterion):
    start = time.perf_counter()
    worst = 0.0
    chars = primitive_nonprincipal(40)
    for chi in chars:
        worst = max(
            worst,
            abs(l_one_closed(chi) - l_one_series(chi, 1e-8).value),
            abs(l_e_one_closed(chi) - l_e_one_series(chi, 1e-8).value),
        )
    elapsed = time.perf_counter() - start
    criterion(worst < 1e-6 and elapsed < 60, f"{len(chars)} characters, max |closed - series| = {worst:.2e}, {elapsed:.1f}s")


def test_criterion_02_euler_factor(criterion):
    worst = max(abs(l_e_one_closed(c) - euler_factor_two(c) * l_one_closed(c)) for c in primitive_nonprincipal(40))
    criterion(worst < 1e-10, f"max |L_E - (1 - chi(2)) L| = {worst:.2e}")


def test_criterion_03_gauss_sums(criterion):
    mag = max(
        abs(abs(gauss_sum(c)) ** 2 - f) for f in range(1, 101) for c in primitive_characters(f)
    )
    twist = max(
        abs(twisted_sum(c, k) - c.value(k).conjugate() * gauss_sum(c))
        for f in range(1, 51)
        for c in primitive_characters(f)
        for k in range(f)
    )
    criterion(mag < 1e-9 and twist < 1e-10, f"||tau|^2 - f| <= {mag:.2e} (f <= 100), twisted residual {twist:.2e} (f <= 50)")


def test_criterion_04_dedekind_selftest(criterion):
    rng = random.Random(2024)
    groups = [half_group(m) for m in range(3, 21)]
    worst = 0.0
    for _ in range(200):
        g = rng.choice(groups)
        f = {a: complex(rng.uniform(-2, 2), rng.uniform(-2, 2)) for a in g}
        worst = max(worst, dedekind_det_check(g, f).residual)
    criterion(worst < 1e-8, f"200 random functions, worst residual {worst:.2e}")


def test_criterion_05_lemma_duality(criterion):
    ms = [m for m in range(5, 33) if prime_power(m)]
    worst = max(regulator_duality(m, kind) for m in ms for kind in ("classic", "new"))
    nonsingular = [
        abs(regulator(m, k) - regulator_via_characters(m, k)) / regulator(m, k)
        for m in ms
        for k in ("classic", "new")
        if not (k == "new" and abs(eta_factor(m)) == 0)
    ]
    criterion(worst < 1e-8, f"{len(ms)} prime powers, worst relative gap {worst:.2e} (nonsingular only: {max(nonsingular):.2e})")


def test_criterion_06_index_ratio(criterion):
    reports = {m: verify_index_relation(m) for m in RATIO_MODULI}
    worst = max(abs(r.ratio - r.eta_abs) / r.eta_abs for r in reports.values())
    exact = abs(reports[5].ratio - 2) < 1e-6 * 2 and abs(reports[7].ratio - 3) < 1e-6 * 3
    criterion(worst < 1e-6 and exact, f"worst relative |ratio - |eta|| = {worst:.2e}; ratio(5) = {reports[5].ratio:.12g}, ratio(7) = {reports[7].ratio:.12g}")


def test_criterion_07_degenerate(criterion):
    lines = []
    ok = True
    for m in (17, 31):
        gen = minus_one_two_generate(m)
        eta = abs(eta_factor(m))
        rep = verify_index_relation(m)
        ok &= gen is False and eta < 1e-12 and rep.r_tilde_cyc < 1e-8 and rep.singular
        lines.append(f"m={m}: <-1,2> full={gen}, |eta|={eta:.1e}, R~cyc={rep.r_tilde_cyc:.1e}")
    criterion(ok, "; ".join(lines))


def test_criterion_08_conductor_descent(criterion):
    named = {(16, 8): -1, (32, 8): -1, (32, 16): -1, (25, 5): 1, (27, 9): 1}
    ok = True
    worst = 0.0
    count = 0
    for m in range(5, 65):
        pp = prime_power(m)
        if pp is None:
            continue
        for chi in even_nontrivial(m):
            if conductor(chi) == m:
                continue
            r = conductor_descent_check(m, chi)
            count += 1
            worst = max(worst, r.residual)
            ok &= r.matches and r.residual < 1e-9 and r.sign == (-1 if pp[0] == 2 else 1)
            if (m, r.conductor) in named:
                ok &= r.sign == named[(m, r.conductor)]
    seen = {(m, conductor(c)) for m in (16, 25, 27, 32) for c in even_nontrivial(m)}
    ok &= all(k in seen for k in named)
    criterion(ok, f"{count} imprimitive even characters over prime powers <= 64, worst residual {worst:.2e}")


def test_criterion_09_conductor_discriminant(criterion):
    lines = []
    ok = True
    for m in (5, 8, 13, 16, 25):
        prims = [induce_primitive(c) for c in character_group(m) if parity(c) == "even"]
        p = math.prod((gauss_sum(c) for c in prims), start=1 + 0j)
        root = math.sqrt(math.prod(c.modulus for c in prims))
        rel = abs(p - root) / root
        ok &= p.real > 0 and abs(p.imag) / root < 1e-8 and rel < 1e-8
        lines.append(f"{m}:{rel:.1e}")
    criterion(ok, "relative residuals " + " ".join(lines))


def test_criterion_10_class_number_cross_check(criterion):
    lines = []
    ok = True
    for m in (5, 7, 8, 9, 11, 13, 16):
        r = h_plus_formula_check(m, regulator(m, "classic"))
        eta = abs(eta_factor(m))
        ok &= abs(r.classical - 1) < 1e-6 and abs(r.eta_h_plus - eta) < 1e-6
        lines.append(f"{m}: h+={r.classical:.9f} eta*h+={r.eta_h_plus:.9f}")
    criterion(ok, "; ".join(lines))


def _cli(*args):
    return subprocess.run([sys.executable, "-m", "cycloverify", *args], capture_output=True, text=True)


def test_criterion_11_cli_exit_codes(criterion):
    good = _cli("verify", "--range", "5..32", "--json")
    perturbed = _cli("verify", "--range", "5..32", "--json", "--tol-det", "1e-20")
    malformed = _cli("verify", "--range", "5...x", "--json")
    codes = (good.returncode, perturbed.returncode, malformed.returncode)
    criterion(codes == (0, 1, 2), f"exit codes (pass, perturbed, malformed) = {codes}")
