from math import gcd, prod

import pytest
from hypothesis import given, strategies as st

from cycloverify.modular import (
    crt_split,
    euler_phi,
    factorize,
    multiplicative_order,
    prime_power,
    primitive_root,
)


def trial_division(n):
    out = {}
    d = 2
    while n > 1:
        while n % d == 0:
            out[d] = out.get(d, 0) + 1
            n //= d
        d += 1
    return sorted(out.items())


@pytest.mark.parametrize("n, expected", [(1, []), (12, [(2, 2), (3, 1)]), (9999, [(3, 2), (11, 1), (101, 1)])])
def test_factorize_examples(n, expected):
    assert factorize(n) == expected


@given(st.integers(1, 10**6))
def test_factorize_reconstructs(n):
    f = factorize(n)
    assert prod(p**e for p, e in f) == n
    assert [p for p, _ in f] == sorted({p for p, _ in f})
    assert f == trial_division(n)


@pytest.mark.parametrize("n", [0, -3])
def test_rejects_nonpositive(n):
    with pytest.raises(ValueError):
        factorize(n)
    with pytest.raises(ValueError):
        euler_phi(n)


@pytest.mark.parametrize("n, expected", [(1, 1), (9, 6), (32, 16)])
def test_euler_phi_examples(n, expected):
    assert euler_phi(n) == expected


def test_euler_phi_matches_sieve_up_to_10k():
    N = 10**4
    phi = list(range(N + 1))
    for p in range(2, N + 1):
        if phi[p] == p:
            for k in range(p, N + 1, p):
                phi[k] -= phi[k] // p
    assert all(euler_phi(n) == phi[n] for n in range(1, N + 1))


def test_euler_phi_matches_gcd_count():
    for n in range(1, 600):
        assert euler_phi(n) == sum(1 for k in range(1, n + 1) if gcd(k, n) == 1)


@pytest.mark.parametrize("q, g", [(5, 2), (9, 2), (7, 3)])
def test_primitive_root_examples(q, g):
    assert primitive_root(q) == g


@pytest.mark.parametrize("q", [q for q in range(3, 400) if prime_power(q) and q % 2])
def test_primitive_root_has_full_order_and_is_smallest(q):
    g = primitive_root(q)
    phi = euler_phi(q)
    assert multiplicative_order(g, q) == phi
    assert all(gcd(h, q) > 1 or multiplicative_order(h, q) < phi for h in range(2, g))


@pytest.mark.parametrize("q", [8, 16, 15, 1, 2])
def test_primitive_root_rejects(q):
    with pytest.raises(ValueError):
        primitive_root(q)


def test_crt_examples():
    s = crt_split(12)
    assert s.moduli == (4, 3)
    assert s.lift((3, 2)) == 11
    s = crt_split(45)
    assert s.moduli == (9, 5)
    assert s.project(38) == (2, 3)
    s = crt_split(27)
    assert s.moduli == (27,)
    assert all(s.lift(s.project(a)) == a and s.project(a) == (a,) for a in range(27))


def test_crt_lift_project_identity():
    for m in range(1, 1001):
        s = crt_split(m)
        for a in range(m):
            assert s.lift(s.project(a)) == a
