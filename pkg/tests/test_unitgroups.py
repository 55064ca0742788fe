from math import gcd, prod

import pytest

from cycloverify.modular import euler_phi, prime_power
from cycloverify.unitgroups import dlog, half_group, minus_one_two_generate, unit_group


@pytest.mark.parametrize(
    "m, gens, orders",
    [(5, (2,), (4,)), (8, (7, 5), (2, 2)), (16, (15, 5), (2, 4)), (4, (3,), (2,))],
)
def test_unit_group_examples(m, gens, orders):
    s = unit_group(m)
    assert s.generators == gens
    assert s.orders == orders


@pytest.mark.parametrize("m", [0, 1, 2])
def test_unit_group_rejects_small(m):
    with pytest.raises(ValueError):
        unit_group(m)


@pytest.mark.parametrize("m, a, expected", [(5, 3, (3,)), (8, 1, (0, 0)), (16, 9, (0, 2))])
def test_dlog_examples(m, a, expected):
    assert dlog(unit_group(m), a) == expected


def test_dlog_rejects_nonunit():
    with pytest.raises(ValueError):
        dlog(unit_group(12), 6)


def test_dlog_reconstructs_every_unit():
    for m in range(3, 201):
        s = unit_group(m)
        assert len(s.generators) == len(s.orders)
        assert prod(s.orders) == euler_phi(m)
        seen = set()
        for a in range(m):
            if gcd(a, m) != 1:
                continue
            e = s.dlog(a)
            assert all(0 <= x < o for x, o in zip(e, s.orders))
            assert s.element(e) == a
            seen.add(e)
        assert len(seen) == euler_phi(m)


@pytest.mark.parametrize("m, reps", [(5, (1, 2)), (8, (1, 3)), (17, tuple(range(1, 9)))])
def test_half_group_examples(m, reps):
    assert half_group(m).representatives == reps


def test_half_group_invariants():
    for m in range(3, 300):
        g = half_group(m)
        assert len(g) == euler_phi(m) // 2
        classes = {frozenset({k % m, -k % m}) for k in g}
        assert len(classes) == len(g)
        units = {a for a in range(m) if gcd(a, m) == 1}
        assert set().union(*classes) == units


def test_half_group_operations():
    g = half_group(13)
    for a in g:
        assert g.mul(a, g.inv(a)) == 1
        assert g.mul(a, 1) == a
        for b in g:
            assert g.mul(a, b) in g.representatives


@pytest.mark.parametrize("q, expected", [(5, True), (17, False), (31, False), (7, True), (9, True)])
def test_minus_one_two_examples(q, expected):
    assert minus_one_two_generate(q) is expected


def test_minus_one_two_matches_closure():
    for q in range(3, 201, 2):
        if prime_power(q) is None:
            continue
        sub = {1}
        frontier = [1]
        while frontier:
            x = frontier.pop()
            for y in (x * 2 % q, x * (q - 1) % q):
                if y not in sub:
                    sub.add(y)
                    frontier.append(y)
        assert minus_one_two_generate(q) == (len(sub) == euler_phi(q))


@pytest.mark.parametrize("q", [8, 12, 15])
def test_minus_one_two_rejects(q):
    with pytest.raises(ValueError):
        minus_one_two_generate(q)
