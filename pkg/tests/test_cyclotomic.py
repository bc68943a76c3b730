"""Z[zeta_p] arithmetic: ring laws against a naive oracle, pi-adic valuation.

The naive multiplication oracle works in Z[x]/(x^p - 1) first (exponent
arithmetic mod p) and then eliminates zeta^(p-1) with the minimal relation
1 + zeta + ... + zeta^(p-1) = 0; the library's convolution never sees it.
"""

import random

import pytest
from hypothesis import given, settings, strategies as st

from npscan.cyclotomic import (
    INFINITY,
    CycInt,
    as_rational_integer,
    exact_div_int,
    galois_apply,
    pi_valuation,
    zeta_power,
)
from npscan.errors import NotAUnit, NotDivisible, NotRational


def naive_mul(a: CycInt, b: CycInt) -> CycInt:
    p = a.p
    full = [0] * p
    for i, ai in enumerate(a.coeffs):
        for j, bj in enumerate(b.coeffs):
            full[(i + j) % p] += ai * bj
    top = full[p - 1]
    return CycInt(p, tuple(full[i] - top for i in range(p - 1)))


def random_cyc(p, rng, bound=9):
    return CycInt(p, tuple(rng.randint(-bound, bound) for _ in range(p - 1)))


def test_basic_identities_p3():
    zeta = zeta_power(3, 1)
    one = CycInt.one(3)
    # (1 + zeta) * zeta = zeta + zeta^2 = -1
    assert (one + zeta) * zeta == CycInt.from_int(3, -1)
    assert zeta * zeta == zeta_power(3, 2)
    assert zeta_power(3, 3) == one
    assert zeta_power(3, 2) == CycInt(3, (-1, -1))


def test_zeta_power_wraps_and_relation():
    for p in (3, 5, 7):
        s = CycInt.zero(p)
        for k in range(p):
            s = s + zeta_power(p, k)
        assert s.is_zero()  # 1 + zeta + ... + zeta^(p-1) = 0
        assert zeta_power(p, p + 2) == zeta_power(p, 2)
        assert zeta_power(p, -1) == zeta_power(p, p - 1)


@pytest.mark.parametrize("p", [3, 5, 7, 11])
def test_mul_matches_naive_oracle(p):
    rng = random.Random(p)
    for _ in range(200):
        a, b = random_cyc(p, rng), random_cyc(p, rng)
        assert a * b == naive_mul(a, b)


def test_int_scalars_and_from_root_counts():
    a = CycInt.from_root_counts(3, [1, 2, 0])  # 1 + 2*zeta
    assert a == CycInt(3, (1, 2))
    assert 2 * a == a + a
    assert a * -1 == -a
    assert CycInt.from_int(5, 7) == CycInt(5, (7, 0, 0, 0))


def test_exact_division():
    a = CycInt(5, (2, 4, -6, 0))
    assert exact_div_int(a, 2) == CycInt(5, (1, 2, -3, 0))
    with pytest.raises(NotDivisible):
        exact_div_int(CycInt(5, (1, 2, 0, 0)), 2)


def test_pi_valuation_frozen_values():
    one = CycInt.one(3)
    zeta = zeta_power(3, 1)
    assert pi_valuation(one - zeta) == 1
    assert pi_valuation(CycInt.from_int(3, 3)) == 2  # v(p) = p - 1
    assert pi_valuation(CycInt(3, (1, 2))) == 1
    assert pi_valuation(CycInt.zero(3)) == INFINITY
    assert pi_valuation(CycInt.one(7)) == 0
    assert pi_valuation(CycInt.from_int(7, 7)) == 6
    assert pi_valuation(CycInt.from_int(7, 14)) == 6
    assert pi_valuation(CycInt.from_int(7, 49)) == 12
    for p in (3, 5, 7):
        assert pi_valuation(CycInt.one(p) - zeta_power(p, 1)) == 1


def test_product_of_conjugates_of_pi_is_p():
    for p in (3, 5, 7, 11):
        acc = CycInt.one(p)
        one = CycInt.one(p)
        for c in range(1, p):
            acc = acc * (one - zeta_power(p, c))
        assert as_rational_integer(acc) == p
        assert pi_valuation(acc) == p - 1


@pytest.mark.parametrize("p", [3, 5, 7])
def test_valuation_is_additive_on_products(p):
    rng = random.Random(1000 + p)
    for _ in range(300):
        a, b = random_cyc(p, rng), random_cyc(p, rng)
        if a.is_zero() or b.is_zero():
            continue
        assert pi_valuation(a * b) == pi_valuation(a) + pi_valuation(b)


@pytest.mark.parametrize("p", [3, 5, 7])
def test_valuation_ultrametric(p):
    rng = random.Random(2000 + p)
    for _ in range(200):
        a, b = random_cyc(p, rng), random_cyc(p, rng)
        va, vb, vs = pi_valuation(a), pi_valuation(b), pi_valuation(a + b)
        assert vs >= min(va, vb)
        if va != vb:
            assert vs == min(va, vb)


def test_galois_action():
    a = CycInt(5, (1, 2, 3, 4))
    assert galois_apply(a, 1) == a
    assert galois_apply(zeta_power(5, 1), 2) == zeta_power(5, 2)
    assert galois_apply(zeta_power(5, 3), 2) == zeta_power(5, 6)
    with pytest.raises(NotAUnit):
        galois_apply(a, 5)
    with pytest.raises(NotAUnit):
        galois_apply(a, 0)


@pytest.mark.parametrize("p", [3, 5, 7])
def test_galois_preserves_valuation_and_ring_ops(p):
    rng = random.Random(3000 + p)
    for _ in range(120):
        a, b = random_cyc(p, rng), random_cyc(p, rng)
        c = rng.randrange(1, p)
        assert galois_apply(a * b, c) == galois_apply(a, c) * galois_apply(b, c)
        assert galois_apply(a + b, c) == galois_apply(a, c) + galois_apply(b, c)
        assert pi_valuation(galois_apply(a, c)) == pi_valuation(a)


def test_as_rational_integer():
    a = CycInt(3, (1, 2))
    norm = a * galois_apply(a, 2)
    assert as_rational_integer(norm) == 3  # (1+2z)(1+2z^2)
    assert as_rational_integer(CycInt.from_int(5, -12)) == -12
    with pytest.raises(NotRational):
        as_rational_integer(zeta_power(5, 1))


def test_norm_is_rational():
    for p in (5, 7):
        rng = random.Random(p)
        for _ in range(40):
            a = random_cyc(p, rng, bound=4)
            acc = CycInt.one(p)
            for c in range(1, p):
                acc = acc * galois_apply(a, c)
            as_rational_integer(acc)  # must not raise


@settings(max_examples=80, deadline=None)
@given(
    st.tuples(*[st.integers(-20, 20)] * 4),
    st.tuples(*[st.integers(-20, 20)] * 4),
    st.tuples(*[st.integers(-20, 20)] * 4),
)
def test_ring_laws_p5(t1, t2, t3):
    a, b, c = CycInt(5, t1), CycInt(5, t2), CycInt(5, t3)
    assert a * (b + c) == a * b + a * c
    assert (a * b) * c == a * (b * c)
    assert a * b == naive_mul(a, b)
