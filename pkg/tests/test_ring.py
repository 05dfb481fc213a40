"""Tests for arithmetic and factorization in Z[w]."""

import random

import pytest

from invsum.kloosterman import recurrence
from invsum.ring import (
    CONJ_FROBENIUS,
    FROBENIUS,
    OMEGA,
    SQRT_MINUS_7,
    Kind,
    QuadInt,
    euclid_div,
    exact_div,
    exact_divides,
    factor,
    gcd,
    reduction_modulus,
    signed_order,
)

from oracles import naive_signed_order, ring_mul, ring_norm


def test_norm_examples():
    assert FROBENIUS.norm() == 2
    assert QuadInt(1, 2).norm() == 11
    assert QuadInt(5, -8).norm() == 113
    assert QuadInt(0, 0).norm() == 0


def test_frobenius_times_conjugate_is_two():
    assert FROBENIUS * CONJ_FROBENIUS == QuadInt(2)
    assert FROBENIUS.conj() == CONJ_FROBENIUS
    assert SQRT_MINUS_7 * SQRT_MINUS_7 == QuadInt(-7)


def test_conj_is_involution_and_norm_multiplicative():
    rng = random.Random(7)
    for _ in range(2000):
        z = QuadInt(rng.randint(-99, 99), rng.randint(-99, 99))
        w = QuadInt(rng.randint(-99, 99), rng.randint(-99, 99))
        assert z.conj().conj() == z
        assert (z * w).norm() == z.norm() * w.norm()
        assert z * z.conj() == QuadInt(z.norm())
        # cross-check multiplication against the naive oracle
        assert ring_mul((z.a, z.b), (w.a, w.b)) == ((z * w).a, (z * w).b)
        assert ring_norm((z.a, z.b)) == z.norm()


def test_omega_satisfies_its_minimal_polynomial():
    assert OMEGA * OMEGA == OMEGA - 2


def test_euclid_div_trivial_and_worked():
    q, r = euclid_div(QuadInt(3, 4), QuadInt(3, 4))
    assert (q, r) == (QuadInt(1), QuadInt(0))
    # conj(pi)^2 divides pi^5 - 1 exactly
    a = FROBENIUS ** 5 - 1
    q, r = euclid_div(a, CONJ_FROBENIUS ** 2)
    assert r == QuadInt(0)
    assert q * CONJ_FROBENIUS ** 2 == a
    assert q == QuadInt(1, 2)  # the norm-11 cofactor


def test_euclid_div_contract_random():
    rng = random.Random(11)
    for _ in range(10_000):
        a = QuadInt(rng.randint(-10**6, 10**6), rng.randint(-10**6, 10**6))
        d = QuadInt(rng.randint(-999, 999), rng.randint(-999, 999))
        if not d:
            continue
        q, r = euclid_div(a, d)
        assert q * d + r == a
        assert r.norm() < d.norm()


def test_euclid_div_half_integer_corner():
    # exact coordinates of a/d are (1/2, 1/2); plain rounding toward zero
    # would leave norm(r) == norm(d)
    a = QuadInt(1, -1)
    d = QuadInt(0, -1)
    q, r = euclid_div(a, d)
    assert q * d + r == a
    assert r.norm() < d.norm()


def test_gcd_examples():
    assert gcd(QuadInt(4, 6), QuadInt(0)) == QuadInt(4, 6).canonical()
    assert gcd(FROBENIUS, CONJ_FROBENIUS) == QuadInt(1)
    for n in range(1, 17):
        assert gcd(FROBENIUS ** n - 1, FROBENIUS) == QuadInt(1)
    with pytest.raises(ValueError):
        gcd(QuadInt(0), QuadInt(0))


def test_exact_divides_examples():
    assert exact_divides(QuadInt(1, 2), CONJ_FROBENIUS ** 5 + 1)
    assert exact_divides(QuadInt(3), CONJ_FROBENIUS ** 4 + 1)
    for n in range(1, 17):
        assert not exact_divides(FROBENIUS, FROBENIUS ** n - 1)
        assert not exact_divides(FROBENIUS, FROBENIUS ** n + 1)
    with pytest.raises(ZeroDivisionError):
        exact_divides(QuadInt(0), QuadInt(1))


def test_exact_div_round_trips():
    z = QuadInt(7, -3) * QuadInt(-2, 5)
    assert exact_div(z, QuadInt(7, -3)) == QuadInt(-2, 5)
    with pytest.raises(ValueError):
        exact_div(QuadInt(1, 1), QuadInt(0, 2))


def test_factor_golden_minus_side_n5():
    f = factor(FROBENIUS ** 5 - 1)
    assert f.value() == FROBENIUS ** 5 - 1
    assert f.conj_frobenius_exponent() == 2
    others = list(f.components())
    assert len(others) == 1
    assert others[0].kind is Kind.SPLIT
    assert others[0].prime == QuadInt(1, 2)
    assert others[0].exponent == 1


def test_factor_golden_minus_side_n8():
    f = factor(FROBENIUS ** 8 - 1)
    assert f.conj_frobenius_exponent() == 5
    others = list(f.components())
    assert [(c.prime, c.exponent, c.kind) for c in others] == [(QuadInt(3), 1, Kind.INERT)]
    assert str(f) == "pibar^5 * 3"


def test_factor_golden_plus_side_n8():
    f = factor(FROBENIUS ** 8 + 1)
    assert f.conj_frobenius_exponent() == 1
    others = list(f.components())
    assert len(others) == 1
    assert others[0].kind is Kind.SPLIT
    assert others[0].prime.norm() == 113
    # the conjugate that actually divides is 5 - 8w, canonically normalized
    assert others[0].prime in (QuadInt(5, -8), QuadInt(-5, 8).canonical(), QuadInt(13, -8))


def test_factor_ramified_at_n3():
    f = factor(FROBENIUS ** 3 + 1)
    kinds = [c.kind for c in f.components()]
    assert kinds == [Kind.RAMIFIED]
    comp = next(f.components())
    assert comp.prime == SQRT_MINUS_7.canonical()
    assert comp.exponent == 1


def test_factor_units_and_zero():
    assert factor(QuadInt(1)) == factor(QuadInt(1))
    assert factor(QuadInt(-1)).unit == -1
    assert factor(QuadInt(-1)).factors == ()
    with pytest.raises(ZeroDivisionError):
        factor(QuadInt(0))


def test_factor_of_two_lists_both_primes():
    f = factor(QuadInt(2))
    assert f.conj_frobenius_exponent() == 1
    rest = list(f.components())
    assert len(rest) == 1 and rest[0].prime == FROBENIUS
    assert f.value() == QuadInt(2)


@pytest.mark.parametrize("sign", (-1, +1))
def test_factor_round_trip_both_sides(sign):
    for n in range(1, 33):
        z = FROBENIUS ** n + sign
        f = factor(z)
        assert f.value() == z
        assert f.unit in (1, -1)
        # no two listed primes are associates
        primes = [c.prime for c in f.factors]
        for i, p in enumerate(primes):
            for q in primes[i + 1:]:
                assert p != q and p != -q


def test_norm_bookkeeping_against_recurrence():
    for n in range(1, 33):
        s = recurrence(n)
        assert (FROBENIUS ** n - 1).norm() == (1 << n) + 1 + s
        assert (FROBENIUS ** n + 1).norm() == (1 << n) + 1 - s


def test_two_adic_exponents():
    for n in range(2, 33):
        v2 = (n & -n).bit_length() - 1
        assert factor(FROBENIUS ** n - 1).conj_frobenius_exponent() == v2 + 2
        assert factor(FROBENIUS ** n + 1).conj_frobenius_exponent() == 1


def test_signed_order_goldens():
    assert signed_order(QuadInt(1, 2), 11) == (5, -1)
    assert signed_order(QuadInt(3), 3) == (4, -1)
    assert signed_order(QuadInt(5, -8), 113) == (56, -1)
    assert signed_order(SQRT_MINUS_7, 7) == (3, -1)
    # the conjugate of 1+2w reaches its order with the opposite sign
    assert signed_order(QuadInt(3, -2), 11) == (5, +1)


def test_signed_order_matches_naive_oracle():
    for n in range(2, 15):
        for comp in factor(FROBENIUS ** n - 1).components():
            for h in range(1, comp.exponent + 1):
                q = comp.prime ** h
                m = reduction_modulus(comp.kind, comp.rational_prime, h)
                assert signed_order(q, m) == naive_signed_order((q.a, q.b))


def test_signed_order_result_divides_as_claimed():
    for q, m in ((QuadInt(1, 2), 11), (QuadInt(3), 3), (QuadInt(5, -8), 113)):
        l, sign = signed_order(q, m)
        assert exact_divides(q, CONJ_FROBENIUS ** l - sign)
        for k in range(1, l):
            assert not exact_divides(q, CONJ_FROBENIUS ** k - 1)
            assert not exact_divides(q, CONJ_FROBENIUS ** k + 1)


def test_signed_order_rejects_even_norm():
    with pytest.raises(ValueError):
        signed_order(CONJ_FROBENIUS, 2)
    with pytest.raises(ValueError):
        signed_order(QuadInt(3), 5)  # reduce_mod not in the ideal


def test_reduction_modulus():
    assert reduction_modulus(Kind.SPLIT, 11, 2) == 121
    assert reduction_modulus(Kind.INERT, 3, 1) == 3
    assert reduction_modulus(Kind.RAMIFIED, 7, 3) == 49
    assert reduction_modulus(Kind.RAMIFIED, 7, 4) == 49


def test_str_rendering():
    assert str(QuadInt(1, 2)) == "1+2*w"
    assert str(QuadInt(5, -8)) == "5-8*w"
    assert str(QuadInt(-1)) == "-1"
    assert str(QuadInt(0, 1)) == "w"
    assert str(QuadInt(0, -1)) == "-w"
    assert str(factor(FROBENIUS ** 5 - 1)) == "pibar^2 * (1+2*w)"
