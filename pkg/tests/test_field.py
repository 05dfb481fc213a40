"""Tests for GF(2^n) arithmetic.

Expected values for the worked examples were frozen from the naive
schoolbook oracle in oracles.py (symbolic polynomial reduction and
brute-force search), which shares no code with the library.
"""

import random

import pytest

from invsum.field import (
    BinaryField,
    all_inverses,
    find_irreducible,
    is_irreducible,
    parse_modulus,
)

from oracles import (
    naive_inverse,
    naive_irreducible,
    naive_mulmod,
    naive_smallest_irreducible,
    naive_trace,
)


# smallest irreducible bitmask per degree, frozen from naive_smallest_irreducible
SMALLEST = {
    1: 0x3, 2: 0x7, 3: 0xB, 4: 0x13, 5: 0x25, 6: 0x43, 7: 0x83, 8: 0x11B,
    9: 0x203, 10: 0x409, 11: 0x805, 12: 0x1009, 13: 0x201B, 14: 0x4021,
    15: 0x8003, 16: 0x1002B,
}


@pytest.fixture(scope="module")
def f32():
    return BinaryField(5, 0x25)


def test_find_irreducible_frozen_table():
    for n, mask in SMALLEST.items():
        assert find_irreducible(n).modulus == mask
        assert naive_smallest_irreducible(n) == mask


def test_find_irreducible_degree_one_is_x_plus_1():
    # x alone has a zero constant term, so the rule forces x+1
    assert find_irreducible(1).modulus == 0b11


def test_known_moduli_accepted():
    assert BinaryField(5, 0x25).modulus == 0x25
    assert BinaryField(8, 0x11D).modulus == 0x11D


def test_construction_rejects_bad_moduli():
    with pytest.raises(ValueError):
        BinaryField(5, 0x11D)  # degree mismatch
    with pytest.raises(ValueError):
        BinaryField(4, 0b10101)  # (x^2+x+1)^2
    with pytest.raises(ValueError):
        BinaryField(64, (1 << 64) | 0x1B)  # beyond the word-size bound
    with pytest.raises(ValueError):
        BinaryField(0, 1)


def test_is_irreducible_against_naive_oracle():
    for f in range(2, 1 << 10):
        assert is_irreducible(f) == naive_irreducible(f), hex(f)


def test_parse_modulus_forms():
    assert parse_modulus("0x25") == 0x25
    assert parse_modulus("37") == 37
    assert parse_modulus("5,2,0") == 0x25
    assert parse_modulus("8,4,3,2,0") == 0x11D
    with pytest.raises(ValueError):
        parse_modulus("x^5+x^2+1")


def test_add_is_xor(f32):
    a = f32(0b10110)
    assert (a + a).bits == 0
    assert (a + f32.zero()) == a
    # x + (x+1) = 1 in any field of degree >= 2
    assert (f32(0b10) + f32(0b11)) == f32.one()


def test_mul_examples(f32):
    a = f32(0b10)  # the class of x
    assert a * f32.one() == a
    assert (a * f32.zero()).bits == 0
    # alpha^5 = alpha^2 + 1, frozen from symbolic reduction of x^5 by x^5+x^2+1
    assert (a ** 5).bits == 0b101
    assert naive_mulmod(0b10000, 0b10, 0x25) == 0b101


def test_inverse_examples(f32):
    assert f32.one().inverse() == f32.one()
    # inv(alpha) = alpha^4 + alpha, frozen from brute-force search
    a = f32(0b10)
    assert a.inverse().bits == 0b10010
    assert naive_inverse(0b10, 0x25) == 0b10010
    assert a * a.inverse() == f32.one()
    with pytest.raises(ZeroDivisionError):
        f32.zero().inverse()


def test_inverse_is_involution(f32):
    for x in range(1, 32):
        e = f32(x)
        assert e.inverse().inverse() == e


def test_trace_basics():
    for n in (2, 3, 4, 5, 8, 11):
        f = find_irreducible(n)
        assert f.zero().trace() == 0
        assert f.one().trace() == n % 2
        for x in range(f.order):
            assert f.trace_int(x) == f.trace_int(f.mul_int(x, x))


def test_trace_against_power_sum_oracle():
    for n, mask in ((5, 0x25), (8, 0x11D), (6, 0x43)):
        f = BinaryField(n, mask)
        for x in range(f.order):
            assert f.trace_int(x) == naive_trace(x, mask, n)


@pytest.mark.parametrize("n", range(1, 17))
def test_trace_is_balanced(n):
    f = find_irreducible(n)
    ones = sum(f.trace_int(x) for x in range(f.order))
    assert ones == f.order // 2


def test_solve_quadratic_examples(f32):
    assert f32.solve_quadratic(f32.zero()) == (f32.zero(), f32.one())
    # any c with trace 1 has no solution
    c = next(x for x in f32.elements() if x.trace() == 1)
    assert f32.solve_quadratic(c) == ()


@pytest.mark.parametrize("n", range(1, 13))
def test_solve_quadratic_exhaustive(n):
    f = find_irreducible(n)
    for c in range(f.order):
        sols = f.solve_quadratic_int(c)
        if f.trace_int(c) == 0:
            z1, z2 = sols
            assert z2 == z1 ^ 1
            assert f.mul_int(z1, z1) ^ z1 == c
        else:
            assert sols == ()


def test_sqrt_examples(f32):
    assert f32.zero().sqrt().bits == 0
    assert f32.one().sqrt() == f32.one()
    # sqrt(alpha^2+1) = alpha+1, frozen from brute-force search over GF(2^5)
    assert f32(0b101).sqrt().bits == 0b11


@pytest.mark.parametrize("n", (2, 3, 6, 7, 12))
def test_sqrt_inverts_squaring(n):
    f = find_irreducible(n)
    for x in range(f.order):
        assert f.sqrt_int(f.mul_int(x, x)) == x


@pytest.mark.parametrize("n", range(2, 17))
def test_field_axioms_random(n):
    # 10^4 random triples per degree: associativity, commutativity, distributivity
    f = find_irreducible(n)
    rng = random.Random(1000 + n)
    mask = f.order - 1
    for _ in range(10_000):
        a, b, c = rng.getrandbits(n) & mask, rng.getrandbits(n) & mask, rng.getrandbits(n) & mask
        ab = f.mul_int(a, b)
        assert ab == f.mul_int(b, a)
        assert f.mul_int(ab, c) == f.mul_int(a, f.mul_int(b, c))
        assert f.mul_int(a, b ^ c) == ab ^ f.mul_int(a, c)


@pytest.mark.parametrize("n", range(1, 13))
def test_trace_of_inverse_of_map_image_vanishes(n):
    # trace(1/(a + 1/a)) = 0 for every a != 0 with a + 1/a != 0
    f = find_irreducible(n)
    for a in range(1, f.order):
        s = a ^ f.inv_int(a)
        if s:
            assert f.trace_int(f.inv_int(s)) == 0


def test_all_inverses_matches_scalar_path():
    for n in (1, 2, 5, 8, 11):
        f = find_irreducible(n)
        batch = all_inverses(f)
        assert len(batch) == f.order - 1
        for x in range(1, f.order):
            assert batch[x - 1] == f.inv_int(x)
    # sub-ranges are honored
    f = find_irreducible(6)
    assert all_inverses(f, 5, 9) == [f.inv_int(x) for x in range(5, 9)]


def test_cross_field_operations_rejected():
    a = BinaryField(5, 0x25)(3)
    b = BinaryField(5, 0x3B)(3)  # hypothetical other degree-5 modulus
    assert is_irreducible(0x3B)
    with pytest.raises(ValueError):
        _ = a + b
    with pytest.raises(ValueError):
        _ = a * b
    assert a != b


def test_element_ordering_and_hash(f32):
    elems = sorted(f32.elements())
    assert [e.bits for e in elems] == list(range(32))
    assert len({f32(1), f32(1), f32(2)}) == 2
