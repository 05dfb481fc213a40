"""Exact arithmetic and factorization in Z[w], w = (1 + sqrt(-7))/2.

The ring of integers of Q(sqrt(-7)).  An element a + b*w is stored as
the integer pair (a, b); multiplication uses w^2 = w - 2 and the norm
is a^2 + ab + 2b^2.  The ring is Euclidean for this norm, the units are
+1 and -1, the rational prime 7 ramifies as (sqrt(-7))^2 and every
other prime either splits or stays inert according to whether
x^2 - x + 2 has a root modulo p.

The distinguished elements here: 2 splits as the product of the two
conjugate norm-2 primes FROBENIUS = -1 + w and CONJ_FROBENIUS = -w.
On the curve y^2 + xy = x^3 + 1 these act as the squaring endomorphism
and its adjoint; the adjoint acts on x-coordinates exactly as the map
x -> x + 1/x, which is why powers of CONJ_FROBENIUS modulo a prime
power govern the cycle lengths computed in :mod:`invsum.predictor`.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Iterator

from sympy import factorint
from sympy.ntheory.residue_ntheory import sqrt_mod

__all__ = [
    "QuadInt",
    "Kind",
    "RingFactor",
    "RingFactorization",
    "ZERO",
    "ONE",
    "OMEGA",
    "FROBENIUS",
    "CONJ_FROBENIUS",
    "SQRT_MINUS_7",
    "euclid_div",
    "gcd",
    "exact_divides",
    "exact_div",
    "factor",
    "signed_order",
    "reduction_modulus",
]


class QuadInt:
    """An element a + b*w of Z[w], with exact (arbitrary precision) coefficients."""

    __slots__ = ("a", "b")

    def __init__(self, a: int, b: int = 0) -> None:
        self.a = a
        self.b = b

    def __add__(self, other: QuadInt | int) -> QuadInt:
        if isinstance(other, int):
            return QuadInt(self.a + other, self.b)
        return QuadInt(self.a + other.a, self.b + other.b)

    __radd__ = __add__

    def __sub__(self, other: QuadInt | int) -> QuadInt:
        if isinstance(other, int):
            return QuadInt(self.a - other, self.b)
        return QuadInt(self.a - other.a, self.b - other.b)

    def __rsub__(self, other: int) -> QuadInt:
        return QuadInt(other - self.a, -self.b)

    def __neg__(self) -> QuadInt:
        return QuadInt(-self.a, -self.b)

    def __mul__(self, other: QuadInt | int) -> QuadInt:
        if isinstance(other, int):
            return QuadInt(self.a * other, self.b * other)
        a, b, c, d = self.a, self.b, other.a, other.b
        return QuadInt(a * c - 2 * b * d, a * d + b * c + b * d)

    __rmul__ = __mul__

    def __pow__(self, e: int) -> QuadInt:
        if e < 0:
            raise ValueError("negative powers leave the ring")
        r = QuadInt(1)
        base = self
        while e:
            if e & 1:
                r = r * base
            base = base * base
            e >>= 1
        return r

    def conj(self) -> QuadInt:
        """Ring conjugation, w -> 1 - w."""
        return QuadInt(self.a + self.b, -self.b)

    def norm(self) -> int:
        """a^2 + ab + 2b^2 = self * self.conj(); nonnegative, 0 only at 0."""
        return self.a * self.a + self.a * self.b + 2 * self.b * self.b

    def is_unit(self) -> bool:
        return self.norm() == 1

    def canonical(self) -> QuadInt:
        """The associate with a > 0, or a = 0 and b > 0 (units are only +-1)."""
        if self.a < 0 or (self.a == 0 and self.b < 0):
            return -self
        return self

    def __divmod__(self, other: QuadInt) -> tuple[QuadInt, QuadInt]:
        return euclid_div(self, other)

    def __floordiv__(self, other: QuadInt) -> QuadInt:
        return euclid_div(self, other)[0]

    def __mod__(self, other: QuadInt) -> QuadInt:
        return euclid_div(self, other)[1]

    def __eq__(self, other: object) -> bool:
        if isinstance(other, QuadInt):
            return self.a == other.a and self.b == other.b
        if isinstance(other, int):
            return self.a == other and self.b == 0
        return NotImplemented

    def __hash__(self) -> int:
        return hash((self.a, self.b))

    def __bool__(self) -> bool:
        return self.a != 0 or self.b != 0

    def __str__(self) -> str:
        if self.b == 0:
            return str(self.a)
        wpart = "w" if abs(self.b) == 1 else f"{abs(self.b)}*w"
        if self.a == 0:
            return wpart if self.b > 0 else f"-{wpart}"
        return f"{self.a}{'+' if self.b > 0 else '-'}{wpart}"

    def __repr__(self) -> str:
        return f"QuadInt({self.a}, {self.b})"


ZERO = QuadInt(0)
ONE = QuadInt(1)
OMEGA = QuadInt(0, 1)
FROBENIUS = QuadInt(-1, 1)       # the squaring endomorphism, norm 2
CONJ_FROBENIUS = QuadInt(0, -1)  # its conjugate; FROBENIUS * CONJ_FROBENIUS = 2
SQRT_MINUS_7 = QuadInt(-1, 2)    # 2w - 1, the ramified prime over 7


def _round_nearest(x: int, n: int) -> int:
    """Nearest integer to x/n for n > 0, ties rounded toward zero."""
    q, rem = divmod(x, n)
    if 2 * rem > n or (2 * rem == n and x < 0):
        return q + 1
    return q

# A quotient within coordinate distance 1 of the rounded one always achieves
# norm(r) < norm(d): the form a^2+ab+2b^2 bounds any sub-unit-norm error to
# coordinate offsets below 1.378 and 1.256.  Plain rounding alone can land on
# norm(r) == norm(d) when both exact coordinates are half-integers.
_NUDGES = ((0, 0), (1, 0), (-1, 0), (0, 1), (0, -1),
           (1, 1), (-1, -1), (1, -1), (-1, 1))


def euclid_div(a: QuadInt, d: QuadInt) -> tuple[QuadInt, QuadInt]:
    """Quotient and remainder with norm(r) < norm(d); deterministic.

    The exact coordinates of a/d are rounded to nearest (ties toward
    zero), then adjusted to the first nudge in a fixed order that meets
    the Euclidean bound.
    """
    nd = d.norm()
    if nd == 0:
        raise ZeroDivisionError("division by zero in Z[w]")
    num = a * d.conj()
    q0a = _round_nearest(num.a, nd)
    q0b = _round_nearest(num.b, nd)
    for da, db in _NUDGES:
        q = QuadInt(q0a + da, q0b + db)
        r = a - q * d
        if r.norm() < nd:
            return q, r
    raise AssertionError("Euclidean bound unreachable; Z[w] should be norm-Euclidean")


def gcd(a: QuadInt, b: QuadInt) -> QuadInt:
    """A greatest common divisor, normalized to its canonical associate."""
    if not a and not b:
        raise ValueError("gcd(0, 0) is undefined")
    while b:
        a, b = b, euclid_div(a, b)[1]
    return a.canonical()


def exact_divides(d: QuadInt, z: QuadInt) -> bool:
    """Whether z = d*w for some w in Z[w] (d != 0)."""
    nd = d.norm()
    if nd == 0:
        raise ZeroDivisionError("divisibility by zero in Z[w]")
    num = z * d.conj()
    return num.a % nd == 0 and num.b % nd == 0


def exact_div(z: QuadInt, d: QuadInt) -> QuadInt:
    """z / d when d divides z exactly; raises ValueError otherwise."""
    nd = d.norm()
    if nd == 0:
        raise ZeroDivisionError("division by zero in Z[w]")
    num = z * d.conj()
    if num.a % nd or num.b % nd:
        raise ValueError(f"{d} does not divide {z}")
    return QuadInt(num.a // nd, num.b // nd)


class Kind(enum.Enum):
    """Classification of a prime of Z[w] inside a factorization."""

    CONJ_FROBENIUS = "conj_frobenius"  # the prime -w over 2
    SPLIT = "split"                    # r with r * conj(r) = p, p odd (or -1+w over 2)
    INERT = "inert"                    # rational p with x^2 - x + 2 irreducible mod p
    RAMIFIED = "ramified"              # sqrt(-7), the prime over 7


@dataclass(frozen=True)
class RingFactor:
    """One prime power of a factorization."""

    prime: QuadInt
    exponent: int
    kind: Kind
    rational_prime: int

    def prime_power(self) -> QuadInt:
        return self.prime ** self.exponent


@dataclass(frozen=True)
class RingFactorization:
    """unit * product of prime powers, exactly equal to the factored element."""

    unit: int
    factors: tuple[RingFactor, ...]

    def value(self) -> QuadInt:
        v = QuadInt(self.unit)
        for f in self.factors:
            v = v * f.prime_power()
        return v

    def conj_frobenius_exponent(self) -> int:
        for f in self.factors:
            if f.kind is Kind.CONJ_FROBENIUS:
                return f.exponent
        return 0

    def components(self) -> Iterator[RingFactor]:
        """The factors other than the conjugate-Frobenius prime."""
        return (f for f in self.factors if f.kind is not Kind.CONJ_FROBENIUS)

    def __str__(self) -> str:
        parts = [] if self.unit == 1 and self.factors else [str(self.unit)]
        for f in self.factors:
            if f.kind is Kind.CONJ_FROBENIUS:
                name = "pibar"
            elif f.kind is Kind.SPLIT and f.rational_prime == 2:
                name = "pi"
            elif f.prime.b == 0:
                name = str(f.prime.a)
            else:
                name = f"({f.prime})"
            parts.append(name if f.exponent == 1 else f"{name}^{f.exponent}")
        return " * ".join(parts)


def _extract(z: QuadInt, p: QuadInt) -> tuple[QuadInt, int]:
    e = 0
    while exact_divides(p, z):
        z = exact_div(z, p)
        e += 1
    return z, e


def factor(z: QuadInt) -> RingFactorization:
    """Complete prime factorization of a nonzero element of Z[w].

    Factors the rational norm first, then peels off one ring prime per
    rational prime: 2 contributes CONJ_FROBENIUS and/or FROBENIUS, 7
    contributes sqrt(-7), and any other p contributes either the inert
    rational prime itself or a conjugate pair of split primes.  For a
    split pair, whichever conjugate actually divides is recorded (the
    representative with b >= 0 is tried first).
    """
    if not z:
        raise ZeroDivisionError("cannot factor zero")
    norm_factors = factorint(z.norm())
    cofactor = z
    factors: list[RingFactor] = []
    if 2 in norm_factors:
        cofactor, e = _extract(cofactor, CONJ_FROBENIUS)
        if e:
            factors.append(RingFactor(CONJ_FROBENIUS, e, Kind.CONJ_FROBENIUS, 2))
        cofactor, e2 = _extract(cofactor, FROBENIUS)
        if e2:
            factors.append(RingFactor(FROBENIUS, e2, Kind.SPLIT, 2))
        assert e + e2 == norm_factors[2]
    for p in sorted(norm_factors):
        if p == 2:
            continue
        mult = norm_factors[p]
        if p == 7:
            prime = SQRT_MINUS_7.canonical()
            cofactor, e = _extract(cofactor, prime)
            assert e == mult
            factors.append(RingFactor(prime, e, Kind.RAMIFIED, 7))
            continue
        root = sqrt_mod(-7, p)
        if root is None:
            # inert: p itself is prime, norm p^2
            assert mult % 2 == 0, (z, p)
            e = mult // 2
            prime = QuadInt(p)
            for _ in range(e):
                cofactor = exact_div(cofactor, prime)
            factors.append(RingFactor(prime, e, Kind.INERT, p))
            continue
        rho = (1 + root) * pow(2, -1, p) % p
        r = gcd(QuadInt(p), QuadInt(rho, -1))
        assert r.norm() == p, (p, r)
        first, second = r.canonical(), r.conj().canonical()
        if first.b < 0:
            first, second = second, first
        cofactor, e1 = _extract(cofactor, first)
        cofactor, e2 = _extract(cofactor, second)
        assert e1 + e2 == mult, (z, p)
        if e1:
            factors.append(RingFactor(first, e1, Kind.SPLIT, p))
        if e2:
            factors.append(RingFactor(second, e2, Kind.SPLIT, p))
    assert cofactor.is_unit(), (z, cofactor)
    result = RingFactorization(cofactor.a, tuple(factors))
    assert result.value() == z
    return result


def reduction_modulus(kind: Kind, rational_prime: int, h: int) -> int:
    """A rational integer inside the ideal (prime^h), used to bound coefficients.

    Reducing coordinates modulo this value preserves divisibility by
    prime^h.  Split and inert prime powers contain p^h; sqrt(-7)^h
    contains 7^ceil(h/2).
    """
    if kind is Kind.RAMIFIED:
        return 7 ** ((h + 1) // 2)
    return rational_prime ** h


def signed_order(q: QuadInt, reduce_mod: int) -> tuple[int, int]:
    """Smallest k >= 1 with q | CONJ_FROBENIUS^k - s for s = +1 or -1, and that s.

    q must be a prime power coprime to 2 (equivalently to both primes
    over 2); then exactly one sign occurs at the minimal k.  Powers are
    iterated with coordinates reduced modulo reduce_mod, which must lie
    in the ideal (q) so that the divisibility test is unaffected.
    """
    nq = q.norm()
    if nq % 2 == 0 or nq == 1:
        raise ValueError("q must be a prime power coprime to the primes over 2")
    if reduce_mod <= 0 or not exact_divides(q, QuadInt(reduce_mod)):
        raise ValueError("reduce_mod must be a positive integer in the ideal (q)")
    qc = q.conj()
    m = reduce_mod
    a, b = 0, -1 % m  # CONJ_FROBENIUS reduced
    for k in range(1, nq + 1):
        for shift, sign in ((-1, +1), (1, -1)):
            num = QuadInt(a + shift, b) * qc
            if num.a % nq == 0 and num.b % nq == 0:
                return k, sign
        # multiply by CONJ_FROBENIUS = -w:  (a + b*w)(-w) = 2b - (a+b)*w
        a, b = 2 * b % m, -(a + b) % m
    raise AssertionError("order search exceeded the unit-group bound")
