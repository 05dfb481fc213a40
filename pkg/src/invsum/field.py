"""Exact arithmetic in binary fields GF(2^n) with a polynomial basis.

Field elements are stored as nonnegative int bitmasks: bit i is the
coefficient of x^i of the residue polynomial, always reduced modulo the
field polynomial.  The zero and one elements are therefore the ints 0
and 1.  A ``BinaryField`` object carries the modulus and the
precomputed data (trace mask, quadratic-solver constants) shared by all
its elements; ``FieldElement`` is a thin wrapper that adds operators.

The raw int layer (``BinaryField.mul_int`` and friends) exists because
exhaustive enumeration over all 2^n elements is the dominant workload;
wrapper objects would double the cost for nothing.
"""

from __future__ import annotations

__all__ = [
    "BinaryField",
    "FieldElement",
    "find_irreducible",
    "is_irreducible",
    "parse_modulus",
    "all_inverses",
]

MAX_DEGREE = 63  # elements must fit a machine word


def _mul_raw(a, b):
    """Carry-less product of two GF(2)[x] bitmasks (no reduction)."""
    if a < b:
        a, b = b, a
    r = 0
    while b:
        if b & 1:
            r ^= a
        a <<= 1
        b >>= 1
    return r


def _mod_raw(a, f):
    """Reduce bitmask a modulo bitmask f (f != 0)."""
    df = f.bit_length() - 1
    da = a.bit_length() - 1
    while da >= df and a:
        a ^= f << (da - df)
        da = a.bit_length() - 1
    return a


def _gcd_raw(a, b):
    """Polynomial gcd of two bitmasks."""
    while b:
        a, b = b, _mod_raw(a, b)
    return a


def _inv_raw(a, f):
    """Inverse of bitmask a modulo the irreducible bitmask f, a != 0.

    Extended Euclidean algorithm on GF(2)[x]; every intermediate value
    stays below 2^(2*deg f), so this is O(deg f) word operations.
    """
    if a == 0:
        raise ZeroDivisionError("inverse of zero field element")
    r0, r1 = f, a
    s0, s1 = 0, 1
    while r1:
        d = r0.bit_length() - r1.bit_length()
        if d < 0:
            r0, r1, s0, s1 = r1, r0, s1, s0
            d = -d
        r0 ^= r1 << d
        s0 ^= s1 << d
    # r0 is now the gcd (1 for irreducible f and a != 0) and s0*a = r0 mod f,
    # but s0 itself may still have degree >= deg f
    return _mod_raw(s0, f)


def _prime_factors(n):
    """Distinct prime factors of a small positive integer."""
    out = []
    p = 2
    while p * p <= n:
        if n % p == 0:
            out.append(p)
            while n % p == 0:
                n //= p
        p += 1 if p == 2 else 2
    if n > 1:
        out.append(n)
    return out


def is_irreducible(f):
    """Deterministic irreducibility test for a GF(2)[x] bitmask.

    f of degree n is irreducible iff x^(2^n) == x (mod f) and
    gcd(x^(2^(n/p)) - x, f) = 1 for every prime p dividing n.
    """
    n = f.bit_length() - 1
    if n < 1:
        return False
    if n == 1:
        return True
    x = 2
    powers = {}
    acc = x
    for i in range(1, n + 1):
        acc = _mod_raw(_mul_raw(acc, acc), f)
        powers[i] = acc
    if powers[n] != x:
        return False
    for p in _prime_factors(n):
        if _gcd_raw(powers[n // p] ^ x, f) != 1:
            return False
    return True


def parse_modulus(text):
    """Parse a field polynomial given as hex bitmask or exponent list.

    Accepts e.g. "0x25" (bits of x^5+x^2+1) or "5,2,0" (exponents of
    the nonzero terms).  Returns the bitmask.
    """
    text = text.strip()
    try:
        if "," in text:
            mask = 0
            for part in text.split(","):
                e = int(part.strip(), 0)
                if e < 0:
                    raise ValueError
                mask |= 1 << e
            return mask
        return int(text, 0)
    except ValueError:
        raise ValueError(f"cannot parse polynomial {text!r}: "
                         "expected a hex bitmask like 0x25 or an exponent "
                         "list like 5,2,0") from None


class BinaryField:
    """The field GF(2^n) presented as GF(2)[x] modulo an irreducible polynomial.

    Immutable after construction; safe to share across threads.
    """

    __slots__ = ("n", "modulus", "order", "_trace_mask", "_delta")

    def __init__(self, n, modulus):
        if not 1 <= n <= MAX_DEGREE:
            raise ValueError(f"extension degree must be in 1..{MAX_DEGREE}, got {n}")
        if modulus.bit_length() - 1 != n:
            raise ValueError(
                f"modulus {hex(modulus)} has degree {modulus.bit_length() - 1}, expected {n}")
        if not is_irreducible(modulus):
            raise ValueError(f"modulus {hex(modulus)} is reducible over GF(2)")
        self.n = n
        self.modulus = modulus
        self.order = 1 << n
        # trace is GF(2)-linear: record which basis monomials x^i have trace 1,
        # then trace(a) = parity of popcount(a & mask)
        mask = 0
        for i in range(n):
            if self._trace_slow(1 << i):
                mask |= 1 << i
        self._trace_mask = mask
        # smallest trace-1 element, used by the even-degree quadratic solver
        delta = None
        for bits in range(1, self.order):
            if (bits & mask).bit_count() & 1:
                delta = bits
                break
        self._delta = delta

    def _trace_slow(self, bits):
        t = 0
        y = bits
        for _ in range(self.n):
            t ^= y
            y = self.mul_int(y, y)
        return t

    # -- raw int layer ---------------------------------------------------

    def mul_int(self, a, b):
        """Product of two element bitmasks."""
        return _mod_raw(_mul_raw(a, b), self.modulus)

    def inv_int(self, a):
        """Inverse of a nonzero element bitmask."""
        return _inv_raw(a, self.modulus)

    def trace_int(self, a):
        """Absolute trace GF(2^n) -> GF(2) of an element bitmask."""
        return (a & self._trace_mask).bit_count() & 1

    def sqrt_int(self, a):
        """Square root of an element bitmask, i.e. a^(2^(n-1))."""
        for _ in range(self.n - 1):
            a = self.mul_int(a, a)
        return a

    def pow_int(self, a, e):
        """a^e for an element bitmask and integer e (negative allowed for a != 0)."""
        if e < 0:
            a, e = self.inv_int(a), -e
        r = 1
        while e:
            if e & 1:
                r = self.mul_int(r, a)
            a = self.mul_int(a, a)
            e >>= 1
        return r

    def solve_quadratic_int(self, c):
        """Solutions of z^2 + z = c as a tuple of bitmasks.

        Returns the two solutions (z, z+1) sorted ascending when the
        trace of c is 0, and () when it is 1.  Uses the half trace for
        odd n and the trace decomposition against a fixed trace-1
        element delta for even n; both are deterministic.
        """
        if self.trace_int(c) == 1:
            return ()
        if self.n & 1:
            # half trace: z = sum of c^(4^i), i = 0 .. (n-1)/2
            z = c
            s = c
            for _ in range((self.n - 1) // 2):
                s = self.mul_int(s, s)
                s = self.mul_int(s, s)
                z ^= s
        else:
            # z = sum over i = 1 .. n-1 of delta^(2^i) * (c + c^2 + ... + c^(2^(i-1)))
            z = 0
            partial = c
            cpow = c
            dpow = self.mul_int(self._delta, self._delta)
            for _ in range(self.n - 1):
                z ^= self.mul_int(dpow, partial)
                cpow = self.mul_int(cpow, cpow)
                partial ^= cpow
                dpow = self.mul_int(dpow, dpow)
        assert self.mul_int(z, z) ^ z == c
        return (z, z ^ 1) if z < z ^ 1 else (z ^ 1, z)

    # -- element layer ---------------------------------------------------

    def __call__(self, bits):
        """Wrap an int bitmask (or another element of this field) as an element."""
        if isinstance(bits, FieldElement):
            if bits.field != self:
                raise ValueError("element belongs to a different field")
            return bits
        if not 0 <= bits < self.order:
            raise ValueError(f"bitmask {bits} out of range for GF(2^{self.n})")
        return FieldElement(self, bits)

    def zero(self):
        return FieldElement(self, 0)

    def one(self):
        return FieldElement(self, 1)

    def elements(self):
        """All field elements in ascending bitmask order."""
        return (FieldElement(self, b) for b in range(self.order))

    def solve_quadratic(self, c):
        """Element-level version of :meth:`solve_quadratic_int`."""
        c = self(c)
        return tuple(FieldElement(self, z) for z in self.solve_quadratic_int(c.bits))

    def __eq__(self, other):
        return (isinstance(other, BinaryField)
                and self.n == other.n and self.modulus == other.modulus)

    def __hash__(self):
        return hash((self.n, self.modulus))

    def __repr__(self):
        return f"BinaryField(n={self.n}, modulus={hex(self.modulus)})"


class FieldElement:
    """An element of a :class:`BinaryField`, wrapping a reduced bitmask."""

    __slots__ = ("field", "bits")

    def __init__(self, field, bits):
        self.field = field
        self.bits = bits

    def _coerce(self, other):
        if isinstance(other, FieldElement):
            if other.field != self.field:
                raise ValueError("elements belong to different fields")
            return other.bits
        if isinstance(other, int) and other in (0, 1):
            return other
        return None

    def __add__(self, other):
        bits = self._coerce(other)
        if bits is None:
            return NotImplemented
        return FieldElement(self.field, self.bits ^ bits)

    __radd__ = __add__
    __sub__ = __add__
    __rsub__ = __add__

    def __mul__(self, other):
        bits = self._coerce(other)
        if bits is None:
            return NotImplemented
        return FieldElement(self.field, self.field.mul_int(self.bits, bits))

    __rmul__ = __mul__

    def __truediv__(self, other):
        bits = self._coerce(other)
        if bits is None:
            return NotImplemented
        return FieldElement(self.field, self.field.mul_int(self.bits, self.field.inv_int(bits)))

    def __pow__(self, e):
        return FieldElement(self.field, self.field.pow_int(self.bits, e))

    def inverse(self):
        """Multiplicative inverse; raises ZeroDivisionError on zero."""
        return FieldElement(self.field, self.field.inv_int(self.bits))

    def trace(self):
        """Absolute trace, an int in {0, 1}."""
        return self.field.trace_int(self.bits)

    def sqrt(self):
        """The unique square root (Frobenius is a bijection)."""
        return FieldElement(self.field, self.field.sqrt_int(self.bits))

    def square(self):
        return FieldElement(self.field, self.field.mul_int(self.bits, self.bits))

    def __bool__(self):
        return self.bits != 0

    def __int__(self):
        return self.bits

    def __eq__(self, other):
        if isinstance(other, FieldElement):
            return self.field == other.field and self.bits == other.bits
        if isinstance(other, int):
            return other in (0, 1) and self.bits == other
        return NotImplemented

    def __lt__(self, other):
        # bitmask order; used only for deterministic output
        return self.bits < self.field(other).bits

    def __hash__(self):
        return hash((self.field.modulus, self.bits))

    def __repr__(self):
        return f"<{hex(self.bits)} in GF(2^{self.field.n})>"


def find_irreducible(n):
    """The field GF(2^n) for the smallest-bitmask irreducible of degree n.

    The constant term is required to be nonzero (a polynomial divisible
    by x is reducible for n >= 2; for n = 1 the rule picks x+1), so the
    result is well defined and deterministic for every n >= 1.
    """
    if n < 1:
        raise ValueError("degree must be positive")
    for mask in range((1 << n) | 1, 1 << (n + 1), 2):
        if is_irreducible(mask):
            return BinaryField(n, mask)
    raise AssertionError("unreachable: an irreducible of every degree exists")


def all_inverses(field, lo=1, hi=None):
    """Inverses of every element bitmask in range(lo, hi), as a list.

    Batch inversion: one extended-Euclid call plus 3(k-1) products for k
    elements, which beats per-element inversion during full-field sweeps.
    Index i of the result holds the inverse of lo+i.
    """
    if hi is None:
        hi = field.order
    if not 1 <= lo < hi <= field.order:
        raise ValueError("range must satisfy 1 <= lo < hi <= 2^n")
    mul = field.mul_int
    prefix = [0] * (hi - lo)
    acc = 1
    for i, x in enumerate(range(lo, hi)):
        acc = mul(acc, x)
        prefix[i] = acc
    inv_acc = field.inv_int(acc)
    out = [0] * (hi - lo)
    for i in range(hi - lo - 1, 0, -1):
        out[i] = mul(inv_acc, prefix[i - 1])
        inv_acc = mul(inv_acc, lo + i)
    out[0] = inv_acc
    return out
