"""Affine arithmetic on the binary curve y^2 + xy = x^3 + 1.

The x-coordinate of a doubled point is (x + 1/x)^2, so doubling factors
through the map x -> x + 1/x composed with squaring: the adjoint of the
squaring endomorphism acts on x-coordinates exactly as that map.  This
module supplies the curve side of that dictionary: the group law, point
counting, lifting x-coordinates to points, and the two endomorphisms.

Everything is generic over the coordinate field: it runs unchanged over
a :class:`~invsum.field.BinaryField` or over the quadratic extension
built by :func:`quadratic_extension`, which is how x-coordinates whose
traces obstruct lifting over the base field get their points.
"""

from __future__ import annotations

from .field import BinaryField, FieldElement
from ._parallel import split_ranges, run_ranges

__all__ = [
    "CurvePoint",
    "on_curve",
    "add",
    "negate",
    "scalar_mul",
    "frobenius",
    "conj_frobenius",
    "count_points",
    "lift_x",
    "QuadraticExtension",
    "ExtElement",
    "quadratic_extension",
]

COUNT_BUDGET = 20


class CurvePoint:
    """A point of the curve: affine coordinates or the identity."""

    __slots__ = ("x", "y")

    def __init__(self, x, y):
        if (x is None) != (y is None):
            raise ValueError("affine points need both coordinates")
        if x is not None and not on_curve(x, y):
            raise ValueError(f"({x!r}, {y!r}) is not on y^2 + xy = x^3 + 1")
        self.x = x
        self.y = y

    @classmethod
    def infinity(cls):
        return cls(None, None)

    @property
    def is_infinity(self):
        return self.x is None

    def __eq__(self, other):
        if not isinstance(other, CurvePoint):
            return NotImplemented
        return self.x == other.x and self.y == other.y

    def __hash__(self):
        return hash((self.x, self.y))

    def __repr__(self):
        if self.is_infinity:
            return "CurvePoint(infinity)"
        return f"CurvePoint({self.x!r}, {self.y!r})"


def on_curve(x, y) -> bool:
    """Whether (x, y) satisfies y^2 + xy = x^3 + 1."""
    return y * y + x * y == x * x * x + 1


def negate(p: CurvePoint) -> CurvePoint:
    """-(x, y) = (x, x + y); the identity is its own negative."""
    if p.is_infinity:
        return p
    return CurvePoint(p.x, p.x + p.y)


def add(p: CurvePoint, q: CurvePoint) -> CurvePoint:
    """Chord-tangent group law in affine coordinates.

    The five cases: either operand the identity, q = -p, doubling the
    2-torsion point (x = 0), general doubling, and the generic chord.
    """
    if p.is_infinity:
        return q
    if q.is_infinity:
        return p
    if p.x == q.x:
        if p.y != q.y:
            return CurvePoint.infinity()  # q = -p
        if not p.x:
            return CurvePoint.infinity()  # (0, 1) is the 2-torsion point
        lam = p.x + p.y / p.x
        x3 = lam * lam + lam
        y3 = p.x * p.x + (lam + 1) * x3
        return CurvePoint(x3, y3)
    lam = (p.y + q.y) / (p.x + q.x)
    x3 = lam * lam + lam + p.x + q.x
    y3 = lam * (p.x + x3) + x3 + p.y
    return CurvePoint(x3, y3)


def scalar_mul(k: int, p: CurvePoint) -> CurvePoint:
    """k*p by double-and-add (k may be negative)."""
    if k < 0:
        k, p = -k, negate(p)
    acc = CurvePoint.infinity()
    while k:
        if k & 1:
            acc = add(acc, p)
        p = add(p, p)
        k >>= 1
    return acc


def frobenius(p: CurvePoint, times: int = 1) -> CurvePoint:
    """Coordinate-wise squaring, iterated."""
    if p.is_infinity:
        return p
    x, y = p.x, p.y
    for _ in range(times):
        x, y = x * x, y * y
    return CurvePoint(x, y)


def conj_frobenius(p: CurvePoint) -> CurvePoint:
    """The adjoint of squaring: the square root, coordinate-wise, of 2p.

    Its x-coordinate is x(p) + 1/x(p); following it with frobenius
    recovers doubling.
    """
    if p.is_infinity:
        return p
    d = add(p, p)
    if d.is_infinity:
        return d
    return CurvePoint(d.x.sqrt(), d.y.sqrt())


def count_points(field: BinaryField, threads: int = 1) -> int:
    """|curve(GF(2^n))| by enumeration of x-coordinates.

    Each nonzero x contributes 2 points when z^2 + z = x + x^-2 is
    solvable and 0 otherwise; x = 0 contributes (0, 1); plus the
    identity.
    """
    if field.n > COUNT_BUDGET:
        raise ValueError(f"point counting limited to n <= {COUNT_BUDGET}")

    def partial(lo: int, hi: int) -> int:
        from .field import all_inverses
        mul = field.mul_int
        trace = field.trace_int
        liftable = 0
        for x, ix in zip(range(lo, hi), all_inverses(field, lo, hi)):
            if trace(x ^ mul(ix, ix)) == 0:
                liftable += 1
        return liftable

    return 2 * sum(run_ranges(partial, split_ranges(1, field.order, threads))) + 2


def lift_x(x) -> list[CurvePoint]:
    """All curve points with the given x-coordinate, possibly none.

    x = 0 yields the single point (0, 1).  Otherwise the lifting
    quadratic z^2 + z = x + x^-2 either has no solution or gives the
    two points (x, z*x), (x, (z+1)*x), returned in a deterministic
    order.
    """
    field = x.field
    if not x:
        return [CurvePoint(field.zero(), field.one())]
    c = x + (x * x).inverse()
    return [CurvePoint(x, z * x) for z in field.solve_quadratic(c)]


class ExtElement:
    """An element a + b*t of a quadratic extension, with a, b in the base field."""

    __slots__ = ("field", "a", "b")

    def __init__(self, field: "QuadraticExtension", a: FieldElement, b: FieldElement):
        self.field = field
        self.a = a
        self.b = b

    def _coerce(self, other):
        if isinstance(other, ExtElement):
            if other.field != self.field:
                raise ValueError("elements belong to different extensions")
            return other
        if isinstance(other, int) and other in (0, 1):
            base = self.field.base
            return ExtElement(self.field, base(other), base.zero())
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return ExtElement(self.field, self.a + o.a, self.b + o.b)

    __radd__ = __add__
    __sub__ = __add__
    __rsub__ = __add__

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        # (a + bt)(c + dt) with t^2 = t + delta
        bd = self.b * o.b
        return ExtElement(
            self.field,
            self.a * o.a + bd * self.field.delta,
            self.a * o.b + self.b * o.a + bd,
        )

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self * o.inverse()

    def inverse(self):
        """Inverse via the relative norm a^2 + ab + delta*b^2 in the base field."""
        rel = self.a * self.a + self.a * self.b + self.b * self.b * self.field.delta
        inv = rel.inverse()  # ZeroDivisionError on zero, as for the base
        # conjugate over the base: (a + b) + b*t has product rel with self
        return ExtElement(self.field, (self.a + self.b) * inv, self.b * inv)

    def frobenius_base(self):
        """The 2^n-power map, n the base degree: a + b*t -> (a + b) + b*t."""
        return ExtElement(self.field, self.a + self.b, self.b)

    def trace(self) -> int:
        """Absolute trace down to GF(2); equals the base trace of the t-part."""
        return self.b.trace()

    def sqrt(self):
        r = self
        for _ in range(2 * self.field.base.n - 1):
            r = r * r
        return r

    def __bool__(self):
        return bool(self.a) or bool(self.b)

    def __eq__(self, other):
        o = self._coerce(other) if not isinstance(other, ExtElement) else other
        if o is None or not isinstance(o, ExtElement):
            return NotImplemented
        return self.field == o.field and self.a == o.a and self.b == o.b

    def __hash__(self):
        return hash((self.a.bits, self.b.bits))

    def __repr__(self):
        return f"<{hex(self.a.bits)} + {hex(self.b.bits)}*t over GF(2^{self.field.base.n})>"


class QuadraticExtension:
    """GF(2^(2n)) presented as base[t] / (t^2 + t + delta), trace(delta) = 1.

    Elements of the base field all have absolute trace 0 up here, so
    every x-coordinate lifts to curve points over the extension.
    """

    def __init__(self, base: BinaryField):
        self.base = base
        self.n = 2 * base.n
        delta_bits = base._delta
        assert delta_bits is not None and base.trace_int(delta_bits) == 1
        self.delta = FieldElement(base, delta_bits)

    def __call__(self, a, b=None) -> ExtElement:
        a = self.base(a)
        b = self.base(0 if b is None else b)
        return ExtElement(self, a, b)

    def embed(self, a: FieldElement) -> ExtElement:
        return ExtElement(self, self.base(a), self.base.zero())

    def zero(self) -> ExtElement:
        return ExtElement(self, self.base.zero(), self.base.zero())

    def one(self) -> ExtElement:
        return ExtElement(self, self.base.one(), self.base.zero())

    def solve_quadratic(self, c: ExtElement) -> tuple[ExtElement, ...]:
        """Solutions of z^2 + z = c, componentwise over the base field.

        Writing z = z0 + z1*t, the t-part needs z1^2 + z1 = c.b and the
        base part z0^2 + z0 = c.a + delta*z1^2; exactly one of the two
        z1 roots makes the second equation solvable.
        """
        if c.trace() == 1:
            return ()
        base = self.base
        z1 = base.solve_quadratic(c.b)[0]
        if (c.a + self.delta * z1 * z1).trace() == 1:
            z1 = z1 + 1
        rhs = c.a + self.delta * z1 * z1
        z0 = base.solve_quadratic(rhs)[0]
        z = ExtElement(self, z0, z1)
        other = z + 1
        return (z, other) if (z.a.bits, z.b.bits) < (other.a.bits, other.b.bits) \
            else (other, z)

    def __eq__(self, other):
        return (isinstance(other, QuadraticExtension)
                and self.base == other.base and self.delta == other.delta)

    def __hash__(self):
        return hash(("ext", self.base.modulus, self.delta.bits))

    def __repr__(self):
        return f"QuadraticExtension(base=GF(2^{self.base.n}), delta={hex(self.delta.bits)})"


def quadratic_extension(field: BinaryField) -> QuadraticExtension:
    """The canonical quadratic extension of a base field.

    Uses the smallest trace-1 element as the Artin-Schreier constant,
    so the construction is deterministic per base field.
    """
    return QuadraticExtension(field)
