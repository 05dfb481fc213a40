"""Predict the cycle and tree structure of the x -> x + 1/x graph without
enumerating the field.

The SAME-class vertices are the x-coordinates of the curve's rational
points, and that group is isomorphic to Z[w] modulo (pi^n - 1), pi the
squaring endomorphism; the DIFF-class vertices correspond the same way
to Z[w] modulo (pi^n + 1) via the quadratic extension.  Factoring the
modulus splits the quotient into one component per prime power, and a
periodic x-coordinate is a point whose conjugate-Frobenius component is
zero.  Grouping points by their additive order per component then gives
everything:

* the number of points in a group is a product of per-component
  censuses (matched pairs P, -P share an x-coordinate, so x-counts are
  half of point counts);
* the cycle length is the least k with adjoint^k = +-1 simultaneously
  modulo every chosen prime power, with one common sign;
* the trees hanging off the cycles are full binary towers whose depth
  is the exponent of the conjugate-Frobenius prime in the factored
  modulus.

``verify`` replays an exhaustive enumeration against these predictions.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass

from .field import BinaryField, find_irreducible
from .graph import CycleRecord, TraceClass, build_graph
from .ring import (
    CONJ_FROBENIUS,
    FROBENIUS,
    Kind,
    QuadInt,
    RingFactor,
    factor,
    reduction_modulus,
    signed_order,
)

__all__ = [
    "OrderClass",
    "PredictedStructure",
    "order_census",
    "h_range",
    "class_period",
    "tree_profile",
    "predict",
    "CheckResult",
    "VerificationReport",
    "verify",
]

VERIFY_BUDGET = 20


def h_range(comp: RingFactor) -> range:
    """Legal additive-order exponents h for one component.

    Split and inert components allow 0..e.  The ramified component
    (exponent f of sqrt(-7)) allows 0..f/2 for even f and 0..(f+1)/2
    for odd f, mirroring the shape of its additive group.
    """
    if comp.kind is Kind.RAMIFIED:
        f = comp.exponent
        return range(0, (f + 1) // 2 + 1 if f % 2 else f // 2 + 1)
    return range(0, comp.exponent + 1)


def order_census(comp: RingFactor, h: int) -> int:
    """Number of points of additive order p^h in the component's quotient.

    Inert components have a rank-2 additive group: p^(2h) - p^(2h-2)
    points of order p^h.  Split components are cyclic: phi(p^h).  The
    ramified component behaves rank-2 except at the odd top layer,
    where one factor runs out: 7^(2h-1) - 7^(2h-2).
    """
    if h not in h_range(comp):
        raise ValueError(f"order exponent {h} out of range for {comp}")
    if h == 0:
        return 1
    p = comp.rational_prime
    if comp.kind is Kind.INERT:
        return p ** (2 * h) - p ** (2 * h - 2)
    if comp.kind is Kind.SPLIT:
        return p ** h - p ** (h - 1)
    # ramified
    f = comp.exponent
    if f % 2 and h == (f + 1) // 2:
        return 7 ** (2 * h - 1) - 7 ** (2 * h - 2)
    return 7 ** (2 * h) - 7 ** (2 * h - 2)


class _OrderCache:
    """Memoized signed orders of the adjoint prime modulo each prime power."""

    def __init__(self):
        self._orders: dict[tuple[QuadInt, int], tuple[int, int]] = {}

    def get(self, comp: RingFactor, h: int) -> tuple[int, int]:
        key = (comp.prime, h)
        if key not in self._orders:
            q = comp.prime ** h
            m = reduction_modulus(comp.kind, comp.rational_prime, h)
            self._orders[key] = signed_order(q, m)
        return self._orders[key]


def class_period(parts, cache: _OrderCache | None = None) -> int:
    """Length of the cycles formed by one order class.

    ``parts`` lists (component, h) pairs with h > 0.  The period is the
    least k such that the adjoint prime's k-th power is congruent to +1
    modulo every chosen prime power, or to -1 modulo every one: a
    common sign.  Any candidate k is a multiple of the lcm L of the
    per-component signed orders, and 2L always works, so the search is
    two candidates long.
    """
    if not parts:
        raise ValueError("the all-zero class has no period")
    cache = cache or _OrderCache()
    orders = [cache.get(comp, h) for comp, h in parts]
    lcm = math.lcm(*(l for l, _ in orders))
    for k in (lcm, 2 * lcm):
        signs = {s if (k // l) % 2 else +1 for l, s in orders}
        if len(signs) == 1:
            return k
    raise AssertionError("period must be lcm or twice lcm")


@dataclass(frozen=True)
class OrderClass:
    """One choice of additive order per component and its cycle contribution."""

    h: tuple[int, ...]
    point_count: int
    x_count: int
    period: int
    cycle_count: int


@dataclass(frozen=True)
class PredictedStructure:
    """Complete predicted cycle/tree structure for one trace class."""

    trace_class: TraceClass
    n: int
    e0: int                      # exponent of the conjugate-Frobenius prime
    tree_depth: int              # e0 for SAME, 1 for DIFF
    classes: tuple[OrderClass, ...]
    totals: tuple[tuple[int, int], ...]  # (cycle length, cycle count), merged
    notes: tuple[str, ...] = ()

    def cycle_records(self) -> tuple[CycleRecord, ...]:
        return tuple(CycleRecord(length, count, self.tree_depth)
                     for length, count in self.totals)


def tree_profile(klass: TraceClass, root_is_infinity: bool, e0: int) -> list[int]:
    """Expected number of tree vertices at each level 1..depth below a root.

    SAME-class roots carry full binary towers of depth e0: one child at
    the root, two children everywhere below, hence 2^(k-1) vertices at
    level k -- except the tower over infinity, whose level-1 vertex
    (the zero element) also has a single child, giving ceil(2^(k-2)).
    DIFF-class roots have exactly one child and depth 1.
    """
    if klass is TraceClass.DIFF:
        if root_is_infinity or e0 != 1:
            raise ValueError("DIFF-class trees hang off finite roots with depth 1")
        return [1]
    if e0 < 1:
        raise ValueError("SAME-class trees have depth at least 1")
    if root_is_infinity:
        return [max(1, 1 << (k - 2)) for k in range(1, e0 + 1)]
    return [1 << (k - 1) for k in range(1, e0 + 1)]


def predict(n: int, klass: TraceClass) -> PredictedStructure:
    """Cycle lengths, counts, and tree depth for one class, from Z[w] alone.

    Factors pi^n - 1 (SAME) or pi^n + 1 (DIFF), enumerates the additive
    order classes of the non-adjoint components, and derives each
    class's cycle length and cycle count.  The all-zero class is the
    identity point: for SAME it is the vertex at infinity, a loop of
    length 1; for DIFF it corresponds to no graph vertex at all.
    """
    if n < 1:
        raise ValueError("n must be positive")
    if klass is TraceClass.DIFF and n < 2:
        raise ValueError("the DIFF class is empty for n = 1; nothing to predict")
    sign = -1 if klass is TraceClass.SAME else +1
    target = FROBENIUS ** n + sign
    fact = factor(target)
    e0 = fact.conj_frobenius_exponent()
    assert e0 >= 1, "the adjoint prime always divides pi^n -+ 1"
    comps = list(fact.components())
    assert all(c.rational_prime != 2 for c in comps)

    notes: list[str] = []
    for c in comps:
        if c.kind is Kind.RAMIFIED and c.exponent >= 2:
            notes.append(
                f"ramified component has exponent {c.exponent} >= 2: points of "
                "equal additive order may split into different annihilators, "
                "which this census does not separate")

    cache = _OrderCache()
    classes: list[OrderClass] = []
    totals: dict[int, int] = {}
    for h_vec in itertools.product(*(h_range(c) for c in comps)):
        if not any(h_vec):
            continue
        m = math.prod(order_census(c, h) for c, h in zip(comps, h_vec))
        parts = [(c, h) for c, h in zip(comps, h_vec) if h]
        period = class_period(parts, cache)
        if m % (2 * period):
            raise AssertionError(
                f"class {h_vec}: {m} points do not fill cycles of length {period}")
        count = m // (2 * period)
        classes.append(OrderClass(h_vec, m, m // 2, period, count))
        totals[period] = totals.get(period, 0) + count

        # alternative period rule: lcm of component orders, doubled whenever
        # the component signs disagree; flag any divergence from the
        # authoritative common-sign search
        signs = {cache.get(c, h)[1] for c, h in parts}
        lcm = math.lcm(*(cache.get(c, h)[0] for c, h in parts))
        naive = lcm if len(signs) == 1 else 2 * lcm
        if naive != period:
            notes.append(
                f"class {h_vec}: per-component signs suggest period {naive} "
                f"but the common-sign period is {period}")

    if klass is TraceClass.SAME:
        totals[1] = totals.get(1, 0) + 1  # the loop at infinity
    return PredictedStructure(
        trace_class=klass,
        n=n,
        e0=e0,
        tree_depth=e0 if klass is TraceClass.SAME else 1,
        classes=tuple(classes),
        totals=tuple(sorted(totals.items())),
        notes=tuple(notes),
    )


@dataclass(frozen=True)
class CheckResult:
    name: str
    passed: bool
    detail: str


@dataclass(frozen=True)
class VerificationReport:
    n: int
    modulus: int
    checks: tuple[CheckResult, ...]
    notes: tuple[str, ...] = ()

    @property
    def ok(self) -> bool:
        return all(c.passed for c in self.checks)


def verify(n: int, modulus: int | None = None, threads: int = 1) -> VerificationReport:
    """Enumerate the graph and compare it with the prediction, check by check.

    Compares, per trace class: the multiset of (cycle length, cycle
    count), the tree depth at every cycle, and the per-level census of
    every tree.  Passing means the arithmetic of Z[w] reproduced the
    brute-force structure exactly.
    """
    if n > VERIFY_BUDGET:
        raise ValueError(f"verification enumerates the field; limited to n <= {VERIFY_BUDGET}")
    fld = BinaryField(n, modulus) if modulus is not None else find_irreducible(n)
    summary = build_graph(fld, threads=threads).analyze()

    checks: list[CheckResult] = []
    notes: list[str] = []
    for klass in TraceClass:
        label = klass.value
        if klass is TraceClass.DIFF and n < 2:
            enumerated = summary.records[klass]
            checks.append(CheckResult(
                f"cycles-{label}", enumerated == (),
                f"expected no {label} vertices at n=1, found {len(enumerated)} records"))
            continue
        predicted = predict(n, klass)
        notes.extend(predicted.notes)

        enum_cycles = summary.cycle_multiset(klass)
        pred_cycles = list(predicted.totals)
        checks.append(CheckResult(
            f"cycles-{label}",
            enum_cycles == pred_cycles,
            f"predicted {pred_cycles}, enumerated {enum_cycles}"))

        enum_records = summary.records[klass]
        depth_ok = all(r.tree_depth == predicted.tree_depth for r in enum_records)
        checks.append(CheckResult(
            f"depth-{label}",
            depth_ok,
            f"predicted depth {predicted.tree_depth} at every cycle, enumerated "
            f"{sorted({r.tree_depth for r in enum_records}) or '[]'}"))

        bad = 0
        total = 0
        for tree in summary.trees:
            if tree.klass is not klass:
                continue
            total += 1
            expected = tree_profile(klass, tree.root_is_infinity, predicted.tree_depth)
            if list(tree.levels) != expected:
                bad += 1
        checks.append(CheckResult(
            f"profiles-{label}",
            bad == 0,
            f"{total - bad}/{total} {label} trees match the predicted profile"))

    return VerificationReport(n, fld.modulus, tuple(checks), tuple(notes))
