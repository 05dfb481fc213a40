"""The functional graph of x -> x + 1/x on the projective line over GF(2^n).

Vertices are the 2^n + 1 points of GF(2^n) plus infinity; every vertex
has one outgoing edge, to x + 1/x for finite nonzero x and to infinity
for 0 and infinity itself.  Each connected component is a cycle with
reversed binary trees hanging off its vertices.

The graph splits into two closed subgraphs, found by comparing the
traces of x and 1/x (0 and infinity count as the SAME side): the image
of x + 1/x always satisfies trace(1/(x + 1/x)) = 0, which pins each
vertex's class under iteration.  ``build_graph`` materializes the
successor and class arrays; ``analyze`` extracts cycles, tree depths
and per-level tree censuses.

Internally vertices are ints: bitmask values for finite points and
2^n for infinity, stored in numpy arrays.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass

import numpy as np

from .field import BinaryField, FieldElement, all_inverses
from ._parallel import split_ranges, run_ranges

__all__ = [
    "INFINITY",
    "TraceClass",
    "step",
    "trace_class",
    "build_graph",
    "IterationGraph",
    "GraphSummary",
    "CycleRecord",
    "TreeRecord",
]

BUILD_BUDGET = 24  # enumeration bound for materializing a graph


class _Infinity:
    """The extra projective point; a singleton."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self):
        return "INFINITY"


INFINITY = _Infinity()


class TraceClass(enum.Enum):
    """Which side of the trace partition a vertex lies on.

    SAME holds the x with trace(x) == trace(1/x), together with 0 and
    infinity; DIFF holds the rest.  SAME vertices are exactly the
    x-coordinates of rational points of y^2 + xy = x^3 + 1 over the
    base field, DIFF vertices acquire their points only over the
    quadratic extension.
    """

    SAME = "same"
    DIFF = "diff"


def step(p: FieldElement | _Infinity):
    """One application of the map: 0 and infinity go to infinity, else x + 1/x."""
    if p is INFINITY:
        return INFINITY
    if not p.bits:
        return INFINITY
    return p + p.inverse()


def trace_class(p: FieldElement | _Infinity) -> TraceClass:
    """Class of a single vertex (SAME for 0 and infinity by convention)."""
    if p is INFINITY or not p.bits:
        return TraceClass.SAME
    same = p.trace() == p.inverse().trace()
    return TraceClass.SAME if same else TraceClass.DIFF


@dataclass(frozen=True)
class CycleRecord:
    """Cycles of one length whose trees share one depth, within one class."""

    length: int
    count: int
    tree_depth: int


@dataclass(frozen=True)
class TreeRecord:
    """Per-level census of the reversed tree rooted at one cycle vertex.

    ``levels[k-1]`` is the number of vertices at distance k from the
    root; the root itself is not included.  ``root`` is the vertex
    index (bitmask, or 2^n for infinity).
    """

    root: int
    root_is_infinity: bool
    klass: TraceClass
    cycle_length: int
    levels: tuple[int, ...]

    @property
    def depth(self) -> int:
        return len(self.levels)


@dataclass(frozen=True)
class GraphSummary:
    """Cycle/tree structure of one graph, deterministically ordered."""

    n: int
    modulus: int
    records: dict[TraceClass, tuple[CycleRecord, ...]]
    trees: tuple[TreeRecord, ...]

    def class_depth(self, klass: TraceClass) -> int:
        """Maximum tree depth over the class (0 if the class is empty)."""
        return max((r.tree_depth for r in self.records[klass]), default=0)

    def cycle_multiset(self, klass: TraceClass) -> list[tuple[int, int]]:
        """(length, count) pairs sorted by length, depths stripped."""
        merged: dict[int, int] = {}
        for r in self.records[klass]:
            merged[r.length] = merged.get(r.length, 0) + r.count
        return sorted(merged.items())

    def total_vertices(self) -> int:
        cyc = sum(r.length * r.count for recs in self.records.values() for r in recs)
        return cyc + sum(sum(t.levels) for t in self.trees)


class IterationGraph:
    """Materialized successor map and class partition for one field."""

    def __init__(self, field: BinaryField, succ: np.ndarray, classes: np.ndarray):
        self.field = field
        self.succ = succ
        self.classes = classes  # 0 = SAME, 1 = DIFF
        self.inf = field.order  # vertex index of infinity

    # -- element-level accessors ------------------------------------------

    def _index(self, p) -> int:
        if p is INFINITY:
            return self.inf
        return self.field(p).bits

    def successor(self, p):
        s = int(self.succ[self._index(p)])
        return INFINITY if s == self.inf else FieldElement(self.field, s)

    def klass(self, p) -> TraceClass:
        return TraceClass.DIFF if self.classes[self._index(p)] else TraceClass.SAME

    def vertex_count(self) -> int:
        return self.field.order + 1

    # -- structural analysis ----------------------------------------------

    def analyze(self) -> GraphSummary:
        """Cycle decomposition plus a census of every root's tree.

        Cycles are reported per class as (length, count, tree depth),
        merged over cycles that agree in both length and depth, sorted
        by length then depth.  Every cycle vertex contributes one
        TreeRecord; trees are listed cycle by cycle (cycles ordered by
        smallest member), each cycle walked from its smallest member.
        """
        succ = self.succ.tolist()
        nverts = len(succ)
        color = bytearray(nverts)  # 0 unvisited, 1 on current path, 2 finished
        on_cycle = bytearray(nverts)
        position = [0] * nverts
        for start in range(nverts):
            if color[start]:
                continue
            path = []
            v = start
            while color[v] == 0:
                color[v] = 1
                position[v] = len(path)
                path.append(v)
                v = succ[v]
            if color[v] == 1:
                for u in path[position[v]:]:
                    on_cycle[u] = 1
            for u in path:
                color[u] = 2

        # canonical cycle list: scan ascending, walk each cycle once
        seen = bytearray(nverts)
        cycles: list[list[int]] = []
        for v in range(nverts):
            if on_cycle[v] and not seen[v]:
                cyc = [v]
                seen[v] = 1
                u = succ[v]
                while u != v:
                    seen[u] = 1
                    cyc.append(u)
                    u = succ[u]
                cycles.append(cyc)

        starts, children = self._tree_csr(np.frombuffer(on_cycle, dtype=np.uint8))

        trees: list[TreeRecord] = []
        grouped: dict[TraceClass, dict[tuple[int, int], int]] = {
            TraceClass.SAME: {}, TraceClass.DIFF: {}}
        for cyc in cycles:
            klass = TraceClass.DIFF if self.classes[cyc[0]] else TraceClass.SAME
            depth = 0
            for root in cyc:
                levels = []
                frontier = children[starts[root]:starts[root + 1]].tolist()
                while frontier:
                    levels.append(len(frontier))
                    nxt = []
                    for u in frontier:
                        nxt.extend(children[starts[u]:starts[u + 1]].tolist())
                    frontier = nxt
                trees.append(TreeRecord(
                    root=root,
                    root_is_infinity=root == self.inf,
                    klass=klass,
                    cycle_length=len(cyc),
                    levels=tuple(levels),
                ))
                depth = max(depth, len(levels))
            key = (len(cyc), depth)
            bucket = grouped[klass]
            bucket[key] = bucket.get(key, 0) + 1

        records = {
            klass: tuple(CycleRecord(length, count, depth)
                         for (length, depth), count in sorted(bucket.items()))
            for klass, bucket in grouped.items()
        }
        return GraphSummary(
            n=self.field.n,
            modulus=self.field.modulus,
            records=records,
            trees=tuple(trees),
        )

    def _tree_csr(self, on_cycle: np.ndarray):
        """CSR predecessor lists restricted to non-cycle (tree) vertices."""
        tree_idx = np.nonzero(on_cycle == 0)[0]
        keys = self.succ[tree_idx]
        order = np.argsort(keys, kind="stable")
        children = tree_idx[order]
        keys_sorted = keys[order]
        starts = np.searchsorted(keys_sorted, np.arange(len(self.succ) + 1))
        return starts, children

    # -- rendering ----------------------------------------------------------

    def to_dot(self, labeling: str = "hex") -> str:
        """The graph as a Graphviz digraph, one edge line per vertex.

        ``hex`` labels finite vertices by their bitmask; ``dlog``
        labels the i-th power of the polynomial generator by i (so the
        unit gets 2^n - 1, the zero element "0") and requires the
        modulus to be primitive.
        """
        if labeling == "hex":
            label = lambda v: "inf" if v == self.inf else hex(v)
        elif labeling == "dlog":
            log = self._dlog_table()
            label = lambda v: ("inf" if v == self.inf else
                               "0" if v == 0 else str(log[v]))
        else:
            raise ValueError(f"unknown labeling {labeling!r}")
        lines = [f'digraph "invsum_n{self.field.n}" {{']
        for v in range(len(self.succ)):
            lines.append(f'  "{label(v)}" -> "{label(int(self.succ[v]))}";')
        lines.append("}")
        return "\n".join(lines) + "\n"

    def _dlog_table(self):
        """Discrete logs base the class of x, by one multiplicative sweep."""
        field = self.field
        g = field.mul_int(2, 1)  # the class of x, reduced (1 when n = 1)
        log = [0] * field.order
        acc = 1
        for i in range(1, field.order):
            acc = field.mul_int(acc, g)
            if acc == 1 and i < field.order - 1:
                raise ValueError(
                    f"modulus {hex(field.modulus)} is not primitive; "
                    "dlog labeling needs a primitive polynomial")
            log[acc] = i
        return log


def build_graph(field: BinaryField, threads: int = 1) -> IterationGraph:
    """Successor and class arrays for all 2^n + 1 vertices.

    Work is split over disjoint bitmask ranges writing disjoint slots,
    so the result is identical for any thread count.
    """
    if field.n > BUILD_BUDGET:
        raise ValueError(f"graph enumeration limited to n <= {BUILD_BUDGET}")
    order = field.order
    dtype = np.int64 if field.n > 30 else np.int32
    succ = np.empty(order + 1, dtype=dtype)
    classes = np.zeros(order + 1, dtype=np.uint8)

    def fill(lo: int, hi: int) -> None:
        trace_int = field.trace_int
        inverses = all_inverses(field, lo, hi)
        for x, ix in zip(range(lo, hi), inverses):
            succ[x] = x ^ ix
            classes[x] = trace_int(x) != trace_int(ix)

    run_ranges(fill, split_ranges(1, order, threads))
    succ[0] = order
    succ[order] = order
    # class of 0 and infinity is SAME by convention; zeros already there
    return IterationGraph(field, succ, classes)
