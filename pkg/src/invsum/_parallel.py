"""Range partitioning for the embarrassingly parallel enumeration sweeps.

Workers receive disjoint half-open ranges and either fill disjoint
slots of a shared array or return partial values that are reduced in
range order, so results are identical for every thread count.
"""

from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor


def split_ranges(lo: int, hi: int, parts: int) -> list[tuple[int, int]]:
    """At most `parts` half-open ranges covering [lo, hi), balanced in size."""
    if parts < 1:
        raise ValueError("thread count must be positive")
    total = hi - lo
    parts = max(1, min(parts, total))
    step, extra = divmod(total, parts)
    out = []
    start = lo
    for i in range(parts):
        end = start + step + (1 if i < extra else 0)
        out.append((start, end))
        start = end
    return out


def run_ranges(fn, ranges):
    """Apply fn(lo, hi) over the ranges, in parallel when there are several.

    Returns the per-range results in range order regardless of
    completion order.
    """
    if len(ranges) == 1:
        lo, hi = ranges[0]
        return [fn(lo, hi)]
    with ThreadPoolExecutor(max_workers=len(ranges)) as pool:
        futures = [pool.submit(fn, lo, hi) for lo, hi in ranges]
        return [f.result() for f in futures]
