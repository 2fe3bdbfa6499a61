"""Deterministic work partitioning.

Engines split their index space (or sample count) into one contiguous chunk
per worker and merge per-chunk frequency vectors by addition.  Because every
unit of work is processed exactly once with the same weight no matter how the
range is cut, merged exhaustive results are bit-identical for any worker
count.  Monte Carlo chunks draw from generators seeded by (master seed,
worker index), so sampled results are reproducible per (seed, workers) pair.
"""

from __future__ import annotations

import multiprocessing as mp


def split_range(total: int, parts: int) -> list[tuple[int, int]]:
    """Cut [0, total) into `parts` contiguous ranges with sizes differing by
    at most one.  Empty ranges are kept so chunk index always equals worker
    index."""
    if parts < 1:
        raise ValueError("need at least one part")
    base, extra = divmod(total, parts)
    out = []
    lo = 0
    for i in range(parts):
        hi = lo + base + (1 if i < extra else 0)
        out.append((lo, hi))
        lo = hi
    return out


def parallel_map(fn, argtuples: list[tuple], workers: int) -> list:
    """Apply fn to each argument tuple, preserving order.

    workers <= 1 runs in-process; otherwise a process pool is used.  fn must
    be a module-level function and the arguments picklable.
    """
    if workers <= 1 or len(argtuples) <= 1:
        return [fn(*args) for args in argtuples]
    with mp.get_context().Pool(processes=workers) as pool:
        return pool.starmap(fn, argtuples)


def merge_freq(vectors) -> list[int]:
    """Elementwise sum of equal-length count vectors, in plain Python ints."""
    vectors = list(vectors)
    out = [0] * len(vectors[0])
    for vec in vectors:
        if len(vec) != len(out):
            raise ValueError("cannot merge frequency vectors of mixed length")
        for i, v in enumerate(vec):
            out[i] += int(v)
    return out
