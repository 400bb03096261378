"""Vectorized per-digraph invariant tables over the full enumeration.

Digraphs on n vertices are the integers 0 .. 2^(n(n-1)) - 1, the arc-set
bitmask acting as the index.  One pass computes, for every index at
once, the arc count, bicomponent count, the four metric invariants
(255 encodes infinity), transitivity, outdegree extremes and the
center-outdegree bound; a second derived pass turns those tables into
per-invariant criticality tables by comparing each digraph with its 2^b
arc-addition partners, which are index arithmetic rather than graph
surgery.

Tables are cached per n.  Chunks of 2^16 indices are processed
independently (optionally on a thread pool) and merged in a fixed
order, so every result is bit-identical no matter how many workers run.
"""

from __future__ import annotations

import os
from concurrent.futures import ThreadPoolExecutor
from typing import Callable, Sequence, TypeVar

import numpy as np

from ..criticality import Invariant
from ..errors import TooLarge

__all__ = [
    "ENUM_CAP",
    "digraph_count",
    "metric_tables",
    "criticality_tables",
    "forall_additions",
    "clear_caches",
    "map_chunks",
    "INF_CODE",
]

ENUM_CAP = 5
INF_CODE = 255
_CHUNK = 1 << 16

_METRIC_CACHE: dict[int, dict[str, np.ndarray]] = {}
_CRIT_CACHE: dict[int, dict[str, np.ndarray]] = {}

INVARIANT_KEY = {
    Invariant.D: "d",
    Invariant.DM: "dm",
    Invariant.R: "r",
    Invariant.RM: "rm",
}

T = TypeVar("T")


def check_enum_n(n: int) -> None:
    if n > ENUM_CAP:
        raise TooLarge(f"full enumeration is capped at n <= {ENUM_CAP}, got n={n}")
    if n < 2:
        raise ValueError(f"enumeration needs n >= 2, got n={n}")


def digraph_count(n: int) -> int:
    check_enum_n(n)
    return 1 << (n * (n - 1))


def map_chunks(total: int, fn: Callable[[int, int], T], workers: int | None) -> list[T]:
    """Apply fn to fixed-size index ranges, returning results in range order."""
    ranges = [(lo, min(lo + _CHUNK, total)) for lo in range(0, total, _CHUNK)]
    if workers is None:
        workers = os.cpu_count() or 1
    if workers <= 1 or len(ranges) <= 1:
        return [fn(lo, hi) for lo, hi in ranges]
    with ThreadPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(lambda span: fn(*span), ranges))


def _neighbor_luts(n: int) -> list[np.ndarray]:
    """Per-row lookup: packed (n-1)-bit row -> n-bit successor mask."""
    width = n - 1
    luts = []
    for u in range(n):
        lut = np.zeros(1 << width, dtype=np.uint8)
        for row in range(1 << width):
            below = row & ((1 << u) - 1)
            above = (row >> u) << (u + 1)
            lut[row] = below | above
        luts.append(lut)
    return luts


def _chunk_tables(n: int, lo: int, hi: int, luts: Sequence[np.ndarray]) -> dict[str, np.ndarray]:
    size = hi - lo
    width = n - 1
    row_mask = (1 << width) - 1
    ids = np.arange(lo, hi, dtype=np.uint32)

    adj = np.empty((size, n), dtype=np.uint8)
    for u in range(n):
        adj[:, u] = luts[u][(ids >> np.uint32(u * width)) & np.uint32(row_mask)]

    # cumulative reach-within-L-steps masks, self included
    reach = adj.copy()
    for u in range(n):
        reach[:, u] |= np.uint8(1 << u)
    levels = [reach]
    for _ in range(2, n):
        prev = levels[-1]
        nxt = prev.copy()
        for u in range(n):
            acc = nxt[:, u]
            row = prev[:, u]
            for v in range(n):
                if v == u:
                    continue
                take = ((row >> np.uint8(v)) & np.uint8(1)).astype(bool)
                acc |= np.where(take, adj[:, v], np.uint8(0))
        levels.append(nxt)

    dist = np.full((size, n, n), INF_CODE, dtype=np.uint8)
    for u in range(n):
        dist[:, u, u] = 0
        prev_mask = np.full(size, 1 << u, dtype=np.uint8)
        for step, level in enumerate(levels, start=1):
            new = level[:, u] & ~prev_mask
            for v in range(n):
                if v == u:
                    continue
                hit = ((new >> np.uint8(v)) & np.uint8(1)).astype(bool)
                dist[hit, u, v] = step
            prev_mask = level[:, u].copy()

    ecc = dist.max(axis=2)
    r = ecc.min(axis=1)
    d = ecc.max(axis=1)
    rho_m = np.minimum(dist, dist.transpose(0, 2, 1))
    ecc_m = rho_m.max(axis=2)
    rm = ecc_m.min(axis=1)
    dm = ecc_m.max(axis=1)

    finite = dist < INF_CODE
    mutual = finite & finite.transpose(0, 2, 1)
    bc = np.zeros(size, dtype=np.uint8)
    for u in range(n):
        is_min = np.ones(size, dtype=bool)
        for v in range(u):
            is_min &= ~mutual[:, u, v]
        bc += is_min

    transitive = np.ones(size, dtype=bool)
    for u in range(n):
        acc = np.zeros(size, dtype=np.uint8)
        row = adj[:, u]
        for v in range(n):
            if v == u:
                continue
            take = ((row >> np.uint8(v)) & np.uint8(1)).astype(bool)
            acc |= np.where(take, adj[:, v], np.uint8(0))
        acc &= np.uint8(0xFF ^ (1 << u))
        transitive &= (acc & ~row) == 0

    outdeg = np.bitwise_count(adj)
    outdeg_min = outdeg.min(axis=1)
    outdeg_max = outdeg.max(axis=1)

    # center-bicomponent outdegree bound (finite radius r: every vertex
    # mutually reachable with a center has outdegree <= n - r)
    lemma10_ok = np.ones(size, dtype=bool)
    finite_r = r < INF_CODE
    slack = n - r.astype(np.int16)
    out16 = outdeg.astype(np.int16)
    for c in range(n):
        is_center = (ecc[:, c] == r) & finite_r
        for v in range(n):
            lemma10_ok &= ~(is_center & mutual[:, c, v] & (out16[:, v] > slack))

    return {
        "arcs": np.bitwise_count(ids).astype(np.uint8),
        "bc": bc,
        "d": d,
        "dm": dm,
        "r": r,
        "rm": rm,
        "transitive": transitive,
        "outdeg_min": outdeg_min,
        "outdeg_max": outdeg_max,
        "lemma10_ok": lemma10_ok,
    }


def metric_tables(n: int, workers: int | None = None) -> dict[str, np.ndarray]:
    """Per-index invariant tables for all 2^(n(n-1)) digraphs (cached)."""
    check_enum_n(n)
    cached = _METRIC_CACHE.get(n)
    if cached is not None:
        return cached
    luts = _neighbor_luts(n)
    chunks = map_chunks(
        digraph_count(n), lambda lo, hi: _chunk_tables(n, lo, hi, luts), workers
    )
    tables = {
        key: np.concatenate([chunk[key] for chunk in chunks]) for key in chunks[0]
    }
    _METRIC_CACHE[n] = tables
    return tables


def _derive_criticality(n: int, tables: dict[str, np.ndarray]) -> dict[str, np.ndarray]:
    total = digraph_count(n)
    bits = n * (n - 1)
    bc = tables["bc"]
    crit = {}
    for key in ("d", "dm", "r", "rm"):
        val = tables[key]
        flags = np.ones(total, dtype=bool)
        for b in range(bits):
            width = 1 << b
            v3 = val.reshape(-1, 2, width)
            b3 = bc.reshape(-1, 2, width)
            f3 = flags.reshape(-1, 2, width)
            # axis 1 separates bit b clear (arc missing) from bit b set;
            # the partner of a missing arc lives at the same (high, low) slot
            f3[:, 0, :] &= (b3[:, 1, :] < b3[:, 0, :]) | (v3[:, 1, :] < v3[:, 0, :])
        crit[key] = flags
    return crit


def criticality_tables(n: int, workers: int | None = None) -> dict[str, np.ndarray]:
    """Per-index is_critical tables, keyed 'd', 'dm', 'r', 'rm' (cached)."""
    check_enum_n(n)
    cached = _CRIT_CACHE.get(n)
    if cached is not None:
        return cached
    crit = _derive_criticality(n, metric_tables(n, workers))
    _CRIT_CACHE[n] = crit
    return crit


def forall_additions(n: int, ok_after: np.ndarray) -> np.ndarray:
    """result[g] = every single-arc completion g+b lands in ok_after."""
    bits = n * (n - 1)
    result = np.ones(ok_after.shape[0], dtype=bool)
    for b in range(bits):
        width = 1 << b
        o3 = ok_after.reshape(-1, 2, width)
        r3 = result.reshape(-1, 2, width)
        r3[:, 0, :] &= o3[:, 1, :]
    return result


def clear_caches() -> None:
    """Drop all cached tables (used by determinism tests)."""
    _METRIC_CACHE.clear()
    _CRIT_CACHE.clear()
