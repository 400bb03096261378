"""Relabelling-invariant canonical forms for small digraphs.

The canonical form of a digraph is the lexicographically minimal
row-major adjacency bit-matrix (zero diagonal) over all vertex
permutations, returned as a string of '0'/'1'.  The scan is a full
permutation sweep, vectorized over all n! relabellings at once; the cap
n <= 9 keeps that at 362880 matrices.
"""

from __future__ import annotations

import itertools

import numpy as np

from ..digraph import Digraph
from ..errors import TooLarge

__all__ = ["canonical_form", "CANONICAL_CAP"]

CANONICAL_CAP = 9

_PERM_CACHE: dict[int, np.ndarray] = {}


def _perms(n: int) -> np.ndarray:
    perms = _PERM_CACHE.get(n)
    if perms is None:
        perms = np.array(list(itertools.permutations(range(n))), dtype=np.intp)
        _PERM_CACHE[n] = perms
    return perms


def canonical_form(g: Digraph) -> str:
    """Minimal adjacency bit string over all relabellings of g."""
    n = g.n
    if n > CANONICAL_CAP:
        raise TooLarge(f"canonical form is capped at n <= {CANONICAL_CAP}, got n={n}")
    if n == 1:
        return "0"
    adj = np.zeros((n, n), dtype=np.uint8)
    for u, v in g.arcs:
        adj[u - 1, v - 1] = 1
    perms = _perms(n)
    relabelled = adj[perms[:, :, None], perms[:, None, :]]
    flat = relabelled.reshape(len(perms), n * n)
    packed = np.packbits(flat, axis=1)
    keys = tuple(packed[:, c] for c in range(packed.shape[1] - 1, -1, -1))
    best = int(np.lexsort(keys)[0])
    return "".join("01"[b] for b in flat[best])
