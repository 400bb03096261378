"""Formula checks past the enumeration cap via orbit-stabilizer counting.

Exhaustive enumeration stops at n = 5.  The maximal families, however,
are generated constructively at any size, so their labeled counts can be
recomputed independently as sum(n! / |Aut(G)|) over the distinct
isomorphism classes, and their class counts as plain canonical dedupe.
Agreement with the closed forms at n = 6 and 7 extends the verification
to sizes the oracle cannot brute-force.
"""

from __future__ import annotations

import itertools
import math

import numpy as np
import pytest

from extremal_digraphs import formulas as F
from extremal_digraphs.digraph import Digraph, reverse
from extremal_digraphs.families import MaximalQD3, build_family, maximal_radius_digraph
from extremal_digraphs.oracle import canonical_form


def automorphism_order(g: Digraph) -> int:
    n = g.n
    adj = np.zeros((n, n), dtype=np.uint8)
    for u, v in g.arcs:
        adj[u - 1, v - 1] = 1
    perms = np.array(list(itertools.permutations(range(n))), dtype=np.intp)
    relabelled = adj[perms[:, :, None], perms[:, None, :]]
    return int((relabelled == adj).all(axis=(1, 2)).sum())


def maximal_radius_classes(n: int, k: int) -> dict[str, Digraph]:
    classes: dict[str, Digraph] = {}
    for p in range(2, k):
        for a in range(1, n - k + 1):
            g = maximal_radius_digraph(n, k, p, (a, n - k + 1 - a))
            classes.setdefault(canonical_form(g), g)
    for p in range(2, k + 1):
        g = maximal_radius_digraph(n, k, p, (n - k, 0))
        classes.setdefault(canonical_form(g), g)
    return classes


def maximal_qd_classes(n: int, k: int) -> dict[str, Digraph]:
    classes = dict(maximal_radius_classes(n, k))
    for form, g in list(classes.items()):
        rg = reverse(g)
        classes.setdefault(canonical_form(rg), rg)
    if k == 3:
        total = n - 2
        for m1 in range(total + 1):
            for m2 in range(total - m1 + 1):
                for m3 in range(total - m1 - m2 + 1):
                    m4 = total - m1 - m2 - m3
                    if m1 * m2 + m3 * m4 == 0:
                        continue
                    g = build_family(MaximalQD3((m1, m2, m3, m4)))
                    classes.setdefault(canonical_form(g), g)
    return classes


def labeled_count(classes: dict[str, Digraph], n: int) -> int:
    return sum(math.factorial(n) // automorphism_order(g) for g in classes.values())


@pytest.mark.parametrize("n", [6, 7])
def test_maximal_radius_counts_beyond_cap(n):
    for k in range(3, n):
        classes = maximal_radius_classes(n, k)
        assert len(classes) == F.max_radius_iso(n, k), (n, k)
        assert labeled_count(classes, n) == F.chi(n, k), (n, k)


@pytest.mark.parametrize("n", [6, 7])
def test_maximal_quasi_diameter_counts_beyond_cap(n):
    for k in range(3, n):
        classes = maximal_qd_classes(n, k)
        assert len(classes) == F.nu_dm(n, k), (n, k)
        assert labeled_count(classes, n) == F.mu_dm(n, k), (n, k)
