"""Shared test fixtures: cached exhaustive enumerations and relabelling."""

from __future__ import annotations

from functools import lru_cache

import pytest

from extremal_digraphs.digraph import Digraph, arc_bit, metric_profile


@lru_cache(maxsize=None)
def all_digraphs(n: int) -> tuple[Digraph, ...]:
    return tuple(Digraph(n, mask) for mask in range(1 << (n * (n - 1))))


@lru_cache(maxsize=None)
def all_profiles(n: int):
    return tuple(metric_profile(g) for g in all_digraphs(n))


def relabel(g: Digraph, perm: dict[int, int]) -> Digraph:
    """Apply a vertex bijection (1-based old -> new labels)."""
    mask = 0
    for u, v in g.arcs:
        mask |= 1 << arc_bit(g.n, perm[u], perm[v])
    return Digraph(g.n, mask)


@pytest.fixture(scope="session")
def digraphs3():
    return all_digraphs(3)


@pytest.fixture(scope="session")
def digraphs4():
    return all_digraphs(4)


@pytest.fixture(scope="session")
def profiles3():
    return all_profiles(3)


@pytest.fixture(scope="session")
def profiles4():
    return all_profiles(4)
