"""Exhaustive scans: enumeration, counting, extremal search, iso classes."""

from __future__ import annotations

from typing import Iterator

import numpy as np

from ..digraph import Digraph
from ..errors import EmptyPredicate
from .canonical import canonical_form
from .predicates import PredicateDescriptor, encode_distance
from .tables import (
    INVARIANT_KEY,
    check_enum_n,
    criticality_tables,
    digraph_count,
    map_chunks,
    metric_tables,
)

__all__ = [
    "enumerate_digraphs",
    "count_labeled",
    "max_arcs_where",
    "iso_class_count",
    "satisfying_indices",
]

INF_CODE = 255


def enumerate_digraphs(n: int) -> Iterator[Digraph]:
    """Every labeled loop-free digraph on n vertices, in bitmask order."""
    check_enum_n(n)
    for mask in range(digraph_count(n)):
        yield Digraph(n, mask)


def _vector_mask(n: int, pred: PredicateDescriptor, workers: int | None) -> np.ndarray:
    tables = metric_tables(n, workers)
    mask = np.ones(digraph_count(n), dtype=bool)
    for atom, key in (
        (pred.diameter, "d"),
        (pred.quasi_diameter, "dm"),
        (pred.radius, "r"),
        (pred.quasi_radius, "rm"),
    ):
        if atom is not None:
            mask &= tables[key] == encode_distance(atom)
    if pred.bicomponents is not None:
        mask &= tables["bc"] == pred.bicomponents
    if pred.arcs is not None:
        mask &= tables["arcs"] == pred.arcs
    if pred.biconnected is not None:
        mask &= (tables["bc"] == 1) == pred.biconnected
    if pred.transitive is not None:
        mask &= tables["transitive"] == pred.transitive
    if pred.critical is not None:
        mask &= criticality_tables(n, workers)[INVARIANT_KEY[pred.critical]]
    return mask


def _survivors(n: int, pred: PredicateDescriptor, workers: int | None) -> list[int]:
    """Indices satisfying pred, in increasing order."""
    mask = _vector_mask(n, pred, workers)
    chunks = map_chunks(
        mask.shape[0],
        lambda lo, hi: (lo + np.flatnonzero(mask[lo:hi])).tolist(),
        workers,
    )
    indices = [i for chunk in chunks for i in chunk]
    if pred.needs_graph_filter:
        # only the atoms the tables cannot answer
        residual = PredicateDescriptor(hertz_isomorphic_to=pred.hertz_isomorphic_to)
        indices = [i for i in indices if residual.matches(Digraph(n, i))]
    return indices


def count_labeled(n: int, pred: PredicateDescriptor, workers: int | None = None) -> int:
    """How many enumerated digraphs satisfy the predicate."""
    if pred.needs_graph_filter:
        return len(_survivors(n, pred, workers))
    mask = _vector_mask(n, pred, workers)
    counts = map_chunks(
        mask.shape[0], lambda lo, hi: int(mask[lo:hi].sum()), workers
    )
    return sum(counts)


def max_arcs_where(
    n: int, pred: PredicateDescriptor, workers: int | None = None
) -> tuple[int, Digraph]:
    """Maximum arc count among satisfying digraphs, with the smallest-index
    witness attaining it."""
    if pred.needs_graph_filter:
        indices = _survivors(n, pred, workers)
        if not indices:
            raise EmptyPredicate(f"no {n}-vertex digraph satisfies {pred!r}")
        best = max(indices, key=lambda i: (bin(i).count("1"), -i))
        return bin(best).count("1"), Digraph(n, best)
    mask = _vector_mask(n, pred, workers)
    arcs = metric_tables(n, workers)["arcs"]

    def chunk_best(lo: int, hi: int) -> tuple[int, int] | None:
        local = mask[lo:hi]
        if not local.any():
            return None
        vals = arcs[lo:hi]
        top = int(vals[local].max())
        idx = lo + int(np.flatnonzero(local & (vals == top))[0])
        return top, idx

    best: tuple[int, int] | None = None
    for item in map_chunks(mask.shape[0], chunk_best, workers):
        if item is None:
            continue
        if best is None or item[0] > best[0] or (item[0] == best[0] and item[1] < best[1]):
            best = item
    if best is None:
        raise EmptyPredicate(f"no {n}-vertex digraph satisfies {pred!r}")
    return best[0], Digraph(n, best[1])


def iso_class_count(
    n: int, pred: PredicateDescriptor, workers: int | None = None
) -> int:
    """Number of distinct canonical forms among satisfying digraphs."""
    return len(iso_class_forms(n, pred, workers))


def iso_class_forms(
    n: int, pred: PredicateDescriptor, workers: int | None = None
) -> set[str]:
    """Canonical forms of the satisfying digraphs."""
    return {canonical_form(Digraph(n, i)) for i in _survivors(n, pred, workers)}


def satisfying_indices(
    n: int, pred: PredicateDescriptor, workers: int | None = None
) -> list[int]:
    """All satisfying enumeration indices in increasing order."""
    return _survivors(n, pred, workers)
