"""Criticality under arc addition and maximality by arc count."""

from __future__ import annotations

import pytest

from conftest import all_digraphs
from extremal_digraphs.criticality import (
    Invariant,
    arc_effect,
    invariant_value,
    is_critical,
    is_maximal,
    missing_arcs,
)
from extremal_digraphs.digraph import (
    Digraph,
    all_pairs_distances,
    arc_bit,
    condensation,
    from_arc_list,
    is_transitive,
    metric_profile,
)
from extremal_digraphs.errors import (
    ArcPresent,
    InfiniteInvariant,
    LoopArc,
    OutOfRange,
    UnsupportedInvariant,
)
from extremal_digraphs.families import D4, GammaK, MaximalRadius, build_family


def gamma(k):
    return build_family(GammaK(k))


def complete(n):
    return from_arc_list(n, [(u, v) for u in range(1, n + 1) for v in range(1, n + 1) if u != v])


def test_missing_arcs_examples():
    assert missing_arcs(gamma(2)) == ((2, 1),)
    assert missing_arcs(complete(3)) == ()
    assert missing_arcs(gamma(3)) == ((2, 1), (3, 1), (3, 2))


def test_arc_effect_merges_bicomponents():
    e = arc_effect(gamma(3), (2, 1), Invariant.D)
    assert e.bicomponents_before == 3 and e.bicomponents_after == 2
    assert e.qualifies


def test_arc_effect_infinite_stays_infinite():
    iso = Digraph(2, 0)
    e = arc_effect(iso, (1, 2), Invariant.D)
    assert e.bicomponents_before == e.bicomponents_after == 2
    assert e.invariant_before.is_infinite and e.invariant_after.is_infinite
    assert not e.qualifies


def test_arc_effect_infinite_to_finite_is_decrease():
    e = arc_effect(Digraph(2, 0), (1, 2), Invariant.DM)
    assert e.invariant_before.is_infinite and e.invariant_after == 1
    assert e.qualifies


def test_arc_effect_errors():
    with pytest.raises(ArcPresent):
        arc_effect(gamma(2), (1, 2), Invariant.D)
    with pytest.raises(LoopArc):
        arc_effect(gamma(2), (1, 1), Invariant.D)
    with pytest.raises(OutOfRange):
        arc_effect(gamma(2), (1, 3), Invariant.D)


def test_is_critical_examples():
    assert is_critical(gamma(3), Invariant.D).critical
    assert not is_critical(Digraph(2, 0), Invariant.D)
    assert is_critical(build_family(D4()), Invariant.RM).critical


def test_is_critical_reports_failing_arc():
    report = is_critical(Digraph(2, 0), Invariant.D)
    assert report.failing_arcs == ((1, 2), (2, 1))
    assert len(report.effects) == 2


def test_complete_digraph_vacuously_critical():
    for n in (2, 3, 4):
        g = complete(n)
        p = metric_profile(g)
        assert p.d == 1 and p.r == 1
        for inv in Invariant:
            report = is_critical(g, inv)
            assert report.critical and report.effects == ()


def test_is_maximal_examples():
    d0 = build_family(MaximalRadius(5, 3, 2, (2, 1)))
    assert is_maximal(d0, Invariant.R)
    assert is_maximal(complete(4), Invariant.R)
    assert not is_maximal(gamma(3), Invariant.R)


def test_is_maximal_oracle_source_agrees():
    d0 = build_family(MaximalRadius(5, 3, 2, (2, 1)))
    assert is_maximal(d0, Invariant.R, max_arcs_source="oracle")
    assert not is_maximal(gamma(3), Invariant.R, max_arcs_source="oracle")
    assert is_maximal(d0, Invariant.DM, max_arcs_source="oracle")
    with pytest.raises(ValueError):
        is_maximal(d0, Invariant.R, max_arcs_source="nope")


def test_is_maximal_quasi_diameter():
    g = from_arc_list(3, [(1, 2), (2, 1), (1, 3), (3, 1)])
    assert metric_profile(g).d_m == 2
    assert is_maximal(g, Invariant.DM)


def test_is_maximal_rejects_infinite_value():
    with pytest.raises(InfiniteInvariant):
        is_maximal(build_family(D4()), Invariant.DM)


def test_is_maximal_unsupported_invariants():
    g = complete(3)
    with pytest.raises(UnsupportedInvariant):
        is_maximal(g, Invariant.D)
    with pytest.raises(UnsupportedInvariant):
        is_maximal(g, Invariant.RM)


# ---------------------------------------------------------------------------
# Exhaustive properties (n <= 4)


@pytest.mark.parametrize("n", [2, 3])
def test_addition_never_increases_distances_small(n):
    for g in all_digraphs(n):
        before = all_pairs_distances(g)
        for u, v in missing_arcs(g):
            g2 = Digraph(n, g.mask | 1 << arc_bit(n, u, v))
            after = all_pairs_distances(g2)
            for x in range(n):
                for y in range(n):
                    assert after[x][y] <= before[x][y]


def test_addition_never_increases_distances_n4(digraphs4):
    for g in digraphs4:
        before = all_pairs_distances(g)
        for u, v in missing_arcs(g):
            g2 = Digraph(4, g.mask | 1 << arc_bit(4, u, v))
            after = all_pairs_distances(g2)
            for x in range(4):
                row_b, row_a = before[x], after[x]
                for y in range(4):
                    assert row_a[y] <= row_b[y]


@pytest.mark.parametrize("n", [2, 3, 4])
def test_addition_never_splits_bicomponents(n):
    for g in all_digraphs(n):
        k = condensation(g).k
        for u, v in missing_arcs(g):
            g2 = Digraph(n, g.mask | 1 << arc_bit(n, u, v))
            assert condensation(g2).k <= k


@pytest.mark.parametrize("n", [2, 3, 4])
@pytest.mark.parametrize("inv", list(Invariant))
def test_critical_with_infinite_value_is_transitive_block_graph(n, inv):
    for g in all_digraphs(n):
        if not invariant_value(metric_profile(g), inv).is_infinite:
            continue
        if not is_critical(g, inv).critical:
            continue
        assert is_transitive(g)
        cond = condensation(g)
        for comp in cond.components:
            size = len(comp)
            arcs_inside = sum(
                1 for u in comp for v in comp if u != v and g.has_arc(u, v)
            )
            assert arcs_inside == size * (size - 1)
