"""Core digraph values: construction, metrics, condensation, flags."""

from __future__ import annotations

import pytest
from hypothesis import given
from hypothesis import strategies as st

from conftest import all_digraphs, relabel
from extremal_digraphs.digraph import (
    INFINITY,
    Digraph,
    Distance,
    all_pairs_distances,
    centers_and_quasicenters,
    condensation,
    from_arc_list,
    is_transitive,
    metric_profile,
    reverse,
    structure_flags,
    transitive_closure,
)
from extremal_digraphs.errors import DuplicateArc, LoopArc, OutOfRange
from extremal_digraphs.families import D4, GammaK, GammaKI, build_family


def gamma(k):
    return build_family(GammaK(k))


# ---------------------------------------------------------------------------
# Distance


def test_distance_total_order():
    assert Distance.finite(0) < Distance.finite(3) < INFINITY
    assert INFINITY > 10**9
    assert Distance.finite(2) == 2
    assert Distance.finite(2) != 3
    assert not INFINITY < INFINITY
    assert INFINITY == INFINITY
    assert max(Distance.finite(1), INFINITY).is_infinite


def test_distance_saturating_addition():
    assert Distance.finite(2) + Distance.finite(3) == 5
    assert (INFINITY + 1).is_infinite
    assert (Distance.finite(4) + INFINITY).is_infinite


def test_distance_rejects_negatives():
    with pytest.raises(ValueError):
        Distance(-1)


def test_distance_hash_consistent():
    assert hash(Distance.finite(3)) == hash(Distance.finite(3))
    assert len({Distance.finite(1), Distance.finite(1), INFINITY}) == 2


# ---------------------------------------------------------------------------
# Construction


def test_from_arc_list_basic():
    g = from_arc_list(2, [(1, 2)])
    assert g.arc_count == 1
    assert g.arcs == ((1, 2),)
    assert g.has_arc(1, 2) and not g.has_arc(2, 1)


def test_from_arc_list_rejects_loop():
    with pytest.raises(LoopArc):
        from_arc_list(2, [(1, 1)])


def test_from_arc_list_rejects_duplicate():
    with pytest.raises(DuplicateArc):
        from_arc_list(3, [(1, 2), (1, 2)])


def test_from_arc_list_rejects_out_of_range():
    with pytest.raises(OutOfRange):
        from_arc_list(2, [(1, 3)])
    with pytest.raises(OutOfRange):
        from_arc_list(2, [(0, 1)])


def test_digraph_value_semantics():
    g1 = from_arc_list(3, [(1, 2), (2, 3)])
    g2 = from_arc_list(3, [(2, 3), (1, 2)])
    assert g1 == g2 and hash(g1) == hash(g2)
    assert g1 != from_arc_list(3, [(1, 2)])


# ---------------------------------------------------------------------------
# Distances and metric profile


def test_distances_on_gamma3():
    rho = all_pairs_distances(gamma(3))
    assert rho[0][2] == 1
    assert rho[1][0].is_infinite
    assert all(rho[x][x] == 0 for x in range(3))


def test_profile_gamma3():
    p = metric_profile(gamma(3))
    assert p.d.is_infinite
    assert p.d_m == 1 and p.r == 1 and p.r_m == 1


def test_profile_d4_quasi_radius_infinite():
    p = metric_profile(build_family(D4()))
    assert p.r_m.is_infinite and p.d_m.is_infinite


def test_profile_complete_symmetric_pair():
    p = metric_profile(from_arc_list(2, [(1, 2), (2, 1)]))
    assert (p.d, p.d_m, p.r, p.r_m) == (1, 1, 1, 1)


def test_profile_single_vertex_all_zero():
    p = metric_profile(Digraph(1, 0))
    assert (p.d, p.d_m, p.r, p.r_m) == (0, 0, 0, 0)


def test_profile_1_based_accessors():
    p = metric_profile(gamma(3))
    assert p.distance(1, 3) == 1
    assert p.distance(3, 1).is_infinite
    assert p.distance_m(3, 1) == 1


# ---------------------------------------------------------------------------
# Condensation


def test_condensation_two_components():
    c = condensation(from_arc_list(3, [(1, 2), (2, 1), (1, 3), (2, 3)]))
    assert c.components == ((1, 2), (3,))
    assert c.sizes == (2, 1)
    assert c.hertz == gamma(2)
    assert c.component_index(2) == 1 and c.component_index(3) == 2


def test_condensation_of_acyclic_is_identity():
    g = gamma(4)
    c = condensation(g)
    assert c.k == 4 and c.hertz == g


def test_condensation_of_cycle():
    c = condensation(from_arc_list(3, [(1, 2), (2, 3), (3, 1)]))
    assert c.k == 1
    assert c.hertz.n == 1 and c.hertz.arc_count == 0


def test_condensation_index_order_is_topological():
    # sink component listed after its predecessors regardless of labels
    c = condensation(from_arc_list(3, [(3, 1), (3, 2), (1, 2), (2, 1)]))
    assert c.components == ((3,), (1, 2))


# ---------------------------------------------------------------------------
# Transitive closure


def test_closure_of_path():
    assert transitive_closure(from_arc_list(3, [(1, 2), (2, 3)])) == gamma(3)


def test_closure_idempotent_on_gamma():
    assert transitive_closure(gamma(3)) == gamma(3)


def test_closure_with_cycle():
    g = transitive_closure(from_arc_list(3, [(1, 2), (2, 1), (2, 3)]))
    assert set(g.arcs) == {(1, 2), (2, 1), (2, 3), (1, 3)}


def test_closure_idempotent_exhaustive_n3():
    for g in all_digraphs(3):
        tc = transitive_closure(g)
        assert transitive_closure(tc) == tc


# ---------------------------------------------------------------------------
# Structure flags


def test_flags_gamma4():
    f = structure_flags(gamma(4))
    assert f.is_acyclic and f.is_transitive and f.is_transitive_tournament
    assert not f.is_complete_symmetric and not f.is_biconnected


def test_flags_d4():
    f = structure_flags(build_family(D4()))
    assert f.is_acyclic and f.is_transitive
    assert not f.is_transitive_tournament


def test_flags_cycle():
    f = structure_flags(from_arc_list(3, [(1, 2), (2, 3), (3, 1)]))
    assert not f.is_acyclic and not f.is_transitive and f.is_biconnected


def test_flags_complete_symmetric():
    f = structure_flags(from_arc_list(2, [(1, 2), (2, 1)]))
    assert f.is_complete_symmetric and f.is_biconnected and f.is_transitive


def test_tournament_flag_implies_shape():
    for g in all_digraphs(3):
        f = structure_flags(g)
        if f.is_transitive_tournament:
            assert f.is_acyclic and f.is_transitive
            assert g.arc_count == 3


# ---------------------------------------------------------------------------
# Reverse


def test_reverse_single_arc():
    assert reverse(gamma(2)).arcs == ((2, 1),)


def test_reverse_involution_exhaustive_n3():
    for g in all_digraphs(3):
        assert reverse(reverse(g)) == g


def test_reverse_preserves_quasi_metrics_n3(profiles3, digraphs3):
    for g, p in zip(digraphs3, profiles3):
        q = metric_profile(reverse(g))
        assert q.d_m == p.d_m and q.r_m == p.r_m


# ---------------------------------------------------------------------------
# Centers and quasi-centers


def test_centers_gamma3():
    assert centers_and_quasicenters(gamma(3)) == (
        frozenset({1}),
        frozenset({1, 2, 3}),
    )


def test_centers_gamma31():
    g = build_family(GammaKI(3, 1))
    assert set(g.arcs) == {(1, 3), (2, 3)}
    assert centers_and_quasicenters(g) == (frozenset(), frozenset({3}))


def test_quasicenters_empty_for_d4():
    assert centers_and_quasicenters(build_family(D4()))[1] == frozenset()


# ---------------------------------------------------------------------------
# Exhaustive metric invariants (n <= 4)


@pytest.mark.parametrize("n", [2, 3, 4])
def test_triangle_inequality_exhaustive(n):
    for g in all_digraphs(n):
        rho = all_pairs_distances(g)
        for x in range(n):
            assert rho[x][x] == 0
            for y in range(n):
                if x != y:
                    assert rho[x][y] >= 1
                for z in range(n):
                    assert rho[x][z] <= rho[x][y] + rho[y][z]


@pytest.mark.parametrize("n", [2, 3, 4])
def test_finiteness_criteria_exhaustive(n):
    for g in all_digraphs(n):
        p = metric_profile(g)
        cond = condensation(g)
        assert p.d.is_finite == (cond.k == 1)
        one_direction = all(
            p.rho[x][y].is_finite or p.rho[y][x].is_finite
            for x in range(n)
            for y in range(n)
        )
        assert p.d_m.is_finite == one_direction
        some_root = any(
            all(p.rho[x][y].is_finite for y in range(n)) for x in range(n)
        )
        assert p.r.is_finite == some_root
        centers, quasi = centers_and_quasicenters(g)
        assert p.r_m.is_finite == bool(quasi)
        assert bool(centers) == p.r.is_finite


@pytest.mark.parametrize("n", [2, 3, 4])
def test_hertz_acyclic_and_transitivity_inherited(n):
    for g in all_digraphs(n):
        cond = condensation(g)
        assert structure_flags(cond.hertz).is_acyclic
        if is_transitive(g):
            assert is_transitive(cond.hertz)


@pytest.mark.parametrize("n", [2, 3, 4])
def test_closure_preserves_components(n):
    for g in all_digraphs(n):
        assert (
            condensation(transitive_closure(g)).components
            == condensation(g).components
        )


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_metric_chain_relations(n):
    for g in all_digraphs(n) if n > 1 else (Digraph(1, 0),):
        p = metric_profile(g)
        assert p.d >= p.d_m >= p.r_m
        assert p.d >= p.r >= p.r_m


@given(
    mask=st.integers(min_value=0, max_value=(1 << 20) - 1),
    new_labels=st.permutations(list(range(1, 6))),
)
def test_profile_invariant_under_relabelling(mask, new_labels):
    g = Digraph(5, mask)
    perm = {old: new for old, new in zip(range(1, 6), new_labels)}
    p, q = metric_profile(g), metric_profile(relabel(g, perm))
    assert (p.d, p.d_m, p.r, p.r_m) == (q.d, q.d_m, q.r, q.r_m)


@given(mask=st.integers(min_value=0, max_value=(1 << 30) - 1))
def test_closure_contains_graph_and_is_idempotent_n6(mask):
    g = Digraph(6, mask)
    tc = transitive_closure(g)
    assert g.mask & tc.mask == g.mask
    assert transitive_closure(tc) == tc
    assert is_transitive(tc)


@given(mask=st.integers(min_value=0, max_value=(1 << 42) - 1))
def test_condensation_partitions_and_hertz_acyclic_n7(mask):
    g = Digraph(7, mask)
    cond = condensation(g)
    seen = sorted(v for comp in cond.components for v in comp)
    assert seen == list(range(1, 8))
    assert structure_flags(cond.hertz).is_acyclic
    assert cond.sizes == tuple(len(c) for c in cond.components)
