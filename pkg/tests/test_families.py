"""Family constructors, blow-ups, maximal constructions, recognition."""

from __future__ import annotations

import pytest
from hypothesis import given
from hypothesis import strategies as st

from conftest import all_digraphs
from extremal_digraphs.criticality import Invariant, is_critical
from extremal_digraphs.digraph import (
    condensation,
    from_arc_list,
    metric_profile,
    reverse,
    structure_flags,
)
from extremal_digraphs.errors import CyclicHertz, InvalidSpec, SizeMismatch, ZeroSize
from extremal_digraphs.families import (
    D4,
    GammaK,
    GammaK0,
    GammaKI,
    GammaPartition,
    MaximalQD3,
    MaximalRadius,
    ReversedMaximalRadius,
    blow_up,
    build_family,
    maximal_quasidiameter_digraph,
    maximal_radius_digraph,
    recognize_hertz_family,
)
from extremal_digraphs.formulas import f_max_arcs, g_max_arcs
from extremal_digraphs.oracle import canonical_form


def compositions(total, parts):
    if parts == 0:
        if total == 0:
            yield ()
        return
    for first in range(1, total - parts + 2):
        for rest in compositions(total - first, parts - 1):
            yield (first,) + rest


# ---------------------------------------------------------------------------
# build_family


def test_gamma_k_shape():
    g = build_family(GammaK(4))
    assert g.arc_count == 6
    assert structure_flags(g).is_transitive_tournament


def test_gamma_ki_removes_one_arc():
    g = build_family(GammaKI(4, 2))
    assert g.arc_count == 5
    assert not g.has_arc(2, 3)
    assert g.has_arc(2, 4)


def test_gamma_k0_leaves_vertex_one_bare():
    g = build_family(GammaK0(4))
    assert set(g.arcs) == {(2, 3), (2, 4), (3, 4)}


def test_partition_2_2_is_d4():
    assert build_family(GammaPartition((2, 2))) == build_family(D4())


def test_partition_arcs_layout():
    g = build_family(GammaPartition((2, 3)))
    # block {1,2} bare pair; block {3,4,5} has (4,5); all cross arcs
    assert set(g.arcs) == {
        (4, 5),
        (1, 3), (1, 4), (1, 5), (2, 3), (2, 4), (2, 5),
    }


def test_build_family_invalid_specs():
    with pytest.raises(InvalidSpec):
        build_family(GammaK(0))
    with pytest.raises(InvalidSpec):
        build_family(GammaKI(4, 4))
    with pytest.raises(InvalidSpec):
        build_family(GammaKI(4, 0))
    with pytest.raises(InvalidSpec):
        build_family(GammaK0(1))
    with pytest.raises(InvalidSpec):
        build_family(GammaPartition((2, 1)))
    with pytest.raises(InvalidSpec):
        build_family(GammaPartition(()))


# ---------------------------------------------------------------------------
# blow_up


def test_blow_up_example():
    g = blow_up(build_family(GammaK(2)), (1, 2))
    assert set(g.arcs) == {(1, 2), (1, 3), (2, 3), (3, 2)}
    assert g.arc_count == 4


def test_blow_up_identity():
    g3 = build_family(GammaK(3))
    assert blow_up(g3, (1, 1, 1)) == g3


def test_blow_up_errors():
    cycle = from_arc_list(2, [(1, 2), (2, 1)])
    with pytest.raises(CyclicHertz):
        blow_up(cycle, (1, 1))
    with pytest.raises(SizeMismatch):
        blow_up(build_family(GammaK(2)), (1, 1, 1))
    with pytest.raises(ZeroSize):
        blow_up(build_family(GammaK(2)), (1, 0))


def ascending_dags(n):
    """All DAGs whose labelling is already topological (covers every DAG
    up to isomorphism)."""
    up_pairs = [(u, v) for u in range(1, n + 1) for v in range(u + 1, n + 1)]
    for mask in range(1 << len(up_pairs)):
        yield from_arc_list(
            n, [p for b, p in enumerate(up_pairs) if mask >> b & 1]
        )


@pytest.mark.parametrize("n", [2, 3, 4])
def test_blow_up_condensation_roundtrip_exhaustive_small(n):
    for h in ascending_dags(n):
        for sizes_mask in range(1 << n):
            sizes = tuple(2 if sizes_mask >> i & 1 else 1 for i in range(n))
            cond = condensation(blow_up(h, sizes))
            assert cond.hertz == h
            assert cond.sizes == sizes


def test_blow_up_condensation_roundtrip_n5():
    for h in ascending_dags(5):
        for sizes_mask in (0, 1, 10, 21, 31):
            sizes = tuple(2 if sizes_mask >> i & 1 else 1 for i in range(5))
            cond = condensation(blow_up(h, sizes))
            assert cond.hertz == h and cond.sizes == sizes


@given(
    hertz_mask=st.integers(min_value=0, max_value=(1 << 15) - 1),
    sizes=st.lists(st.integers(min_value=1, max_value=3), min_size=6, max_size=6),
)
def test_blow_up_roundtrip_random_ascending_dags(hertz_mask, sizes):
    up_pairs = [(u, v) for u in range(1, 7) for v in range(u + 1, 7)]
    h = from_arc_list(
        6, [p for b, p in enumerate(up_pairs) if hertz_mask >> b & 1]
    )
    cond = condensation(blow_up(h, tuple(sizes)))
    assert cond.hertz == h
    assert cond.sizes == tuple(sizes)


def test_blow_up_nonascending_hertz_recovered_up_to_relabelling():
    h = from_arc_list(2, [(2, 1)])
    cond = condensation(blow_up(h, (3, 2)))
    assert cond.hertz == from_arc_list(2, [(1, 2)])
    assert cond.sizes == (2, 3)
    assert cond.components == ((4, 5), (1, 2, 3))


# ---------------------------------------------------------------------------
# maximal radius construction


def test_maximal_radius_example():
    g = maximal_radius_digraph(5, 3, 2, (2, 1))
    assert g.arc_count == 12 == g_max_arcs(5, 3)
    assert metric_profile(g).r == 3


def test_maximal_radius_chain():
    for k in (3, 4):
        g = maximal_radius_digraph(k + 1, k, 2, (1, 0))
        assert g.arc_count == g_max_arcs(k + 1, k) == (k * k + k) // 2
        assert metric_profile(g).r == k


def test_maximal_radius_two_classes_at_5_3():
    forms = {
        canonical_form(build_family(MaximalRadius(5, 3, 2, split)))
        for split in ((2, 1), (1, 2), (2, 0))
    }
    assert len(forms) == 2


def test_maximal_radius_invalid_specs():
    with pytest.raises(InvalidSpec):
        maximal_radius_digraph(5, 2, 2, (3, 1))  # k < 3
    with pytest.raises(InvalidSpec):
        maximal_radius_digraph(5, 3, 1, (2, 1))  # p < 2
    with pytest.raises(InvalidSpec):
        maximal_radius_digraph(5, 3, 3, (2, 1))  # p+1 > k with b >= 1
    with pytest.raises(InvalidSpec):
        maximal_radius_digraph(5, 3, 2, (1, 1))  # a+b != n-k+1
    with pytest.raises(InvalidSpec):
        maximal_radius_digraph(5, 3, 2, (1, 0))  # a != n-k for single block
    with pytest.raises(InvalidSpec):
        maximal_radius_digraph(3, 3, 2, (1, 0))  # n <= k


@pytest.mark.parametrize("n", [4, 5, 6, 7, 8])
def test_maximal_radius_attains_bound_everywhere(n):
    for k in range(3, n):
        for p in range(2, k):
            for a in range(1, n - k + 1):
                g = maximal_radius_digraph(n, k, p, (a, n - k + 1 - a))
                assert g.arc_count == g_max_arcs(n, k)
                assert metric_profile(g).r == k
        for p in range(2, k + 1):
            g = maximal_radius_digraph(n, k, p, (n - k, 0))
            assert g.arc_count == g_max_arcs(n, k)
            assert metric_profile(g).r == k


# ---------------------------------------------------------------------------
# maximal quasi-diameter construction


def test_qd3_core_example():
    g = build_family(MaximalQD3((1, 1, 1, 1)))
    assert g.n == 6 and g.arc_count == 20 == f_max_arcs(6, 3)
    assert metric_profile(g).d_m == 3


def test_qd3_pole_wiring():
    g = build_family(MaximalQD3((1, 1, 1, 1)))
    z, x1, x2, x3, x4, v = 1, 2, 3, 4, 5, 6
    assert g.has_arc(z, x1) and g.has_arc(x1, z)
    assert g.has_arc(v, x2) and g.has_arc(x2, v)
    assert g.has_arc(x3, z) and g.has_arc(x3, v)
    assert not g.has_arc(z, x3) and not g.has_arc(v, x3)
    assert g.has_arc(z, x4) and g.has_arc(v, x4)
    assert not g.has_arc(x4, z) and not g.has_arc(x4, v)
    assert not g.has_arc(z, v) and not g.has_arc(v, z)


def test_qd3_rejects_empty_products():
    with pytest.raises(InvalidSpec):
        build_family(MaximalQD3((0, 0, 0, 0)))
    with pytest.raises(InvalidSpec):
        build_family(MaximalQD3((1, 0, 1, 0)))


def test_reversed_maximal_radius_quasi_diameter():
    g = maximal_quasidiameter_digraph(ReversedMaximalRadius(5, 4, 2, (1, 0)))
    assert metric_profile(g).d_m == 4
    assert g == reverse(maximal_radius_digraph(5, 4, 2, (1, 0)))


def test_maximal_quasidiameter_rejects_other_specs():
    with pytest.raises(InvalidSpec):
        maximal_quasidiameter_digraph(GammaK(3))


@pytest.mark.parametrize("n", [4, 5, 6, 7, 8])
def test_maximal_quasidiameter_attains_bound(n):
    for k in range(3, n):
        g = maximal_quasidiameter_digraph(MaximalRadius(n, k, 2, (n - k, 0)))
        assert g.arc_count == f_max_arcs(n, k)
        assert metric_profile(g).d_m == k
        rg = maximal_quasidiameter_digraph(ReversedMaximalRadius(n, k, 2, (n - k, 0)))
        assert metric_profile(rg).d_m == k
    # the pole-and-core family at quasi-diameter 3
    for sizes in compositions(n - 2 + 4, 4):
        sizes = tuple(s - 1 for s in sizes)
        if sum(sizes) != n - 2 or sizes[0] * sizes[1] + sizes[2] * sizes[3] == 0:
            continue
        g = maximal_quasidiameter_digraph(MaximalQD3(sizes))
        assert g.arc_count == f_max_arcs(n, 3)
        assert metric_profile(g).d_m == 3


# ---------------------------------------------------------------------------
# family criticality (the structures really are critical)


def test_gamma_k_blowups_are_d_critical():
    for k in (2, 3, 4):
        hertz = build_family(GammaK(k))
        for total in range(k, 6):
            for sizes in compositions(total, k):
                g = blow_up(hertz, sizes)
                assert metric_profile(g).d.is_infinite
                assert is_critical(g, Invariant.D).critical


def test_gamma_ki_blowups_are_dm_critical():
    for k in (2, 3, 4):
        for i in range(1, k):
            hertz = build_family(GammaKI(k, i))
            for total in range(k, 6):
                for sizes in compositions(total, k):
                    g = blow_up(hertz, sizes)
                    assert metric_profile(g).d_m.is_infinite
                    assert is_critical(g, Invariant.DM).critical


def test_gamma_k1_blowups_are_r_critical():
    for k in (2, 3, 4):
        hertz = build_family(GammaKI(k, 1))
        for total in range(k, 6):
            for sizes in compositions(total, k):
                g = blow_up(hertz, sizes)
                assert metric_profile(g).r.is_infinite
                assert is_critical(g, Invariant.R).critical


def test_partition_blowups_are_rm_critical():
    for block_sizes in ((2,), (3,), (4,), (2, 2)):
        hertz = build_family(GammaPartition(block_sizes))
        k = sum(block_sizes)
        for total in range(k, 6):
            for sizes in compositions(total, k):
                g = blow_up(hertz, sizes)
                assert metric_profile(g).r_m.is_infinite
                assert is_critical(g, Invariant.RM).critical


def test_gamma_k0_family_rm_critical():
    for k in (2, 3, 4, 5):
        g = build_family(GammaK0(k))
        assert metric_profile(g).r_m.is_infinite
        assert is_critical(g, Invariant.RM).critical


# ---------------------------------------------------------------------------
# recognition


def test_recognize_tournament():
    cls = recognize_hertz_family(build_family(GammaK(4)))
    assert cls.transitive_tournament == 4
    assert cls.partition_sizes is None


def test_recognize_d4():
    cls = recognize_hertz_family(build_family(D4()))
    assert cls.is_d4 and cls.partition_sizes == (2, 2)


def test_recognize_cycle_unclassified():
    cls = recognize_hertz_family(from_arc_list(3, [(1, 2), (2, 3), (3, 1)]))
    assert cls.unrecognized


def test_recognize_gamma_ki_all_indices():
    for k in range(2, 7):
        for i in range(1, k):
            cls = recognize_hertz_family(build_family(GammaKI(k, i)))
            assert cls.gamma_ki == (k, i)


def test_recognize_gamma_k0_and_partitions():
    for k in range(2, 7):
        cls = recognize_hertz_family(build_family(GammaK0(k)))
        assert cls.gamma_k0 == k
        assert cls.partition_sizes == (k,)
    for sizes in ((2, 2), (2, 3), (3, 2), (2, 2, 2)):
        cls = recognize_hertz_family(build_family(GammaPartition(sizes)))
        assert cls.partition_sizes == sizes


def test_recognition_is_relabelling_invariant():
    from conftest import relabel

    g = build_family(GammaPartition((2, 3)))
    perm = {1: 4, 2: 2, 3: 5, 4: 1, 5: 3}
    cls = recognize_hertz_family(relabel(g, perm))
    assert cls.partition_sizes == (2, 3)


def test_recognizer_claims_sound_at_n5_sampled():
    """Every positive classification at n=5 is certified by an exact
    canonical-form comparison against the built family member."""
    from extremal_digraphs.digraph import Digraph

    for mask in range(0, 1 << 20, 997):
        g = Digraph(5, mask)
        cls = recognize_hertz_family(g)
        form = canonical_form(g)
        if cls.transitive_tournament is not None:
            assert form == canonical_form(build_family(GammaK(5)))
        if cls.gamma_ki is not None:
            assert form == canonical_form(build_family(GammaKI(*cls.gamma_ki)))
        if cls.gamma_k0 is not None:
            assert form == canonical_form(build_family(GammaK0(5)))
        if cls.partition_sizes is not None:
            assert form == canonical_form(
                build_family(GammaPartition(cls.partition_sizes))
            )


def test_recognizers_agree_with_canonical_forms_exhaustive():
    """Structural recognition equals canonical-form isomorphism on all
    digraphs with up to 4 vertices."""
    targets: dict[int, dict[str, tuple]] = {}
    for n in (2, 3, 4):
        per_n = {}
        per_n[canonical_form(build_family(GammaK(n)))] = ("tt", n)
        for i in range(1, n):
            per_n.setdefault(canonical_form(build_family(GammaKI(n, i))), ("ki", n, i))
        per_n.setdefault(canonical_form(build_family(GammaK0(n))), ("k0", n))
        targets[n] = per_n
    partition_forms = {
        2: {canonical_form(build_family(GammaPartition((2,)))): (2,)},
        3: {canonical_form(build_family(GammaPartition((3,)))): (3,)},
        4: {
            canonical_form(build_family(GammaPartition(sizes))): sizes
            for sizes in ((4,), (2, 2))
        },
    }
    for n in (2, 3, 4):
        for g in all_digraphs(n):
            form = canonical_form(g)
            cls = recognize_hertz_family(g)
            expected = targets[n].get(form)
            assert (cls.transitive_tournament == n) == (expected == ("tt", n))
            if cls.gamma_ki is not None:
                assert expected == ("ki",) + cls.gamma_ki
            elif expected and expected[0] == "ki":
                pytest.fail(f"missed gamma_ki on {g!r}")
            assert (cls.gamma_k0 == n) == (expected == ("k0", n)) or (
                n == 2 and expected == ("ki", 2, 1)
            )
            assert cls.partition_sizes == partition_forms[n].get(form)
