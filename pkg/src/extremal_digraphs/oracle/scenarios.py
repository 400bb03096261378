"""Named verification scenarios: oracle truth against every closed form.

Each scenario sweeps a parameter grid and emits one cell per point,
comparing exhaustive-enumeration values (counts, maxima, canonical-form
classes, or violation counts) with the corresponding closed form or
characterization.  Mismatches are recorded, never raised; the formulas
under errata suspicion (the maximal-radius class count's proof-line
variant, the labeled maximal-radius count, and the labeled maximal
quasi-diameter count) downgrade disagreements to an errata record so a
verification run can report them without aborting.
"""

from __future__ import annotations

import time
from typing import Callable, Iterator

import numpy as np

from .. import formulas
from ..criticality import Invariant, invariant_value, is_critical, missing_arcs
from ..digraph import (
    INFINITY,
    Digraph,
    arc_bit,
    bicomponent_count,
    condensation,
    metric_profile,
    reverse,
)
from ..errors import TooLarge, UnknownScenario
from ..families import (
    GammaK,
    GammaK0,
    GammaKI,
    GammaPartition,
    MaximalQD3,
    MaximalRadius,
    blow_up,
    build_family,
    maximal_radius_digraph,
    recognize_hertz_family,
)
from .canonical import canonical_form
from .predicates import PredicateDescriptor
from .report import VerificationReport, cell, violations_cell
from .scan import count_labeled, iso_class_forms, max_arcs_where, satisfying_indices
from .tables import INF_CODE, digraph_count, forall_additions, metric_tables

__all__ = ["run_scenario", "list_scenarios", "SCENARIOS", "ERRATA_SUSPECT_SCENARIOS"]

ERRATA_SUSPECT_SCENARIOS = frozenset({"cor51", "cor52", "cor62"})


# ---------------------------------------------------------------------------
# Small combinatorial iterators


def _compositions(total: int, parts: int) -> Iterator[tuple[int, ...]]:
    """Ordered tuples of positive integers with the given sum and length."""
    if parts == 0:
        if total == 0:
            yield ()
        return
    for first in range(1, total - parts + 2):
        for rest in _compositions(total - first, parts - 1):
            yield (first,) + rest


def _compositions_min2(total: int) -> Iterator[tuple[int, ...]]:
    """Ordered tuples of integers >= 2 with the given sum (any length)."""
    for parts in range(1, total // 2 + 1):
        for comp in _compositions(total - parts, parts):
            yield tuple(x + 1 for x in comp)


def _weak_compositions(total: int, parts: int) -> Iterator[tuple[int, ...]]:
    """Ordered tuples of nonnegative integers with the given sum."""
    if parts == 1:
        yield (total,)
        return
    for first in range(total + 1):
        for rest in _weak_compositions(total - first, parts - 1):
            yield (first,) + rest


# ---------------------------------------------------------------------------
# Generators for the maximal families


def _maximal_radius_specs(n: int, k: int) -> list[MaximalRadius]:
    specs = []
    for p in range(2, k):
        for a in range(1, n - k + 1):
            specs.append(MaximalRadius(n, k, p, (a, n - k + 1 - a)))
    for p in range(2, k + 1):
        specs.append(MaximalRadius(n, k, p, (n - k, 0)))
    return specs


def _qd3_sizes(n: int) -> list[tuple[int, int, int, int]]:
    return [
        sizes
        for sizes in _weak_compositions(n - 2, 4)
        if sizes[0] * sizes[1] + sizes[2] * sizes[3] > 0
    ]


def _generated_radius_forms(n: int, k: int) -> set[str]:
    return {
        canonical_form(maximal_radius_digraph(s.n, s.k, s.p, s.split))
        for s in _maximal_radius_specs(n, k)
    }


def _generated_qd_forms(n: int, k: int) -> set[str]:
    forms = set()
    for s in _maximal_radius_specs(n, k):
        g = maximal_radius_digraph(s.n, s.k, s.p, s.split)
        forms.add(canonical_form(g))
        forms.add(canonical_form(reverse(g)))
    if k == 3:
        for sizes in _qd3_sizes(n):
            forms.add(canonical_form(build_family(MaximalQD3(sizes))))
    return forms


# ---------------------------------------------------------------------------
# Characterization scaffolding


def _hertz_check(
    n: int,
    pred: PredicateDescriptor,
    classify_ok: Callable[[Digraph, int], bool],
    workers: int | None,
) -> tuple[int, int]:
    """(violations, checked) over enumerated digraphs matching pred."""
    indices = satisfying_indices(n, pred, workers)
    violations = 0
    for i in indices:
        cond = condensation(Digraph(n, i))
        if not classify_ok(cond.hertz, cond.k):
            violations += 1
    return violations, len(indices)


def _blowup_converse(
    hertz_graphs: list[Digraph],
    max_total: int,
    inv: Invariant,
    value_of: Callable[[Digraph], object],
) -> tuple[int, int]:
    """Check every blow-up is inv-critical with an infinite invariant."""
    violations = 0
    checked = 0
    for hertz in hertz_graphs:
        for total in range(hertz.n, max_total + 1):
            for sizes in _compositions(total, hertz.n):
                g = blow_up(hertz, sizes)
                checked += 1
                if not (value_of(g).is_infinite and is_critical(g, inv).critical):
                    violations += 1
    return violations, checked


def _completion_converse(
    hertz_graphs: list[Digraph],
    max_total: int,
    becomes_ok: Callable[[Digraph], bool],
) -> tuple[int, int]:
    """Check every single-arc completion of every blow-up satisfies becomes_ok."""
    violations = 0
    checked = 0
    for hertz in hertz_graphs:
        for total in range(hertz.n, max_total + 1):
            for sizes in _compositions(total, hertz.n):
                g = blow_up(hertz, sizes)
                checked += 1
                for u, v in missing_arcs(g):
                    g2 = Digraph(g.n, g.mask | 1 << arc_bit(g.n, u, v))
                    if not becomes_ok(g2):
                        violations += 1
                        break
    return violations, checked


def _theorem_scenario(
    inv: Invariant,
    value_key: str,
    classify_ok: Callable[[Digraph, int], bool],
    converse_hertz: Callable[[int], list[Digraph]],
) -> Callable[[int, int | None], list]:
    pred_atom = {
        "d": "diameter",
        "dm": "quasi_diameter",
        "r": "radius",
        "rm": "quasi_radius",
    }[value_key]

    def run(max_n: int, workers: int | None) -> list:
        cells = []
        for n in range(2, max_n + 1):
            pred = PredicateDescriptor(**{pred_atom: INFINITY}, critical=inv)
            violations, checked = _hertz_check(n, pred, classify_ok, workers)
            cells.append(
                violations_cell(
                    {"n": n, "check": "hertz-structure"},
                    violations,
                    detail={"critical_digraphs": checked},
                )
            )
        violations, checked = _blowup_converse(
            converse_hertz(min(max_n, 4)),
            max_n,
            inv,
            lambda g: invariant_value(metric_profile(g), inv),
        )
        cells.append(
            violations_cell(
                {"check": "blow-up-converse", "max_vertices": max_n},
                violations,
                detail={"blow_ups": checked},
            )
        )
        return cells

    return run


def _thm1_classify(hertz: Digraph, k: int) -> bool:
    return recognize_hertz_family(hertz).transitive_tournament == k


def _thm2_classify(hertz: Digraph, k: int) -> bool:
    ki = recognize_hertz_family(hertz).gamma_ki
    return ki is not None and ki[0] == k


def _thm3_classify(hertz: Digraph, k: int) -> bool:
    return recognize_hertz_family(hertz).gamma_ki == (k, 1)


def _thm4_classify(hertz: Digraph, k: int) -> bool:
    sizes = recognize_hertz_family(hertz).partition_sizes
    return sizes is not None and sum(sizes) == k


def _hertz_gamma_k(budget: int) -> list[Digraph]:
    return [build_family(GammaK(k)) for k in range(2, budget + 1)]


def _hertz_gamma_ki(budget: int) -> list[Digraph]:
    return [
        build_family(GammaKI(k, i))
        for k in range(2, budget + 1)
        for i in range(1, k)
    ]


def _hertz_gamma_k1(budget: int) -> list[Digraph]:
    return [build_family(GammaKI(k, 1)) for k in range(2, budget + 1)]


def _hertz_partitions(budget: int) -> list[Digraph]:
    return [
        build_family(GammaPartition(sizes))
        for k in range(2, budget + 1)
        for sizes in _compositions_min2(k)
    ]


def _scn_thm1(max_n: int, workers: int | None) -> list:
    return _theorem_scenario(Invariant.D, "d", _thm1_classify, _hertz_gamma_k)(
        max_n, workers
    )


def _scn_thm2(max_n: int, workers: int | None) -> list:
    return _theorem_scenario(Invariant.DM, "dm", _thm2_classify, _hertz_gamma_ki)(
        max_n, workers
    )


def _scn_thm3(max_n: int, workers: int | None) -> list:
    return _theorem_scenario(Invariant.R, "r", _thm3_classify, _hertz_gamma_k1)(
        max_n, workers
    )


def _scn_thm4(max_n: int, workers: int | None) -> list:
    cells = _theorem_scenario(
        Invariant.RM, "rm", _thm4_classify, _hertz_partitions
    )(max_n, workers)
    # the bare-vertex family on its own (not just as blow-up blocks)
    violations = 0
    for k in range(2, 6):
        g = build_family(GammaK0(k))
        if not (metric_profile(g).r_m.is_infinite and is_critical(g, Invariant.RM).critical):
            violations += 1
    cells.append(
        violations_cell({"check": "gamma_k0-family", "k_range": "2..5"}, violations)
    )
    return cells


# ---------------------------------------------------------------------------
# Extremal arc-count scenarios and maximal-family shape checks


def _scn_thm5(max_n: int, workers: int | None) -> list:
    cells = []
    for n in range(2, max_n + 1):
        for k in range(1, n):
            top, witness = max_arcs_where(n, PredicateDescriptor(radius=k), workers)
            cells.append(
                cell(
                    {"n": n, "k": k},
                    top,
                    formulas.g_max_arcs(n, k),
                    detail={"witness_index": witness.mask},
                )
            )
    return cells


def _scn_thm7(max_n: int, workers: int | None) -> list:
    cells = []
    for n in range(2, max_n + 1):
        for k in range(1, n):
            top, witness = max_arcs_where(
                n, PredicateDescriptor(quasi_diameter=k), workers
            )
            cells.append(
                cell(
                    {"n": n, "k": k},
                    top,
                    formulas.f_max_arcs(n, k),
                    detail={"witness_index": witness.mask},
                )
            )
    return cells


def _scn_thm6(max_n: int, workers: int | None) -> list:
    cells = []
    for n in range(2, max_n + 1):
        cells.append(
            cell(
                {"n": n, "k": 1},
                count_labeled(
                    n,
                    PredicateDescriptor(radius=1, arcs=formulas.g_max_arcs(n, 1)),
                    workers,
                ),
                1,
            )
        )
        if n >= 3:
            tables = metric_tables(n, workers)
            maximal = (tables["r"] == 2) & (
                tables["arcs"] == formulas.g_max_arcs(n, 2)
            )
            uniform = (tables["outdeg_min"] == n - 2) & (
                tables["outdeg_max"] == n - 2
            )
            cells.append(
                violations_cell(
                    {"n": n, "k": 2, "check": "outdegree-characterization"},
                    int((maximal != uniform).sum()),
                    detail={"maximal": int(maximal.sum())},
                )
            )
        for k in range(3, n):
            enum_forms = iso_class_forms(
                n,
                PredicateDescriptor(radius=k, arcs=formulas.g_max_arcs(n, k)),
                workers,
            )
            gen_forms = _generated_radius_forms(n, k)
            cells.append(
                violations_cell(
                    {"n": n, "k": k, "check": "class-set-equality"},
                    len(enum_forms ^ gen_forms),
                    detail={
                        "enumerated_classes": len(enum_forms),
                        "generated_classes": len(gen_forms),
                    },
                )
            )
    return cells


def _scn_thm8(max_n: int, workers: int | None) -> list:
    cells = []
    for n in range(2, max_n + 1):
        cells.append(
            cell(
                {"n": n, "k": 1},
                count_labeled(
                    n,
                    PredicateDescriptor(
                        quasi_diameter=1, arcs=formulas.f_max_arcs(n, 1)
                    ),
                    workers,
                ),
                1,
            )
        )
        if n >= 3:
            violations = 0
            indices = satisfying_indices(
                n,
                PredicateDescriptor(quasi_diameter=2, arcs=formulas.f_max_arcs(n, 2)),
                workers,
            )
            for i in indices:
                g = Digraph(n, i)
                nonadjacent = [
                    (u, v)
                    for u in g.vertices()
                    for v in g.vertices()
                    if u < v and not g.has_arc(u, v) and not g.has_arc(v, u)
                ]
                if len(nonadjacent) != 1:
                    violations += 1
            cells.append(
                violations_cell(
                    {"n": n, "k": 2, "check": "one-missing-pair"},
                    violations,
                    detail={"maximal": len(indices)},
                )
            )
        for k in range(3, n):
            enum_forms = iso_class_forms(
                n,
                PredicateDescriptor(
                    quasi_diameter=k, arcs=formulas.f_max_arcs(n, k)
                ),
                workers,
            )
            gen_forms = _generated_qd_forms(n, k)
            cells.append(
                violations_cell(
                    {"n": n, "k": k, "check": "class-set-equality"},
                    len(enum_forms ^ gen_forms),
                    detail={
                        "enumerated_classes": len(enum_forms),
                        "generated_classes": len(gen_forms),
                    },
                )
            )
    return cells


# ---------------------------------------------------------------------------
# Completion-characterization scenarios (every single-arc completion flips a property)


def _completion_scenario(
    value_key: str,
    hypothesis: Callable[[dict], np.ndarray],
    target_after: Callable[[dict], np.ndarray],
    classify_ok: Callable[[Digraph, int], bool],
    converse_hertz: list,
    becomes_ok: Callable[[Digraph], bool],
) -> Callable[[int, int | None], list]:
    def run(max_n: int, workers: int | None) -> list:
        cells = []
        for n in range(2, max_n + 1):
            tables = metric_tables(n, workers)
            mask = hypothesis(tables) & forall_additions(n, target_after(tables))
            violations = 0
            indices = np.flatnonzero(mask)
            for i in indices:
                cond = condensation(Digraph(n, int(i)))
                if not classify_ok(cond.hertz, cond.k):
                    violations += 1
            cells.append(
                violations_cell(
                    {"n": n, "check": "hertz-structure"},
                    violations,
                    detail={"hypothesis_digraphs": int(len(indices))},
                )
            )
        graphs = [build_family(spec) for spec in converse_hertz]
        violations, checked = _completion_converse(graphs, max_n, becomes_ok)
        cells.append(
            violations_cell(
                {"check": "family-converse", "max_vertices": max_n},
                violations,
                detail={"blow_ups": checked},
            )
        )
        return cells

    return run


def _scn_cor11(max_n: int, workers: int | None) -> list:
    return _completion_scenario(
        "bc",
        lambda t: t["bc"] >= 2,
        lambda t: t["bc"] == 1,
        lambda hertz, k: recognize_hertz_family(hertz).transitive_tournament == 2,
        [GammaK(2)],
        lambda g: bicomponent_count(g) == 1,
    )(max_n, workers)


def _scn_cor32(max_n: int, workers: int | None) -> list:
    return _completion_scenario(
        "r",
        lambda t: t["r"] == INF_CODE,
        lambda t: t["r"] != INF_CODE,
        lambda hertz, k: recognize_hertz_family(hertz).gamma_ki in ((2, 1), (3, 1)),
        [GammaKI(2, 1), GammaKI(3, 1)],
        lambda g: metric_profile(g).r.is_finite,
    )(max_n, workers)


def _scn_cor42(max_n: int, workers: int | None) -> list:
    def classify(hertz: Digraph, k: int) -> bool:
        sizes = recognize_hertz_family(hertz).partition_sizes
        return k % 2 == 0 and sizes == (2,) * (k // 2)

    return _completion_scenario(
        "rm",
        lambda t: t["rm"] == INF_CODE,
        lambda t: t["rm"] != INF_CODE,
        classify,
        [GammaPartition((2,)), GammaPartition((2, 2))],
        lambda g: metric_profile(g).r_m.is_finite,
    )(max_n, workers)


# ---------------------------------------------------------------------------
# Counting scenarios (labeled counts and isomorphism-class counts)


_COUNT_PREDICATES = {
    Invariant.D: lambda k: PredicateDescriptor(
        diameter=INFINITY, critical=Invariant.D, bicomponents=k
    ),
    Invariant.DM: lambda k: PredicateDescriptor(
        quasi_diameter=INFINITY, critical=Invariant.DM, bicomponents=k
    ),
    Invariant.R: lambda k: PredicateDescriptor(
        radius=INFINITY, critical=Invariant.R, bicomponents=k
    ),
    Invariant.RM: lambda k: PredicateDescriptor(
        quasi_radius=INFINITY, critical=Invariant.RM, bicomponents=k
    ),
}


def _count_scenario(
    inv: Invariant, formula: Callable[[int, int], int], mode: str
) -> Callable[[int, int | None], list]:
    def run(max_n: int, workers: int | None) -> list:
        cells = []
        for n in range(2, max_n + 1):
            for k in range(2, n + 1):
                pred = _COUNT_PREDICATES[inv](k)
                if mode == "labeled":
                    value = count_labeled(n, pred, workers)
                else:
                    value = len(iso_class_forms(n, pred, workers))
                cells.append(cell({"n": n, "k": k}, value, formula(n, k)))
        return cells

    return run


# ---------------------------------------------------------------------------
# Bound scenarios with attaining blow-up witnesses


def _best_blowup_arcs(hertz_graphs: list[Digraph], n: int) -> int:
    best = -1
    for hertz in hertz_graphs:
        if hertz.n > n:
            continue
        for sizes in _compositions(n, hertz.n):
            best = max(best, blow_up(hertz, sizes).arc_count)
    return best


def _bound_scenario(
    pred_for: Callable[[int], PredicateDescriptor],
    formula: Callable[[int, int], int],
    witnesses_for: Callable[[int], list[Digraph]],
    k_range: Callable[[int], range],
) -> Callable[[int, int | None], list]:
    def run(max_n: int, workers: int | None) -> list:
        cells = []
        for n in range(2, max_n + 1):
            for k in k_range(n):
                expected = formula(n, k)
                top, witness = max_arcs_where(n, pred_for(k), workers)
                attained = _best_blowup_arcs(witnesses_for(k), n)
                cells.append(
                    cell(
                        {"n": n, "k": k},
                        top,
                        expected,
                        detail={
                            "blow_up_best": attained,
                            "witness_index": witness.mask,
                        },
                    )
                )
                if attained != expected:
                    cells.append(
                        violations_cell(
                            {"n": n, "k": k, "check": "blow-up-attains"}, 1
                        )
                    )
        return cells

    return run


def _scn_cor12(max_n: int, workers: int | None) -> list:
    return _bound_scenario(
        lambda k: PredicateDescriptor(diameter=INFINITY, bicomponents=k),
        formulas.cor12_bound,
        lambda k: [build_family(GammaK(k))],
        lambda n: range(2, n + 1),
    )(max_n, workers)


def _scn_cor21(max_n: int, workers: int | None) -> list:
    return _bound_scenario(
        lambda k: PredicateDescriptor(quasi_diameter=INFINITY, bicomponents=k),
        lambda n, k: formulas.cor12_bound(n, k) - 1,
        lambda k: [build_family(GammaKI(k, i)) for i in range(1, k)],
        lambda n: range(3, n + 1),
    )(max_n, workers)


def _unconstrained_bound_scenario(
    pred: PredicateDescriptor,
) -> Callable[[int, int | None], list]:
    """Max arcs over all n-vertex digraphs with one infinite invariant."""

    def run(max_n: int, workers: int | None) -> list:
        cells = []
        for n in range(2, max_n + 1):
            expected = formulas.cor33_bound(n)
            top, witness = max_arcs_where(n, pred, workers)
            attained = _best_blowup_arcs([build_family(GammaKI(2, 1))], n)
            cells.append(
                cell(
                    {"n": n},
                    top,
                    expected,
                    detail={"blow_up_best": attained, "witness_index": witness.mask},
                )
            )
            if attained != expected:
                cells.append(violations_cell({"n": n, "check": "blow-up-attains"}, 1))
        return cells

    return run


def _scn_cor22(max_n: int, workers: int | None) -> list:
    return _unconstrained_bound_scenario(
        PredicateDescriptor(quasi_diameter=INFINITY)
    )(max_n, workers)


def _scn_cor31(max_n: int, workers: int | None) -> list:
    return _bound_scenario(
        lambda k: PredicateDescriptor(radius=INFINITY, bicomponents=k),
        formulas.lambda_bound,
        lambda k: [build_family(GammaKI(k, 1))],
        lambda n: range(2, n + 1),
    )(max_n, workers)


def _scn_cor33(max_n: int, workers: int | None) -> list:
    return _unconstrained_bound_scenario(
        PredicateDescriptor(radius=INFINITY)
    )(max_n, workers)


def _scn_cor41(max_n: int, workers: int | None) -> list:
    return _bound_scenario(
        lambda k: PredicateDescriptor(quasi_radius=INFINITY, bicomponents=k),
        formulas.cor41_bound,
        lambda k: [
            build_family(GammaPartition(sizes)) for sizes in _compositions_min2(k)
        ],
        lambda n: range(2, n + 1),
    )(max_n, workers)


# ---------------------------------------------------------------------------
# Maximal-family counting scenarios


def _scn_cor51(max_n: int, workers: int | None) -> list:
    cells = []
    for n in range(4, max_n + 1):
        for k in range(3, n):
            statement = formulas.max_radius_iso(n, k)
            generated = len(_generated_radius_forms(n, k))
            cells.append(cell({"n": n, "k": k, "src": "generator"}, generated, statement))
            if n <= 5:
                enumerated = len(
                    iso_class_forms(
                        n,
                        PredicateDescriptor(
                            radius=k, arcs=formulas.g_max_arcs(n, k)
                        ),
                        workers,
                    )
                )
                cells.append(
                    cell({"n": n, "k": k, "src": "enumeration"}, enumerated, statement)
                )
            proof_line = formulas.max_radius_iso_proof_line(n, k)
            if proof_line != statement:
                cells.append(
                    cell(
                        {"n": n, "k": k, "src": "proof-line-errata"},
                        statement,
                        proof_line,
                        errata=True,
                    )
                )
    return cells


def _scn_cor52(max_n: int, workers: int | None) -> list:
    cells = []
    for n in range(2, max_n + 1):
        for k in range(1, n):
            count = count_labeled(
                n,
                PredicateDescriptor(radius=k, arcs=formulas.g_max_arcs(n, k)),
                workers,
            )
            cells.append(cell({"n": n, "k": k}, count, formulas.chi(n, k), errata=True))
    return cells


def _scn_cor61(max_n: int, workers: int | None) -> list:
    cells = []
    for n in range(2, max_n + 1):
        for k in range(1, n):
            classes = len(
                iso_class_forms(
                    n,
                    PredicateDescriptor(
                        quasi_diameter=k, arcs=formulas.f_max_arcs(n, k)
                    ),
                    workers,
                )
            )
            cells.append(cell({"n": n, "k": k}, classes, formulas.nu_dm(n, k)))
    return cells


def _scn_cor62(max_n: int, workers: int | None) -> list:
    cells = []
    for n in range(2, max_n + 1):
        for k in range(1, n):
            count = count_labeled(
                n,
                PredicateDescriptor(
                    quasi_diameter=k, arcs=formulas.f_max_arcs(n, k)
                ),
                workers,
            )
            cells.append(cell({"n": n, "k": k}, count, formulas.mu_dm(n, k), errata=True))
    for n in range(4, 21):
        cells.append(
            cell(
                {"n": n, "k": 3, "check": "closed-form-vs-proof-sum"},
                formulas.mu_dm_proof_sum(n),
                formulas.mu_dm(n, 3),
                errata=True,
            )
        )
    return cells


# ---------------------------------------------------------------------------
# Envelope and degree-bound scenarios


def _scn_lemma9(max_n: int, workers: int | None) -> list:
    cells = []
    for k in range(3, 31):
        violations = 0
        checked = 0
        bound_base = (k * k - k - 2) // 2
        for n in range(k + 1, max_n + 1):
            bound = n * (n - k) + bound_base
            for t in range(1, k):
                for s in range(0, n - k):
                    value = formulas.F_lemma8(n, k, s, t)
                    checked += 1
                    if value > bound:
                        violations += 1
                    elif value == bound and (t, s) != (1, 0):
                        violations += 1
                    elif value < bound and (t, s) == (1, 0):
                        violations += 1
        cells.append(
            violations_cell({"k": k}, violations, detail={"checked": checked})
        )
    return cells


def _scn_lemma10(max_n: int, workers: int | None) -> list:
    cells = []
    for n in range(2, max_n + 1):
        tables = metric_tables(n, workers)
        violations = int((~tables["lemma10_ok"]).sum())
        cells.append(
            violations_cell(
                {"n": n}, violations, detail={"digraphs": digraph_count(n)}
            )
        )
    return cells


def _scn_lemma11(max_n: int, workers: int | None) -> list:
    cells = []
    for n in range(4, max_n + 1):
        k = n - 1
        tables = metric_tables(n, workers)
        bound = formulas.lemma11_bound(n, k)
        violations = int(((tables["dm"] == k) & (tables["arcs"] > bound)).sum())
        cells.append(
            violations_cell({"n": n, "k": k}, violations, detail={"bound": bound})
        )
    return cells


# ---------------------------------------------------------------------------
# Registry


_ENUM_DEFAULT = 5
_ENUM_CAP = 5

SCENARIOS: dict[str, tuple[Callable[[int, int | None], list], int, int]] = {
    "thm1": (_scn_thm1, _ENUM_DEFAULT, _ENUM_CAP),
    "thm2": (_scn_thm2, _ENUM_DEFAULT, _ENUM_CAP),
    "thm3": (_scn_thm3, _ENUM_DEFAULT, _ENUM_CAP),
    "thm4": (_scn_thm4, _ENUM_DEFAULT, _ENUM_CAP),
    "thm5": (_scn_thm5, _ENUM_DEFAULT, _ENUM_CAP),
    "thm6": (_scn_thm6, _ENUM_DEFAULT, _ENUM_CAP),
    "thm7": (_scn_thm7, _ENUM_DEFAULT, _ENUM_CAP),
    "thm8": (_scn_thm8, _ENUM_DEFAULT, _ENUM_CAP),
    "cor11": (_scn_cor11, _ENUM_DEFAULT, _ENUM_CAP),
    "cor12": (_scn_cor12, _ENUM_DEFAULT, _ENUM_CAP),
    "cor13": (_count_scenario(Invariant.D, formulas.beta, "iso"), _ENUM_DEFAULT, _ENUM_CAP),
    "cor14": (_count_scenario(Invariant.D, formulas.labeled_d_critical, "labeled"), _ENUM_DEFAULT, _ENUM_CAP),
    "cor21": (_scn_cor21, _ENUM_DEFAULT, _ENUM_CAP),
    "cor22": (_scn_cor22, _ENUM_DEFAULT, _ENUM_CAP),
    "cor23": (_count_scenario(Invariant.DM, formulas.q, "iso"), _ENUM_DEFAULT, _ENUM_CAP),
    "cor24": (_count_scenario(Invariant.DM, formulas.q_star, "labeled"), _ENUM_DEFAULT, _ENUM_CAP),
    "cor31": (_scn_cor31, _ENUM_DEFAULT, _ENUM_CAP),
    "cor32": (_scn_cor32, _ENUM_DEFAULT, _ENUM_CAP),
    "cor33": (_scn_cor33, _ENUM_DEFAULT, _ENUM_CAP),
    "cor34": (_count_scenario(Invariant.R, formulas.nu_r, "iso"), _ENUM_DEFAULT, _ENUM_CAP),
    "cor35": (_count_scenario(Invariant.R, formulas.nu_r_star, "labeled"), _ENUM_DEFAULT, _ENUM_CAP),
    "cor41": (_scn_cor41, _ENUM_DEFAULT, _ENUM_CAP),
    "cor42": (_scn_cor42, _ENUM_DEFAULT, _ENUM_CAP),
    "cor43": (_count_scenario(Invariant.RM, formulas.pi_rm, "iso"), _ENUM_DEFAULT, _ENUM_CAP),
    "cor44": (_count_scenario(Invariant.RM, formulas.xi_rm, "labeled"), _ENUM_DEFAULT, _ENUM_CAP),
    "cor51": (_scn_cor51, 8, 9),
    "cor52": (_scn_cor52, _ENUM_DEFAULT, _ENUM_CAP),
    "cor61": (_scn_cor61, _ENUM_DEFAULT, _ENUM_CAP),
    "cor62": (_scn_cor62, _ENUM_DEFAULT, _ENUM_CAP),
    "lemma9": (_scn_lemma9, 60, 200),
    "lemma10": (_scn_lemma10, _ENUM_DEFAULT, _ENUM_CAP),
    "lemma11": (_scn_lemma11, _ENUM_DEFAULT, _ENUM_CAP),
}


def list_scenarios() -> list[str]:
    return list(SCENARIOS)


def run_scenario(
    name: str, max_n: int | None = None, workers: int | None = None
) -> VerificationReport:
    """Run one named scenario and return its report."""
    try:
        fn, default_n, cap = SCENARIOS[name]
    except KeyError:
        raise UnknownScenario(
            f"unknown scenario {name!r}; known: {', '.join(SCENARIOS)}"
        ) from None
    if max_n is None:
        max_n = default_n
    if max_n > cap:
        raise TooLarge(f"scenario {name!r} is capped at max_n <= {cap}, got {max_n}")
    start = time.perf_counter()
    cells = fn(max_n, workers)
    return VerificationReport(
        scenario=name,
        max_n=max_n,
        cells=cells,
        wall_time_seconds=time.perf_counter() - start,
    )
