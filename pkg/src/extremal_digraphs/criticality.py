"""Criticality under single-arc addition, and maximality by arc count.

A digraph is i-critical (i one of d, d_m, r, r_m) when adding any missing
arc either merges bicomponents or strictly decreases invariant i; an
infinite-to-finite transition counts as a strict decrease.  A digraph is
maximal by i when it attains the maximum arc count among n-vertex
digraphs sharing its (finite) value of i.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

from . import formulas
from .digraph import (
    Digraph,
    Distance,
    MetricProfile,
    _raw_invariants,
    _wrap,
    arc_bit,
    bicomponent_count,
    metric_profile,
)
from .errors import ArcPresent, InfiniteInvariant, LoopArc, OutOfRange, UnsupportedInvariant

__all__ = [
    "Invariant",
    "ArcEffect",
    "CriticalityReport",
    "missing_arcs",
    "arc_effect",
    "is_critical",
    "is_maximal",
]


class Invariant(Enum):
    """The four metric functionals."""

    D = "d"
    DM = "d_m"
    R = "r"
    RM = "r_m"

    @property
    def label(self) -> str:
        return self.value


_RAW_SLOT = {Invariant.D: 0, Invariant.DM: 1, Invariant.R: 2, Invariant.RM: 3}


def invariant_value(profile: MetricProfile, inv: Invariant) -> Distance:
    """Pick one of d, d_m, r, r_m out of a metric profile."""
    return {
        Invariant.D: profile.d,
        Invariant.DM: profile.d_m,
        Invariant.R: profile.r,
        Invariant.RM: profile.r_m,
    }[inv]


@dataclass(frozen=True)
class ArcEffect:
    """What adding one missing arc does to bicomponents and an invariant."""

    arc: tuple[int, int]
    bicomponents_before: int
    bicomponents_after: int
    invariant_before: Distance
    invariant_after: Distance
    qualifies: bool


@dataclass(frozen=True)
class CriticalityReport:
    """Verdict plus the per-arc evidence behind it."""

    invariant: Invariant
    critical: bool
    effects: tuple[ArcEffect, ...]

    def __bool__(self) -> bool:
        return self.critical

    @property
    def failing_arcs(self) -> tuple[tuple[int, int], ...]:
        return tuple(e.arc for e in self.effects if not e.qualifies)


def missing_arcs(g: Digraph) -> tuple[tuple[int, int], ...]:
    """All ordered pairs absent from g, in row-major order."""
    n = g.n
    out = []
    for u in range(1, n + 1):
        for v in range(1, n + 1):
            if u != v and not g.mask >> arc_bit(n, u, v) & 1:
                out.append((u, v))
    return tuple(out)


def _effect_raw(g: Digraph, before_bc: int, before_val: int | None,
                arc: tuple[int, int], inv: Invariant) -> ArcEffect:
    u, v = arc
    bit = 1 << arc_bit(g.n, u, v)
    g2 = Digraph(g.n, g.mask | bit)
    after_bc = bicomponent_count(g2)
    after_val = _raw_invariants(g2)[_RAW_SLOT[inv]]
    decreased = after_val is not None and (before_val is None or after_val < before_val)
    qualifies = after_bc < before_bc or decreased
    return ArcEffect(
        arc=arc,
        bicomponents_before=before_bc,
        bicomponents_after=after_bc,
        invariant_before=_wrap(before_val),
        invariant_after=_wrap(after_val),
        qualifies=qualifies,
    )


def arc_effect(g: Digraph, arc: tuple[int, int], inv: Invariant) -> ArcEffect:
    """Effect of adding one missing arc on bicomponent count and invariant."""
    u, v = arc
    if not (1 <= u <= g.n and 1 <= v <= g.n):
        raise OutOfRange(f"arc ({u},{v}) has an endpoint outside 1..{g.n}")
    if u == v:
        raise LoopArc(f"loop arc ({u},{v}) is not allowed")
    if g.mask >> arc_bit(g.n, u, v) & 1:
        raise ArcPresent(f"arc ({u},{v}) is already present")
    before_bc = bicomponent_count(g)
    before_val = _raw_invariants(g)[_RAW_SLOT[inv]]
    return _effect_raw(g, before_bc, before_val, arc, inv)


def is_critical(g: Digraph, inv: Invariant) -> CriticalityReport:
    """True iff every missing arc qualifies (vacuously true with none)."""
    before_bc = bicomponent_count(g)
    before_val = _raw_invariants(g)[_RAW_SLOT[inv]]
    effects = tuple(
        _effect_raw(g, before_bc, before_val, arc, inv)
        for arc in missing_arcs(g)
    )
    return CriticalityReport(
        invariant=inv,
        critical=all(e.qualifies for e in effects),
        effects=effects,
    )


def is_maximal(g: Digraph, inv: Invariant, max_arcs_source: str = "closed-form") -> bool:
    """Does g attain the maximum arc count for its invariant value?

    Supported for the radius (closed form g(n,k)) and the
    quasi-diameter (closed form f(n,k)); with
    max_arcs_source="oracle" the maximum is taken from exhaustive
    enumeration instead (n <= 5).
    """
    if inv is Invariant.D:
        raise UnsupportedInvariant(
            "maximality by d is outside this library's constructive scope"
        )
    if inv is Invariant.RM:
        raise UnsupportedInvariant("no maximality theory for r_m is available")
    profile = metric_profile(g)
    value = invariant_value(profile, inv)
    if value.is_infinite:
        raise InfiniteInvariant(f"{inv.label} is infinite; maximality undefined")
    k = value.steps
    if max_arcs_source == "closed-form":
        if inv is Invariant.R:
            bound = formulas.g_max_arcs(g.n, k)
        else:
            bound = formulas.f_max_arcs(g.n, k)
    elif max_arcs_source == "oracle":
        from .oracle import PredicateDescriptor, max_arcs_where

        pred = (
            PredicateDescriptor(radius=k)
            if inv is Invariant.R
            else PredicateDescriptor(quasi_diameter=k)
        )
        bound, _ = max_arcs_where(g.n, pred)
    else:
        raise ValueError(f"unknown max_arcs_source {max_arcs_source!r}")
    return g.arc_count == bound
