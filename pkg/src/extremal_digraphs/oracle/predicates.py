"""Conjunctive predicates over digraph invariants.

A PredicateDescriptor is a conjunction of atoms (metric invariant
values, bicomponent count, arc count, criticality, biconnectivity,
transitivity, and Hertz-graph family membership).  Evaluation is a pure
function of the digraph; the oracle scan additionally compiles the
atoms to table lookups, with the Hertz atom applied as a per-survivor
filter.
"""

from __future__ import annotations

from dataclasses import dataclass

from ..criticality import Invariant, invariant_value, is_critical
from ..digraph import Digraph, Distance, condensation, is_transitive, metric_profile
from ..errors import DomainError
from ..families import FamilySpec, build_family
from .canonical import canonical_form

__all__ = ["PredicateDescriptor", "encode_distance"]

INF_CODE = 255


def encode_distance(value: int | Distance) -> int:
    """Encode a distance atom as the scan engine's uint8 code."""
    if isinstance(value, Distance):
        if value.is_infinite:
            return INF_CODE
        value = value.steps
    if not isinstance(value, int) or isinstance(value, bool):
        raise DomainError(f"distance atom must be an int or Distance, got {value!r}")
    if not 0 <= value < INF_CODE:
        raise DomainError(f"distance atom out of range: {value}")
    return value


@dataclass(frozen=True)
class PredicateDescriptor:
    """Conjunction of invariant atoms; None atoms are unconstrained."""

    diameter: int | Distance | None = None
    quasi_diameter: int | Distance | None = None
    radius: int | Distance | None = None
    quasi_radius: int | Distance | None = None
    bicomponents: int | None = None
    arcs: int | None = None
    critical: Invariant | None = None
    biconnected: bool | None = None
    transitive: bool | None = None
    hertz_isomorphic_to: FamilySpec | None = None

    def matches(self, g: Digraph) -> bool:
        """Evaluate the conjunction on one digraph."""
        profile = None
        for atom, inv in (
            (self.diameter, Invariant.D),
            (self.quasi_diameter, Invariant.DM),
            (self.radius, Invariant.R),
            (self.quasi_radius, Invariant.RM),
        ):
            if atom is None:
                continue
            profile = profile or metric_profile(g)
            value = invariant_value(profile, inv)
            code = INF_CODE if value.is_infinite else value.steps
            if code != encode_distance(atom):
                return False
        if self.arcs is not None and g.arc_count != self.arcs:
            return False
        cond = None
        if self.bicomponents is not None or self.biconnected is not None:
            cond = condensation(g)
        if self.bicomponents is not None and cond.k != self.bicomponents:
            return False
        if self.biconnected is not None and (cond.k == 1) != self.biconnected:
            return False
        if self.transitive is not None and is_transitive(g) != self.transitive:
            return False
        if self.critical is not None and not is_critical(g, self.critical).critical:
            return False
        if self.hertz_isomorphic_to is not None:
            hertz = (cond or condensation(g)).hertz
            target = build_family(self.hertz_isomorphic_to)
            if hertz.n != target.n:
                return False
            if canonical_form(hertz) != canonical_form(target):
                return False
        return True

    @property
    def needs_graph_filter(self) -> bool:
        """True when an atom cannot be answered from the scan tables."""
        return self.hertz_isomorphic_to is not None
