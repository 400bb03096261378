"""Exhaustive enumeration oracle and named verification scenarios."""

from .canonical import CANONICAL_CAP, canonical_form
from .predicates import PredicateDescriptor
from .report import ERRATA, MATCH, MISMATCH, ScenarioCell, VerificationReport
from .scan import (
    count_labeled,
    enumerate_digraphs,
    iso_class_count,
    iso_class_forms,
    max_arcs_where,
    satisfying_indices,
)
from .scenarios import ERRATA_SUSPECT_SCENARIOS, SCENARIOS, list_scenarios, run_scenario
from .tables import ENUM_CAP, clear_caches, criticality_tables, digraph_count, metric_tables

__all__ = [
    "CANONICAL_CAP",
    "ENUM_CAP",
    "ERRATA",
    "ERRATA_SUSPECT_SCENARIOS",
    "MATCH",
    "MISMATCH",
    "PredicateDescriptor",
    "SCENARIOS",
    "ScenarioCell",
    "VerificationReport",
    "canonical_form",
    "clear_caches",
    "count_labeled",
    "criticality_tables",
    "digraph_count",
    "enumerate_digraphs",
    "iso_class_count",
    "iso_class_forms",
    "list_scenarios",
    "max_arcs_where",
    "metric_tables",
    "run_scenario",
    "satisfying_indices",
]
