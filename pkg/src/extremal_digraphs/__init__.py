"""Critical and maximal digraphs under the metric functionals d, d_m, r, r_m.

The library computes shortest-path metrics and strong-component
condensations of loop-free digraphs, decides criticality under
single-arc addition for each of the four functionals, constructs and
recognizes the canonical extremal families, evaluates the exact
counting formulas and arc bounds, and verifies all of it against
exhaustive enumeration of small labeled digraphs.
"""

from .criticality import (
    ArcEffect,
    CriticalityReport,
    Invariant,
    arc_effect,
    invariant_value,
    is_critical,
    is_maximal,
    missing_arcs,
)
from .digraph import (
    INFINITY,
    Condensation,
    Digraph,
    Distance,
    MetricProfile,
    StructureFlags,
    all_pairs_distances,
    centers_and_quasicenters,
    condensation,
    from_arc_list,
    metric_profile,
    reverse,
    structure_flags,
    transitive_closure,
)
from .families import (
    D4,
    BlowUp,
    FamilySpec,
    GammaK,
    GammaK0,
    GammaKI,
    GammaPartition,
    HertzClassification,
    MaximalQD3,
    MaximalRadius,
    ReversedMaximalRadius,
    blow_up,
    build_family,
    maximal_quasidiameter_digraph,
    maximal_radius_digraph,
    recognize_hertz_family,
)

__all__ = [
    "ArcEffect",
    "BlowUp",
    "Condensation",
    "CriticalityReport",
    "D4",
    "Digraph",
    "Distance",
    "FamilySpec",
    "GammaK",
    "GammaK0",
    "GammaKI",
    "GammaPartition",
    "HertzClassification",
    "INFINITY",
    "Invariant",
    "MaximalQD3",
    "MaximalRadius",
    "MetricProfile",
    "ReversedMaximalRadius",
    "StructureFlags",
    "all_pairs_distances",
    "arc_effect",
    "blow_up",
    "build_family",
    "centers_and_quasicenters",
    "condensation",
    "from_arc_list",
    "invariant_value",
    "is_critical",
    "is_maximal",
    "maximal_quasidiameter_digraph",
    "maximal_radius_digraph",
    "metric_profile",
    "missing_arcs",
    "recognize_hertz_family",
    "reverse",
    "structure_flags",
    "transitive_closure",
]

__version__ = "0.1.0"
