"""Verification report values and their deterministic serialization."""

from __future__ import annotations

import json
from dataclasses import dataclass, field

__all__ = [
    "MATCH",
    "MISMATCH",
    "ERRATA",
    "ScenarioCell",
    "VerificationReport",
]

MATCH = "match"
MISMATCH = "mismatch"
ERRATA = "formula-errata-suspected"


@dataclass(frozen=True)
class ScenarioCell:
    """One grid cell: oracle truth against a closed form (or zero violations)."""

    params: dict
    oracle_value: object
    formula_value: object
    status: str
    detail: dict | None = None

    def to_dict(self) -> dict:
        out = {
            "params": self.params,
            "oracle_value": self.oracle_value,
            "formula_value": self.formula_value,
            "status": self.status,
        }
        if self.detail is not None:
            out["detail"] = self.detail
        return out


def cell(params: dict, oracle_value, formula_value, errata: bool = False,
         detail: dict | None = None) -> ScenarioCell:
    """Build a cell, deciding the status from the comparison."""
    if oracle_value == formula_value:
        status = MATCH
    else:
        status = ERRATA if errata else MISMATCH
    return ScenarioCell(params, oracle_value, formula_value, status, detail)


def violations_cell(params: dict, violations: int, detail: dict | None = None,
                    errata: bool = False) -> ScenarioCell:
    """A zero-exceptions check: the formula side is always 0."""
    return cell(params, violations, 0, errata=errata, detail=detail)


@dataclass
class VerificationReport:
    """Per-scenario record of oracle values against closed forms."""

    scenario: str
    max_n: int
    cells: list[ScenarioCell] = field(default_factory=list)
    wall_time_seconds: float = 0.0

    @property
    def passed(self) -> bool:
        """True when no cell is a hard mismatch (errata records pass)."""
        return all(c.status != MISMATCH for c in self.cells)

    @property
    def errata(self) -> list[ScenarioCell]:
        return [c for c in self.cells if c.status == ERRATA]

    def canonical_dict(self) -> dict:
        """Deterministic content; wall time deliberately excluded."""
        return {
            "scenario": self.scenario,
            "max_n": self.max_n,
            "cells": [c.to_dict() for c in self.cells],
        }

    def canonical_json(self) -> str:
        return json.dumps(self.canonical_dict(), indent=2, sort_keys=True)

    def summary_lines(self) -> list[str]:
        counts = {MATCH: 0, MISMATCH: 0, ERRATA: 0}
        for c in self.cells:
            counts[c.status] += 1
        verdict = "ok" if self.passed else "MISMATCH"
        lines = [
            f"{self.scenario}: {verdict} "
            f"({counts[MATCH]} match, {counts[MISMATCH]} mismatch, "
            f"{counts[ERRATA]} errata-suspected; {len(self.cells)} cells, "
            f"{self.wall_time_seconds:.2f}s)"
        ]
        for c in self.cells:
            if c.status != MATCH:
                lines.append(
                    f"  {c.status}: {c.params} oracle={c.oracle_value} "
                    f"formula={c.formula_value}"
                )
        return lines
