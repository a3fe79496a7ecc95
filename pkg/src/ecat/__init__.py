"""Finite enriched-category engine.

Everything is an explicit finite table: categories, monoidal structure,
module actions, enriched categories. Every axiom is checked by exhausting
its instances, and every universal property is decided by brute-force
search under an explicit budget.
"""

from ecat.report import BudgetExceeded, StructureError, ValidationReport, Violation

__all__ = [
    "BudgetExceeded",
    "StructureError",
    "ValidationReport",
    "Violation",
]
