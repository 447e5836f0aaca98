# faht/eval/__init__.py
"""Prequential evaluation and the statistics reported over it."""

from .prequential import (
    MetricSnapshot,
    PrequentialAccumulator,
    PrequentialRecord,
    PrequentialResult,
    landmark_discrimination,
    prequential_run,
)
from .report import CompareReport, compare_report, node_series, percent_change
from .statistics import (
    McNemarResult,
    McNemarTable,
    boundary_correlations,
    correlation_matrix,
    mcnemar,
    mcnemar_table,
    pearson,
)

__all__ = [
    "CompareReport",
    "McNemarResult",
    "McNemarTable",
    "MetricSnapshot",
    "PrequentialAccumulator",
    "PrequentialRecord",
    "PrequentialResult",
    "boundary_correlations",
    "compare_report",
    "correlation_matrix",
    "landmark_discrimination",
    "mcnemar",
    "mcnemar_table",
    "node_series",
    "pearson",
    "percent_change",
    "prequential_run",
]
