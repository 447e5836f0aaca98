# faht/stats/__init__.py
"""Incremental per-leaf sufficient statistics."""

from .gaussian import GaussianEstimator
from .observers import (
    LeafStatistics,
    NominalAttributeStats,
    NumericAttributeStats,
    SplitCandidate,
    batch_equivalence_oracle,
    candidate_splits,
    observe,
)

__all__ = [
    "GaussianEstimator",
    "LeafStatistics",
    "NominalAttributeStats",
    "NumericAttributeStats",
    "SplitCandidate",
    "batch_equivalence_oracle",
    "candidate_splits",
    "observe",
]
