# faht/metrics/__init__.py
"""Scalar merit functions: parity, entropy, gains, Hoeffding bound."""

from .measures import (
    FG_ZERO_TOLERANCE,
    Branch,
    ClassDistribution,
    FairnessCounts,
    PartitionStats,
    class_range,
    discrimination_of,
    entropy,
    fair_information_gain,
    fairness_gain,
    hoeffding_bound,
    information_gain,
    kamiran_merit,
    parity_standard_error,
    sensitive_information_gain,
    statistical_parity,
)

__all__ = [
    "FG_ZERO_TOLERANCE",
    "Branch",
    "ClassDistribution",
    "FairnessCounts",
    "PartitionStats",
    "class_range",
    "discrimination_of",
    "entropy",
    "fair_information_gain",
    "fairness_gain",
    "hoeffding_bound",
    "information_gain",
    "kamiran_merit",
    "parity_standard_error",
    "sensitive_information_gain",
    "statistical_parity",
]
