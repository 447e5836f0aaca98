# faht/tree/__init__.py
"""Hoeffding tree learner, its nodes and exports."""

from .export import render_text, tree_to_dict, write_tree
from .hoeffding import (
    FahtTree,
    ModelStats,
    SplitDecision,
    SplitEvent,
    attempt_split,
    fg_tolerance,
    model_stats,
    null_merit,
    rank_candidates,
    score_candidate,
)
from .nodes import LeafNode, Prediction, SplitNode, predict_from

__all__ = [
    "FahtTree",
    "LeafNode",
    "ModelStats",
    "Prediction",
    "SplitDecision",
    "SplitEvent",
    "SplitNode",
    "attempt_split",
    "fg_tolerance",
    "model_stats",
    "null_merit",
    "predict_from",
    "rank_candidates",
    "render_text",
    "score_candidate",
    "tree_to_dict",
    "write_tree",
]
