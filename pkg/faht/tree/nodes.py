# faht/tree/nodes.py
"""Tree nodes, routing and leaf prediction."""

from dataclasses import dataclass
from typing import Dict, Optional, Union

from faht.core.schema import MISSING, AttributeKind, StreamSchema, is_missing
from faht.metrics.measures import ClassDistribution
from faht.stats.observers import LeafStatistics

LEFT = "left"
RIGHT = "right"


@dataclass(frozen=True)
class Prediction:
    label: str
    score: float  # Laplace-smoothed probability of the positive class


def predict_from(distribution: Optional[ClassDistribution], schema: StreamSchema) -> Prediction:
    """Majority class (ties go to the negative class) and smoothed positive fraction."""
    if distribution is None or distribution.total <= 0:
        return Prediction(schema.negative_class, 0.5)
    positive = distribution.get(schema.positive_class)
    negative = distribution.get(schema.negative_class)
    label = schema.positive_class if positive > negative else schema.negative_class
    score = (positive + 1.0) / (distribution.total + len(schema.classes))
    return Prediction(label, score)


class LeafNode:
    """A leaf collecting statistics until it splits."""

    is_leaf = True

    def __init__(self, schema: StreamSchema):
        self.stats = LeafStatistics(schema)
        self.n_since_last_attempt = 0

    def prediction_distribution(self) -> Optional[ClassDistribution]:
        # a leaf created by a split starts empty
        return self.stats.distribution if self.stats.n > 0 else None


class SplitNode:
    """An internal node testing one attribute."""

    is_leaf = False

    def __init__(
        self,
        attribute_index: int,
        attribute_name: str,
        kind: AttributeKind,
        children: Dict[str, "Node"],
        branch_weights: Dict[str, float],
        threshold: Optional[float] = None,
    ):
        if len(children) < 2:
            raise ValueError("A split node needs at least two children")
        self.attribute_index = attribute_index
        self.attribute_name = attribute_name
        self.kind = kind
        self.children = children
        self.branch_weights = branch_weights
        self.threshold = threshold
        # first key wins ties, keys are in domain order
        self.heaviest = max(children, key=lambda k: branch_weights.get(k, 0.0))

    def child_key(self, value) -> str:
        if self.kind is AttributeKind.NUMERIC:
            if is_missing(value) or value <= self.threshold:
                return LEFT
            return RIGHT
        if value is None:
            value = MISSING
        if value in self.children:
            return value
        return self.heaviest

    def route(self, value) -> "Node":
        return self.children[self.child_key(value)]


Node = Union[LeafNode, SplitNode]
