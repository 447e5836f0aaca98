# faht/ensemble/window.py
"""Queue of window-trained trees voting by unweighted majority.

Each tumbling window of ``window_size`` instances founds one tree. Trees in
the queue keep learning from every later instance; the oldest is evicted
once ``capacity`` trees are queued.
"""

import logging
from collections import deque
from dataclasses import dataclass
from typing import Deque, List, Optional

from faht.core.learner_config import LearnerConfig
from faht.core.schema import Instance, StreamSchema
from faht.tree.hoeffding import FahtTree
from faht.tree.nodes import Prediction

logger = logging.getLogger("faht_ensemble")


@dataclass(frozen=True)
class EnsemblePrediction:
    label: str
    vote_fraction: float  # share of votes won by ``label``
    score: float  # share of votes for the positive class


class WindowEnsemble:
    def __init__(
        self,
        schema: StreamSchema,
        config: Optional[LearnerConfig] = None,
        window_size: Optional[int] = 1000,
        capacity: int = 5,
    ):
        if window_size is not None and window_size < 1:
            raise ValueError(f"window_size must be >= 1, got {window_size}")
        if capacity < 1:
            raise ValueError(f"capacity must be >= 1, got {capacity}")
        self.schema = schema
        self.base_config = config or LearnerConfig()
        self.window_size = window_size
        self.capacity = capacity
        self.members: Deque[FahtTree] = deque(maxlen=capacity)
        # founder of the current window; None until the window sees its first instance
        self.pending: Optional[FahtTree] = FahtTree(schema, self.base_config)
        self.buffered = 0
        self.windows_completed = 0

    def voters(self) -> List[FahtTree]:
        # before the first window closes the founding tree stands in
        if self.members:
            return list(self.members)
        return [self.pending] if self.pending is not None else []

    def predict(self, instance: Instance) -> EnsemblePrediction:
        votes = [tree.predict(instance).label for tree in self.voters()]
        positive = self.schema.positive_class
        negative = self.schema.negative_class
        if not votes:
            return EnsemblePrediction(negative, 0.5, 0.5)
        n_pos = sum(1 for v in votes if v == positive)
        n_neg = len(votes) - n_pos
        label = positive if n_pos > n_neg else negative
        won = n_pos if label == positive else n_neg
        return EnsemblePrediction(label, won / len(votes), n_pos / len(votes))

    def train(self, instance: Instance) -> None:
        for tree in self.members:
            tree.train(instance)
        if self.pending is None:
            self.pending = FahtTree(self.schema, self.base_config)
        self.pending.train(instance)
        self.buffered += 1
        if self.window_size is not None and self.buffered >= self.window_size:
            self._close_window()

    def _close_window(self) -> None:
        if len(self.members) == self.capacity:
            logger.debug(f"Evicting oldest member at window {self.windows_completed + 1}")
        self.members.append(self.pending)
        self.windows_completed += 1
        self.pending = None
        self.buffered = 0

    def process(self, instance: Instance) -> Prediction:
        """Predict, then learn from the labelled instance."""
        prediction = self.predict(instance)
        self.train(instance)
        return Prediction(prediction.label, prediction.score)

    @property
    def node_count(self) -> int:
        pending = self.pending.node_count if self.pending is not None else 0
        return sum(tree.node_count for tree in self.members) + pending

    def __len__(self) -> int:
        return len(self.members)


def ensemble_predict(e: WindowEnsemble, instance: Instance) -> EnsemblePrediction:
    return e.predict(instance)


def ensemble_process(e: WindowEnsemble, instance: Instance) -> Prediction:
    return e.process(instance)
