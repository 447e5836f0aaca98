# faht/eval/prequential.py
"""Test-then-train harness with landmark and sliding-window metrics."""

import logging
import time
from collections import deque
from dataclasses import asdict, dataclass, field
from typing import Deque, Iterable, List, Optional, Protocol, Sequence, Tuple

from faht.core.errors import PreconditionError
from faht.core.schema import Community, Instance, StreamSchema, community_of
from faht.metrics.measures import FairnessCounts, statistical_parity

logger = logging.getLogger("faht_eval")

DEFAULT_SNAPSHOT_EVERY = 1000
DEFAULT_EVAL_WINDOW = 1000


class Learner(Protocol):
    def predict(self, instance: Instance): ...

    def train(self, instance: Instance) -> None: ...

    @property
    def node_count(self) -> int: ...


@dataclass(frozen=True)
class PrequentialRecord:
    index: int
    true_label: str
    predicted_label: str
    community: Community  # true sensitive group crossed with the true label
    score: float = 0.5

    @property
    def correct(self) -> bool:
        return self.true_label == self.predicted_label


@dataclass(frozen=True)
class MetricSnapshot:
    n: int
    accuracy: float
    discrimination: float
    node_count: int
    window_accuracy: float
    window_discrimination: float

    def __post_init__(self):
        if not 0.0 <= self.accuracy <= 1.0:
            raise ValueError(f"accuracy out of range: {self.accuracy}")

    def to_dict(self):
        return asdict(self)


def predicted_community(record: PrequentialRecord, positive_class: str) -> Community:
    """True sensitive group crossed with the predicted outcome."""
    return Community.of(record.community.deprived, record.predicted_label == positive_class)


class PrequentialAccumulator:
    """Running accuracy and discrimination over predictions.

    Landmark counters cover the whole stream; the sliding view covers the
    most recent ``window`` records and is kept in a bounded deque.
    """

    def __init__(self, positive_class: str, window: int = DEFAULT_EVAL_WINDOW):
        if window < 1:
            raise ValueError(f"eval window must be >= 1, got {window}")
        self.positive_class = positive_class
        self.n = 0
        self.correct = 0
        self.predicted = FairnessCounts()

        self._window: Deque[Tuple[bool, Community]] = deque(maxlen=window)
        self.window_correct = 0
        self.window_predicted = FairnessCounts()

    def add(self, record: PrequentialRecord) -> None:
        community = predicted_community(record, self.positive_class)
        hit = record.correct
        self.n += 1
        self.correct += hit
        self.predicted.add(community)

        if len(self._window) == self._window.maxlen:
            old_hit, old_community = self._window[0]
            self.window_correct -= old_hit
            self.window_predicted.add(old_community, -1)
        self._window.append((hit, community))
        self.window_correct += hit
        self.window_predicted.add(community)

    @property
    def accuracy(self) -> float:
        return self.correct / self.n if self.n else 0.0

    @property
    def discrimination(self) -> float:
        return statistical_parity(self.predicted)

    @property
    def window_accuracy(self) -> float:
        return self.window_correct / len(self._window) if self._window else 0.0

    @property
    def window_discrimination(self) -> float:
        return statistical_parity(self.window_predicted)

    def snapshot(self, node_count: int) -> MetricSnapshot:
        return MetricSnapshot(
            n=self.n,
            accuracy=self.accuracy,
            discrimination=self.discrimination,
            node_count=node_count,
            window_accuracy=self.window_accuracy,
            window_discrimination=self.window_discrimination,
        )


@dataclass
class PrequentialResult:
    label: str
    snapshots: List[MetricSnapshot] = field(default_factory=list)
    records: List[PrequentialRecord] = field(default_factory=list)
    elapsed_seconds: float = 0.0

    @property
    def final(self) -> Optional[MetricSnapshot]:
        return self.snapshots[-1] if self.snapshots else None


def prequential_run(
    learner: Learner,
    stream: Iterable[Instance],
    schema: StreamSchema,
    snapshot_every: int = DEFAULT_SNAPSHOT_EVERY,
    eval_window: int = DEFAULT_EVAL_WINDOW,
    label: str = "learner",
) -> PrequentialResult:
    """Predict each instance before training on it; snapshot every ``snapshot_every``."""
    if snapshot_every < 1:
        raise ValueError(f"snapshot_every must be >= 1, got {snapshot_every}")
    accumulator = PrequentialAccumulator(schema.positive_class, eval_window)
    result = PrequentialResult(label)
    start = time.perf_counter()

    for index, instance in enumerate(stream):
        if instance.label is None:
            raise PreconditionError(f"Instance {index} is unlabelled")
        community = community_of(instance, schema)
        prediction = learner.predict(instance)
        record = PrequentialRecord(
            index, instance.label, prediction.label, community, float(prediction.score)
        )
        result.records.append(record)
        accumulator.add(record)
        learner.train(instance)

        if accumulator.n % snapshot_every == 0:
            result.snapshots.append(accumulator.snapshot(learner.node_count))
            logger.debug(
                f"[{label}] n={accumulator.n} accuracy={accumulator.accuracy:.4f} "
                f"discrimination={accumulator.discrimination:.4f}"
            )

    if not result.snapshots or result.snapshots[-1].n != accumulator.n:
        result.snapshots.append(accumulator.snapshot(learner.node_count))
    result.elapsed_seconds = time.perf_counter() - start

    final = result.final
    logger.info(
        f"[{label}] {final.n} instances in {result.elapsed_seconds:.1f}s: "
        f"accuracy={final.accuracy:.4f} discrimination={final.discrimination:.4f} "
        f"nodes={final.node_count}"
    )
    return result


def landmark_discrimination(records: Sequence[PrequentialRecord], positive_class: str) -> float:
    """Discrimination over predictions recomputed from a record log."""
    counts = FairnessCounts()
    for record in records:
        counts.add(predicted_community(record, positive_class))
    return statistical_parity(counts)
