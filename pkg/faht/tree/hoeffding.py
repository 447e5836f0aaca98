# faht/tree/hoeffding.py
"""Incremental Hoeffding tree parameterized by its split criterion.

``info_gain`` gives the vanilla Hoeffding tree, ``fair_info_gain`` the
fairness-aware tree and ``kamiran`` the discrimination-aware baselines.
"""

import logging
import math
from dataclasses import asdict, dataclass
from typing import Dict, Iterable, List, Optional, Tuple

from faht.core.learner_config import LearnerConfig, NullSplitMode, SplitCriterion
from faht.core.schema import Instance, StreamSchema
from faht.metrics.measures import (
    FG_ZERO_TOLERANCE,
    class_range,
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
from faht.stats.observers import LeafStatistics, SplitCandidate, candidate_splits
from faht.tree.nodes import LEFT, RIGHT, LeafNode, Node, Prediction, SplitNode, predict_from

logger = logging.getLogger("faht_tree")


@dataclass(frozen=True)
class ModelStats:
    node_count: int
    leaf_count: int
    depth: int


@dataclass(frozen=True)
class SplitDecision:
    """Outcome of one split attempt at a leaf."""

    should_split: bool
    best: Optional[SplitCandidate]
    best_merit: float
    runner_up_merit: float
    null_merit: float
    epsilon: float
    n: float


@dataclass(frozen=True)
class SplitEvent:
    instance_index: int
    depth: int
    attribute: str
    threshold: Optional[float]
    merit: float
    runner_up_merit: float
    null_merit: float
    epsilon: float
    n: float

    def to_dict(self) -> Dict:
        data = asdict(self)
        if math.isinf(self.runner_up_merit):
            data["runner_up_merit"] = None
        return data


def fg_tolerance(stats: LeafStatistics, config: LearnerConfig) -> float:
    """Band around zero inside which a sampled fairness gain is indistinguishable from none."""
    return max(FG_ZERO_TOLERANCE, config.fg_noise_z * parity_standard_error(stats.fairness))


def score_candidate(candidate: SplitCandidate, stats: LeafStatistics, config: LearnerConfig) -> float:
    """Merit of one candidate under the configured criterion."""
    ig = information_gain(stats.distribution, candidate.partition)
    criterion = config.split_criterion
    if criterion is SplitCriterion.INFO_GAIN:
        return ig
    if criterion is SplitCriterion.FAIR_INFO_GAIN:
        return fair_information_gain(
            ig, fairness_gain(stats.fairness, candidate.partition), fg_tolerance(stats, config)
        )
    ig_sensitive = sensitive_information_gain(stats.fairness, candidate.partition)
    return kamiran_merit(ig, ig_sensitive, config.kamiran_variant)


def null_merit(stats: LeafStatistics, config: LearnerConfig) -> float:
    """Merit of not splitting at all."""
    if (
        config.null_split_mode is NullSplitMode.ENTROPY_TIMES_DISC
        and config.split_criterion is SplitCriterion.FAIR_INFO_GAIN
    ):
        h = entropy(stats.distribution)
        disc = statistical_parity(stats.fairness)
        return h if disc == 0 else h * abs(disc)
    return 0.0


def rank_candidates(candidates: Iterable[SplitCandidate]) -> List[SplitCandidate]:
    """Best candidate per attribute, ordered by merit then attribute position."""
    best: Dict[int, SplitCandidate] = {}
    for candidate in candidates:
        current = best.get(candidate.attribute_index)
        # strict comparison keeps the lowest threshold among equals
        if current is None or candidate.merit > current.merit:
            best[candidate.attribute_index] = candidate
    return sorted(best.values(), key=lambda c: (-c.merit, c.attribute_index))


def attempt_split(stats: LeafStatistics, config: LearnerConfig) -> SplitDecision:
    """Hoeffding test of the best candidate against the runner-up and the null split."""
    n = stats.n
    g0 = null_merit(stats, config)
    if stats.distribution.n_observed_classes < 2:
        return SplitDecision(False, None, -math.inf, -math.inf, g0, math.inf, n)

    candidates = candidate_splits(stats, config)
    for candidate in candidates:
        candidate.merit = score_candidate(candidate, stats, config)
    ranked = rank_candidates(candidates)
    if not ranked:
        return SplitDecision(False, None, -math.inf, -math.inf, g0, math.inf, n)

    g1 = ranked[0].merit
    g2 = ranked[1].merit if len(ranked) > 1 else -math.inf
    epsilon = hoeffding_bound(
        class_range(len(stats.schema.classes), config.hoeffding_range), config.delta, n
    )
    split = (g1 - max(g2, g0) > epsilon) or (epsilon < config.tie_threshold and g1 > g0)
    return SplitDecision(split, ranked[0], g1, g2, g0, epsilon, n)


class FahtTree:
    """A single-writer incremental tree; predictions are read-only."""

    def __init__(self, schema: StreamSchema, config: Optional[LearnerConfig] = None):
        self.schema = schema
        self.config = config or LearnerConfig()
        self.root: Node = LeafNode(schema)
        self.instances_seen = 0
        self.split_log: List[SplitEvent] = []

    def _sort(self, instance: Instance) -> Tuple[LeafNode, Optional[SplitNode], Optional[str], int]:
        node, parent, key, depth = self.root, None, None, 0
        while not node.is_leaf:
            parent = node
            key = node.child_key(instance.values[node.attribute_index])
            node = node.children[key]
            depth += 1
        return node, parent, key, depth

    def leaf_for(self, instance: Instance) -> LeafNode:
        return self._sort(instance)[0]

    def predict(self, instance: Instance) -> Prediction:
        leaf = self.leaf_for(instance)
        return predict_from(leaf.prediction_distribution(), self.schema)

    def train(self, instance: Instance) -> None:
        leaf, parent, key, depth = self._sort(instance)
        leaf.stats.observe(instance)
        self.instances_seen += 1
        leaf.n_since_last_attempt += 1
        if leaf.n_since_last_attempt >= self.config.grace_period:
            leaf.n_since_last_attempt = 0
            decision = attempt_split(leaf.stats, self.config)
            if decision.should_split:
                self._split(leaf, parent, key, depth, decision)

    def _split(
        self,
        leaf: LeafNode,
        parent: Optional[SplitNode],
        key: Optional[str],
        depth: int,
        decision: SplitDecision,
    ) -> None:
        best = decision.best
        if best.is_numeric:
            keys = [LEFT, RIGHT]
        else:
            keys = [b.key for b in best.partition]
        children: Dict[str, Node] = {}
        weights: Dict[str, float] = {}
        for k, branch in zip(keys, best.partition):
            children[k] = LeafNode(self.schema)
            weights[k] = branch.weight
        node = SplitNode(
            best.attribute_index, best.attribute_name, best.kind, children, weights, best.threshold
        )
        if parent is None:
            self.root = node
        else:
            parent.children[key] = node

        event = SplitEvent(
            instance_index=self.instances_seen,
            depth=depth,
            attribute=best.attribute_name,
            threshold=best.threshold,
            merit=decision.best_merit,
            runner_up_merit=decision.runner_up_merit,
            null_merit=decision.null_merit,
            epsilon=decision.epsilon,
            n=decision.n,
        )
        self.split_log.append(event)
        logger.debug(
            f"Split at instance {event.instance_index} depth {depth} on {best.describe()} "
            f"(merit={decision.best_merit:.6g}, runner_up={decision.runner_up_merit:.6g}, "
            f"epsilon={decision.epsilon:.6g})"
        )

    def iter_nodes(self) -> Iterable[Tuple[Node, int]]:
        stack = [(self.root, 0)]
        while stack:
            node, depth = stack.pop()
            yield node, depth
            if not node.is_leaf:
                stack.extend((child, depth + 1) for child in reversed(list(node.children.values())))

    def model_stats(self) -> ModelStats:
        nodes = leaves = depth = 0
        for node, d in self.iter_nodes():
            nodes += 1
            if node.is_leaf:
                leaves += 1
                depth = max(depth, d)
        return ModelStats(nodes, leaves, depth)

    @property
    def node_count(self) -> int:
        return self.model_stats().node_count


def model_stats(tree: FahtTree) -> ModelStats:
    return tree.model_stats()
