# faht/stats/observers.py
"""Per-leaf sufficient statistics and candidate split enumeration.

Nominal attributes keep exact class and community counts per value.
Numeric attributes keep one Gaussian per class and one per community;
branch counts for a threshold are estimated from normal CDF mass.
"""

from collections import Counter
from dataclasses import dataclass
from typing import Dict, Iterable, List, Optional, Tuple, Union

import numpy as np

from faht.core.errors import SchemaError
from faht.core.learner_config import LearnerConfig
from faht.core.schema import (
    MISSING,
    AttributeKind,
    AttributeSpec,
    Community,
    Instance,
    StreamSchema,
    community_of,
    is_missing,
)
from faht.metrics.measures import Branch, ClassDistribution, FairnessCounts, PartitionStats
from faht.stats.gaussian import GaussianEstimator


NominalTable = Dict[str, Tuple[Dict[str, int], FairnessCounts]]


class NominalAttributeStats:
    """Class counts and community counts for every observed value of one attribute."""

    def __init__(self, spec: AttributeSpec, classes: Tuple[str, ...]):
        self.spec = spec
        self.classes = classes
        self._accepted = frozenset(spec.values) | {MISSING}
        self.class_counts: Dict[str, Dict[str, int]] = {}
        self.fairness: Dict[str, FairnessCounts] = {}

    def accepts(self, value) -> bool:
        return value is None or value in self._accepted

    def update(self, value, label: str, community: Community) -> None:
        if value is None:
            value = MISSING
        if value not in self._accepted:
            raise SchemaError(f"Value {value!r} outside the domain of '{self.spec.name}'")
        counts = self.class_counts.get(value)
        if counts is None:
            counts = self.class_counts[value] = dict.fromkeys(self.classes, 0)
            self.fairness[value] = FairnessCounts()
        counts[label] += 1
        self.fairness[value].add(community)

    def observed_values(self) -> List[str]:
        """Values seen so far, in declared domain order."""
        return [v for v in self.spec.domain if v in self.class_counts]

    def table(self) -> NominalTable:
        return {v: (dict(self.class_counts[v]), self.fairness[v].copy()) for v in self.observed_values()}

    def partition(self) -> PartitionStats:
        return PartitionStats(
            [
                Branch(v, ClassDistribution(dict(self.class_counts[v])), self.fairness[v].copy())
                for v in self.observed_values()
            ]
        )

    def cell_count(self) -> int:
        return len(self.class_counts) * (len(self.classes) + 4)


class NumericAttributeStats:
    """One Gaussian per class and one per community for one numeric attribute."""

    def __init__(self, spec: AttributeSpec, classes: Tuple[str, ...]):
        self.spec = spec
        self.classes = classes
        self.by_class: Dict[str, GaussianEstimator] = {c: GaussianEstimator() for c in classes}
        self.by_community: Dict[Community, GaussianEstimator] = {k: GaussianEstimator() for k in Community}

    def accepts(self, value) -> bool:
        return value is None or (isinstance(value, (int, float)) and not isinstance(value, bool))

    def update(self, value, label: str, community: Community) -> None:
        if is_missing(value):
            return
        if not isinstance(value, (int, float)):
            raise SchemaError(f"Numeric attribute '{self.spec.name}' got {value!r}")
        x = float(value)
        self.by_class[label].update(x)
        self.by_community[community].update(x)

    @property
    def n(self) -> int:
        return sum(g.n for g in self.by_class.values())

    @property
    def min(self) -> float:
        return min(g.min for g in self.by_class.values())

    @property
    def max(self) -> float:
        return max(g.max for g in self.by_class.values())

    def thresholds(self, bins: int) -> np.ndarray:
        """``bins`` equal-width points strictly inside (min, max)."""
        lo, hi = self.min, self.max
        if self.n == 0 or not lo < hi:
            return np.empty(0)
        steps = np.arange(1, bins + 1, dtype=float) / (bins + 1)
        points = lo + (hi - lo) * steps
        return np.unique(points[(points > lo) & (points < hi)])

    def partitions(
        self,
        thresholds: np.ndarray,
        missing_distribution: ClassDistribution,
        missing_fairness: FairnessCounts,
    ) -> List[PartitionStats]:
        """Binary partitions (<= t, > t); missing values go with the left branch."""
        class_left = {
            c: np.clip(g.mass_below(thresholds), 0.0, g.n) for c, g in self.by_class.items()
        }
        community_left = {
            k: np.clip(g.mass_below(thresholds), 0.0, g.n) for k, g in self.by_community.items()
        }
        result = []
        for i, t in enumerate(thresholds):
            left_dist = ClassDistribution(
                {c: float(class_left[c][i]) + missing_distribution.get(c) for c in self.classes}
            )
            right_dist = ClassDistribution(
                {c: max(0.0, self.by_class[c].n - float(class_left[c][i])) for c in self.classes}
            )
            left_fair = FairnessCounts(
                *(float(community_left[k][i]) + missing_fairness.get(k) for k in Community)
            )
            right_fair = FairnessCounts(
                *(max(0.0, self.by_community[k].n - float(community_left[k][i])) for k in Community)
            )
            result.append(
                PartitionStats(
                    [
                        Branch(f"<= {t:.6g}", left_dist, left_fair),
                        Branch(f"> {t:.6g}", right_dist, right_fair),
                    ]
                )
            )
        return result

    def cell_count(self) -> int:
        return len(self.by_class) + len(self.by_community)


AttributeStats = Union[NominalAttributeStats, NumericAttributeStats]


@dataclass
class SplitCandidate:
    """A candidate test at a leaf together with the partition it induces."""

    attribute_index: int
    attribute_name: str
    kind: AttributeKind
    partition: PartitionStats
    threshold: Optional[float] = None
    merit: Optional[float] = None

    @property
    def is_numeric(self) -> bool:
        return self.kind is AttributeKind.NUMERIC

    def describe(self) -> str:
        if self.is_numeric:
            return f"{self.attribute_name} <= {self.threshold:.6g}"
        return f"{self.attribute_name} in {{{', '.join(str(b.key) for b in self.partition)}}}"


class LeafStatistics:
    """Everything a leaf needs to score every candidate split."""

    def __init__(self, schema: StreamSchema):
        self.schema = schema
        self.distribution = ClassDistribution(dict.fromkeys(schema.classes, 0))
        self.fairness = FairnessCounts()
        self.attributes: List[AttributeStats] = [
            NominalAttributeStats(spec, schema.classes)
            if spec.is_nominal
            else NumericAttributeStats(spec, schema.classes)
            for spec in schema.attributes
        ]

    @property
    def n(self) -> float:
        return self.distribution.total

    def observe(self, instance: Instance) -> Community:
        """Add one labelled instance; returns its community."""
        if len(instance.values) != len(self.attributes):
            raise SchemaError(
                f"Instance has {len(instance.values)} values, schema has {len(self.attributes)}"
            )
        label = instance.label
        if label not in self.distribution.counts:
            raise SchemaError(f"Label {label!r} not in {list(self.schema.classes)}")
        community = community_of(instance, self.schema)
        for stats, value in zip(self.attributes, instance.values):
            if not stats.accepts(value):
                raise SchemaError(f"Value {value!r} outside the domain of '{stats.spec.name}'")
        for stats, value in zip(self.attributes, instance.values):
            stats.update(value, label, community)
        self.distribution.add(label)
        self.fairness.add(community)
        return community

    def nominal_tables(self) -> Dict[int, NominalTable]:
        return {
            stats.spec.index: stats.table()
            for stats in self.attributes
            if isinstance(stats, NominalAttributeStats)
        }

    def cell_count(self) -> int:
        return len(self.schema.classes) + 4 + sum(s.cell_count() for s in self.attributes)

    def missing_mass(self, stats: NumericAttributeStats) -> Tuple[ClassDistribution, FairnessCounts]:
        """Class and community counts of instances whose value for ``stats`` was missing."""
        distribution = ClassDistribution(
            {c: max(0, self.distribution.get(c) - stats.by_class[c].n) for c in self.schema.classes}
        )
        fairness = FairnessCounts(
            *(max(0, self.fairness.get(k) - stats.by_community[k].n) for k in Community)
        )
        return distribution, fairness


def observe(stats: LeafStatistics, instance: Instance) -> LeafStatistics:
    stats.observe(instance)
    return stats


def candidate_splits(stats: LeafStatistics, config: LearnerConfig) -> List[SplitCandidate]:
    """All admissible tests at a leaf, merits left unset."""
    candidates: List[SplitCandidate] = []
    if stats.n < 1:
        return candidates
    for attribute in stats.attributes:
        spec = attribute.spec
        if isinstance(attribute, NominalAttributeStats):
            partition = attribute.partition()
            if partition.n_nonempty >= 2:
                candidates.append(SplitCandidate(spec.index, spec.name, spec.kind, partition))
            continue
        thresholds = attribute.thresholds(config.numeric_bins)
        if thresholds.size == 0:
            continue
        missing_distribution, missing_fairness = stats.missing_mass(attribute)
        for t, partition in zip(
            thresholds, attribute.partitions(thresholds, missing_distribution, missing_fairness)
        ):
            if partition.n_nonempty >= 2:
                candidates.append(
                    SplitCandidate(spec.index, spec.name, spec.kind, partition, threshold=float(t))
                )
    return candidates


def batch_equivalence_oracle(
    instances: Iterable[Instance], schema: StreamSchema
) -> Tuple[ClassDistribution, FairnessCounts, Dict[int, NominalTable]]:
    """Recompute the nominal statistics of a stored list in one brute-force pass."""
    labels: Counter = Counter()
    communities: Counter = Counter()
    class_cells: Counter = Counter()
    community_cells: Counter = Counter()
    nominal = [spec for spec in schema.attributes if spec.is_nominal]
    for instance in instances:
        community = community_of(instance, schema)
        labels[instance.label] += 1
        communities[community] += 1
        for spec in nominal:
            value = instance.values[spec.index]
            value = MISSING if value is None else value
            class_cells[(spec.index, value, instance.label)] += 1
            community_cells[(spec.index, value, community)] += 1

    distribution = ClassDistribution({c: labels[c] for c in schema.classes})
    fairness = FairnessCounts(*(communities[k] for k in Community))
    tables: Dict[int, NominalTable] = {}
    for spec in nominal:
        table: NominalTable = {}
        for value in spec.domain:
            counts = {c: class_cells[(spec.index, value, c)] for c in schema.classes}
            if sum(counts.values()) == 0:
                continue
            table[value] = (counts, FairnessCounts(*(community_cells[(spec.index, value, k)] for k in Community)))
        tables[spec.index] = table
    return distribution, fairness, tables
