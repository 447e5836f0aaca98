# faht/metrics/measures.py
"""Merit functions for split selection.

Statistical parity, entropy and information gain, fairness gain, fair
information gain, the sensitive-entropy baselines, and the Hoeffding bound.
Everything here is a pure function of counts.
"""

import math
from dataclasses import dataclass, field
from typing import Dict, Iterable, Iterator, List, Optional

import numpy as np

from faht.core.errors import InvariantError, PreconditionError
from faht.core.learner_config import KamiranVariant
from faht.core.schema import Community

# |FG| below this counts as FG == 0 in the fair information gain.
FG_ZERO_TOLERANCE = 1e-12

_TOTAL_REL_TOL = 1e-9
_TOTAL_ABS_TOL = 1e-9


@dataclass
class FairnessCounts:
    """Tallies of the four communities (deprived/favored x rejected/granted)."""

    dr: float = 0
    dg: float = 0
    fr: float = 0
    fg: float = 0

    def __post_init__(self):
        if min(self.dr, self.dg, self.fr, self.fg) < 0:
            raise InvariantError(f"Negative community count in {self}")

    def add(self, community: Community, weight: float = 1) -> None:
        if community is Community.DR:
            self.dr += weight
        elif community is Community.DG:
            self.dg += weight
        elif community is Community.FR:
            self.fr += weight
        else:
            self.fg += weight

    def get(self, community: Community) -> float:
        return getattr(self, community.value.lower())

    @property
    def deprived(self) -> float:
        return self.dr + self.dg

    @property
    def favored(self) -> float:
        return self.fr + self.fg

    @property
    def granted(self) -> float:
        return self.dg + self.fg

    @property
    def rejected(self) -> float:
        return self.dr + self.fr

    @property
    def total(self) -> float:
        return self.dr + self.dg + self.fr + self.fg

    def swapped(self) -> "FairnessCounts":
        """Exchange the deprived and favored roles."""
        return FairnessCounts(dr=self.fr, dg=self.fg, fr=self.dr, fg=self.dg)

    def copy(self) -> "FairnessCounts":
        return FairnessCounts(self.dr, self.dg, self.fr, self.fg)

    def __add__(self, other: "FairnessCounts") -> "FairnessCounts":
        return FairnessCounts(
            self.dr + other.dr, self.dg + other.dg, self.fr + other.fr, self.fg + other.fg
        )

    def to_dict(self) -> Dict[str, float]:
        return {"DR": self.dr, "DG": self.dg, "FR": self.fr, "FG": self.fg}


@dataclass
class ClassDistribution:
    """Per-class counts; ``total`` is always the sum of ``counts``."""

    counts: Dict[str, float] = field(default_factory=dict)

    def add(self, label: str, weight: float = 1) -> None:
        self.counts[label] = self.counts.get(label, 0) + weight

    def get(self, label: str) -> float:
        return self.counts.get(label, 0)

    @property
    def total(self) -> float:
        return sum(self.counts.values())

    @property
    def n_observed_classes(self) -> int:
        return sum(1 for c in self.counts.values() if c > 0)

    def copy(self) -> "ClassDistribution":
        return ClassDistribution(dict(self.counts))

    def __iter__(self) -> Iterator[str]:
        return iter(self.counts)

    @classmethod
    def from_fairness(
        cls, fairness: FairnessCounts, positive: str = "granted", negative: str = "rejected"
    ) -> "ClassDistribution":
        return cls({negative: fairness.rejected, positive: fairness.granted})


@dataclass
class Branch:
    """One side of a candidate split."""

    key: object
    distribution: ClassDistribution
    fairness: FairnessCounts

    @property
    def weight(self) -> float:
        return self.distribution.total


@dataclass
class PartitionStats:
    """The partitions D_v a candidate split induces."""

    branches: List[Branch] = field(default_factory=list)

    def __iter__(self) -> Iterator[Branch]:
        return iter(self.branches)

    def __len__(self) -> int:
        return len(self.branches)

    @property
    def weights(self) -> List[float]:
        return [b.weight for b in self.branches]

    @property
    def total(self) -> float:
        return sum(self.weights)

    @property
    def n_nonempty(self) -> int:
        return sum(1 for w in self.weights if w > 0)

    def fairness_total(self) -> FairnessCounts:
        total = FairnessCounts()
        for branch in self.branches:
            total = total + branch.fairness
        return total


def _check_total(expected: float, actual: float, what: str) -> None:
    if not math.isclose(expected, actual, rel_tol=_TOTAL_REL_TOL, abs_tol=_TOTAL_ABS_TOL):
        raise InvariantError(f"{what}: branch weights sum to {actual}, parent has {expected}")


def statistical_parity(c: FairnessCounts) -> float:
    """FG/(FG+FR) - DG/(DG+DR); an empty group contributes a ratio of 0."""
    favored = c.fg + c.fr
    deprived = c.dg + c.dr
    favored_rate = c.fg / favored if favored > 0 else 0.0
    deprived_rate = c.dg / deprived if deprived > 0 else 0.0
    return favored_rate - deprived_rate


def parity_standard_error(c: FairnessCounts) -> float:
    """Sampling standard error of the statistical parity when both groups share one positive rate.

    Args:
        c: community tallies of a node

    Returns:
        sqrt(p(1 - p)(1/n_deprived + 1/n_favored)) with p the pooled granted
        rate; 0.0 when a group is empty or every instance has the same class.
    """
    if c.deprived <= 0 or c.favored <= 0:
        return 0.0
    p = c.granted / c.total
    return math.sqrt(p * (1.0 - p) * (1.0 / c.deprived + 1.0 / c.favored))


def entropy(d: ClassDistribution) -> float:
    """Shannon entropy in bits; 0 for an empty distribution."""
    counts = np.fromiter(d.counts.values(), dtype=float)
    total = counts.sum()
    if total <= 0:
        return 0.0
    p = counts[counts > 0] / total
    return float(max(0.0, -np.sum(p * np.log2(p))))


def information_gain(parent: ClassDistribution, parts: PartitionStats) -> float:
    """H(parent) minus the weighted branch entropies."""
    total = parent.total
    _check_total(total, parts.total, "information_gain")
    if total <= 0:
        return 0.0
    remainder = sum(b.weight / total * entropy(b.distribution) for b in parts if b.weight > 0)
    return max(0.0, entropy(parent) - remainder)


def fairness_gain(parent: FairnessCounts, parts: PartitionStats) -> float:
    """|Disc(D)| minus the weighted |Disc(D_v)| of the branches."""
    total = parent.total
    _check_total(total, parts.total, "fairness_gain")
    if total <= 0:
        return 0.0
    after = sum(b.weight / total * abs(statistical_parity(b.fairness)) for b in parts if b.weight > 0)
    return abs(statistical_parity(parent)) - after


def fair_information_gain(ig: float, fg: float, tolerance: float = FG_ZERO_TOLERANCE) -> float:
    """IG when the split leaves discrimination unchanged, IG x FG otherwise."""
    if abs(fg) < tolerance:
        return ig
    return ig * fg


def sensitive_distribution(c: FairnessCounts) -> ClassDistribution:
    """Distribution of the sensitive attribute itself."""
    return ClassDistribution({"deprived": c.deprived, "favored": c.favored})


def sensitive_information_gain(parent: FairnessCounts, parts: PartitionStats) -> float:
    """Information gain of the split with respect to the sensitive attribute."""
    sensitive_parts = PartitionStats(
        [Branch(b.key, sensitive_distribution(b.fairness), b.fairness) for b in parts]
    )
    return information_gain(sensitive_distribution(parent), sensitive_parts)


def kamiran_merit(
    ig_class: float, ig_sensitive: float, variant: KamiranVariant = KamiranVariant.SUBTRACT
) -> float:
    """Combine class gain and sensitive gain the way the discrimination-aware tree baselines do."""
    variant = KamiranVariant(variant)
    if variant is KamiranVariant.SUBTRACT:
        return ig_class - ig_sensitive
    if variant is KamiranVariant.ADD:
        return ig_class + ig_sensitive
    if ig_sensitive == 0:
        return ig_class
    return ig_class / ig_sensitive


def hoeffding_bound(range_: float, delta: float, n: float) -> float:
    """epsilon = sqrt(R^2 ln(1/delta) / 2n)."""
    if n < 1:
        raise PreconditionError(f"Hoeffding bound needs n >= 1, got {n}")
    if range_ <= 0:
        raise PreconditionError(f"Hoeffding range must be positive, got {range_}")
    if not 0 < delta < 1:
        raise PreconditionError(f"delta must lie in (0, 1), got {delta}")
    return math.sqrt(range_ * range_ * math.log(1.0 / delta) / (2.0 * n))


def class_range(n_classes: int, override: Optional[float] = None) -> float:
    """Hoeffding range R: log2(#classes) unless overridden."""
    if override is not None:
        return override
    return math.log2(max(n_classes, 2))


def discrimination_of(communities: Iterable[Community]) -> float:
    """Statistical parity of a sequence of community labels."""
    counts = FairnessCounts()
    for community in communities:
        counts.add(community)
    return statistical_parity(counts)

