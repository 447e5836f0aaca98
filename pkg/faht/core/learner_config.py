# faht/core/learner_config.py
"""Validated learner configuration."""

from enum import Enum
from typing import Literal, Optional

from pydantic import BaseModel, ConfigDict, Field, field_validator


class SplitCriterion(str, Enum):
    INFO_GAIN = "info_gain"
    FAIR_INFO_GAIN = "fair_info_gain"
    KAMIRAN = "kamiran"


class KamiranVariant(str, Enum):
    SUBTRACT = "subtract"
    DIVIDE = "divide"
    ADD = "add"


class NullSplitMode(str, Enum):
    ZERO = "zero"
    ENTROPY_TIMES_DISC = "entropy_times_disc"


# CLI spellings of the criteria
CRITERION_ALIASES = {
    "ht": SplitCriterion.INFO_GAIN,
    "faht": SplitCriterion.FAIR_INFO_GAIN,
    "kamiran": SplitCriterion.KAMIRAN,
}


class LearnerConfig(BaseModel):
    """Hoeffding-tree hyperparameters and the split criterion."""

    model_config = ConfigDict(frozen=True)

    split_criterion: SplitCriterion = SplitCriterion.FAIR_INFO_GAIN
    kamiran_variant: KamiranVariant = KamiranVariant.SUBTRACT
    grace_period: int = Field(200, ge=1)
    delta: float = Field(1e-7, gt=0.0, lt=1.0)
    tie_threshold: float = Field(0.05, ge=0.0)
    null_split_mode: NullSplitMode = NullSplitMode.ZERO
    leaf_prediction: Literal["majority_class"] = "majority_class"
    numeric_bins: int = Field(10, ge=1)
    # None means log2(#classes)
    hoeffding_range: Optional[float] = Field(None, gt=0.0)
    # |FG| within this many standard errors of the leaf parity counts as FG == 0; 0 keeps the exact rule
    fg_noise_z: float = Field(3.0, ge=0.0)

    @field_validator("split_criterion", mode="before")
    @classmethod
    def resolve_alias(cls, v):
        if isinstance(v, str) and v.lower() in CRITERION_ALIASES:
            return CRITERION_ALIASES[v.lower()]
        return v

    @property
    def label(self) -> str:
        """Short name used in file names and reports."""
        if self.split_criterion is SplitCriterion.INFO_GAIN:
            return "ht"
        if self.split_criterion is SplitCriterion.FAIR_INFO_GAIN:
            return "faht"
        return f"kamiran-{self.kamiran_variant.value}"
