# faht/data/synthetic.py
"""Synthetic discriminated streams for property tests and quick experiments.

Each instance draws its sensitive group, then its label from the group's
positive rate, then features from class-conditional distributions, so the
dataset discrimination is the difference of the two rates. Drift points
switch the rates from a given index on.
"""

import logging
from typing import List, Tuple

import numpy as np
from pydantic import BaseModel, ConfigDict, Field, field_validator, model_validator

from faht.core.schema import Instance, StreamSchema, make_schema

logger = logging.getLogger("faht_data")

SEX = ("female", "male")
COLORS = ("red", "green", "blue")
CLASSES = ("rejected", "granted")

# P(color | class), rows rejected then granted
_COLOR_PROBS = np.array([[0.5, 0.3, 0.2], [0.2, 0.3, 0.5]])


class RateSetting(BaseModel):
    model_config = ConfigDict(frozen=True)

    base_rate: float = Field(0.4, ge=0.0, le=1.0)
    discrimination: float = Field(0.0, ge=-1.0, le=1.0)

    @model_validator(mode="after")
    def rates_in_range(self) -> "RateSetting":
        for rate in self.group_rates:
            if not 0.0 <= rate <= 1.0:
                raise ValueError(
                    f"base_rate {self.base_rate} with discrimination {self.discrimination} "
                    f"gives a group rate of {rate}"
                )
        return self

    @property
    def group_rates(self) -> Tuple[float, float]:
        """(deprived, favored) positive rates."""
        half = self.discrimination / 2.0
        return self.base_rate - half, self.base_rate + half


class DriftPoint(RateSetting):
    index: int = Field(..., ge=0)


class SyntheticStreamSpec(RateSetting):
    """Stream length, initial rates, drift points and seed.

    ``paired`` emits every draw twice, once per sensitive value with the same
    features and label, which makes every partition's discrimination exactly
    zero; it requires ``discrimination == 0``.
    """

    n: int = Field(10_000, ge=0)
    deprived_fraction: float = Field(0.5, gt=0.0, lt=1.0)
    separation: float = Field(1.0, ge=0.0)
    drift_points: Tuple[DriftPoint, ...] = ()
    paired: bool = False
    seed: int = 0

    @field_validator("drift_points")
    @classmethod
    def increasing(cls, v):
        indices = [p.index for p in v]
        if any(b <= a for a, b in zip(indices, indices[1:])):
            raise ValueError(f"drift indices must be strictly increasing, got {indices}")
        return v

    @model_validator(mode="after")
    def paired_is_fair(self) -> "SyntheticStreamSpec":
        if self.paired:
            if self.n % 2:
                raise ValueError("paired streams need an even n")
            if self.discrimination != 0 or any(p.discrimination != 0 for p in self.drift_points):
                raise ValueError("paired streams cannot carry discrimination")
        return self


def synthetic_schema() -> StreamSchema:
    return make_schema(
        nominal=[("sex", SEX), ("color", COLORS)],
        numeric=["x1", "x2", "noise"],
        classes=CLASSES,
        sensitive_attribute="sex",
        deprived_value="female",
        positive_class="granted",
        order=["sex", "x1", "x2", "color", "noise"],
    )


def _segments(spec: SyntheticStreamSpec, draws: int, step: int) -> List[Tuple[int, int, RateSetting]]:
    """(start, stop, rates) over draw indices."""
    settings: List[Tuple[int, RateSetting]] = [(0, spec)]
    settings += [(p.index // step, p) for p in spec.drift_points]
    bounds = []
    for i, (start, rates) in enumerate(settings):
        stop = settings[i + 1][0] if i + 1 < len(settings) else draws
        start, stop = min(start, draws), min(stop, draws)
        if stop > start:
            bounds.append((start, stop, rates))
    return bounds


def generate(spec: SyntheticStreamSpec) -> Tuple[StreamSchema, List[Instance]]:
    """Draw the stream described by ``spec``."""
    schema = synthetic_schema()
    rng = np.random.default_rng(spec.seed)
    step = 2 if spec.paired else 1
    draws = spec.n // step

    deprived = rng.random(draws) < spec.deprived_fraction
    positive = np.zeros(draws, dtype=bool)
    u = rng.random(draws)
    for start, stop, rates in _segments(spec, draws, step):
        deprived_rate, favored_rate = rates.group_rates
        if spec.paired:
            rate = np.full(stop - start, rates.base_rate)
        else:
            rate = np.where(deprived[start:stop], deprived_rate, favored_rate)
        positive[start:stop] = u[start:stop] < rate

    label_idx = positive.astype(int)
    x1 = rng.normal(label_idx * spec.separation, 1.0)
    x2 = rng.normal(-label_idx * spec.separation / 2.0, 1.0)
    noise = rng.uniform(0.0, 1.0, draws)
    cu = rng.random(draws)
    cum = np.cumsum(_COLOR_PROBS, axis=1)[label_idx]
    color_idx = (cu[:, None] >= cum).sum(axis=1).clip(0, len(COLORS) - 1)

    instances: List[Instance] = []
    for i in range(draws):
        label = CLASSES[label_idx[i]]
        rest = (float(x1[i]), float(x2[i]), COLORS[color_idx[i]], float(noise[i]))
        if spec.paired:
            for sex in SEX:
                instances.append(Instance((sex,) + rest, label))
        else:
            sex = SEX[0] if deprived[i] else SEX[1]
            instances.append(Instance((sex,) + rest, label))

    logger.debug(f"Generated {len(instances)} synthetic instances (seed={spec.seed}, paired={spec.paired})")
    return schema, instances
