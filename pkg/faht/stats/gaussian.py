# faht/stats/gaussian.py
"""Single-pass Gaussian summary of a numeric attribute."""

import math
from typing import Union

import numpy as np
from scipy.special import erfc

ArrayLike = Union[float, np.ndarray]


class GaussianEstimator:
    """Running count, mean, sum of squared deviations, min and max (Welford)."""

    __slots__ = ("n", "mean", "m2", "min", "max")

    def __init__(self):
        self.n = 0
        self.mean = 0.0
        self.m2 = 0.0
        self.min = math.inf
        self.max = -math.inf

    def update(self, x: float) -> None:
        self.n += 1
        delta = x - self.mean
        self.mean += delta / self.n
        self.m2 += delta * (x - self.mean)
        if x < self.min:
            self.min = x
        if x > self.max:
            self.max = x

    @property
    def variance(self) -> float:
        if self.n < 2:
            return 0.0
        return max(0.0, self.m2 / (self.n - 1))

    @property
    def std(self) -> float:
        return math.sqrt(self.variance)

    def cdf(self, x: ArrayLike) -> ArrayLike:
        """P(X <= x) under the fitted normal; a step at the mean when the spread is zero."""
        std = self.std
        if std == 0.0:
            return np.where(np.asarray(x) >= self.mean, 1.0, 0.0)
        return 0.5 * erfc(-(np.asarray(x, dtype=float) - self.mean) / (std * math.sqrt(2.0)))

    def mass_below(self, x: ArrayLike) -> ArrayLike:
        """Estimated number of observations <= x."""
        if self.n == 0:
            return np.zeros_like(np.asarray(x, dtype=float))
        return self.n * self.cdf(x)

    def __repr__(self) -> str:
        return f"GaussianEstimator(n={self.n}, mean={self.mean:.6g}, std={self.std:.6g})"
