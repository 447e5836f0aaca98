# faht/eval/statistics.py
"""McNemar's test and Pearson correlations over prequential logs."""

import logging
import math
from dataclasses import dataclass
from typing import Dict, List, Mapping, Optional, Sequence

import numpy as np
import pandas as pd
from scipy import stats
from statsmodels.stats.contingency_tables import mcnemar as _statsmodels_mcnemar

from faht.core.errors import InvariantError, UndefinedStatisticError
from faht.core.schema import Instance, StreamSchema, is_missing
from faht.eval.prequential import PrequentialRecord

logger = logging.getLogger("faht_eval")

# chi-squared critical value for p < 0.001 at one degree of freedom
CHI2_CRITICAL_P001 = 10.83

Encoding = Mapping[str, Mapping[str, float]]


@dataclass(frozen=True)
class McNemarTable:
    """Paired predictions of learners A (rows) and B (columns), positive first."""

    both_positive: int
    a_positive_b_negative: int
    a_negative_b_positive: int
    both_negative: int

    def __post_init__(self):
        if min(self.as_matrix().ravel()) < 0:
            raise InvariantError(f"Negative cell in {self}")

    @property
    def b(self) -> int:
        return self.a_positive_b_negative

    @property
    def c(self) -> int:
        return self.a_negative_b_positive

    def as_matrix(self) -> np.ndarray:
        return np.array(
            [
                [self.both_positive, self.a_positive_b_negative],
                [self.a_negative_b_positive, self.both_negative],
            ]
        )

    def swapped(self) -> "McNemarTable":
        return McNemarTable(self.both_positive, self.c, self.b, self.both_negative)

    def to_dict(self) -> Dict[str, int]:
        return {
            "both_positive": self.both_positive,
            "a_positive_b_negative": self.b,
            "a_negative_b_positive": self.c,
            "both_negative": self.both_negative,
        }


@dataclass(frozen=True)
class McNemarResult:
    statistic: float
    df: int
    pvalue: float

    @property
    def significant_p001(self) -> bool:
        return self.statistic > CHI2_CRITICAL_P001


def mcnemar_table(
    records_a: Sequence[PrequentialRecord],
    records_b: Sequence[PrequentialRecord],
    positive_class: str,
    deprived: Optional[bool] = True,
) -> McNemarTable:
    """Cross-tabulate two runs' predictions, restricted to one sensitive group.

    ``deprived=None`` keeps every record.
    """
    if len(records_a) != len(records_b):
        raise InvariantError(f"Runs differ in length: {len(records_a)} vs {len(records_b)}")
    cells = np.zeros((2, 2), dtype=int)
    for ra, rb in zip(records_a, records_b):
        if ra.index != rb.index or ra.community != rb.community:
            raise InvariantError(f"Runs are not aligned at index {ra.index}")
        if deprived is not None and ra.community.deprived != deprived:
            continue
        row = 0 if ra.predicted_label == positive_class else 1
        col = 0 if rb.predicted_label == positive_class else 1
        cells[row, col] += 1
    return McNemarTable(*(int(x) for x in cells.ravel()))


def mcnemar(table: McNemarTable) -> McNemarResult:
    """Continuity-corrected chi-squared: (|b - c| - 1)^2 / (b + c), df = 1."""
    if table.b + table.c == 0:
        raise UndefinedStatisticError("McNemar statistic undefined: no discordant pairs")
    result = _statsmodels_mcnemar(table.as_matrix(), exact=False, correction=True)
    return McNemarResult(float(result.statistic), 1, float(result.pvalue))


def pearson(x: Sequence[Optional[float]], y: Sequence[Optional[float]]) -> float:
    """Sample correlation over the pairs where both values are present."""
    if len(x) != len(y):
        raise InvariantError(f"Vectors differ in length: {len(x)} vs {len(y)}")
    xs = np.array([np.nan if v is None else v for v in x], dtype=float)
    ys = np.array([np.nan if v is None else v for v in y], dtype=float)
    complete = ~(np.isnan(xs) | np.isnan(ys))
    xs, ys = xs[complete], ys[complete]
    if xs.size < 2:
        raise UndefinedStatisticError(f"Correlation needs 2 complete pairs, got {xs.size}")
    if np.ptp(xs) == 0 or np.ptp(ys) == 0:
        raise UndefinedStatisticError("Correlation undefined: zero variance")
    r, _ = stats.pearsonr(xs, ys)
    return float(np.clip(r, -1.0, 1.0))


def encode_column(
    instances: Sequence[Instance],
    schema: StreamSchema,
    name: str,
    encoding: Optional[Encoding] = None,
) -> List[Optional[float]]:
    """Numeric view of one attribute (or the class); nominal values by domain position."""
    if name == schema.class_attribute.name:
        spec = schema.class_attribute
        values = [inst.label for inst in instances]
    else:
        spec = schema.attribute(name)
        values = [inst.values[spec.index] for inst in instances]
    if not spec.is_nominal:
        return [None if is_missing(v) else float(v) for v in values]
    codes = dict((encoding or {}).get(name) or {v: float(i) for i, v in enumerate(spec.values)})
    return [None if is_missing(v) else codes.get(v) for v in values]


def correlation_matrix(
    instances: Sequence[Instance],
    schema: StreamSchema,
    attributes: Optional[Sequence[str]] = None,
    encoding: Optional[Encoding] = None,
) -> pd.DataFrame:
    """Pairwise Pearson matrix; undefined cells are NaN."""
    names = list(attributes) if attributes else [a.name for a in schema.attributes]
    if schema.class_attribute.name not in names:
        names.append(schema.class_attribute.name)
    columns = {name: encode_column(instances, schema, name, encoding) for name in names}
    matrix = pd.DataFrame(np.nan, index=names, columns=names)
    for i, a in enumerate(names):
        for b in names[i:]:
            try:
                r = 1.0 if a == b else pearson(columns[a], columns[b])
            except UndefinedStatisticError:
                logger.debug(f"Correlation {a}/{b} undefined")
                r = math.nan
            matrix.loc[a, b] = matrix.loc[b, a] = r
    return matrix


def boundary_correlations(records: Sequence[PrequentialRecord], schema: StreamSchema) -> pd.DataFrame:
    """Correlations among sensitive group, predicted label and true label.

    Membership of the deprived group and the positive class are coded as 1.
    """
    vectors = {
        "sensitive": [1.0 if r.community.deprived else 0.0 for r in records],
        "predicted": [1.0 if r.predicted_label == schema.positive_class else 0.0 for r in records],
        "actual": [1.0 if r.true_label == schema.positive_class else 0.0 for r in records],
    }
    names = list(vectors)
    matrix = pd.DataFrame(np.nan, index=names, columns=names)
    for a in names:
        for b in names:
            try:
                matrix.loc[a, b] = 1.0 if a == b else pearson(vectors[a], vectors[b])
            except UndefinedStatisticError:
                matrix.loc[a, b] = math.nan
    return matrix
