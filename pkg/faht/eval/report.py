# faht/eval/report.py
"""Comparison reports and result files (CSV per snapshot, JSON summaries)."""

import json
import logging
import math
from dataclasses import dataclass, field
from pathlib import Path
from typing import Any, Dict, List, Optional, Sequence, Union

import pandas as pd

from faht.core.errors import InvariantError
from faht.eval.prequential import PrequentialResult

logger = logging.getLogger("faht_eval")

SNAPSHOT_COLUMNS = [
    "n",
    "accuracy",
    "discrimination",
    "node_count",
    "window_accuracy",
    "window_discrimination",
]


def percent_change(old: float, new: float) -> Optional[float]:
    """Relative change in percent.

    Args:
        old: Reference value
        new: Compared value

    Returns:
        (new - old) / old x 100, or None when ``old`` is zero
    """
    if old == 0:
        return None
    return (new - old) / old * 100.0


@dataclass
class MetricComparison:
    metric: str
    a: float
    b: float

    @property
    def delta(self) -> float:
        return self.b - self.a

    @property
    def percent_change(self) -> Optional[float]:
        return percent_change(self.a, self.b)

    def to_dict(self) -> Dict[str, Any]:
        return {
            "metric": self.metric,
            "a": self.a,
            "b": self.b,
            "delta": self.delta,
            "percent_change": self.percent_change,
        }


@dataclass
class CompareReport:
    label_a: str
    label_b: str
    metrics: List[MetricComparison] = field(default_factory=list)

    def get(self, metric: str) -> MetricComparison:
        for m in self.metrics:
            if m.metric == metric:
                return m
        raise KeyError(metric)

    def to_dict(self) -> Dict[str, Any]:
        return {
            "a": self.label_a,
            "b": self.label_b,
            "metrics": [m.to_dict() for m in self.metrics],
        }

    def render(self) -> str:
        lines = [f"{'metric':<24}{self.label_a:>12}{self.label_b:>12}{'change':>12}"]
        for m in self.metrics:
            change = "n/a" if m.percent_change is None else f"{m.percent_change:+.2f}%"
            lines.append(f"{m.metric:<24}{m.a:>12.4f}{m.b:>12.4f}{change:>12}")
        return "\n".join(lines)


def compare_report(run_a: PrequentialResult, run_b: PrequentialResult) -> CompareReport:
    """Final metrics of two runs over the same stream, with deltas and relative changes.

    Args:
        run_a: Reference run, usually HT
        run_b: Compared run

    Returns:
        CompareReport with one MetricComparison per final metric

    Raises:
        InvariantError: If the runs saw different numbers of instances
    """
    if len(run_a.records) != len(run_b.records):
        raise InvariantError(
            f"Runs cover different streams: {len(run_a.records)} vs {len(run_b.records)} records"
        )
    fa, fb = run_a.final, run_b.final
    report = CompareReport(run_a.label, run_b.label)
    for metric in ("accuracy", "discrimination", "window_accuracy", "window_discrimination", "node_count"):
        report.metrics.append(MetricComparison(metric, float(getattr(fa, metric)), float(getattr(fb, metric))))
    return report


def snapshots_frame(result: PrequentialResult) -> pd.DataFrame:
    return pd.DataFrame([s.to_dict() for s in result.snapshots], columns=SNAPSHOT_COLUMNS)


def node_series(run_a: PrequentialResult, run_b: PrequentialResult) -> pd.DataFrame:
    """Node counts of both runs per snapshot and whether B is no larger than A.

    Args:
        run_a: Reference run
        run_b: Compared run

    Returns:
        DataFrame with columns n, nodes_<label a>, nodes_<label b> and b_not_larger,
        restricted to snapshot positions both runs share
    """
    a = snapshots_frame(run_a)[["n", "node_count"]].rename(columns={"node_count": f"nodes_{run_a.label}"})
    b = snapshots_frame(run_b)[["n", "node_count"]].rename(columns={"node_count": f"nodes_{run_b.label}"})
    if run_a.label == run_b.label:
        b = b.rename(columns={f"nodes_{run_b.label}": f"nodes_{run_b.label}_b"})
    merged = a.merge(b, on="n", how="inner")
    merged["b_not_larger"] = merged.iloc[:, 2] <= merged.iloc[:, 1]
    return merged


def write_snapshots_csv(result: PrequentialResult, path: Union[str, Path]) -> Path:
    """Write one CSV row per snapshot.

    Args:
        result: Prequential run
        path: Output file; parent directories are created

    Returns:
        The written path
    """
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    snapshots_frame(result).to_csv(path, index=False)
    logger.info(f"Wrote {len(result.snapshots)} snapshots to {path}")
    return path


def _json_default(obj):
    if hasattr(obj, "to_dict"):
        return obj.to_dict()
    if hasattr(obj, "item"):
        return obj.item()
    if hasattr(obj, "value"):
        return obj.value
    raise TypeError(f"Object of type {type(obj).__name__} is not JSON serializable")


def _clean(obj):
    """Replace NaN and infinities with None so the output stays valid JSON."""
    if isinstance(obj, float) and (math.isnan(obj) or math.isinf(obj)):
        return None
    if isinstance(obj, dict):
        return {k: _clean(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_clean(v) for v in obj]
    return obj


def write_json(data: Dict[str, Any], path: Union[str, Path]) -> Path:
    """Write a summary as indented JSON.

    NaN and infinities become null.

    Args:
        data: JSON-ready dict; objects with ``to_dict``, numpy scalars and enums are converted
        path: Output file; parent directories are created

    Returns:
        The written path
    """
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text(json.dumps(_clean(data), indent=2, default=_json_default), encoding="utf-8")
    logger.info(f"Wrote {path}")
    return path


def frame_to_json(frame: pd.DataFrame) -> Dict[str, Dict[str, Optional[float]]]:
    """Nested {row: {column: value}} dict of a numeric frame.

    Args:
        frame: Numeric DataFrame such as a correlation matrix

    Returns:
        Dict keyed by string row and column labels; NaN cells become None
    """
    return _clean(
        {str(row): {str(col): float(frame.loc[row, col]) for col in frame.columns} for row in frame.index}
    )


def multi_seed_summary(summaries: Sequence[Dict[str, Any]], keys: Sequence[str]) -> Dict[str, Dict[str, float]]:
    """Mean, min and max of each final metric across seed replicas.

    Args:
        summaries: Per-seed summary dicts
        keys: Metric names to aggregate

    Returns:
        {metric: {"mean": ..., "min": ..., "max": ...}}
    """
    frame = pd.DataFrame([{k: s.get(k) for k in keys} for s in summaries], columns=list(keys))
    described = frame.agg(["mean", "min", "max"])
    return {k: {stat: float(described.loc[stat, k]) for stat in described.index} for k in keys}
