# faht/commands/options.py
"""Flags, run specs and the per-seed runner shared by the subcommands."""

import argparse
import logging
from concurrent.futures import ProcessPoolExecutor
from pathlib import Path
from typing import Any, Callable, Dict, List, Optional, Sequence, Tuple

from pydantic import BaseModel, ConfigDict, Field, ValidationError, field_validator

from faht.config import ExperimentDefaults
from faht.core.learner_config import CRITERION_ALIASES, KamiranVariant, LearnerConfig, NullSplitMode
from faht.data.dataset_config import DatasetConfig, load_dataset_config
from faht.data.loaders import LoadedDataset, load

logger = logging.getLogger("faht_cli")


class ConfigError(ValueError):
    """A dataset config or flag combination is invalid."""


def positive_int(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected an integer, got '{text}'") from None
    if value < 1:
        raise argparse.ArgumentTypeError(f"must be >= 1, got {value}")
    return value


def seed_list(text: str) -> Tuple[int, ...]:
    try:
        seeds = tuple(int(s) for s in text.split(",") if s.strip())
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got '{text}'") from None
    if not seeds:
        raise argparse.ArgumentTypeError("at least one seed is required")
    return seeds


class RunSpec(BaseModel):
    """Everything one experiment command needs besides the learner criterion."""

    model_config = ConfigDict(frozen=True)

    data: Path
    learner: LearnerConfig
    output_dir: Path
    seeds: Tuple[int, ...] = Field(..., min_length=1)
    snapshot_every: int = Field(1000, ge=1)
    eval_window: int = Field(1000, ge=1)
    workers: int = Field(1, ge=1)

    @field_validator("seeds")
    @classmethod
    def unique_seeds(cls, v):
        if len(set(v)) != len(v):
            raise ValueError(f"seeds must be distinct, got {list(v)}")
        return v


def add_data_arguments(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--data", required=True, type=Path, help="Dataset config file (key=value)")
    parser.add_argument("--seed", type=int, help="Shuffle seed (default: the config's shuffle_seed, else 0)")
    parser.add_argument("--seeds", type=seed_list, help="Comma-separated shuffle seeds, e.g. 1,2,3")
    parser.add_argument(
        "--workers",
        type=positive_int,
        default=ExperimentDefaults.get_workers(),
        help="Worker processes for multi-seed runs",
    )
    parser.add_argument(
        "--out", type=Path, default=ExperimentDefaults.get_output_dir(), help="Output directory"
    )
    parser.add_argument(
        "--snapshot-every",
        type=positive_int,
        default=ExperimentDefaults.get_snapshot_every(),
        help="Instances between metric snapshots (default: 1000)",
    )
    parser.add_argument(
        "--eval-window",
        type=positive_int,
        default=ExperimentDefaults.get_eval_window(),
        help="Records in the sliding evaluation window (default: 1000)",
    )


def add_learner_arguments(parser: argparse.ArgumentParser, criterion: bool = True) -> None:
    if criterion:
        parser.add_argument(
            "--criterion", choices=sorted(CRITERION_ALIASES), default="faht", help="Split criterion"
        )
    parser.add_argument(
        "--kamiran-variant",
        choices=[v.value for v in KamiranVariant],
        default=KamiranVariant.SUBTRACT.value,
        help="How the kamiran criterion combines class and sensitive gain",
    )
    parser.add_argument("--grace-period", type=positive_int, default=ExperimentDefaults.get_grace_period())
    parser.add_argument("--delta", type=float, default=ExperimentDefaults.get_delta())
    parser.add_argument("--tau", type=float, default=ExperimentDefaults.get_tau(), help="Tie threshold")
    parser.add_argument(
        "--null-split-mode",
        choices=[m.value for m in NullSplitMode],
        default=NullSplitMode.ZERO.value,
    )
    parser.add_argument("--numeric-bins", type=positive_int, default=ExperimentDefaults.get_numeric_bins())
    parser.add_argument(
        "--fg-noise-z",
        type=float,
        default=ExperimentDefaults.get_fg_noise_z(),
        help="Fairness gains within this many standard errors of zero count as zero (0: exact zero only)",
    )


def learner_config(args: argparse.Namespace, criterion: Optional[str] = None) -> LearnerConfig:
    try:
        return LearnerConfig(
            split_criterion=criterion or args.criterion,
            kamiran_variant=args.kamiran_variant,
            grace_period=args.grace_period,
            delta=args.delta,
            tie_threshold=args.tau,
            null_split_mode=args.null_split_mode,
            numeric_bins=args.numeric_bins,
            fg_noise_z=args.fg_noise_z,
        )
    except ValidationError as e:
        raise ConfigError(f"Invalid learner settings: {e}") from e


def read_dataset_config(path: Path) -> DatasetConfig:
    try:
        return load_dataset_config(path)
    except FileNotFoundError:
        raise
    except ValueError as e:
        raise ConfigError(f"{path}: {e}") from e


def run_spec(args: argparse.Namespace, learner: LearnerConfig, dataset: DatasetConfig) -> RunSpec:
    if args.seeds:
        seeds = args.seeds
    elif args.seed is not None:
        seeds = (args.seed,)
    else:
        seeds = (dataset.shuffle_seed if dataset.shuffle_seed is not None else 0,)
    try:
        return RunSpec(
            data=args.data,
            learner=learner,
            output_dir=args.out,
            seeds=seeds,
            snapshot_every=args.snapshot_every,
            eval_window=args.eval_window,
            workers=args.workers,
        )
    except ValidationError as e:
        raise ConfigError(f"Invalid run settings: {e}") from e


def load_for_seed(dataset: DatasetConfig, seed: int) -> LoadedDataset:
    return load(dataset, seed=seed)


def fan_out(worker: Callable[..., Dict[str, Any]], payloads: Sequence[tuple], workers: int) -> List[Dict[str, Any]]:
    """Run ``worker(*payload)`` per seed; results come back in payload order."""
    if workers <= 1 or len(payloads) <= 1:
        return [worker(*p) for p in payloads]
    logger.info(f"Running {len(payloads)} seeds on {min(workers, len(payloads))} worker processes")
    with ProcessPoolExecutor(max_workers=min(workers, len(payloads))) as pool:
        return list(pool.map(worker, *zip(*payloads)))


def print_banner(title: str) -> None:
    logger.info("=" * 80)
    logger.info(title)
    logger.info("=" * 80)
