# faht/commands/ensemble.py
"""`faht ensemble`: window ensembles of HT and FAHT trees, metrics per window."""

import argparse
import logging
from typing import Any, Dict, Sequence

from faht.commands.options import (
    RunSpec,
    add_data_arguments,
    add_learner_arguments,
    fan_out,
    learner_config,
    load_for_seed,
    positive_int,
    print_banner,
    read_dataset_config,
    run_spec,
)
from faht.config import ExperimentDefaults
from faht.core.learner_config import CRITERION_ALIASES, LearnerConfig
from faht.data.dataset_config import DatasetConfig
from faht.ensemble.window import WindowEnsemble
from faht.eval.prequential import prequential_run
from faht.eval.report import write_json, write_snapshots_csv

logger = logging.getLogger("faht_cli")


def ensemble_seed(
    spec: RunSpec,
    learners: Sequence[LearnerConfig],
    window: int,
    capacity: int,
    dataset: DatasetConfig,
    seed: int,
) -> Dict[str, Any]:
    data = load_for_seed(dataset, seed)
    summary: Dict[str, Any] = {
        "dataset": dataset.display_name,
        "seed": seed,
        "window": window,
        "capacity": capacity,
        "ensembles": {},
    }
    for config in learners:
        label = f"ensemble_{config.label}"
        ensemble = WindowEnsemble(data.schema, config, window_size=window, capacity=capacity)
        result = prequential_run(
            ensemble, data.instances, data.schema, snapshot_every=window, eval_window=window, label=label
        )
        write_snapshots_csv(result, spec.output_dir / f"{label}_W{window}_K{capacity}_seed{seed}.csv")
        final = result.final
        summary["ensembles"][label] = {
            "windows": len(result.snapshots),
            "members": len(ensemble),
            "accuracy": final.accuracy,
            "discrimination": final.discrimination,
            "node_count": final.node_count,
        }
    write_json(summary, spec.output_dir / f"ensemble_W{window}_K{capacity}_seed{seed}.json")
    return summary


def cmd_ensemble(args: argparse.Namespace) -> int:
    dataset = read_dataset_config(args.data)
    learners = [learner_config(args, criterion=c) for c in args.criteria]
    spec = run_spec(args, learners[0], dataset)
    print_banner(
        f"ENSEMBLE W={args.window} K={args.capacity} on {dataset.display_name} "
        f"criteria={args.criteria} seeds={list(spec.seeds)}"
    )
    results = fan_out(
        ensemble_seed,
        [(spec, learners, args.window, args.capacity, dataset, seed) for seed in spec.seeds],
        spec.workers,
    )
    for r in results:
        for label, s in r["ensembles"].items():
            print(
                f"{label} seed={r['seed']}: windows={s['windows']} accuracy={s['accuracy']:.4f} "
                f"discrimination={s['discrimination']:.4f} members={s['members']}"
            )
    return 0


def criteria_list(text: str):
    names = [c.strip() for c in text.split(",") if c.strip()]
    unknown = [c for c in names if c not in CRITERION_ALIASES]
    if not names or unknown:
        raise argparse.ArgumentTypeError(f"expected criteria from {sorted(CRITERION_ALIASES)}, got '{text}'")
    return names


def register_ensemble_command(subparsers) -> argparse.ArgumentParser:
    parser = subparsers.add_parser("ensemble", help="Sliding-window ensemble experiment")
    add_data_arguments(parser)
    add_learner_arguments(parser, criterion=False)
    parser.add_argument(
        "--criteria", type=criteria_list, default=["ht", "faht"], help="Base-learner criteria, e.g. ht,faht"
    )
    parser.add_argument(
        "--window", type=positive_int, default=ExperimentDefaults.get_window(), help="Window size W"
    )
    parser.add_argument(
        "--capacity", type=positive_int, default=ExperimentDefaults.get_capacity(), help="Queue capacity K"
    )
    parser.set_defaults(handler=cmd_ensemble)
    return parser
