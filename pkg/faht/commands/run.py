# faht/commands/run.py
"""`faht run`: one learner, prequential evaluation, per-seed artifacts."""

import argparse
import logging
from typing import Any, Dict, List

from faht.commands.options import (
    RunSpec,
    add_data_arguments,
    add_learner_arguments,
    fan_out,
    learner_config,
    load_for_seed,
    print_banner,
    read_dataset_config,
    run_spec,
)
from faht.data.dataset_config import DatasetConfig
from faht.data.loaders import LoadedDataset
from faht.eval.prequential import PrequentialResult, prequential_run
from faht.eval.report import multi_seed_summary, write_json, write_snapshots_csv
from faht.tree.export import write_tree
from faht.tree.hoeffding import FahtTree

logger = logging.getLogger("faht_cli")

SUMMARY_KEYS = ("accuracy", "discrimination", "node_count", "window_accuracy", "window_discrimination")


def summarize_run(result: PrequentialResult, tree: FahtTree, data: LoadedDataset, seed: int) -> Dict[str, Any]:
    final = result.final
    stats = tree.model_stats()
    split_attributes: List[str] = []
    for event in tree.split_log:
        if event.attribute not in split_attributes:
            split_attributes.append(event.attribute)
    return {
        "dataset": data.config.display_name,
        "seed": seed,
        "learner": tree.config.label,
        "config": tree.config.model_dump(mode="json"),
        "instances": final.n,
        "dataset_discrimination": data.discrimination,
        **{key: getattr(final, key) for key in SUMMARY_KEYS if key != "node_count"},
        "node_count": stats.node_count,
        "leaf_count": stats.leaf_count,
        "depth": stats.depth,
        "root_attribute": tree.split_log[0].attribute if tree.split_log else None,
        "split_attributes": split_attributes,
        "first_split_instance": tree.split_log[0].instance_index if tree.split_log else None,
    }


def train_and_evaluate(spec: RunSpec, data: LoadedDataset, learner=None) -> tuple:
    tree = FahtTree(data.schema, learner or spec.learner)
    result = prequential_run(
        tree,
        data.instances,
        data.schema,
        snapshot_every=spec.snapshot_every,
        eval_window=spec.eval_window,
        label=tree.config.label,
    )
    return result, tree


def run_seed(spec: RunSpec, dataset: DatasetConfig, seed: int) -> Dict[str, Any]:
    data = load_for_seed(dataset, seed)
    result, tree = train_and_evaluate(spec, data)
    stem = f"{spec.learner.label}_seed{seed}"
    write_snapshots_csv(result, spec.output_dir / f"{stem}.csv")
    write_tree(tree, spec.output_dir / f"{stem}_tree.json")
    summary = summarize_run(result, tree, data, seed)
    write_json(summary, spec.output_dir / f"{stem}.json")
    return summary


def cmd_run(args: argparse.Namespace) -> int:
    dataset = read_dataset_config(args.data)
    spec = run_spec(args, learner_config(args), dataset)
    print_banner(f"RUN {spec.learner.label} on {dataset.display_name} seeds={list(spec.seeds)}")

    summaries = fan_out(run_seed, [(spec, dataset, seed) for seed in spec.seeds], spec.workers)
    for s in summaries:
        print(
            f"{s['learner']} seed={s['seed']}: accuracy={s['accuracy']:.4f} "
            f"discrimination={s['discrimination']:.4f} nodes={s['node_count']} "
            f"root={s['root_attribute']}"
        )
    if len(summaries) > 1:
        aggregate = multi_seed_summary(summaries, SUMMARY_KEYS)
        write_json(
            {"learner": spec.learner.label, "seeds": list(spec.seeds), "summary": aggregate, "runs": summaries},
            spec.output_dir / f"{spec.learner.label}_summary.json",
        )
        print(
            f"{spec.learner.label} mean over {len(summaries)} seeds: "
            f"accuracy={aggregate['accuracy']['mean']:.4f} "
            f"discrimination={aggregate['discrimination']['mean']:.4f}"
        )
    return 0


def register_run_command(subparsers) -> argparse.ArgumentParser:
    parser = subparsers.add_parser("run", help="Prequential run of one learner")
    add_data_arguments(parser)
    add_learner_arguments(parser)
    parser.set_defaults(handler=cmd_run)
    return parser
