# faht/commands/compare.py
"""`faht compare`: two criteria on the same shuffled stream."""

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
from faht.commands.run import summarize_run, train_and_evaluate
from faht.core.errors import UndefinedStatisticError
from faht.core.learner_config import CRITERION_ALIASES, LearnerConfig
from faht.data.dataset_config import DatasetConfig
from faht.eval.report import (
    compare_report,
    frame_to_json,
    multi_seed_summary,
    node_series,
    write_json,
    write_snapshots_csv,
)
from faht.eval.statistics import boundary_correlations, correlation_matrix, mcnemar, mcnemar_table
from faht.tree.export import write_tree

logger = logging.getLogger("faht_cli")


def compare_seed(spec: RunSpec, baseline: LearnerConfig, dataset: DatasetConfig, seed: int) -> Dict[str, Any]:
    data = load_for_seed(dataset, seed)
    schema = data.schema
    run_a, tree_a = train_and_evaluate(spec, data, baseline)
    run_b, tree_b = train_and_evaluate(spec, data, spec.learner)
    if run_a.label == run_b.label:
        run_b.label = f"{run_b.label}_b"

    report = compare_report(run_a, run_b)
    table = mcnemar_table(run_a.records, run_b.records, schema.positive_class, deprived=True)
    try:
        test = mcnemar(table)
        mcnemar_out = {"chi_squared": test.statistic, "df": test.df, "p_value": test.pvalue,
                       "p_below_0.001": test.significant_p001}
    except UndefinedStatisticError as e:
        logger.warning(f"seed {seed}: {e}")
        mcnemar_out = {"chi_squared": None, "df": 1, "p_value": None, "note": str(e)}
    mcnemar_out["table"] = table.to_dict()

    attributes: List[str] = []
    for event in tree_a.split_log + tree_b.split_log:
        if event.attribute not in attributes:
            attributes.append(event.attribute)
    if schema.sensitive_attribute not in attributes:
        attributes.insert(0, schema.sensitive_attribute)
    correlations = correlation_matrix(data.instances, schema, attributes, dataset.encodings)

    nodes = node_series(run_a, run_b)
    out = spec.output_dir
    out.mkdir(parents=True, exist_ok=True)
    stem = f"compare_{run_a.label}_vs_{run_b.label}_seed{seed}"
    nodes.to_csv(out / f"{stem}_nodes.csv", index=False)
    for run, tree in ((run_a, tree_a), (run_b, tree_b)):
        write_snapshots_csv(run, out / f"{run.label}_seed{seed}.csv")
        write_tree(tree, out / f"{run.label}_seed{seed}_tree.json")

    summary = {
        "dataset": dataset.display_name,
        "seed": seed,
        "report": report.to_dict(),
        "mcnemar_deprived": mcnemar_out,
        "boundary_correlations": {
            run_a.label: frame_to_json(boundary_correlations(run_a.records, schema)),
            run_b.label: frame_to_json(boundary_correlations(run_b.records, schema)),
        },
        "attribute_correlations": frame_to_json(correlations),
        "snapshots_b_not_larger": int(nodes["b_not_larger"].sum()),
        "snapshots": len(nodes),
        "runs": {
            run_a.label: summarize_run(run_a, tree_a, data, seed),
            run_b.label: summarize_run(run_b, tree_b, data, seed),
        },
    }
    write_json(summary, out / f"{stem}.json")
    summary["rendered"] = report.render()
    return summary


def cmd_compare(args: argparse.Namespace) -> int:
    dataset = read_dataset_config(args.data)
    baseline = learner_config(args, criterion=args.baseline)
    spec = run_spec(args, learner_config(args), dataset)
    print_banner(
        f"COMPARE {baseline.label} vs {spec.learner.label} on {dataset.display_name} seeds={list(spec.seeds)}"
    )

    results = fan_out(
        compare_seed, [(spec, baseline, dataset, seed) for seed in spec.seeds], spec.workers
    )
    for r in results:
        print(f"seed {r['seed']}")
        print(r.pop("rendered"))
        m = r["mcnemar_deprived"]
        if m["chi_squared"] is None:
            print("McNemar (deprived): undefined, no discordant predictions")
        else:
            flag = " (p < 0.001)" if m["p_below_0.001"] else ""
            print(f"McNemar (deprived): chi-squared={m['chi_squared']:.3f}, df=1{flag}")
        print(f"node count of B <= A at {r['snapshots_b_not_larger']}/{r['snapshots']} snapshots")

    if len(results) > 1:
        keys = ("accuracy", "discrimination", "node_count")
        per_learner = {}
        for label in results[0]["runs"]:
            per_learner[label] = multi_seed_summary([r["runs"][label] for r in results], keys)
        write_json(
            {"seeds": list(spec.seeds), "summary": per_learner},
            spec.output_dir / f"compare_{baseline.label}_vs_{spec.learner.label}_summary.json",
        )
    return 0


def register_compare_command(subparsers) -> argparse.ArgumentParser:
    parser = subparsers.add_parser("compare", help="Compare two split criteria on the same stream")
    add_data_arguments(parser)
    add_learner_arguments(parser)
    parser.add_argument(
        "--baseline", choices=sorted(CRITERION_ALIASES), default="ht", help="Criterion of learner A"
    )
    parser.set_defaults(handler=cmd_compare)
    return parser
