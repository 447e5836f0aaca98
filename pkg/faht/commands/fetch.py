# faht/commands/fetch.py
"""`faht fetch`: download and normalise a UCI income dataset."""

import argparse
import logging
from pathlib import Path

from faht.commands.options import print_banner, read_dataset_config
from faht.config import dataset_conf_from_env
from faht.data.fetch import LAYOUTS, DatasetFetcher

logger = logging.getLogger("faht_cli")


def cmd_fetch(args: argparse.Namespace) -> int:
    conf = args.config or dataset_conf_from_env(args.dataset) or Path("datasets") / f"{args.dataset}.conf"
    dataset = read_dataset_config(conf)
    print_banner(f"FETCH {args.dataset} -> {dataset.source}")
    result = DatasetFetcher().fetch(args.dataset, dataset, force=args.force)
    if result.rows >= 0:
        print(f"{args.dataset}: {result.rows} rows written to {result.path}")
        for part, digest in result.digests.items():
            print(f"  sha256.{part}={digest}")
    else:
        print(f"{args.dataset}: {result.path} already present")
    return 0


def register_fetch_command(subparsers) -> argparse.ArgumentParser:
    parser = subparsers.add_parser("fetch", help="Download a dataset named in datasets/*.conf")
    parser.add_argument("dataset", choices=sorted(LAYOUTS))
    parser.add_argument("--config", type=Path, help="Dataset config (default: FAHT_<DATASET>_CONF or datasets/<dataset>.conf)")
    parser.add_argument("--force", action="store_true", help="Download even if the CSV exists")
    parser.set_defaults(handler=cmd_fetch)
    return parser
