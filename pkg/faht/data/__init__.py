# faht/data/__init__.py
"""Dataset configs, loaders, shuffling, synthetic streams and downloads."""

from .dataset_config import DatasetConfig, load_dataset_config, parse_dataset_config
from .loaders import LoadedDataset, dataset_discrimination, load, write_csv
from .shuffle import fisher_yates, shuffled
from .synthetic import DriftPoint, SyntheticStreamSpec, generate, synthetic_schema

__all__ = [
    "DatasetConfig",
    "DriftPoint",
    "LoadedDataset",
    "SyntheticStreamSpec",
    "dataset_discrimination",
    "fisher_yates",
    "generate",
    "load",
    "load_dataset_config",
    "parse_dataset_config",
    "shuffled",
    "synthetic_schema",
    "write_csv",
]
