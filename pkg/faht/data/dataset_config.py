# faht/data/dataset_config.py
"""Declarative dataset configuration files.

A dataset config uses the dotenv ``KEY=value`` grammar::

    source=adult.csv
    format=csv
    class_attribute=class
    sensitive_attribute=sex
    deprived_value=Female
    positive_class=>50K
    shuffle_seed=7
    numeric=age,fnlwgt,hours-per-week
    domain.sex=Female,Male
    encode.race=White:1,Black:0
    url.data=https://example.org/adult.data
    sha256.data=...

``domain.<attr>`` fixes the order of a nominal domain; ``encode.<attr>``
overrides the ordinal codes used for correlation tables. A relative
``source`` is resolved against the config file's directory.
"""

import logging
from pathlib import Path
from typing import Dict, Literal, Optional, Tuple, Union

from dotenv import dotenv_values
from pydantic import BaseModel, ConfigDict, Field, ValidationError, field_validator, model_validator

logger = logging.getLogger("faht_data")

_LIST_KEYS = ("numeric",)
_PREFIXES = ("domain.", "encode.", "url.", "sha256.")


def _split_list(value: str) -> Tuple[str, ...]:
    return tuple(item.strip() for item in value.split(",") if item.strip())


class DatasetConfig(BaseModel):
    """Where a dataset lives and how its schema and fairness roles are declared."""

    model_config = ConfigDict(frozen=True)

    name: Optional[str] = None
    source: Path
    format: Literal["csv", "arff"] = "csv"
    class_attribute: str = Field(..., min_length=1)
    sensitive_attribute: str = Field(..., min_length=1)
    deprived_value: str = Field(..., min_length=1)
    positive_class: str = Field(..., min_length=1)
    shuffle_seed: Optional[int] = None
    numeric: Tuple[str, ...] = ()
    domains: Dict[str, Tuple[str, ...]] = Field(default_factory=dict)
    encodings: Dict[str, Dict[str, float]] = Field(default_factory=dict)
    urls: Dict[str, str] = Field(default_factory=dict)
    sha256: Dict[str, str] = Field(default_factory=dict)

    @field_validator("format", mode="before")
    @classmethod
    def normalise_format(cls, v):
        return v.strip().lower() if isinstance(v, str) else v

    @field_validator("shuffle_seed", mode="before")
    @classmethod
    def empty_seed(cls, v):
        if isinstance(v, str) and not v.strip():
            return None
        return v

    @field_validator("sha256")
    @classmethod
    def check_digests(cls, v: Dict[str, str]) -> Dict[str, str]:
        for part, digest in v.items():
            if len(digest) != 64 or any(ch not in "0123456789abcdef" for ch in digest.lower()):
                raise ValueError(f"sha256 for '{part}' is not a hex SHA-256 digest")
        return {part: digest.lower() for part, digest in v.items()}

    @model_validator(mode="after")
    def check_roles(self) -> "DatasetConfig":
        if self.class_attribute == self.sensitive_attribute:
            raise ValueError("class_attribute and sensitive_attribute must differ")
        if self.class_attribute in self.numeric or self.sensitive_attribute in self.numeric:
            raise ValueError("class and sensitive attributes must be nominal")
        overlap = set(self.numeric) & set(self.domains)
        if overlap:
            raise ValueError(f"Attributes declared both numeric and nominal: {sorted(overlap)}")
        return self

    @property
    def display_name(self) -> str:
        return self.name or self.source.stem


def parse_dataset_config(raw: Dict[str, Optional[str]], base_dir: Optional[Path] = None) -> DatasetConfig:
    """Build a DatasetConfig from flat key/value pairs."""
    data: Dict[str, object] = {"domains": {}, "encodings": {}, "urls": {}, "sha256": {}}
    for key, value in raw.items():
        value = (value or "").strip()
        if key.startswith("domain."):
            data["domains"][key[len("domain."):]] = _split_list(value)
        elif key.startswith("encode."):
            codes = {}
            for item in _split_list(value):
                label, _, code = item.rpartition(":")
                if not label:
                    raise ValueError(f"{key}: expected value:code pairs, got '{item}'")
                codes[label] = float(code)
            data["encodings"][key[len("encode."):]] = codes
        elif key.startswith("url."):
            data["urls"][key[len("url."):]] = value
        elif key.startswith("sha256."):
            data["sha256"][key[len("sha256."):]] = value
        elif key == "url":
            data["urls"]["data"] = value
        elif key == "sha256":
            if value:
                data["sha256"]["data"] = value
        elif key in _LIST_KEYS:
            data[key] = _split_list(value)
        else:
            data[key] = value

    source = data.get("source")
    if source and base_dir is not None and not Path(source).is_absolute():
        data["source"] = base_dir / source
    return DatasetConfig(**data)


def load_dataset_config(path: Union[str, Path]) -> DatasetConfig:
    """Read a dataset config file.

    Raises FileNotFoundError for a missing file and pydantic's ValidationError
    for invalid contents.
    """
    path = Path(path)
    if not path.is_file():
        raise FileNotFoundError(f"Dataset config not found: {path}")
    raw = dotenv_values(path)
    config = parse_dataset_config(raw, base_dir=path.parent)
    logger.debug(f"Loaded dataset config {path}: source={config.source} format={config.format}")
    return config


__all__ = ["DatasetConfig", "ValidationError", "load_dataset_config", "parse_dataset_config"]
