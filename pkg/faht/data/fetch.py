# faht/data/fetch.py
"""Download the UCI income datasets and normalise them to header CSV."""

import hashlib
import io
import logging
import os
from dataclasses import dataclass, field
from pathlib import Path
from typing import Dict, List, Optional, Tuple

import pandas as pd
import requests

from faht.core.errors import ChecksumError
from faht.data.dataset_config import DatasetConfig

logger = logging.getLogger("faht_data")

ADULT_COLUMNS = [
    "age",
    "workclass",
    "fnlwgt",
    "education",
    "education-num",
    "marital-status",
    "occupation",
    "relationship",
    "race",
    "sex",
    "capital-gain",
    "capital-loss",
    "hours-per-week",
    "native-country",
    "class",
]

CENSUS_COLUMNS = [
    "age",
    "class_of_worker",
    "detailed_industry_recode",
    "detailed_occupation_recode",
    "education",
    "wage_per_hour",
    "enroll_in_edu_inst_last_wk",
    "marital_stat",
    "major_industry_code",
    "major_occupation_code",
    "race",
    "hispanic_origin",
    "sex",
    "member_of_a_labor_union",
    "reason_for_unemployment",
    "full_or_part_time_employment_stat",
    "capital_gains",
    "capital_losses",
    "dividends_from_stocks",
    "tax_filer_stat",
    "region_of_previous_residence",
    "state_of_previous_residence",
    "detailed_household_and_family_stat",
    "detailed_household_summary_in_household",
    "instance_weight",
    "migration_code_change_in_msa",
    "migration_code_change_in_reg",
    "migration_code_move_within_reg",
    "live_in_this_house_1_year_ago",
    "migration_prev_res_in_sunbelt",
    "num_persons_worked_for_employer",
    "family_members_under_18",
    "country_of_birth_father",
    "country_of_birth_mother",
    "country_of_birth_self",
    "citizenship",
    "own_business_or_self_employed",
    "fill_inc_questionnaire_for_veterans_admin",
    "veterans_benefits",
    "weeks_worked_in_year",
    "year",
    "income",
]


@dataclass(frozen=True)
class RawLayout:
    """How the raw UCI files of one dataset are laid out."""

    columns: List[str]
    parts: Tuple[str, ...]
    banner_parts: Tuple[str, ...] = ()  # parts whose first line is not data
    compressed: bool = False


LAYOUTS: Dict[str, RawLayout] = {
    "adult": RawLayout(ADULT_COLUMNS, ("train", "test"), banner_parts=("test",)),
    "census": RawLayout(CENSUS_COLUMNS, ("train", "test"), compressed=True),
}


def get_fetch_timeout() -> float:
    """HTTP timeout in seconds (default: 60s)."""
    return float(os.getenv("FAHT_FETCH_TIMEOUT", "60.0"))


def sha256_hex(content: bytes) -> str:
    return hashlib.sha256(content).hexdigest()


def verify(part: str, content: bytes, expected: Optional[str]) -> str:
    """Check a digest when one is pinned; returns the actual digest."""
    digest = sha256_hex(content)
    if expected is None:
        logger.warning(f"No sha256 pinned for '{part}'; downloaded digest is {digest}")
    elif digest != expected:
        raise ChecksumError(f"sha256 mismatch for '{part}': expected {expected}, got {digest}")
    else:
        logger.info(f"Verified sha256 of '{part}'")
    return digest


def normalise(content: bytes, layout: RawLayout, banner: bool = False) -> pd.DataFrame:
    """Raw comma-separated rows to a frame: whitespace stripped, trailing '.' dropped from labels."""
    frame = pd.read_csv(
        io.BytesIO(content),
        header=None,
        names=layout.columns,
        dtype=str,
        keep_default_na=False,
        skipinitialspace=True,
        skiprows=1 if banner else 0,
        compression="gzip" if layout.compressed else None,
        skip_blank_lines=True,
    )
    frame = frame.apply(lambda col: col.str.strip())
    label = layout.columns[-1]
    frame[label] = frame[label].str.rstrip(".").str.strip()
    frame = frame[frame[label] != ""]
    return frame


@dataclass
class FetchResult:
    path: Path
    rows: int
    digests: Dict[str, str] = field(default_factory=dict)


class DatasetFetcher:
    """Downloads every part named in a dataset config and writes ``config.source``."""

    def __init__(self, session: Optional[requests.Session] = None, timeout: Optional[float] = None):
        self.session = session or requests.Session()
        self.timeout = timeout or get_fetch_timeout()

    def download(self, url: str) -> bytes:
        logger.info(f"Downloading {url}")
        response = self.session.get(url, timeout=self.timeout)
        response.raise_for_status()
        return response.content

    def fetch(self, name: str, config: DatasetConfig, force: bool = False) -> FetchResult:
        if name not in LAYOUTS:
            raise ValueError(f"Unknown dataset '{name}', expected one of {sorted(LAYOUTS)}")
        layout = LAYOUTS[name]
        target = Path(config.source)
        if target.exists() and not force:
            logger.info(f"{target} already exists; use --force to download again")
            return FetchResult(target, -1)

        missing = [part for part in layout.parts if part not in config.urls]
        if missing:
            raise ValueError(f"Dataset config for '{name}' lacks url.{missing[0]}")

        frames = []
        digests = {}
        for part in layout.parts:
            content = self.download(config.urls[part])
            digests[part] = verify(part, content, config.sha256.get(part))
            frames.append(normalise(content, layout, banner=part in layout.banner_parts))

        combined = pd.concat(frames, ignore_index=True)
        target.parent.mkdir(parents=True, exist_ok=True)
        combined.to_csv(target, index=False)
        logger.info(f"Wrote {len(combined)} rows to {target}")
        return FetchResult(target, len(combined), digests)
