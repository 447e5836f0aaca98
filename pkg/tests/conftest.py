# tests/conftest.py

import os
from pathlib import Path

import pytest

from faht.config import dataset_conf_from_env
from faht.core.schema import Instance, make_schema
from faht.data.dataset_config import load_dataset_config
from faht.utils.cache import dataset_cache

REPO_ROOT = Path(__file__).resolve().parent.parent


@pytest.fixture(autouse=True)
def fresh_dataset_cache():
    """Each test starts with an empty parsed-dataset cache."""
    dataset_cache.clear()
    yield
    dataset_cache.clear()


@pytest.fixture
def clean_env(monkeypatch):
    """Clean environment variables for testing."""
    for key in list(os.environ.keys()):
        if key.startswith("FAHT_"):
            monkeypatch.delenv(key, raising=False)
    return monkeypatch


@pytest.fixture
def toy_schema():
    """sex (female deprived), color, age; classes rejected/granted."""
    return make_schema(
        nominal=[("sex", ("female", "male")), ("color", ("red", "blue"))],
        numeric=["age"],
        sensitive_attribute="sex",
        deprived_value="female",
        order=["sex", "color", "age"],
    )


@pytest.fixture
def make_instance():
    """Factory: make_instance("female", "red", 30.0, "granted")."""

    def _make(sex="male", color="red", age=30.0, label="rejected"):
        return Instance((sex, color, age), label)

    return _make


TINY_CSV = """\
age,sex,color,class
25,Female,red,no
38,Male,blue,yes
?,Male,red,no
52,Female,?,yes
41,Male,blue,yes
29,Female,red,no
"""

TINY_CONF = """\
name=tiny
source=tiny.csv
format=csv
class_attribute=class
sensitive_attribute=sex
deprived_value=Female
positive_class=yes
numeric=age
domain.sex=Female,Male
"""


@pytest.fixture
def tiny_dataset(tmp_path):
    """A six-row CSV and its config; returns the config path."""
    (tmp_path / "tiny.csv").write_text(TINY_CSV, encoding="utf-8")
    conf = tmp_path / "tiny.conf"
    conf.write_text(TINY_CONF, encoding="utf-8")
    return conf


def _dataset_conf(name: str):
    conf = dataset_conf_from_env(name) or REPO_ROOT / "datasets" / f"{name}.conf"
    if conf.is_file():
        config = load_dataset_config(conf)
        if Path(config.source).is_file():
            return config
    pytest.skip(f"{name} data not available (run `faht fetch {name}` or set FAHT_{name.upper()}_CONF)")


@pytest.fixture(scope="session")
def adult_config():
    return _dataset_conf("adult")


@pytest.fixture(scope="session")
def census_config():
    return _dataset_conf("census")
