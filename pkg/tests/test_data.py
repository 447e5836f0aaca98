# tests/test_data.py

import pytest
from pydantic import ValidationError

from faht.core import MISSING, DataParseError, SchemaError
from faht.core.schema import AttributeKind
from faht.data import load, load_dataset_config, parse_dataset_config, write_csv
from faht.data.shuffle import SplitMix64, Xoshiro256StarStar, fisher_yates, shuffled
from faht.utils.cache import dataset_cache

BASE = {
    "source": "data.csv",
    "class_attribute": "class",
    "sensitive_attribute": "sex",
    "deprived_value": "Female",
    "positive_class": "yes",
}


def write_dataset(tmp_path, csv_text, extra=""):
    (tmp_path / "data.csv").write_text(csv_text, encoding="utf-8")
    conf = tmp_path / "data.conf"
    conf.write_text(
        "source=data.csv\nclass_attribute=class\nsensitive_attribute=sex\n"
        "deprived_value=Female\npositive_class=yes\nnumeric=age\n" + extra,
        encoding="utf-8",
    )
    return load_dataset_config(conf)


class TestDatasetConfig:
    """Test dataset config parsing."""

    def test_relative_source(self, tiny_dataset):
        config = load_dataset_config(tiny_dataset)
        assert config.source == tiny_dataset.parent / "tiny.csv"
        assert config.name == "tiny"
        assert config.numeric == ("age",)
        assert config.domains == {"sex": ("Female", "Male")}
        assert config.format == "csv"

    def test_prefixed_keys(self, tmp_path):
        digest = "ab" * 32
        config = parse_dataset_config(
            {
                **BASE,
                "format": "ARFF",
                "shuffle_seed": "7",
                "encode.race": "White:1, Black:0",
                "url": "https://example.org/data.csv",
                "url.test": "https://example.org/test.csv",
                "sha256.test": digest.upper(),
            },
            base_dir=tmp_path,
        )
        assert config.format == "arff"
        assert config.shuffle_seed == 7
        assert config.encodings == {"race": {"White": 1.0, "Black": 0.0}}
        assert config.urls == {"data": "https://example.org/data.csv", "test": "https://example.org/test.csv"}
        assert config.sha256 == {"test": digest}
        assert config.display_name == "data"

    def test_absolute_source_kept(self, tmp_path):
        source = tmp_path / "elsewhere.csv"
        config = parse_dataset_config({**BASE, "source": str(source)}, base_dir=tmp_path / "conf")
        assert config.source == source

    def test_empty_seed(self):
        assert parse_dataset_config({**BASE, "shuffle_seed": ""}).shuffle_seed is None

    @pytest.mark.parametrize(
        "override",
        [
            {"sensitive_attribute": "class"},
            {"numeric": "sex"},
            {"numeric": "age", "domain.age": "1,2"},
            {"format": "xlsx"},
            {"sha256.data": "not-a-digest"},
            {"positive_class": ""},
        ],
    )
    def test_invalid(self, override):
        with pytest.raises(ValidationError):
            parse_dataset_config({**BASE, **override})

    def test_bad_encoding(self):
        with pytest.raises(ValueError):
            parse_dataset_config({**BASE, "encode.race": "White"})

    def test_missing_file(self, tmp_path):
        with pytest.raises(FileNotFoundError):
            load_dataset_config(tmp_path / "nope.conf")


class TestLoadCsv:
    """Test CSV ingestion."""

    def test_tiny(self, tiny_dataset):
        dataset = load(load_dataset_config(tiny_dataset))
        schema = dataset.schema
        assert [a.name for a in schema.attributes] == ["age", "sex", "color"]
        assert schema.attribute("age").kind is AttributeKind.NUMERIC
        assert schema.attribute("sex").values == ("Female", "Male")
        assert schema.attribute("color").values == ("red", "blue")
        assert schema.classes == ("no", "yes")
        assert schema.class_attribute.index == 3
        assert len(dataset) == 6

    def test_missing_cells(self, tiny_dataset):
        instances = load(load_dataset_config(tiny_dataset)).instances
        assert instances[2].values == (None, "Male", "red")
        assert instances[3].values == (52.0, "Female", MISSING)
        assert instances[0].label == "no"

    def test_discrimination(self, tiny_dataset):
        # Female: 1 of 3 granted, Male: 2 of 3 granted
        assert load(load_dataset_config(tiny_dataset)).discrimination == pytest.approx(1 / 3)

    def test_seeded_shuffle(self, tiny_dataset):
        config = load_dataset_config(tiny_dataset)
        first = load(config, seed=3).instances
        second = load(config, seed=3).instances
        file_order = load(config).instances
        assert first == second
        assert sorted(first, key=repr) == sorted(file_order, key=repr)
        assert first == shuffled(file_order, 3)

    def test_parsed_once(self, tiny_dataset):
        config = load_dataset_config(tiny_dataset)
        load(config, seed=1)
        load(config, seed=2)
        assert dataset_cache.stats()["hits"] == 1
        assert dataset_cache.stats()["size"] == 1

    def test_round_trip(self, tiny_dataset, tmp_path):
        dataset = load(load_dataset_config(tiny_dataset))
        out = write_csv(dataset.schema, dataset.instances, tmp_path / "copy" / "data.csv")
        assert out.is_file()
        config = write_dataset(tmp_path / "copy", out.read_text(encoding="utf-8"), "domain.sex=Female,Male\n")
        reloaded = load(config)
        assert reloaded.instances == dataset.instances
        assert reloaded.schema == dataset.schema

    def test_float_precision_kept(self, tmp_path):
        config = write_dataset(tmp_path, "age,sex,class\n0.1,Female,yes\n33.333333333333336,Male,no\n")
        dataset = load(config)
        out = write_csv(dataset.schema, dataset.instances, tmp_path / "out" / "data.csv")
        again = load(write_dataset(tmp_path / "out", out.read_text(encoding="utf-8")))
        assert [i.values[0] for i in again.instances] == [0.1, 33.333333333333336]

    def test_ragged_row_reports_line(self, tmp_path):
        config = write_dataset(tmp_path, "age,sex,class\n25,Female,no\n30,Male,yes,extra\n")
        with pytest.raises(DataParseError) as info:
            load(config)
        assert info.value.line == 3
        assert "expected 3 fields, got 4" in str(info.value)

    def test_short_row_rejected(self, tmp_path):
        config = write_dataset(tmp_path, "age,sex,class\n25,Female,no\n30,Male\n26,Male,yes\n")
        with pytest.raises(DataParseError) as info:
            load(config)
        assert info.value.line == 3
        assert "expected 3 fields, got 2" in str(info.value)

    def test_line_numbers_count_blank_lines(self, tmp_path):
        config = write_dataset(tmp_path, "age,sex,class\n25,Female,no\n\nold,Male,yes\n")
        with pytest.raises(DataParseError) as info:
            load(config)
        assert info.value.line == 4

    def test_quoted_comma_is_one_field(self, tmp_path):
        config = write_dataset(tmp_path, "age,sex,city,class\n25,Female,\"Paris, FR\",no\n\n30,Male,Lyon,yes\n")
        dataset = load(config)
        assert [i.values[2] for i in dataset.instances] == ["Paris, FR", "Lyon"]
        assert [i.label for i in dataset.instances] == ["no", "yes"]

    def test_bad_number(self, tmp_path):
        config = write_dataset(tmp_path, "age,sex,class\n25,Female,no\nold,Male,yes\n")
        with pytest.raises(DataParseError) as info:
            load(config)
        assert info.value.line == 3

    def test_value_outside_declared_domain(self, tmp_path):
        config = write_dataset(tmp_path, "age,sex,class\n25,Other,no\n", "domain.sex=Female,Male\n")
        with pytest.raises(SchemaError):
            load(config)

    def test_unknown_class(self, tmp_path):
        config = write_dataset(tmp_path, "age,sex,class\n25,Female,no\n26,Male,yes\n27,Male,maybe\n", "domain.class=no,yes\n")
        with pytest.raises(SchemaError):
            load(config)

    def test_missing_label(self, tmp_path):
        config = write_dataset(tmp_path, "age,sex,class\n25,Female,no\n26,Male,yes\n27,Male,?\n")
        with pytest.raises(DataParseError):
            load(config)

    def test_missing_sensitive_value(self, tmp_path):
        config = write_dataset(tmp_path, "age,sex,class\n25,Female,no\n26,Male,yes\n27,?,no\n")
        with pytest.raises(DataParseError):
            load(config)

    def test_column_missing_from_file(self, tmp_path):
        config = write_dataset(tmp_path, "years,sex,class\n25,Female,no\n26,Male,yes\n")
        with pytest.raises(SchemaError):
            load(config)

    def test_missing_data_file(self, tmp_path):
        config = parse_dataset_config(BASE, base_dir=tmp_path)
        with pytest.raises(FileNotFoundError):
            load(config)


ARFF = """\
% tiny
@relation tiny
@attribute age numeric
@attribute sex {Female,Male}
@attribute class {no,yes}
@data
25,Female,no
38,Male,yes
?,Male,no
"""


class TestLoadArff:
    """Test ARFF ingestion."""

    def _config(self, tmp_path, text):
        (tmp_path / "data.arff").write_text(text, encoding="utf-8")
        return parse_dataset_config({**BASE, "source": "data.arff", "format": "arff"}, base_dir=tmp_path)

    def test_declared_types(self, tmp_path):
        dataset = load(self._config(tmp_path, ARFF))
        assert dataset.schema.attribute("age").kind is AttributeKind.NUMERIC
        assert dataset.schema.attribute("sex").values == ("Female", "Male")
        assert dataset.schema.classes == ("no", "yes")
        assert [i.values for i in dataset.instances] == [(25.0, "Female"), (38.0, "Male"), (None, "Male")]

    def test_malformed(self, tmp_path):
        with pytest.raises(DataParseError):
            load(self._config(tmp_path, ARFF.replace("@attribute age numeric", "@attribute age wibble")))


class TestShuffle:
    """Test the pinned shuffling PRNG."""

    def test_splitmix_vector(self):
        assert SplitMix64(0).next() == 0xE220A8397B1DCDAF

    def test_xoshiro_vector(self):
        rng = Xoshiro256StarStar(0)
        rng.s = [1, 2, 3, 4]
        assert [rng.next() for _ in range(4)] == [11520, 0, 1509978240, 1215971899390074240]

    def test_below_range(self):
        rng = Xoshiro256StarStar(42)
        draws = [rng.below(7) for _ in range(2000)]
        assert set(draws) == set(range(7))
        with pytest.raises(ValueError):
            rng.below(0)

    def test_permutation(self):
        items = list(range(100))
        result = fisher_yates(items, 5)
        assert result is items
        assert sorted(result) == list(range(100))
        assert result != list(range(100))

    def test_deterministic(self):
        assert shuffled(range(50), 9) == shuffled(range(50), 9)
        assert shuffled(range(50), 9) != shuffled(range(50), 10)

    def test_degenerate(self):
        assert shuffled([], 1) == []
        assert shuffled(["a"], 1) == ["a"]
