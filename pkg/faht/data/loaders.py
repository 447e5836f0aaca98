# faht/data/loaders.py
"""CSV and ARFF ingestion into a schema plus an instance stream."""

import csv
import logging
import re
from dataclasses import dataclass
from pathlib import Path
from typing import Dict, Iterator, List, Optional, Sequence, Tuple, Union

import arff
import pandas as pd

from faht.core.errors import DataParseError, SchemaError
from faht.core.schema import (
    MISSING,
    AttributeKind,
    AttributeSpec,
    Instance,
    StreamSchema,
    community_of,
    is_missing,
)
from faht.data.dataset_config import DatasetConfig
from faht.data.shuffle import fisher_yates
from faht.metrics.measures import FairnessCounts, statistical_parity
from faht.utils.cache import dataset_cache, file_key

logger = logging.getLogger("faht_data")

_LINE_RE = re.compile(r"line (\d+)")


@dataclass
class RawTable:
    """Column names, optional declared domains (None = numeric) and string cells."""

    columns: List[str]
    declared: Dict[str, Optional[Tuple[str, ...]]]
    rows: List[List[Optional[str]]]
    first_data_line: int  # file line of rows[0]
    lines: Optional[List[int]] = None  # file line of each row when known

    def line_of(self, offset: int) -> int:
        if self.lines is not None:
            return self.lines[offset]
        return self.first_data_line + offset


@dataclass
class LoadedDataset:
    schema: StreamSchema
    instances: List[Instance]
    config: DatasetConfig

    @property
    def discrimination(self) -> float:
        return dataset_discrimination(self.instances, self.schema)

    def __iter__(self) -> Iterator[Instance]:
        return iter(self.instances)

    def __len__(self) -> int:
        return len(self.instances)


def _cell(value) -> Optional[str]:
    if value is None:
        return None
    if isinstance(value, float) and pd.isna(value):
        return None
    text = str(value).strip()
    return None if text in ("", MISSING) else text


def scan_field_counts(path: Path) -> List[int]:
    """File line of every data row.

    Raises DataParseError on the first row whose field count differs from the
    header's; pandas would pad a short row with missing cells.
    """
    with open(path, newline="", encoding="utf-8") as f:
        reader = csv.reader(f, skipinitialspace=True)
        header = next(reader, None)
        if header is None:
            raise DataParseError("file is empty", 1, str(path))
        expected = len(header)
        lines = []
        for fields in reader:
            if not fields or fields == [""]:
                continue
            if len(fields) != expected:
                n = reader.line_num
                raise DataParseError(f"line {n}: expected {expected} fields, got {len(fields)}", n, str(path))
            lines.append(reader.line_num)
    return lines


def read_csv_table(path: Path) -> RawTable:
    """Header CSV, "?" marks a missing value."""
    lines = scan_field_counts(path)
    try:
        frame = pd.read_csv(
            path,
            dtype=str,
            keep_default_na=False,
            skipinitialspace=True,
            skip_blank_lines=True,
        )
    except pd.errors.ParserError as e:
        match = _LINE_RE.search(str(e))
        raise DataParseError(str(e).strip(), int(match.group(1)) if match else None, str(path)) from e
    except pd.errors.EmptyDataError as e:
        raise DataParseError("file is empty", 1, str(path)) from e
    columns = [str(c).strip() for c in frame.columns]
    if len(set(columns)) != len(columns):
        raise DataParseError("duplicate column names in header", 1, str(path))
    rows = [[_cell(v) for v in row] for row in frame.itertuples(index=False, name=None)]
    if len(rows) != len(lines):
        raise DataParseError(f"{len(lines)} data rows in the file, {len(rows)} parsed", None, str(path))
    return RawTable(columns, {}, rows, first_data_line=lines[0] if lines else 2, lines=lines)


def read_arff_table(path: Path) -> RawTable:
    """@relation/@attribute/@data subset; sparse data is rejected."""
    text = path.read_text(encoding="utf-8")
    try:
        data = arff.loads(text)
    except arff.ArffException as e:
        line = getattr(e, "line", -1)
        raise DataParseError(str(e), line if line and line > 0 else None, str(path)) from e
    columns: List[str] = []
    declared: Dict[str, Optional[Tuple[str, ...]]] = {}
    for name, kind in data["attributes"]:
        columns.append(name)
        if isinstance(kind, (list, tuple)):
            declared[name] = tuple(str(v).strip() for v in kind)
        elif str(kind).upper() in ("NUMERIC", "REAL", "INTEGER"):
            declared[name] = None
        else:
            raise DataParseError(f"attribute '{name}' has unsupported type {kind}", None, str(path))
    rows_data = data["data"]
    if isinstance(rows_data, dict) or (rows_data and isinstance(rows_data[0], dict)):
        raise DataParseError("sparse ARFF data is not supported", None, str(path))
    rows = [[_cell(v) for v in row] for row in rows_data]
    first = next(
        (i + 1 for i, line in enumerate(text.splitlines()) if line.strip().lower().startswith("@data")),
        0,
    )
    return RawTable(columns, declared, rows, first_data_line=first + 1)


def _parse_table(config: DatasetConfig) -> RawTable:
    path = Path(config.source)
    if not path.is_file():
        raise FileNotFoundError(f"Dataset file not found: {path}")
    if config.format == "arff":
        return read_arff_table(path)
    return read_csv_table(path)


def build_schema(table: RawTable, config: DatasetConfig) -> StreamSchema:
    """Close every nominal domain: declared order first, else order of first appearance."""
    for name in (config.class_attribute, config.sensitive_attribute, *config.numeric, *config.domains):
        if name not in table.columns:
            raise SchemaError(f"Attribute '{name}' named in the dataset config is not in {config.source}")

    specs: List[AttributeSpec] = []
    class_spec: Optional[AttributeSpec] = None
    for position, name in enumerate(table.columns):
        numeric = name in config.numeric or (
            name in table.declared and table.declared[name] is None and name not in config.domains
        )
        if numeric:
            kind, values = AttributeKind.NUMERIC, ()
        elif name in config.domains:
            kind, values = AttributeKind.NOMINAL, config.domains[name]
        elif table.declared.get(name):
            kind, values = AttributeKind.NOMINAL, table.declared[name]
        else:
            seen: Dict[str, None] = {}
            for row in table.rows:
                if row[position] is not None:
                    seen.setdefault(row[position])
            kind, values = AttributeKind.NOMINAL, tuple(seen)
        if name == config.class_attribute:
            class_spec = AttributeSpec(name, kind, len(table.columns) - 1, values)
        else:
            specs.append(AttributeSpec(name, kind, len(specs), values))

    return StreamSchema(
        attributes=tuple(specs),
        class_attribute=class_spec,
        sensitive_attribute=config.sensitive_attribute,
        deprived_value=config.deprived_value,
        positive_class=config.positive_class,
    )


def build_instances(table: RawTable, schema: StreamSchema, config: DatasetConfig) -> List[Instance]:
    positions = {name: i for i, name in enumerate(table.columns)}
    class_pos = positions[schema.class_attribute.name]
    plan = [(spec, positions[spec.name]) for spec in schema.attributes]
    domains = {spec.name: frozenset(spec.values) for spec in schema.attributes if spec.is_nominal}
    labels = frozenset(schema.classes)
    path = str(config.source)

    instances = []
    for offset, row in enumerate(table.rows):
        line = table.line_of(offset)
        if len(row) != len(table.columns):
            raise DataParseError(f"expected {len(table.columns)} fields, got {len(row)}", line, path)
        values = []
        for spec, pos in plan:
            cell = row[pos]
            if spec.is_nominal:
                if cell is None:
                    values.append(MISSING)
                elif cell in domains[spec.name]:
                    values.append(cell)
                else:
                    raise SchemaError(f"{path}:{line}: value '{cell}' not in the domain of '{spec.name}'")
            elif cell is None:
                values.append(None)
            else:
                try:
                    values.append(float(cell))
                except ValueError:
                    raise DataParseError(f"'{cell}' is not a number ({spec.name})", line, path) from None
        label = row[class_pos]
        if label is None:
            raise DataParseError("missing class label", line, path)
        if label not in labels:
            raise SchemaError(f"{path}:{line}: class '{label}' not in {list(schema.classes)}")
        if is_missing(values[schema.sensitive_index]):
            raise DataParseError(f"missing sensitive attribute '{schema.sensitive_attribute}'", line, path)
        instances.append(Instance(tuple(values), label))
    return instances


def _parse_dataset(config: DatasetConfig) -> Tuple[StreamSchema, Tuple[Instance, ...]]:
    key = (file_key(config.source), config.model_dump_json())
    hit = dataset_cache.get(key)
    if hit is not None:
        return hit
    table = _parse_table(config)
    schema = build_schema(table, config)
    parsed = (schema, tuple(build_instances(table, schema, config)))
    dataset_cache.set(key, parsed)
    return parsed


def load(config: DatasetConfig, seed: Optional[int] = None) -> LoadedDataset:
    """Parse (or reuse) a dataset and shuffle it with ``seed`` or the config's seed.

    File order is kept when neither is given.
    """
    schema, parsed = _parse_dataset(config)
    instances = list(parsed)
    seed = config.shuffle_seed if seed is None else seed
    if seed is not None:
        fisher_yates(instances, seed)
    dataset = LoadedDataset(schema, instances, config)
    logger.info(
        f"Loaded {config.display_name}: {len(instances)} instances, "
        f"{schema.n_attributes} attributes, discrimination={dataset.discrimination:.4f}, "
        f"seed={seed}"
    )
    return dataset


def dataset_discrimination(instances: Sequence[Instance], schema: StreamSchema) -> float:
    counts = FairnessCounts()
    for instance in instances:
        counts.add(community_of(instance, schema))
    return statistical_parity(counts)


def _format_value(value) -> str:
    if value is None:
        return MISSING
    if isinstance(value, float):
        return repr(value)
    return str(value)


def write_csv(schema: StreamSchema, instances: Sequence[Instance], path: Union[str, Path]) -> Path:
    """Header CSV readable by ``read_csv_table``; floats keep full precision."""
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    columns = [a.name for a in schema.attributes] + [schema.class_attribute.name]
    frame = pd.DataFrame(
        [[_format_value(v) for v in inst.values] + [inst.label] for inst in instances],
        columns=columns,
    )
    frame.to_csv(path, index=False, quoting=csv.QUOTE_MINIMAL)
    return path
