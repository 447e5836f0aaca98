# faht/core/schema.py
"""Stream schema, instances and the four fairness communities."""

import math
from dataclasses import dataclass
from enum import Enum
from functools import cached_property
from typing import Any, Dict, Optional, Sequence, Tuple, Union

from faht.core.errors import CommunityError, SchemaError

# Reserved symbol for a missing nominal value; implicitly part of every nominal domain.
MISSING = "?"

Value = Union[str, float, None]


class AttributeKind(str, Enum):
    NOMINAL = "nominal"
    NUMERIC = "numeric"


class Community(str, Enum):
    """Sensitive group crossed with class outcome."""

    DR = "DR"  # deprived, rejected
    DG = "DG"  # deprived, granted
    FR = "FR"  # favored, rejected
    FG = "FG"  # favored, granted

    @property
    def deprived(self) -> bool:
        return self in (Community.DR, Community.DG)

    @property
    def granted(self) -> bool:
        return self in (Community.DG, Community.FG)

    @classmethod
    def of(cls, deprived: bool, granted: bool) -> "Community":
        if deprived:
            return cls.DG if granted else cls.DR
        return cls.FG if granted else cls.FR


@dataclass(frozen=True)
class AttributeSpec:
    """One attribute: a nominal domain (declared order) or a numeric range."""

    name: str
    kind: AttributeKind
    index: int
    values: Tuple[str, ...] = ()

    def __post_init__(self):
        if not self.name:
            raise SchemaError("Attribute name must be non-empty")
        if self.kind is AttributeKind.NOMINAL:
            if not self.values:
                raise SchemaError(f"Nominal attribute '{self.name}' has an empty domain")
            if len(set(self.values)) != len(self.values):
                raise SchemaError(f"Nominal attribute '{self.name}' has duplicate values")
            if MISSING in self.values:
                raise SchemaError(
                    f"Nominal attribute '{self.name}' declares the reserved missing symbol '{MISSING}'"
                )
        elif self.values:
            raise SchemaError(f"Numeric attribute '{self.name}' cannot declare values")

    @property
    def is_nominal(self) -> bool:
        return self.kind is AttributeKind.NOMINAL

    @property
    def domain(self) -> Tuple[str, ...]:
        """Declared values plus the reserved missing symbol."""
        return self.values + (MISSING,) if self.is_nominal else ()

    def accepts(self, value: Value) -> bool:
        if self.is_nominal:
            return value == MISSING or value in self.values
        return value is None or isinstance(value, (int, float))

    def to_dict(self) -> Dict[str, Any]:
        data: Dict[str, Any] = {"name": self.name, "kind": self.kind.value, "index": self.index}
        if self.is_nominal:
            data["values"] = list(self.values)
        return data

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> "AttributeSpec":
        return cls(
            name=data["name"],
            kind=AttributeKind(data["kind"]),
            index=int(data["index"]),
            values=tuple(data.get("values", ())),
        )


def is_missing(value: Value) -> bool:
    """True for the nominal missing symbol, None, and NaN."""
    if value is None or value == MISSING:
        return True
    return isinstance(value, float) and math.isnan(value)


@dataclass(frozen=True)
class StreamSchema:
    """Predictor attributes plus the binary class and binary sensitive attribute."""

    attributes: Tuple[AttributeSpec, ...]
    class_attribute: AttributeSpec
    sensitive_attribute: str
    deprived_value: str
    positive_class: str

    def __post_init__(self):
        object.__setattr__(self, "attributes", tuple(self.attributes))
        for position, spec in enumerate(self.attributes):
            if spec.index != position:
                raise SchemaError(
                    f"Attribute '{spec.name}' has index {spec.index}, expected {position}"
                )
        names = [a.name for a in self.attributes]
        if len(set(names)) != len(names):
            raise SchemaError("Attribute names must be unique")
        if not self.class_attribute.is_nominal or len(self.class_attribute.values) != 2:
            raise SchemaError("Class attribute must be nominal with exactly 2 values")
        if self.positive_class not in self.class_attribute.values:
            raise SchemaError(
                f"Positive class '{self.positive_class}' not in {list(self.class_attribute.values)}"
            )
        if self.sensitive_attribute not in names:
            raise SchemaError(f"Sensitive attribute '{self.sensitive_attribute}' not in schema")
        sensitive = self.attributes[names.index(self.sensitive_attribute)]
        if not sensitive.is_nominal or len(sensitive.values) != 2:
            raise SchemaError(
                f"Sensitive attribute '{self.sensitive_attribute}' must be nominal and binary"
            )
        if self.deprived_value not in sensitive.values:
            raise SchemaError(
                f"Deprived value '{self.deprived_value}' not in {list(sensitive.values)}"
            )

    @cached_property
    def sensitive_index(self) -> int:
        return next(a.index for a in self.attributes if a.name == self.sensitive_attribute)

    @cached_property
    def favored_value(self) -> str:
        values = self.attributes[self.sensitive_index].values
        return values[1] if values[0] == self.deprived_value else values[0]

    @cached_property
    def negative_class(self) -> str:
        values = self.class_attribute.values
        return values[1] if values[0] == self.positive_class else values[0]

    @property
    def classes(self) -> Tuple[str, ...]:
        return self.class_attribute.values

    @property
    def n_attributes(self) -> int:
        return len(self.attributes)

    def attribute(self, name: str) -> AttributeSpec:
        for spec in self.attributes:
            if spec.name == name:
                return spec
        raise SchemaError(f"Unknown attribute '{name}'")

    def validate(self, instance: "Instance") -> None:
        """Raise SchemaError unless the instance fits this schema."""
        if len(instance.values) != self.n_attributes:
            raise SchemaError(
                f"Instance has {len(instance.values)} values, schema has {self.n_attributes}"
            )
        for spec, value in zip(self.attributes, instance.values):
            if not spec.accepts(value):
                raise SchemaError(f"Value {value!r} outside the domain of '{spec.name}'")
        if instance.label is not None and instance.label not in self.classes:
            raise SchemaError(f"Label {instance.label!r} not in {list(self.classes)}")

    def to_dict(self) -> Dict[str, Any]:
        return {
            "attributes": [a.to_dict() for a in self.attributes],
            "class_attribute": self.class_attribute.to_dict(),
            "sensitive_attribute": self.sensitive_attribute,
            "deprived_value": self.deprived_value,
            "positive_class": self.positive_class,
        }

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> "StreamSchema":
        return cls(
            attributes=tuple(AttributeSpec.from_dict(a) for a in data["attributes"]),
            class_attribute=AttributeSpec.from_dict(data["class_attribute"]),
            sensitive_attribute=data["sensitive_attribute"],
            deprived_value=data["deprived_value"],
            positive_class=data["positive_class"],
        )


@dataclass(frozen=True)
class Instance:
    """Attribute values in schema order plus an optional class label."""

    values: Tuple[Value, ...]
    label: Optional[str] = None

    def __post_init__(self):
        object.__setattr__(self, "values", tuple(self.values))


def community_of(instance: Instance, schema: StreamSchema) -> Community:
    """Cross the sensitive value with the label: deprived iff SA == s, granted iff label == positive."""
    if instance.label is None:
        raise CommunityError("Instance has no label")
    sensitive = instance.values[schema.sensitive_index]
    if is_missing(sensitive):
        raise CommunityError(f"Sensitive attribute '{schema.sensitive_attribute}' is missing")
    return Community.of(
        deprived=sensitive == schema.deprived_value,
        granted=instance.label == schema.positive_class,
    )


def make_schema(
    nominal: Sequence[Tuple[str, Sequence[str]]] = (),
    numeric: Sequence[str] = (),
    *,
    class_name: str = "class",
    classes: Sequence[str] = ("rejected", "granted"),
    sensitive_attribute: str,
    deprived_value: str,
    positive_class: str = "granted",
    order: Optional[Sequence[str]] = None,
) -> StreamSchema:
    """Build a schema from name/domain pairs; attribute order follows ``order`` if given."""
    domains = {name: tuple(values) for name, values in nominal}
    names = list(order) if order else [name for name, _ in nominal] + list(numeric)
    attributes = []
    for index, name in enumerate(names):
        if name in domains:
            spec = AttributeSpec(name, AttributeKind.NOMINAL, index, domains[name])
        elif name in numeric:
            spec = AttributeSpec(name, AttributeKind.NUMERIC, index)
        else:
            raise SchemaError(f"Attribute '{name}' has no declared kind")
        attributes.append(spec)
    return StreamSchema(
        attributes=tuple(attributes),
        class_attribute=AttributeSpec(class_name, AttributeKind.NOMINAL, len(attributes), tuple(classes)),
        sensitive_attribute=sensitive_attribute,
        deprived_value=deprived_value,
        positive_class=positive_class,
    )
