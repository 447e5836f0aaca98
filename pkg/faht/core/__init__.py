# faht/core/__init__.py
"""Schema, instance and configuration types shared by every module."""

from .errors import (
    ChecksumError,
    CommunityError,
    DataParseError,
    InvariantError,
    PreconditionError,
    SchemaError,
    UndefinedStatisticError,
)
from .learner_config import KamiranVariant, LearnerConfig, NullSplitMode, SplitCriterion
from .schema import (
    MISSING,
    AttributeKind,
    AttributeSpec,
    Community,
    Instance,
    StreamSchema,
    community_of,
    is_missing,
    make_schema,
)

__all__ = [
    "MISSING",
    "AttributeKind",
    "AttributeSpec",
    "ChecksumError",
    "Community",
    "CommunityError",
    "DataParseError",
    "Instance",
    "InvariantError",
    "KamiranVariant",
    "LearnerConfig",
    "NullSplitMode",
    "PreconditionError",
    "SchemaError",
    "SplitCriterion",
    "StreamSchema",
    "UndefinedStatisticError",
    "community_of",
    "is_missing",
    "make_schema",
]
