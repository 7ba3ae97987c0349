"""Rough approximations of relations between two universes."""

from ._tworough import (
    CapExceededError,
    ClassificationError,
    DimensionError,
    UnknownLabelError,
    ParseError,
    Relation,
    SideMismatchError,
    TwoRoughError,
    UndefinedMeasureError,
    boundary,
    classify,
    find_witness,
    lower,
    neighbors_report,
    rough_type,
    type_table,
    upper,
    verify_relation,
)

__all__ = [
    "CapExceededError",
    "ClassificationError",
    "DimensionError",
    "UnknownLabelError",
    "ParseError",
    "Relation",
    "SideMismatchError",
    "TwoRoughError",
    "UndefinedMeasureError",
    "boundary",
    "classify",
    "find_witness",
    "lower",
    "neighbors_report",
    "rough_type",
    "type_table",
    "upper",
    "verify_relation",
]
