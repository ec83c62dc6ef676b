"""Unlabeled graphs of five intersection-graph classes, counted and sampled exactly."""

from ._igenum import (
    CLASSES,
    EmptyLanguageError,
    Enumerator,
    ResourceLimitError,
    alternate,
    count,
    cross_check,
    decode,
    height_profile,
    inverse_alternate,
    reverse_complement,
)

__all__ = [
    "CLASSES",
    "EmptyLanguageError",
    "Enumerator",
    "ResourceLimitError",
    "alternate",
    "count",
    "cross_check",
    "decode",
    "height_profile",
    "inverse_alternate",
    "reverse_complement",
]
