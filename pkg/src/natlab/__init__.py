"""Exact enumeration and bijections for non-ambiguous trees."""

from .core import (
    CodePair,
    LabeledBinaryTree,
    NonAmbiguousTree,
    count_nats,
    decode,
    encode,
    enumerate_nats,
    is_compatible,
    underlying_tree,
    validate_nat,
)
from .hooks import knuth_hook_count, left_right_posets, linear_extensions, na_count

__all__ = [
    "CodePair",
    "LabeledBinaryTree",
    "NonAmbiguousTree",
    "count_nats",
    "decode",
    "encode",
    "enumerate_nats",
    "is_compatible",
    "knuth_hook_count",
    "left_right_posets",
    "linear_extensions",
    "na_count",
    "underlying_tree",
    "validate_nat",
]
