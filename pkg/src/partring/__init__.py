"""Partitions as a semiring: counting, factoring, graph and modular models."""

from partring.partition import (
    ONE,
    ZERO,
    Partition,
    add,
    canonicalize,
    embed,
    format_partition,
    length,
    mul,
    norm,
    parse_partition,
    partitions_of,
    power,
)

__version__ = "0.1.0"
