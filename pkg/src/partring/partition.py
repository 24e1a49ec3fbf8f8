"""The partition semiring: concatenation as addition, pairwise products as multiplication.

A :class:`Partition` is kept in canonical form, its parts sorted ascending,
so equality of values is equality of part tuples.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterable, Iterator

# Parts stay machine sized; foiling that exceeds this is treated as overflow.
MAX_PART = 2**63 - 1


@dataclass(frozen=True, order=True)
class Partition:
    parts: tuple[int, ...] = ()

    def __post_init__(self):
        parts = tuple(self.parts)
        for x in parts:
            if not isinstance(x, int) or isinstance(x, bool):
                raise TypeError(f"parts must be integers, got {x!r}")
            if x < 1:
                raise ValueError(f"parts must be positive, got {x}")
            if x > MAX_PART:
                raise OverflowError(f"part {x} exceeds {MAX_PART}")
        object.__setattr__(self, "parts", tuple(sorted(parts)))

    def __add__(self, other: Partition) -> Partition:
        return add(self, other)

    def __mul__(self, other: Partition) -> Partition:
        return mul(self, other)

    def __pow__(self, e: int) -> Partition:
        return power(self, e)

    def __len__(self) -> int:
        return len(self.parts)

    def __iter__(self) -> Iterator[int]:
        return iter(self.parts)

    def __str__(self) -> str:
        return format_partition(self)

    @property
    def norm(self) -> int:
        return sum(self.parts)

    @property
    def length(self) -> int:
        return len(self.parts)


ZERO = Partition(())
ONE = Partition((1,))


def canonicalize(raw: Iterable[int]) -> Partition:
    return Partition(tuple(raw))


def add(a: Partition, b: Partition) -> Partition:
    return Partition(a.parts + b.parts)


def mul(a: Partition, b: Partition) -> Partition:
    prods = []
    for x in a.parts:
        for y in b.parts:
            z = x * y
            if z > MAX_PART:
                raise OverflowError(f"part product {x}*{y} exceeds {MAX_PART}")
            prods.append(z)
    return Partition(tuple(prods))


def norm(a: Partition) -> int:
    return sum(a.parts)


def length(a: Partition) -> int:
    return len(a.parts)


def embed(m: int) -> Partition:
    """The integer m as the partition (1, ..., 1) with m parts."""
    if m < 0:
        raise ValueError(f"only nonnegative integers embed, got {m}")
    return Partition((1,) * m)


def power(a: Partition, e: int) -> Partition:
    """``a ** e`` by square-and-multiply; the result has ``len(a) ** e`` parts."""
    if e < 0:
        raise ValueError(f"exponent must be nonnegative, got {e}")
    result = ONE
    base = a
    while e:
        if e & 1:
            result = mul(result, base)
        e >>= 1
        if e:
            base = mul(base, base)
    return result


def format_partition(a: Partition) -> str:
    return "[" + ",".join(str(x) for x in a.parts) + "]"


_LIST_RE = re.compile(r"\s*\[\s*(?:(\d+)\s*((?:,\s*\d+\s*)*))?\]\s*")


def parse_partition(text: str) -> Partition:
    """Parse bracket syntax ``[a,b,c]`` (or ``[]``) into canonical form."""
    m = _LIST_RE.fullmatch(text)
    if m is None:
        raise ValueError(f"malformed partition literal: {text!r}")
    inner = text.strip()[1:-1]
    parts = [int(tok) for tok in inner.split(",")] if inner.strip() else []
    return Partition(tuple(parts))


def partitions_of(n: int) -> Iterator[Partition]:
    """All partitions of n, largest part first in descending (reverse lexicographic) order.

    Reading each partition's parts from largest to smallest, rows come out as
    (n), (n-1, 1), (n-2, 2), (n-2, 1, 1), ...
    """
    if n < 0:
        raise ValueError(f"n must be nonnegative, got {n}")
    if n == 0:
        yield ZERO
        return
    # standard successor on nonincreasing sequences
    a = [n]
    while True:
        yield Partition(tuple(a))
        ones = 0
        while a and a[-1] == 1:
            a.pop()
            ones += 1
        if not a:
            return
        k = a.pop() - 1
        a.append(k)
        rest = ones + 1
        while rest > k:
            a.append(k)
            rest -= k
        if rest:
            a.append(rest)
