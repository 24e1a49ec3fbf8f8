"""Four independent engines for the partition function p(n), plus diagnostics.

All engines return a :class:`PartitionTable` holding p(0..n_max) exactly.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from partring.numtheory import pentagonal_terms, sigma_table
from partring.series import TruncatedSeries, euler_q, mul_geometric, series_reciprocal


class ConsistencyError(ArithmeticError):
    """An internal cross-check failed (non-exact division, engine disagreement)."""


@dataclass(frozen=True)
class PartitionTable:
    values: tuple[int, ...]
    engine: str

    def __post_init__(self):
        if not self.values or self.values[0] != 1:
            raise ValueError("a partition table must start with p(0) = 1")

    @property
    def n_max(self) -> int:
        return len(self.values) - 1

    def __len__(self) -> int:
        return len(self.values)

    def __getitem__(self, n: int) -> int:
        if n < 0:
            return 0
        if n > self.n_max:
            raise IndexError(f"p({n}) is beyond this table (n_max={self.n_max})")
        return self.values[n]


def p_convolution(n_max: int) -> PartitionTable:
    """p(n) = sum_{k=1..n} sigma(k) p(n-k) / n, with every division checked exact."""
    sig = sigma_table(n_max)
    p = [1] + [0] * n_max
    for n in range(1, n_max + 1):
        total = 0
        for k in range(1, n + 1):
            total += sig[k] * p[n - k]
        q, r = divmod(total, n)
        if r:
            raise ConsistencyError(f"sum sigma(k) p({n}-k) = {total} is not divisible by {n}")
        p[n] = q
    return PartitionTable(tuple(p), "conv")


def p_pentagonal(n_max: int) -> PartitionTable:
    pent = pentagonal_terms(max(n_max, 1)).terms
    p = [1] + [0] * n_max
    for n in range(1, n_max + 1):
        acc = 0
        for t in pent:
            m = n - t.value
            if m < 0:
                break
            acc += t.sign * p[m]
        p[n] = acc
    return PartitionTable(tuple(p), "pent")


def p_product(n_max: int) -> PartitionTable:
    """Coefficients of prod_{j=1..n_max} 1/(1 - x^j)."""
    s = TruncatedSeries.one(n_max)
    for j in range(1, n_max + 1):
        s = mul_geometric(s, j)
    return PartitionTable(s.coeffs, "prod")


def p_reciprocal(n_max: int) -> PartitionTable:
    """Coefficients of 1/Q(z), with Q the Euler product prod (1 - z^k)."""
    return PartitionTable(series_reciprocal(euler_q(n_max)).coeffs, "recip")


ENGINES = {
    "conv": p_convolution,
    "pent": p_pentagonal,
    "prod": p_product,
    "recip": p_reciprocal,
}


def partition_table(n_max: int, engine: str = "pent") -> PartitionTable:
    if n_max < 0:
        raise ValueError(f"n_max must be nonnegative, got {n_max}")
    try:
        build = ENGINES[engine]
    except KeyError:
        raise ValueError(f"unknown engine {engine!r}; choose from {sorted(ENGINES)}") from None
    return build(n_max)


def first_disagreement(tables: list[PartitionTable]) -> int | None:
    """Smallest n where the tables differ, or None when all agree."""
    ref = tables[0]
    for t in tables[1:]:
        if len(t) != len(ref):
            return min(len(t), len(ref))
    for n in range(len(ref)):
        if any(t.values[n] != ref.values[n] for t in tables[1:]):
            return n
    return None


def stick_count(f: int, n: int, table: PartitionTable) -> int:
    """How often the part ``f`` occurs, with multiplicity, across all partitions of n."""
    if f < 1:
        raise ValueError(f"part size must be >= 1, got {f}")
    if n < 0:
        raise ValueError(f"n must be nonnegative, got {n}")
    if n > table.n_max:
        raise ValueError(f"table too short: need p({n}), have n_max={table.n_max}")
    return sum(table[m] for m in range(n - f, -1, -f))


def log_bigint(x: int) -> float:
    """Natural log of a positive integer from its bit length and top 64 bits."""
    if x <= 0:
        raise ValueError("log of a nonpositive integer")
    shift = max(0, x.bit_length() - 64)
    return math.log(x >> shift) + shift * math.log(2)


def hr_log_estimate(n: int) -> float:
    """log of R(n) = exp(pi sqrt(2n/3)) / (4 n sqrt 3)."""
    return math.pi * math.sqrt(2 * n / 3) - math.log(4 * n * math.sqrt(3))


@dataclass(frozen=True)
class AsymptoticReport:
    n: int
    p_of_n: int
    hr_estimate: float
    ratio: float
    nth_root: float


def hardy_ramanujan(n: int, table: PartitionTable) -> AsymptoticReport:
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    pn = table[n]
    log_p = log_bigint(pn)
    log_r = hr_log_estimate(n)
    try:
        r = math.exp(log_r)
    except OverflowError:
        r = math.inf
    return AsymptoticReport(
        n=n,
        p_of_n=pn,
        hr_estimate=r,
        ratio=math.exp(log_p - log_r),
        nth_root=math.exp(log_p / n),
    )
