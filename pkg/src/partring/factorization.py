"""Irreducibility, divisors and common divisors in the partition semiring.

Division is cheap once a candidate left factor ``x`` is fixed: the smallest
remaining part of the target is always ``min(x) * (smallest unused part of y)``,
so ``y`` is peeled off greedily. The search therefore only enumerates left
factors, pruned by the norm and length homomorphisms.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterator

from partring.numtheory import is_prime
from partring.partition import ONE, Partition, partitions_of
from partring.partition_count import ConsistencyError, p_pentagonal


@dataclass(frozen=True)
class FactorWitness:
    left: Partition
    right: Partition


@dataclass(frozen=True)
class CensusRow:
    weight: int
    total: int
    primes: int
    by_sufficient_condition: int
    extra: int


@dataclass(frozen=True)
class CommonDivisors:
    all: frozenset[Partition]
    maximal: frozenset[Partition]
    representative: Partition


def is_additive_prime(a: Partition) -> bool:
    return len(a) == 1


def is_unit(a: Partition) -> bool:
    return a == ONE


def sufficient_condition(a: Partition) -> bool:
    return is_prime(a.norm) or is_prime(len(a))


def divide(a: Partition, x: Partition) -> Partition | None:
    """The ``y`` with ``x * y == a``, or None when x does not divide a."""
    if not x.parts:
        return None
    if not a.parts:
        return Partition()
    if len(a) % len(x):
        return None
    left = Counter(a.parts)
    x0 = x.parts[0]
    ys = []
    for _ in range(len(a) // len(x)):
        smallest = min(left)
        if smallest % x0:
            return None
        y = smallest // x0
        for xi in x.parts:
            z = xi * y
            if left[z] == 0:
                return None
            left[z] -= 1
            if left[z] == 0:
                del left[z]
        ys.append(y)
    return Partition(tuple(ys))


def _sub_multisets(pool: Counter, size: int) -> Iterator[tuple[int, ...]]:
    """Distinct sub-multisets of ``pool`` with ``size`` elements, ascending values."""
    keys = sorted(pool)

    def rec(i: int, need: int, acc: list[int]):
        if need == 0:
            yield tuple(acc)
            return
        if i == len(keys):
            return
        v = keys[i]
        for c in range(min(pool[v], need), -1, -1):
            acc.extend([v] * c)
            yield from rec(i + 1, need - c, acc)
            del acc[len(acc) - c:]

    yield from rec(0, size, [])


def _left_factors(a: Partition) -> Iterator[Partition]:
    """Every candidate left factor of ``a`` (units included), shortest first.

    With y1 = min(y) and x1 = min(x) we need x1 * y1 = min(a), and x * y1 must
    sit inside a as a sub-multiset, so x is drawn from {a_k / y1}.
    """
    L = len(a)
    a_min = a.parts[0]
    total = a.norm
    y1_choices = [d for d in range(1, a_min + 1) if a_min % d == 0]
    seen = set()
    for d in (d for d in range(1, L + 1) if L % d == 0):
        for y1 in y1_choices:
            x1 = a_min // y1
            pool = Counter(v // y1 for v in a.parts if v % y1 == 0)
            pool[x1] -= 1
            pool = Counter({k: c for k, c in pool.items() if c > 0 and k >= x1})
            for rest in _sub_multisets(pool, d - 1):
                x = Partition((x1,) + rest)
                if x in seen or total % x.norm:
                    continue
                seen.add(x)
                yield x


def factor_search(a: Partition) -> FactorWitness | None:
    """A factorization ``a = left * right`` into two non-units, or None if irreducible."""
    if not a.parts:
        raise ValueError("the zero partition has no factorization")
    if is_unit(a):
        raise ValueError("(1) is a unit")
    for x in _left_factors(a):
        if is_unit(x) or x == a:
            continue
        y = divide(a, x)
        if y is not None and not is_unit(y):
            return FactorWitness(x, y)
    return None


@lru_cache(maxsize=None)
def _irreducible(parts: tuple[int, ...]) -> bool:
    return factor_search(Partition(parts)) is None


def is_multiplicative_prime(a: Partition) -> bool:
    if not a.parts or is_unit(a):
        raise ValueError(f"primality is undefined for {a}")
    return _irreducible(a.parts)


def divisors(a: Partition) -> frozenset[Partition]:
    if not a.parts:
        raise ValueError("divisors of the zero partition are undefined")
    return frozenset(x for x in _left_factors(a) if divide(a, x) is not None)


def divides(d: Partition, a: Partition) -> bool:
    return divide(a, d) is not None


def common_divisors(a: Partition, b: Partition) -> CommonDivisors:
    """Common divisors, the maximal ones, and one deterministic representative.

    The representative is the maximal divisor of largest norm; ties go to the
    lexicographically smallest ascending part list.
    """
    common = divisors(a) & divisors(b)
    maximal = frozenset(
        d for d in common if not any(e != d and divides(d, e) for e in common)
    )
    rep = min(maximal, key=lambda d: (-d.norm, d.parts))
    return CommonDivisors(frozenset(common), maximal, rep)


def census(max_weight: int) -> list[CensusRow]:
    """Classify every partition of each weight 1..max_weight.

    The per-weight totals are checked against p(w).
    """
    if max_weight < 1:
        raise ValueError(f"max_weight must be >= 1, got {max_weight}")
    counts = p_pentagonal(max_weight)
    rows = []
    for w in range(1, max_weight + 1):
        total = primes = covered = 0
        for a in partitions_of(w):
            total += 1
            if is_unit(a):
                continue
            if is_multiplicative_prime(a):
                primes += 1
                if sufficient_condition(a):
                    covered += 1
        if counts[w] != total:
            raise ConsistencyError(f"weight {w}: enumerated {total} partitions, p({w}) = {counts[w]}")
        rows.append(CensusRow(w, total, primes, covered, primes - covered))
    return rows


def sufficient_condition_failures(max_weight: int) -> list[tuple[Partition, FactorWitness]]:
    """Partitions meeting the prime-norm-or-prime-length test that nonetheless factor."""
    out = []
    for w in range(2, max_weight + 1):
        for a in partitions_of(w):
            if sufficient_condition(a):
                wit = factor_search(a)
                if wit is not None:
                    out.append((a, wit))
    return out
