"""Divisor sums, generalized pentagonal numbers and Euler's recursion for sigma."""

from __future__ import annotations

import threading
from dataclasses import dataclass
from math import isqrt


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    for d in range(3, isqrt(n) + 1, 2):
        if n % d == 0:
            return False
    return True


def sigma(n: int) -> int:
    """Sum of all positive divisors of ``n`` by trial division up to sqrt(n)."""
    if n < 1:
        raise ValueError(f"sigma is defined for n >= 1, got {n}")
    total = 0
    r = isqrt(n)
    for d in range(1, r + 1):
        if n % d == 0:
            total += d
            q = n // d
            if q != d:
                total += q
    return total


# Bulk table, index 0 unused. Readers take the published list; growth holds the lock.
_sieve: list[int] = [0]
_sieve_lock = threading.Lock()


def sigma_table(n_max: int) -> list[int]:
    """Return ``[0, sigma(1), ..., sigma(n_max)]`` from a lazily grown sieve."""
    global _sieve
    table = _sieve
    if len(table) > n_max:
        return table[: n_max + 1]
    with _sieve_lock:
        table = _sieve
        if len(table) <= n_max:
            size = max(n_max + 1, 2 * len(table))
            fresh = [0] * size
            for d in range(1, size):
                for m in range(d, size, d):
                    fresh[m] += d
            _sieve = table = fresh
    return table[: n_max + 1]


@dataclass(frozen=True)
class PentagonalTerm:
    index: int
    value: int
    sign: int


@dataclass(frozen=True)
class PentagonalSequence:
    terms: tuple[PentagonalTerm, ...]

    def __iter__(self):
        return iter(self.terms)

    def __len__(self) -> int:
        return len(self.terms)

    def __getitem__(self, i):
        return self.terms[i]

    @property
    def values(self) -> list[int]:
        return [t.value for t in self.terms]

    def as_tuples(self) -> list[tuple[int, int, int]]:
        return [(t.index, t.value, t.sign) for t in self.terms]


def pentagonal_terms(limit: int) -> PentagonalSequence:
    """All generalized pentagonal numbers ``<= limit`` with their recursion signs.

    For k = 1, 2, ... the pair (3k^2 - k)/2, (3k^2 + k)/2 is emitted with
    indices k and -k and sign (-1)^(k+1).
    """
    terms = []
    k = 1
    while True:
        sign = 1 if k % 2 else -1
        lo = k * (3 * k - 1) // 2
        if lo > limit:
            break
        terms.append(PentagonalTerm(k, lo, sign))
        hi = lo + k
        if hi <= limit:
            terms.append(PentagonalTerm(-k, hi, sign))
        k += 1
    return PentagonalSequence(tuple(terms))


def sigma_pentagonal_table(n_max: int) -> list[int]:
    """``[0, sigma(1), ..., sigma(n_max)]`` from the pentagonal recursion alone.

    A term sigma(n - g) with n - g == 0 contributes n; negative arguments
    contribute nothing.
    """
    pent = pentagonal_terms(max(n_max, 1)).terms
    s = [0] * (n_max + 1)
    for n in range(1, n_max + 1):
        acc = 0
        for t in pent:
            m = n - t.value
            if m < 0:
                break
            acc += t.sign * (n if m == 0 else s[m])
        s[n] = acc
    return s


def sigma_pentagonal(n: int) -> int:
    if n < 1:
        raise ValueError(f"sigma is defined for n >= 1, got {n}")
    return sigma_pentagonal_table(n)[n]


def sigma_summatory(n: int) -> int:
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    return sum(sigma_table(n))
