"""A finite quotient of the partition semiring.

An element of R(N, M) assigns to each residue class r mod N a multiplicity
mod M. Partitions project by counting parts per residue; multiplication is
convolution over the multiplicative monoid Z/N, addition is pointwise. This is
the monoid algebra (Z/M)[(Z/N, *)], which receives the partition semiring
homomorphically because parts multiply and multiplicities add.
"""

from __future__ import annotations

import json
import math
import random
from dataclasses import asdict, dataclass, field
from typing import Mapping

from partring.partition import Partition


@dataclass(frozen=True)
class ModRingParams:
    part_modulus: int
    coeff_modulus: int

    def __post_init__(self):
        if self.part_modulus < 2 or self.coeff_modulus < 2:
            raise ValueError("both moduli must be >= 2")

    @property
    def cardinality(self) -> int:
        return self.coeff_modulus**self.part_modulus


@dataclass(frozen=True)
class ModPartition:
    """Sparse element of R(N, M); ``coeffs`` holds (residue, multiplicity) pairs, no zeros."""

    params: ModRingParams
    coeffs: tuple[tuple[int, int], ...] = ()

    @classmethod
    def from_map(cls, params: ModRingParams, coeffs: Mapping[int, int]) -> ModPartition:
        N, M = params.part_modulus, params.coeff_modulus
        acc: dict[int, int] = {}
        for r, c in coeffs.items():
            r %= N
            acc[r] = (acc.get(r, 0) + c) % M
        return cls(params, tuple(sorted((r, c) for r, c in acc.items() if c)))

    @classmethod
    def from_dense(cls, params: ModRingParams, dense) -> ModPartition:
        return cls.from_map(params, dict(enumerate(dense)))

    def as_dict(self) -> dict[int, int]:
        return dict(self.coeffs)

    def dense(self) -> list[int]:
        out = [0] * self.params.part_modulus
        for r, c in self.coeffs:
            out[r] = c
        return out

    def __add__(self, other: ModPartition) -> ModPartition:
        return mod_add(self, other)

    def __mul__(self, other: ModPartition) -> ModPartition:
        return mod_mul(self, other)


def zero(params: ModRingParams) -> ModPartition:
    return ModPartition(params)


def unit(params: ModRingParams) -> ModPartition:
    return ModPartition(params, ((1, 1),))


def project(a: Partition, params: ModRingParams) -> ModPartition:
    counts: dict[int, int] = {}
    for x in a.parts:
        r = x % params.part_modulus
        counts[r] = counts.get(r, 0) + 1
    return ModPartition.from_map(params, counts)


def _check(x: ModPartition, y: ModPartition) -> None:
    if x.params != y.params:
        raise ValueError(f"parameter mismatch: {x.params} vs {y.params}")


def mod_add(x: ModPartition, y: ModPartition) -> ModPartition:
    _check(x, y)
    acc = x.as_dict()
    for r, c in y.coeffs:
        acc[r] = acc.get(r, 0) + c
    return ModPartition.from_map(x.params, acc)


def mod_neg(x: ModPartition) -> ModPartition:
    M = x.params.coeff_modulus
    return ModPartition.from_map(x.params, {r: M - c for r, c in x.coeffs})


def mod_mul(x: ModPartition, y: ModPartition) -> ModPartition:
    _check(x, y)
    N = x.params.part_modulus
    acc: dict[int, int] = {}
    for a, ca in x.coeffs:
        for b, cb in y.coeffs:
            r = a * b % N
            acc[r] = acc.get(r, 0) + ca * cb
    return ModPartition.from_map(x.params, acc)


def mod_pow(x: ModPartition, e: int) -> ModPartition:
    if e < 0:
        raise ValueError(f"exponent must be nonnegative, got {e}")
    result = unit(x.params)
    base = x
    while e:
        if e & 1:
            result = mod_mul(result, base)
        e >>= 1
        if e:
            base = mod_mul(base, base)
    return result


def random_element(params: ModRingParams, rng: random.Random) -> ModPartition:
    return ModPartition.from_dense(
        params, [rng.randrange(params.coeff_modulus) for _ in range(params.part_modulus)]
    )


def floyd(f, x0) -> tuple[int, int]:
    """Tail length mu and cycle length lam of the orbit x0, f(x0), ... (tortoise and hare)."""
    tortoise, hare = f(x0), f(f(x0))
    while tortoise != hare:
        tortoise, hare = f(tortoise), f(f(hare))
    mu, tortoise = 0, x0
    while tortoise != hare:
        tortoise, hare = f(tortoise), f(hare)
        mu += 1
    lam, hare = 1, f(tortoise)
    while tortoise != hare:
        hare = f(hare)
        lam += 1
    return mu, lam


@dataclass
class RhoReport:
    part_modulus: int
    coeff_modulus: int
    trials: int
    seed: int
    tails: list[int] = field(default_factory=list)
    cycles: list[int] = field(default_factory=list)

    @property
    def ring_size(self) -> int:
        return self.coeff_modulus**self.part_modulus

    @property
    def birthday_bound(self) -> float:
        return math.sqrt(self.ring_size)

    @property
    def mean_tail(self) -> float:
        return sum(self.tails) / len(self.tails)

    @property
    def mean_cycle(self) -> float:
        return sum(self.cycles) / len(self.cycles)

    @property
    def mean_rho(self) -> float:
        return self.mean_tail + self.mean_cycle

    def to_dict(self) -> dict:
        d = asdict(self)
        d.update(
            ring_size=self.ring_size,
            birthday_bound=self.birthday_bound,
            mean_tail=self.mean_tail,
            mean_cycle=self.mean_cycle,
            mean_rho=self.mean_rho,
            cycle_ratio=self.mean_cycle / self.birthday_bound,
            rho_ratio=self.mean_rho / self.birthday_bound,
        )
        return d

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2, sort_keys=True)


def rho_experiment(params: ModRingParams, trials: int, seed: int) -> RhoReport:
    """Iterate x -> x*x + c from random (x0, c) and measure tail and cycle lengths."""
    if trials < 1:
        raise ValueError(f"trials must be >= 1, got {trials}")
    rng = random.Random(seed)
    report = RhoReport(params.part_modulus, params.coeff_modulus, trials, seed)
    for _ in range(trials):
        x0 = random_element(params, rng)
        c = random_element(params, rng)
        mu, lam = floyd(lambda x: mod_add(mod_mul(x, x), c), x0)
        report.tails.append(mu)
        report.cycles.append(lam)
    return report
