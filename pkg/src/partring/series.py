"""Truncated power series with exact integer coefficients."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from partring.numtheory import pentagonal_terms


@dataclass(frozen=True)
class TruncatedSeries:
    """Coefficients ``c_0 .. c_order`` of a power series known modulo x^(order+1)."""

    order: int
    coeffs: tuple[int, ...]

    def __post_init__(self):
        if self.order < 0:
            raise ValueError("order must be nonnegative")
        if len(self.coeffs) != self.order + 1:
            raise ValueError(
                f"expected {self.order + 1} coefficients, got {len(self.coeffs)}"
            )

    @classmethod
    def of(cls, coeffs: Sequence[int], order: int | None = None) -> TruncatedSeries:
        """Build from a coefficient list, zero-padding or truncating to ``order``."""
        if order is None:
            order = len(coeffs) - 1
        c = list(coeffs[: order + 1])
        c.extend([0] * (order + 1 - len(c)))
        return cls(order, tuple(int(x) for x in c))

    @classmethod
    def one(cls, order: int) -> TruncatedSeries:
        return cls.of([1], order)

    def __getitem__(self, i: int) -> int:
        return self.coeffs[i]

    def __len__(self) -> int:
        return len(self.coeffs)

    def __mul__(self, other: TruncatedSeries) -> TruncatedSeries:
        return series_mul(self, other)

    def __add__(self, other: TruncatedSeries) -> TruncatedSeries:
        _check_orders(self, other)
        return TruncatedSeries(self.order, tuple(a + b for a, b in zip(self.coeffs, other.coeffs)))


def _check_orders(a: TruncatedSeries, b: TruncatedSeries) -> None:
    if a.order != b.order:
        raise ValueError(f"order mismatch: {a.order} vs {b.order}")


def series_mul(a: TruncatedSeries, b: TruncatedSeries) -> TruncatedSeries:
    """Cauchy product truncated at the common order."""
    _check_orders(a, b)
    n = a.order
    out = [0] * (n + 1)
    bc = b.coeffs
    for i, ai in enumerate(a.coeffs):
        if ai == 0:
            continue
        for j in range(n + 1 - i):
            bj = bc[j]
            if bj:
                out[i + j] += ai * bj
    return TruncatedSeries(n, tuple(out))


def geometric(j: int, order: int) -> TruncatedSeries:
    """The series 1/(1 - x^j)."""
    if j < 1:
        raise ValueError(f"j must be >= 1, got {j}")
    return TruncatedSeries(order, tuple(1 if m % j == 0 else 0 for m in range(order + 1)))


def mul_geometric(a: TruncatedSeries, j: int) -> TruncatedSeries:
    """``series_mul(a, geometric(j, a.order))`` in O(order) by the running sum c_m += c_{m-j}."""
    if j < 1:
        raise ValueError(f"j must be >= 1, got {j}")
    c = list(a.coeffs)
    for m in range(j, a.order + 1):
        c[m] += c[m - j]
    return TruncatedSeries(a.order, tuple(c))


def euler_q(order: int) -> TruncatedSeries:
    """prod_{k>=1} (1 - z^k) truncated, read off the pentagonal number theorem."""
    c = [0] * (order + 1)
    c[0] = 1
    if order >= 1:
        for t in pentagonal_terms(order):
            c[t.value] = -t.sign
    return TruncatedSeries(order, tuple(c))


def euler_q_product(order: int) -> TruncatedSeries:
    """Same series as :func:`euler_q`, by multiplying out the factors (1 - z^k)."""
    c = [0] * (order + 1)
    c[0] = 1
    for k in range(1, order + 1):
        # multiply in place by (1 - z^k); descend so c[m-k] is still the old value
        for m in range(order, k - 1, -1):
            c[m] -= c[m - k]
    return TruncatedSeries(order, tuple(c))


def series_reciprocal(a: TruncatedSeries) -> TruncatedSeries:
    """Inverse series, b_n = -(1/a_0) sum_{k=1..n} a_k b_{n-k}.

    Zero coefficients of ``a`` are skipped, so sparse inputs such as
    :func:`euler_q` cost O(order * nonzeros).
    """
    a0 = a.coeffs[0]
    if a0 not in (1, -1):
        raise ValueError(f"constant term must be a unit (+1 or -1), got {a0}")
    support = [(k, ak) for k, ak in enumerate(a.coeffs) if k and ak]
    b = [0] * (a.order + 1)
    b[0] = a0  # 1/a0 == a0 for a0 = +-1
    for n in range(1, a.order + 1):
        acc = 0
        for k, ak in support:
            if k > n:
                break
            acc += ak * b[n - k]
        b[n] = -a0 * acc
    return TruncatedSeries(a.order, tuple(b))
