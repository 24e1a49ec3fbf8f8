import threading
from math import gcd

import pytest
from hypothesis import given
from hypothesis import strategies as st

from oracles import divisor_sum
from partring.numtheory import (
    is_prime,
    pentagonal_terms,
    sigma,
    sigma_pentagonal,
    sigma_pentagonal_table,
    sigma_summatory,
    sigma_table,
)


@pytest.mark.parametrize("n, expected", [(1, 1), (2, 3), (6, 12), (12, 28)])
def test_sigma_examples(n, expected):
    assert sigma(n) == expected


def test_sigma_matches_enumeration():
    for n in range(1, 500):
        assert sigma(n) == divisor_sum(n)


def test_sigma_rejects_zero():
    with pytest.raises(ValueError):
        sigma(0)
    with pytest.raises(ValueError):
        sigma_pentagonal(0)


def test_sigma_of_primes():
    for q in range(2, 10_001):
        if is_prime(q):
            assert sigma(q) == q + 1


@given(st.integers(1, 10_000), st.integers(1, 10_000))
def test_sigma_multiplicative(a, b):
    if gcd(a, b) == 1 and a * b <= 10_000:
        assert sigma(a * b) == sigma(a) * sigma(b)


def test_sigma_multiplicative_exhaustive_small():
    for a in range(1, 100):
        for b in range(1, 10_000 // a + 1):
            if gcd(a, b) == 1:
                assert sigma(a * b) == sigma(a) * sigma(b)


@pytest.mark.parametrize("n, expected", [(1, 1), (2, 3), (12, 28)])
def test_sigma_pentagonal_examples(n, expected):
    assert sigma_pentagonal(n) == expected


def test_sigma_pentagonal_equals_divisor_sum():
    pent = sigma_pentagonal_table(2000)
    for n in range(1, 2001):
        assert pent[n] == sigma(n), n


def test_pentagonal_terms_examples():
    assert pentagonal_terms(7).as_tuples() == [(1, 1, 1), (-1, 2, 1), (2, 5, -1), (-2, 7, -1)]
    assert pentagonal_terms(1).as_tuples() == [(1, 1, 1)]
    t26 = pentagonal_terms(26)
    assert len(t26) == 8
    assert t26[-1].index == -4 and t26[-1].value == 26 and t26[-1].sign == -1


def test_pentagonal_terms_structure():
    terms = pentagonal_terms(5000)
    vals = terms.values
    assert vals == sorted(set(vals))
    # closed forms (3k^2 -+ k)/2
    expected = sorted(
        v for k in range(1, 100) for v in ((3 * k * k - k) // 2, (3 * k * k + k) // 2) if v <= 5000
    )
    assert vals == expected
    signs = [t.sign for t in terms]
    for i, s in enumerate(signs):
        assert s == [1, 1, -1, -1][i % 4]


def test_sigma_summatory():
    assert sigma_summatory(1) == 1
    assert sigma_summatory(3) == 8
    direct = sum(divisor_sum(k) for k in range(1, 101))
    assert sigma_summatory(100) == direct
    assert 0.78 <= direct / 100**2 <= 0.86


def test_sigma_table_consistent_under_threads():
    results = []

    def work(n):
        results.append((n, sigma_table(n)))

    threads = [threading.Thread(target=work, args=(n,)) for n in (50, 3000, 700, 5000)]
    for t in threads:
        t.start()
    for t in threads:
        t.join()
    for n, table in results:
        assert len(table) == n + 1
        assert table[1:60] == [divisor_sum(k) for k in range(1, 60)][: len(table) - 1]
