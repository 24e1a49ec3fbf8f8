import json
import time

import pytest
from hypothesis import given
from hypothesis import strategies as st

from partring.modular import (
    ModPartition,
    ModRingParams,
    floyd,
    mod_add,
    mod_mul,
    mod_neg,
    mod_pow,
    project,
    rho_experiment,
    unit,
    zero,
)
from partring.partition import ONE, ZERO, Partition
from strategies import partitions

PARAMS = [ModRingParams(3, 2), ModRingParams(4, 5), ModRingParams(5, 7)]


def elements(params):
    return st.lists(
        st.integers(0, params.coeff_modulus - 1),
        min_size=params.part_modulus,
        max_size=params.part_modulus,
    ).map(lambda d: ModPartition.from_dense(params, d))


triples = st.sampled_from(PARAMS).flatmap(
    lambda p: st.tuples(elements(p), elements(p), elements(p))
)


def test_params_validation():
    with pytest.raises(ValueError):
        ModRingParams(1, 5)
    with pytest.raises(ValueError):
        ModRingParams(3, 1)


def test_project_examples():
    prm = ModRingParams(3, 5)
    assert project(Partition((3, 4, 5, 2)), prm).as_dict() == {0: 1, 1: 1, 2: 2}
    assert project(ZERO, prm) == zero(prm)
    assert project(ONE, prm) == unit(prm) and unit(prm).as_dict() == {1: 1}


def test_canonical_sparse_form():
    prm = ModRingParams(3, 2)
    x = project(Partition((1, 1, 2)), prm)
    assert x.as_dict() == {2: 1}  # two 1s cancel mod 2


def test_params_mismatch():
    with pytest.raises(ValueError):
        mod_add(unit(PARAMS[0]), unit(PARAMS[1]))
    with pytest.raises(ValueError):
        mod_mul(unit(PARAMS[0]), unit(PARAMS[1]))


@given(triples)
def test_ring_axioms(xyz):
    x, y, z = xyz
    prm = x.params
    assert x + y == y + x and x * y == y * x
    assert (x + y) + z == x + (y + z)
    assert (x * y) * z == x * (y * z)
    assert x * (y + z) == x * y + x * z
    assert x + zero(prm) == x and x * unit(prm) == x
    assert x * zero(prm) == zero(prm)
    assert x + mod_neg(x) == zero(prm)
    scaled = ModPartition.from_map(prm, {r: (prm.coeff_modulus - 1) * c for r, c in x.coeffs})
    assert x + scaled == zero(prm)


@given(st.sampled_from(PARAMS), partitions(max_part=20, max_len=6), partitions(max_part=20, max_len=6))
def test_projection_homomorphism(prm, a, b):
    assert project(a + b, prm) == mod_add(project(a, prm), project(b, prm))
    assert project(a * b, prm) == mod_mul(project(a, prm), project(b, prm))


@given(st.sampled_from(PARAMS).flatmap(elements), st.integers(0, 32))
def test_pow_matches_repeated_mul(x, e):
    acc = unit(x.params)
    for _ in range(e):
        acc = acc * x
    assert mod_pow(x, e) == acc


def test_pow_examples():
    prm = ModRingParams(5, 7)
    x = project(Partition((2, 3, 3)), prm)
    assert mod_pow(x, 1) == x
    assert mod_pow(x, 5) == x * x * x * x * x
    t = time.perf_counter()
    assert mod_pow(unit(prm), 10**9) == unit(prm)
    assert time.perf_counter() - t < 0.1


def test_floyd_on_known_orbit():
    # 0 -> 1 -> 2 -> 3 -> 4 -> 2: tail 2, cycle 3
    step = {0: 1, 1: 2, 2: 3, 3: 4, 4: 2}
    assert floyd(step.__getitem__, 0) == (2, 3)
    assert floyd(lambda x: x, 7) == (0, 1)


def test_rho_terminates_within_ring():
    for prm in PARAMS:
        rep = rho_experiment(prm, 20, seed=3)
        assert len(rep.tails) == 20
        for mu, lam in zip(rep.tails, rep.cycles):
            assert lam >= 1 and mu + lam <= prm.cardinality


def test_rho_deterministic():
    prm = ModRingParams(5, 7)
    assert rho_experiment(prm, 30, seed=11).to_json() == rho_experiment(prm, 30, seed=11).to_json()
    doc = json.loads(rho_experiment(prm, 5, seed=1).to_json())
    assert doc["ring_size"] == 7**5
