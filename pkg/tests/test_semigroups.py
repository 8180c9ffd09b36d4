import random

import pytest
from hypothesis import given, strategies as st

from kappalg.groups import cyclic, symmetric_group
from kappalg.localgroups import Triple, example_S1
from kappalg.semigroups import (GroupSemigroup, TableSemigroup, TransformationMonoid, idempotents, is_associative,
                                is_local_group, left_zero, minimal_ideal, null_semigroup, omega_power,
                                omega_power_generic, semilattice2)

import oracles


def test_idempotents():
    G = GroupSemigroup(cyclic(4))
    assert idempotents(G) == [G.group.identity]
    assert set(idempotents(semilattice2())) == set(semilattice2().elements())
    S1, _ = example_S1()
    assert len(idempotents(S1)) == 4
    assert all(isinstance(e, Triple) for e in idempotents(S1))


def test_local_group_verdicts():
    assert is_local_group(example_S1()[0])
    assert not is_local_group(semilattice2())
    assert is_local_group(GroupSemigroup(symmetric_group(3)))
    assert is_local_group(null_semigroup(3))
    assert is_local_group(left_zero(2))
    assert not is_local_group(TransformationMonoid(3))


def test_minimal_ideal():
    assert minimal_ideal(semilattice2()) == [0] or len(minimal_ideal(semilattice2())) == 1
    assert len(minimal_ideal(TransformationMonoid(3))) == 3


def test_table_semigroup_checks_associativity():
    with pytest.raises(ValueError):
        TableSemigroup.from_json_spec({"elements": ["x", "y"], "table": [["y", "x"], ["x", "x"]]})


def test_associativity():
    assert is_associative(TransformationMonoid(3))
    assert is_associative(example_S1()[0])


@pytest.mark.parametrize("S", [TransformationMonoid(3), GroupSemigroup(cyclic(6)), example_S1()[0]],
                         ids=["T3", "C6", "S1"])
def test_omega_powers_match_enumeration(S):
    for s in S.elements():
        for q in range(-3, 4):
            want = oracles.power_by_enumeration(S.mul, s, q)
            assert omega_power_generic(S, s, q) == want
            assert omega_power(S, s, q) == want


@given(st.integers(0, 10**6), st.integers(-5, 5))
def test_omega_power_laws(seed, q):
    T = TransformationMonoid(3)
    s = random.Random(seed).choice(T.elements())
    e = omega_power(T, s, 0)
    assert T.mul(e, e) == e
    assert T.mul(omega_power(T, s, q), omega_power(T, s, 1)) == omega_power(T, s, q + 1)
