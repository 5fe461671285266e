"""Divisibility-lattice behaviour of the subgroup type."""

import itertools

import pytest
from hypothesis import given, strategies as st

from strat_euler import (
    AmbientGroup,
    AmbientMismatchError,
    Subgroup,
    ValidationError,
    join,
    meet,
    subgroup_leq,
)

CIRCLE = AmbientGroup.circle()


def Z(m: int) -> Subgroup:
    return Subgroup.cyclic(CIRCLE, m)


FULL = Subgroup.full_circle(CIRCLE)
TRIVIAL = Subgroup.trivial(CIRCLE)


def test_leq_examples():
    assert subgroup_leq(Z(2), Z(6)) is True
    assert subgroup_leq(Z(4), Z(6)) is False
    assert subgroup_leq(TRIVIAL, FULL) is True


def test_join_examples():
    assert join(Z(2), Z(3)) == Z(6)
    assert join(TRIVIAL, Z(5)) == Z(5)
    assert join(FULL, Z(7)) == FULL


def test_meet_examples():
    assert meet(Z(4), Z(6)) == Z(2)
    assert meet(FULL, Z(7)) == Z(7)
    assert meet(Z(3), Z(5)) == TRIVIAL


def test_trivial_is_cyclic_one():
    assert Z(1) == TRIVIAL
    assert Z(1).is_trivial
    assert TRIVIAL.label == "e"
    assert Z(6).label == "Z6"
    assert FULL.label == "S1"


def test_cyclic_ambient_constraints():
    z12 = AmbientGroup.cyclic(12)
    Subgroup.cyclic(z12, 4)
    with pytest.raises(ValidationError):
        Subgroup.cyclic(z12, 5)
    with pytest.raises(ValidationError):
        Subgroup.full_circle(z12)
    assert z12.full_subgroup() == Subgroup.cyclic(z12, 12)
    assert z12.full_subgroup().is_whole_group


def test_ambient_mismatch():
    other = Subgroup.cyclic(AmbientGroup.cyclic(12), 3)
    with pytest.raises(AmbientMismatchError):
        subgroup_leq(Z(3), other)
    with pytest.raises(AmbientMismatchError):
        join(Z(3), other)


def _divisors(n: int) -> list[int]:
    return [d for d in range(1, n + 1) if n % d == 0]


def test_partial_order_exhaustive_divisors_of_60():
    ambient = AmbientGroup.cyclic(60)
    subs = [Subgroup.cyclic(ambient, d) for d in _divisors(60)]
    for a in subs:
        assert subgroup_leq(a, a)
    for a, b in itertools.product(subs, repeat=2):
        if subgroup_leq(a, b) and subgroup_leq(b, a):
            assert a == b
    for a, b, c in itertools.product(subs, repeat=3):
        if subgroup_leq(a, b) and subgroup_leq(b, c):
            assert subgroup_leq(a, c)


subgroup_strategy = st.one_of(
    st.just(FULL),
    st.integers(min_value=1, max_value=40).map(Z),
)


@given(subgroup_strategy, subgroup_strategy)
def test_join_commutative(a, b):
    assert join(a, b) == join(b, a)


@given(subgroup_strategy, subgroup_strategy, subgroup_strategy)
def test_join_associative(a, b, c):
    assert join(join(a, b), c) == join(a, join(b, c))


@given(subgroup_strategy)
def test_join_idempotent(a):
    assert join(a, a) == a


@given(subgroup_strategy, subgroup_strategy)
def test_join_is_least_upper_bound(a, b):
    j = join(a, b)
    assert subgroup_leq(a, j) and subgroup_leq(b, j)


@given(subgroup_strategy, subgroup_strategy, subgroup_strategy)
def test_join_monotone(a, b, c):
    if subgroup_leq(a, b):
        assert subgroup_leq(join(a, c), join(b, c))


@given(subgroup_strategy, subgroup_strategy)
def test_meet_is_greatest_lower_bound(a, b):
    m = meet(a, b)
    assert subgroup_leq(m, a) and subgroup_leq(m, b)
