"""Fixed/moving splitting of weight representations."""

import random

import pytest
from hypothesis import given, strategies as st

from strat_euler import (
    AmbientGroup,
    Representation,
    Subgroup,
    ValidationError,
    circle_representation,
    cyclic_representation,
    fixed_part,
    moving_part,
    restrict,
)

CIRCLE = AmbientGroup.circle()


def Z(m):
    return Subgroup.cyclic(CIRCLE, m)


FULL = Subgroup.full_circle(CIRCLE)
TRIVIAL = Subgroup.trivial(CIRCLE)


def test_restrict_examples():
    rep = circle_representation([2, 3, 5])
    assert restrict(rep, Z(2)).weights == (0, 1, 1)
    assert restrict(rep, Z(2)).trivial_real_dim == 0

    rep2 = circle_representation([1], 1)
    res = restrict(rep2, FULL)
    assert res.weights == (1,) and res.trivial_real_dim == 1

    rep3 = circle_representation([4, 6], 2)
    assert restrict(rep3, Z(2)).weights == (0, 0)
    assert restrict(rep3, Z(2)).trivial_real_dim == 2


def test_fixed_part_examples():
    rep = circle_representation([2, 3, 5])
    fp = fixed_part(rep, Z(2))
    assert fp.weights == (0,) and fp.trivial_real_dim == 0
    assert fp.real_rank == 2

    assert fixed_part(circle_representation([1, 1]), Z(5)).real_rank == 0

    rep3 = circle_representation([7, -2], 3)
    whole = fixed_part(rep3, TRIVIAL)
    assert whole.real_rank == rep3.real_rank


def test_moving_part_examples():
    rep = circle_representation([2, 3, 5])
    assert moving_part(rep, Z(2)).weights == (1, 1)
    assert moving_part(circle_representation([4], 2), TRIVIAL).real_rank == 0
    assert moving_part(circle_representation([1]), FULL).weights == (1,)


def test_weights_stored_reduced_for_cyclic_ambient():
    rep = cyclic_representation(4, [5, -1, 8])
    assert rep.weights == (0, 1, 3)


def test_circle_weights_keep_sign():
    rep = circle_representation([-2, 3])
    assert rep.weights == (-2, 3)


def test_real_rank():
    assert circle_representation([1, 2], 3).real_rank == 7
    assert circle_representation().real_rank == 0


def test_restrict_requires_subgroup():
    rep = cyclic_representation(6, [1])
    ambient = rep.group.ambient
    with pytest.raises(ValidationError):
        rep.restrict(Subgroup.cyclic(ambient, 4))


def test_restrict_rejects_foreign_ambient():
    from strat_euler import AmbientMismatchError

    rep = circle_representation([1])
    foreign = Subgroup.cyclic(AmbientGroup.cyclic(6), 2)
    with pytest.raises(AmbientMismatchError):
        rep.restrict(foreign)


def test_negative_trivial_dim_rejected():
    with pytest.raises(ValidationError):
        circle_representation([], -1)


def _random_rep(rng: random.Random) -> Representation:
    weights = [rng.randint(-9, 9) for _ in range(rng.randint(0, 4))]
    return circle_representation(weights, rng.randint(0, 3))


def _divisors(n):
    return [d for d in range(1, n + 1) if n % d == 0]


def test_rank_additivity_exhaustive_modulus_12():
    rng = random.Random(7)
    subgroups = [Z(d) for d in _divisors(12)] + [FULL]
    for _ in range(100):
        rep = _random_rep(rng)
        for h in subgroups:
            res = restrict(rep, h)
            assert (
                fixed_part(rep, h).real_rank + moving_part(rep, h).real_rank
                == res.real_rank
            )


def test_fixed_rank_monotone():
    rng = random.Random(11)
    chains = [(Z(2), Z(4)), (Z(3), Z(6)), (Z(1), Z(5)), (Z(4), Z(12)), (Z(6), FULL)]
    for _ in range(100):
        rep = _random_rep(rng)
        for h, h_bigger in chains:
            assert (
                fixed_part(rep, h).real_rank >= fixed_part(rep, h_bigger).real_rank
            )


def test_restrict_functorial():
    rng = random.Random(13)
    chains = [(Z(2), Z(6)), (Z(3), Z(12)), (Z(1), Z(7)), (Z(5), FULL), (Z(4), Z(8))]
    for _ in range(100):
        rep = _random_rep(rng)
        for h, h_bigger in chains:
            assert restrict(restrict(rep, h_bigger), h) == restrict(rep, h)


@given(
    st.lists(st.integers(min_value=-12, max_value=12), max_size=5),
    st.integers(min_value=0, max_value=3),
    st.integers(min_value=1, max_value=12),
)
def test_rank_additivity_property(weights, trivial, order):
    rep = circle_representation(weights, trivial)
    h = Z(order)
    assert (
        fixed_part(rep, h).real_rank + moving_part(rep, h).real_rank
        == restrict(rep, h).real_rank
    )
