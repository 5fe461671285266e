"""Exact ring and Laurent arithmetic: the algebraic kernel."""

import itertools
import random
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from strat_euler import (
    EquivariantClass,
    FiniteBasisRing,
    LineSummand,
    NonInvertibleError,
    RationalLaurent,
    RingMismatchError,
    ValidationError,
    builtin_ring,
    euler_class,
    integrate_over_component,
    invert_euler,
    point_ring,
    projective_space_ring,
    ring_mul,
    sphere_ring,
    tensor_ring,
)

S2 = sphere_ring()
PT = point_ring()
CP2 = projective_space_ring(2)
S2XS2 = tensor_ring(sphere_ring("x"), sphere_ring("y"), name="s2xs2")
FIXTURE_RINGS = [PT, S2, S2XS2, CP2]


def u(ring, power=1):
    return EquivariantClass.u(ring, power)


def elem(ring, label):
    return EquivariantClass.from_element(ring, label)


def test_ring_construction_validations():
    with pytest.raises(ValidationError):
        FiniteBasisRing([("x", 2)], {}, "x")  # unit missing
    with pytest.raises(ValidationError):
        FiniteBasisRing([("1", 0), ("y", 3)], {}, "y")  # odd degree
    with pytest.raises(ValidationError):
        FiniteBasisRing([("1", 0), ("a", 0)], {}, "a")  # two degree-0 elements
    with pytest.raises(ValidationError):
        # grading violated: x*x lands in degree 2 instead of 4
        FiniteBasisRing([("1", 0), ("x", 2)], {("x", "x"): {"x": 1}}, "x")
    with pytest.raises(ValidationError):
        # non-associative table: a*a = b but (a*a)*a != a*(a*a) forced to differ
        FiniteBasisRing(
            [("1", 0), ("a", 2), ("b", 4), ("c", 6)],
            {("a", "a"): {"b": 1}, ("a", "b"): {"c": 1}, ("b", "a"): {"c": 1},
             ("a", "c"): {}, ("b", "b"): {"c": 7}},
            "c",
        )


def test_ring_mul_examples():
    ux = u(S2) + elem(S2, "x")
    umx = u(S2) - elem(S2, "x")
    assert ux * umx == u(S2, 2)

    c = EquivariantClass(S2, {0: {"x": Fraction(5)}, -2: {"1": Fraction(1, 3)}})
    assert EquivariantClass.one(S2) * c == c

    a = EquivariantClass.scalar(S2, 2, upow=1)
    b = EquivariantClass.scalar(S2, 3, upow=-1)
    assert a * b == EquivariantClass.scalar(S2, 6)


def test_ring_mul_rejects_mixed_rings():
    with pytest.raises(RingMismatchError):
        ring_mul(u(S2), u(PT))


def test_euler_class_examples():
    assert euler_class(PT, [LineSummand(1)]) == u(PT)

    e = euler_class(S2, [LineSummand(1, {"x": 4})])
    assert e == u(S2) + 4 * elem(S2, "x")

    assert euler_class(PT, [LineSummand(1), LineSummand(-1)]) == -u(PT, 2)

    # weight-0 line with zero chern has vanishing Euler class
    assert euler_class(S2, [LineSummand(0)]).is_zero

    # extra weight-0 real factor multiplies in as a plain ring element
    e = euler_class(S2, [LineSummand(1)], extra_real_euler={"x": 2})
    assert e == u(S2) * (2 * elem(S2, "x"))


def test_euler_class_homogeneity():
    e = euler_class(S2, [LineSummand(2, {"x": 1}), LineSummand(-1, {"x": 3})])
    assert e.homogeneous_degree() == 4


def test_chern_must_have_degree_two():
    with pytest.raises(ValidationError):
        euler_class(CP2, [LineSummand(1, {"x^2": 1})])


def test_invert_examples():
    assert invert_euler(u(S2)) == u(S2, -1)

    inv = invert_euler(u(S2) + elem(S2, "x"))
    assert inv == u(S2, -1) - elem(S2, "x") * u(S2, -2)

    assert invert_euler(EquivariantClass.scalar(S2, 2, upow=1)) == EquivariantClass.scalar(
        S2, Fraction(1, 2), upow=-1
    )


def test_invert_rejects_weight_zero_directions():
    with pytest.raises(NonInvertibleError):
        invert_euler(euler_class(S2, [LineSummand(0, {"x": 1})]))
    with pytest.raises(NonInvertibleError):
        invert_euler(EquivariantClass.zero(S2))
    with pytest.raises(NonInvertibleError):
        invert_euler(u(S2) + EquivariantClass.one(S2))  # 1/(u+1) is not Laurent


def test_invert_degree_negates():
    e = euler_class(CP2, [LineSummand(3, {"x": 1}), LineSummand(-2, {"x": 5})])
    assert e.homogeneous_degree() == 4
    assert invert_euler(e).homogeneous_degree() == -4


def _random_admissible_euler(rng, ring):
    degree_two = [l for l in ring.labels if ring.degrees[l] == 2]
    summands = []
    for _ in range(rng.randint(1, 4)):
        weight = rng.choice([w for w in range(-5, 6) if w != 0])
        chern = {l: rng.randint(-3, 3) for l in degree_two if rng.random() < 0.7}
        summands.append(LineSummand(weight, chern))
    return euler_class(ring, summands)


def test_invert_is_exact_inverse_randomized():
    rng = random.Random(101)
    for ring in FIXTURE_RINGS:
        one = EquivariantClass.one(ring)
        for _ in range(250):
            e = _random_admissible_euler(rng, ring)
            assert e * invert_euler(e) == one
            assert invert_euler(e) * e == one


def test_ring_mul_associative_commutative_random():
    rng = random.Random(55)

    def random_class(ring):
        terms = {}
        for _ in range(rng.randint(0, 3)):
            power = rng.randint(-2, 2)
            label = rng.choice(ring.labels)
            terms.setdefault(power, {})[label] = Fraction(rng.randint(-4, 4))
        return EquivariantClass(ring, terms)

    for ring in FIXTURE_RINGS:
        for _ in range(100):
            a, b, c = (random_class(ring) for _ in range(3))
            assert (a * b) * c == a * (b * c)
            assert a * b == b * a
            assert a * (b + c) == a * b + a * c


def test_homogeneity_preserved_by_mul():
    rng = random.Random(77)
    for _ in range(100):
        a = _random_admissible_euler(rng, S2XS2)
        b = _random_admissible_euler(rng, S2XS2)
        da, db = a.homogeneous_degree(), b.homogeneous_degree()
        product = a * b
        if product.is_zero:
            continue
        assert product.homogeneous_degree() == da + db


def test_integrate_examples():
    assert integrate_over_component(elem(S2, "x")) == RationalLaurent.constant(1)
    assert integrate_over_component(u(S2) + elem(S2, "x")) == RationalLaurent.constant(1)
    got = integrate_over_component(elem(S2, "x") * u(S2, -1))
    assert got == RationalLaurent({-1: 1})


def test_integral_of_unit_vanishes_on_positive_dimension():
    assert integrate_over_component(EquivariantClass.one(S2)) == RationalLaurent.zero()
    assert integrate_over_component(EquivariantClass.one(PT)) == RationalLaurent.constant(1)


def test_tensor_ring_integral_is_product_of_tops():
    x = elem(S2XS2, "x")
    y = elem(S2XS2, "y")
    assert integrate_over_component(x * y) == RationalLaurent.constant(1)
    assert integrate_over_component(x) == RationalLaurent.zero()
    assert (x * x).is_zero


def test_tensor_ring_rejects_label_collision():
    with pytest.raises(ValidationError):
        tensor_ring(sphere_ring("x"), sphere_ring("x"))


def test_builtin_ring_names():
    assert builtin_ring("point").labels == ("1",)
    assert builtin_ring("s2").top_label == "x"
    assert builtin_ring("cp2").top_label == "x^2"
    assert builtin_ring("s2xs2").top_label == "x*y"
    with pytest.raises(ValidationError):
        builtin_ring("torus")


def test_associativity_exhaustive_on_fixture_rings():
    for ring in FIXTURE_RINGS:
        for a, b, c in itertools.product(ring.labels, repeat=3):
            ea, eb, ec = ({a: Fraction(1)}, {b: Fraction(1)}, {c: Fraction(1)})
            left = ring.multiply_elements(ring.multiply_elements(ea, eb), ec)
            right = ring.multiply_elements(ea, ring.multiply_elements(eb, ec))
            assert left == right


def test_class_serialization_round_trip_keys():
    c = euler_class(S2, [LineSummand(2, {"x": Fraction(1, 3)})]) * u(S2, -1)
    payload = c.to_json()
    assert payload == {
        "terms": [
            {"upow": -1, "coeffs": {"x": "1/3"}},
            {"upow": 0, "coeffs": {"1": "2"}},
        ]
    }


def test_rational_laurent_str_and_json():
    zero = RationalLaurent.zero()
    assert str(zero) == "0"
    const = RationalLaurent.constant(Fraction(5, 2))
    assert str(const) == "5/2"
    mixed = RationalLaurent({2: 3, 0: 1, -1: Fraction(-1, 2)})
    assert str(mixed) == "3*u^2 + 1 + -1/2*u^-1"
    assert mixed.to_json() == {"value": "1", "residue_upowers": [-1, 2]}
    assert mixed.residue_powers() == (-1, 2)
    assert const.is_constant and not mixed.is_constant


def test_floats_rejected_everywhere():
    with pytest.raises(ValidationError):
        EquivariantClass.scalar(S2, 0.5)
    with pytest.raises(ValidationError):
        LineSummand(1, {"x": 0.25})
    with pytest.raises(ValidationError):
        RationalLaurent({0: 1.5})


@settings(max_examples=200)
@given(
    st.lists(
        st.tuples(
            st.integers(min_value=-5, max_value=5).filter(lambda w: w != 0),
            st.integers(min_value=-4, max_value=4),
        ),
        min_size=1,
        max_size=4,
    )
)
def test_invert_property_hypothesis(data):
    summands = [LineSummand(w, {"x": c}) for w, c in data]
    e = euler_class(S2, summands)
    assert e * invert_euler(e) == EquivariantClass.one(S2)
