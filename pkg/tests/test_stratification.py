"""Sphere stratifications, skeleta, lengths and the cycle condition."""

import itertools

import pytest

from strat_euler import (
    AmbientGroup,
    EmptySpaceError,
    StratifiedSpace,
    Stratum,
    Subgroup,
    UnknownStratumError,
    ValidationError,
    check_cycle_condition,
    circle_representation,
    cyclic_representation,
    fixed_part,
    meet,
    skeleton_filtration,
    sphere_stratification,
    stratification_records,
    stratum_length,
)

CIRCLE = AmbientGroup.circle()


def by_id(space):
    return {s.id: s for s in space.strata}


def test_s5_235_fixture():
    space = sphere_stratification(circle_representation([2, 3, 5]))
    strata = by_id(space)
    assert set(strata) == {"B_e", "B_Z2", "B_Z3", "B_Z5"}
    assert strata["B_e"].dim == 5
    for sid in ("B_Z2", "B_Z3", "B_Z5"):
        assert strata[sid].dim == 1
        assert space.codim(sid) == 4
        assert ("%s" % sid, "B_e") in space.closure_order
    assert space.total_dim == 5
    assert len(space.closure_order) == 3


def test_free_circle():
    space = sphere_stratification(circle_representation([1]))
    assert len(space.strata) == 1
    only = space.strata[0]
    assert only.isotropy.is_trivial and only.dim == 1


def test_s2_rotation():
    space = sphere_stratification(circle_representation([1], 1))
    strata = by_id(space)
    assert set(strata) == {"B_e", "B_S1_c0", "B_S1_c1"}
    assert strata["B_e"].dim == 2
    assert strata["B_S1_c0"].dim == 0 and strata["B_S1_c1"].dim == 0
    assert strata["B_S1_c0"].component_index == 0
    assert strata["B_S1_c1"].component_index == 1


def test_cyclic_ambient_sphere():
    space = sphere_stratification(cyclic_representation(4, [1, 2]))
    strata = by_id(space)
    # weight-1 coordinate is free, weight-2 coordinate has the order-2 subgroup
    assert set(strata) == {"B_e", "B_Z2"}
    assert strata["B_e"].dim == 3
    assert strata["B_Z2"].dim == 1


def test_cyclic_ambient_whole_group_fixed_points_split():
    # Z6 on S(C_2 + C_3 + R): the fixed locus is the 0-sphere of the real line
    space = sphere_stratification(cyclic_representation(6, [2, 3], 1))
    strata = by_id(space)
    assert set(strata) == {"B_e", "B_Z2", "B_Z3", "B_Z6_c0", "B_Z6_c1"}
    assert strata["B_e"].dim == 4
    assert strata["B_Z2"].dim == 2 and strata["B_Z3"].dim == 2
    assert strata["B_Z6_c0"].dim == 0 and strata["B_Z6_c1"].dim == 0
    for pole in ("B_Z6_c0", "B_Z6_c1"):
        assert space.above(pole) == {"B_Z2", "B_Z3", "B_e"}
    assert stratum_length(space, "B_Z6_c0") == 2
    assert skeleton_filtration(space)[0] == {"B_Z6_c0", "B_Z6_c1"}


def test_empty_sphere_rejected():
    with pytest.raises(EmptySpaceError):
        sphere_stratification(circle_representation([]))


def test_skeleton_examples():
    s5 = sphere_stratification(circle_representation([2, 3, 5]))
    assert skeleton_filtration(s5) == [
        {"B_Z2", "B_Z3", "B_Z5"},
        {"B_Z2", "B_Z3", "B_Z5", "B_e"},
    ]

    single = sphere_stratification(circle_representation([1]))
    assert skeleton_filtration(single) == [{single.strata[0].id}]

    s2 = sphere_stratification(circle_representation([1], 1))
    assert skeleton_filtration(s2) == [
        {"B_S1_c0", "B_S1_c1"},
        {"B_S1_c0", "B_S1_c1", "B_e"},
    ]


def test_stratum_length_examples():
    s5 = sphere_stratification(circle_representation([2, 3, 5]))
    assert stratum_length(s5, "B_Z2") == 1
    assert stratum_length(s5, "B_e") == 0
    s2 = sphere_stratification(circle_representation([1], 1))
    assert stratum_length(s2, "B_S1_c0") == 1
    with pytest.raises(UnknownStratumError):
        stratum_length(s5, "nope")


def test_stratum_length_long_chain():
    # nested isotropy: weights 4 and 2 give Z4 > Z2 > trivial after adding a free weight
    space = sphere_stratification(circle_representation([1, 2, 4]))
    assert stratum_length(space, "B_Z4") == 2
    assert stratum_length(space, "B_Z2") == 1
    assert stratum_length(space, "B_e") == 0
    assert skeleton_filtration(space) == [
        {"B_Z4"},
        {"B_Z4", "B_Z2"},
        {"B_Z4", "B_Z2", "B_e"},
    ]


def test_cycle_condition_examples():
    s5 = sphere_stratification(circle_representation([2, 3, 5]))
    ok = check_cycle_condition(
        s5, {"B_e": 3, "B_Z2": 1, "B_Z3": 1, "B_Z5": 1}
    )
    assert ok.passed and ok.top_dim == 3 and ok.offending == ()

    bad = check_cycle_condition(s5, {"B_e": 3, "B_Z2": 2})
    assert not bad.passed and bad.offending == ("B_Z2",)

    single = sphere_stratification(circle_representation([1]))
    only_id = single.strata[0].id
    assert check_cycle_condition(single, {only_id: 0}).passed

    with pytest.raises(ValidationError):
        check_cycle_condition(s5, {"B_e": -1})
    with pytest.raises(UnknownStratumError):
        check_cycle_condition(s5, {"missing": 1})
    assert check_cycle_condition(s5, {}).passed


def test_manual_space_validation():
    e = Subgroup.trivial(CIRCLE)
    with pytest.raises(ValidationError):
        # closure order must increase dimension
        StratifiedSpace(
            [Stratum("a", e, 2), Stratum("b", e, 2)],
            [("a", "b")],
        )
    with pytest.raises(ValidationError):
        # maximal strata must have the top dimension
        StratifiedSpace([Stratum("a", e, 2), Stratum("b", e, 1)], [])
    with pytest.raises(ValidationError):
        StratifiedSpace([Stratum("a", e, 2), Stratum("a", e, 2)], [])


def test_skeleton_on_non_graded_poset():
    # chain low < top next to an isolated maximal stratum: skeleta collect
    # strata by the length of the longest chain below them, so every
    # skeleton is closed
    e = Subgroup.trivial(CIRCLE)
    z2 = Subgroup.cyclic(CIRCLE, 2)
    space = StratifiedSpace(
        [Stratum("low", z2, 0), Stratum("top", e, 2), Stratum("island", e, 2)],
        [("low", "top")],
    )
    assert skeleton_filtration(space) == [{"low", "island"}, {"low", "island", "top"}]
    assert stratum_length(space, "low") == 1
    assert stratum_length(space, "island") == 0


def test_manual_space_transitive_closure():
    e = Subgroup.trivial(CIRCLE)
    z2 = Subgroup.cyclic(CIRCLE, 2)
    z4 = Subgroup.cyclic(CIRCLE, 4)
    space = StratifiedSpace(
        [Stratum("bottom", z4, 0), Stratum("mid", z2, 1), Stratum("top", e, 3)],
        [("bottom", "mid"), ("mid", "top")],
    )
    assert ("bottom", "top") in space.closure_order
    assert space.covering_pairs() == {("bottom", "mid"), ("mid", "top")}


# -- oracle: direct enumeration of weight supports ---------------------------


def _oracle_strata(weights, trivial):
    """Independent enumeration: isotropy and dimension per realized support."""
    ambient = CIRCLE
    full = Subgroup.full_circle(ambient)

    def stab(w):
        return full if w == 0 else Subgroup.cyclic(ambient, abs(w))

    realized = set()
    indices = range(len(weights))
    for r in range(1, len(weights) + 1):
        for subset in itertools.combinations(indices, r):
            h = full
            for i in subset:
                h = meet(h, stab(weights[i]))
            realized.add(h)
    if trivial >= 1:
        realized.add(full)

    expected = {}
    for h in realized:
        rep = circle_representation(weights, trivial)
        dim = fixed_part(rep, h).real_rank - 1
        expected[h.label] = dim
    return expected


@pytest.mark.parametrize("trivial", [0, 1, 2])
def test_sphere_strata_match_support_enumeration(trivial):
    for k in range(1, 5):
        for weights in itertools.combinations_with_replacement(range(1, 13), k):
            expected = _oracle_strata(list(weights), trivial)
            space = sphere_stratification(circle_representation(list(weights), trivial))
            got = {}
            for s in space.strata:
                if s.isotropy.label in got:
                    # only zero-dimensional fixed spheres split into components
                    assert s.dim == 0 and got[s.isotropy.label] == 0
                got[s.isotropy.label] = s.dim
            assert got == expected, (weights, trivial)


def test_free_strata_have_positive_dimension():
    for k in range(1, 4):
        for weights in itertools.combinations_with_replacement(range(1, 9), k):
            space = sphere_stratification(circle_representation(list(weights)))
            for s in space.strata:
                if s.isotropy.is_trivial:
                    assert s.dim >= 1


def test_stratification_records_schema():
    space = sphere_stratification(circle_representation([2, 3, 5]))
    records = stratification_records(space)
    assert [r["stratum_id"] for r in records] == ["B_e", "B_Z2", "B_Z3", "B_Z5"]
    for record in records:
        assert set(record) == {"stratum_id", "isotropy", "dim", "codim", "closure_parents"}
    assert records[1]["closure_parents"] == ["B_e"]
