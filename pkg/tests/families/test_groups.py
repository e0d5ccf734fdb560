from conjcalc.core.exceptions import NotAGroup
from conjcalc.core.relations import sim_s
from conjcalc.core.semigroup import min_semigroup, trivial_multiplication
from conjcalc.families import groups
import itertools
import pytest


def test_symmetric_group(s3) -> None:
    assert s3.order == 6
    assert not s3.is_abelian()
    assert s3.label(s3.identity) == "e"
    assert s3.inverse(3) == 4, "(1 2 3) and (1 3 2) are inverse"
    assert s3.inverse(2) == 2


def test_derived_subgroup(s3) -> None:
    assert s3.derived_subgroup == frozenset({0, 3, 4})
    for p, r in itertools.product(range(6), repeat=2):
        assert s3.commutator(p, r) in s3.derived_subgroup


def test_subgroups(s3) -> None:
    assert s3.is_subgroup({0, 1})
    assert not s3.is_normal({0, 1}), "A transposition is not normal"
    assert s3.is_normal({0, 3, 4})
    assert not s3.is_subgroup({1, 2})
    assert s3.subgroup_generated([1, 2]) == frozenset(range(6))


def test_coset_key(s3) -> None:
    A3 = s3.derived_subgroup

    assert s3.coset_key(A3, 3) == 0
    assert s3.coset_key(A3, 5) == 1


def test_group_sim_s_is_the_commutator_coset(s3) -> None:
    expected = sim_s(s3.semigroup)

    for s, t in itertools.product(range(6), repeat=2):
        assert groups.group_sim_s(s3, s, t) == expected.same(s, t)


def test_small_groups() -> None:
    found = groups.small_groups()

    assert sorted(found) == sorted(
        ["trivial", "Z2", "Z3", "Z4", "Z5", "Z6", "Z2xZ2", "S3"]
    )
    for name, G in found.items():
        assert G.is_abelian() == (name != "S3")
        if G.is_abelian():
            assert G.derived_subgroup == frozenset({G.identity})


def test_not_a_group() -> None:
    with pytest.raises(NotAGroup):
        groups.FiniteGroup(min_semigroup(3))
    with pytest.raises(NotAGroup):
        groups.group_from_semigroup(trivial_multiplication(2))
