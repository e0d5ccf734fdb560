from conjcalc.core import relations
from conjcalc.core.exceptions import BudgetExceeded, TooLarge
from conjcalc.core.partition import ElementPartition, PairRelation
from conjcalc.core.semigroup import trivial_multiplication
import numpy as np
import pytest


def test_sim_p1_is_trivial_on_commutative_semigroups(min3, null3) -> None:
    for S in (min3, null3):
        assert relations.sim_p1(S) == PairRelation.identity(S.order)
        assert relations.sim_p(S).is_discrete()


def test_sim_p_in_a_group_is_conjugacy(s3_semigroup) -> None:
    partition = relations.sim_p(s3_semigroup)

    assert partition.classes() == [[0], [1, 2, 5], [3, 4]], (
        "Classes should be the identity, the transpositions and the "
        "3-cycles"
    )


def test_coupled_relations_agree_in_a_group(s3_semigroup) -> None:
    conjugacy = relations.sim_p(s3_semigroup).to_relation()

    assert relations.sim_p1(s3_semigroup) == conjugacy
    assert relations.sim_n(s3_semigroup) == conjugacy
    assert relations.sim_o(s3_semigroup) == conjugacy


def test_sim_s_in_s3_is_parity(s3_semigroup) -> None:
    partition = relations.sim_s(s3_semigroup)

    assert partition.num_classes == 2
    assert partition.classes() == [[0, 3, 4], [1, 2, 5]]


def test_sim_star1_closes_to_sim_s(s3_semigroup, matrix_units) -> None:
    for S in (s3_semigroup, matrix_units):
        star = relations.sim_star1(S)
        assert star.issubset(relations.sim_s(S).to_relation())
        assert star.equivalence_closure() == relations.sim_s(S)


def test_null_semigroup(null3) -> None:
    """Every pair meets sim_o through the zero, but sim_c keeps the zero
    apart"""

    assert len(relations.sim_o(null3)) == 9
    assert relations.sim_c(null3) == PairRelation.identity(3)
    assert relations.sim_s(null3).is_discrete()


def test_sim_c_equals_sim_o_without_zero(s3_semigroup) -> None:
    assert relations.sim_c(s3_semigroup) == relations.sim_o(s3_semigroup)


def test_matrix_units(matrix_units) -> None:
    """e11 ~p e22 through e12 e21 and e21 e12; e12 ~p 0 through e11"""

    partition = relations.sim_p(matrix_units)

    assert partition.classes() == [[0, 3], [1, 2, 4]]
    assert (1, 4) in relations.sim_p1(matrix_units)
    assert (1, 4) not in relations.sim_n(matrix_units)


def test_coupled_searches_are_guarded() -> None:
    big = trivial_multiplication(65)

    for search in (relations.sim_n, relations.sim_w, relations.sim_c):
        with pytest.raises(TooLarge):
            search(big)


def test_sim_s1_bounded(s3_semigroup) -> None:
    bounded = relations.sim_s1_bounded(s3_semigroup, 4)

    assert bounded.is_reflexive and bounded.is_symmetric
    assert relations.sim_p1(s3_semigroup).issubset(bounded)
    assert bounded.issubset(relations.sim_s(s3_semigroup).to_relation())


def test_sim_s1_bounded_grows_with_the_bound(matrix_units) -> None:
    previous = relations.sim_s1_bounded(matrix_units, 1)
    for L in range(2, 5):
        current = relations.sim_s1_bounded(matrix_units, L)
        assert previous.issubset(current), f"Not monotone at L={L}"
        previous = current


def test_sim_s1_bounded_limits(min3) -> None:
    assert relations.sim_s1_bounded(min3, 1) == PairRelation.identity(3)
    with pytest.raises(ValueError):
        relations.sim_s1_bounded(min3, 0)
    with pytest.raises(BudgetExceeded):
        relations.sim_s1_bounded(min3, 3, state_cap=1)


def test_compute_dispatch(s3_semigroup) -> None:
    assert isinstance(
        relations.compute(s3_semigroup, "sim_s"), ElementPartition
    )
    assert isinstance(
        relations.compute(s3_semigroup, "sim_w"), PairRelation
    )
    assert relations.compute(s3_semigroup, "sim_s1", L=2) == (
        relations.sim_s1_bounded(s3_semigroup, 2)
    )
    with pytest.raises(ValueError):
        relations.compute(s3_semigroup, "sim_x")


def test_containment_matrix(s3_semigroup) -> None:
    report = relations.containment_matrix(s3_semigroup, L=3)

    assert report.names == relations.RELATION_NAMES
    assert report.violations() == [], "Sound inclusions must hold"
    assert report.is_equal("sim_p1", "sim_p")
    assert report.is_equal("sim_n", "sim_o")
    assert report.is_strict("sim_p", "sim_s")
    assert ("sim_s", "sim_p") in report.witnesses

    found = report.to_dict()
    assert found["bound_L"] == 3
    assert found["matrix"][0][0] == "subset"
    assert found["sizes"]["sim_s"] == 18


def test_check_compatibility(s3_semigroup) -> None:
    assert (
        relations.check_compatibility(
            s3_semigroup, relations.sim_s(s3_semigroup)
        )
        is None
    )

    # e and (1 2) share a class, everything else is a singleton
    broken = ElementPartition.from_classes(6, [[0, 2]])
    s1, t1, s2, t2 = relations.check_compatibility(s3_semigroup, broken)
    assert broken.same(s1, t1) and broken.same(s2, t2)
    assert not broken.same(
        s3_semigroup.product(s1, s2), s3_semigroup.product(t1, t2)
    )


def test_check_powers(s3_semigroup) -> None:
    assert (
        relations.check_powers(s3_semigroup, relations.sim_p(s3_semigroup))
        is None
    )

    # e and (1 2 3) together, but their squares are e and (1 3 2)
    broken = ElementPartition.from_classes(6, [[0, 3]])
    s, t, k = relations.check_powers(s3_semigroup, broken)
    assert k == 2
    assert {s, t} == {0, 3}


def test_check_bounded_products(matrix_units) -> None:
    rng = np.random.default_rng(1)

    assert (
        relations.check_bounded_products(matrix_units, 1, 2, rng, samples=50)
        is None
    )
