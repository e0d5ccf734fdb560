from conjcalc.core.relations import sim_p, sim_p1, sim_n
from conjcalc.families import ring_trace
from conjcalc.families.ring_trace import element_vector
import itertools
import pytest


def test_matrix_unit_semigroup(matrix_units) -> None:
    assert matrix_units.elements == ("e11", "e12", "e21", "e22", "0")
    assert matrix_units.zero == 4
    assert matrix_units.product(1, 2) == 0, "e12 e21 = e11"
    assert matrix_units.product(1, 1) == 4
    with pytest.raises(ValueError):
        ring_trace.matrix_unit_semigroup(0)


def test_matrix_unit_relations(matrix_units) -> None:
    assert sim_p(matrix_units).classes() == [[0, 3], [1, 2, 4]]
    assert (1, 4) in sim_p1(matrix_units)
    assert (1, 4) not in sim_n(matrix_units)


def test_ring_product(matrix_units) -> None:
    e12, e21 = element_vector(matrix_units, 1), element_vector(matrix_units, 2)

    assert ring_trace.ring_product(matrix_units, e12, e21) == (
        element_vector(matrix_units, 0)
    )
    assert not any(
        ring_trace.ring_product(matrix_units, e12, e12).coefficients
    ), "e12 e12 is the zero of the contracted ring"
    assert not any(element_vector(matrix_units, 4).coefficients)


def test_ring_arithmetic(matrix_units) -> None:
    e11, e22 = element_vector(matrix_units, 0), element_vector(matrix_units, 3)

    assert (e11 + e22).coefficients == (1, 0, 0, 1)
    assert (e11 - e22).coefficients == (1, 0, 0, -1)
    assert (-e11).coefficients == (-1, 0, 0, 0)


def test_commutator_lattice(matrix_units) -> None:
    lattice = ring_trace.commutator_lattice(matrix_units)
    e11, e12, e22 = (element_vector(matrix_units, a) for a in (0, 1, 3))

    assert len(ring_trace.ring_basis(matrix_units)) == 4
    assert lattice.rank == 3
    assert lattice.torsion() == ([], 1)
    assert lattice.contains(e11 - e22)
    assert not lattice.contains(e11 - e12)
    assert ring_trace.same_trace(matrix_units, e11, e22)


def test_group_ring_trace(s3_semigroup) -> None:
    lattice = ring_trace.commutator_lattice(s3_semigroup)

    assert len(ring_trace.ring_basis(s3_semigroup)) == 6
    assert lattice.rank == 3
    assert lattice.torsion() == ([], 3), "One free generator per class"


def test_trace_checks(matrix_units, s3_semigroup, min3, null3) -> None:
    for S in (matrix_units, s3_semigroup, min3, null3):
        assert ring_trace.check_tr_prim(S).passed, f"{S} fails"
        assert ring_trace.check_trace_lemma(S).passed, f"{S} fails"


def test_commutator_ideal(matrix_units) -> None:
    assert ring_trace.commutator_ideal_check(matrix_units, 4)
    assert ring_trace.commutator_ideal_lattice(matrix_units).rank >= 3


def test_rational_membership(matrix_units) -> None:
    lattice = ring_trace.commutator_lattice(matrix_units).lattice

    for vector in itertools.product(range(-1, 2), repeat=4):
        assert ring_trace.rational_membership(
            lattice, list(vector)
        ) == lattice.contains(vector), f"Disagreement on {vector}"


def test_unpruned_lattice(matrix_units, s3_semigroup) -> None:
    """The spanning-forest pruning keeps the lattice unchanged"""

    for S in (matrix_units, s3_semigroup):
        full = ring_trace.CommutatorLattice(S, pruned=False)
        assert full.lattice == ring_trace.commutator_lattice(S).lattice


def test_trace_keys_are_canonical(matrix_units) -> None:
    lattice = ring_trace.commutator_lattice(matrix_units)
    e11, e12, e22, zero = (lattice.trace_key(a) for a in (0, 1, 3, 4))

    assert e11 == e22
    assert e12 == zero == (0, 0, 0, 0), "e12 = e11 e12 and e12 e11 = 0"
    assert e11 != e12
