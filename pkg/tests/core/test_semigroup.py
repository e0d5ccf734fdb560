from conjcalc.core import semigroup
from conjcalc.core.exceptions import NonAssociative, ShapeMismatch, TooLarge
from conjcalc.families.groups import FiniteGroup
import numpy as np
import pytest


def test_validate_detects_identity_and_zero(min3) -> None:
    """The chain under min has its top as identity and its bottom as zero"""

    assert min3.identity == 2, "Identity of min(3) should be index 2"
    assert min3.zero == 0, "Zero of min(3) should be index 0"

    group = semigroup.validate(["e", "g"], [[0, 1], [1, 0]])
    assert group.identity == 0
    assert group.zero is None, "A nontrivial group has no zero"


def test_validate_rejects_bad_shapes() -> None:
    with pytest.raises(ShapeMismatch):
        semigroup.validate(["a", "b"], [[0, 1]])
    with pytest.raises(ShapeMismatch):
        semigroup.validate(["a", "a"], [[0, 0], [0, 0]])
    with pytest.raises(ShapeMismatch):
        semigroup.validate(["a", "b"], [[0, 2], [1, 0]])
    with pytest.raises(ShapeMismatch):
        semigroup.validate([], [])


def test_validate_reports_first_nonassociative_triple() -> None:
    with pytest.raises(NonAssociative) as e:
        semigroup.validate(["a", "b"], [[1, 0], [0, 0]])

    assert e.value.triple == (0, 0, 1), "Least failing triple is (a, a, b)"
    assert "(a*a)*b" in str(e.value)


def test_validate_order_cap(min3) -> None:
    with pytest.raises(TooLarge):
        semigroup.validate(min3.elements, min3.table, max_order=2)


def test_table_is_read_only(min3) -> None:
    with pytest.raises(ValueError):
        min3.table[0, 0] = 1


def test_labels_and_products(min3) -> None:
    assert min3.index("1") == 1
    assert min3.label(2) == "2"
    assert min3.product(1, 2) == 1
    assert min3.product_of([2, 2, 1]) == 1
    assert min3.power(1, 3) == 1

    with pytest.raises(ValueError):
        min3.index("x")
    with pytest.raises(ValueError):
        min3.product_of([])
    with pytest.raises(ValueError):
        min3.power(1, 0)


def test_adjoin_identity(null3) -> None:
    S1 = semigroup.adjoin_identity(null3)

    assert S1.order == 4
    assert S1.identity == 3, "The adjoined identity takes the last index"
    assert S1.zero == null3.zero
    assert S1.elements[-1] == "1'", "Label '1' is taken, so it is primed"
    assert np.array_equal(S1.table[:3, :3], null3.table)
    assert list(S1.table[3]) == [0, 1, 2, 3]


def test_adjoin_identity_keeps_monoids(min3) -> None:
    assert semigroup.adjoin_identity(min3) is min3


def test_with_zero() -> None:
    group = semigroup.validate(["e", "g"], [[0, 1], [1, 0]])
    G0 = semigroup.with_zero(group)

    assert G0.elements == ("e", "g", "0")
    assert G0.zero == 2
    assert G0.identity == 0
    assert list(G0.table[:, 2]) == [2, 2, 2]


def test_constructors(null3) -> None:
    Z3 = semigroup.cyclic_group(3)
    assert Z3.product(2, 2) == 1
    assert Z3.is_commutative()

    assert null3.zero == 0
    assert null3.identity is None
    assert (null3.table == 0).all()

    L2 = semigroup.left_zero(2)
    assert L2.product(1, 0) == 1
    assert L2.identity is None and L2.zero is None
    assert not L2.is_commutative()


def test_direct_product_is_a_group() -> None:
    Z6 = semigroup.direct_product(
        semigroup.cyclic_group(2), semigroup.cyclic_group(3)
    )

    assert Z6.order == 6
    assert Z6.label(4) == "(1,1)", "(a, b) has index a*|T| + b"
    assert Z6.identity == 0
    assert FiniteGroup(Z6).is_abelian()


def test_subsemigroup_generated() -> None:
    Z6 = semigroup.cyclic_group(6)

    assert semigroup.subsemigroup_generated(Z6, [2]) == frozenset({0, 2, 4})
    assert semigroup.subsemigroup_generated(Z6, [1]) == frozenset(range(6))
    with pytest.raises(ValueError):
        semigroup.subsemigroup_generated(Z6, [])
    with pytest.raises(ValueError):
        semigroup.subsemigroup_generated(Z6, [6])


def test_all_associative_tables() -> None:
    """Labelled semigroups of orders 1 to 3"""

    assert len(semigroup.all_associative_tables(1)) == 1
    assert len(semigroup.all_associative_tables(2)) == 8
    assert len(semigroup.all_associative_tables(3)) == 113
    with pytest.raises(TooLarge):
        semigroup.all_associative_tables(4)


def test_random_associative_is_seeded() -> None:
    first = semigroup.random_associative(np.random.default_rng(5), 2)
    second = semigroup.random_associative(np.random.default_rng(5), 2)

    assert first is not None
    assert np.array_equal(first.table, second.table)
    assert semigroup.first_nonassociative(first.table) is None


def test_to_dict(min3) -> None:
    assert min3.to_dict() == {
        "elements": ["0", "1", "2"],
        "table": [[0, 0, 0], [0, 1, 1], [0, 1, 2]],
    }
