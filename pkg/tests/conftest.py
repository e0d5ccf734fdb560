# flake8: noqa
import pytest
from conjcalc.core.semigroup import (
    FiniteSemigroup,
    cyclic_group,
    min_semigroup,
    trivial_multiplication,
    validate,
)
from conjcalc.families.groups import FiniteGroup, symmetric_group
from conjcalc.families.graph_inverse import (
    GraphInverseSemigroup,
    loop_with_tail,
    polycyclic,
)
from conjcalc.families.ring_trace import matrix_unit_semigroup
from conjcalc.families.transforms import (
    MapKind,
    TransformationMonoid,
    monoid_cayley,
)
import os
import orjson


def write_json(folder: str, name: str, payload: dict) -> str:
    path = os.path.join(folder, name)
    with open(path, "wb") as f:
        f.write(orjson.dumps(payload))
    return path


@pytest.fixture(scope="session")
def s3() -> FiniteGroup:
    """The symmetric group on three points

    Element indices: 0 = e, 1 = (2 3), 2 = (1 2), 3 = (1 2 3),
    4 = (1 3 2), 5 = (1 3)
    """

    return symmetric_group(3)


@pytest.fixture(scope="session")
def s3_semigroup(s3) -> FiniteSemigroup:
    return s3.semigroup


@pytest.fixture(scope="session")
def z2() -> FiniteGroup:
    """Z2 with labels e and a, so "0" stays free for zero entries"""

    return FiniteGroup(validate(["e", "a"], [[0, 1], [1, 0]]))


@pytest.fixture(scope="session")
def matrix_units() -> FiniteSemigroup:
    """2x2 matrix units e11, e12, e21, e22 and the zero (index 4)"""

    return matrix_unit_semigroup(2)


@pytest.fixture(scope="session")
def min3() -> FiniteSemigroup:
    return min_semigroup(3)


@pytest.fixture(scope="session")
def null3() -> FiniteSemigroup:
    return trivial_multiplication(3)


@pytest.fixture(scope="session")
def bicyclic() -> GraphInverseSemigroup:
    """One vertex v with a single loop e"""

    return GraphInverseSemigroup(polycyclic(1))


@pytest.fixture(scope="session")
def polycyclic2() -> GraphInverseSemigroup:
    return GraphInverseSemigroup(polycyclic(2))


@pytest.fixture(scope="session")
def tailed_loop() -> GraphInverseSemigroup:
    return GraphInverseSemigroup(loop_with_tail())


@pytest.fixture(scope="session")
def t3() -> TransformationMonoid:
    return monoid_cayley(MapKind.T, 3)


@pytest.fixture(scope="session")
def resource_folder(tmp_path_factory) -> str:
    """Folder with the JSON inputs used by the CLI tests"""

    return str(tmp_path_factory.mktemp("resources"))


@pytest.fixture(scope="session")
def s3_file(resource_folder, s3_semigroup) -> str:
    return write_json(resource_folder, "s3.json", s3_semigroup.to_dict())


@pytest.fixture(scope="session")
def min3_file(resource_folder, min3) -> str:
    return write_json(resource_folder, "min3.json", min3.to_dict())


@pytest.fixture(scope="session")
def z4_file(resource_folder) -> str:
    return write_json(resource_folder, "z4.json", cyclic_group(4).to_dict())


@pytest.fixture(scope="session")
def units_file(resource_folder, matrix_units) -> str:
    return write_json(
        resource_folder, "matrix-units.json", matrix_units.to_dict()
    )


@pytest.fixture(scope="session")
def nonassociative_file(resource_folder) -> str:
    return write_json(
        resource_folder,
        "nonassociative.json",
        {"elements": ["a", "b"], "table": [[1, 0], [0, 0]]},
    )


@pytest.fixture(scope="session")
def rees_file(resource_folder) -> str:
    """M0(Z2; 2, 2; P) with P antidiagonal"""

    return write_json(
        resource_folder,
        "rees-antidiagonal.json",
        {
            "group": {"elements": ["e", "a"], "table": [[0, 1], [1, 0]]},
            "I": 2,
            "Lambda": 2,
            "P": [["0", "e"], ["e", "0"]],
            "with_zero": True,
        },
    )


@pytest.fixture(scope="session")
def rees_unnormalized_file(resource_folder) -> str:
    """M(Z2; 2, 2; P) with P = [[a, e], [e, a]]"""

    return write_json(
        resource_folder,
        "rees-unnormalized.json",
        {
            "group": {"elements": ["e", "a"], "table": [[0, 1], [1, 0]]},
            "I": 2,
            "Lambda": 2,
            "P": [["a", "e"], ["e", "a"]],
            "with_zero": False,
        },
    )


@pytest.fixture(scope="session")
def bicyclic_file(resource_folder) -> str:
    return write_json(
        resource_folder,
        "bicyclic.json",
        {"vertices": ["v"], "edges": [["e", "v", "v"]]},
    )
