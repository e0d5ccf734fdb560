from conjcalc.core import report
from conjcalc.core.partition import PairRelation
from conjcalc.core.relations import (
    RELATION_NAMES,
    containment_matrix,
    sim_s,
)
import networkx as nx
import orjson


def test_partition_payload(s3_semigroup) -> None:
    payload = report.partition_payload(s3_semigroup, sim_s(s3_semigroup))

    assert payload["classes"] == [[0, 3, 4], [1, 2, 5]]
    assert payload["labels"][0] == ["e", "(1 2 3)", "(1 3 2)"]


def test_relation_payload(min3) -> None:
    payload = report.relation_payload(min3, PairRelation.identity(3))

    assert payload["pairs"] == [[0, 0], [1, 1], [2, 2]]
    assert payload["labels"][1] == ["1", "1"]
    assert payload["symmetric"] and payload["reflexive"]


def test_result_payload_dispatch(min3) -> None:
    assert "classes" in report.result_payload(min3, sim_s(min3))
    assert "pairs" in report.result_payload(min3, PairRelation.identity(3))


def test_containment_digraph(s3_semigroup) -> None:
    graph = report.containment_digraph(containment_matrix(s3_semigroup, L=3))

    assert nx.is_directed_acyclic_graph(graph)
    for name in RELATION_NAMES:
        assert any(
            name in node.split(" = ") for node in graph.nodes
        ), f"{name} is missing from the diagram"
    # Equal relations share a node
    assert any("sim_p1 = sim_p" in node for node in graph.nodes)


def test_to_dot() -> None:
    graph = nx.DiGraph()
    graph.add_edge("sim_p", "sim_s")

    assert report.to_dot(graph) == "\n".join(
        [
            "digraph containment {",
            "  rankdir=BT;",
            '  "sim_p";',
            '  "sim_s";',
            '  "sim_p" -> "sim_s";',
            "}",
        ]
    )


def test_print_json(capsys) -> None:
    report.print_json({"order": 3, "classes": [[0], [1, 2]]})

    assert orjson.loads(capsys.readouterr().out) == {
        "order": 3,
        "classes": [[0], [1, 2]],
    }


def test_print_partition_table(capsys, s3_semigroup) -> None:
    report.print_partition_table("sim_s", s3_semigroup, sim_s(s3_semigroup))
    out = capsys.readouterr().out

    assert "sim_s" in out
    assert "(1 2 3)" in out
