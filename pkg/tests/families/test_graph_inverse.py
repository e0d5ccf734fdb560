from conjcalc.core.exceptions import InvalidGraph, NotClosed, ShapeMismatch
from conjcalc.core.models import GraphElementModel, GraphModel
from conjcalc.families import graph_inverse
from conjcalc.families.graph_inverse import (
    DirectedGraph,
    GisPair,
    GraphInverseSemigroup,
    VertexClassKind,
)
import pytest


def test_invalid_graphs() -> None:
    with pytest.raises(InvalidGraph):
        DirectedGraph([], [])
    with pytest.raises(InvalidGraph):
        DirectedGraph(["v", "v"], [])
    with pytest.raises(InvalidGraph):
        DirectedGraph(["v"], [("e", "v", "w")])
    with pytest.raises(InvalidGraph):
        DirectedGraph(["v", "w"], [("w", "v", "v")])
    with pytest.raises(InvalidGraph):
        graph_inverse.polycyclic(0)


def test_paths() -> None:
    graph = graph_inverse.cycle(3)
    p = graph.path(["e1", "e2", "e3"])

    assert p.is_closed
    assert p.label() == "e1.e2.e3"
    assert graph.vertex_path("v2").label() == "v2"
    with pytest.raises(InvalidGraph):
        graph.path(["e1", "e3"])
    with pytest.raises(InvalidGraph):
        graph.path([])


def test_bicyclic_products(bicyclic) -> None:
    e = bicyclic.edge("e1")
    e_inv = bicyclic.inverse(e)
    v = bicyclic.vertex("v")

    assert bicyclic.multiply(e_inv, e) == v
    assert bicyclic.multiply(e, e_inv) == GisPair(e.x, e.x)
    assert bicyclic.product([e, e_inv, e]) == e
    assert bicyclic.multiply(None, e) is None


def test_labels(bicyclic) -> None:
    e = bicyclic.edge("e1")

    assert bicyclic.label(e) == "e1"
    assert bicyclic.label(bicyclic.inverse(e)) == "(e1)^-1"
    assert bicyclic.label(bicyclic.multiply(e, bicyclic.inverse(e))) == (
        "e1(e1)^-1"
    )
    assert bicyclic.label(bicyclic.vertex("v")) == "v"
    assert bicyclic.label(None) == "0"


def test_products_can_vanish() -> None:
    gis = GraphInverseSemigroup(graph_inverse.line())
    f = gis.edge("f")

    assert gis.multiply(f, f) is None
    assert gis.multiply(gis.vertex("u"), gis.vertex("w")) is None
    assert gis.multiply(gis.inverse(f), f) == gis.vertex("w")


def test_mismatched_pair(tailed_loop) -> None:
    graph = tailed_loop.graph

    with pytest.raises(ShapeMismatch):
        GisPair(graph.path(["f"]), graph.vertex_path("u"))


def test_natural_order(bicyclic) -> None:
    e = bicyclic.edge("e1")
    idempotent = bicyclic.multiply(e, bicyclic.inverse(e))
    v = bicyclic.vertex("v")

    assert bicyclic.is_idempotent(idempotent)
    assert bicyclic.natural_leq(idempotent, v)
    assert not bicyclic.natural_leq(v, idempotent)
    assert bicyclic.natural_leq(None, v)


def test_ball(bicyclic) -> None:
    ball = bicyclic.ball(2)

    assert len(ball) == 7
    assert ball[-1] is None


def test_vertex_classes(bicyclic, tailed_loop) -> None:
    isolated = GraphInverseSemigroup(graph_inverse.isolated_vertex())
    assert isolated.vertex_class("v").kind == VertexClassKind.SINGLETON
    assert str(bicyclic.vertex_class("v")) == "LoopPowers(e1)"
    assert tailed_loop.vertex_class("v").kind == (
        VertexClassKind.COLLAPSES_TO_ZERO
    )
    assert tailed_loop.vertex_class("u").kind == VertexClassKind.SINGLETON
    line = GraphInverseSemigroup(graph_inverse.line())
    assert str(line.vertex_class("w")) == "CollapsesToZero"


def test_approx_closed() -> None:
    graph = graph_inverse.polycyclic(2)
    e1e2 = graph.path(["e1", "e2"])

    assert graph_inverse.approx_closed(e1e2, graph.path(["e2", "e1"]))
    assert not graph_inverse.approx_closed(
        graph.path(["e1", "e1"]), e1e2
    )
    line = graph_inverse.line()
    with pytest.raises(NotClosed):
        graph_inverse.approx_closed(line.path(["f"]), line.vertex_path("u"))


def test_sim_p(bicyclic, polycyclic2) -> None:
    e = bicyclic.edge("e1")

    assert not bicyclic.sim_p(e, bicyclic.inverse(e))
    assert bicyclic.sim_p(
        bicyclic.multiply(e, bicyclic.inverse(e)), bicyclic.vertex("v")
    )
    graph = polycyclic2.graph
    v = graph.vertex_path("v")
    assert polycyclic2.sim_p(
        GisPair(graph.path(["e1", "e2"]), v),
        GisPair(graph.path(["e2", "e1"]), v),
    )
    assert polycyclic2.sim_p(None, None)


def test_sim_s_in_the_bicyclic_monoid(bicyclic) -> None:
    e = bicyclic.edge("e1")
    idempotent = bicyclic.multiply(e, bicyclic.inverse(e))

    assert bicyclic.sim_s(idempotent, bicyclic.vertex("v"))
    assert not bicyclic.sim_s(e, bicyclic.inverse(e))
    assert bicyclic.sim_s_key(e) == ("loop", "e1", 1)


def test_sim_s_collapses_with_two_loops(polycyclic2) -> None:
    assert all(
        polycyclic2.sim_s_key(a) == ("zero",) for a in polycyclic2.ball(2)
    )


def test_witness_partition_refines_sim_p(bicyclic) -> None:
    elements, partition = bicyclic.witness_partition(radius=4)
    index = {a: k for k, a in enumerate(elements)}
    e = bicyclic.edge("e1")
    idempotent = bicyclic.multiply(e, bicyclic.inverse(e))

    assert partition.same(index[idempotent], index[bicyclic.vertex("v")])
    for cls in partition.classes():
        for k in cls:
            assert bicyclic.sim_p(elements[cls[0]], elements[k])


def test_elements_from_model(bicyclic_file) -> None:
    gis = GraphInverseSemigroup(
        DirectedGraph.from_model(GraphModel.from_file(bicyclic_file))
    )
    model = GraphElementModel.from_string('{"x": ["e"], "y": ["@v"]}')

    assert gis.element_from_model(model) == gis.edge("e")
    assert gis.element_from_model(None) is None
