"""Rendering of results as JSON, rich tables or DOT"""

import logging
from typing import Any, Dict, List, Sequence, Union

import networkx as nx
from rich.console import Console
from rich.table import Table

from conjcalc import core
from conjcalc.core.partition import ElementPartition, PairRelation
from conjcalc.core.relations import ContainmentReport
from conjcalc.core.semigroup import FiniteSemigroup
from conjcalc.core.utils import dump_json

logger = logging.getLogger(__name__)
logger.setLevel(core.config.constants.LOGLEVEL_MODULE_DEFAULT)


def partition_payload(
    S: FiniteSemigroup, partition: ElementPartition
) -> Dict[str, Any]:
    classes = partition.classes()
    return {
        "classes": classes,
        "labels": [[S.label(a) for a in block] for block in classes],
    }


def relation_payload(
    S: FiniteSemigroup, relation: PairRelation
) -> Dict[str, Any]:
    pairs = relation.pairs
    return {
        "pairs": [list(p) for p in pairs],
        "labels": [[S.label(a), S.label(b)] for a, b in pairs],
        "symmetric": relation.is_symmetric,
        "reflexive": relation.is_reflexive,
    }


def result_payload(
    S: FiniteSemigroup, value: Union[PairRelation, ElementPartition]
) -> Dict[str, Any]:
    if isinstance(value, ElementPartition):
        return partition_payload(S, value)
    return relation_payload(S, value)


def containment_digraph(report: ContainmentReport) -> nx.DiGraph:
    """Hasse diagram of the verified inclusions

    Relations equal on the instance share a node, labelled with all their
    names joined by " = ".
    """

    full = nx.DiGraph()
    full.add_nodes_from(report.names)
    for a in report.names:
        for b in report.names:
            if a != b and report.is_subset(a, b):
                full.add_edge(a, b)

    condensed = nx.condensation(full)
    names = {
        node: " = ".join(
            sorted(
                condensed.nodes[node]["members"],
                key=report.names.index,
            )
        )
        for node in condensed.nodes
    }
    reduced = nx.transitive_reduction(condensed)

    return nx.relabel_nodes(reduced, names)


def to_dot(graph: nx.DiGraph, name: str = "containment") -> str:
    lines = [f"digraph {name} {{", "  rankdir=BT;"]
    for node in sorted(graph.nodes):
        lines.append(f'  "{node}";')
    for a, b in sorted(graph.edges):
        lines.append(f'  "{a}" -> "{b}";')
    lines.append("}")
    return "\n".join(lines)


def print_json(payload: Any) -> None:
    # Plain print keeps stdout parseable
    print(dump_json(payload))


def print_table(
    title: str, columns: Sequence[str], rows: List[Sequence[Any]]
) -> None:
    table = Table(title=title)
    for column in columns:
        table.add_column(column)
    for row in rows:
        table.add_row(*[str(value) for value in row])
    Console().print(table)


def print_partition_table(
    title: str, S: FiniteSemigroup, partition: ElementPartition
) -> None:
    rows = [
        (number, len(block), ", ".join(S.label(a) for a in block))
        for number, block in enumerate(partition.classes())
    ]
    print_table(title, ["Class", "Size", "Elements"], rows)


def print_containment_table(report: ContainmentReport) -> None:
    rows = []
    for a in report.names:
        rows.append(
            [a]
            + [
                "⊆" if report.is_subset(a, b) else "⊈"
                for b in report.names
            ]
        )
    print_table(
        f"Containments (sim_s1 bounded at L={report.bound_L})",
        ["", *report.names],
        rows,
    )
