"""Graph inverse semigroups G(E)

Nonzero elements are stored as reduced pairs (x, y) standing for x y^-1,
with x and y paths ending at the same vertex. The zero is None.
"""

import logging
from dataclasses import dataclass
from enum import Enum
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

import networkx as nx

from conjcalc import core
from conjcalc.core.exceptions import InvalidGraph, NotClosed, ShapeMismatch
from conjcalc.core.models import GraphElementModel, GraphModel
from conjcalc.core.partition import ElementPartition

logger = logging.getLogger(__name__)
logger.setLevel(core.config.constants.LOGLEVEL_MODULE_DEFAULT)

VERTEX_PREFIX = "@"


class DirectedGraph:
    def __init__(
        self,
        vertices: Sequence[str],
        edges: Sequence[Tuple[str, str, str]],
    ) -> None:
        """A finite directed multigraph with named vertices and edges

        Parameters
        ----------
        vertices : Sequence[str]
            Vertex names
        edges : Sequence[Tuple[str, str, str]]
            (edge, source, range) triples

        Raises
        ------
        InvalidGraph
            On duplicate names or an edge at an unknown vertex
        """

        self.vertices: Tuple[str, ...] = tuple(vertices)
        if not self.vertices:
            raise InvalidGraph("A graph needs at least one vertex")
        if len(set(self.vertices)) != len(self.vertices):
            raise InvalidGraph("Vertex names must be distinct")

        self.graph = nx.MultiDiGraph()
        self.graph.add_nodes_from(self.vertices)
        self._ends: Dict[str, Tuple[str, str]] = {}
        for name, source, target in edges:
            if name in self._ends or name in self.vertices:
                raise InvalidGraph(f"Edge name '{name}' is already in use")
            for end in (source, target):
                if end not in self.graph:
                    raise InvalidGraph(
                        f"Edge '{name}' meets unknown vertex '{end}'"
                    )
            self._ends[name] = (source, target)
            self.graph.add_edge(source, target, key=name)

    @classmethod
    def from_model(cls, model: GraphModel) -> "DirectedGraph":
        return cls(model.vertices, model.edges)

    @property
    def edges(self) -> Tuple[str, ...]:
        return tuple(self._ends)

    def source(self, e: str) -> str:
        return self._ends[e][0]

    def range(self, e: str) -> str:
        return self._ends[e][1]

    def edges_into(self, v: str) -> List[str]:
        """r^-1(v) restricted to edges"""

        return [key for _, _, key in self.graph.in_edges(v, keys=True)]

    def edges_out_of(self, v: str) -> List[str]:
        return [key for _, _, key in self.graph.out_edges(v, keys=True)]

    def vertex_path(self, v: str) -> "Path":
        if v not in self.graph:
            raise InvalidGraph(f"Unknown vertex '{v}'")
        return Path((v,), ())

    def path(self, edges: Sequence[str]) -> "Path":
        """Path along a nonempty composable edge sequence"""

        if not edges:
            raise InvalidGraph("Use vertex_path() for paths of length 0")
        for e in edges:
            if e not in self._ends:
                raise InvalidGraph(f"Unknown edge '{e}'")
        vertices = [self.source(edges[0])]
        for e in edges:
            if self.source(e) != vertices[-1]:
                raise InvalidGraph(
                    f"Edge '{e}' does not start where the path stands "
                    f"('{vertices[-1]}')"
                )
            vertices.append(self.range(e))
        return Path(tuple(vertices), tuple(edges))

    def __repr__(self) -> str:
        return (
            f"DirectedGraph(vertices={len(self.vertices)}, "
            f"edges={len(self._ends)})"
        )


@dataclass(frozen=True)
class Path:
    """Vertices visited, and the edges between them

    A vertex path has one vertex and no edges.
    """

    vertices: Tuple[str, ...]
    edges: Tuple[str, ...]

    @property
    def source(self) -> str:
        return self.vertices[0]

    @property
    def range(self) -> str:
        return self.vertices[-1]

    def __len__(self) -> int:
        return len(self.edges)

    @property
    def is_vertex(self) -> bool:
        return not self.edges

    @property
    def is_closed(self) -> bool:
        return self.source == self.range

    def concat(self, other: "Path") -> "Path":
        if self.range != other.source:
            raise ShapeMismatch(
                f"Cannot follow a path ending at '{self.range}' with one "
                f"starting at '{other.source}'"
            )
        return Path(
            self.vertices + other.vertices[1:], self.edges + other.edges
        )

    def is_prefix_of(self, other: "Path") -> bool:
        return (
            self.source == other.source
            and other.edges[: len(self.edges)] == self.edges
        )

    def after(self, prefix: "Path") -> "Path":
        """The path z with self = prefix z"""

        k = len(prefix)
        return Path(self.vertices[k:], self.edges[k:])

    def label(self) -> str:
        return ".".join(self.edges) if self.edges else self.source

    def __str__(self) -> str:
        return self.label()


@dataclass(frozen=True)
class GisPair:
    x: Path
    y: Path

    def __post_init__(self) -> None:
        if self.x.range != self.y.range:
            raise ShapeMismatch(
                f"x ends at '{self.x.range}' but y ends at '{self.y.range}'"
            )

    @property
    def size(self) -> int:
        return len(self.x) + len(self.y)


GisElement = Optional[GisPair]


class VertexClassKind(str, Enum):
    SINGLETON = "Singleton"
    LOOP_POWERS = "LoopPowers"
    COLLAPSES_TO_ZERO = "CollapsesToZero"


@dataclass(frozen=True)
class VertexClass:
    kind: VertexClassKind
    loop: Optional[str] = None

    def __str__(self) -> str:
        if self.kind == VertexClassKind.LOOP_POWERS:
            return f"LoopPowers({self.loop})"
        return self.kind.value


def approx_closed(x: Path, y: Path) -> bool:
    """y = z2 z1 for some cut x = z1 z2 of the closed path x

    Raises
    ------
    NotClosed
        If x or y is not a closed path
    """

    for p in (x, y):
        if not p.is_closed:
            raise NotClosed(f"Path '{p.label()}' is not closed")
    if len(x) != len(y):
        return False
    if x.is_vertex:
        return x == y
    for cut in range(len(x)):
        if (
            y.source == x.vertices[cut]
            and y.edges == x.edges[cut:] + x.edges[:cut]
        ):
            return True
    return False


class GraphInverseSemigroup:
    def __init__(self, graph: DirectedGraph) -> None:
        self.graph = graph

    def vertex(self, v: str) -> GisPair:
        p = self.graph.vertex_path(v)
        return GisPair(p, p)

    def edge(self, e: str) -> GisPair:
        """e = e r(e)^-1"""

        end = self.graph.vertex_path(self.graph.range(e))
        return GisPair(self.graph.path([e]), end)

    def multiply(self, a: GisElement, b: GisElement) -> GisElement:
        """(x y^-1)(u v^-1) by comparing y with u"""

        if a is None or b is None:
            return None
        x, y = a.x, a.y
        u, v = b.x, b.y
        if y.is_prefix_of(u):
            return GisPair(x.concat(u.after(y)), v)
        if u.is_prefix_of(y):
            return GisPair(x, v.concat(y.after(u)))
        return None

    def product(self, factors: Iterable[GisElement]) -> GisElement:
        factors = list(factors)
        result = factors[0]
        for f in factors[1:]:
            result = self.multiply(result, f)
        return result

    @staticmethod
    def inverse(a: GisElement) -> GisElement:
        if a is None:
            return None
        return GisPair(a.y, a.x)

    @staticmethod
    def is_idempotent(a: GisElement) -> bool:
        return a is None or a.x == a.y

    @staticmethod
    def natural_leq(a: GisElement, b: GisElement) -> bool:
        """a = b e for an idempotent e; for pairs, a = (x z, y z) when
        b = (x, y)"""

        if a is None:
            return True
        if b is None:
            return False
        if not (b.x.is_prefix_of(a.x) and b.y.is_prefix_of(a.y)):
            return False
        return a.x.after(b.x) == a.y.after(b.y)

    def label(self, a: GisElement) -> str:
        if a is None:
            return "0"
        if a.y.is_vertex:
            return a.x.label()
        if a.x.is_vertex:
            return f"({a.y.label()})^-1"
        return f"{a.x.label()}({a.y.label()})^-1"

    def element_from_model(
        self, model: Optional[GraphElementModel]
    ) -> GisElement:
        if model is None:
            return None
        return GisPair(self._path_of(model.x), self._path_of(model.y))

    def _path_of(self, names: Sequence[str]) -> Path:
        if len(names) == 1 and names[0].startswith(VERTEX_PREFIX):
            return self.graph.vertex_path(names[0][len(VERTEX_PREFIX):])
        return self.graph.path(list(names))

    # Enumeration ------------------------------------------------------------

    def paths_up_to(self, length: int) -> List[Path]:
        """Every path with at most `length` edges, shortest first"""

        level = [self.graph.vertex_path(v) for v in self.graph.vertices]
        paths = list(level)
        for _ in range(length):
            level = [
                p.concat(self.graph.path([e]))
                for p in level
                for e in self.graph.edges_out_of(p.range)
            ]
            paths.extend(level)
        return paths

    def ball(self, radius: int) -> List[GisElement]:
        """Nonzero elements with |x| + |y| <= radius, then the zero"""

        paths = self.paths_up_to(radius)
        by_range: Dict[str, List[Path]] = {}
        for p in paths:
            by_range.setdefault(p.range, []).append(p)
        elements: List[GisElement] = [
            GisPair(x, y)
            for x in paths
            for y in by_range[x.range]
            if len(x) + len(y) <= radius
        ]
        elements.append(None)
        return elements

    # Classifiers ------------------------------------------------------------

    def vertex_class(self, v: str) -> VertexClass:
        """How the ~s class of the vertex v looks

        Singleton when nothing enters v, LoopPowers(e) when the only edge
        entering v is a loop e at v, CollapsesToZero otherwise.
        """

        incoming = self.graph.edges_into(v)
        if not incoming:
            return VertexClass(VertexClassKind.SINGLETON)
        if len(incoming) == 1 and self.graph.source(incoming[0]) == v:
            return VertexClass(VertexClassKind.LOOP_POWERS, incoming[0])
        return VertexClass(VertexClassKind.COLLAPSES_TO_ZERO)

    @staticmethod
    def conjugation_shape(a: GisElement) -> Optional[Tuple[str, Path]]:
        """("conj", x) for a = y x y^-1, ("inv", x) for a = y x^-1 y^-1 with
        x not a vertex, None otherwise"""

        if a is None:
            return None
        u, w = a.x, a.y
        if w.is_prefix_of(u):
            return "conj", u.after(w)
        if u.is_prefix_of(w) and len(u) < len(w):
            return "inv", w.after(u)
        return None

    def sim_p(self, a: GisElement, b: GisElement) -> bool:
        shape_a = self.conjugation_shape(a)
        shape_b = self.conjugation_shape(b)
        if shape_a is None or shape_b is None:
            return shape_a is None and shape_b is None
        kind_a, x_a = shape_a
        kind_b, x_b = shape_b
        return kind_a == kind_b and approx_closed(x_a, x_b)

    def sim_s_key(self, a: GisElement) -> Tuple:
        """Invariant whose equality decides ~s"""

        if a is None:
            return ("zero",)
        v = a.x.source
        if a.x.is_vertex and a.y.is_vertex:
            if self.vertex_class(v).kind == VertexClassKind.SINGLETON:
                return ("vertex", v)

        if a.x.source != a.y.source:
            return ("zero",)
        found = self.vertex_class(v)
        if found.kind != VertexClassKind.LOOP_POWERS:
            return ("zero",)
        loop = found.loop
        if all(e == loop for e in a.x.edges + a.y.edges):
            return ("loop", loop, len(a.x) - len(a.y))
        return ("zero",)

    def sim_s(self, a: GisElement, b: GisElement) -> bool:
        return self.sim_s_key(a) == self.sim_s_key(b)

    # Bounded oracle ---------------------------------------------------------

    def witness_partition(
        self, radius: Optional[int] = None
    ) -> Tuple[List[GisElement], ElementPartition]:
        """Join s = p r with r p for every factorisation inside the ball

        Nonzero factorisations of s = (x, y) come in two families:
        p = (a, b), r = (b c, y) with x = a c, and p = (x, c b'),
        r = (c, d) with y = d b'. The connecting paths b and c are bounded
        by half the radius. The result refines ~p on the ball.
        """

        if radius is None:
            radius = core.config.constants.GIS_ORACLE_RADIUS
        elements = self.ball(radius)
        index = {a: k for k, a in enumerate(elements)}
        partition = ElementPartition(len(elements))
        connectors: Dict[str, List[Path]] = {}
        for p in self.paths_up_to(radius // 2):
            connectors.setdefault(p.range, []).append(p)

        def join(s: GisPair, p: GisElement, r: GisElement) -> None:
            rp = self.multiply(r, p)
            if rp in index:
                partition.union(index[s], index[rp])

        for s in elements:
            if s is None:
                continue
            x, y = s.x, s.y
            for cut in range(len(x) + 1):
                head = Path(x.vertices[: cut + 1], x.edges[:cut])
                tail = x.after(head)
                for b in connectors.get(head.range, []):
                    join(s, GisPair(head, b), GisPair(b.concat(tail), y))
            for cut in range(len(y) + 1):
                d = Path(y.vertices[: cut + 1], y.edges[:cut])
                rest = y.after(d)
                for c in connectors.get(d.range, []):
                    join(s, GisPair(x, c.concat(rest)), GisPair(c, d))

        logger.debug(
            f"Witness search on {len(elements)} elements gave "
            f"{partition.num_classes} classes"
        )
        return elements, partition


def polycyclic(n: int) -> DirectedGraph:
    """One vertex with n loops; n = 1 gives the bicyclic monoid"""

    if n < 1:
        raise InvalidGraph("Polycyclic graphs need at least one loop")
    return DirectedGraph(["v"], [(f"e{k}", "v", "v") for k in range(1, n + 1)])


def isolated_vertex() -> DirectedGraph:
    return DirectedGraph(["v"], [])


def cycle(n: int) -> DirectedGraph:
    """Vertices v1..vn with edges e_k: v_k -> v_{k+1 mod n}"""

    vertices = [f"v{k}" for k in range(1, n + 1)]
    edges = [
        (f"e{k}", vertices[k - 1], vertices[k % n]) for k in range(1, n + 1)
    ]
    return DirectedGraph(vertices, edges)


def loop_with_tail() -> DirectedGraph:
    """A loop e at v with an edge f: u -> v entering it"""

    return DirectedGraph(["u", "v"], [("e", "v", "v"), ("f", "u", "v")])


def line() -> DirectedGraph:
    """Two vertices joined by a single edge f: u -> w"""

    return DirectedGraph(["u", "w"], [("f", "u", "w")])
