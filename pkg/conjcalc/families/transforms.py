import itertools
import logging
from dataclasses import dataclass
from enum import Enum
from typing import Dict, List, Optional, Sequence, Tuple

import networkx as nx
import numpy as np
from sympy.combinatorics import Permutation

from conjcalc import core
from conjcalc.core.exceptions import (
    NotInjective,
    NotPermutation,
    ShapeMismatch,
    TooLarge,
)
from conjcalc.core.semigroup import FiniteSemigroup, validate

logger = logging.getLogger(__name__)
logger.setLevel(core.config.constants.LOGLEVEL_MODULE_DEFAULT)


class MapKind(str, Enum):
    T = "T"  # full transformations
    PT = "PT"  # partial transformations
    I = "I"  # partial injections  # noqa: E741
    S = "S"  # permutations


class Parity(str, Enum):
    EVEN = "Even"
    ODD = "Odd"


class SimSClass(str, Enum):
    EVEN = "EvenClass"
    ODD = "OddClass"
    SINGULAR = "SingularClass"


@dataclass(frozen=True)
class FiniteMap:
    """A partial map of {0, ..., n-1}; None marks an undefined point"""

    images: Tuple[Optional[int], ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "images", tuple(self.images))
        n = len(self.images)
        for value in self.images:
            if value is not None and not 0 <= value < n:
                raise ShapeMismatch(
                    f"Image {value} outside the ground set of size {n}"
                )

    @classmethod
    def identity(cls, n: int) -> "FiniteMap":
        return cls(tuple(range(n)))

    @property
    def n(self) -> int:
        return len(self.images)

    @property
    def domain(self) -> Tuple[int, ...]:
        return tuple(a for a, v in enumerate(self.images) if v is not None)

    @property
    def image(self) -> frozenset:
        return frozenset(v for v in self.images if v is not None)

    @property
    def is_total(self) -> bool:
        return None not in self.images

    @property
    def is_injective(self) -> bool:
        defined = [v for v in self.images if v is not None]
        return len(defined) == len(set(defined))

    @property
    def is_surjective(self) -> bool:
        return len(self.image) == self.n

    @property
    def is_permutation(self) -> bool:
        return self.is_total and self.is_injective

    def belongs_to(self, kind: MapKind) -> bool:
        if kind == MapKind.T:
            return self.is_total
        if kind == MapKind.I:
            return self.is_injective
        if kind == MapKind.S:
            return self.is_permutation
        return True

    def label(self) -> str:
        """Image string such as "1-0" ("-" where undefined), or cycle
        notation on 1..n for permutations"""

        if self.is_permutation and self.n > 0:
            cycles = Permutation(list(self.images)).cyclic_form
            if not cycles:
                return "e"
            return "".join(
                "(" + " ".join(str(a + 1) for a in cycle) + ")"
                for cycle in cycles
            )
        return "".join("-" if v is None else str(v) for v in self.images)

    def __str__(self) -> str:
        return self.label()


def compose(s: FiniteMap, t: FiniteMap) -> FiniteMap:
    """s t: apply t first, defined where t(a) is defined and in Dom(s)"""

    if s.n != t.n:
        raise ShapeMismatch(
            f"Cannot compose maps on {s.n} and {t.n} points"
        )
    return FiniteMap(
        tuple(None if v is None else s.images[v] for v in t.images)
    )


def inverse(s: FiniteMap) -> FiniteMap:
    """Inverse partial injection"""

    if not s.is_injective:
        raise NotInjective(f"{s.label()} has no inverse partial map")
    images: List[Optional[int]] = [None] * s.n
    for a, v in enumerate(s.images):
        if v is not None:
            images[v] = a
    return FiniteMap(tuple(images))


def restriction_leq(s: FiniteMap, t: FiniteMap) -> bool:
    """Natural partial order of I(n): s is a restriction of t"""

    return s.n == t.n and all(
        v is None or v == w for v, w in zip(s.images, t.images)
    )


def _as_permutation(p: FiniteMap) -> Permutation:
    if not p.is_permutation:
        raise NotPermutation(f"{p.label()} is not a permutation")
    return Permutation(list(p.images))


def parity(p: FiniteMap) -> Parity:
    return Parity.EVEN if _as_permutation(p).parity() == 0 else Parity.ODD


@dataclass(frozen=True)
class CycleType:
    lengths: Tuple[int, ...]  # descending, fixed points included

    def __str__(self) -> str:
        return "[" + ",".join(str(k) for k in self.lengths) + "]"


def cycle_type(p: FiniteMap) -> CycleType:
    structure = _as_permutation(p).cycle_structure
    lengths = [k for k, count in structure.items() for _ in range(count)]
    return CycleType(tuple(sorted(lengths, reverse=True)))


def conjugate_in_sym(
    p: FiniteMap, q: FiniteMap
) -> Tuple[bool, Optional[FiniteMap]]:
    """Decide whether p = w q w^-1 for a permutation w, returning w

    Cycles of q are matched with cycles of p of the same length.
    """

    p_cycles = sorted(_as_permutation(p).full_cyclic_form, key=len)
    q_cycles = sorted(_as_permutation(q).full_cyclic_form, key=len)
    if p.n != q.n or [len(c) for c in p_cycles] != [
        len(c) for c in q_cycles
    ]:
        return False, None

    images: List[Optional[int]] = [None] * p.n
    for p_cycle, q_cycle in zip(p_cycles, q_cycles):
        for a, b in zip(q_cycle, p_cycle):
            images[a] = b
    return True, FiniteMap(tuple(images))


def functional_graph(s: FiniteMap) -> nx.DiGraph:
    """Digraph with an arrow a -> s(a) for every defined point"""

    graph = nx.DiGraph()
    graph.add_nodes_from(range(s.n))
    graph.add_edges_from(
        (a, v) for a, v in enumerate(s.images) if v is not None
    )
    return graph


def components(s: FiniteMap) -> List[frozenset]:
    """Connected components of the functional graph, by least member"""

    return sorted(
        (frozenset(c) for c in nx.weakly_connected_components(
            functional_graph(s)
        )),
        key=min,
    )


def sim_s_class(kind: MapKind, s: FiniteMap) -> SimSClass:
    """Class of s under sim_s in T(n), PT(n) or I(n)

    Permutations split by parity; every map with a smaller image forms the
    third class.
    """

    kind = MapKind(kind)
    if kind == MapKind.S:
        raise ValueError("The three-class description covers T, PT and I")
    if not s.belongs_to(kind):
        if kind == MapKind.I:
            raise NotInjective(f"{s.label()} is not a partial injection")
        raise ShapeMismatch(f"{s.label()} is not a total map")

    if len(s.image) < s.n:
        return SimSClass.SINGULAR
    return SimSClass.EVEN if parity(s) == Parity.EVEN else SimSClass.ODD


def enumerate_maps(kind: MapKind, n: int) -> List[FiniteMap]:
    """All maps of the given kind on n points, in lexicographic order with
    undefined points sorting first"""

    kind = MapKind(kind)
    if kind == MapKind.S:
        return [FiniteMap(p) for p in itertools.permutations(range(n))]
    values: Sequence[Optional[int]] = list(range(n))
    if kind in (MapKind.PT, MapKind.I):
        values = [None, *range(n)]
    maps = [
        FiniteMap(images) for images in itertools.product(values, repeat=n)
    ]
    if kind == MapKind.I:
        maps = [m for m in maps if m.is_injective]
    return maps


_CAPS = {
    MapKind.T: "CAYLEY_MAX_T",
    MapKind.PT: "CAYLEY_MAX_PT",
    MapKind.I: "CAYLEY_MAX_I",
    MapKind.S: "CAYLEY_MAX_S",
}


@dataclass
class TransformationMonoid:
    kind: MapKind
    n: int
    semigroup: FiniteSemigroup
    maps: Tuple[FiniteMap, ...]

    def __post_init__(self) -> None:
        self._index: Dict[FiniteMap, int] = {
            m: i for i, m in enumerate(self.maps)
        }

    def index_of(self, s: FiniteMap) -> int:
        if s not in self._index:
            raise ValueError(
                f"{s.label()} is not in {self.kind.value}({self.n})"
            )
        return self._index[s]


def monoid_cayley(kind: MapKind, n: int) -> TransformationMonoid:
    """Cayley table of T(n), PT(n), I(n) or S(n)

    Raises
    ------
    TooLarge
        If n is above the configured cap for the kind
    """

    kind = MapKind(kind)
    cap = getattr(core.config.constants, _CAPS[kind])
    if n > cap:
        raise TooLarge(f"{kind.value}({n}) is above the cap n <= {cap}")

    maps = enumerate_maps(kind, n)
    m = len(maps)

    # Undefined points are encoded as n, which indexes a padding column
    images = np.array(
        [[n if v is None else v for v in s.images] for s in maps],
        dtype=np.int64,
    ).reshape(m, n)
    padded = np.concatenate([images, np.full((m, 1), n)], axis=1)
    composed = padded[np.arange(m)[:, None, None], images[None, :, :]]

    weights = (n + 1) ** np.arange(n, dtype=np.int64)
    lookup = np.full((n + 1) ** n, -1, dtype=np.int64)
    lookup[images @ weights] = np.arange(m)
    table = lookup[composed @ weights]
    if (table < 0).any():
        raise RuntimeError(
            f"{kind.value}({n}) is not closed under composition"
        )

    labels = [s.label() for s in maps]
    logger.debug(f"Built Cayley table of {kind.value}({n}) with {m} elements")
    semigroup = validate(labels, table, max_order=max(m, 1))

    return TransformationMonoid(kind, n, semigroup, tuple(maps))
