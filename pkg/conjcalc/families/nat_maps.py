"""Eventually-shift maps of the natural numbers

f(n) = table[n] for n < N = len(table), and f(n) = n + shift from N on.
These are closed under composition and realise nontrivial defects (for
injections) and collapses (for surjections).
"""

import logging
from collections import Counter
from dataclasses import dataclass
from enum import Enum
from typing import FrozenSet, Optional, Tuple

import numpy as np

from conjcalc import core
from conjcalc.core.exceptions import (
    NotInjective,
    NotSurjective,
    ShapeMismatch,
)
from conjcalc.core.models import NatMapModel

logger = logging.getLogger(__name__)
logger.setLevel(core.config.constants.LOGLEVEL_MODULE_DEFAULT)


@dataclass(frozen=True)
class EventuallyShiftMap:
    table: Tuple[int, ...]
    shift: int

    def __post_init__(self) -> None:
        table = [int(v) for v in self.table]
        if any(v < 0 for v in table):
            raise ShapeMismatch("Table values must be natural numbers")
        if len(table) + self.shift < 0:
            raise ShapeMismatch(
                f"n + {self.shift} is negative at n = {len(table)}"
            )
        # Canonical form: drop trailing entries that follow the shift
        while table and table[-1] == len(table) - 1 + self.shift:
            table.pop()
        object.__setattr__(self, "table", tuple(table))

    @classmethod
    def from_model(cls, model: NatMapModel) -> "EventuallyShiftMap":
        return cls(tuple(model.table), model.shift)

    @classmethod
    def identity(cls) -> "EventuallyShiftMap":
        return cls((), 0)

    @classmethod
    def shift_up(cls, k: int = 1) -> "EventuallyShiftMap":
        """n -> n + k"""

        return cls((), k)

    @classmethod
    def collapse(cls) -> "EventuallyShiftMap":
        """0 -> 0 and n -> n - 1 otherwise"""

        return cls((0,), -1)

    @classmethod
    def transposition(cls, a: int, b: int) -> "EventuallyShiftMap":
        table = list(range(max(a, b) + 1))
        table[a], table[b] = b, a
        return cls(tuple(table), 0)

    @property
    def threshold(self) -> int:
        return len(self.table)

    def __call__(self, n: int) -> int:
        if n < self.threshold:
            return self.table[n]
        return n + self.shift

    @property
    def is_injective(self) -> bool:
        tail_start = self.threshold + self.shift
        return len(set(self.table)) == len(self.table) and all(
            v < tail_start for v in self.table
        )

    @property
    def is_surjective(self) -> bool:
        return set(range(self.threshold + self.shift)) <= set(self.table)

    def preimage(self, y: int) -> FrozenSet[int]:
        hits = {n for n, v in enumerate(self.table) if v == y}
        if y - self.shift >= self.threshold:
            hits.add(y - self.shift)
        return frozenset(hits)

    def to_dict(self) -> dict:
        return {"table": list(self.table), "shift": self.shift}

    def __str__(self) -> str:
        return f"[{','.join(map(str, self.table))}] then n{self.shift:+d}"


def evaluate(f: EventuallyShiftMap, n: int) -> int:
    return f(n)


def compose(
    f: EventuallyShiftMap, g: EventuallyShiftMap
) -> EventuallyShiftMap:
    """f g, applying g first"""

    # Beyond this point g is a shift landing past the table of f
    threshold = max(g.threshold, f.threshold - g.shift)
    table = tuple(f(g(n)) for n in range(threshold))
    return EventuallyShiftMap(table, f.shift + g.shift)


def _require_injective(f: EventuallyShiftMap) -> None:
    if not f.is_injective:
        raise NotInjective(f"{f} is not injective")


def _require_surjective(f: EventuallyShiftMap) -> None:
    if not f.is_surjective:
        raise NotSurjective(f"{f} is not surjective")


def defect(f: EventuallyShiftMap) -> int:
    """|N \\ f(N)|"""

    _require_injective(f)
    return len(set(range(f.threshold + f.shift)) - set(f.table))


def inj_sim_s(s: EventuallyShiftMap, t: EventuallyShiftMap) -> bool:
    """Injections of a countable set are ~s related iff their defects match"""

    return defect(s) == defect(t)


@dataclass(frozen=True)
class CycleCensus:
    """Orbit structure of an injection

    `finite` lists finite cycle lengths in ascending order. When the map
    is eventually the identity, only nontrivial cycles are listed and the
    infinitely many fixed points are reported by `cofinite_fixed_points`.
    """

    finite: Tuple[int, ...]
    forward: int
    open: int
    cofinite_fixed_points: bool

    def to_dict(self) -> dict:
        return {
            "finite": list(self.finite),
            "forward": self.forward,
            "open": self.open,
            "cofinite_fixed_points": self.cofinite_fixed_points,
        }


def cycle_census(f: EventuallyShiftMap) -> CycleCensus:
    """Finite, forward and open cycles of an injection

    Points at or above the threshold only climb when the shift is positive,
    so every finite cycle lies below the threshold. A positive shift leaves
    no open cycles and one forward cycle per missed value.
    """

    _require_injective(f)
    N = f.threshold
    seen = set()
    lengths = []
    for start in range(N):
        if start in seen:
            continue
        orbit = [start]
        current = f(start)
        while current != start and current < N and len(orbit) <= N:
            orbit.append(current)
            current = f(current)
        if current == start:
            seen.update(orbit)
            lengths.append(len(orbit))

    if f.shift == 0:
        return CycleCensus(
            finite=tuple(sorted(k for k in lengths if k > 1)),
            forward=0,
            open=0,
            cofinite_fixed_points=True,
        )
    return CycleCensus(
        finite=tuple(sorted(lengths)),
        forward=defect(f),
        open=0,
        cofinite_fixed_points=False,
    )


def check_cycle_correspondence(
    s: EventuallyShiftMap, t: EventuallyShiftMap
) -> bool:
    """ts and st have the same cycles of every type"""

    _require_injective(s)
    _require_injective(t)
    return cycle_census(compose(t, s)) == cycle_census(compose(s, t))


@dataclass(frozen=True)
class NCMInvariants:
    N: FrozenSet[int]  # points sharing their image with another point
    C: FrozenSet[int]  # points with more than one preimage
    m: int  # largest preimage size
    achieved: bool

    def to_dict(self) -> dict:
        return {
            "N": sorted(self.N),
            "C": sorted(self.C),
            "m": self.m,
            "achieved": self.achieved,
        }


def ncm_invariants(f: EventuallyShiftMap) -> NCMInvariants:
    """N(f), C(f) and m(f) of a surjection

    Only table values can have several preimages, since the tail is
    injective. The supremum m(f) is a maximum over finitely many sizes, so
    it is always achieved.
    """

    _require_surjective(f)
    C = set()
    N = set()
    m = 1
    for y in set(f.table):
        hits = f.preimage(y)
        m = max(m, len(hits))
        if len(hits) > 1:
            C.add(y)
            N |= hits

    return NCMInvariants(frozenset(N), frozenset(C), m, True)


class InvariantKind(str, Enum):
    FINITE = "Finite"
    INF1 = "Inf1"
    INF2 = "Inf2"
    INF3 = "Inf3"


_INFINITE_RANK = {
    InvariantKind.INF1: 1,
    InvariantKind.INF2: 2,
    InvariantKind.INF3: 3,
}


@dataclass(frozen=True)
class SurjInvariantValue:
    """Element of the naturals with three absorbing infinities

    Infinities absorb every finite value, and the larger infinity wins
    between two of them.
    """

    kind: InvariantKind
    value: int = 0

    def __add__(self, other: "SurjInvariantValue") -> "SurjInvariantValue":
        if self.kind == InvariantKind.FINITE:
            if other.kind == InvariantKind.FINITE:
                return SurjInvariantValue(
                    InvariantKind.FINITE, self.value + other.value
                )
            return other
        if other.kind == InvariantKind.FINITE:
            return self
        if _INFINITE_RANK[self.kind] >= _INFINITE_RANK[other.kind]:
            return self
        return other

    def __str__(self) -> str:
        if self.kind == InvariantKind.FINITE:
            return f"Finite({self.value})"
        return self.kind.value


def surj_invariant(f: EventuallyShiftMap) -> SurjInvariantValue:
    """|N(f)| - |C(f)|

    N(f) is finite for every eventually-shift surjection, so the infinite
    kinds never occur here.
    """

    found = ncm_invariants(f)
    return SurjInvariantValue(
        InvariantKind.FINITE, len(found.N) - len(found.C)
    )


def surj_approx(s: EventuallyShiftMap, t: EventuallyShiftMap) -> bool:
    return surj_invariant(s) == surj_invariant(t)


def random_injection(
    rng: np.random.Generator,
    max_table: Optional[int] = None,
    max_shift: Optional[int] = None,
) -> EventuallyShiftMap:
    """Random injection with shift in [0, max_shift]"""

    if max_table is None:
        max_table = core.config.constants.NATMAP_MAX_TABLE
    if max_shift is None:
        max_shift = core.config.constants.NATMAP_MAX_SHIFT

    shift = int(rng.integers(0, max_shift + 1))
    size = int(rng.integers(0, max_table + 1))
    if size == 0:
        return EventuallyShiftMap((), shift)
    table = rng.choice(size + shift, size=size, replace=False)
    return EventuallyShiftMap(tuple(int(v) for v in table), shift)


def random_surjection(
    rng: np.random.Generator,
    max_table: Optional[int] = None,
    max_shift: Optional[int] = None,
) -> EventuallyShiftMap:
    """Random surjection with shift in [-max_shift, 0]

    The table covers [0, N + shift) and spends its -shift remaining entries
    on arbitrary values, which creates the collapses.
    """

    if max_table is None:
        max_table = core.config.constants.NATMAP_MAX_TABLE
    if max_shift is None:
        max_shift = core.config.constants.NATMAP_MAX_SHIFT

    shift = -int(rng.integers(0, min(max_shift, max_table) + 1))
    size = int(rng.integers(-shift, max_table + 1))
    extras = rng.integers(0, size + 1, size=-shift).tolist()
    values = list(range(size + shift)) + extras
    rng.shuffle(values)
    return EventuallyShiftMap(tuple(int(v) for v in values), shift)


def preimage_sizes(f: EventuallyShiftMap) -> Counter:
    """Number of points per preimage size, over the table values"""

    return Counter(len(f.preimage(y)) for y in set(f.table))


def has_preimage_of_size(f: EventuallyShiftMap, size: int) -> bool:
    if size == 1:
        return True
    return preimage_sizes(f)[size] > 0
