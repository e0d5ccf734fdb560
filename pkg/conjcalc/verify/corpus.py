"""Finite semigroups the acceptance suites run over"""

import logging
from dataclasses import dataclass
from functools import lru_cache
from typing import List, Optional, Sequence, Tuple

import numpy as np

from conjcalc import core
from conjcalc.core.semigroup import (
    FiniteSemigroup,
    all_associative_tables,
    cyclic_group,
    left_zero,
    min_semigroup,
    subsemigroup_generated,
    trivial_multiplication,
    validate,
    with_zero,
)
from conjcalc.core.utils import make_rng
from conjcalc.families.groups import FiniteGroup, small_groups, symmetric_group
from conjcalc.families.rees import ReesSemigroup, ReesTriple
from conjcalc.families.ring_trace import matrix_unit_semigroup
from conjcalc.families.transforms import MapKind, monoid_cayley

logger = logging.getLogger(__name__)
logger.setLevel(core.config.constants.LOGLEVEL_MODULE_DEFAULT)


@dataclass(frozen=True)
class CorpusInstance:
    name: str
    family: str
    semigroup: FiniteSemigroup
    rees: Optional[ReesSemigroup] = None

    @property
    def order(self) -> int:
        return self.semigroup.order

    @property
    def has_zero(self) -> bool:
        return self.semigroup.zero is not None


TRANSFORMATION_MONOIDS: Tuple[Tuple[MapKind, int], ...] = (
    (MapKind.T, 2),
    (MapKind.T, 3),
    (MapKind.T, 4),
    (MapKind.PT, 2),
    (MapKind.PT, 3),
    (MapKind.I, 2),
    (MapKind.I, 3),
    (MapKind.I, 4),
)


def transformation_instances() -> List[CorpusInstance]:
    found = [
        CorpusInstance(
            f"{kind.value}({n})",
            "transforms",
            monoid_cayley(kind, n).semigroup,
        )
        for kind, n in TRANSFORMATION_MONOIDS
    ]
    for n in (3, 4):
        found.append(
            CorpusInstance(
                f"S{n}", "groups", symmetric_group(n).semigroup
            )
        )
    return found


def antidiagonal_example(
    group: Optional[FiniteGroup] = None,
) -> Tuple[ReesSemigroup, ReesTriple, ReesTriple]:
    """M0(G; 2, 2; P) with P = [[0, 1], [1, 0]] and two elements
    (0, s, 0), (0, t, 0) where s t^-1 lies outside [G, G]

    Over S3, s is the identity and t a transposition. The two elements are
    ~p related through the zero, but not ~s1 related at any bound.
    """

    if group is None:
        group = symmetric_group(3)
    e = group.identity
    sem = ReesSemigroup(group, 2, 2, [[None, e], [e, None]])
    t = next(
        g for g in range(group.order) if g not in group.derived_subgroup
    )
    return sem, ReesTriple(0, e, 0), ReesTriple(0, t, 0)


def _rees_candidates() -> List[Tuple[str, ReesSemigroup]]:
    candidates = []
    for name, G in small_groups().items():
        e = G.identity
        g = next((a for a in range(G.order) if a != e), e)
        candidates += [
            (f"M0({name};1,1;[e])", ReesSemigroup(G, 1, 1, [[e]])),
            (
                f"M0({name};1,2;[e,g])",
                ReesSemigroup(G, 1, 2, [[e], [g]]),
            ),
            (
                f"M({name};2,2;ones)",
                ReesSemigroup(G, 2, 2, [[e, e], [e, e]], with_zero=False),
            ),
            (
                f"M({name};2,2;[g,e;e,g])",
                ReesSemigroup(G, 2, 2, [[g, e], [e, g]], with_zero=False),
            ),
            (
                f"M0({name};2,2;[e,e;e,0])",
                ReesSemigroup(G, 2, 2, [[e, e], [e, None]]),
            ),
        ]
    return candidates


def rees_instances(
    rng: np.random.Generator, count: Optional[int] = None
) -> List[CorpusInstance]:
    """A seeded sample of small Rees matrix semigroups plus the
    antidiagonal example over S3"""

    if count is None:
        count = core.config.constants.CORPUS_REES_INSTANCES
    candidates = _rees_candidates()
    picks = sorted(
        rng.choice(
            len(candidates), size=min(count, len(candidates)), replace=False
        ).tolist()
    )

    found = []
    for k in picks:
        name, sem = candidates[k]
        found.append(CorpusInstance(name, "rees", sem.cayley(), rees=sem))
    sem, _, _ = antidiagonal_example()
    found.append(
        CorpusInstance("M0(S3;2,2;antidiagonal)", "rees", sem.cayley(), sem)
    )
    return found


def restrict(S: FiniteSemigroup, subset: Sequence[int]) -> FiniteSemigroup:
    """The subsemigroup on `subset` as a standalone table"""

    members = sorted(subset)
    position = np.full(S.order, -1, dtype=np.int64)
    position[members] = np.arange(len(members))
    table = position[S.table[np.ix_(members, members)]]
    if (table < 0).any():
        raise ValueError("Subset is not closed under the product")
    return validate(
        [S.label(a) for a in members], table, max_order=len(members)
    )


def random_tables(
    rng: np.random.Generator, count: Optional[int] = None
) -> List[FiniteSemigroup]:
    """Associative tables of order at most 4

    Every table of order 2, then a sample of the order 3 tables, then small
    subsemigroups of T(4) grown from random generators.
    """

    if count is None:
        count = core.config.constants.CORPUS_RANDOM_TABLES

    tables = all_associative_tables(2)[:count]
    order_three = all_associative_tables(3)
    wanted = min((count - len(tables)) // 2, len(order_three))
    for k in sorted(rng.choice(len(order_three), wanted, replace=False)):
        tables.append(order_three[int(k)])

    T4 = monoid_cayley(MapKind.T, 4).semigroup
    seen = set()
    draws = 0
    while len(tables) < count and draws < 100 * count:
        draws += 1
        generators = rng.choice(T4.order, int(rng.integers(1, 3)))
        members = subsemigroup_generated(T4, generators.tolist())
        if len(members) > 4 or members in seen:
            continue
        seen.add(members)
        tables.append(restrict(T4, members))

    if len(tables) < count:
        logger.warning(
            f"Only {len(tables)} of {count} random tables found in "
            f"{draws} draws"
        )
    return tables


def small_instances() -> List[CorpusInstance]:
    return [
        CorpusInstance("matrix-units(2)", "ring", matrix_unit_semigroup(2)),
        CorpusInstance("matrix-units(3)", "ring", matrix_unit_semigroup(3)),
        CorpusInstance("min(3)", "small", min_semigroup(3)),
        CorpusInstance("null(2)", "small", trivial_multiplication(2)),
        CorpusInstance("null(3)", "small", trivial_multiplication(3)),
        CorpusInstance("left-zero(2)", "small", left_zero(2)),
        CorpusInstance("Z3", "groups", cyclic_group(3)),
        CorpusInstance("Z2+0", "small", with_zero(cyclic_group(2))),
    ]


@lru_cache(maxsize=4)
def build_corpus(seed: Optional[int] = None) -> Tuple[CorpusInstance, ...]:
    """Every corpus instance, deterministic for a given seed"""

    rng = make_rng(seed)
    instances = [
        *transformation_instances(),
        *small_instances(),
        *rees_instances(rng),
    ]
    for k, S in enumerate(random_tables(rng)):
        instances.append(CorpusInstance(f"random-{k:02d}", "random", S))

    logger.info(f"Corpus holds {len(instances)} semigroups")
    return tuple(instances)
