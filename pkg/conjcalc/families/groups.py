import logging
from functools import cached_property
from typing import Dict, Iterable

import numpy as np

from conjcalc import core
from conjcalc.core.exceptions import NotAGroup
from conjcalc.core.semigroup import (
    FiniteSemigroup,
    cyclic_group,
    direct_product,
)
from conjcalc.families.transforms import MapKind, monoid_cayley

logger = logging.getLogger(__name__)
logger.setLevel(core.config.constants.LOGLEVEL_MODULE_DEFAULT)


class FiniteGroup:
    def __init__(self, semigroup: FiniteSemigroup) -> None:
        """A finite group on top of its Cayley table

        Parameters
        ----------
        semigroup : FiniteSemigroup
            A semigroup with identity whose table is a Latin square

        Raises
        ------
        NotAGroup
            If there is no identity or some element has no inverse
        """

        if semigroup.identity is None:
            raise NotAGroup("The table has no identity element")
        T = semigroup.table
        n = semigroup.order
        ar = np.arange(n)
        latin = (np.sort(T, axis=0) == ar[:, None]).all() and (
            np.sort(T, axis=1) == ar[None, :]
        ).all()
        if not latin:
            raise NotAGroup("The Cayley table is not a Latin square")

        self.semigroup = semigroup
        self.identity: int = semigroup.identity
        # inverse[a] is the b with a*b = 1
        self.inverse_table = np.argmax(T == self.identity, axis=1)

    @property
    def order(self) -> int:
        return self.semigroup.order

    def label(self, a: int) -> str:
        return self.semigroup.label(a)

    def index(self, label: str) -> int:
        return self.semigroup.index(label)

    def multiply(self, *factors: int) -> int:
        return self.semigroup.product_of(factors)

    def inverse(self, a: int) -> int:
        return int(self.inverse_table[a])

    def commutator(self, p: int, r: int) -> int:
        """p r p^-1 r^-1"""

        return self.multiply(p, r, self.inverse(p), self.inverse(r))

    def subgroup_generated(self, subset: Iterable[int]) -> frozenset:
        """Least subgroup containing `subset`

        In a finite group the closure under products already contains the
        identity and all inverses.
        """

        current = {self.identity} | {int(a) for a in subset}
        T = self.semigroup.table
        while True:
            members = np.array(sorted(current))
            products = set(np.unique(T[np.ix_(members, members)]).tolist())
            if products <= current:
                return frozenset(current)
            current |= products

    @cached_property
    def derived_subgroup(self) -> frozenset:
        """[G, G], generated by every commutator"""

        T = self.semigroup.table
        inv = self.inverse_table
        # commutators[p, r] = p r p^-1 r^-1
        commutators = T[T[T, inv[:, None]], inv[None, :]]
        derived = self.subgroup_generated(np.unique(commutators).tolist())
        logger.debug(
            f"Derived subgroup of order {len(derived)} in a group of order "
            f"{self.order}"
        )
        return derived

    def is_subgroup(self, subset: Iterable[int]) -> bool:
        members = frozenset(int(a) for a in subset)
        return bool(members) and self.subgroup_generated(members) == members

    def is_normal(self, subset: Iterable[int]) -> bool:
        members = frozenset(int(a) for a in subset)
        if not self.is_subgroup(members):
            return False
        T = self.semigroup.table
        for g in range(self.order):
            g_inv = self.inverse(g)
            for h in members:
                if int(T[T[g, h], g_inv]) not in members:
                    return False
        return True

    def coset_key(self, subgroup: Iterable[int], g: int) -> int:
        """Least element of the right coset N g"""

        members = np.array(sorted(int(a) for a in subgroup))
        return int(self.semigroup.table[members, g].min())

    def is_abelian(self) -> bool:
        return self.semigroup.is_commutative()

    def __repr__(self) -> str:
        return f"FiniteGroup(order={self.order})"


def group_from_semigroup(S: FiniteSemigroup) -> FiniteGroup:
    return FiniteGroup(S)


def group_sim_s(G: FiniteGroup, s: int, t: int) -> bool:
    """s and t are related by ~s iff s t^-1 lies in [G, G]"""

    return G.multiply(s, G.inverse(t)) in G.derived_subgroup


def symmetric_group(n: int) -> FiniteGroup:
    return FiniteGroup(monoid_cayley(MapKind.S, n).semigroup)


def small_groups() -> Dict[str, FiniteGroup]:
    """Every group of order at most 6, up to isomorphism"""

    groups = {"trivial": FiniteGroup(cyclic_group(1))}
    for n in range(2, 7):
        groups[f"Z{n}"] = FiniteGroup(cyclic_group(n))
    groups["Z2xZ2"] = FiniteGroup(
        direct_product(cyclic_group(2), cyclic_group(2))
    )
    groups["S3"] = symmetric_group(3)

    return groups
