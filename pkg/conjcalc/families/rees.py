"""Rees matrix semigroups M0(G; I, Lambda; P) and M(G; I, Lambda; P)

Elements are ReesTriple(i, g, lam) with zero-based indices, or None for the
zero of M0. The sandwich matrix P is indexed P[lam][i] and holds group
element indices, with None standing for a zero entry.
"""

import itertools
import logging
from dataclasses import dataclass
from functools import cached_property
from typing import List, Optional, Sequence, Tuple

import numpy as np

from conjcalc import core
from conjcalc.core.congruence import Congruence
from conjcalc.core.exceptions import (
    HasZeroEntries,
    InvalidSandwich,
    NotLinked,
    NotNormalized,
    ShapeMismatch,
    TooLarge,
)
from conjcalc.core.models import ReesModel
from conjcalc.core.partition import ElementPartition
from conjcalc.core.semigroup import FiniteSemigroup, validate
from conjcalc.families.groups import FiniteGroup, group_from_semigroup

logger = logging.getLogger(__name__)
logger.setLevel(core.config.constants.LOGLEVEL_MODULE_DEFAULT)

ZERO_TOKEN = "0"

Sandwich = Tuple[Tuple[Optional[int], ...], ...]


@dataclass(frozen=True)
class ReesTriple:
    i: int
    g: int
    lam: int


ReesElement = Optional[ReesTriple]


class ReesSemigroup:
    def __init__(
        self,
        group: FiniteGroup,
        I: int,
        Lambda: int,
        P: Sequence[Sequence[Optional[int]]],
        with_zero: bool = True,
    ) -> None:
        """Rees matrix semigroup over a finite group

        Parameters
        ----------
        group : FiniteGroup
            The structure group G
        I : int
            Number of row indices (the i of (i, g, lam))
        Lambda : int
            Number of column indices (the lam of (i, g, lam))
        P : Sequence[Sequence[Optional[int]]]
            Lambda x I sandwich matrix of group element indices, None for 0
        with_zero : bool, optional
            Build M0 with an adjoined zero, by default True. Without it the
            sandwich matrix must not contain zero entries.

        Raises
        ------
        ShapeMismatch
            If P is not Lambda x I
        InvalidSandwich
            If P has an all-zero row or column, an entry outside G, or a
            zero entry when `with_zero` is False
        """

        if I < 1 or Lambda < 1:
            raise ShapeMismatch("Index sets I and Lambda must be nonempty")
        if len(P) != Lambda or any(len(row) != I for row in P):
            raise ShapeMismatch(
                f"Sandwich matrix must be {Lambda} x {I} (Lambda x I)"
            )

        self.group = group
        self.I = I
        self.Lambda = Lambda
        self.P: Sandwich = tuple(
            tuple(None if p is None else int(p) for p in row) for row in P
        )
        self.with_zero = with_zero

        for lam, row in enumerate(self.P):
            for i, p in enumerate(row):
                if p is not None and not 0 <= p < group.order:
                    raise InvalidSandwich(
                        f"Entry p[{lam}][{i}] = {p} is not an element of G"
                    )
        for lam, row in enumerate(self.P):
            if all(p is None for p in row):
                raise InvalidSandwich(f"Row {lam} of P is entirely zero")
        for i in range(I):
            if all(row[i] is None for row in self.P):
                raise InvalidSandwich(f"Column {i} of P is entirely zero")
        if not with_zero and self.has_zero_entries:
            raise InvalidSandwich(
                "M(G; I, Lambda; P) needs every entry of P in G"
            )

    @classmethod
    def from_model(cls, model: ReesModel) -> "ReesSemigroup":
        G = group_from_semigroup(model.group.to_semigroup())
        if ZERO_TOKEN in G.semigroup.elements:
            raise InvalidSandwich(
                f"'{ZERO_TOKEN}' is reserved for zero entries of P"
            )
        P = [
            [None if p == ZERO_TOKEN else G.index(p) for p in row]
            for row in model.P
        ]
        return cls(G, model.I, model.Lambda, P, with_zero=model.with_zero)

    @property
    def has_zero_entries(self) -> bool:
        return any(p is None for row in self.P for p in row)

    @property
    def is_normalized(self) -> bool:
        """First row and first column of P are all the identity"""

        e = self.group.identity
        return all(p == e for p in self.P[0]) and all(
            row[0] == e for row in self.P
        )

    def entry(self, a: ReesTriple) -> Optional[int]:
        """p_{lam i} for a = (i, g, lam)"""

        return self.P[a.lam][a.i]

    def multiply(self, a: ReesElement, b: ReesElement) -> ReesElement:
        if a is None or b is None:
            return None
        p = self.P[a.lam][b.i]
        if p is None:
            return None
        return ReesTriple(a.i, self.group.multiply(a.g, p, b.g), b.lam)

    @cached_property
    def elements(self) -> Tuple[ReesElement, ...]:
        """Triples in (i, g, lam) order, then the zero of M0"""

        triples: List[ReesElement] = [
            ReesTriple(i, g, lam)
            for i, g, lam in itertools.product(
                range(self.I), range(self.group.order), range(self.Lambda)
            )
        ]
        if self.with_zero:
            triples.append(None)
        return tuple(triples)

    @property
    def order(self) -> int:
        return self.I * self.group.order * self.Lambda + int(self.with_zero)

    def index_of(self, a: ReesElement) -> int:
        if a is None:
            if not self.with_zero:
                raise ValueError("M(G; I, Lambda; P) has no zero")
            return self.order - 1
        return (a.i * self.group.order + a.g) * self.Lambda + a.lam

    def label(self, a: ReesElement) -> str:
        if a is None:
            return ZERO_TOKEN
        return f"({a.i + 1},{self.group.label(a.g)},{a.lam + 1})"

    def parse(self, text: str) -> ReesElement:
        """Inverse of `label`"""

        text = text.strip()
        if text == ZERO_TOKEN:
            if not self.with_zero:
                raise ValueError("M(G; I, Lambda; P) has no zero")
            return None
        for a in self.elements:
            if a is not None and self.label(a) == text:
                return a
        raise ValueError(f"Unknown Rees element: '{text}'")

    def cayley(self, max_order: Optional[int] = None) -> FiniteSemigroup:
        """Cayley table with element indices given by `index_of`

        Raises
        ------
        TooLarge
            If the order is above `max_order` (constants.MAX_ORDER)
        """

        if max_order is None:
            max_order = core.config.constants.MAX_ORDER
        if self.order > max_order:
            raise TooLarge(
                f"Rees semigroup of order {self.order} is above the export "
                f"cap of {max_order}"
            )

        GT = self.group.semigroup.table
        m = self.I * self.group.order * self.Lambda
        i, g, lam = np.unravel_index(
            np.arange(m), (self.I, self.group.order, self.Lambda)
        )
        sandwich = np.array(
            [[-1 if p is None else p for p in row] for row in self.P],
            dtype=np.int64,
        )
        p = sandwich[lam[:, None], i[None, :]]  # p[a, b] = p_{lam_a i_b}
        nonzero = p >= 0
        middle = GT[g[:, None], np.where(nonzero, p, 0)]
        product_g = GT[middle, g[None, :]]
        index = (i[:, None] * self.group.order + product_g) * self.Lambda
        index = index + lam[None, :]

        if self.with_zero:
            table = np.full((m + 1, m + 1), m, dtype=np.int64)
            table[:m, :m] = np.where(nonzero, index, m)
        else:
            table = index

        labels = [self.label(a) for a in self.elements]
        logger.debug(f"Exported a Rees semigroup of order {self.order}")

        return validate(labels, table, max_order=max_order)

    def __repr__(self) -> str:
        return (
            f"ReesSemigroup(|G|={self.group.order}, I={self.I}, "
            f"Lambda={self.Lambda}, with_zero={self.with_zero})"
        )


def rees_construct(
    G: FiniteGroup,
    I: int,
    Lambda: int,
    P: Sequence[Sequence[Optional[int]]],
    with_zero: bool = True,
) -> ReesSemigroup:
    return ReesSemigroup(G, I, Lambda, P, with_zero=with_zero)


@dataclass(frozen=True)
class Normalization:
    """Normalized copy of a Rees semigroup with the isomorphism data

    q_{lam i} = v_lam p_{lam i} u_i, and phi(i, g, lam) = (i, u_i^-1 g
    v_lam^-1, lam) maps the source onto the normalized semigroup.
    """

    source: ReesSemigroup
    normalized: ReesSemigroup
    u: Tuple[int, ...]
    v: Tuple[int, ...]

    def phi(self, a: ReesElement) -> ReesElement:
        if a is None:
            return None
        G = self.source.group
        g = G.multiply(G.inverse(self.u[a.i]), a.g, G.inverse(self.v[a.lam]))
        return ReesTriple(a.i, g, a.lam)

    def is_isomorphism(self) -> bool:
        """Exhaustive check that phi preserves every product"""

        src = self.source
        return all(
            self.phi(src.multiply(a, b))
            == self.normalized.multiply(self.phi(a), self.phi(b))
            for a in src.elements
            for b in src.elements
        )


def rees_normalize(sem: ReesSemigroup) -> Normalization:
    """Rescale P so its first row and first column are all 1

    Raises
    ------
    HasZeroEntries
        If P has a zero entry
    """

    if sem.has_zero_entries:
        raise HasZeroEntries("Only sandwich matrices over G are normalized")

    G = sem.group
    P = sem.P
    u = tuple(G.inverse(P[0][i]) for i in range(sem.I))
    v = tuple(
        G.multiply(P[0][0], G.inverse(P[lam][0])) for lam in range(sem.Lambda)
    )
    Q = [
        [G.multiply(v[lam], P[lam][i], u[i]) for i in range(sem.I)]
        for lam in range(sem.Lambda)
    ]
    normalized = ReesSemigroup(
        G, sem.I, sem.Lambda, Q, with_zero=sem.with_zero
    )

    return Normalization(sem, normalized, u, v)


def _is_zero_entry(sem: ReesSemigroup, a: ReesElement) -> bool:
    """True for the zero element and for (i, g, lam) with p_{lam i} = 0"""

    return a is None or sem.entry(a) is None


def _twisted_conjugate(
    sem: ReesSemigroup, a: ReesTriple, b: ReesTriple
) -> bool:
    """Some r in G has r p_{lam i} s = t p_{mu j} r"""

    GT = sem.group.semigroup.table
    r = np.arange(sem.group.order)
    lhs = GT[GT[r, sem.entry(a)], a.g]
    rhs = GT[GT[b.g, sem.entry(b)], r]
    return bool((lhs == rhs).any())


def rees_sim_p1(sem: ReesSemigroup, a: ReesElement, b: ReesElement) -> bool:
    if a == b:
        return True
    if a is None:
        return sem.entry(b) is None
    if b is None:
        return sem.entry(a) is None
    if sem.entry(a) is None or sem.entry(b) is None:
        return False
    return _twisted_conjugate(sem, a, b)


def rees_sim_p(sem: ReesSemigroup, a: ReesElement, b: ReesElement) -> bool:
    if a == b:
        return True
    zero_a, zero_b = _is_zero_entry(sem, a), _is_zero_entry(sem, b)
    if zero_a or zero_b:
        return zero_a and zero_b
    return _twisted_conjugate(sem, a, b)


def sim_s_subgroup(sem: ReesSemigroup) -> frozenset:
    """H, generated by [G, G] and the entries of P"""

    G = sem.group
    entries = {p for row in sem.P for p in row if p is not None}
    return G.subgroup_generated(G.derived_subgroup | entries)


def rees_sim_s(sem: ReesSemigroup, a: ReesElement, b: ReesElement) -> bool:
    """~s in closed form

    Universal when P has a zero entry. Otherwise (i, s, lam) ~s (j, t, mu)
    iff s t^-1 lies in H, and the zero of M0 is alone in its class.

    Raises
    ------
    NotNormalized
        If P has no zero entries and is not normalized
    """

    if sem.has_zero_entries:
        return True
    if not sem.is_normalized:
        raise NotNormalized(
            "Normalize P with rees_normalize() before classifying ~s"
        )
    if a is None or b is None:
        return a is None and b is None
    G = sem.group
    return G.multiply(a.g, G.inverse(b.g)) in sim_s_subgroup(sem)


def classifier_partition(sem: ReesSemigroup, name: str) -> ElementPartition:
    """Partition of the Cayley export induced by a closed-form classifier

    Only meaningful for the equivalences sim_p and sim_s; for sim_p1 use
    `classifier_pairs`.
    """

    classify = {"sim_p": rees_sim_p, "sim_s": rees_sim_s}[name]
    elements = sem.elements
    partition = ElementPartition(len(elements))
    for x, a in enumerate(elements):
        for y in range(x + 1, len(elements)):
            if not partition.same(x, y) and classify(sem, a, elements[y]):
                partition.union(x, y)
    return partition


def classifier_pairs(sem: ReesSemigroup) -> np.ndarray:
    """Boolean matrix of rees_sim_p1 over the Cayley export"""

    elements = sem.elements
    return np.array(
        [[rees_sim_p1(sem, a, b) for b in elements] for a in elements],
        dtype=bool,
    )


@dataclass(frozen=True)
class LinkedTriple:
    """(N, S_rel, T_rel): a normal subgroup with partitions of I and Lambda"""

    N: frozenset
    S_rel: ElementPartition
    T_rel: ElementPartition


def check_linked(sem: ReesSemigroup, triple: LinkedTriple) -> None:
    """Raise NotLinked naming the first violated condition"""

    G = sem.group
    if sem.has_zero_entries:
        raise HasZeroEntries("Linked triples describe M(G; I, Lambda; P)")
    if not sem.is_normalized:
        raise NotNormalized("Linked triples need a normalized P")
    if not G.is_normal(triple.N):
        raise NotLinked("N is not a normal subgroup of G")
    if triple.S_rel.size != sem.I or triple.T_rel.size != sem.Lambda:
        raise NotLinked(
            "S_rel must partition I and T_rel must partition Lambda"
        )

    P = sem.P
    for i, j in itertools.combinations(range(sem.I), 2):
        if not triple.S_rel.same(i, j):
            continue
        for lam in range(sem.Lambda):
            if G.multiply(P[lam][i], G.inverse(P[lam][j])) not in triple.N:
                raise NotLinked(
                    f"({i}, {j}) in S_rel but p[{lam}][{i}] "
                    f"p[{lam}][{j}]^-1 is not in N"
                )
    for lam, mu in itertools.combinations(range(sem.Lambda), 2):
        if not triple.T_rel.same(lam, mu):
            continue
        for i in range(sem.I):
            if G.multiply(P[lam][i], G.inverse(P[mu][i])) not in triple.N:
                raise NotLinked(
                    f"({lam}, {mu}) in T_rel but p[{lam}][{i}] "
                    f"p[{mu}][{i}]^-1 is not in N"
                )


def linked_triple_congruence(
    sem: ReesSemigroup, triple: LinkedTriple
) -> Congruence:
    """Congruence of the triple on the Cayley export

    (i, s, lam) ~ (j, t, mu) iff (i, j) in S_rel, (lam, mu) in T_rel and
    s t^-1 in N. The zero of M0, if present, forms its own class.
    """

    check_linked(sem, triple)
    G = sem.group
    s_labels = triple.S_rel.labels()
    t_labels = triple.T_rel.labels()

    keys = []
    for a in sem.elements:
        if a is None:
            keys.append(("zero",))
        else:
            keys.append(
                (
                    int(s_labels[a.i]),
                    G.coset_key(triple.N, a.g),
                    int(t_labels[a.lam]),
                )
            )
    codes = {key: number for number, key in enumerate(dict.fromkeys(keys))}
    partition = ElementPartition.from_labels([codes[key] for key in keys])

    return Congruence(sem.cayley(), partition)


def sim_s_triple(sem: ReesSemigroup) -> LinkedTriple:
    """(H, I x I, Lambda x Lambda), the triple of ~s"""

    return LinkedTriple(
        N=sim_s_subgroup(sem),
        S_rel=ElementPartition.from_labels([0] * sem.I),
        T_rel=ElementPartition.from_labels([0] * sem.Lambda),
    )
