import itertools
import logging
import math
from dataclasses import dataclass, field
from typing import Dict, List, Optional, Tuple, Union

import numpy as np

from conjcalc import core
from conjcalc.core.congruence import (
    compatibility_violation,
    congruence_generated,
    least_commutative_congruence,
)
from conjcalc.core.exceptions import BudgetExceeded, TooLarge
from conjcalc.core.partition import ElementPartition, PairRelation
from conjcalc.core.semigroup import FiniteSemigroup, adjoin_identity

logger = logging.getLogger(__name__)
logger.setLevel(core.config.constants.LOGLEVEL_MODULE_DEFAULT)


# Order used by the containment report
RELATION_NAMES: Tuple[str, ...] = (
    "sim_n",
    "sim_p1",
    "sim_p",
    "sim_w",
    "sim_o",
    "sim_c",
    "sim_s1",
    "sim_s",
)

# Inclusions that hold in every semigroup
SOUND_INCLUSIONS: Tuple[Tuple[str, str], ...] = (
    ("sim_n", "sim_p1"),
    ("sim_p1", "sim_p"),
    ("sim_p", "sim_w"),
    ("sim_w", "sim_o"),
    ("sim_n", "sim_c"),
    ("sim_c", "sim_o"),
    ("sim_p1", "sim_s1"),
    ("sim_s1", "sim_s"),
    ("sim_p", "sim_s"),
)


def _guard_coupled(S: FiniteSemigroup, force: bool, name: str) -> None:
    limit = core.config.constants.COUPLED_WITNESS_LIMIT
    if S.order > limit and not force:
        raise TooLarge(
            f"{name} searches coupled witnesses; order {S.order} is above "
            f"the limit of {limit} (use force to override)"
        )


def sim_p1(S: FiniteSemigroup) -> PairRelation:
    """All pairs (pr, rp) with p, r in S^1"""

    T1 = adjoin_identity(S).table
    n = S.order
    xs, ys = T1.ravel(), T1.T.ravel()
    keep = (xs < n) & (ys < n)

    return PairRelation.from_pairs(n, xs[keep], ys[keep])


def sim_p(S: FiniteSemigroup) -> ElementPartition:
    return sim_p1(S).equivalence_closure()


def sim_star1(S: FiniteSemigroup) -> PairRelation:
    """All pairs (p1 p2 p3, p1 p3 p2) with p1, p2, p3 in S^1"""

    T1 = adjoin_identity(S).table
    n, m = S.order, T1.shape[0]
    matrix = np.zeros((m, m), dtype=bool)
    for p1 in range(m):
        left = T1[T1[p1]]  # left[x, y] = p1 x y
        matrix[left, left.T] = True

    return PairRelation(matrix[:n, :n])


def sim_s(S: FiniteSemigroup) -> ElementPartition:
    """Equivalence closure of sim_star1

    With constants.VERIFY_INTERNAL set, also generates the congruence from
    sim_p1 and the least commutative congruence and checks all three agree.
    """

    partition = sim_star1(S).equivalence_closure()

    if core.config.constants.VERIFY_INTERNAL:
        from_p1 = congruence_generated(S, sim_p1(S)).partition
        least = least_commutative_congruence(S).partition
        if not (partition == from_p1 == least):
            raise RuntimeError(
                "sim_s disagrees with the generated congruences: "
                f"{partition.classes()} / {from_p1.classes()} / "
                f"{least.classes()}"
            )

    return partition


def sim_o(S: FiniteSemigroup) -> PairRelation:
    """Pairs with independent witnesses p (sp = pt) and r (rs = tr)"""

    T1 = adjoin_identity(S).table
    n, m = S.order, T1.shape[0]
    left = np.zeros((n, n), dtype=bool)
    right = np.zeros((n, n), dtype=bool)
    for w in range(m):
        left |= T1[:n, w][:, None] == T1[w, :n][None, :]  # s w = w t
        right |= T1[w, :n][:, None] == T1[:n, w][None, :]  # w s = t w

    return PairRelation(left & right)


def sim_n(S: FiniteSemigroup, force: bool = False) -> PairRelation:
    """Pairs with one witness pair (p, r): sp=pt, rs=tr, rsp=t, ptr=s

    For fixed (p, r) the partner of s is forced to t = rsp, so the search
    runs over p with all (r, s) at once.
    """

    _guard_coupled(S, force, "sim_n")
    T1 = adjoin_identity(S).table
    n, m = S.order, T1.shape[0]
    s_idx = np.arange(n)
    r_idx = np.arange(m)[:, None]
    rs = T1[:, :n]  # rs[r, s]
    matrix = np.zeros((n, n), dtype=bool)
    for p in range(m):
        t = T1[rs, p]  # t[r, s] = r s p
        pt = T1[p, t]
        ok = (
            (T1[pt, r_idx] == s_idx[None, :])  # p t r = s
            & (T1[s_idx, p][None, :] == pt)  # s p = p t
            & (rs == T1[t, r_idx])  # r s = t r
        )
        rows, cols = np.nonzero(ok)
        matrix[cols, t[rows, cols]] = True

    return PairRelation(matrix)


def _index_and_period(S: FiniteSemigroup) -> Tuple[np.ndarray, np.ndarray]:
    """For each s the least i, p with s^i = s^(i+p)"""

    n = S.order
    index = np.zeros(n, dtype=np.int64)
    period = np.zeros(n, dtype=np.int64)
    for s in range(n):
        seen: Dict[int, int] = {}
        value, k = s, 1
        while value not in seen:
            seen[value] = k
            value = int(S.table[value, s])
            k += 1
        index[s] = seen[value]
        period[s] = k - seen[value]
    return index, period


def sim_w(S: FiniteSemigroup, force: bool = False) -> PairRelation:
    """Pairs with p, r in S^1 and m >= 1: sp=pt, rs=tr, pr=s^m, rp=t^m

    Exponents only need to run up to the point where the pair sequence
    (s^m, t^m) repeats, which is at most |S|^2.
    """

    _guard_coupled(S, force, "sim_w")
    T1 = adjoin_identity(S).table
    n, m = S.order, T1.shape[0]

    index, period = _index_and_period(S)
    horizon = 1
    for s in range(n):
        for t in range(s, n):
            horizon = max(
                horizon,
                int(max(index[s], index[t]))
                + math.lcm(int(period[s]), int(period[t])),
            )
    horizon = min(horizon, n * n)

    # powers[s, k] = s^(k+1)
    powers = np.empty((n, horizon), dtype=np.int64)
    powers[:, 0] = np.arange(n)
    for k in range(1, horizon):
        powers[:, k] = S.table[powers[:, k - 1], np.arange(n)]

    # reachable[s, t, x*n + y]: (x, y) = (s^k, t^k) for some k
    reachable = np.zeros((n, n, n * n), dtype=bool)
    t_rows = np.repeat(np.arange(n), horizon)
    for s in range(n):
        codes = powers[s][None, :] * n + powers  # codes[t, k]
        reachable[s][t_rows, codes.ravel()] = True

    # Witness conditions split into sp = pt and rs = tr
    conj_left = [
        T1[:n, p][:, None] == T1[p, :n][None, :] for p in range(m)
    ]
    conj_right = [
        T1[r, :n][:, None] == T1[:n, r][None, :] for r in range(m)
    ]

    matrix = np.zeros((n, n), dtype=bool)
    for p in range(m):
        for r in range(m):
            x, y = T1[p, r], T1[r, p]
            if x >= n or y >= n:
                continue
            matrix |= (
                conj_left[p] & conj_right[r] & reachable[:, :, x * n + y]
            )

    return PairRelation(matrix)


def sim_c(S: FiniteSemigroup, force: bool = False) -> PairRelation:
    """Pairs with p in P(s), r in P(t), sp = pt and rs = tr

    P(s) holds the p in S^1 with rsp != 0 whenever rs != 0. Without a zero
    the condition is vacuous and sim_c equals sim_o. The zero is related
    only to itself.
    """

    _guard_coupled(S, force, "sim_c")
    if S.zero is None:
        return sim_o(S)

    T1 = adjoin_identity(S).table
    n, m, z = S.order, T1.shape[0], S.zero

    # allowed[s, p]: p in P(s)
    allowed = np.zeros((n, m), dtype=bool)
    for s in range(n):
        rs = T1[:, s]
        rsp = T1[rs[:, None], np.arange(m)[None, :]]
        allowed[s] = ((rs == z)[:, None] | (rsp != z)).all(axis=0)

    left = np.zeros((n, n), dtype=bool)
    right = np.zeros((n, n), dtype=bool)
    for w in range(m):
        left |= allowed[:, w][:, None] & (
            T1[:n, w][:, None] == T1[w, :n][None, :]
        )
        right |= allowed[:, w][None, :] & (
            T1[w, :n][:, None] == T1[:n, w][None, :]
        )

    matrix = left & right
    matrix[z, :] = False
    matrix[:, z] = False
    matrix[z, z] = True

    return PairRelation(matrix)


def _left_multiplication_tables(
    table: np.ndarray, factors: List[int]
) -> Dict[int, List[List[int]]]:
    """Byte lookup tables for multiplying a bitmask set on the left

    lut[b][j][v] is the bitmask of {b*q : q in chunk j, bit pattern v}.
    """

    n = table.shape[0]
    chunks = (n + 7) // 8
    lut: Dict[int, List[List[int]]] = {}
    for b in factors:
        per_chunk = []
        for j in range(chunks):
            row = [0] * 256
            for v in range(1, 256):
                low = (v & -v).bit_length() - 1
                q = 8 * j + low
                bit = 1 << int(table[b, q]) if q < n else 0
                row[v] = row[v & (v - 1)] | bit
            per_chunk.append(row)
        lut[b] = per_chunk
    return lut


def _multiply_set(lut_b: List[List[int]], mask: int) -> int:
    result, j = 0, 0
    while mask:
        v = mask & 255
        if v:
            result |= lut_b[j][v]
        mask >>= 8
        j += 1
    return result


def sim_s1_bounded(
    S: FiniteSemigroup, L: int, state_cap: Optional[int] = None
) -> PairRelation:
    """Pairs sharing a factorisation multiset of size <= L

    products(M) = {a*q : a in M, q in products(M - a)} is computed level by
    level over multisets of factors from S^1 minus the identity. The
    result grows with L and always lies inside sim_s.

    Raises
    ------
    BudgetExceeded
        If the number of multisets would exceed the state cap
    """

    if L < 1:
        raise ValueError(f"Bound L must be at least 1, got {L}")
    if state_cap is None:
        state_cap = core.config.constants.S1_STATE_CAP

    n = S.order
    factors = [a for a in range(n) if a != S.identity]
    states = math.comb(len(factors) + L, L)
    if states > state_cap:
        raise BudgetExceeded(
            f"{states} factor multisets at L={L} exceed the cap of "
            f"{state_cap}"
        )

    lut = _left_multiplication_tables(S.table, factors)
    level: Dict[Tuple[int, ...], int] = {(a,): 1 << a for a in factors}
    masks = set(level.values())
    for size in range(2, L + 1):
        following: Dict[Tuple[int, ...], int] = {}
        for multiset in itertools.combinations_with_replacement(
            factors, size
        ):
            mask = 0
            for position, b in enumerate(multiset):
                if position and multiset[position - 1] == b:
                    continue
                rest = multiset[:position] + multiset[position + 1 :]
                mask |= _multiply_set(lut[b], level[rest])
            following[multiset] = mask
        level = following
        masks.update(level.values())
        logger.debug(
            f"sim_s1 level {size}: {len(level)} multisets, "
            f"{len(masks)} distinct product sets"
        )

    matrix = np.eye(n, dtype=bool)
    for mask in masks:
        members = [a for a in range(n) if (mask >> a) & 1]
        if len(members) > 1:
            matrix[np.ix_(members, members)] = True

    return PairRelation(matrix)


def compute(
    S: FiniteSemigroup,
    name: str,
    L: Optional[int] = None,
    force: bool = False,
) -> Union[PairRelation, ElementPartition]:
    """Dispatch on a relation name from RELATION_NAMES or "sim_star1" """

    if L is None:
        L = core.config.constants.S1_BOUND_L
    if name == "sim_p1":
        return sim_p1(S)
    if name == "sim_p":
        return sim_p(S)
    if name == "sim_n":
        return sim_n(S, force)
    if name == "sim_o":
        return sim_o(S)
    if name == "sim_w":
        return sim_w(S, force)
    if name == "sim_c":
        return sim_c(S, force)
    if name == "sim_star1":
        return sim_star1(S)
    if name == "sim_s1":
        return sim_s1_bounded(S, L)
    if name == "sim_s":
        return sim_s(S)
    raise ValueError(f"Unknown relation: '{name}'")


def as_relation(value: Union[PairRelation, ElementPartition]) -> PairRelation:
    if isinstance(value, ElementPartition):
        return value.to_relation()
    return value


@dataclass
class ContainmentReport:
    """Inclusions between the eight relations on one semigroup"""

    names: Tuple[str, ...]
    subset: np.ndarray  # subset[i, j]: names[i] is contained in names[j]
    witnesses: Dict[Tuple[str, str], Tuple[int, int]] = field(
        default_factory=dict
    )
    bound_L: int = 0
    sizes: Dict[str, int] = field(default_factory=dict)

    def _pos(self, name: str) -> int:
        return self.names.index(name)

    def is_subset(self, a: str, b: str) -> bool:
        return bool(self.subset[self._pos(a), self._pos(b)])

    def is_equal(self, a: str, b: str) -> bool:
        return self.is_subset(a, b) and self.is_subset(b, a)

    def is_strict(self, a: str, b: str) -> bool:
        return self.is_subset(a, b) and not self.is_subset(b, a)

    def is_incomparable(self, a: str, b: str) -> bool:
        return not self.is_subset(a, b) and not self.is_subset(b, a)

    def violations(self) -> List[Tuple[str, str]]:
        """Sound inclusions that fail on this instance"""

        return [
            (a, b) for a, b in SOUND_INCLUSIONS if not self.is_subset(a, b)
        ]

    def to_dict(self) -> dict:
        return {
            "relations": list(self.names),
            "bound_L": self.bound_L,
            "sizes": self.sizes,
            "matrix": [
                [
                    "subset" if self.subset[i, j] else "not_subset"
                    for j in range(len(self.names))
                ]
                for i in range(len(self.names))
            ],
            "witnesses": {
                f"{a} not in {b}": list(pair)
                for (a, b), pair in sorted(self.witnesses.items())
            },
        }


def containment_matrix(
    S: FiniteSemigroup, L: Optional[int] = None, force: bool = False
) -> ContainmentReport:
    """Compare all eight relations pairwise on S

    The sim_s1 row and column are only valid at the bound L. Each failed
    inclusion records one pair from the difference as a witness.
    """

    if L is None:
        L = core.config.constants.S1_BOUND_L

    relations = {
        name: as_relation(compute(S, name, L=L, force=force))
        for name in RELATION_NAMES
    }
    k = len(RELATION_NAMES)
    subset = np.zeros((k, k), dtype=bool)
    witnesses = {}
    for i, a in enumerate(RELATION_NAMES):
        for j, b in enumerate(RELATION_NAMES):
            outside = relations[a].difference(relations[b])
            subset[i, j] = not outside
            if outside:
                witnesses[(a, b)] = outside[0]

    return ContainmentReport(
        names=RELATION_NAMES,
        subset=subset,
        witnesses=witnesses,
        bound_L=L,
        sizes={name: len(rel) for name, rel in relations.items()},
    )


def check_compatibility(
    S: FiniteSemigroup, partition: ElementPartition
) -> Optional[Tuple[int, int, int, int]]:
    """Find s1 ~ t1, s2 ~ t2 with s1 s2 and t1 t2 unrelated

    Returns (s1, t1, s2, t2), or None when the partition is a congruence.
    """

    violation = compatibility_violation(S, partition)
    if violation is None:
        return None
    a, b, c = violation
    if partition.same(S.product(c, a), S.product(c, b)):
        return a, b, c, c
    return c, c, a, b


def check_powers(
    S: FiniteSemigroup, partition: ElementPartition
) -> Optional[Tuple[int, int, int]]:
    """Find (s, t, k) with s ~ t but s^k, t^k unrelated, for k <= |S|"""

    labels = partition.labels()
    n = S.order
    same = labels[:, None] == labels[None, :]
    current = np.arange(n)
    for k in range(2, n + 1):
        current = S.table[current, np.arange(n)]
        power_labels = labels[current]
        differ = power_labels[:, None] != power_labels[None, :]
        broken = np.argwhere(same & differ)
        if broken.size:
            s, t = broken[0]
            return int(s), int(t), k
    return None


def check_bounded_products(
    S: FiniteSemigroup,
    L1: int,
    L2: int,
    rng: np.random.Generator,
    samples: int = 200,
) -> Optional[Tuple[Tuple[int, int], Tuple[int, int]]]:
    """Sample pairs at bounds L1 and L2; their products must be related at
    bound L1 + L2. Returns a failing pair of pairs, if any."""

    first = sim_s1_bounded(S, L1).pairs
    second = sim_s1_bounded(S, L2).pairs
    combined = sim_s1_bounded(S, L1 + L2)
    for _ in range(samples):
        s1, t1 = first[int(rng.integers(len(first)))]
        s2, t2 = second[int(rng.integers(len(second)))]
        if (S.product(s1, s2), S.product(t1, t2)) not in combined:
            return (s1, t1), (s2, t2)
    return None
