import logging
from collections import deque
from typing import Iterable, List, Optional, Sequence, Tuple, Union

import numpy as np

from conjcalc import core
from conjcalc.core.exceptions import IncompatiblePartition
from conjcalc.core.partition import ElementPartition, PairRelation
from conjcalc.core.semigroup import FiniteSemigroup, adjoin_identity, validate

logger = logging.getLogger(__name__)
logger.setLevel(core.config.constants.LOGLEVEL_MODULE_DEFAULT)


def compatibility_violation(
    S: FiniteSemigroup, partition: ElementPartition
) -> Optional[Tuple[int, int, int]]:
    """Find (a, b, c) with a ~ b but ca, cb or ac, bc in distinct classes

    Returns None when the partition is a congruence.
    """

    labels = partition.labels()
    T = S.table
    for block in partition.classes():
        if len(block) < 2:
            continue
        members = np.array(block)
        left = labels[T[:, members]]  # left[c, k] = class of c*block[k]
        right = labels[T[members, :]]  # right[k, c] = class of block[k]*c
        bad_left = np.argwhere(left != left[:, :1])
        if bad_left.size:
            c, k = bad_left[0]
            return block[0], block[k], int(c)
        bad_right = np.argwhere(right != right[:1, :])
        if bad_right.size:
            k, c = bad_right[0]
            return block[0], block[k], int(c)
    return None


class Congruence:
    def __init__(
        self, semigroup: FiniteSemigroup, partition: ElementPartition
    ) -> None:
        """A partition of a semigroup compatible with its product

        The partition is trusted; call `is_compatible()` to scan it.
        """

        if partition.size != semigroup.order:
            raise ValueError(
                f"Partition of size {partition.size} does not fit a "
                f"semigroup of order {semigroup.order}"
            )
        self.semigroup = semigroup
        self.partition = partition

    def classes(self) -> List[List[int]]:
        return self.partition.classes()

    @property
    def num_classes(self) -> int:
        return self.partition.num_classes

    def contains(self, a: int, b: int) -> bool:
        return self.partition.same(a, b)

    def canonical_map(self) -> np.ndarray:
        """Index of the class of each element in the quotient"""

        return self.partition.labels()

    def is_compatible(self) -> bool:
        return compatibility_violation(self.semigroup, self.partition) is None

    def quotient(self) -> FiniteSemigroup:
        return quotient(self.semigroup, self)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, Congruence):
            return self.partition == other.partition
        if isinstance(other, ElementPartition):
            return self.partition == other
        return NotImplemented

    def __repr__(self) -> str:
        return f"Congruence(classes={self.classes()})"


def congruence_generated(
    S: FiniteSemigroup,
    pairs: Union[PairRelation, Iterable[Tuple[int, int]]],
) -> Congruence:
    """Least congruence containing the given pairs

    Each time two classes merge, all one-sided multiples of the merged pair
    are queued, so the result is compatible once the queue drains.
    """

    n = S.order
    T = S.table
    partition = ElementPartition(n)

    if isinstance(pairs, PairRelation):
        seed = np.argwhere(pairs.matrix)
        queue = deque([(seed[:, 0].tolist(), seed[:, 1].tolist())])
    else:
        pairs = list(pairs)
        queue = deque([([a for a, _ in pairs], [b for _, b in pairs])])

    merges = 0
    while queue:
        xs, ys = queue.popleft()
        for a, b in zip(xs, ys):
            if partition.union(a, b):
                merges += 1
                queue.append((T[:, a].tolist(), T[:, b].tolist()))
                queue.append((T[a, :].tolist(), T[b, :].tolist()))

    logger.debug(
        f"Generated congruence with {partition.num_classes} classes "
        f"after {merges} merges"
    )
    congruence = Congruence(S, partition)
    if core.config.constants.VERIFY_INTERNAL and not (
        congruence.is_compatible()
    ):
        raise RuntimeError("Generated partition failed the compatibility scan")

    return congruence


def least_commutative_congruence(S: FiniteSemigroup) -> Congruence:
    """Congruence generated by all pairs (st, ts)"""

    return congruence_generated(
        S, PairRelation.from_pairs(S.order, S.table.ravel(), S.table.T.ravel())
    )


def quotient(
    S: FiniteSemigroup, congruence: Union[Congruence, ElementPartition]
) -> FiniteSemigroup:
    """Cayley table on the classes of a congruence

    Raises
    ------
    IncompatiblePartition
        If the partition is not compatible with the product
    """

    partition = (
        congruence.partition
        if isinstance(congruence, Congruence)
        else congruence
    )
    violation = compatibility_violation(S, partition)
    if violation is not None:
        a, b, c = violation
        raise IncompatiblePartition(
            f"{S.label(a)} and {S.label(b)} share a class but their "
            f"multiples by {S.label(c)} do not"
        )

    classes = partition.classes()
    labels = partition.labels()
    representatives = np.array([block[0] for block in classes])
    table = labels[S.table[np.ix_(representatives, representatives)]]
    names = [
        "{" + ",".join(S.label(a) for a in block) + "}" for block in classes
    ]

    return validate(names, table, max_order=len(names))


def closure_of_subset(
    S: FiniteSemigroup,
    subset: Iterable[int],
    partition: Union[Congruence, ElementPartition],
) -> frozenset:
    """Union of the classes that meet the subset"""

    if isinstance(partition, Congruence):
        partition = partition.partition
    labels = partition.labels()
    hit = {labels[a] for a in subset}
    return frozenset(a for a in range(S.order) if labels[a] in hit)


def is_subsemigroup(S: FiniteSemigroup, subset: Iterable[int]) -> bool:
    members = np.array(sorted(set(subset)))
    if members.size == 0:
        return False
    products = S.table[np.ix_(members, members)]
    return bool(np.isin(products, members).all())


def is_left_ideal(S: FiniteSemigroup, subset: Iterable[int]) -> bool:
    members = np.array(sorted(set(subset)))
    return members.size > 0 and bool(
        np.isin(S.table[:, members], members).all()
    )


def is_right_ideal(S: FiniteSemigroup, subset: Iterable[int]) -> bool:
    members = np.array(sorted(set(subset)))
    return members.size > 0 and bool(
        np.isin(S.table[members, :], members).all()
    )


def is_two_sided_ideal(S: FiniteSemigroup, subset: Iterable[int]) -> bool:
    subset = list(subset)
    return is_left_ideal(S, subset) and is_right_ideal(S, subset)


def left_ideal_generated(S: FiniteSemigroup, a: int) -> frozenset:
    """S^1 a"""

    S1 = adjoin_identity(S)
    return frozenset(int(x) for x in np.unique(S1.table[:, a]))


def right_ideal_generated(S: FiniteSemigroup, a: int) -> frozenset:
    """a S^1"""

    S1 = adjoin_identity(S)
    return frozenset(int(x) for x in np.unique(S1.table[a, :]))


def is_homomorphism(
    S: FiniteSemigroup, T: FiniteSemigroup, mapping: Sequence[int]
) -> bool:
    """True if mapping[ab] = mapping[a] mapping[b] for all a, b in S"""

    image = np.asarray(mapping, dtype=np.int64)
    if image.shape != (S.order,):
        raise ValueError("Mapping must give one image per element of S")
    return bool(
        np.array_equal(image[S.table], T.table[np.ix_(image, image)])
    )


def sample_commutative_congruences(
    S: FiniteSemigroup,
    rng: np.random.Generator,
    count: int,
    max_draws: int = 200,
) -> List[Congruence]:
    """Congruences with commutative quotient, grown from random pairs

    Each candidate starts from one random pair and absorbs further random
    pairs until its quotient is commutative. The universal congruence is
    always included. Sampling stops after `count` distinct congruences or
    `max_draws` attempts.
    """

    n = S.order
    universal = ElementPartition.from_pairs(n, ((0, a) for a in range(n)))
    found = [Congruence(S, universal)]
    seen = [universal.classes()]
    for _ in range(max_draws):
        if len(found) >= count:
            break
        pairs = [tuple(rng.integers(0, n, size=2).tolist())]
        candidate = congruence_generated(S, pairs)
        while not candidate.quotient().is_commutative():
            pairs.append(tuple(rng.integers(0, n, size=2).tolist()))
            candidate = congruence_generated(S, pairs)
        classes = candidate.classes()
        if classes not in seen:
            found.append(candidate)
            seen.append(classes)

    logger.debug(
        f"Sampled {len(found)} commutative congruences on order {n}"
    )
    return found


def check_image_collapse(S: FiniteSemigroup) -> Optional[Tuple[int, int]]:
    """The canonical map onto S/~s must send pr and rp to the same class

    Returns a pair (pr, rp) with distinct images, or None. Also fails with
    (-1, -1) if the quotient is not commutative or the canonical map is not
    a homomorphism.
    """

    least = least_commutative_congruence(S)
    image = least.quotient()
    mapping = least.canonical_map()
    if not image.is_commutative() or not is_homomorphism(S, image, mapping):
        return -1, -1

    T1 = adjoin_identity(S).table
    n = S.order
    xs, ys = T1.ravel(), T1.T.ravel()
    keep = (xs < n) & (ys < n)
    split = np.flatnonzero(mapping[xs[keep]] != mapping[ys[keep]])
    if split.size:
        k = split[0]
        return int(xs[keep][k]), int(ys[keep][k])
    return None
