import itertools
import logging
from typing import Callable, Iterable, List, Optional, Sequence, Tuple

import numpy as np

from conjcalc import core
from conjcalc.core.exceptions import NonAssociative, ShapeMismatch, TooLarge

logger = logging.getLogger(__name__)
logger.setLevel(core.config.constants.LOGLEVEL_MODULE_DEFAULT)


class FiniteSemigroup:
    def __init__(
        self,
        elements: Sequence[str],
        table: np.ndarray,
        identity: Optional[int] = None,
        zero: Optional[int] = None,
    ) -> None:
        """A finite semigroup given by its Cayley table

        Instances are normally built through `validate()`, which detects the
        identity and zero. The table is frozen on construction.

        Parameters
        ----------
        elements : Sequence[str]
            Element labels, one per row of the table
        table : np.ndarray
            n x n integer array, table[a, b] is the index of a*b
        identity : Optional[int], optional
            Index of the identity element, by default None
        zero : Optional[int], optional
            Index of the zero element, by default None
        """

        self.elements: Tuple[str, ...] = tuple(elements)
        self.table = np.array(table, dtype=np.int64)
        self.table.setflags(write=False)
        self.identity = identity
        self.zero = zero
        self._index = {label: i for i, label in enumerate(self.elements)}

    @property
    def order(self) -> int:
        return len(self.elements)

    def __len__(self) -> int:
        return self.order

    def __repr__(self) -> str:
        return (
            f"FiniteSemigroup(order={self.order}, identity={self.identity}, "
            f"zero={self.zero})"
        )

    def index(self, label: str) -> int:
        """Return the index of an element given its label"""

        if label not in self._index:
            raise ValueError(f"Unknown element label: '{label}'")
        return self._index[label]

    def label(self, index: int) -> str:
        return self.elements[index]

    def product(self, a: int, b: int) -> int:
        return int(self.table[a, b])

    def product_of(self, factors: Iterable[int]) -> int:
        """Multiply a nonempty sequence of element indices left to right"""

        factors = list(factors)
        if not factors:
            raise ValueError("Empty product has no value in a semigroup")
        result = factors[0]
        for f in factors[1:]:
            result = int(self.table[result, f])
        return result

    def power(self, a: int, n: int) -> int:
        if n < 1:
            raise ValueError(f"Exponent must be positive, got {n}")
        return self.product_of([a] * n)

    def is_commutative(self) -> bool:
        return bool(np.array_equal(self.table, self.table.T))

    def to_dict(self) -> dict:
        """Serialise to the semigroup JSON format"""

        return {"elements": list(self.elements), "table": self.table.tolist()}


def first_nonassociative(
    table: np.ndarray,
) -> Optional[Tuple[int, int, int]]:
    """Return the least triple (a, b, c) where (ab)c != a(bc), if any"""

    n = table.shape[0]
    for a in range(n):
        lhs = table[table[a]]  # lhs[b, c] = (ab)c
        rhs = table[a][table]  # rhs[b, c] = a(bc)
        mismatch = np.argwhere(lhs != rhs)
        if mismatch.size:
            b, c = mismatch[0]
            return a, int(b), int(c)
    return None


def find_identity(table: np.ndarray) -> Optional[int]:
    n = table.shape[0]
    ar = np.arange(n)
    left = (table == ar[None, :]).all(axis=1)
    right = (table == ar[:, None]).all(axis=0)
    candidates = np.flatnonzero(left & right)
    return int(candidates[0]) if candidates.size else None


def find_zero(table: np.ndarray) -> Optional[int]:
    n = table.shape[0]
    ar = np.arange(n)
    left = (table == ar[:, None]).all(axis=1)
    right = (table == ar[None, :]).all(axis=0)
    candidates = np.flatnonzero(left & right)
    return int(candidates[0]) if candidates.size else None


def validate(
    elements: Sequence[str],
    table: Sequence[Sequence[int]],
    max_order: Optional[int] = None,
) -> FiniteSemigroup:
    """Check a Cayley table and build the semigroup

    The identity and zero are always detected from the table, never taken
    from the input.

    Parameters
    ----------
    elements : Sequence[str]
        Element labels
    table : Sequence[Sequence[int]]
        Row-major Cayley table, row = left factor
    max_order : Optional[int], optional
        Largest accepted order, by default constants.MAX_ORDER

    Returns
    -------
    FiniteSemigroup
        The validated semigroup

    Raises
    ------
    ShapeMismatch
        If the table is not n x n over n distinct labels, or an entry is out
        of range
    NonAssociative
        With the first failing triple
    TooLarge
        If the order is above `max_order`
    """

    if max_order is None:
        max_order = core.config.constants.MAX_ORDER

    try:
        arr = np.asarray(table, dtype=np.int64)
    except (ValueError, TypeError) as e:
        raise ShapeMismatch(f"Table is not a rectangular integer array: {e}")

    n = len(elements)
    if n == 0:
        raise ShapeMismatch("A semigroup needs at least one element")
    if arr.shape != (n, n):
        raise ShapeMismatch(
            f"Table shape {arr.shape} does not match {n} elements"
        )
    if len(set(elements)) != n:
        raise ShapeMismatch("Element labels must be distinct")
    if n > max_order:
        raise TooLarge(f"Order {n} is above the configured cap {max_order}")
    if arr.min() < 0 or arr.max() >= n:
        raise ShapeMismatch(f"Table entries must lie in [0, {n})")

    failing = first_nonassociative(arr)
    if failing is not None:
        a, b, c = failing
        ab, bc = arr[a, b], arr[b, c]
        raise NonAssociative(
            a,
            b,
            c,
            f"({elements[a]}*{elements[b]})*{elements[c]} = "
            f"{elements[arr[ab, c]]} but "
            f"{elements[a]}*({elements[b]}*{elements[c]}) = "
            f"{elements[arr[a, bc]]}",
        )

    return FiniteSemigroup(
        elements, arr, identity=find_identity(arr), zero=find_zero(arr)
    )


def _fresh_label(existing: Sequence[str], wanted: str) -> str:
    label = wanted
    while label in existing:
        label += "'"
    return label


def adjoin_identity(S: FiniteSemigroup) -> FiniteSemigroup:
    """Return S^1: S itself if it is a monoid, else S with a new identity

    The adjoined identity always takes the last index, so indices below
    |S| keep referring to the elements of S.
    """

    if S.identity is not None:
        return S

    n = S.order
    table = np.empty((n + 1, n + 1), dtype=np.int64)
    table[:n, :n] = S.table
    table[n, :] = np.arange(n + 1)
    table[:, n] = np.arange(n + 1)

    return FiniteSemigroup(
        S.elements + (_fresh_label(S.elements, "1"),),
        table,
        identity=n,
        zero=S.zero,
    )


def with_zero(S: FiniteSemigroup) -> FiniteSemigroup:
    """Return S with a new zero element appended"""

    n = S.order
    table = np.full((n + 1, n + 1), n, dtype=np.int64)
    table[:n, :n] = S.table

    return FiniteSemigroup(
        S.elements + (_fresh_label(S.elements, "0"),),
        table,
        identity=S.identity,
        zero=n,
    )


def is_commutative(S: FiniteSemigroup) -> bool:
    return S.is_commutative()


def subsemigroup_generated(
    S: FiniteSemigroup, subset: Iterable[int]
) -> frozenset:
    """Least subset of S closed under the product that contains `subset`"""

    current = set(int(x) for x in subset)
    if not current:
        raise ValueError("Cannot generate a subsemigroup from an empty set")
    if min(current) < 0 or max(current) >= S.order:
        raise ValueError(f"Subset indices must lie in [0, {S.order})")

    while True:
        members = np.array(sorted(current))
        products = set(np.unique(S.table[np.ix_(members, members)]).tolist())
        if products <= current:
            return frozenset(current)
        current |= products


def direct_product(S: FiniteSemigroup, T: FiniteSemigroup) -> FiniteSemigroup:
    """Componentwise product; (a, b) has index a*|T| + b"""

    n, m = S.order, T.order
    table = (
        S.table[:, None, :, None] * m + T.table[None, :, None, :]
    ).reshape(n * m, n * m)
    labels = [f"({a},{b})" for a in S.elements for b in T.elements]

    return validate(labels, table, max_order=max(n * m, 1))


# Constructors ---------------------------------------------------------------


def from_operation(
    labels: Sequence[str],
    operation: Callable[[int, int], int],
) -> FiniteSemigroup:
    """Build and validate a table from a binary operation on indices"""

    n = len(labels)
    table = [[operation(a, b) for b in range(n)] for a in range(n)]
    return validate(labels, table)


def cyclic_group(n: int) -> FiniteSemigroup:
    return from_operation([str(i) for i in range(n)], lambda a, b: (a + b) % n)


def min_semigroup(n: int) -> FiniteSemigroup:
    """The chain {0, ..., n-1} under st = min{s, t}"""

    return from_operation([str(i) for i in range(n)], min)


def trivial_multiplication(n: int) -> FiniteSemigroup:
    """Null semigroup: every product is the element 0"""

    return from_operation([str(i) for i in range(n)], lambda a, b: 0)


def left_zero(n: int) -> FiniteSemigroup:
    return from_operation([str(i) for i in range(n)], lambda a, b: a)


def random_associative(
    rng: np.random.Generator,
    order: int,
    max_draws: int = 200000,
) -> Optional[FiniteSemigroup]:
    """Search random tables of the given order until one is associative

    Returns None when no associative table turned up within `max_draws`.
    """

    labels = [f"x{i}" for i in range(order)]
    for _ in range(max_draws):
        table = rng.integers(0, order, size=(order, order))
        if first_nonassociative(table) is None:
            return validate(labels, table)
    logger.warning(
        f"No associative table of order {order} in {max_draws} draws"
    )
    return None


def all_associative_tables(order: int) -> List[FiniteSemigroup]:
    """Every associative table on `order` labelled elements (order <= 3)"""

    if order > 3:
        raise TooLarge("Exhaustive table enumeration stops at order 3")
    labels = [f"x{i}" for i in range(order)]
    found = []
    for entries in itertools.product(range(order), repeat=order * order):
        table = np.array(entries, dtype=np.int64).reshape(order, order)
        if first_nonassociative(table) is None:
            found.append(validate(labels, table))
    return found
