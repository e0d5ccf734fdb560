"""Integer semigroup rings and their universal trace

The contracted ring of a semigroup with zero has a basis indexed by the
nonzero elements; the zero of the semigroup is the zero of the ring. A
semigroup without zero uses the plain semigroup ring on all elements.
"""

import itertools
import logging
from dataclasses import dataclass
from typing import Iterable, List, Optional, Tuple

from sympy import Matrix

from conjcalc import core
from conjcalc.core.lattice import IntegerLattice
from conjcalc.core.partition import ElementPartition
from conjcalc.core.relations import sim_p, sim_s1_bounded
from conjcalc.core.semigroup import (
    FiniteSemigroup,
    adjoin_identity,
    from_operation,
)

logger = logging.getLogger(__name__)
logger.setLevel(core.config.constants.LOGLEVEL_MODULE_DEFAULT)


def matrix_unit_semigroup(n: int) -> FiniteSemigroup:
    """{e_ij} with a zero: e_ij e_kl = e_il if j = k, else 0"""

    if n < 1:
        raise ValueError("Matrix units need n >= 1")
    units = list(itertools.product(range(n), repeat=2))
    labels = [f"e{i + 1}{j + 1}" for i, j in units] + ["0"]
    zero = len(units)

    def operation(a: int, b: int) -> int:
        if a == zero or b == zero:
            return zero
        (i, j), (k, l) = units[a], units[b]
        return i * n + l if j == k else zero

    return from_operation(labels, operation)


def ring_basis(S: FiniteSemigroup) -> List[int]:
    """Element indices spanning the ring, in order"""

    return [a for a in range(S.order) if a != S.zero]


@dataclass(frozen=True)
class RingElement:
    """Integer combination of the basis elements of `ring_basis`"""

    coefficients: Tuple[int, ...]

    def __add__(self, other: "RingElement") -> "RingElement":
        return RingElement(
            tuple(a + b for a, b in zip(self.coefficients, other.coefficients))
        )

    def __sub__(self, other: "RingElement") -> "RingElement":
        return RingElement(
            tuple(a - b for a, b in zip(self.coefficients, other.coefficients))
        )

    def __neg__(self) -> "RingElement":
        return RingElement(tuple(-a for a in self.coefficients))


def element_vector(S: FiniteSemigroup, a: int) -> RingElement:
    """The ring element of a semigroup element; the zero maps to 0"""

    basis = ring_basis(S)
    coefficients = [0] * len(basis)
    if a != S.zero:
        coefficients[basis.index(a)] = 1
    return RingElement(tuple(coefficients))


def ring_product(
    S: FiniteSemigroup, u: RingElement, v: RingElement
) -> RingElement:
    """Bilinear extension of the semigroup product"""

    basis = ring_basis(S)
    position = {a: k for k, a in enumerate(basis)}
    out = [0] * len(basis)
    for x, cx in zip(basis, u.coefficients):
        if not cx:
            continue
        for y, cy in zip(basis, v.coefficients):
            product = S.product(x, y)
            if cy and product != S.zero:
                out[position[product]] += cx * cy
    return RingElement(tuple(out))


def _difference_vectors(
    S: FiniteSemigroup,
    pairs: Iterable[Tuple[int, int]],
    pruned: bool = True,
) -> List[List[int]]:
    """vec(a) - vec(b) for the given pairs

    When pruned, only pairs joining two classes are kept: a pair inside an
    existing class is a sum of earlier differences along the spanning
    forest, so the kept vectors span the same lattice.
    """

    basis = ring_basis(S)
    position = {a: k for k, a in enumerate(basis)}
    forest = ElementPartition(S.order)
    seen = set()
    vectors = []
    for a, b in pairs:
        a, b = sorted((int(a), int(b)))
        if pruned and not forest.union(a, b):
            continue
        if a == b or (a, b) in seen:
            continue
        seen.add((a, b))
        vector = [0] * len(basis)
        if a != S.zero:
            vector[position[a]] += 1
        if b != S.zero:
            vector[position[b]] -= 1
        vectors.append(vector)
    return vectors


class CommutatorLattice:
    def __init__(
        self, semigroup: FiniteSemigroup, pruned: bool = True
    ) -> None:
        """Additive span of all ab - ba in the integer semigroup ring

        This is the kernel of the universal trace: two ring elements have
        the same trace iff their difference lies in the lattice.

        Parameters
        ----------
        semigroup : FiniteSemigroup
            The semigroup whose ring is spanned
        pruned : bool, optional
            Hand the HNF only the differences that join two classes of a
            spanning forest, by default True. With False every distinct
            vec(ab) - vec(ba) is reduced.
        """

        self.semigroup = semigroup
        T = semigroup.table
        pairs = zip(T.ravel().tolist(), T.T.ravel().tolist())
        self.lattice = IntegerLattice.from_generators(
            len(ring_basis(semigroup)),
            _difference_vectors(semigroup, pairs, pruned),
        )

    @property
    def rank(self) -> int:
        return self.lattice.rank

    def contains(self, u: RingElement) -> bool:
        return self.lattice.contains(u.coefficients)

    def trace_key(self, a: int) -> Tuple[int, ...]:
        """Canonical representative of vec(a) modulo the lattice

        Each pivot entry is reduced into [0, pivot), so two elements have
        the same trace iff their keys are equal.
        """

        residual = list(element_vector(self.semigroup, a).coefficients)
        for column, pivot in zip(
            reversed(self.lattice.basis), reversed(self.lattice.pivots)
        ):
            quotient = residual[pivot] // column[pivot]
            if quotient:
                residual = [r - quotient * c for r, c in zip(residual, column)]
        return tuple(residual)

    def torsion(self) -> Tuple[List[int], int]:
        """Torsion and free rank of the trace quotient"""

        return self.lattice.torsion()


def commutator_lattice(S: FiniteSemigroup) -> CommutatorLattice:
    return CommutatorLattice(S)


def same_trace(
    S: FiniteSemigroup,
    u: RingElement,
    v: RingElement,
    lattice: Optional[CommutatorLattice] = None,
) -> bool:
    if lattice is None:
        lattice = commutator_lattice(S)
    return lattice.contains(u - v)


@dataclass(frozen=True)
class TraceCheck:
    passed: bool
    counterexample: Optional[Tuple[int, int]] = None


def check_tr_prim(S: FiniteSemigroup) -> TraceCheck:
    """s ~p t exactly when s and t have the same universal trace

    The lattice is reduced from every distinct commutator difference, so it
    shares nothing with the ~p closure it is compared against.
    """

    lattice = CommutatorLattice(S, pruned=False)
    labels = sim_p(S).labels()
    vectors = [element_vector(S, a) for a in range(S.order)]
    for s, t in itertools.combinations(range(S.order), 2):
        related = labels[s] == labels[t]
        if related != lattice.contains(vectors[s] - vectors[t]):
            logger.debug(
                f"Trace and ~p disagree on ({S.label(s)}, {S.label(t)})"
            )
            return TraceCheck(False, (s, t))
    return TraceCheck(True)


def check_trace_lemma(
    S: FiniteSemigroup, lattice: Optional[CommutatorLattice] = None
) -> TraceCheck:
    """One direction only: s ~p t implies equal traces"""

    if lattice is None:
        lattice = commutator_lattice(S)
    for block in sim_p(S).classes():
        for t in block[1:]:
            difference = element_vector(S, block[0]) - element_vector(S, t)
            if not lattice.contains(difference):
                return TraceCheck(False, (block[0], t))
    return TraceCheck(True)


def commutator_ideal_lattice(S: FiniteSemigroup) -> IntegerLattice:
    """Span of q (rs - sr) t over q, t in S^1 and r, s in S"""

    T1 = adjoin_identity(S).table
    n, m = S.order, T1.shape[0]
    rs = T1[:n, :n]
    pairs = set()
    for q in range(m):
        for t in range(m):
            # x[r, s] = q r s t
            left = T1[q][T1[rs, t]]
            right = T1[q][T1[rs.T, t]]
            pairs.update(zip(left.ravel().tolist(), right.ravel().tolist()))

    return IntegerLattice.from_generators(
        len(ring_basis(S)), _difference_vectors(S, pairs)
    )


def commutator_ideal_check(S: FiniteSemigroup, L: int) -> bool:
    """The commutator ideal equals the span of a - b over a ~s1 b at bound L

    Both lattices are reduced to Hermite normal form and compared by mutual
    containment.
    """

    ideal = commutator_ideal_lattice(S)
    related = sim_s1_bounded(S, L)
    symmetric = IntegerLattice.from_generators(
        len(ring_basis(S)), _difference_vectors(S, related.pairs)
    )
    logger.debug(
        f"Commutator ideal rank {ideal.rank}, ~s1 span rank "
        f"{symmetric.rank} at L={L}"
    )
    return ideal == symmetric


def rational_membership(lattice: IntegerLattice, vector: List[int]) -> bool:
    """Membership by solving over the rationals, then checking that the
    coefficients are integers

    Independent of the back substitution in `IntegerLattice.contains`.
    """

    if not lattice.basis:
        return not any(vector)
    basis = Matrix(lattice.basis).T
    try:
        solution, free = basis.gauss_jordan_solve(Matrix(vector))
    except ValueError:
        return False
    # HNF columns are independent, so the solution is unique
    return not free.shape[0] and all(x.is_integer for x in solution)
