import logging
from typing import Iterable, List, Sequence, Tuple

from sympy.polys.domains import ZZ
from sympy.polys.matrices import DM
from sympy.polys.matrices.normalforms import (
    hermite_normal_form,
    smith_normal_form,
)

from conjcalc import core

logger = logging.getLogger(__name__)
logger.setLevel(core.config.constants.LOGLEVEL_MODULE_DEFAULT)


def _pivot_row(column: Sequence[int]) -> int:
    """Lowest row holding a nonzero entry"""

    for row in range(len(column) - 1, -1, -1):
        if column[row] != 0:
            return row
    return -1


class IntegerLattice:
    def __init__(
        self, dimension: int, basis: Sequence[Sequence[int]]
    ) -> None:
        """A sublattice of Z^dimension given by a Hermite normal form basis

        Basis vectors are columns. Each column has a positive pivot at its
        lowest nonzero row, and pivot rows strictly increase from one column
        to the next.

        Parameters
        ----------
        dimension : int
            Dimension of the ambient lattice
        basis : Sequence[Sequence[int]]
            HNF basis columns, as vectors of length `dimension`
        """

        self.dimension = dimension
        self.basis: Tuple[Tuple[int, ...], ...] = tuple(
            tuple(int(x) for x in column) for column in basis
        )
        self.pivots: Tuple[int, ...] = tuple(
            _pivot_row(column) for column in self.basis
        )

        for column in self.basis:
            if len(column) != dimension:
                raise ValueError(
                    f"Basis vector of length {len(column)} in dimension "
                    f"{dimension}"
                )
        if any(p < 0 for p in self.pivots) or list(self.pivots) != sorted(
            set(self.pivots)
        ):
            raise ValueError("Basis is not in Hermite normal form")
        if any(
            column[p] <= 0 for column, p in zip(self.basis, self.pivots)
        ):
            raise ValueError("Hermite normal form pivots must be positive")

    @classmethod
    def from_generators(
        cls, dimension: int, generators: Iterable[Sequence[int]]
    ) -> "IntegerLattice":
        """Lattice spanned by integer vectors, reduced to HNF"""

        vectors = {
            tuple(int(x) for x in v) for v in generators if any(v)
        }
        if dimension == 0 or not vectors:
            return cls(dimension, [])
        columns = sorted(vectors)

        # Pad with zero columns so every row is processed by the reduction
        rows = [
            [column[row] for column in columns] + [0] * dimension
            for row in range(dimension)
        ]
        reduced = hermite_normal_form(DM(rows, ZZ)).to_Matrix()
        basis = [
            [int(reduced[row, j]) for row in range(dimension)]
            for j in range(reduced.shape[1])
        ]
        basis = [column for column in basis if any(column)]
        logger.debug(
            f"Reduced {len(columns)} generators in dimension {dimension} "
            f"to rank {len(basis)}"
        )

        return cls(dimension, basis)

    @property
    def rank(self) -> int:
        return len(self.basis)

    def contains(self, vector: Sequence[int]) -> bool:
        """Exact membership by back substitution against the HNF columns"""

        if len(vector) != self.dimension:
            raise ValueError(
                f"Vector of length {len(vector)} in dimension "
                f"{self.dimension}"
            )
        residual = [int(x) for x in vector]
        for column, pivot in zip(
            reversed(self.basis), reversed(self.pivots)
        ):
            quotient, remainder = divmod(residual[pivot], column[pivot])
            if remainder:
                return False
            if quotient:
                residual = [
                    r - quotient * c for r, c in zip(residual, column)
                ]
        return not any(residual)

    def includes(self, other: "IntegerLattice") -> bool:
        return all(self.contains(column) for column in other.basis)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, IntegerLattice):
            return NotImplemented
        return (
            self.dimension == other.dimension
            and self.includes(other)
            and other.includes(self)
        )

    def invariant_factors(self) -> List[int]:
        """Nonzero diagonal of the Smith normal form of the basis"""

        if not self.basis:
            return []
        rows = [
            [column[row] for column in self.basis]
            for row in range(self.dimension)
        ]
        diagonal = smith_normal_form(DM(rows, ZZ)).to_Matrix()
        factors = [
            abs(int(diagonal[k, k]))
            for k in range(min(diagonal.shape))
            if diagonal[k, k] != 0
        ]
        return sorted(factors)

    def torsion(self) -> Tuple[List[int], int]:
        """Torsion orders and free rank of Z^dimension / lattice"""

        torsion = [d for d in self.invariant_factors() if d > 1]
        return torsion, self.dimension - self.rank

    def __repr__(self) -> str:
        return f"IntegerLattice(dimension={self.dimension}, rank={self.rank})"
