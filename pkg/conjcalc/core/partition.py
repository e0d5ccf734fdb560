"""Equivalence relations and plain pair relations on element indices"""

from typing import Iterable, List, Optional, Sequence, Tuple

import numpy as np


class ElementPartition:
    def __init__(self, size: int) -> None:
        """Union-find over the indices [0, size), starting discrete"""

        self.size = size
        self._parent = list(range(size))
        self._rank = [0] * size

    @classmethod
    def from_pairs(
        cls, size: int, pairs: Iterable[Tuple[int, int]]
    ) -> "ElementPartition":
        partition = cls(size)
        for a, b in pairs:
            partition.union(a, b)
        return partition

    @classmethod
    def from_labels(cls, labels: Sequence[int]) -> "ElementPartition":
        """Partition where a and b share a class iff labels[a] == labels[b]"""

        partition = cls(len(labels))
        first = {}
        for index, label in enumerate(labels):
            if label in first:
                partition.union(first[label], index)
            else:
                first[label] = index
        return partition

    @classmethod
    def from_classes(
        cls, size: int, classes: Iterable[Iterable[int]]
    ) -> "ElementPartition":
        partition = cls(size)
        for block in classes:
            block = list(block)
            for other in block[1:]:
                partition.union(block[0], other)
        return partition

    def find(self, a: int) -> int:
        root = a
        while self._parent[root] != root:
            root = self._parent[root]
        # Path compression
        while self._parent[a] != root:
            self._parent[a], a = root, self._parent[a]
        return root

    def union(self, a: int, b: int) -> bool:
        """Merge the classes of a and b; return True if they were distinct"""

        ra, rb = self.find(a), self.find(b)
        if ra == rb:
            return False
        if self._rank[ra] < self._rank[rb]:
            ra, rb = rb, ra
        self._parent[rb] = ra
        if self._rank[ra] == self._rank[rb]:
            self._rank[ra] += 1
        return True

    def same(self, a: int, b: int) -> bool:
        return self.find(a) == self.find(b)

    def classes(self) -> List[List[int]]:
        """Classes as sorted lists, ordered by their least member"""

        blocks: dict = {}
        for a in range(self.size):
            blocks.setdefault(self.find(a), []).append(a)
        return sorted(blocks.values(), key=lambda block: block[0])

    def labels(self) -> np.ndarray:
        """Class number of every element, numbering classes as `classes()`"""

        out = np.empty(self.size, dtype=np.int64)
        for number, block in enumerate(self.classes()):
            out[block] = number
        return out

    @property
    def num_classes(self) -> int:
        return len({self.find(a) for a in range(self.size)})

    def is_discrete(self) -> bool:
        return self.num_classes == self.size

    def is_universal(self) -> bool:
        return self.num_classes <= 1

    def class_of(self, a: int) -> List[int]:
        root = self.find(a)
        return [b for b in range(self.size) if self.find(b) == root]

    def refines(self, other: "ElementPartition") -> bool:
        """True if every class of self lies inside a class of other"""

        mine, theirs = self.labels(), other.labels()
        seen: dict = {}
        for a in range(self.size):
            if seen.setdefault(mine[a], theirs[a]) != theirs[a]:
                return False
        return True

    def to_relation(self) -> "PairRelation":
        labels = self.labels()
        return PairRelation(labels[:, None] == labels[None, :])

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, ElementPartition):
            return NotImplemented
        return self.size == other.size and self.classes() == other.classes()

    def __repr__(self) -> str:
        return f"ElementPartition(classes={self.classes()})"


class PairRelation:
    def __init__(self, matrix: np.ndarray) -> None:
        """A relation on [0, n) stored as an n x n boolean matrix"""

        self.matrix = np.array(matrix, dtype=bool)
        if self.matrix.ndim != 2 or (
            self.matrix.shape[0] != self.matrix.shape[1]
        ):
            raise ValueError("Relation matrix must be square")
        self.matrix.setflags(write=False)

    @classmethod
    def from_pairs(
        cls,
        size: int,
        left: Iterable[int],
        right: Optional[Iterable[int]] = None,
    ) -> "PairRelation":
        """Build from parallel index arrays, or from a list of pairs"""

        matrix = np.zeros((size, size), dtype=bool)
        if right is None:
            pairs = list(left)
            if pairs:
                xs, ys = zip(*pairs)
                matrix[list(xs), list(ys)] = True
        else:
            matrix[np.asarray(left, dtype=np.int64), np.asarray(right)] = True
        return cls(matrix)

    @classmethod
    def identity(cls, size: int) -> "PairRelation":
        return cls(np.eye(size, dtype=bool))

    @property
    def size(self) -> int:
        return self.matrix.shape[0]

    @property
    def pairs(self) -> List[Tuple[int, int]]:
        return [(int(a), int(b)) for a, b in np.argwhere(self.matrix)]

    def __len__(self) -> int:
        return int(self.matrix.sum())

    def __contains__(self, pair: Tuple[int, int]) -> bool:
        a, b = pair
        return bool(self.matrix[a, b])

    @property
    def is_symmetric(self) -> bool:
        return bool(np.array_equal(self.matrix, self.matrix.T))

    @property
    def is_reflexive(self) -> bool:
        return bool(self.matrix.diagonal().all())

    def issubset(self, other: "PairRelation") -> bool:
        return not bool((self.matrix & ~other.matrix).any())

    def difference(self, other: "PairRelation") -> List[Tuple[int, int]]:
        return [
            (int(a), int(b))
            for a, b in np.argwhere(self.matrix & ~other.matrix)
        ]

    def union(self, other: "PairRelation") -> "PairRelation":
        return PairRelation(self.matrix | other.matrix)

    def equivalence_closure(self) -> ElementPartition:
        """Least equivalence relation containing the pairs"""

        partition = ElementPartition(self.size)
        for a, b in np.argwhere(self.matrix):
            if a != b:
                partition.union(int(a), int(b))
        return partition

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, PairRelation):
            return NotImplemented
        return bool(np.array_equal(self.matrix, other.matrix))

    def __repr__(self) -> str:
        return f"PairRelation(size={self.size}, pairs={len(self)})"
