from fractions import Fraction
from typing import Iterable, Tuple

from gjx.exceptions import InvalidArgumentError
from gjx.numeric.matrix import Matrix


class Permutation:
    """
    A bijection of {1..size}, used to exchange rows or columns.

    `mapping[p - 1]` is the original index placed at position p. As a row permutation its matrix P satisfies
    (P A) row p = A row mapping(p); as a column permutation its matrix Q satisfies (A Q) column p = A column
    mapping(p).
    """

    def __init__(self, mapping: Iterable[int]):
        """
        Args:
            mapping (Iterable[int]): The images of positions 1..size.

        Raises:
            InvalidArgumentError: If the mapping is not a bijection of {1..size}.
        """
        self.mapping: Tuple[int, ...] = tuple(int(value) for value in mapping)
        if sorted(self.mapping) != list(range(1, len(self.mapping) + 1)):
            raise InvalidArgumentError(f"{list(self.mapping)} is not a permutation of 1..{len(self.mapping)}")

    @classmethod
    def identity(cls, size: int) -> 'Permutation':
        return cls(range(1, size + 1))

    @property
    def size(self) -> int:
        return len(self.mapping)

    def __call__(self, position: int) -> int:
        return self.mapping[position - 1]

    def is_identity(self) -> bool:
        return self.mapping == tuple(range(1, self.size + 1))

    def swap(self, a: int, b: int) -> 'Permutation':
        """The permutation with the images of positions a and b exchanged."""
        mapping = list(self.mapping)
        mapping[a - 1], mapping[b - 1] = mapping[b - 1], mapping[a - 1]
        return Permutation(mapping)

    def inverse(self) -> 'Permutation':
        mapping = [0] * self.size
        for position, image in enumerate(self.mapping, start=1):
            mapping[image - 1] = position
        return Permutation(mapping)

    def row_matrix(self) -> Matrix:
        """The matrix P with P[p, mapping(p)] = 1."""
        return Matrix([[Fraction(int(self(p) == c)) for c in range(1, self.size + 1)]
                       for p in range(1, self.size + 1)])

    def column_matrix(self) -> Matrix:
        """The matrix Q with Q[mapping(p), p] = 1, the transpose of `row_matrix`."""
        return self.row_matrix().transpose()

    def __eq__(self, other) -> bool:
        if isinstance(other, Permutation):
            return self.mapping == other.mapping
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self.mapping)

    def __repr__(self) -> str:
        return f"Permutation({list(self.mapping)})"
