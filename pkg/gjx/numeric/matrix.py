from fractions import Fraction
from typing import Iterable, Iterator, List, Optional, Sequence, Tuple

import numpy as np

from gjx.exceptions import DimensionMismatchError, IndexOutOfRangeError, InvalidArgumentError
from gjx.numeric.rational import RationalLike, as_rational, format_rational


class IndexList:
    """
    A strictly increasing sequence of 1-based row or column indices, as used to address submatrices and minors.

    Attributes:
        indices (Tuple[int, ...]): The indices i_1 < i_2 < ... < i_k, all >= 1.
    """

    def __init__(self, indices: Iterable[int]):
        """
        Builds an index list and checks that it is strictly increasing and positive.

        Args:
            indices (Iterable[int]): The 1-based indices.

        Raises:
            InvalidArgumentError: If an index is not an integer, is smaller than 1, or the sequence is not strictly
                increasing.
        """
        values = tuple(indices)
        for value in values:
            if isinstance(value, bool) or not isinstance(value, (int, np.integer)):
                raise InvalidArgumentError(f"index {value!r} is not an integer")
        self.indices: Tuple[int, ...] = tuple(int(value) for value in values)
        if any(value < 1 for value in self.indices):
            raise InvalidArgumentError(f"indices must be >= 1, got {self.indices}")
        if any(a >= b for a, b in zip(self.indices, self.indices[1:])):
            raise InvalidArgumentError(f"indices must be strictly increasing, got {self.indices}")

    def check_bound(self, bound: int, what: str = "index") -> 'IndexList':
        """
        Checks that every index addresses a dimension of size `bound`.

        Returns:
            IndexList: self, for chaining.
        """
        if self.indices and self.indices[-1] > bound:
            raise IndexOutOfRangeError(f"{what} {self.indices[-1]} is out of range 1..{bound}")
        return self

    @classmethod
    def span(cls, first: int, last: int) -> 'IndexList':
        """The contiguous index list first, first + 1, ..., last (empty if last < first)."""
        return cls(range(first, last + 1))

    def __len__(self) -> int:
        return len(self.indices)

    def __iter__(self) -> Iterator[int]:
        return iter(self.indices)

    def __getitem__(self, position: int) -> int:
        return self.indices[position]

    def __eq__(self, other) -> bool:
        if isinstance(other, IndexList):
            return self.indices == other.indices
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self.indices)

    def __repr__(self) -> str:
        return f"IndexList({list(self.indices)})"


class Matrix:
    """
    Dense, immutable m x n matrix of exact rationals.

    Entries are canonical Fractions held in a read-only numpy object array. All public indexing is 1-based:
    `A[i, j]` is the entry a_{ij} with 1 <= i <= m and 1 <= j <= n.
    """

    def __init__(self, rows: Iterable[Iterable[RationalLike]]):
        """
        Builds a matrix from its rows.

        Args:
            rows: The rows, each an iterable of Fractions, integers or rational token strings.

        Raises:
            DimensionMismatchError: If there are no rows, no columns, or rows of different lengths.
            InvalidArgumentError: If an entry is not exact (floats are refused).
        """
        grid = [[as_rational(value) for value in row] for row in rows]
        if not grid or not grid[0]:
            raise DimensionMismatchError("a matrix needs at least one row and one column")
        width = len(grid[0])
        for i, row in enumerate(grid, start=1):
            if len(row) != width:
                raise DimensionMismatchError(f"row {i} has {len(row)} entries, expected {width}")
        array = np.empty((len(grid), width), dtype=object)
        for i, row in enumerate(grid):
            for j, value in enumerate(row):
                array[i, j] = value
        self._freeze(array)

    def _freeze(self, array: np.ndarray) -> None:
        array.flags.writeable = False
        self._grid: np.ndarray = array
        self._hash: Optional[int] = None

    @classmethod
    def _from_array(cls, array: np.ndarray) -> 'Matrix':
        # The array must already hold canonical Fractions and must not be shared.
        matrix = cls.__new__(cls)
        matrix._freeze(array)
        return matrix

    @classmethod
    def identity(cls, n: int) -> 'Matrix':
        """The n x n identity matrix I_n."""
        if n < 1:
            raise DimensionMismatchError(f"identity size must be >= 1, got {n}")
        return cls([[Fraction(int(i == j)) for j in range(n)] for i in range(n)])

    @classmethod
    def zeros(cls, m: int, n: int) -> 'Matrix':
        """The m x n zero matrix."""
        if m < 1 or n < 1:
            raise DimensionMismatchError(f"matrix dimensions must be >= 1, got {m}x{n}")
        return cls([[Fraction(0)] * n for _ in range(m)])

    @property
    def m(self) -> int:
        """Number of rows."""
        return self._grid.shape[0]

    @property
    def n(self) -> int:
        """Number of columns."""
        return self._grid.shape[1]

    @property
    def shape(self) -> Tuple[int, int]:
        return self.m, self.n

    @property
    def is_square(self) -> bool:
        return self.m == self.n

    def _check_position(self, i: int, j: int) -> None:
        if not 1 <= i <= self.m:
            raise IndexOutOfRangeError(f"row {i} is out of range 1..{self.m}")
        if not 1 <= j <= self.n:
            raise IndexOutOfRangeError(f"column {j} is out of range 1..{self.n}")

    def __getitem__(self, position: Tuple[int, int]) -> Fraction:
        i, j = position
        self._check_position(i, j)
        return self._grid[i - 1, j - 1]

    def row(self, i: int) -> Tuple[Fraction, ...]:
        self._check_position(i, 1)
        return tuple(self._grid[i - 1, :])

    def column(self, j: int) -> Tuple[Fraction, ...]:
        self._check_position(1, j)
        return tuple(self._grid[:, j - 1])

    def to_rows(self) -> List[List[Fraction]]:
        return [list(row) for row in self._grid]

    def entries(self) -> Iterator[Tuple[int, int, Fraction]]:
        """Yields (i, j, a_ij) in row-major order with 1-based indices."""
        for i in range(self.m):
            for j in range(self.n):
                yield i + 1, j + 1, self._grid[i, j]

    def block(self, rows: Sequence[int], cols: Sequence[int]) -> 'Matrix':
        """
        Copies the entries at the given 1-based rows and columns, in the given order.
        """
        for i in rows:
            self._check_position(i, 1)
        for j in cols:
            self._check_position(1, j)
        if not rows or not cols:
            raise DimensionMismatchError("a block needs at least one row and one column")
        array = self._grid[np.ix_([i - 1 for i in rows], [j - 1 for j in cols])].copy()
        return Matrix._from_array(array)

    def transpose(self) -> 'Matrix':
        return Matrix._from_array(self._grid.T.copy())

    def with_entry(self, i: int, j: int, value: RationalLike) -> 'Matrix':
        """A copy of the matrix with a_ij replaced by value."""
        self._check_position(i, j)
        array = self._grid.copy()
        array[i - 1, j - 1] = as_rational(value)
        return Matrix._from_array(array)

    def swap_rows(self, a: int, b: int) -> 'Matrix':
        self._check_position(a, 1)
        self._check_position(b, 1)
        array = self._grid.copy()
        array[[a - 1, b - 1], :] = array[[b - 1, a - 1], :]
        return Matrix._from_array(array)

    def swap_columns(self, a: int, b: int) -> 'Matrix':
        self._check_position(1, a)
        self._check_position(1, b)
        array = self._grid.copy()
        array[:, [a - 1, b - 1]] = array[:, [b - 1, a - 1]]
        return Matrix._from_array(array)

    def is_zero(self) -> bool:
        return all(value == 0 for value in self._grid.flat)

    def max_abs_in_block(self, first_row: int, first_col: int) -> Tuple[int, int, Fraction]:
        """
        Finds the entry of largest absolute value in the lower-right block i >= first_row, j >= first_col.

        Ties are broken by the smallest row, then the smallest column.

        Returns:
            Tuple[int, int, Fraction]: The 1-based position (i, j) and the entry itself.
        """
        self._check_position(first_row, first_col)
        best_i, best_j = first_row, first_col
        best = self._grid[first_row - 1, first_col - 1]
        for i in range(first_row - 1, self.m):
            for j in range(first_col - 1, self.n):
                value = self._grid[i, j]
                if abs(value) > abs(best):
                    best_i, best_j, best = i + 1, j + 1, value
        return best_i, best_j, best

    def __matmul__(self, other: 'Matrix') -> 'Matrix':
        if not isinstance(other, Matrix):
            return NotImplemented
        if self.n != other.m:
            raise DimensionMismatchError(f"cannot multiply {self.m}x{self.n} by {other.m}x{other.n}")
        return Matrix._from_array(self._grid.dot(other._grid))

    def __eq__(self, other) -> bool:
        if not isinstance(other, Matrix):
            return NotImplemented
        return self.shape == other.shape and bool(np.all(self._grid == other._grid))

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.shape, tuple(self._grid.flat)))
        return self._hash

    def __getstate__(self):
        return {"grid": self._grid.copy()}

    def __setstate__(self, state):
        self._freeze(state["grid"])

    def __repr__(self) -> str:
        rows = [[format_rational(value) for value in row] for row in self._grid]
        return f"Matrix({rows})"

    def __str__(self) -> str:
        return "\n".join(" ".join(format_rational(value) for value in row) for row in self._grid)
