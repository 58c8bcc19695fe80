from fractions import Fraction
from functools import lru_cache
from math import lcm
from typing import List, Sequence, Tuple, Union

from gjx import LAPLACE_LIMIT, MINOR_CACHE_SIZE, MINOR_LAPLACE_LIMIT, RANK_ORACLE_LIMIT
from gjx.exceptions import DimensionMismatchError, InvalidArgumentError, NotSquareError, OracleLimitError, \
    SingularMatrixError
from gjx.numeric import logger
from gjx.numeric.matrix import IndexList, Matrix

IndexArg = Union[IndexList, Sequence[int]]


def _as_index_list(indices: IndexArg) -> IndexList:
    if isinstance(indices, IndexList):
        return indices
    return IndexList(indices)


def submatrix(a: Matrix, rows: IndexArg, cols: IndexArg) -> Matrix:
    """
    Extracts the k x k submatrix A^{i_1..i_k}_{j_1..j_k}.

    Args:
        a (Matrix): The matrix.
        rows: Strictly increasing 1-based row indices i_1 < ... < i_k.
        cols: Strictly increasing 1-based column indices j_1 < ... < j_k.

    Returns:
        Matrix: The k x k matrix of the selected entries, in the given order.

    Raises:
        DimensionMismatchError: If the two lists differ in length, are empty, or address entries outside A.
    """
    rows, cols = _as_index_list(rows), _as_index_list(cols)
    if len(rows) != len(cols):
        raise DimensionMismatchError(f"row list {list(rows)} and column list {list(cols)} differ in length")
    if len(rows) == 0:
        raise DimensionMismatchError("a submatrix needs at least one row and one column")
    rows.check_bound(a.m, "row")
    cols.check_bound(a.n, "column")
    return a.block(rows.indices, cols.indices)


def _integer_rows(a: Matrix) -> Tuple[List[List[int]], int]:
    # Rows scaled by the lcm of their denominators; det(A) = det(grid) / scale.
    scale = 1
    grid: List[List[int]] = []
    for row in a.to_rows():
        factor = lcm(*(value.denominator for value in row))
        scale *= factor
        grid.append([value.numerator * (factor // value.denominator) for value in row])
    return grid, scale


def _laplace(grid: List[List[int]]) -> int:
    size = len(grid)
    if size == 1:
        return grid[0][0]
    if size == 2:
        return grid[0][0] * grid[1][1] - grid[0][1] * grid[1][0]
    total = 0
    for j, value in enumerate(grid[0]):
        if value == 0:
            continue
        rest = [row[:j] + row[j + 1:] for row in grid[1:]]
        cofactor = _laplace(rest)
        total += value * cofactor if j % 2 == 0 else -value * cofactor
    return total


def det_laplace(a: Matrix, limit: int = LAPLACE_LIMIT) -> Fraction:
    """
    Determinant by recursive cofactor expansion along the first row.

    This is the primary oracle. Its cost grows factorially, hence the size limit. The expansion runs on the rows
    scaled to integers, like `det_bareiss`.

    Args:
        a (Matrix): A square matrix.
        limit (int): The largest side accepted.

    Returns:
        Fraction: det(A).

    Raises:
        NotSquareError: If A is not square.
        OracleLimitError: If the side of A exceeds `limit`.
    """
    if not a.is_square:
        raise NotSquareError(f"determinant of a non-square {a.m}x{a.n} matrix")
    if a.m > limit:
        raise OracleLimitError(f"cofactor expansion is limited to side {limit}, got {a.m}")
    grid, scale = _integer_rows(a)
    return Fraction(_laplace(grid), scale)


def det_bareiss(a: Matrix) -> Fraction:
    """
    Determinant by Bareiss' fraction-free elimination.

    Each row is first scaled by the least common multiple of its denominators so that the elimination runs on
    integers with exact divisions; the scaling is undone at the end.

    Args:
        a (Matrix): A square matrix.

    Returns:
        Fraction: det(A).

    Raises:
        NotSquareError: If A is not square.
    """
    if not a.is_square:
        raise NotSquareError(f"determinant of a non-square {a.m}x{a.n} matrix")
    n = a.m
    grid, scale = _integer_rows(a)

    sign = 1
    previous = 1
    for k in range(n - 1):
        if grid[k][k] == 0:
            # Exchange with a lower row that has a non-zero entry in column k
            for i in range(k + 1, n):
                if grid[i][k] != 0:
                    grid[k], grid[i] = grid[i], grid[k]
                    sign = -sign
                    break
            else:
                return Fraction(0)
        pivot = grid[k][k]
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                grid[i][j] = (grid[i][j] * pivot - grid[i][k] * grid[k][j]) // previous
            grid[i][k] = 0
        previous = pivot
    return Fraction(sign * grid[n - 1][n - 1], scale)


@lru_cache(maxsize=MINOR_CACHE_SIZE)
def _cached_minor(a: Matrix, rows: IndexList, cols: IndexList) -> Fraction:
    block = submatrix(a, rows, cols)
    if block.m > MINOR_LAPLACE_LIMIT:
        return det_bareiss(block)
    return det_laplace(block)


def minor(a: Matrix, rows: IndexArg, cols: IndexArg) -> Fraction:
    """
    The minor m^{i_1..i_k}_{j_1..j_k} = det(A^{i_1..i_k}_{j_1..j_k}), evaluated by cofactor expansion up to
    side `MINOR_LAPLACE_LIMIT` and by Bareiss elimination above it, so that no side is refused.

    Matrices are immutable, so minors are memoised per (matrix, rows, cols).

    Raises:
        DimensionMismatchError: As `submatrix`.
    """
    return _cached_minor(a, _as_index_list(rows), _as_index_list(cols))


def principal_minor(a: Matrix, k: int) -> Fraction:
    """
    The leading principal minor m_k = m^{1..k}_{1..k}, with m_0 = 1.

    Raises:
        InvalidArgumentError: If k is outside 0..min(m, n).
    """
    if not 0 <= k <= min(a.m, a.n):
        raise InvalidArgumentError(f"principal minor order {k} is out of range 0..{min(a.m, a.n)}")
    if k == 0:
        return Fraction(1)
    leading = IndexList.span(1, k)
    return minor(a, leading, leading)


def rank_by_minors(a: Matrix, limit: int = RANK_ORACLE_LIMIT) -> int:
    """
    The rank of A as the largest order of a non-vanishing minor.

    The search grows a non-zero minor one order at a time by bordering it with one more row and column. When every
    bordering minor of a non-zero k x k minor vanishes, the rank is k.

    Args:
        a (Matrix): The matrix.
        limit (int): The largest min(m, n) accepted.

    Returns:
        int: The rank; 0 for the zero matrix.

    Raises:
        OracleLimitError: If min(m, n) exceeds `limit`.
    """
    size = min(a.m, a.n)
    if size > limit:
        raise OracleLimitError(f"rank by minors is limited to min(m, n) <= {limit}, got {size}")
    rows: List[int] = []
    cols: List[int] = []
    while len(rows) < size:
        border = next(((i, j) for i in range(1, a.m + 1) if i not in rows for j in range(1, a.n + 1) if j not in cols
                       if minor(a, sorted(rows + [i]), sorted(cols + [j])) != 0), None)
        if border is None:
            break
        rows.append(border[0])
        cols.append(border[1])
    logger.debug(f"Rank {len(rows)}: non-zero minor at rows {sorted(rows)}, columns {sorted(cols)}")
    return len(rows)


def adjugate_inverse(a: Matrix) -> Matrix:
    """
    Brute-force inverse as the transposed cofactor matrix divided by the determinant.

    Only used to verify the inverse obtained from the Gauss-Jordan operation matrices.

    Raises:
        NotSquareError: If A is not square.
        SingularMatrixError: If det(A) = 0.
    """
    if not a.is_square:
        raise NotSquareError(f"inverse of a non-square {a.m}x{a.n} matrix")
    n = a.m
    determinant = det_laplace(a)
    if determinant == 0:
        raise SingularMatrixError("the matrix is singular (determinant 0)")
    if n == 1:
        return Matrix([[1 / determinant]])
    everything = range(1, n + 1)
    inverse_rows = []
    for i in everything:
        row = []
        for j in everything:
            # entry (i, j) of the adjugate is the cofactor C_ji
            cofactor = minor(a, [r for r in everything if r != j], [c for c in everything if c != i])
            row.append(cofactor / determinant if (i + j) % 2 == 0 else -cofactor / determinant)
        inverse_rows.append(row)
    return Matrix(inverse_rows)
