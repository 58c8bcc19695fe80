from fractions import Fraction
from typing import Optional, Sequence, Tuple

from gjx import KIND_EVEN, KIND_ODD
from gjx.engine import logger
from gjx.exceptions import InvalidArgumentError, NotSquareError, PivotNotNormalizedError, SingularMatrixError, \
    ZeroMatrixError, ZeroPivotError
from gjx.numeric.helpers_numeric import principal_minor, rank_by_minors
from gjx.numeric.matrix import Matrix


class Step:
    """
    One Gauss-Jordan operation: the operation matrix G_q and the intermediate matrix A^(q) = G_q A^(q-1).

    Attributes:
        q (int): The step ordinal, q >= 1.
        op_matrix (Matrix): The m x m operation matrix G_q.
        result (Matrix): The m x n intermediate matrix A^(q).
    """

    def __init__(self, q: int, op_matrix: Matrix, result: Matrix):
        if q < 1:
            raise InvalidArgumentError(f"step ordinal must be >= 1, got {q}")
        self.q = q
        self.op_matrix = op_matrix
        self.result = result

    @property
    def k(self) -> int:
        """The elimination stage: q = 2k + 1 for odd steps, q = 2k + 2 for even steps."""
        return (self.q - 1) // 2

    @property
    def kind(self) -> str:
        return KIND_ODD if self.q % 2 == 1 else KIND_EVEN

    def __repr__(self) -> str:
        return f"Step(q={self.q}, kind={self.kind}, k={self.k})"


class Trace:
    """
    The complete record of a Gauss-Jordan elimination: the input and the 2r steps that reduce it.

    Attributes:
        input (Matrix): The eliminated matrix A = A^(0).
        steps (Tuple[Step, ...]): The steps q = 1..2r, in order.
        rank (int): The rank r reached by the elimination.
    """

    def __init__(self, input_matrix: Matrix, steps: Sequence[Step], rank: int):
        if len(steps) != 2 * rank:
            raise InvalidArgumentError(f"a trace of rank {rank} needs {2 * rank} steps, got {len(steps)}")
        self.input = input_matrix
        self.steps: Tuple[Step, ...] = tuple(steps)
        self.rank = rank

    @property
    def m(self) -> int:
        return self.input.m

    @property
    def n(self) -> int:
        return self.input.n

    def state(self, q: int) -> Matrix:
        """The intermediate matrix A^(q), with A^(0) the input."""
        if not 0 <= q <= len(self.steps):
            raise InvalidArgumentError(f"state {q} is out of range 0..{len(self.steps)}")
        if q == 0:
            return self.input
        return self.steps[q - 1].result

    def intermediate(self, k: int) -> Matrix:
        """The even-order intermediate matrix A^(2k)."""
        return self.state(2 * k)

    def pivot(self, k: int) -> Fraction:
        """The pivot a^(2k)_{k+1,k+1} used at stage k."""
        return self.intermediate(k)[k + 1, k + 1]

    @property
    def final(self) -> Matrix:
        return self.state(len(self.steps))


def step_odd(current: Matrix, k: int) -> Step:
    """
    Builds G_{2k+1}, which multiplies row k + 1 by 1 / a^(2k)_{k+1,k+1}, and applies it.

    Args:
        current (Matrix): The intermediate matrix A^(2k).
        k (int): The stage, 0 <= k < min(m, n).

    Returns:
        Step: The step q = 2k + 1; its result has a 1 at (k + 1, k + 1).

    Raises:
        ZeroPivotError: If the pivot a^(2k)_{k+1,k+1} is zero.
    """
    if not 0 <= k < min(current.m, current.n):
        raise InvalidArgumentError(f"stage {k} is out of range 0..{min(current.m, current.n) - 1}")
    pivot = current[k + 1, k + 1]
    if pivot == 0:
        raise ZeroPivotError(k)
    op_matrix = Matrix.identity(current.m).with_entry(k + 1, k + 1, 1 / pivot)
    logger.debug(f"G_{2 * k + 1}: scale row {k + 1} by 1/({pivot})")
    return Step(2 * k + 1, op_matrix, op_matrix @ current)


def step_even(current: Matrix, k: int) -> Step:
    """
    Builds G_{2k+2}, which clears column k + 1 of A^(2k+1) except for its unit pivot, and applies it.

    The off-diagonal entries of column k + 1 of G_{2k+2} are -a^(2k+1)_{i,k+1}.

    Args:
        current (Matrix): The intermediate matrix A^(2k+1).
        k (int): The stage, 0 <= k < min(m, n).

    Returns:
        Step: The step q = 2k + 2; column k + 1 of its result is the standard basis column e_{k+1}.

    Raises:
        PivotNotNormalizedError: If a^(2k+1)_{k+1,k+1} is not 1.
    """
    if not 0 <= k < min(current.m, current.n):
        raise InvalidArgumentError(f"stage {k} is out of range 0..{min(current.m, current.n) - 1}")
    if current[k + 1, k + 1] != 1:
        raise PivotNotNormalizedError(f"entry ({k + 1}, {k + 1}) must be 1 before clearing its column, "
                                      f"got {current[k + 1, k + 1]}")
    op_matrix = Matrix.identity(current.m)
    for i in range(1, current.m + 1):
        if i != k + 1 and current[i, k + 1] != 0:
            op_matrix = op_matrix.with_entry(i, k + 1, -current[i, k + 1])
    logger.debug(f"G_{2 * k + 2}: clear column {k + 1}")
    return Step(2 * k + 2, op_matrix, op_matrix @ current)


def _rows_below_are_zero(current: Matrix, k: int) -> bool:
    return all(current[i, j] == 0 for i in range(k + 1, current.m + 1) for j in range(1, current.n + 1))


def eliminate(a: Matrix) -> Trace:
    """
    Runs the Gauss-Jordan procedure, alternating odd and even steps for k = 0, 1, ..., r - 1.

    Elimination halts at stage k when the pivot a^(2k)_{k+1,k+1} is zero and rows k + 1..m of A^(2k) are all zero,
    which means the rank is k; it also halts when k reaches min(m, n).

    Args:
        a (Matrix): A non-zero matrix.

    Returns:
        Trace: The 2r steps.

    Raises:
        ZeroMatrixError: If A is zero.
        ZeroPivotError: If a pivot vanishes while rows below it are still non-zero.
    """
    if a.is_zero():
        raise ZeroMatrixError()
    steps = []
    current = a
    k = 0
    while k < min(a.m, a.n):
        if current[k + 1, k + 1] == 0:
            if _rows_below_are_zero(current, k):
                break
            raise ZeroPivotError(k)
        odd = step_odd(current, k)
        even = step_even(odd.result, k)
        steps.extend([odd, even])
        current = even.result
        k += 1
    logger.debug(f"Eliminated a {a.m}x{a.n} matrix to rank {k} in {len(steps)} steps")
    return Trace(a, steps, k)


def gj_product(trace: Trace) -> Matrix:
    """
    The product G = G_{2r} G_{2r-1} ... G_1 of all operation matrices, so that G A = A^(2r).
    """
    product = Matrix.identity(trace.m)
    for step in trace.steps:
        product = step.op_matrix @ product
    return product


def inverse(a: Matrix) -> Matrix:
    """
    The inverse of a square, diagonally eliminable matrix as the product G of its operation matrices.

    Raises:
        NotSquareError: If A is not square.
        SingularMatrixError: If the rank of A is smaller than its side.
        ZeroPivotError: If A is not diagonally eliminable.
    """
    if not a.is_square:
        raise NotSquareError(f"cannot invert a non-square {a.m}x{a.n} matrix")
    try:
        trace = eliminate(a)
    except ZeroMatrixError:
        raise SingularMatrixError("the zero matrix is singular")
    if trace.rank < a.n:
        raise SingularMatrixError(f"the matrix is singular (rank {trace.rank} < {a.n})")
    return gj_product(trace)


def is_diagonally_eliminable(a: Matrix, r: Optional[int] = None) -> bool:
    """
    Checks whether A is diagonally eliminable up to r, i.e. whether m_1, ..., m_r are all non-zero.

    Args:
        a (Matrix): The matrix.
        r (Optional[int]): 1 <= r <= min(m, n). None means the rank of A.

    Returns:
        bool: True iff every leading principal minor of order 1..r is non-zero.
    """
    if r is None:
        r = rank_by_minors(a)
        if r == 0:
            raise ZeroMatrixError()
    if not 1 <= r <= min(a.m, a.n):
        raise InvalidArgumentError(f"order {r} is out of range 1..{min(a.m, a.n)}")
    return all(principal_minor(a, k) != 0 for k in range(1, r + 1))
