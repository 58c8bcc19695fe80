from typing import List, NamedTuple

from gjx import ARRANGEMENT_CHECK_LIMIT, SWAP_COL, SWAP_ROW
from gjx.arrangement import logger
from gjx.arrangement.permutation import Permutation
from gjx.engine.gauss_jordan import Trace, step_even, step_odd
from gjx.exceptions import OracleLimitError, ZeroMatrixError
from gjx.numeric.helpers_numeric import minor, principal_minor
from gjx.numeric.matrix import Matrix


class Swap(NamedTuple):
    """A row or column exchange performed at stage k of the arrangement."""
    k: int
    kind: str
    source: int
    target: int


class ArrangeResult:
    """
    Outcome of `arrange`.

    Attributes:
        row_perm (Permutation): Row permutation of size m.
        col_perm (Permutation): Column permutation of size n.
        arranged (Matrix): P A Q, with P and Q the matrices of the two permutations.
        swap_log (List[Swap]): The exchanges, in the order they were made.
    """

    def __init__(self, row_perm: Permutation, col_perm: Permutation, arranged: Matrix, swap_log: List[Swap]):
        self.row_perm = row_perm
        self.col_perm = col_perm
        self.arranged = arranged
        self.swap_log = swap_log

    def is_identity(self) -> bool:
        return self.row_perm.is_identity() and self.col_perm.is_identity()


def is_properly_arranged(a: Matrix, limit: int = ARRANGEMENT_CHECK_LIMIT) -> bool:
    """
    Checks whether A is properly arranged: |a_ij| <= |a_11| for every entry, and for every 1 <= k < min(m, n)
    each bordered minor |m^{1..k,i}_{1..k,j}| with i, j >= k + 1 is at most |m_{k+1}|.

    Every bordered minor is enumerated, hence the size limit.

    Args:
        a (Matrix): A non-zero matrix.
        limit (int): The largest min(m, n) accepted.

    Raises:
        ZeroMatrixError: If A is zero.
        OracleLimitError: If min(m, n) exceeds `limit`.
    """
    if a.is_zero():
        raise ZeroMatrixError()
    size = min(a.m, a.n)
    if size > limit:
        raise OracleLimitError(f"the arrangement check is limited to min(m, n) <= {limit}, got {size}")
    leader = abs(a[1, 1])
    if any(abs(value) > leader for _, _, value in a.entries()):
        return False
    for k in range(1, size):
        bound = abs(principal_minor(a, k + 1))
        leading = list(range(1, k + 1))
        for i in range(k + 1, a.m + 1):
            for j in range(k + 1, a.n + 1):
                if abs(minor(a, leading + [i], leading + [j])) > bound:
                    logger.debug(f"Bordered minor at k={k}, (i, j)=({i}, {j}) exceeds |m_{k + 1}| = {bound}")
                    return False
    return True


def arrange(a: Matrix) -> ArrangeResult:
    """
    Properly arranges A by greedy complete pivoting.

    At each stage k the engine state A^(2k) of the working matrix is searched for the entry of largest absolute
    value in the block i, j >= k + 1 (smallest i, then smallest j, on ties). Its row and column are exchanged
    into position k + 1. Because the block entries of A^(2k) are m^{1..k,i}_{1..k,j} / m_k, this maximises the
    bordered minors. The search stops when the block is zero.

    Args:
        a (Matrix): A non-zero matrix.

    Returns:
        ArrangeResult: The permutations, the arranged matrix and the swap log; deterministic in A.

    Raises:
        ZeroMatrixError: If A is zero.
    """
    if a.is_zero():
        raise ZeroMatrixError()
    working, state = a, a
    row_perm, col_perm = Permutation.identity(a.m), Permutation.identity(a.n)
    swap_log: List[Swap] = []
    for k in range(min(a.m, a.n)):
        i, j, value = state.max_abs_in_block(k + 1, k + 1)
        if value == 0:
            break
        if i != k + 1:
            working, state = working.swap_rows(k + 1, i), state.swap_rows(k + 1, i)
            row_perm = row_perm.swap(k + 1, i)
            swap_log.append(Swap(k, SWAP_ROW, k + 1, i))
            logger.debug(f"k={k}: exchange rows {k + 1} and {i}")
        if j != k + 1:
            working, state = working.swap_columns(k + 1, j), state.swap_columns(k + 1, j)
            col_perm = col_perm.swap(k + 1, j)
            swap_log.append(Swap(k, SWAP_COL, k + 1, j))
            logger.debug(f"k={k}: exchange columns {k + 1} and {j}")
        state = step_even(step_odd(state, k).result, k).result
    logger.debug(f"Arranged a {a.m}x{a.n} matrix with {len(swap_log)} exchanges")
    return ArrangeResult(row_perm, col_perm, working, swap_log)


def pivot_dominance_check(trace: Trace) -> bool:
    """
    Checks that every pivot a^(2k)_{k+1,k+1}, 0 <= k < r, has the largest absolute value of the block
    k + 1 <= i <= m, k + 1 <= j <= n of A^(2k).
    """
    for k in range(trace.rank):
        state = trace.intermediate(k)
        _, _, largest = state.max_abs_in_block(k + 1, k + 1)
        if abs(trace.pivot(k)) < abs(largest):
            logger.debug(f"Pivot {trace.pivot(k)} at k={k} is dominated by {largest}")
            return False
    return True
