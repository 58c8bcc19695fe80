"""
Explicit minor-quotient expressions for the pivots, the intermediate matrices A^(2k) and the operation matrices G_q
of Gauss-Jordan elimination.

Every value here is computed from minors of the original matrix A only, never from an intermediate matrix.
"""
from fractions import Fraction
from typing import List

from gjx.engine.gauss_jordan import Trace
from gjx.exceptions import FormulaDivisionError, IndexOutOfRangeError, InvalidArgumentError
from gjx.numeric.helpers_numeric import minor, principal_minor
from gjx.numeric.matrix import Matrix


def _nonzero_principal_minor(a: Matrix, k: int) -> Fraction:
    m_k = principal_minor(a, k)
    if m_k == 0:
        raise FormulaDivisionError(f"principal minor m_{k} vanishes")
    return m_k


def _check_stage(a: Matrix, k: int, upper: int) -> None:
    if not 0 <= k <= upper:
        raise InvalidArgumentError(f"stage {k} is out of range 0..{upper}")


def pivot_formula(a: Matrix, k: int) -> Fraction:
    """
    The pivot a^(2k)_{k+1,k+1} = m_{k+1} / m_k.

    Args:
        a (Matrix): The original matrix.
        k (int): The stage, 0 <= k < min(m, n).

    Raises:
        FormulaDivisionError: If m_k = 0.
    """
    _check_stage(a, k, min(a.m, a.n) - 1)
    m_k = _nonzero_principal_minor(a, k)
    return principal_minor(a, k + 1) / m_k


def entry_formula(a: Matrix, k: int, i: int, j: int) -> Fraction:
    """
    The predicted entry a^(2k)_{ij} of the intermediate matrix A^(2k).

    For j <= k the entry belongs to the identity block (rows 1..k) or the zero block below it. For j >= k + 1:

    - rows 1 <= i <= k:      (-1)^(k+i) m^{1..k}_{1..i-1,i+1..k,j} / m_k
    - rows k + 1 <= i <= m:  m^{1..k,i}_{1..k,j} / m_k

    Args:
        a (Matrix): The original matrix.
        k (int): The stage, 0 <= k <= min(m, n).
        i (int): 1-based row.
        j (int): 1-based column.

    Raises:
        FormulaDivisionError: If m_k = 0 and the entry needs a quotient.
        IndexOutOfRangeError: If (i, j) is outside A.
    """
    _check_stage(a, k, min(a.m, a.n))
    if not (1 <= i <= a.m and 1 <= j <= a.n):
        raise IndexOutOfRangeError(f"position ({i}, {j}) is outside a {a.m}x{a.n} matrix")
    if j <= k:
        return Fraction(int(i == j))
    m_k = _nonzero_principal_minor(a, k)
    leading = list(range(1, k + 1))
    if i <= k:
        cols = [c for c in leading if c != i] + [j]
        value = minor(a, leading, cols) / m_k
        return value if (k + i) % 2 == 0 else -value
    return minor(a, leading + [i], leading + [j]) / m_k


def intermediate_formula(a: Matrix, k: int) -> Matrix:
    """
    The predicted intermediate matrix A^(2k), entry by entry from `entry_formula`; k = 0 gives A itself.
    """
    return Matrix([[entry_formula(a, k, i, j) for j in range(1, a.n + 1)] for i in range(1, a.m + 1)])


def opmatrix_formula(a: Matrix, q: int) -> Matrix:
    """
    The predicted m x m operation matrix G_q.

    Odd order q = 2k + 1 is the identity except g_{k+1,k+1} = m_k / m_{k+1}. Even order q = 2k + 2 is the identity
    except in column k + 1:

    - rows 1 <= i <= k:      (-1)^(k+i+1) m^{1..k}_{1..i-1,i+1..k+1} / m_k
    - rows k + 1 < i <= m:   -m^{1..k,i}_{1..k,k+1} / m_k

    The diagonal entry (k + 1, k + 1) is 1.

    Args:
        a (Matrix): The original matrix.
        q (int): The step ordinal, 1 <= q <= 2 min(m, n).

    Raises:
        FormulaDivisionError: If a principal minor needed as a denominator vanishes.
    """
    if not 1 <= q <= 2 * min(a.m, a.n):
        raise InvalidArgumentError(f"step ordinal {q} is out of range 1..{2 * min(a.m, a.n)}")
    k = (q - 1) // 2
    rows: List[List[Fraction]] = Matrix.identity(a.m).to_rows()
    if q % 2 == 1:
        m_k = principal_minor(a, k)
        m_next = _nonzero_principal_minor(a, k + 1)
        rows[k][k] = m_k / m_next
        return Matrix(rows)

    m_k = _nonzero_principal_minor(a, k)
    leading = list(range(1, k + 1))
    for i in range(1, a.m + 1):
        if i == k + 1:
            continue
        if i <= k:
            cols = [c for c in leading if c != i] + [k + 1]
            value = minor(a, leading, cols) / m_k
            rows[i - 1][k] = value if (k + i + 1) % 2 == 0 else -value
        else:
            rows[i - 1][k] = -minor(a, leading + [i], leading + [k + 1]) / m_k
    return Matrix(rows)


def lemma_product_check(a: Matrix, k: int, trace: Trace) -> bool:
    """
    Checks m_{k+1} = a_11 a^(2)_22 ... a^(2k-2)_kk a^(2k)_{k+1,k+1}, reading the pivots from the trace.

    Args:
        a (Matrix): The original matrix.
        k (int): The stage, 0 <= k < trace.rank.
        trace (Trace): The elimination trace of A.

    Returns:
        bool: True iff the product of the pre-scaling pivots equals the principal minor m_{k+1}.
    """
    if not 0 <= k < trace.rank:
        raise InvalidArgumentError(f"stage {k} is out of range 0..{trace.rank - 1}")
    return pivot_product(trace, k) == principal_minor(a, k + 1)


def pivot_product(trace: Trace, k: int) -> Fraction:
    """The product of the pivots a^(2s)_{s+1,s+1} for s = 0..k."""
    product = Fraction(1)
    for stage in range(k + 1):
        product *= trace.pivot(stage)
    return product
