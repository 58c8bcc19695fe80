from fractions import Fraction
from typing import Iterator, List, NamedTuple, Optional

from gjx.closedform import formulas, logger
from gjx.engine.gauss_jordan import Trace, eliminate
from gjx.exceptions import ZeroPivotError
from gjx.numeric.helpers_numeric import principal_minor
from gjx.numeric.matrix import Matrix

INTERMEDIATE = "intermediate"
OPERATION = "operation"
PIVOT = "pivot"
PRODUCT = "product"


class Comparison(NamedTuple):
    """
    One engine value set against its closed-form prediction.

    `stage` is k for intermediate matrices A^(2k), pivots and pivot products, and q for operation matrices G_q.
    """
    category: str
    stage: int
    i: int
    j: int
    engine_value: Fraction
    formula_value: Fraction

    @property
    def match(self) -> bool:
        return self.engine_value == self.formula_value

    def describe(self) -> str:
        if self.category == OPERATION:
            where = f"G_{self.stage}"
        elif self.category == INTERMEDIATE:
            where = f"A^({2 * self.stage}) (k={self.stage})"
        elif self.category == PIVOT:
            where = f"pivot k={self.stage}"
        else:
            where = f"pivot product k={self.stage}"
        return (f"mismatch in {where} at ({self.i}, {self.j}): "
                f"engine {self.engine_value} != formula {self.formula_value}")


class VerifyReport:
    """
    Entrywise comparison of an elimination trace against the minor-quotient formulas.

    Attributes:
        input (Matrix): The verified matrix.
        rank (int): The rank reached by the elimination.
        trace (Trace): The engine trace that was checked.
        comparisons (List[Comparison]): Every entry of A^(2k) for 0 <= k < rank.
        op_comparisons (List[Comparison]): Every entry of G_q for 1 <= q <= 2 rank.
        pivot_comparisons (List[Comparison]): a^(2k)_{k+1,k+1} against m_{k+1} / m_k.
        product_checks (List[Comparison]): products of pivots against m_{k+1}.
    """

    def __init__(self, input_matrix: Matrix, trace: Trace):
        self.input = input_matrix
        self.trace = trace
        self.rank = trace.rank
        self.comparisons: List[Comparison] = []
        self.op_comparisons: List[Comparison] = []
        self.pivot_comparisons: List[Comparison] = []
        self.product_checks: List[Comparison] = []

    def records(self) -> Iterator[Comparison]:
        """All comparison records in report order."""
        yield from self.comparisons
        yield from self.op_comparisons
        yield from self.pivot_comparisons
        yield from self.product_checks

    @property
    def all_match(self) -> bool:
        return all(record.match for record in self.records())

    def mismatches(self) -> List[Comparison]:
        return [record for record in self.records() if not record.match]

    def first_mismatch(self) -> Optional[Comparison]:
        return next((record for record in self.records() if not record.match), None)

    def __len__(self) -> int:
        return sum(1 for _ in self.records())


def _compare_matrices(category: str, stage: int, engine: Matrix, formula: Matrix) -> List[Comparison]:
    return [Comparison(category, stage, i, j, value, formula[i, j]) for i, j, value in engine.entries()]


def verify_trace(a: Matrix) -> VerifyReport:
    """
    Eliminates A and compares every intermediate A^(2k), every operation matrix G_q, every pivot and every
    pivot product of the trace with the closed-form predictions built from minors of A.

    Args:
        a (Matrix): A matrix of rank >= 1 whose elimination needs no exchange (arrange it first otherwise).

    Returns:
        VerifyReport: The full comparison; `all_match` tells whether every prediction holds exactly.

    Raises:
        ZeroMatrixError: If A is zero.
        ZeroPivotError: If the elimination meets a zero pivot.
    """
    try:
        trace = eliminate(a)
    except ZeroPivotError as e:
        logger.error(f"Verification stopped at k={e.k}: {e}")
        raise
    report = VerifyReport(a, trace)
    for k in range(trace.rank):
        report.comparisons.extend(
            _compare_matrices(INTERMEDIATE, k, trace.intermediate(k), formulas.intermediate_formula(a, k)))
    for step in trace.steps:
        report.op_comparisons.extend(
            _compare_matrices(OPERATION, step.q, step.op_matrix, formulas.opmatrix_formula(a, step.q)))
    for k in range(trace.rank):
        report.pivot_comparisons.append(
            Comparison(PIVOT, k, k + 1, k + 1, trace.pivot(k), formulas.pivot_formula(a, k)))
        report.product_checks.append(
            Comparison(PRODUCT, k, k + 1, k + 1, formulas.pivot_product(trace, k), principal_minor(a, k + 1)))

    mismatches = report.mismatches()
    if mismatches:
        logger.warning(f"{len(mismatches)} of {len(report)} comparisons disagree; first: {mismatches[0].describe()}")
    else:
        logger.debug(f"All {len(report)} comparisons agree for a {a.m}x{a.n} matrix of rank {trace.rank}")
    return report
