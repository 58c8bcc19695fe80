"""
Seeded property harness.

Matrices are drawn with numpy's PCG64 generator (`numpy.random.default_rng(seed)`), entries uniform in
[-max_abs, max_abs]. With `max_rank` set, a matrix is the product of an m x R and an R x n draw, so its rank is at
most R. Every matrix is drawn in the parent process in trial order before any trial runs, so the report does not
depend on the number of jobs.
"""
import sys
from typing import List, NamedTuple, Optional

import numpy as np
from joblib import Parallel, delayed
from tqdm import tqdm

from gjx import ARRANGEMENT_CHECK_LIMIT, EXIT_FAILURE, EXIT_INPUT_ERROR, EXIT_OK, RANK_ORACLE_LIMIT
from gjx.arrangement.arranger import arrange, is_properly_arranged, pivot_dominance_check
from gjx.cli import logger
from gjx.cli.documents import render_matrix
from gjx.closedform.formulas import lemma_product_check
from gjx.closedform.verification import verify_trace
from gjx.exceptions import InvalidArgumentError, ZeroPivotError
from gjx.numeric.helpers_numeric import rank_by_minors
from gjx.numeric.matrix import Matrix

PASSED = "passed"
SKIPPED = "skipped"
FAILED = "failed"


class TrialOutcome(NamedTuple):
    index: int
    status: str
    note: str
    matrix: Matrix


def validate_fuzz_arguments(trials: int, rows: int, cols: int, max_abs: int, max_rank: Optional[int],
                            jobs: int) -> None:
    """
    Raises:
        InvalidArgumentError: If any fuzz parameter is out of range.
    """
    if trials < 1:
        raise InvalidArgumentError(f"trials must be >= 1, got {trials}")
    if rows < 1 or cols < 1:
        raise InvalidArgumentError(f"the shape must be at least 1x1, got {rows}x{cols}")
    if max_abs < 0:
        raise InvalidArgumentError(f"max-abs must be >= 0, got {max_abs}")
    if max_rank is not None and max_rank < 1:
        raise InvalidArgumentError(f"max-rank must be >= 1, got {max_rank}")
    if jobs == 0:
        raise InvalidArgumentError("jobs must be non-zero")


def draw_matrix(rng: np.random.Generator, rows: int, cols: int, max_abs: int,
                max_rank: Optional[int] = None) -> Matrix:
    """Draws one integer matrix; with `max_rank` it is a product of two thin draws."""
    if max_rank is None:
        return Matrix(rng.integers(-max_abs, max_abs, size=(rows, cols), endpoint=True).tolist())
    left = Matrix(rng.integers(-max_abs, max_abs, size=(rows, max_rank), endpoint=True).tolist())
    right = Matrix(rng.integers(-max_abs, max_abs, size=(max_rank, cols), endpoint=True).tolist())
    return left @ right


def draw_matrices(trials: int, rows: int, cols: int, max_abs: int, seed: int,
                  max_rank: Optional[int] = None) -> List[Matrix]:
    rng = np.random.default_rng(seed)
    return [draw_matrix(rng, rows, cols, max_abs, max_rank) for _ in range(trials)]


def check_matrix(index: int, a: Matrix) -> TrialOutcome:
    """
    Arranges A and checks, on the arranged matrix, the closed-form verification, pivot dominance, the pivot
    product identity, rank agreement with the minor oracle, and proper arrangement.
    """
    if a.is_zero():
        return TrialOutcome(index, SKIPPED, "rank 0", a)
    result = arrange(a)
    try:
        report = verify_trace(result.arranged)
    except ZeroPivotError as e:
        return TrialOutcome(index, FAILED, f"zero pivot after arrangement at k={e.k}", a)
    trace = report.trace
    if not report.all_match:
        return TrialOutcome(index, FAILED, report.first_mismatch().describe(), a)
    if not pivot_dominance_check(trace):
        return TrialOutcome(index, FAILED, "a pivot is not dominant in its block", a)
    for k in range(trace.rank):
        if not lemma_product_check(result.arranged, k, trace):
            return TrialOutcome(index, FAILED, f"pivot product differs from m_{k + 1}", a)
    size = min(a.m, a.n)
    if size <= RANK_ORACLE_LIMIT:
        oracle_rank = rank_by_minors(a)
        if trace.rank != oracle_rank:
            return TrialOutcome(index, FAILED, f"engine rank {trace.rank} != minor rank {oracle_rank}", a)
    if size <= ARRANGEMENT_CHECK_LIMIT and not is_properly_arranged(result.arranged):
        return TrialOutcome(index, FAILED, "arranged matrix is not properly arranged", a)
    return TrialOutcome(index, PASSED, "", a)


def fuzz_report(trials: int, rows: int, cols: int, max_abs: int, seed: int, max_rank: Optional[int] = None,
                jobs: int = 1) -> List[TrialOutcome]:
    """Runs every trial and returns the outcomes in trial order."""
    validate_fuzz_arguments(trials, rows, cols, max_abs, max_rank, jobs)
    matrices = draw_matrices(trials, rows, cols, max_abs, seed, max_rank)
    # Outcomes arrive in trial order, each once its trial has finished
    results = Parallel(n_jobs=jobs, return_as="generator")(
        delayed(check_matrix)(index, a) for index, a in enumerate(matrices, start=1))
    return list(tqdm(results, total=trials, desc="fuzz", file=sys.stderr, disable=None, leave=False))


def render_fuzz(outcomes: List[TrialOutcome], header: str) -> str:
    lines = [header]
    for outcome in outcomes:
        if outcome.status == SKIPPED:
            lines.append(f"trial {outcome.index}: skipped ({outcome.note})")
        elif outcome.status == FAILED:
            lines.append(f"trial {outcome.index}: FAILED ({outcome.note})")
            lines.append(render_matrix(outcome.matrix).rstrip("\n"))
    counts = {status: sum(1 for outcome in outcomes if outcome.status == status)
              for status in (PASSED, SKIPPED, FAILED)}
    lines.append(f"passed={counts[PASSED]} skipped={counts[SKIPPED]} failed={counts[FAILED]}")
    return "\n".join(lines) + "\n"


def cmd_fuzz(trials: int, rows: int, cols: int, max_abs: int, seed: int, max_rank: Optional[int] = None,
             jobs: int = 1) -> int:
    """
    Runs the seeded property harness and prints its report; the same arguments always print the same bytes.

    Returns:
        int: 0 iff no trial failed, 1 otherwise, 2 on invalid arguments.
    """
    try:
        outcomes = fuzz_report(trials, rows, cols, max_abs, seed, max_rank, jobs)
    except InvalidArgumentError as e:
        logger.error(f"fuzz: {e}")
        return EXIT_INPUT_ERROR
    header = f"fuzz: trials={trials} shape={rows}x{cols} max-abs={max_abs} seed={seed}"
    if max_rank is not None:
        header += f" max-rank={max_rank}"
    failed = sum(1 for outcome in outcomes if outcome.status == FAILED)
    logger.info(f"Fuzz finished: {trials} trials, {failed} failed")
    sys.stdout.write(render_fuzz(outcomes, header))
    sys.stdout.flush()
    return EXIT_FAILURE if failed else EXIT_OK
