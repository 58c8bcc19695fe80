import sys
from typing import Callable, List, Optional, Tuple, Type

from gjx import EXIT_FAILURE, EXIT_INPUT_ERROR, EXIT_OK, EXIT_ZERO_PIVOT, FORMAT_JSON
from gjx.arrangement.arranger import arrange
from gjx.cli import logger
from gjx.cli.documents import MatrixDocument, arrangement_document, dump_json, render_arrangement, render_matrix, \
    render_trace, render_verification, trace_document
from gjx.closedform.verification import verify_trace
from gjx.engine.gauss_jordan import eliminate, inverse
from gjx.exceptions import GjxError, InvalidArgumentError, NotSquareError, SingularMatrixError, ZeroMatrixError, \
    ZeroPivotError
from gjx.numeric.helpers_numeric import minor
from gjx.numeric.rational import format_rational

Outcome = Tuple[int, str]

# Checked in order; the first matching class decides the exit code.
EXIT_CODES: List[Tuple[Type[BaseException], int]] = [
    (ZeroPivotError, EXIT_ZERO_PIVOT),
    (SingularMatrixError, EXIT_FAILURE),
    (ZeroMatrixError, EXIT_INPUT_ERROR),
    (InvalidArgumentError, EXIT_INPUT_ERROR),
    (OSError, EXIT_INPUT_ERROR),
    (UnicodeDecodeError, EXIT_INPUT_ERROR),
]


def _exit_code(error: BaseException, overrides: List[Tuple[Type[BaseException], int]]) -> int:
    for error_class, code in overrides + EXIT_CODES:
        if isinstance(error, error_class):
            return code
    return EXIT_FAILURE


def run_command(name: str, action: Callable[[], Outcome],
                overrides: Optional[List[Tuple[Type[BaseException], int]]] = None) -> int:
    """
    Runs a command body and writes its output to stdout only when it succeeds.

    Errors are logged and mapped to exit codes; nothing is written to stdout on an error path.

    Args:
        name (str): The command name, used in log messages.
        action (Callable[[], Outcome]): Returns the exit code and the text to print.
        overrides: Exception classes whose exit code differs for this command, checked first.

    Returns:
        int: The exit code.
    """
    try:
        code, text = action()
    except (GjxError, OSError, UnicodeDecodeError) as e:
        code = _exit_code(e, overrides or [])
        logger.error(f"{name}: {e}")
        return code
    sys.stdout.write(text)
    sys.stdout.flush()
    return code


def parse_index_list(text: str) -> List[int]:
    """Parses a comma-separated list of 1-based indices such as "1,2,4"."""
    try:
        return [int(item) for item in text.split(",")]
    except ValueError:
        raise InvalidArgumentError(f"{text!r} is not a comma-separated list of integers")


def cmd_eliminate(source: str, output_format: str) -> int:
    """Prints all 2r steps of the elimination of the matrix in `source`."""

    def action() -> Outcome:
        a = MatrixDocument.read(source).matrix
        trace = eliminate(a)
        logger.info(f"Eliminated {a.m}x{a.n} matrix: rank {trace.rank}, {len(trace.steps)} steps")
        if output_format == FORMAT_JSON:
            return EXIT_OK, dump_json(trace_document(trace))
        return EXIT_OK, render_trace(trace)

    return run_command("eliminate", action)


def cmd_verify(source: str, output_format: str, auto_arrange: bool = False) -> int:
    """
    Compares every engine value of the elimination with its minor-quotient prediction.

    Exit 0 when all comparisons agree, 1 otherwise. With `auto_arrange`, a zero pivot makes the command verify the
    arranged matrix instead of failing.
    """

    def action() -> Outcome:
        a = MatrixDocument.read(source).matrix
        try:
            report = verify_trace(a)
        except ZeroPivotError:
            if not auto_arrange:
                raise
            arranged = arrange(a)
            logger.info(f"Zero pivot met; verifying the arranged matrix ({len(arranged.swap_log)} exchanges)")
            report = verify_trace(arranged.arranged)
        code = EXIT_OK if report.all_match else EXIT_FAILURE
        if output_format == FORMAT_JSON:
            return code, dump_json(trace_document(report.trace, report))
        return code, render_verification(report)

    return run_command("verify", action)


def cmd_arrange(source: str, output_format: str) -> int:
    """Prints the row and column permutations, the swap log and the properly arranged matrix."""

    def action() -> Outcome:
        a = MatrixDocument.read(source).matrix
        result = arrange(a)
        logger.info(f"Arranged {a.m}x{a.n} matrix with {len(result.swap_log)} exchanges")
        if output_format == FORMAT_JSON:
            return EXIT_OK, dump_json(arrangement_document(result))
        return EXIT_OK, render_arrangement(result)

    return run_command("arrange", action)


def cmd_invert(source: str, auto_arrange: bool = False) -> int:
    """
    Prints the inverse G = G_{2n} ... G_1 in matrix text format.

    With `auto_arrange` the matrix is first properly arranged as P A Q, and the inverse is Q (P A Q)^-1 P.
    """

    def action() -> Outcome:
        a = MatrixDocument.read(source).matrix
        if not a.is_square:
            raise NotSquareError(f"cannot invert a non-square {a.m}x{a.n} matrix")
        if not auto_arrange:
            return EXIT_OK, render_matrix(inverse(a))
        if a.is_zero():
            raise SingularMatrixError("the zero matrix is singular")
        result = arrange(a)
        q, p = result.col_perm.column_matrix(), result.row_perm.row_matrix()
        return EXIT_OK, render_matrix(q @ inverse(result.arranged) @ p)

    return run_command("invert", action, overrides=[(NotSquareError, EXIT_FAILURE)])


def cmd_minor(source: str, rows: str, cols: str) -> int:
    """Prints the minor of the rows and columns given as comma-separated 1-based lists."""

    def action() -> Outcome:
        a = MatrixDocument.read(source).matrix
        value = minor(a, parse_index_list(rows), parse_index_list(cols))
        return EXIT_OK, format_rational(value) + "\n"

    return run_command("minor", action)
