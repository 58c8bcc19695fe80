import json
import re
import sys
from typing import Dict, List, Optional

from gjx.arrangement.arranger import ArrangeResult
from gjx.closedform.verification import VerifyReport
from gjx.engine.gauss_jordan import Trace
from gjx.exceptions import BadTokenError, EmptyInputError, InvalidArgumentError, RaggedRowsError, \
    ZeroDenominatorError
from gjx.numeric.matrix import Matrix
from gjx.numeric.rational import format_rational, parse_rational

STDIN = "-"
TOKEN = re.compile(r"\S+")


class MatrixDocument:
    """
    A matrix read from a file or from standard input.

    Attributes:
        source (str): The file path, or "-" for standard input.
        matrix (Matrix): The parsed matrix.
    """

    def __init__(self, source: str, matrix: Matrix):
        self.source = source
        self.matrix = matrix

    @classmethod
    def read(cls, source: str) -> 'MatrixDocument':
        """
        Reads and parses a matrix text file; "-" reads standard input.

        Raises:
            OSError: If the file cannot be read.
            MatrixParseError: If the text is not a valid matrix.
        """
        if source == STDIN:
            text = sys.stdin.read()
        else:
            with open(source, "r", encoding="utf-8") as f:
                text = f.read()
        return cls(source, parse_matrix(text))


def parse_matrix(text: str) -> Matrix:
    """
    Parses the matrix text format: one row per line, entries separated by whitespace.

    '#' starts a comment running to the end of the line; blank lines are ignored. Entries are integers, fractions
    "p/q" with q > 0, or finite decimals, each with an optional sign, converted exactly.

    Args:
        text (str): The UTF-8 text.

    Returns:
        Matrix: The parsed matrix.

    Raises:
        EmptyInputError: If no row remains.
        RaggedRowsError: If rows differ in length.
        BadTokenError: If an entry is malformed (with its line and column).
        ZeroDenominatorError: If a fraction has a zero denominator.
    """
    rows: List[list] = []
    width: Optional[int] = None
    for line_number, line in enumerate(text.splitlines(), start=1):
        content = line.split("#", 1)[0]
        row = []
        for match in TOKEN.finditer(content):
            token, column = match.group(), match.start() + 1
            try:
                row.append(parse_rational(token))
            except ZeroDivisionError:
                raise ZeroDenominatorError(line_number, column, token)
            except InvalidArgumentError:
                raise BadTokenError(line_number, column, token)
        if not row:
            continue
        if width is None:
            width = len(row)
        elif len(row) != width:
            raise RaggedRowsError(line_number, width, len(row))
        rows.append(row)
    if not rows:
        raise EmptyInputError()
    return Matrix(rows)


def render_matrix(matrix: Matrix) -> str:
    """The matrix text format: canonical rationals separated by one space, one newline-terminated row per line."""
    return "".join(" ".join(format_rational(value) for value in row) + "\n" for row in matrix.to_rows())


def render_table(matrix: Matrix, indent: str = "  ") -> List[str]:
    """Aligned table lines: columns right-justified to their widest cell and separated by two spaces."""
    cells = [[format_rational(value) for value in row] for row in matrix.to_rows()]
    widths = [max(len(row[j]) for row in cells) for j in range(matrix.n)]
    return [indent + "  ".join(cell.rjust(width) for cell, width in zip(row, widths)) for row in cells]


def grid(matrix: Matrix) -> List[List[str]]:
    return [[format_rational(value) for value in row] for row in matrix.to_rows()]


def verification_projection(report: VerifyReport) -> Dict:
    return {
        "allMatch": report.all_match,
        "intermediateEntries": len(report.comparisons),
        "operationEntries": len(report.op_comparisons),
        "pivots": len(report.pivot_comparisons),
        "products": len(report.product_checks),
        "mismatches": [
            {
                "category": record.category,
                "stage": record.stage,
                "i": record.i,
                "j": record.j,
                "engine": format_rational(record.engine_value),
                "formula": format_rational(record.formula_value),
            }
            for record in report.mismatches()
        ],
    }


def trace_document(trace: Trace, report: Optional[VerifyReport] = None) -> Dict:
    """
    The TraceDocument of an elimination: {"m", "n", "rank", "steps": [{"q", "kind", "G", "A"}], "verification"?}.
    """
    document = {
        "m": trace.m,
        "n": trace.n,
        "rank": trace.rank,
        "steps": [
            {"q": step.q, "kind": step.kind, "G": grid(step.op_matrix), "A": grid(step.result)}
            for step in trace.steps
        ],
    }
    if report is not None:
        document["verification"] = verification_projection(report)
    return document


def arrangement_document(result: ArrangeResult) -> Dict:
    return {
        "rowPerm": list(result.row_perm.mapping),
        "colPerm": list(result.col_perm.mapping),
        "swaps": [{"k": swap.k, "kind": swap.kind, "from": swap.source, "to": swap.target}
                  for swap in result.swap_log],
        "arranged": grid(result.arranged),
    }


def dump_json(document: Dict) -> str:
    return json.dumps(document, indent=2) + "\n"


def render_trace(trace: Trace) -> str:
    lines = [f"m={trace.m} n={trace.n} rank={trace.rank}"]
    for step in trace.steps:
        lines.append("")
        lines.append(f"step {step.q} ({step.kind}, k={step.k})")
        lines.append(f"G_{step.q}:")
        lines.extend(render_table(step.op_matrix))
        lines.append(f"A^({step.q}):")
        lines.extend(render_table(step.result))
    return "\n".join(lines) + "\n"


def render_arrangement(result: ArrangeResult) -> str:
    lines = [
        "row permutation: " + " ".join(str(value) for value in result.row_perm.mapping),
        "column permutation: " + " ".join(str(value) for value in result.col_perm.mapping),
    ]
    if result.swap_log:
        lines.append("swaps:")
        lines.extend(f"  k={swap.k} {swap.kind} {swap.source}<->{swap.target}" for swap in result.swap_log)
    else:
        lines.append("swaps: none")
    lines.append("arranged:")
    lines.extend(render_table(result.arranged))
    return "\n".join(lines) + "\n"


def render_verification(report: VerifyReport) -> str:
    header = f"m={report.input.m} n={report.input.n} rank={report.rank}"
    if report.all_match:
        return (f"verified {header}: {len(report.comparisons)} intermediate entries, "
                f"{len(report.op_comparisons)} operation-matrix entries, {len(report.pivot_comparisons)} pivots, "
                f"{len(report.product_checks)} pivot products\n")
    mismatches = report.mismatches()
    return f"{mismatches[0].describe()}\nFAILED: {len(mismatches)} of {len(report)} comparisons disagree\n"
