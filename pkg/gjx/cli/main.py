"""Command-line entry point: `gjx eliminate|verify|arrange|invert|minor FILE [flags]` and `gjx fuzz [flags]`."""
import argparse
import logging
from typing import List, Optional, Sequence

from gjx import DEFAULT_COLS, DEFAULT_JOBS, DEFAULT_MAX_ABS, DEFAULT_ROWS, DEFAULT_SEED, DEFAULT_TRIALS, \
    FORMAT_JSON, FORMAT_PRETTY, __version__
from gjx.cli.commands import cmd_arrange, cmd_eliminate, cmd_invert, cmd_minor, cmd_verify
from gjx.cli.fuzz import cmd_fuzz


def _add_source(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("file", metavar="FILE", help="Matrix text file, or - for standard input.")


def _add_format(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--format", dest="output_format", choices=[FORMAT_PRETTY, FORMAT_JSON],
                        default=FORMAT_PRETTY, help="Output format (default: pretty).")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="gjx", description="Exact Gauss-Jordan elimination cross-verified against minor-quotient formulas.")
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    verbosity = parser.add_mutually_exclusive_group()
    verbosity.add_argument("-v", "--verbose", action="store_true", help="Log debug detail to stderr.")
    verbosity.add_argument("-q", "--quiet", action="store_true", help="Log warnings and errors only.")
    commands = parser.add_subparsers(dest="command", metavar="COMMAND", required=True)

    eliminate = commands.add_parser("eliminate", help="Print every operation matrix and intermediate matrix.")
    _add_source(eliminate)
    _add_format(eliminate)

    verify = commands.add_parser("verify", help="Check the elimination entrywise against the closed forms.")
    _add_source(verify)
    _add_format(verify)
    verify.add_argument("--arrange", action="store_true",
                        help="On a zero pivot, verify the properly arranged matrix instead of failing.")

    arrange = commands.add_parser("arrange", help="Properly arrange the matrix by row and column exchanges.")
    _add_source(arrange)
    _add_format(arrange)

    invert = commands.add_parser("invert", help="Print the inverse as the product of the operation matrices.")
    _add_source(invert)
    invert.add_argument("--arrange", action="store_true",
                        help="Arrange first, so matrices that are not diagonally eliminable can be inverted.")

    minor = commands.add_parser("minor", help="Print a minor of the matrix.")
    _add_source(minor)
    minor.add_argument("--rows", required=True, help="Comma-separated increasing 1-based row indices.")
    minor.add_argument("--cols", required=True, help="Comma-separated increasing 1-based column indices.")

    fuzz = commands.add_parser("fuzz", help="Run the seeded property harness on random integer matrices.")
    fuzz.add_argument("--trials", type=int, default=DEFAULT_TRIALS)
    fuzz.add_argument("--rows", type=int, default=DEFAULT_ROWS)
    fuzz.add_argument("--cols", type=int, default=DEFAULT_COLS)
    fuzz.add_argument("--max-abs", dest="max_abs", type=int, default=DEFAULT_MAX_ABS)
    fuzz.add_argument("--seed", type=int, default=DEFAULT_SEED)
    fuzz.add_argument("--max-rank", dest="max_rank", type=int, default=None,
                      help="Draw products of thin matrices so the rank is at most this value.")
    fuzz.add_argument("--jobs", type=int, default=DEFAULT_JOBS, help="Parallel trial workers (joblib n_jobs).")
    return parser


def _set_verbosity(verbose: bool, quiet: bool) -> None:
    if verbose:
        logging.getLogger().setLevel(logging.DEBUG)
    elif quiet:
        logging.getLogger().setLevel(logging.WARNING)


def main(argv: Optional[Sequence[str]] = None) -> int:
    """
    Parses the arguments and runs one command.

    Returns:
        int: The exit code: 0 success, 1 verification or singularity failure, 2 input error, 3 zero pivot.
    """
    parser = build_parser()
    try:
        args = parser.parse_args(list(argv) if argv is not None else None)
    except SystemExit as e:
        return int(e.code or 0)
    _set_verbosity(args.verbose, args.quiet)

    if args.command == "eliminate":
        return cmd_eliminate(args.file, args.output_format)
    if args.command == "verify":
        return cmd_verify(args.file, args.output_format, auto_arrange=args.arrange)
    if args.command == "arrange":
        return cmd_arrange(args.file, args.output_format)
    if args.command == "invert":
        return cmd_invert(args.file, auto_arrange=args.arrange)
    if args.command == "minor":
        return cmd_minor(args.file, args.rows, args.cols)
    return cmd_fuzz(args.trials, args.rows, args.cols, args.max_abs, args.seed, args.max_rank, args.jobs)


def run(argv: Optional[List[str]] = None) -> None:
    """Console-script entry point."""
    raise SystemExit(main(argv))


if __name__ == "__main__":
    run()
