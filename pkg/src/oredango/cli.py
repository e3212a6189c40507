"""Command-line front end.

Subcommands: validate, check, solve, another, lp, reduce, and
verify-reduction.  Results go to stdout (or the file named by `-o`);
diagnostics and progress notes go to stderr.  Exit codes: 0 for success,
a found solution, or a passed verification; 1 for unsatisfiable boards,
rule violations, exhausted solution sets, or failed verification; 2 for
unusable input or bad usage.
"""

from __future__ import annotations

import argparse
import sys
import time
from pathlib import Path

from . import core, ilp, reduction, solver, textio


class _Fail(Exception):
    def __init__(self, code: int, *messages: str):
        super().__init__(messages[0] if messages else "")
        self.code = code
        self.messages = messages


def _read(path: str) -> str:
    try:
        return Path(path).read_text()
    except OSError as err:
        raise _Fail(2, f"cannot read {path}: {err}") from err


def _diagnostic_lines(path: str, err: textio.ParseError) -> list[str]:
    return [f"{path}:{d.line}:{d.column}: {d.message}"
            for d in err.diagnostics]


def _load_board(path: str) -> core.Board:
    try:
        return textio.parse_board(_read(path))
    except textio.ParseError as err:
        raise _Fail(1 if err.structural else 2,
                    *_diagnostic_lines(path, err)) from err


def _load_coloring(path: str, board: core.Board) -> core.Coloring:
    try:
        return textio.parse_coloring(_read(path), board)
    except textio.ParseError as err:
        raise _Fail(2, *_diagnostic_lines(path, err)) from err


def _load_instance(path: str) -> reduction.OneInThreeInstance:
    try:
        return textio.parse_one_in_three(_read(path))
    except textio.ParseError as err:
        raise _Fail(2, *_diagnostic_lines(path, err)) from err


def _emit(text: str, output: str | None) -> None:
    if output is None:
        sys.stdout.write(text)
    else:
        try:
            Path(output).write_text(text)
        except OSError as err:
            raise _Fail(2, f"cannot write {output}: {err}") from err


def _checked_limit(limit: int) -> int:
    if limit < 1:
        raise _Fail(2, "--limit must be at least 1")
    return limit


def _cmd_validate(args: argparse.Namespace) -> int:
    board = _load_board(args.board)
    print(f"OK rows={board.rows} cols={board.cols} "
          f"circles={len(board.circles)} skewers={len(board.skewers)}")
    return 0


def _cmd_check(args: argparse.Namespace) -> int:
    board = _load_board(args.board)
    coloring = _load_coloring(args.solution, board)
    report = core.check_coloring(board, coloring)
    for violation in report:
        print(violation.describe())
    return 0 if report.ok else 1


def _cmd_solve(args: argparse.Namespace) -> int:
    board = _load_board(args.board)
    if args.count:
        outcome = solver.enumerate(board, _checked_limit(args.limit))
        if outcome.status is solver.SolveStatus.CAP_REACHED:
            print(f">={args.limit}")
        else:
            print(len(outcome.solutions))
        return 0 if outcome.solutions else 1
    if args.all:
        outcome = solver.enumerate(board, _checked_limit(args.limit))
        if outcome.status is solver.SolveStatus.CAP_REACHED:
            print(f"stopped at --limit {args.limit}", file=sys.stderr)
        if not outcome.solutions:
            print("UNSAT")
            return 1
        grids = [textio.write_coloring(c, board) for c in outcome.solutions]
        sys.stdout.write("\n".join(grids))
        return 0
    outcome = solver.solve(board)
    if not outcome.solutions:
        print("UNSAT")
        return 1
    sys.stdout.write(textio.write_coloring(outcome.solutions[0], board))
    return 0


def _cmd_another(args: argparse.Namespace) -> int:
    board = _load_board(args.board)
    known = [_load_coloring(path, board) for path in args.solutions]
    try:
        extra = solver.another_solution(board, known)
    except ValueError as err:
        raise _Fail(2, str(err)) from err
    if extra is None:
        print("NONE")
        return 1
    sys.stdout.write(textio.write_coloring(extra, board))
    return 0


def _cmd_lp(args: argparse.Namespace) -> int:
    board = _load_board(args.board)
    _emit(ilp.export_lp(ilp.build_model(board)), args.output)
    return 0


def _cmd_reduce(args: argparse.Namespace) -> int:
    instance = _load_instance(args.cnf)
    try:
        reduced = reduction.reduce(instance)
    except reduction.ReductionError as err:
        raise _Fail(2, str(err)) from err
    _emit(textio.write_board(reduced.board), args.output)
    if args.map:
        try:
            Path(args.map).write_text(
                reduction.format_reduction_map(reduced))
        except OSError as err:
            raise _Fail(2, f"cannot write {args.map}: {err}") from err
    return 0


def _cmd_verify_reduction(args: argparse.Namespace) -> int:
    instance = _load_instance(args.cnf)
    try:
        result = reduction.verify_reduction(instance)
    except reduction.ReductionError as err:
        raise _Fail(2, str(err)) from err
    word = "PASS" if result.ok else "FAIL"
    print(f"{word} puzzle={result.puzzle_solutions} "
          f"assignments={result.assignments}")
    for problem in result.problems:
        print(problem, file=sys.stderr)
    return 0 if result.ok else 1


def _build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--time", action="store_true",
                        help="report wall-clock milliseconds on stderr")

    parser = argparse.ArgumentParser(
        prog="oredango",
        description="Rule checker, solver, LP exporter, and 1-in-3 "
                    "satisfiability reducer for the Oredango puzzle.")
    sub = parser.add_subparsers(dest="command", required=True,
                                metavar="COMMAND")

    p = sub.add_parser("validate", parents=[common],
                       help="parse a board file and confirm its structure")
    p.add_argument("board")
    p.set_defaults(handler=_cmd_validate)

    p = sub.add_parser("check", parents=[common],
                       help="list every rule violation of a coloring")
    p.add_argument("board")
    p.add_argument("solution")
    p.set_defaults(handler=_cmd_check)

    p = sub.add_parser("solve", parents=[common],
                       help="solve a board, or count/list its solutions")
    p.add_argument("board")
    group = p.add_mutually_exclusive_group()
    group.add_argument("--all", action="store_true",
                       help="print every solution up to --limit")
    group.add_argument("--count", action="store_true",
                       help="print the number of solutions up to --limit")
    p.add_argument("--limit", type=int, default=10000, metavar="K",
                   help="solution cap for --all/--count (default 10000)")
    p.set_defaults(handler=_cmd_solve)

    p = sub.add_parser("another", parents=[common],
                       help="find a solution besides the given ones")
    p.add_argument("board")
    p.add_argument("solutions", nargs="+")
    p.set_defaults(handler=_cmd_another)

    p = sub.add_parser("lp", parents=[common],
                       help="export the board's 0-1 model as LP text")
    p.add_argument("board")
    p.add_argument("-o", "--output", metavar="PATH")
    p.set_defaults(handler=_cmd_lp)

    p = sub.add_parser("reduce", parents=[common],
                       help="translate a 1-in-3 instance into a board")
    p.add_argument("cnf")
    p.add_argument("-o", "--output", metavar="PATH")
    p.add_argument("--map", metavar="PATH",
                   help="also write the literal/readout cell map")
    p.set_defaults(handler=_cmd_reduce)

    p = sub.add_parser("verify-reduction", parents=[common],
                       help="cross-check a small instance against its board")
    p.add_argument("cnf")
    p.set_defaults(handler=_cmd_verify_reduction)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else 2
    start = time.perf_counter()
    try:
        code = args.handler(args)
    except _Fail as fail:
        for line in fail.messages:
            print(line, file=sys.stderr)
        code = fail.code
    finally:
        if getattr(args, "time", False):
            elapsed = (time.perf_counter() - start) * 1000.0
            print(f"time_ms={elapsed:.3f}", file=sys.stderr)
    return code


if __name__ == "__main__":
    sys.exit(main())
