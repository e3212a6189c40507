"""Plain-text formats for boards, colorings, and 1-in-3 instances.

Board files (`.odg`) are keyword lines: `rows` and `cols` headers first,
then `circle <row> <col> [clue]` declarations and
`skewer <r1> <c1> <r2> <c2> ...` paths over declared circles.  Coloring
files (`.sol`) are character grids over `.` (no circle), `B`, and `W`.
Instance files (`.c13`) start with `p 1in3 <nvars> <nclauses>` and list
each clause as three nonzero integers closed by `0`.

All three readers skip blank lines and `#` comment lines, tolerate
surplus whitespace and CRLF endings, and report every diagnostic with a
1-based line and column.  Writers emit canonical LF text that reparses to
an equal value.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterator

from .core import (BLACK, WHITE, Board, BoardError, Coloring, ColoringError,
                   Coord, build_board)
from .reduction import OneInThreeInstance, one_in_three

_TOKEN = re.compile(r"\S+")


@dataclass(frozen=True)
class ParseDiagnostic:
    """One reader complaint; `structural` marks well-formed text that
    breaks a board rule rather than the grammar."""

    line: int
    column: int
    message: str
    structural: bool = False


class ParseError(ValueError):
    def __init__(self, diagnostics):
        self.diagnostics = tuple(diagnostics)
        parts = [f"line {d.line}: {d.message}" for d in self.diagnostics[:3]]
        if len(self.diagnostics) > 3:
            parts.append(f"(+{len(self.diagnostics) - 3} more)")
        super().__init__("; ".join(parts))

    @property
    def structural(self) -> bool:
        return bool(self.diagnostics) and all(d.structural
                                              for d in self.diagnostics)


def _significant(text: str) -> Iterator[tuple[int, str]]:
    for lineno, raw in enumerate(text.splitlines(), start=1):
        stripped = raw.strip()
        if not stripped or stripped.startswith("#"):
            continue
        yield lineno, raw


def _tokens(raw: str) -> list[tuple[str, int]]:
    return [(m.group(), m.start() + 1) for m in _TOKEN.finditer(raw)]


def _as_int(token: str) -> int | None:
    try:
        return int(token)
    except ValueError:
        return None


def parse_board(text: str) -> Board:
    """Read a board file; raises ParseError carrying all diagnostics."""
    diags: list[ParseDiagnostic] = []
    headers: dict[str, int] = {}
    pending = ["rows", "cols"]
    circles: list[tuple] = []
    circle_line: dict[Coord, int] = {}
    declared: set[Coord] = set()
    skewers: list[list[Coord]] = []
    skewer_line: list[int] = []

    for lineno, raw in _significant(text):
        tokens = _tokens(raw)
        keyword, kcol = tokens[0]
        if pending:
            want = pending[0]
            if keyword != want:
                diags.append(ParseDiagnostic(
                    lineno, kcol, f"expected `{want} <count>` header"))
                raise ParseError(diags)
            count = _as_int(tokens[1][0]) if len(tokens) == 2 else None
            if count is None:
                diags.append(ParseDiagnostic(
                    lineno, kcol, f"`{want}` header takes one integer"))
                raise ParseError(diags)
            headers[want] = count
            pending.pop(0)
            continue

        if keyword == "circle":
            if len(tokens) not in (3, 4):
                diags.append(ParseDiagnostic(
                    lineno, kcol, "circle takes `circle <row> <col> [clue]`"))
                continue
            values = []
            bad = False
            for token, column in tokens[1:]:
                value = _as_int(token)
                if value is None:
                    diags.append(ParseDiagnostic(
                        lineno, column, f"not an integer: `{token}`"))
                    bad = True
                values.append(value)
            if bad:
                continue
            coord = (values[0], values[1])
            if coord in declared:
                diags.append(ParseDiagnostic(
                    lineno, kcol, f"circle {coord} already declared"))
                continue
            declared.add(coord)
            circle_line[coord] = lineno
            circles.append(tuple(values))
        elif keyword == "skewer":
            pairs = tokens[1:]
            if len(pairs) < 4 or len(pairs) % 2:
                diags.append(ParseDiagnostic(
                    lineno, kcol,
                    "skewer takes two or more `<row> <col>` pairs"))
                continue
            path: list[Coord] = []
            bad = False
            for k in range(0, len(pairs), 2):
                row = _as_int(pairs[k][0])
                col = _as_int(pairs[k + 1][0])
                if row is None or col is None:
                    token, column = pairs[k] if row is None else pairs[k + 1]
                    diags.append(ParseDiagnostic(
                        lineno, column, f"not an integer: `{token}`"))
                    bad = True
                    continue
                coord = (row, col)
                if coord not in declared:
                    diags.append(ParseDiagnostic(
                        lineno, pairs[k][1],
                        f"skewer visits undeclared circle {coord}"))
                    bad = True
                path.append(coord)
            if bad:
                continue
            skewers.append(path)
            skewer_line.append(lineno)
        elif keyword in ("rows", "cols"):
            diags.append(ParseDiagnostic(
                lineno, kcol, f"duplicate `{keyword}` header"))
        else:
            diags.append(ParseDiagnostic(
                lineno, kcol, f"unknown directive `{keyword}`"))

    if pending:
        diags.append(ParseDiagnostic(
            0, 0, f"missing `{pending[0]}` header"))
    if diags:
        raise ParseError(diags)

    try:
        return build_board(headers["rows"], headers["cols"], circles, skewers)
    except BoardError as err:
        line = 0
        if err.skewer is not None and 1 <= err.skewer <= len(skewer_line):
            line = skewer_line[err.skewer - 1]
        elif err.coord is not None and err.coord in circle_line:
            line = circle_line[err.coord]
        raise ParseError([ParseDiagnostic(line, 0, str(err),
                                          structural=True)]) from err


def write_board(board: Board) -> str:
    """Canonical board text: headers, circles row-major, then the
    multi-circle skewers in stored order."""
    lines = [f"rows {board.rows}", f"cols {board.cols}"]
    for coord in board.circle_coords():
        clue = board.circles[coord].clue
        suffix = "" if clue is None else f" {clue}"
        lines.append(f"circle {coord[0]} {coord[1]}{suffix}")
    for skewer in board.skewers:
        if skewer.size >= 2:
            flat = " ".join(f"{r} {c}" for r, c in skewer.path)
            lines.append(f"skewer {flat}")
    return "\n".join(lines) + "\n"


def parse_coloring(text: str, board: Board) -> Coloring:
    """Read a coloring grid for `board`; `.` only off circles, B/W on them."""
    diags: list[ParseDiagnostic] = []
    rows = list(_significant(text))
    if len(rows) != board.rows:
        last = rows[-1][0] if rows else 0
        raise ParseError([ParseDiagnostic(
            last, 0, f"expected {board.rows} grid lines, found {len(rows)}")])
    colors: dict[Coord, str] = {}
    for r, (lineno, raw) in enumerate(rows, start=1):
        cells = raw.strip()
        lead = len(raw) - len(raw.lstrip())
        if len(cells) != board.cols:
            diags.append(ParseDiagnostic(
                lineno, lead + 1,
                f"grid line holds {len(cells)} cells, board has {board.cols}"))
            continue
        for j, char in enumerate(cells, start=1):
            coord = (r, j)
            column = lead + j
            if char == ".":
                if coord in board.circles:
                    diags.append(ParseDiagnostic(
                        lineno, column, f"circle at {coord} needs B or W"))
            elif char in (BLACK, WHITE):
                if coord not in board.circles:
                    diags.append(ParseDiagnostic(
                        lineno, column, f"no circle at {coord}"))
                else:
                    colors[coord] = char
            else:
                diags.append(ParseDiagnostic(
                    lineno, column, f"bad cell character {char!r}"))
    if diags:
        raise ParseError(diags)
    return Coloring.from_colors(colors)


def write_coloring(coloring: Coloring, board: Board) -> str:
    """Grid text of a coloring over `board`."""
    if coloring.cells != frozenset(board.circles):
        raise ColoringError("coloring does not cover the board's circles")
    lines = []
    for r in range(1, board.rows + 1):
        line = []
        for c in range(1, board.cols + 1):
            if (r, c) in coloring.cells:
                line.append(coloring[(r, c)])
            else:
                line.append(".")
        lines.append("".join(line))
    return "\n".join(lines) + "\n"


def parse_one_in_three(text: str) -> OneInThreeInstance:
    """Read a `.c13` instance file."""
    lines = list(_significant(text))
    if not lines:
        raise ParseError([ParseDiagnostic(
            0, 0, "missing `p 1in3 <nvars> <nclauses>` header")])
    diags: list[ParseDiagnostic] = []
    lineno, raw = lines[0]
    tokens = _tokens(raw)
    shape = [t for t, _ in tokens[:2]]
    nvars = _as_int(tokens[2][0]) if len(tokens) > 2 else None
    nclauses = _as_int(tokens[3][0]) if len(tokens) > 3 else None
    if (len(tokens) != 4 or shape != ["p", "1in3"]
            or nvars is None or nclauses is None or nvars < 0 or nclauses < 0):
        raise ParseError([ParseDiagnostic(
            lineno, tokens[0][1], "header must read `p 1in3 <nvars> <nclauses>`")])

    body = lines[1:]
    if len(body) != nclauses:
        where = body[-1][0] if body else lineno
        diags.append(ParseDiagnostic(
            where, 0,
            f"header promises {nclauses} clauses, found {len(body)}"))

    clauses: list[list[int]] = []
    for lineno, raw in body:
        tokens = _tokens(raw)
        values = []
        bad = False
        for token, column in tokens:
            value = _as_int(token)
            if value is None:
                diags.append(ParseDiagnostic(
                    lineno, column, f"not an integer: `{token}`"))
                bad = True
                break
            values.append(value)
        if bad:
            continue
        if len(values) != 4 or values[3] != 0:
            diags.append(ParseDiagnostic(
                lineno, tokens[0][1],
                "clause line is three literals and a closing 0"))
            continue
        literals = values[:3]
        ok = True
        for k, lit in enumerate(literals):
            if lit == 0:
                diags.append(ParseDiagnostic(
                    lineno, tokens[k][1], "zero literal inside a clause"))
                ok = False
            elif abs(lit) > nvars:
                diags.append(ParseDiagnostic(
                    lineno, tokens[k][1],
                    f"literal {lit} exceeds the {nvars} declared variables"))
                ok = False
        if ok and len({abs(lit) for lit in literals}) != 3:
            diags.append(ParseDiagnostic(
                lineno, tokens[0][1],
                "clause must cover three distinct variables"))
            ok = False
        if ok:
            clauses.append(literals)

    if diags:
        raise ParseError(diags)
    return one_in_three(nvars, clauses)


def write_one_in_three(instance: OneInThreeInstance) -> str:
    """Canonical `.c13` text, literals sorted by variable."""
    lines = [f"p 1in3 {instance.nvars} {len(instance.clauses)}"]
    for clause in instance.clauses:
        lines.append(" ".join(str(lit.to_int()) for lit in clause) + " 0")
    return "\n".join(lines) + "\n"
