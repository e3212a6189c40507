"""Translation of 1-in-3 satisfiability into Oredango boards.

A 1-in-3 instance is a set of clauses, each holding three literals over
distinct variables; an assignment is accepted when every clause has
exactly one true literal.  `reduce` builds a board whose solutions match
the accepted assignments one for one, using only size-one and size-two
skewers and clues 0 and 1.

Layout.  The board has 4n+1 columns for n variables.  Column 1 and column
4n+1 are anchor columns; variable v owns four columns: 4v-2 carries the
positive literal, 4v-1 the negative one, 4v is a separator colored black
inside pair bands, and 4v+1 (absent for the last variable) a separator
colored white there.  Rows top to bottom interleave three kinds of block:

* a clause strip per clause: a clause row holding black anchors (clue 1)
  and one circle per literal, then a guard row holding white anchors
  (clue 0) and, for the clause's first and third literals by column
  order, a circle in the complementary literal column;
* a pair band between consecutive strips: per variable, two crossed
  size-two skewers over the literal columns with clue 1 on each circle of
  the positive column, forcing the negative column to copy the variable's
  value and the positive column its complement;
* spacer rows above every band except the first: one row per variable
  carrying whatever literal-column circles the strip above did not
  provide, so that between two bands each literal column holds exactly
  one circle, plus separator circles (clue 0 under column 4v, clue 1
  under 4v+1) that keep the separator columns legal.

Column windows then pin every literal-column circle outside the bands to
the value of that column's literal, the clause row forbids two adjacent
true literals and a uniform clause, and the guard row forbids the outer
pair of literals from being true together: exactly one literal per clause
is true.  A single-clause instance is laid out with the clause doubled,
which leaves the accepted assignments unchanged.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterable, Mapping, Sequence

from . import solver
from .core import (BLACK, WHITE, Board, Coloring, Coord, build_board,
                   check_coloring)


class ReductionError(ValueError):
    """The instance or assignment violates the translation's contract."""


@dataclass(frozen=True, order=True)
class Literal:
    var: int
    negated: bool = False

    def complement(self) -> "Literal":
        return Literal(self.var, not self.negated)

    def to_int(self) -> int:
        return -self.var if self.negated else self.var

    def value(self, assignment: Sequence[int]) -> int:
        return assignment[self.var - 1] ^ (1 if self.negated else 0)


Clause = tuple[Literal, Literal, Literal]


@dataclass(frozen=True)
class OneInThreeInstance:
    """Normalized instance: clause literals sorted by variable index."""

    nvars: int
    clauses: tuple[Clause, ...]


def one_in_three(nvars: int,
                 clauses: Iterable[Iterable[int | Literal]]) -> OneInThreeInstance:
    """Build a normalized instance; literals may be signed integers."""
    if nvars < 0:
        raise ReductionError("variable count cannot be negative")
    normalized: list[Clause] = []
    for pos, raw in enumerate(clauses, start=1):
        literals = []
        for item in raw:
            if isinstance(item, Literal):
                literals.append(item)
            else:
                value = int(item)
                if value == 0:
                    raise ReductionError(f"clause {pos} holds a zero literal")
                literals.append(Literal(abs(value), value < 0))
        if len(literals) != 3:
            raise ReductionError(f"clause {pos} needs exactly three literals")
        for lit in literals:
            if not 1 <= lit.var <= nvars:
                raise ReductionError(
                    f"clause {pos} uses variable {lit.var}, beyond {nvars}")
        if len({lit.var for lit in literals}) != 3:
            raise ReductionError(
                f"clause {pos} uses a variable twice")
        normalized.append(tuple(sorted(literals)))
    return OneInThreeInstance(nvars, tuple(normalized))


@dataclass(frozen=True)
class LayoutMeta:
    """Role tags of the reduced board's rows and columns.

    Row tags: ("clause", i), ("guard", i), ("band", i, 0 or 1), and
    ("spacer", i, v).  Column tags: ("anchor", side), ("lit", Literal),
    ("black_sep", v), and ("white_sep", v).
    """

    nvars: int
    nclauses: int
    row_tags: Mapping[int, tuple]
    col_tags: Mapping[int, tuple]


@dataclass(frozen=True)
class ReducedPuzzle:
    board: Board
    literal_cells: Mapping[tuple[int, Literal], Coord]
    variable_readout: Mapping[int, Coord]
    layout_meta: LayoutMeta


def _col(lit: Literal) -> int:
    return 4 * lit.var - 2 + (1 if lit.negated else 0)


def _check_clauses(instance: OneInThreeInstance) -> None:
    for pos, clause in enumerate(instance.clauses, start=1):
        if len(clause) != 3 or len({lit.var for lit in clause}) != 3:
            raise ReductionError(f"clause {pos} must cover three distinct "
                                 "variables")
        for lit in clause:
            if not 1 <= lit.var <= instance.nvars:
                raise ReductionError(
                    f"clause {pos} uses variable {lit.var}, beyond "
                    f"{instance.nvars}")


def reduce(instance: OneInThreeInstance) -> ReducedPuzzle:
    """Translate an instance into a board with matching solutions.

    The board spans 4m-2 + n*max(0, m-2) rows and 4n+1 columns, where m
    is the laid-out clause count (a lone clause is doubled).  Raises
    ReductionError for empty instances, clauses over fewer than three
    distinct variables, or variables in no clause.
    """
    _check_clauses(instance)
    n = instance.nvars
    if n < 1:
        raise ReductionError("an instance needs at least one variable")
    if not instance.clauses:
        raise ReductionError("an instance needs at least one clause")
    used = {lit.var for clause in instance.clauses for lit in clause}
    missing = [v for v in range(1, n + 1) if v not in used]
    if missing:
        raise ReductionError(f"variables in no clause: {missing}")

    clauses = list(instance.clauses)
    doubled = len(clauses) == 1
    if doubled:
        clauses.append(clauses[0])
    m = len(clauses)
    right = 4 * n + 1

    row_tags: dict[int, tuple] = {}
    clause_row: dict[int, int] = {}
    guard_row: dict[int, int] = {}
    band_top: dict[int, int] = {}
    spacer_row: dict[tuple[int, int], int] = {}
    r = 0
    for i in range(1, m + 1):
        r += 1
        clause_row[i] = r
        row_tags[r] = ("clause", i)
        r += 1
        guard_row[i] = r
        row_tags[r] = ("guard", i)
        if i < m:
            if 2 <= i <= m - 1:
                for v in range(1, n + 1):
                    r += 1
                    spacer_row[(i, v)] = r
                    row_tags[r] = ("spacer", i, v)
            r += 1
            band_top[i] = r
            row_tags[r] = ("band", i, 0)
            r += 1
            row_tags[r] = ("band", i, 1)
    total_rows = r

    col_tags: dict[int, tuple] = {1: ("anchor", "left"),
                                  right: ("anchor", "right")}
    for v in range(1, n + 1):
        col_tags[4 * v - 2] = ("lit", Literal(v, False))
        col_tags[4 * v - 1] = ("lit", Literal(v, True))
        col_tags[4 * v] = ("black_sep", v)
        if v < n:
            col_tags[4 * v + 1] = ("white_sep", v)

    circles: list[tuple] = []
    skewers: list[list[Coord]] = []
    literal_cells: dict[tuple[int, Literal], Coord] = {}
    covered: dict[int, set[int]] = {}

    for i in range(1, m + 1):
        rc, rg = clause_row[i], guard_row[i]
        circles += [(rc, 1, 1), (rc, right, 1), (rg, 1, 0), (rg, right, 0)]
        ordered = sorted(clauses[i - 1], key=_col)
        taken = set()
        for lit in ordered:
            cell = (rc, _col(lit))
            circles.append(cell)
            taken.add(_col(lit))
            literal_cells.setdefault((1 if doubled else i, lit), cell)
        for lit in (ordered[0], ordered[2]):
            column = _col(lit.complement())
            circles.append((rg, column))
            taken.add(column)
        covered[i] = taken

    for i in sorted(band_top):
        t = band_top[i]
        for v in range(1, n + 1):
            pos, neg = 4 * v - 2, 4 * v - 1
            circles += [(t, pos, 1), (t + 1, pos, 1), (t, neg), (t + 1, neg)]
            skewers.append([(t, pos), (t + 1, neg)])
            skewers.append([(t + 1, pos), (t, neg)])
            circles += [(t, 4 * v, 1), (t + 1, 4 * v, 1)]
            if v < n:
                circles += [(t, 4 * v + 1, 0), (t + 1, 4 * v + 1, 0)]

    for (i, v), row in sorted(spacer_row.items()):
        for column in (4 * v - 2, 4 * v - 1):
            if column not in covered[i]:
                circles.append((row, column))
        circles.append((row, 4 * v, 0))
        if v < n:
            circles.append((row, 4 * v + 1, 1))

    board = build_board(total_rows, right, circles, skewers)
    readout = {v: (band_top[1], 4 * v - 1) for v in range(1, n + 1)}
    meta = LayoutMeta(n, m, row_tags, col_tags)
    return ReducedPuzzle(board, literal_cells, readout, meta)


def _values(instance_size: int, assignment: Sequence[int]) -> list[int]:
    values = [int(v) for v in assignment]
    if len(values) != instance_size:
        raise ReductionError(f"assignment covers {len(values)} variables, "
                             f"board encodes {instance_size}")
    if any(v not in (0, 1) for v in values):
        raise ReductionError("assignment values must be 0 or 1")
    return values


def assignment_to_coloring(reduced: ReducedPuzzle,
                           assignment: Sequence[int]) -> Coloring:
    """Canonical coloring encoding an assignment.

    Total for every 0/1 vector of the right length; the result solves the
    board exactly when the assignment satisfies the source instance.
    """
    meta = reduced.layout_meta
    values = _values(meta.nvars, assignment)
    colors: dict[Coord, str] = {}
    for cell in reduced.board.circles:
        row, column = cell
        kind = meta.row_tags[row][0]
        tag = meta.col_tags[column]
        if tag[0] == "anchor":
            black = kind == "clause"
        elif tag[0] == "black_sep":
            black = kind == "band"
        elif tag[0] == "white_sep":
            black = kind == "spacer"
        else:
            lit: Literal = tag[1]
            value = lit.value(values)
            black = not value if kind == "band" else bool(value)
        colors[cell] = BLACK if black else WHITE
    return Coloring.from_colors(colors)


def coloring_to_assignment(reduced: ReducedPuzzle,
                           coloring: Coloring) -> tuple[int, ...]:
    """Read the encoded assignment back from a solving coloring.

    Raises ReductionError when the coloring does not solve the board.
    """
    report = check_coloring(reduced.board, coloring)
    if not report.ok:
        raise ReductionError("coloring does not solve the reduced board: "
                             + report.violations[0].describe())
    readout = reduced.variable_readout
    return tuple(1 if coloring[readout[v]] == BLACK else 0
                 for v in sorted(readout))


def enumerate_assignments(instance: OneInThreeInstance) -> list[tuple[int, ...]]:
    """All accepted assignments by exhaustive scan, lexicographic order."""
    if instance.nvars > 24:
        raise ReductionError("exhaustive scan is limited to 24 variables")
    accepted = []
    for bits in itertools.product((0, 1), repeat=instance.nvars):
        if all(sum(lit.value(bits) for lit in clause) == 1
               for clause in instance.clauses):
            accepted.append(bits)
    return accepted


@dataclass(frozen=True)
class VerificationResult:
    """Outcome of an exhaustive instance/board cross-check."""

    ok: bool
    assignments: int
    puzzle_solutions: int
    problems: tuple[str, ...]


def verify_reduction(instance: OneInThreeInstance) -> VerificationResult:
    """Prove the translation exact for one small instance.

    Enumerates both sides, checks the counts agree, that the two mapping
    directions are mutual inverses, and that the board keeps to size-two
    skewers and clues 0 and 1.  Limited to 6 variables and 5 clauses.
    """
    if instance.nvars > 6 or len(instance.clauses) > 5:
        raise ReductionError("verification is exhaustive; limited to "
                             "6 variables and 5 clauses")
    reduced = reduce(instance)
    board = reduced.board
    problems: list[str] = []

    for k, skewer in enumerate(board.skewers, start=1):
        if skewer.size > 2:
            problems.append(f"skewer {k} threads {skewer.size} circles")
    for coord in sorted(board.circles):
        clue = board.circles[coord].clue
        if clue is not None and clue not in (0, 1):
            problems.append(f"clue {clue} at {coord} is outside {{0, 1}}")

    accepted = enumerate_assignments(instance)
    outcome = solver.enumerate(board, cap=len(accepted) + 1)
    solutions = list(outcome.solutions)
    if len(solutions) != len(accepted):
        problems.append(f"board has {len(solutions)} solutions, instance "
                        f"accepts {len(accepted)} assignments")

    solution_set = set(solutions)
    accepted_set = set(accepted)
    for assignment in accepted:
        coloring = assignment_to_coloring(reduced, assignment)
        report = check_coloring(board, coloring)
        if not report.ok:
            problems.append(f"assignment {assignment} encodes to a "
                            "non-solution")
            continue
        if coloring not in solution_set and len(solutions) == len(accepted):
            problems.append(f"encoding of {assignment} missed by the solver")
        if coloring_to_assignment(reduced, coloring) != assignment:
            problems.append(f"assignment {assignment} does not survive the "
                            "round trip")
    for coloring in solutions:
        try:
            assignment = coloring_to_assignment(reduced, coloring)
        except ReductionError:
            problems.append("solver produced a coloring that fails revalidation")
            continue
        if assignment not in accepted_set:
            problems.append(f"board solution decodes to rejected "
                            f"assignment {assignment}")
        elif assignment_to_coloring(reduced, assignment) != coloring:
            problems.append(f"board solution is not the canonical encoding "
                            f"of {assignment}")

    return VerificationResult(not problems, len(accepted), len(solutions),
                              tuple(problems))


def format_reduction_map(reduced: ReducedPuzzle) -> str:
    """Plain-text cell map: literal placements, then readout cells."""
    lines = []
    ordered = sorted(reduced.literal_cells.items(),
                     key=lambda item: (item[0][0], item[1][1]))
    for (i, lit), (row, column) in ordered:
        lines.append(f"literal {i} {lit.to_int()} {row} {column}")
    for v in sorted(reduced.variable_readout):
        row, column = reduced.variable_readout[v]
        lines.append(f"readout {v} {row} {column}")
    return "\n".join(lines) + "\n"
