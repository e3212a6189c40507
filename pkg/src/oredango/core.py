"""Board model and rule checker for the Oredango pencil puzzle.

An Oredango board is an m x n grid.  Some cells carry circles, each circle
is colored black or white by the solver.  Circles are threaded onto skewers:
paths of circles in which consecutive circles occupy touching cells
(horizontally, vertically, or diagonally).  Every circle belongs to exactly
one skewer; a circle not listed on any explicit skewer forms a skewer of its
own.  At most one circle per skewer carries a numeric clue.

A coloring solves the board when

  A. every clued skewer holds exactly `clue` black circles,
  B. no three consecutive circles along a skewer share one color,
  C. no three consecutive circles within a row share one color, and
  D. no three consecutive circles within a column share one color.

For rules C and D "consecutive" skips cells without circles: the circles of
a line are read in order and every window of three adjacent ones is checked.

Coordinates are 1-based (row, col) pairs counted from the top-left cell.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Iterator, Mapping, Sequence

BLACK = "B"
WHITE = "W"

Coord = tuple[int, int]
Triple = tuple[Coord, Coord, Coord]


class BoardError(ValueError):
    """A structural rule of the board model is broken.

    `coord` and `skewer` locate the offending declaration when known, so
    that callers holding source positions can point at the right line.
    """

    def __init__(self, message: str, coord: Coord | None = None,
                 skewer: int | None = None):
        super().__init__(message)
        self.coord = coord
        self.skewer = skewer


class ColoringError(ValueError):
    """A coloring does not fit the board it is checked against."""


@dataclass(frozen=True)
class Circle:
    """One circle cell; `clue` is the black count of its skewer, if given."""

    clue: int | None = None


@dataclass(frozen=True)
class Skewer:
    """An ordered path of circle coordinates.

    Paths are stored with the lexicographically smaller endpoint first;
    `build_board` flips reversed input, so equal skewers compare equal.
    """

    path: tuple[Coord, ...]

    @property
    def size(self) -> int:
        return len(self.path)


@dataclass(frozen=True)
class Board:
    """Immutable puzzle instance.  Construct through `build_board`."""

    rows: int
    cols: int
    circles: Mapping[Coord, Circle]
    skewers: tuple[Skewer, ...]

    def circle_coords(self) -> list[Coord]:
        """All circle coordinates in row-major order."""
        return sorted(self.circles)

    def clue_of(self, skewer: Skewer) -> int | None:
        """The clue carried by a skewer, or None when unclued."""
        for coord in skewer.path:
            clue = self.circles[coord].clue
            if clue is not None:
                return clue
        return None


@dataclass(frozen=True)
class Coloring:
    """Total black/white assignment over a board's circles."""

    cells: frozenset[Coord]
    blacks: frozenset[Coord]

    def __post_init__(self):
        if not self.blacks <= self.cells:
            raise ColoringError("black cells outside the colored domain")

    @classmethod
    def from_colors(cls, colors: Mapping[Coord, str]) -> "Coloring":
        blacks = set()
        for coord, color in colors.items():
            if color == BLACK:
                blacks.add(coord)
            elif color != WHITE:
                raise ColoringError(f"bad color {color!r} at {coord}")
        return cls(frozenset(colors), frozenset(blacks))

    def __getitem__(self, coord: Coord) -> str:
        if coord not in self.cells:
            raise KeyError(coord)
        return BLACK if coord in self.blacks else WHITE

    @property
    def colors(self) -> dict[Coord, str]:
        return {coord: self[coord] for coord in sorted(self.cells)}

    def count_black(self, coords: Iterable[Coord]) -> int:
        return sum(1 for coord in coords if coord in self.blacks)


@dataclass(frozen=True)
class TripleIndex:
    """Every window of three consecutive circles, grouped by line.

    `row_triples[i-1]` lists the windows of row i left to right,
    `col_triples[j-1]` those of column j top to bottom, and
    `skewer_triples[r-1]` those of skewer r in path order.
    """

    row_triples: tuple[tuple[Triple, ...], ...]
    col_triples: tuple[tuple[Triple, ...], ...]
    skewer_triples: tuple[tuple[Triple, ...], ...]

    def all_triples(self) -> Iterator[Triple]:
        for group in (self.skewer_triples, self.row_triples, self.col_triples):
            for windows in group:
                yield from windows


@dataclass(frozen=True)
class Violation:
    """One broken rule instance.

    `rule` is A, B, C, or D.  `index` names the skewer (A, B), row (C), or
    column (D); `window` counts windows from 1 along the line (None for A).
    `observed` is the black count over `cells`, required to lie in
    [`lo`, `hi`].
    """

    rule: str
    index: int
    window: int | None
    cells: tuple[Coord, ...]
    observed: int
    lo: int
    hi: int

    def describe(self) -> str:
        where = {"A": "skewer", "B": "skewer", "C": "row", "D": "col"}[self.rule]
        head = f"rule {self.rule} {where} {self.index}"
        if self.window is not None:
            head += f" window {self.window}"
        cells = "".join(f"({r},{c})" for r, c in self.cells)
        if self.rule == "A":
            return f"{head}: {self.observed} black, clue {self.lo} at {cells}"
        return f"{head}: {self.observed} black at {cells}"


@dataclass(frozen=True)
class ViolationReport:
    """All rule violations of one coloring, in deterministic order."""

    violations: tuple[Violation, ...] = field(default_factory=tuple)

    @property
    def ok(self) -> bool:
        return not self.violations

    def __iter__(self) -> Iterator[Violation]:
        return iter(self.violations)

    def __len__(self) -> int:
        return len(self.violations)


def _canonical_path(path: Sequence[Coord]) -> tuple[Coord, ...]:
    coords = tuple(path)
    if coords and coords[-1] < coords[0]:
        coords = coords[::-1]
    return coords


def build_board(rows: int, cols: int,
                circle_list: Iterable[Sequence[int]],
                skewer_list: Iterable[Sequence[Coord]] = ()) -> Board:
    """Validate and assemble a board.

    `circle_list` holds (row, col) or (row, col, clue) entries.  Each entry
    of `skewer_list` is a path over declared circles; circles on no path
    become size-one skewers of their own, appended in row-major order.
    Raises BoardError when any structural rule fails.
    """
    if rows < 1 or cols < 1:
        raise BoardError(f"grid must be at least 1x1, got {rows}x{cols}")

    circles: dict[Coord, Circle] = {}
    for entry in circle_list:
        if len(entry) == 2:
            (r, c), clue = entry, None
        elif len(entry) == 3:
            r, c, clue = entry
        else:
            raise BoardError(f"circle entry {tuple(entry)!r} not (r, c[, clue])")
        coord = (r, c)
        if not (1 <= r <= rows and 1 <= c <= cols):
            raise BoardError(f"circle {coord} outside {rows}x{cols} grid",
                             coord=coord)
        if coord in circles:
            raise BoardError(f"circle {coord} declared twice", coord=coord)
        if clue is not None and clue < 0:
            raise BoardError(f"negative clue at {coord}", coord=coord)
        circles[coord] = Circle(clue)

    skewers: list[Skewer] = []
    threaded: set[Coord] = set()
    multi: set[Coord] = set()
    for k, path in enumerate(skewer_list, start=1):
        coords = _canonical_path(path)
        if not coords:
            raise BoardError(f"skewer {k} has an empty path", skewer=k)
        if len(set(coords)) != len(coords):
            raise BoardError(f"skewer {k} repeats a circle", skewer=k)
        for coord in coords:
            if coord not in circles:
                raise BoardError(f"skewer {k} visits {coord}, not a circle",
                                 coord=coord, skewer=k)
            if coord in threaded:
                raise BoardError(f"circle {coord} on two skewers",
                                 coord=coord, skewer=k)
            threaded.add(coord)
        for (r1, c1), (r2, c2) in zip(coords, coords[1:]):
            if max(abs(r1 - r2), abs(c1 - c2)) != 1:
                raise BoardError(
                    f"skewer {k} jumps from ({r1},{c1}) to ({r2},{c2})",
                    coord=(r2, c2), skewer=k)
        # a one-circle path adds nothing; the loner joins the appendix below
        if len(coords) >= 2:
            skewers.append(Skewer(coords))
            multi.update(coords)

    for coord in sorted(circles):
        if coord not in multi:
            skewers.append(Skewer((coord,)))

    for k, skewer in enumerate(skewers, start=1):
        clued = [c for c in skewer.path if circles[c].clue is not None]
        if len(clued) > 1:
            raise BoardError(f"skewer {k} carries two clues",
                             coord=clued[1], skewer=k)
        if clued and circles[clued[0]].clue > skewer.size:
            raise BoardError(
                f"clue {circles[clued[0]].clue} at {clued[0]} exceeds "
                f"skewer size {skewer.size}", coord=clued[0], skewer=k)

    return Board(rows, cols, circles, tuple(skewers))


def _windows(line: Sequence[Coord]) -> tuple[Triple, ...]:
    return tuple((line[s], line[s + 1], line[s + 2])
                 for s in range(len(line) - 2))


def triple_index(board: Board) -> TripleIndex:
    """Collect the three-circle windows checked by rules B, C, and D."""
    by_row: list[list[Coord]] = [[] for _ in range(board.rows)]
    by_col: list[list[Coord]] = [[] for _ in range(board.cols)]
    for r, c in board.circle_coords():
        by_row[r - 1].append((r, c))
        by_col[c - 1].append((r, c))
    for line in by_col:
        line.sort()
    return TripleIndex(
        row_triples=tuple(_windows(line) for line in by_row),
        col_triples=tuple(_windows(line) for line in by_col),
        skewer_triples=tuple(_windows(s.path) for s in board.skewers),
    )


def check_coloring(board: Board, coloring: Coloring) -> ViolationReport:
    """Check a total coloring against rules A-D.

    The report lists rule A violations by skewer index, then rule B by
    (skewer, window), rule C by (row, window), and rule D by (col, window).
    An empty report means the coloring solves the board.
    """
    if coloring.cells != frozenset(board.circles):
        missing = sorted(frozenset(board.circles) - coloring.cells)
        extra = sorted(coloring.cells - frozenset(board.circles))
        raise ColoringError(
            f"coloring domain mismatch: missing {missing}, extra {extra}")

    index = triple_index(board)
    found: list[Violation] = []

    for k, skewer in enumerate(board.skewers, start=1):
        clue = board.clue_of(skewer)
        if clue is None:
            continue
        blacks = coloring.count_black(skewer.path)
        if blacks != clue:
            found.append(Violation("A", k, None, skewer.path,
                                   blacks, clue, clue))

    groups = (("B", index.skewer_triples),
              ("C", index.row_triples),
              ("D", index.col_triples))
    for rule, lines in groups:
        for i, windows in enumerate(lines, start=1):
            for w, cells in enumerate(windows, start=1):
                blacks = coloring.count_black(cells)
                if blacks in (0, 3):
                    found.append(Violation(rule, i, w, cells, blacks, 1, 2))

    return ViolationReport(tuple(found))
