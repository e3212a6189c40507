"""0-1 integer model of a board, LP-format export, and feasibility check.

One binary variable per circle, 1 meaning black.  A clued skewer pins the
sum of its variables to the clue, and every three-circle window along a
skewer, row, or column keeps its sum within [1, 2].  The objective
minimizes the total black count but carries no meaning here: any feasible
point is a puzzle solution and vice versa.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Mapping

from .core import BLACK, WHITE, Board, Coloring, Coord, triple_index
from .solver import BoundedCounts


@dataclass(frozen=True)
class LinearConstraint:
    """Unit-coefficient sum over named variables, bounded two-sided.

    `lower` and `upper` may coincide (an equality) and either may be None
    for a one-sided row.
    """

    name: str
    terms: tuple[str, ...]
    lower: int | None
    upper: int | None


@dataclass(frozen=True)
class LinearModel:
    """Variables in row-major circle order with an all-ones objective."""

    variables: tuple[tuple[str, Coord], ...]
    constraints: tuple[LinearConstraint, ...]
    objective: tuple[int, ...]


def variable_name(coord: Coord) -> str:
    return f"x_{coord[0]}_{coord[1]}"


def build_model(board: Board) -> LinearModel:
    """Assemble the 0-1 model of a board.

    Constraint order: `sk<r>` equalities for the clued skewers, then
    window ranges `tb<r>_<t>` per skewer, `tr<i>_<s>` per row, and
    `tc<j>_<t>` per column, each window bounded within [1, 2].
    """
    coords = board.circle_coords()
    variables = tuple((variable_name(c), c) for c in coords)
    constraints: list[LinearConstraint] = []

    for k, skewer in enumerate(board.skewers, start=1):
        clue = board.clue_of(skewer)
        if clue is not None:
            terms = tuple(variable_name(c) for c in skewer.path)
            constraints.append(LinearConstraint(f"sk{k}", terms, clue, clue))

    index = triple_index(board)
    sections = (("tb", index.skewer_triples),
                ("tr", index.row_triples),
                ("tc", index.col_triples))
    for prefix, lines in sections:
        for i, windows in enumerate(lines, start=1):
            for t, window in enumerate(windows, start=1):
                terms = tuple(variable_name(c) for c in window)
                constraints.append(
                    LinearConstraint(f"{prefix}{i}_{t}", terms, 1, 2))

    return LinearModel(variables, tuple(constraints),
                       tuple(1 for _ in variables))


def _sum_of(terms: tuple[str, ...]) -> str:
    return " + ".join(terms)


def export_lp(model: LinearModel) -> str:
    """Serialize a model as deterministic LP text, LF line endings.

    An equality becomes one `=` row under its own name; a two-sided range
    becomes a `>=` row suffixed `_lo` and a `<=` row suffixed `_hi`.
    """
    lines = ["Minimize"]
    names = [name for name, _ in model.variables]
    lines.append((" obj: " + _sum_of(tuple(names))) if names else " obj:")
    lines.append("Subject To")
    for con in model.constraints:
        body = _sum_of(con.terms)
        if con.lower is not None and con.lower == con.upper:
            lines.append(f" {con.name}: {body} = {con.lower}")
            continue
        if con.lower is not None:
            lines.append(f" {con.name}_lo: {body} >= {con.lower}")
        if con.upper is not None:
            lines.append(f" {con.name}_hi: {body} <= {con.upper}")
    lines.append("Binaries")
    for base in range(0, len(names), 8):
        lines.append(" " + " ".join(names[base:base + 8]))
    lines.append("End")
    return "\n".join(lines) + "\n"


def _model_engine(model: LinearModel) -> tuple[list[str], BoundedCounts]:
    names = [name for name, _ in model.variables]
    index = {name: i for i, name in enumerate(names)}
    groups = []
    for con in model.constraints:
        try:
            members = [index[t] for t in con.terms]
        except KeyError as err:
            raise ValueError(f"constraint {con.name} uses unknown variable "
                             f"{err.args[0]}") from None
        lo = con.lower if con.lower is not None else 0
        hi = con.upper if con.upper is not None else len(members)
        groups.append((members, lo, hi))
    return names, BoundedCounts(len(names), groups)


def solve_model(model: LinearModel) -> dict[str, int] | None:
    """First feasible 0-1 point of the model, or None when infeasible.

    Runs the same propagation search the board solver uses, applied to the
    model's own constraint groups.
    """
    names, engine = _model_engine(model)
    _, found, _ = engine.run(cap=1)
    if not found:
        return None
    values = found[0]
    return {names[i]: values[i] for i in range(len(names))}


def enumerate_model(model: LinearModel, cap: int | None = None) -> list[dict[str, int]]:
    """All feasible points (up to `cap`) in the solver's enumeration order."""
    names, engine = _model_engine(model)
    _, found, _ = engine.run(cap=cap)
    return [{names[i]: values[i] for i in range(len(names))}
            for values in found]


def model_to_coloring(model: LinearModel, assignment: Mapping[str, int],
                      board: Board) -> Coloring:
    """Translate a feasible point back to a coloring of `board`."""
    cells = {coord for _, coord in model.variables}
    if cells != set(board.circles):
        raise ValueError("model was built for a different board")
    wanted = {name for name, _ in model.variables}
    if wanted != set(assignment):
        raise ValueError("assignment does not cover the model's variables")
    colors = {}
    for name, coord in model.variables:
        value = assignment[name]
        if value not in (0, 1):
            raise ValueError(f"variable {name} holds non-binary value {value!r}")
        colors[coord] = BLACK if value else WHITE
    return Coloring.from_colors(colors)
