"""Toolkit for the Oredango circle-coloring puzzle.

Modules: `core` (board model and rule checker), `textio` (file formats),
`solver` (complete search), `ilp` (0-1 model and LP export), `reduction`
(1-in-3 satisfiability translation), and `cli` (command line).
"""

from . import core, ilp, reduction, solver, textio
from .core import (BLACK, WHITE, Board, BoardError, Circle, Coloring,
                   ColoringError, Skewer, TripleIndex, Violation,
                   ViolationReport, build_board, check_coloring, triple_index)
from .solver import SolveOutcome, SolveStatus, another_solution, propagate, solve

__version__ = "0.1.0"

__all__ = [
    "BLACK", "WHITE", "Board", "BoardError", "Circle", "Coloring",
    "ColoringError", "Skewer", "SolveOutcome", "SolveStatus", "TripleIndex",
    "Violation", "ViolationReport", "another_solution", "build_board",
    "check_coloring", "core", "ilp", "propagate", "reduction", "solve",
    "solver", "textio", "triple_index",
]
