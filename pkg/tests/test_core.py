import random

import pytest

from conftest import fixture_text
from oredango import textio
from oredango.core import (BLACK, WHITE, BoardError, Coloring, ColoringError,
                           Skewer, build_board, check_coloring, triple_index)
from oracles import random_board

PUBLISHED_BLACKS = [(1, 2), (1, 4), (2, 3), (3, 1), (3, 2), (4, 1), (4, 3),
                    (4, 4)]


def coloring_of(board, blacks):
    return Coloring(frozenset(board.circles), frozenset(blacks))


def test_build_board_assembles_sample(sample_board):
    assert sample_board.rows == 4 and sample_board.cols == 4
    assert len(sample_board.circles) == 13
    # explicit skewers first, stored small-endpoint first, loners row-major
    assert [s.path for s in sample_board.skewers] == [
        ((1, 3), (1, 2), (2, 1), (3, 2), (4, 1)),
        ((1, 4), (2, 3), (3, 4), (4, 3), (4, 2), (3, 1)),
        ((1, 1),),
        ((4, 4),),
    ]
    assert sample_board.clue_of(sample_board.skewers[0]) == 3
    assert sample_board.clue_of(sample_board.skewers[1]) == 4


def test_path_reversal_builds_the_same_board():
    circles = [(1, 1), (1, 2), (2, 3, 1)]
    forward = build_board(2, 3, circles, [[(1, 1), (1, 2), (2, 3)]])
    backward = build_board(2, 3, circles, [[(2, 3), (1, 2), (1, 1)]])
    assert forward == backward


def test_explicit_loner_path_joins_the_appendix():
    explicit = build_board(1, 3, [(1, 1), (1, 3)], [[(1, 3)]])
    implicit = build_board(1, 3, [(1, 1), (1, 3)])
    assert explicit == implicit
    assert [s.path for s in explicit.skewers] == [((1, 1),), ((1, 3),)]


@pytest.mark.parametrize("rows,cols,circles,skewers,fragment", [
    (0, 3, [], [], "at least 1x1"),
    (2, 2, [(1, 3)], [], "outside"),
    (2, 2, [(1, 1), (1, 1, 2)], [], "twice"),
    (2, 2, [(1, 1, -1)], [], "negative clue"),
    (2, 2, [(1, 1)], [[(1, 1), (2, 2)], [(2, 2)]], "not a circle"),
    (2, 2, [(1, 1), (2, 2)], [[(1, 1), (2, 2)], [(2, 2), (1, 1)]], "two skewers"),
    (2, 2, [(1, 1), (2, 2)], [[(1, 1), (2, 2), (1, 1)]], "repeats"),
    (3, 3, [(1, 1), (3, 3)], [[(1, 1), (3, 3)]], "jumps"),
    (2, 2, [(1, 1, 1), (2, 2, 1)], [[(1, 1), (2, 2)]], "two clues"),
    (2, 2, [(1, 1, 3), (2, 2)], [[(1, 1), (2, 2)]], "exceeds"),
    (1, 1, [(1, 1, 2)], [], "exceeds"),
])
def test_build_board_rejections(rows, cols, circles, skewers, fragment):
    with pytest.raises(BoardError, match=fragment):
        build_board(rows, cols, circles, skewers)


def test_triple_index_windows(sample_board):
    index = triple_index(sample_board)
    assert index.row_triples[0] == (
        ((1, 1), (1, 2), (1, 3)), ((1, 2), (1, 3), (1, 4)))
    assert index.row_triples[1] == ()  # two circles only
    # column 3 skips the empty cell (3, 3)
    assert index.col_triples[2] == (((1, 3), (2, 3), (4, 3)),)
    assert len(index.skewer_triples[0]) == 3
    assert len(index.skewer_triples[1]) == 4
    assert index.skewer_triples[2] == ()
    assert sum(len(w) for w in index.row_triples) == 5
    assert sum(len(w) for w in index.col_triples) == 5


def test_published_coloring_is_clean(sample_board):
    report = check_coloring(sample_board, coloring_of(sample_board,
                                                      PUBLISHED_BLACKS))
    assert report.ok
    assert len(report) == 0


def test_count_violations_are_exact(sample_board):
    coloring = textio.parse_coloring(fixture_text("sample4x4-wrong-counts.sol"),
                                     sample_board)
    report = check_coloring(sample_board, coloring)
    assert [(v.rule, v.index, v.window, v.observed) for v in report] == [
        ("A", 2, None, 3),
        ("B", 1, 2, 3),
    ]
    assert report.violations[0].describe() == (
        "rule A skewer 2: 3 black, clue 4 at "
        "(1,4)(2,3)(3,4)(4,3)(4,2)(3,1)")
    assert report.violations[1].describe() == (
        "rule B skewer 1 window 2: 3 black at (1,2)(2,1)(3,2)")


def test_triple_violations_are_exact(sample_board):
    coloring = textio.parse_coloring(
        fixture_text("sample4x4-wrong-triples.sol"), sample_board)
    report = check_coloring(sample_board, coloring)
    assert [(v.rule, v.index, v.window, v.observed) for v in report] == [
        ("C", 3, 1, 0),
        ("C", 4, 1, 3),
        ("C", 4, 2, 3),
        ("D", 3, 1, 3),
    ]


def test_domain_mismatch_raises(sample_board):
    short = dict.fromkeys(list(sample_board.circles)[:-1], WHITE)
    with pytest.raises(ColoringError, match="mismatch"):
        check_coloring(sample_board, Coloring.from_colors(short))


def test_bad_color_rejected():
    with pytest.raises(ColoringError, match="bad color"):
        Coloring.from_colors({(1, 1): "?"})


def test_rule_a_is_vacuous_without_a_clue():
    board = build_board(1, 2, [(1, 1), (1, 2)], [[(1, 1), (1, 2)]])
    for blacks in ([], [(1, 1)], [(1, 1), (1, 2)]):
        report = check_coloring(board, coloring_of(board, blacks))
        assert not [v for v in report if v.rule == "A"]


def test_color_flip_keeps_run_violations():
    rng = random.Random(4021)
    for _ in range(60):
        board = random_board(rng, max_circles=12)
        coords = board.circle_coords()
        blacks = frozenset(c for c in coords if rng.random() < 0.5)
        domain = frozenset(coords)
        plain = check_coloring(board, Coloring(domain, blacks))
        flipped = check_coloring(board, Coloring(domain, domain - blacks))
        runs = lambda rep: [(v.rule, v.index, v.window) for v in rep
                            if v.rule != "A"]
        assert runs(plain) == runs(flipped)


def test_report_empty_iff_counts_in_window():
    rng = random.Random(515)
    for _ in range(80):
        board = random_board(rng, max_circles=12)
        coords = board.circle_coords()
        coloring = Coloring(frozenset(coords),
                            frozenset(c for c in coords if rng.random() < 0.5))
        clues_ok = all(
            coloring.count_black(s.path) == board.clue_of(s)
            for s in board.skewers if board.clue_of(s) is not None)
        triples_ok = all(
            coloring.count_black(w) in (1, 2)
            for w in triple_index(board).all_triples())
        assert check_coloring(board, coloring).ok == (clues_ok and triples_ok)


def test_deleting_an_empty_row_preserves_the_report():
    rng = random.Random(99)
    trials = 0
    while trials < 30:
        board = random_board(rng, max_circles=10, max_side=4)
        empty = [r for r in range(1, board.rows + 1)
                 if not any(c[0] == r for c in board.circles)]
        if board.rows < 2 or not empty:
            continue
        trials += 1
        gone = empty[0]
        shift = lambda c: (c[0] - 1, c[1]) if c[0] > gone else c
        circles = [shift(c) + (() if board.circles[c].clue is None
                               else (board.circles[c].clue,))
                   for c in board.circle_coords()]
        skewers = [[shift(c) for c in s.path]
                   for s in board.skewers if s.size >= 2]
        smaller = build_board(board.rows - 1, board.cols, circles, skewers)
        coords = board.circle_coords()
        coloring = Coloring(frozenset(coords),
                            frozenset(c for c in coords if rng.random() < 0.5))
        moved = Coloring(frozenset(shift(c) for c in coloring.cells),
                         frozenset(shift(c) for c in coloring.blacks))
        before = [(v.rule, v.observed, tuple(shift(c) for c in v.cells))
                  for v in check_coloring(board, coloring)]
        after = [(v.rule, v.observed, v.cells)
                 for v in check_coloring(smaller, moved)]
        assert before == after
