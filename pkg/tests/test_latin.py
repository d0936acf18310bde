import random
from itertools import combinations

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from antiramsey import LatinRectangle, RainbowQuery, canonical_relabel, find_rainbow, find_rainbow_either, greedy_rainbow
from antiramsey.constructions import random_latin_rectangle
from antiramsey.errors import ColRepeat, DimensionMismatch, PreconditionViolated, RaggedGrid, RowRepeat, NegativeSymbol
from antiramsey.latin import find_rainbow_shape, greedy_bound, is_rainbow, new_from_grid
from antiramsey.oracles import has_rainbow


def test_accepts_cyclic_square():
    R = new_from_grid([[0, 1], [1, 0]])
    assert R.shape == (2, 2)


def test_column_repeat_reports_column_and_symbol():
    with pytest.raises(ColRepeat) as info:
        new_from_grid([[0, 1], [0, 2]])
    assert (info.value.col, info.value.symbol) == (0, 0)


def test_row_repeat():
    with pytest.raises(RowRepeat) as info:
        new_from_grid([[0, 1, 0]])
    assert info.value.row == 0


@pytest.mark.parametrize("grid, exc", [([[0, 1], [1]], RaggedGrid), ([[0, -1]], NegativeSymbol)])
def test_malformed_grids(grid, exc):
    with pytest.raises(exc):
        new_from_grid(grid)


def test_example_is_latin(example):
    assert example.shape == (3, 7)


def test_cells_are_read_only(example):
    with pytest.raises(ValueError):
        example.cells[0, 0] = 9


def test_relabel_two_symbols():
    assert canonical_relabel(LatinRectangle([[5, 9], [9, 5]])).tolist() == [[0, 1], [1, 0]]


def test_relabel_example(example):
    C = canonical_relabel(example)
    assert C.tolist()[0] == list(range(7))
    assert canonical_relabel(C) == C


def test_query_rejects_bad_sizes():
    with pytest.raises(PreconditionViolated):
        RainbowQuery(0, 2)
    with pytest.raises(PreconditionViolated):
        RainbowQuery(3, 2)


def test_cyclic_2x3_has_no_rainbow_square():
    assert find_rainbow(LatinRectangle([[0, 1, 2], [1, 2, 0]]), (2, 2)) is None


def test_rainbow_square_found():
    w = find_rainbow(LatinRectangle([[0, 1, 2, 3], [1, 0, 3, 2]]), (2, 2))
    assert (w.rows, w.cols) == ((0, 1), (0, 2))


def test_single_cell_always_rainbow(example):
    w = find_rainbow(example, (1, 1))
    assert (w.rows, w.cols) == ((0,), (0,))


def test_query_larger_than_grid():
    with pytest.raises(DimensionMismatch):
        find_rainbow(LatinRectangle([[0, 1]]), (2, 2))


def test_example_prefix_is_not_a_2x3_blocker(example):
    R = example.restrict(range(3), range(6))
    w = find_rainbow_either(R, (2, 3))
    assert w is not None and w.is_rainbow(R)


def test_cyclic_2x3_has_no_rainbow_2x3():
    assert find_rainbow_either(LatinRectangle([[0, 1, 2], [1, 2, 0]]), (2, 3)) is None


def test_example_blocks_3x2_but_not_2x2(example):
    assert find_rainbow_shape(example, 3, 2) is None
    w = find_rainbow_shape(example, 2, 2)
    assert len(set(w.symbols(example))) == 4


def test_tall_shape_reports_ba_orientation():
    R = LatinRectangle([[0, 1], [1, 0], [2, 3]])
    w = find_rainbow_shape(R, 2, 1)
    assert w.orientation == "ba" and w.is_rainbow(R)


def test_greedy_on_2x4_cyclic():
    R = LatinRectangle([[0, 1, 2, 3], [1, 2, 3, 0]])
    w = greedy_rainbow(R, (2, 2))
    assert (w.rows, w.cols) == ((0, 1), (0, 2))
    assert w.symbols(R) == [0, 2, 1, 3]


def test_greedy_single_row_takes_leftmost_columns():
    w = greedy_rainbow(LatinRectangle([[4, 2, 7, 1, 0]]), (1, 3))
    assert w.cols == (0, 1, 2)


def test_greedy_2x7_for_2x3():
    rng = random.Random(7)
    for _ in range(50):
        R = random_latin_rectangle(2, 7, rng)
        assert greedy_rainbow(R, (2, 3)).is_rainbow(R)


def test_greedy_needs_more_columns_than_the_bound():
    assert greedy_bound(2, 3) == 6
    with pytest.raises(PreconditionViolated):
        greedy_rainbow(LatinRectangle([[0, 1, 2, 3, 4, 5], [1, 2, 0, 4, 5, 3]]), (2, 3))


def _random_rect(seed, max_area=20):
    rng = random.Random(seed)
    while True:
        m, n = rng.randint(1, 5), rng.randint(1, 6)
        if m * n <= max_area:
            return random_latin_rectangle(m, n, rng)


@settings(max_examples=150, deadline=None)
@given(st.integers(0, 10**6))
def test_find_rainbow_matches_enumeration(seed):
    R = _random_rect(seed)
    grid = R.tolist()
    for a in range(1, R.rows + 1):
        for b in range(a, R.cols + 1):
            assert (find_rainbow(R, (a, b)) is None) == (not has_rainbow(grid, a, b))


@settings(max_examples=100, deadline=None)
@given(st.integers(0, 10**6))
def test_transpose_swaps_orientations(seed):
    R = _random_rect(seed)
    T = R.transpose()
    for h in range(1, R.rows + 1):
        for w in range(1, R.cols + 1):
            assert (find_rainbow_shape(R, h, w) is None) == (find_rainbow_shape(T, w, h) is None)


@settings(max_examples=100, deadline=None)
@given(st.integers(0, 10**6), st.permutations(range(40)))
def test_renaming_preserves_rainbow_status(seed, perm):
    R = _random_rect(seed)
    S = LatinRectangle(np.asarray(perm)[R.cells])
    for h in range(1, R.rows + 1):
        for rows in combinations(range(R.rows), h):
            for w in range(1, R.cols + 1):
                for cols in combinations(range(R.cols), w):
                    assert is_rainbow(R, rows, cols) == is_rainbow(S, rows, cols)
    assert canonical_relabel(S) == canonical_relabel(R)


@settings(max_examples=200, deadline=None)
@given(st.integers(0, 10**6), st.integers(1, 3), st.integers(0, 2))
def test_greedy_succeeds_above_the_bound(seed, a, extra_b):
    rng = random.Random(seed)
    b = a + extra_b
    n = greedy_bound(a, b) + 1 + rng.randint(0, 2)
    R = random_latin_rectangle(rng.randint(a, a + 2), n, rng)
    w = greedy_rainbow(R, (a, b))
    assert len(w.rows) == a and len(w.cols) == b
    assert w.is_rainbow(R)
    assert find_rainbow(R.restrict(w.rows, w.cols), (a, b)) is not None
