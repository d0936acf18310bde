import itertools
import random

import numpy as np
import pytest

from antiramsey import LatinRectangle, block_blocker, extend_rows, find_rainbow, find_rainbow_either, kron_blocker, singer_blocker
from antiramsey.constructions import (
    BlockerSpec,
    KronSpec,
    arrow_upper_bound,
    check_block_structure,
    cyclic_rectangle,
    kron_square,
    random_latin_rectangle,
)
from antiramsey.errors import BadParameters, MultiplierTooSmall, NotPrimePower, SymbolCountMismatch
from antiramsey.latin import canonical_relabel, find_rainbow_shape
from antiramsey.oracles import has_rainbow

CYCLIC_2 = LatinRectangle([[0, 1], [1, 0]])


def _equivalent(R, S):
    """Same rectangle after renaming symbols, rotating columns and reordering rows."""
    target = canonical_relabel(R)
    for perm in itertools.permutations(range(S.rows)):
        for shift in range(S.cols):
            moved = LatinRectangle(np.roll(S.cells[list(perm)], -shift, axis=1))
            if canonical_relabel(moved) == target:
                return True
    return False


@pytest.mark.parametrize("a", [2, 3, 4, 5, 6, 8, 9, 10])
def test_singer_blocker_shape_and_pairs(a):
    R = singer_blocker(a)
    assert R.shape == (a, a * a - a + 1)
    assert find_rainbow_shape(R, a, 2) is None
    cols = [set(R.cells[:, j].tolist()) for j in range(R.cols)]
    assert all(cols[i] & cols[j] for i in range(R.cols) for j in range(i + 1, R.cols))


def test_singer_blocker_a2():
    assert singer_blocker(2).tolist() == [[0, 1, 2], [1, 2, 0]]


def test_singer_blocker_a3_matches_example(example):
    R = singer_blocker(3)
    assert R.shape == (3, 7)
    assert _equivalent(example, R)


@pytest.mark.parametrize("a", [1, 7, 11])
def test_singer_blocker_needs_prime_power(a):
    with pytest.raises(NotPrimePower):
        singer_blocker(a)


def test_extend_single_row_to_square():
    S = extend_rows(LatinRectangle([[0, 1, 2]]), 3)
    assert S.shape == (3, 3) and S.tolist()[0] == [0, 1, 2]
    assert sorted(S.symbols()) == [0, 1, 2]


def test_extend_to_same_height_is_noop():
    R = singer_blocker(2)
    assert extend_rows(R, 2) == R


def test_extend_singer_3_to_six_rows():
    R = singer_blocker(3)
    S = extend_rows(R, 6)
    assert S.shape == (6, 7)
    assert np.array_equal(S.cells[:3], R.cells)


def test_extend_past_square_stacks_fresh_blocks():
    S = extend_rows(LatinRectangle([[0, 1, 2]]), 7)
    assert S.shape == (7, 3)
    assert set(S.cells[3:6].ravel().tolist()) == {3, 4, 5}
    assert set(S.cells[6].tolist()) == {6, 7, 8}


def test_extend_rejects_extra_symbols():
    with pytest.raises(SymbolCountMismatch):
        extend_rows(LatinRectangle([[0, 1, 2], [1, 0, 3]]), 3)
    with pytest.raises(BadParameters):
        extend_rows(singer_blocker(3), 2)


def test_random_extension_keeps_prefix():
    rng = random.Random(1)
    for _ in range(30):
        n = rng.randint(2, 8)
        first = rng.sample(range(n), n)
        R = LatinRectangle([first])
        S = extend_rows(R, rng.randint(1, 2 * n), rng)
        assert S.tolist()[0] == first


def test_random_latin_rectangle_shape():
    R = random_latin_rectangle(4, 6, random.Random(0))
    assert R.shape == (4, 6)


def test_block_blocker_2_3():
    assert block_blocker(2, 3).tolist() == [[0, 1, 2, 3, 4, 5], [1, 2, 0, 4, 5, 3]]


def test_block_blocker_2_2_is_a_single_row():
    R = block_blocker(2, 2)
    assert R.shape == (1, 3)


def test_block_blocker_needs_prime_power():
    with pytest.raises(NotPrimePower):
        BlockerSpec(7, 8)
    with pytest.raises(BadParameters):
        BlockerSpec(3, 2)


GOOD_BLOCKS = [(2, 2), (2, 3), (2, 4), (3, 3), (3, 4), (4, 4), (4, 5)]
# With b - 1 > a the rows added below the Singer block (fresh stacked rows for
# (2, 5), matched rows for (3, 5)) let some a-row slice of a block separate two
# columns, and a rainbow a x b appears.
BROKEN_BLOCKS = [(2, 5), (3, 5)]


@pytest.mark.parametrize("a,b", GOOD_BLOCKS + [
    pytest.param(a, b, marks=pytest.mark.xfail(strict=True, reason="row extension breaks the column-pair property"))
    for a, b in BROKEN_BLOCKS
])
def test_block_blocker_has_no_rainbow(a, b):
    R = block_blocker(a, b)
    assert R.shape == (b - 1, (a * a - a + 1) * (b - 1))
    assert check_block_structure(R, a, a * a - a + 1) is None
    assert find_rainbow_either(R, (a, b)) is None


@pytest.mark.parametrize("a,b", BROKEN_BLOCKS)
def test_broken_block_blockers_exhibit_a_rainbow(a, b):
    R = block_blocker(a, b)
    w = find_rainbow(R, (a, b))
    assert w is not None and w.is_rainbow(R)
    assert check_block_structure(R, a, a * a - a + 1) is not None


def test_block_blocker_3_4_shape():
    assert block_blocker(3, 4).shape == (3, 21)


def test_kron_4x6_blocks_3x3():
    K = kron_blocker(singer_blocker(2), CYCLIC_2, 3)
    assert K.tolist() == [
        [0, 1, 2, 3, 4, 5],
        [1, 2, 0, 4, 5, 3],
        [3, 4, 5, 0, 1, 2],
        [4, 5, 3, 1, 2, 0],
    ]
    assert not has_rainbow(K.tolist(), 3, 3)
    assert find_rainbow(K, (3, 3)) is None


def test_kron_with_trivial_b_is_identity():
    A = singer_blocker(3)
    assert kron_blocker(A, LatinRectangle([[0]])) == A


def test_kron_with_trivial_a():
    assert kron_blocker(LatinRectangle([[0]]), CYCLIC_2, 1).tolist() == [[0, 1], [1, 0]]


def test_kron_multiplier_must_clear_a():
    with pytest.raises(MultiplierTooSmall):
        KronSpec(singer_blocker(2), CYCLIC_2, 2)


def test_kron_square_requires_square_b():
    with pytest.raises(BadParameters):
        kron_square(singer_blocker(2), LatinRectangle([[0, 1]]))


# (A, (a, b) blocked by A, B); outputs have area <= 36 so the oracle is exhaustive
KRON_CASES = [
    (singer_blocker(2), (2, 2), CYCLIC_2),
    (singer_blocker(2), (2, 2), LatinRectangle([[0, 1]])),
    (singer_blocker(2), (2, 2), LatinRectangle([[0], [1]])),
    (block_blocker(2, 3), (2, 3), LatinRectangle([[0], [1]])),
    (block_blocker(2, 3), (2, 3), LatinRectangle([[0, 1, 2]])),
    (singer_blocker(3), (3, 2), LatinRectangle([[0], [1]])),
]


@pytest.mark.parametrize("A, ab, B", KRON_CASES)
def test_kron_product_blocks_larger_shape(A, ab, B):
    a, b = ab
    assert not has_rainbow(A.tolist(), a, b)
    K = kron_blocker(A, B)
    r, s = B.shape
    assert K.shape == (r * A.rows, s * A.cols)
    h, w = r * (a - 1) + 1, s * (b - 1) + 1
    if h <= K.rows and w <= K.cols:
        assert not has_rainbow(K.tolist(), h, w)


def test_arrow_upper_bound():
    assert arrow_upper_bound(2, 2) == (2, 4)
    assert arrow_upper_bound(2, 3) == (2, 7)
    assert arrow_upper_bound(3, 3) == (3, 15)


def test_cyclic_rectangle():
    assert cyclic_rectangle(2, 3).tolist() == [[0, 1, 2], [1, 2, 0]]
    with pytest.raises(BadParameters):
        cyclic_rectangle(3, 2)


@pytest.mark.parametrize("R", [singer_blocker(4), block_blocker(3, 4), kron_blocker(singer_blocker(3), singer_blocker(2)),
                               extend_rows(singer_blocker(3), 10)])
def test_outputs_are_latin(R):
    LatinRectangle(R.tolist())
