"""Slow, independent reference checks.

Nothing here shares code with the optimized searches in :mod:`.latin` and
:mod:`.decide`; these routines exist to cross-validate them.
"""

from __future__ import annotations

from itertools import combinations
from typing import Iterable, Iterator, Optional, Sequence


def rainbow_subrectangles(grid: Sequence[Sequence[int]], h: int, w: int) -> Iterator[tuple[tuple[int, ...], tuple[int, ...]]]:
    """Every (rows, cols) pair of an h x w rainbow subrectangle, by full enumeration."""
    m, n = len(grid), len(grid[0])
    if h > m or w > n:
        return
    for rows in combinations(range(m), h):
        for cols in combinations(range(n), w):
            cells = [grid[r][c] for r in rows for c in cols]
            if len(set(cells)) == h * w:
                yield rows, cols


def has_rainbow(grid, h: int, w: int) -> bool:
    return next(rainbow_subrectangles(grid, h, w), None) is not None


def is_blocker(grid, a: int, b: int) -> bool:
    """No rainbow a x b and no rainbow b x a (orientations that do not fit are vacuous)."""
    return not has_rainbow(grid, a, b) and not has_rainbow(grid, b, a)


def canonical_fillings(m: int, n: int) -> Iterator[list[list[int]]]:
    """All m x n latin rectangles whose symbols first appear as 0, 1, 2, ... row-major."""
    grid = [[None] * n for _ in range(m)]

    def rec(k: int, used: int):
        if k == m * n:
            yield [row[:] for row in grid]
            return
        i, j = divmod(k, n)
        taken = set(grid[i][:j]) | {grid[r][j] for r in range(i)}
        for s in range(used + 1):
            if s in taken:
                continue
            grid[i][j] = s
            yield from rec(k + 1, max(used, s + 1))
        grid[i][j] = None

    yield from rec(0, 0)


def brute_force_arrows(m: int, n: int, queries: Iterable[tuple[int, int]]) -> dict[tuple[int, int], tuple[bool, Optional[list[list[int]]]]]:
    """Verdict for each (a, b): (arrows, first blocker or None), with no pruning at all."""
    pending = {tuple(q) for q in queries}
    result: dict[tuple[int, int], tuple[bool, Optional[list[list[int]]]]] = {}
    for grid in canonical_fillings(m, n):
        for q in list(pending):
            if is_blocker(grid, *q):
                result[q] = (False, grid)
                pending.discard(q)
        if not pending:
            break
    for q in pending:
        result[q] = (True, None)
    return result


def brute_force_arrow(m: int, n: int, a: int, b: int) -> tuple[bool, Optional[list[list[int]]]]:
    return brute_force_arrows(m, n, [(a, b)])[(a, b)]


def first_difference_set(n: int, size: int) -> Optional[tuple[int, ...]]:
    """Lexicographically first ``size``-subset of Z_n with 0 whose differences cover Z_n* once."""
    for rest in combinations(range(1, n), size - 1):
        d = (0,) + rest
        diffs = sorted((x - y) % n for x in d for y in d if x != y)
        if diffs == list(range(1, n)):
            return d
    return None
