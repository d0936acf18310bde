"""Latin rectangles and rainbow subrectangles.

An m x n latin rectangle is the same thing as a proper edge-coloring of the
complete bipartite graph K_{m,n}: rows are the vertices of one side, columns
the vertices of the other, and the symbol in cell (i, j) is the color of the
edge between them.  Symbols are nonnegative integers and the palette is not
limited to n.

A subrectangle is *rainbow* when all of its symbols are pairwise distinct.
Because rows and columns of a latin rectangle never repeat, an h x w
subrectangle is rainbow exactly when the symbol sets of its w columns
(restricted to the h rows) are pairwise disjoint; the searches below work on
that reformulation with integer bitmasks.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Optional, Sequence

import numpy as np

from .errors import (
    ColRepeat,
    DimensionMismatch,
    InvariantFailed,
    NegativeSymbol,
    PreconditionViolated,
    RaggedGrid,
    RowRepeat,
)

__all__ = [
    "LatinRectangle",
    "RainbowQuery",
    "SubrectangleWitness",
    "new_from_grid",
    "canonical_relabel",
    "is_rainbow",
    "find_rainbow",
    "find_rainbow_either",
    "find_rainbow_shape",
    "greedy_rainbow",
    "greedy_bound",
]


class LatinRectangle:
    """Immutable m x n latin rectangle.

    Construction validates the grid; use :func:`new_from_grid` or the
    constructor directly.  ``cells`` is a read-only ``int64`` array.
    """

    __slots__ = ("_cells",)

    def __init__(self, grid: Sequence[Sequence[int]] | np.ndarray):
        cells = _to_array(grid)
        _check_latin(cells)
        cells.setflags(write=False)
        self._cells = cells

    @property
    def cells(self) -> np.ndarray:
        return self._cells

    @property
    def rows(self) -> int:
        return self._cells.shape[0]

    @property
    def cols(self) -> int:
        return self._cells.shape[1]

    @property
    def shape(self) -> tuple[int, int]:
        return self.rows, self.cols

    def symbols(self) -> list[int]:
        return sorted({int(s) for s in self._cells.flat})

    def tolist(self) -> list[list[int]]:
        return self._cells.tolist()

    def transpose(self) -> "LatinRectangle":
        return LatinRectangle(self._cells.T.copy())

    def restrict(self, rows: Iterable[int], cols: Iterable[int]) -> "LatinRectangle":
        """The subrectangle at the intersection of ``rows`` and ``cols``."""
        return LatinRectangle(self._cells[np.ix_(list(rows), list(cols))])

    def __getitem__(self, idx):
        return self._cells[idx]

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, LatinRectangle):
            return NotImplemented
        return self.shape == other.shape and bool(np.array_equal(self._cells, other._cells))

    def __hash__(self) -> int:
        return hash((self.shape, self._cells.tobytes()))

    def __repr__(self) -> str:
        return f"LatinRectangle({self.tolist()!r})"

    def __str__(self) -> str:
        return "\n".join(" ".join(str(s) for s in row) for row in self.tolist())


def _to_array(grid) -> np.ndarray:
    if isinstance(grid, np.ndarray):
        if grid.ndim != 2:
            raise RaggedGrid(f"expected a 2-d grid, got shape {grid.shape}")
        if grid.size and not np.issubdtype(grid.dtype, np.integer):
            raise RaggedGrid(f"grid entries must be integers, got dtype {grid.dtype}")
        cells = grid.astype(np.int64, copy=True)
    else:
        rows = [list(r) for r in grid]
        if not rows or any(len(r) != len(rows[0]) for r in rows):
            raise RaggedGrid("grid rows must be non-empty and of equal length")
        for r in rows:
            for x in r:
                if isinstance(x, bool) or not isinstance(x, (int, np.integer)):
                    raise RaggedGrid(f"grid entry {x!r} is not an integer")
        cells = np.array(rows, dtype=np.int64)
    if cells.shape[0] == 0 or cells.shape[1] == 0:
        raise RaggedGrid("grid must have at least one row and one column")
    if (cells < 0).any():
        raise NegativeSymbol("symbols must be nonnegative")
    return cells


def _check_latin(cells: np.ndarray) -> None:
    m, n = cells.shape
    for i in range(m):
        seen = set()
        for s in cells[i].tolist():
            if s in seen:
                raise RowRepeat(i, s)
            seen.add(s)
    for j in range(n):
        seen = set()
        for s in cells[:, j].tolist():
            if s in seen:
                raise ColRepeat(j, s)
            seen.add(s)


def new_from_grid(grid) -> LatinRectangle:
    """Validate ``grid`` and wrap it as a :class:`LatinRectangle`.

    Raises RaggedGrid, RowRepeat or ColRepeat.
    """
    return LatinRectangle(grid)


def canonical_relabel(R: LatinRectangle) -> LatinRectangle:
    """Rename symbols 0, 1, 2, ... in order of first row-major occurrence."""
    mapping: dict[int, int] = {}
    out = []
    for row in R.tolist():
        new_row = []
        for s in row:
            if s not in mapping:
                mapping[s] = len(mapping)
            new_row.append(mapping[s])
        out.append(new_row)
    return LatinRectangle(out)


@dataclass(frozen=True)
class RainbowQuery:
    """Target K_{a,b}: a x b subrectangles with a <= b."""

    a: int
    b: int

    def __post_init__(self):
        if self.a < 1 or self.b < 1:
            raise PreconditionViolated(f"query sizes must be positive, got ({self.a}, {self.b})")
        if self.a > self.b:
            raise PreconditionViolated(f"query requires a <= b, got ({self.a}, {self.b})")

    @classmethod
    def of(cls, q) -> "RainbowQuery":
        if isinstance(q, RainbowQuery):
            return q
        a, b = q
        return cls(int(a), int(b))


@dataclass(frozen=True)
class SubrectangleWitness:
    """Row and column indices of a subrectangle.

    ``orientation`` is ``"ab"`` when the subrectangle has a rows and b
    columns, ``"ba"`` when it has b rows and a columns.
    """

    rows: tuple[int, ...]
    cols: tuple[int, ...]
    orientation: str = "ab"

    def __post_init__(self):
        object.__setattr__(self, "rows", tuple(int(r) for r in self.rows))
        object.__setattr__(self, "cols", tuple(int(c) for c in self.cols))
        if list(self.rows) != sorted(set(self.rows)) or list(self.cols) != sorted(set(self.cols)):
            raise ValueError("witness indices must be sorted and distinct")
        if self.orientation not in ("ab", "ba"):
            raise ValueError(f"unknown orientation {self.orientation!r}")

    def symbols(self, R: LatinRectangle) -> list[int]:
        return [int(R.cells[r, c]) for r in self.rows for c in self.cols]

    def is_rainbow(self, R: LatinRectangle) -> bool:
        return is_rainbow(R, self.rows, self.cols)


def is_rainbow(R: LatinRectangle, rows: Sequence[int], cols: Sequence[int]) -> bool:
    """True when the intersection of ``rows`` and ``cols`` has no repeated symbol."""
    if any(not 0 <= r < R.rows for r in rows) or any(not 0 <= c < R.cols for c in cols):
        raise DimensionMismatch("witness index out of range")
    block = R.cells[np.ix_(list(rows), list(cols))]
    return len(np.unique(block)) == block.size


# --- search -----------------------------------------------------------------

def _dense_rows(R: LatinRectangle) -> list[list[int]]:
    _, inverse = np.unique(R.cells, return_inverse=True)
    return inverse.reshape(R.shape).tolist()


def _pack_columns(masks: Sequence[int], need: int) -> Optional[tuple[int, ...]]:
    """Lexicographically first ``need`` columns with pairwise disjoint masks."""
    n = len(masks)
    chosen: list[int] = []

    def dfs(start: int, acc: int) -> bool:
        if len(chosen) == need:
            return True
        # not enough columns left to finish
        for c in range(start, n - (need - len(chosen)) + 1):
            mk = masks[c]
            if acc & mk:
                continue
            chosen.append(c)
            if dfs(c + 1, acc | mk):
                return True
            chosen.pop()
        return False

    return tuple(chosen) if dfs(0, 0) else None


def _find_oriented(rows_data: list[list[int]], h: int, w: int):
    m, n = len(rows_data), len(rows_data[0])
    for rows in combinations(range(m), h):
        masks = [0] * n
        for r in rows:
            line = rows_data[r]
            for c in range(n):
                masks[c] |= 1 << line[c]
        cols = _pack_columns(masks, w)
        if cols is not None:
            return rows, cols
    return None


def find_rainbow(R: LatinRectangle, q) -> Optional[SubrectangleWitness]:
    """Find a rainbow subrectangle with ``q.a`` rows and ``q.b`` columns.

    Row subsets are tried in lexicographic order; for each, columns are
    accumulated left to right with backtracking.  Returns ``None`` when no
    such subrectangle exists.
    """
    q = RainbowQuery.of(q)
    if q.a > R.rows or q.b > R.cols:
        raise DimensionMismatch(
            f"query {q.a}x{q.b} does not fit in a {R.rows}x{R.cols} rectangle"
        )
    hit = _find_oriented(_dense_rows(R), q.a, q.b)
    if hit is None:
        return None
    return SubrectangleWitness(hit[0], hit[1], "ab")


def find_rainbow_either(R: LatinRectangle, q) -> Optional[SubrectangleWitness]:
    """Search both the a x b and the b x a orientation.

    Orientations that do not fit inside ``R`` are skipped.  The witness
    records which orientation was found.
    """
    q = RainbowQuery.of(q)
    rows_data = None
    for h, w, tag in ((q.a, q.b, "ab"), (q.b, q.a, "ba")):
        if tag == "ba" and q.a == q.b:
            break
        if h > R.rows or w > R.cols:
            continue
        if rows_data is None:
            rows_data = _dense_rows(R)
        hit = _find_oriented(rows_data, h, w)
        if hit is not None:
            return SubrectangleWitness(hit[0], hit[1], tag)
    return None


def find_rainbow_shape(R: LatinRectangle, h: int, w: int) -> Optional[SubrectangleWitness]:
    """Rainbow subrectangle with exactly ``h`` rows and ``w`` columns, any h, w >= 1.

    For h > w the search runs on the transpose; the witness is reported in
    the coordinates of ``R`` with orientation ``"ba"``.
    """
    if h <= w:
        return find_rainbow(R, (h, w))
    if h > R.rows or w > R.cols:
        raise DimensionMismatch(f"{h}x{w} does not fit in a {R.rows}x{R.cols} rectangle")
    hit = find_rainbow(R.transpose(), (w, h))
    if hit is None:
        return None
    return SubrectangleWitness(hit.cols, hit.rows, "ba")


def greedy_bound(a: int, b: int) -> int:
    """Column count beyond which every a-row latin rectangle has a rainbow a x b."""
    return (a * a - a + 1) * (b - 1)


def greedy_rainbow(R: LatinRectangle, q) -> SubrectangleWitness:
    """Rainbow a x b subrectangle in the first a rows, built column by column.

    Starting from column 0, each column whose symbols (in the first a rows)
    avoid everything collected so far is annexed, until b columns are held.
    When ``R.cols > (a^2 - a + 1)(b - 1)`` the counting argument guarantees
    success: t collected columns carry a*t symbols, each of which shows up in
    at most a - 1 other columns, so fewer than n - t columns are blocked.
    """
    q = RainbowQuery.of(q)
    a, b = q.a, q.b
    if R.rows < a:
        raise PreconditionViolated(f"need at least {a} rows, have {R.rows}")
    if R.cols <= greedy_bound(a, b):
        raise PreconditionViolated(
            f"greedy guarantee needs more than {greedy_bound(a, b)} columns, have {R.cols}"
        )
    top = R.cells[:a]
    acc: set[int] = set()
    cols: list[int] = []
    for c in range(R.cols):
        col = set(top[:, c].tolist())
        if acc.isdisjoint(col):
            acc |= col
            cols.append(c)
            if len(cols) == b:
                return SubrectangleWitness(tuple(range(a)), tuple(cols), "ab")
    raise InvariantFailed("greedy annexation stalled despite the column bound")
