"""Blocker constructions: latin rectangles that avoid rainbow subrectangles."""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Optional

import numpy as np

from .algebra import PrimePower, singer_difference_set
from .errors import (
    BadParameters,
    MultiplierTooSmall,
    NotPrimePower,
    SymbolCountMismatch,
)
from .latin import LatinRectangle, SubrectangleWitness, find_rainbow_shape, greedy_bound

__all__ = [
    "BlockerSpec",
    "KronSpec",
    "singer_blocker",
    "extend_rows",
    "block_blocker",
    "check_block_structure",
    "kron_blocker",
    "kron_square",
    "arrow_upper_bound",
    "cyclic_rectangle",
    "random_latin_rectangle",
]


@dataclass(frozen=True)
class BlockerSpec:
    a: int
    b: int

    def __post_init__(self):
        if self.a < 2 or self.b < self.a:
            raise BadParameters(f"need 2 <= a <= b, got a={self.a}, b={self.b}")
        PrimePower.of(self.a - 1)

    @property
    def q(self) -> PrimePower:
        return PrimePower.of(self.a - 1)


@dataclass(frozen=True)
class KronSpec:
    A: LatinRectangle
    B: LatinRectangle
    t: int

    def __post_init__(self):
        top = int(self.A.cells.max())
        if self.t < top + 1:
            raise MultiplierTooSmall(f"t={self.t} must exceed every entry of A (max {top})")


def singer_blocker(a: int) -> LatinRectangle:
    """a x (a^2 - a + 1) latin rectangle in which every two columns share a symbol.

    Row i is the cyclic sequence d_i, d_i + 1, ... (mod n) for the i-th element
    of a planar difference set D; column j holds the translate D + j.
    """
    if a < 2:
        raise NotPrimePower(f"a - 1 = {a - 1} is not a prime power")
    D = singer_difference_set(a - 1)
    n = D.modulus
    return LatinRectangle([[(d + j) % n for j in range(n)] for d in D.residues])


def cyclic_rectangle(m: int, n: int, offset: int = 0) -> LatinRectangle:
    """m x n rectangle (i + j) mod n; uses exactly n symbols when m <= n."""
    if m > n:
        raise BadParameters(f"cyclic rectangle needs m <= n, got {m}x{n}")
    return LatinRectangle([[offset + (i + j) % n for j in range(n)] for i in range(m)])


def _perfect_matching(allowed: list[list[int]], order: list[int]) -> dict[int, int]:
    """Kuhn's augmenting paths; ``allowed[c]`` lists symbols admissible in column c."""
    owner: dict[int, int] = {}

    def augment(c: int, seen: set[int]) -> bool:
        for s in allowed[c]:
            if s in seen:
                continue
            seen.add(s)
            if s not in owner or augment(owner[s], seen):
                owner[s] = c
                return True
        return False

    for c in order:
        if not augment(c, set()):
            raise SymbolCountMismatch(f"no perfect matching for column {c}")
    return {c: s for s, c in owner.items()}


def extend_rows(R: LatinRectangle, target_m: int, rng: Optional[random.Random] = None) -> LatinRectangle:
    """Append rows to an m x n latin rectangle on exactly n symbols.

    Up to n rows, each new row is a perfect matching between columns and the
    symbols each column is still missing (Hall's condition holds because the
    column/missing-symbol graph is regular).  Past n rows, cyclic n x n squares
    on fresh symbol blocks are stacked.  ``rng`` randomizes the matching.
    """
    n = R.cols
    symbols = R.symbols()
    if len(symbols) != n:
        raise SymbolCountMismatch(f"rectangle uses {len(symbols)} symbols, expected exactly {n}")
    if target_m < R.rows:
        raise BadParameters(f"target {target_m} is smaller than the current {R.rows} rows")
    rows = R.tolist()
    col_used = [set(R.cells[:, c].tolist()) for c in range(n)]
    while len(rows) < min(target_m, n):
        allowed = [[s for s in symbols if s not in col_used[c]] for c in range(n)]
        order = list(range(n))
        if rng is not None:
            rng.shuffle(order)
            for lst in allowed:
                rng.shuffle(lst)
        match = _perfect_matching(allowed, order)
        row = [match[c] for c in range(n)]
        for c, s in enumerate(row):
            col_used[c].add(s)
        rows.append(row)
    base = max(symbols) + 1
    for r in range(len(rows), target_m):
        k, off = divmod(r - n, n)
        rows.append([base + k * n + (off + j) % n for j in range(n)])
    return LatinRectangle(rows)


def random_latin_rectangle(m: int, n: int, rng: random.Random) -> LatinRectangle:
    """Random m x n latin rectangle: a random row, extended, then shuffled and relabeled."""
    first = list(range(n))
    rng.shuffle(first)
    R = extend_rows(LatinRectangle([first]), m, rng)
    rows = list(range(m))
    cols = list(range(n))
    rng.shuffle(rows)
    rng.shuffle(cols)
    symbols = R.symbols()
    renamed = rng.sample(range(2 * len(symbols)), len(symbols))
    relabel = dict(zip(symbols, renamed))
    cells = R.cells[np.ix_(rows, cols)]
    return LatinRectangle([[relabel[int(s)] for s in row] for row in cells])


def block_blocker(a: int, b: int) -> LatinRectangle:
    """(b-1) x (a^2-a+1)(b-1) rectangle built from b-1 palette-disjoint blocks.

    Each block is the Singer blocker for a, extended (or cut) to b-1 rows, with
    its symbols shifted by a multiple of the block palette size.  The b columns
    of an a x b subrectangle spread over b-1 blocks put two columns in one
    block, so the result avoids rainbow a x b subrectangles whenever every
    a-row slice of a block keeps the two-columns-share-a-symbol property.
    That holds for b - 1 <= a, and for a = 2, b = 4; see
    :func:`check_block_structure` for the other cases.
    """
    spec = BlockerSpec(a, b)
    m = spec.b - 1
    block = singer_blocker(spec.a)
    if m >= block.rows:
        block = extend_rows(block, m)
    else:
        block = block.restrict(range(m), range(block.cols))
    palette = len(block.symbols())
    cells = np.hstack([block.cells + k * palette for k in range(m)])
    return LatinRectangle(cells)


def check_block_structure(R: LatinRectangle, a: int, width: int) -> Optional[tuple[int, SubrectangleWitness]]:
    """First block (and its rainbow a x 2 slice) breaking the pigeonhole argument.

    ``R`` is read as consecutive blocks of ``width`` columns.  Returns ``None``
    when, inside every block, every a-row slice of every column pair repeats a
    symbol.
    """
    if R.cols % width:
        raise BadParameters(f"{R.cols} columns do not split into blocks of {width}")
    if a > R.rows or width < 2:
        return None
    for k in range(R.cols // width):
        blk = R.restrict(range(R.rows), range(k * width, (k + 1) * width))
        w = find_rainbow_shape(blk, a, 2)
        if w is not None:
            return k, SubrectangleWitness(w.rows, tuple(k * width + c for c in w.cols), w.orientation)
    return None


def kron_blocker(A: LatinRectangle, B: LatinRectangle, t: Optional[int] = None) -> LatinRectangle:
    """A' = J (x) A + t B (x) J: an rm x sn rectangle made of shifted copies of A.

    Block (i, j) is A + t*B[i, j].  With t above every entry of A, blocks with
    different B entries share no symbol.  If A has no rainbow a x b then A'
    has no rainbow (r(a-1)+1) x (s(b-1)+1).
    """
    if t is None:
        t = int(A.cells.max()) + 1
    spec = KronSpec(A, B, int(t))
    ones_b = np.ones(spec.B.shape, dtype=np.int64)
    ones_a = np.ones(spec.A.shape, dtype=np.int64)
    return LatinRectangle(np.kron(ones_b, spec.A.cells) + spec.t * np.kron(spec.B.cells, ones_a))


def kron_square(A: LatinRectangle, B: LatinRectangle, t: Optional[int] = None) -> LatinRectangle:
    """:func:`kron_blocker` with a square B, the r = s case used for K_{rm,rn}."""
    if B.rows != B.cols:
        raise BadParameters(f"B must be square, got {B.rows}x{B.cols}")
    return kron_blocker(A, B, t)


def arrow_upper_bound(a: int, b: int) -> tuple[int, int]:
    """Host (m, n) = (a, (a^2-a+1)(b-1)+1) that always contains a rainbow K_{a,b}."""
    if not 1 <= a <= b:
        raise BadParameters(f"need 1 <= a <= b, got a={a}, b={b}")
    return a, greedy_bound(a, b) + 1
