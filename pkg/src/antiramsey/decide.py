"""Exhaustive decision of the arrow relation K_{m,n} ->_R K_{a,b}.

The search looks for a *blocker*: an m x n latin rectangle with no rainbow
a x b and no rainbow b x a subrectangle.  Finding one proves
K_{m,n} does not arrow K_{a,b}; exhausting the space proves it does.

Cells are filled in row-major order.  A cell may take any symbol already in
use that is legal in its row and column, or exactly one fresh symbol (the
next unused integer).  Every proper coloring is a color renaming of exactly
one such filling, so nothing is lost; the first row is forced to
0, 1, ..., n-1.  Each rainbow subrectangle has a unique last-filled cell (its
bottom-right corner), so checking only subrectangles anchored at the cell just
placed prunes every rainbow as early as possible.

Column symmetry is quotiented on the second row.  Permuting columns and
renaming the row-0 symbols to match keeps row 0 equal to 0..n-1 and maps
canonical fillings to canonical fillings.  Reading row 1 as a partial map
column -> column (an old symbol s sits below row-0 column s; a fresh symbol
ends a chain), two second rows are equivalent exactly when these functional
graphs are isomorphic: the same multiset of cycle lengths and chain lengths.
Only one second row per isomorphism type is searched.
"""

from __future__ import annotations

import logging
import multiprocessing as mp
import time
import warnings
from concurrent.futures import FIRST_COMPLETED, ProcessPoolExecutor, wait
from dataclasses import dataclass, field
from itertools import combinations
from typing import Iterator, Optional, Sequence

from .constructions import cyclic_rectangle
from .errors import BudgetExhausted, InvariantFailed, LatinError, PreconditionViolated
from .latin import LatinRectangle, SubrectangleWitness, _find_oriented, find_rainbow_either

log = logging.getLogger(__name__)

DEFAULT_MAX_NODES = 200_000_000
DEFAULT_SIZE_CAP = 24
_STOP_POLL = 4096


@dataclass(frozen=True)
class SearchConfig:
    max_nodes: int = DEFAULT_MAX_NODES
    workers: int = 1
    column_symmetry_pruning: bool = True
    incremental_rainbow_check: bool = True
    size_cap: int = DEFAULT_SIZE_CAP

    def __post_init__(self):
        if self.workers < 1:
            raise PreconditionViolated(f"workers must be >= 1, got {self.workers}")
        if self.max_nodes < 1:
            raise PreconditionViolated(f"max_nodes must be >= 1, got {self.max_nodes}")


@dataclass(frozen=True)
class ArrowDecision:
    m: int
    n: int
    a: int
    b: int
    arrows: bool
    certificate: Optional[LatinRectangle]
    nodes_explored: int
    elapsed: float
    config_echo: SearchConfig = field(default_factory=SearchConfig)
    infeasible: bool = False

    @property
    def ms(self) -> float:
        return self.elapsed * 1000.0


@dataclass(frozen=True)
class CertificateVerdict:
    ok: bool
    reason: str = ""
    witness: Optional[SubrectangleWitness] = None

    def __bool__(self) -> bool:
        return self.ok


def rainbow_shapes(m: int, n: int, a: int, b: int) -> list[tuple[int, int]]:
    """The (rows, cols) orientations of K_{a,b} that fit inside an m x n grid."""
    shapes = []
    if a <= m and b <= n:
        shapes.append((a, b))
    if a != b and b <= m and a <= n:
        shapes.append((b, a))
    return shapes


def verify_certificate(R, m: int, n: int, a: int, b: int) -> CertificateVerdict:
    """Independent re-check that ``R`` blocks K_{a,b} inside K_{m,n}."""
    if not isinstance(R, LatinRectangle):
        try:
            R = LatinRectangle(R)
        except LatinError as exc:
            return CertificateVerdict(False, f"not latin: {exc}")
    if R.shape != (m, n):
        return CertificateVerdict(False, f"shape {R.rows}x{R.cols} differs from {m}x{n}")
    w = find_rainbow_either(R, (a, b))
    if w is not None:
        return CertificateVerdict(False, "rainbow subrectangle found", w)
    return CertificateVerdict(True)


# --- second-row representatives ---------------------------------------------

def _partitions(total: int, min_part: int, max_part: Optional[int] = None) -> Iterator[tuple[int, ...]]:
    if max_part is None:
        max_part = total
    if total == 0:
        yield ()
        return
    for first in range(min(total, max_part), min_part - 1, -1):
        for rest in _partitions(total - first, min_part, first):
            yield (first,) + rest


def second_row_representatives(n: int) -> list[list[int]]:
    """One canonical second row per column-permutation class.

    Cycles come first (longest first), then chains; every chain ends in a
    fresh symbol, numbered n, n+1, ... left to right.
    """
    reps = []
    for cyc_total in range(n, -1, -1):
        for cycles in _partitions(cyc_total, 2):
            for chains in _partitions(n - cyc_total, 1):
                row: list[int] = [0] * n
                col = 0
                for length in cycles:
                    for t in range(length):
                        row[col + t] = col + (t + 1) % length
                    col += length
                fresh = n
                for length in chains:
                    for t in range(length - 1):
                        row[col + t] = col + t + 1
                    row[col + length - 1] = fresh
                    fresh += 1
                    col += length
                reps.append(row)
    return reps


# --- search core ------------------------------------------------------------

class _Budget(Exception):
    pass


class _Stopped(Exception):
    pass


_stop_event = None


def _init_worker(event) -> None:
    global _stop_event
    _stop_event = event


class _Search:
    """Depth-first completion of a canonical prefix."""

    def __init__(self, m: int, n: int, shapes: Sequence[tuple[int, int]], incremental: bool,
                 max_nodes: int, stop=None):
        self.m, self.n = m, n
        self.shapes = list(shapes)
        self.incremental = incremental
        self.max_nodes = max_nodes
        self.stop = stop
        self.nodes = 0
        self.grid = [[-1] * n for _ in range(m)]
        self.row_mask = [0] * m
        self.col_mask = [0] * n
        self.nsym = 0
        self.found: Optional[list[list[int]]] = None

    def _place(self, i: int, j: int, s: int) -> None:
        self.grid[i][j] = s
        bit = 1 << s
        self.row_mask[i] |= bit
        self.col_mask[j] |= bit
        if s == self.nsym:
            self.nsym += 1

    def _unplace(self, i: int, j: int, s: int, fresh: bool) -> None:
        self.grid[i][j] = -1
        bit = ~(1 << s)
        self.row_mask[i] &= bit
        self.col_mask[j] &= bit
        if fresh:
            self.nsym -= 1

    def _tick(self) -> None:
        self.nodes += 1
        if self.nodes > self.max_nodes:
            raise _Budget
        if self.stop is not None and self.nodes % _STOP_POLL == 0 and self.stop.is_set():
            raise _Stopped

    def rainbow_at(self, i: int, j: int) -> bool:
        """Is some rainbow target subrectangle anchored at (i, j)?"""
        grid = self.grid
        for h, w in self.shapes:
            if i + 1 < h or j + 1 < w:
                continue
            for rows in _subsets_ending(i, h):
                masks = [0] * (j + 1)
                for r in rows:
                    line = grid[r]
                    for c in range(j + 1):
                        masks[c] |= 1 << line[c]
                target = masks[j]
                need = w - 1
                if need == 0:
                    return True
                cand = [mk for mk in masks[:j] if not mk & target]
                if len(cand) >= need and _can_pack(cand, need, 0, target):
                    return True
        return False

    def full_check(self) -> bool:
        for h, w in self.shapes:
            if _find_oriented(self.grid, h, w) is not None:
                return True
        return False

    def load_prefix(self, prefix: Sequence[int]) -> bool:
        """Place ``prefix`` (row-major).  False if it already holds a rainbow."""
        n = self.n
        for k, s in enumerate(prefix):
            i, j = divmod(k, n)
            self._tick()
            self._place(i, j, s)
            if self.incremental and self.rainbow_at(i, j):
                return False
        return True

    def run(self, start: int) -> bool:
        total = self.m * self.n
        n = self.n

        def dfs(k: int) -> bool:
            if k == total:
                if not self.incremental and self.full_check():
                    return False
                self.found = [row[:] for row in self.grid]
                return True
            i, j = divmod(k, n)
            used = self.row_mask[i] | self.col_mask[j]
            top = self.nsym
            for s in range(top + 1):
                if s < top and (used >> s) & 1:
                    continue
                self._tick()
                self._place(i, j, s)
                if not (self.incremental and self.rainbow_at(i, j)):
                    if dfs(k + 1):
                        return True
                self._unplace(i, j, s, s == top)
            return False

        return dfs(start)


def _subsets_ending(i: int, h: int) -> Iterator[tuple[int, ...]]:
    """Row subsets of size h whose largest element is i."""
    if h == 1:
        yield (i,)
        return
    for rest in combinations(range(i), h - 1):
        yield rest + (i,)


def _can_pack(masks: list[int], need: int, start: int, acc: int) -> bool:
    if need == 0:
        return True
    for idx in range(start, len(masks) - need + 1):
        mk = masks[idx]
        if not mk & acc and _can_pack(masks, need - 1, idx + 1, acc | mk):
            return True
    return False


def _run_task(args) -> tuple[str, int, Optional[list[list[int]]]]:
    m, n, shapes, incremental, max_nodes, prefix = args
    s = _Search(m, n, shapes, incremental, max_nodes, _stop_event)
    try:
        if not s.load_prefix(prefix):
            return "exhausted", s.nodes, None
        if s.run(len(prefix)):
            return "blocker", s.nodes, s.found
        return "exhausted", s.nodes, None
    except _Budget:
        return "budget", s.nodes, None
    except _Stopped:
        return "stopped", s.nodes, None


def _tasks(m: int, n: int, config: SearchConfig) -> list[tuple[int, ...]]:
    first = tuple(range(n))
    if m == 1:
        return [first]
    if config.column_symmetry_pruning:
        return [first + tuple(row) for row in second_row_representatives(n)]
    # every canonical second row: old symbols other than the column's own, or one fresh
    out: list[tuple[int, ...]] = []

    def rec(j: int, row: list[int], used: set[int], fresh: int) -> None:
        if j == n:
            out.append(first + tuple(row))
            return
        for s in range(n):
            if s != j and s not in used:
                used.add(s)
                row.append(s)
                rec(j + 1, row, used, fresh)
                row.pop()
                used.discard(s)
        row.append(fresh)
        rec(j + 1, row, used, fresh + 1)
        row.pop()

    rec(0, [], set(), n)
    return out


def decide_arrow(m: int, n: int, a: int, b: int, config: Optional[SearchConfig] = None) -> ArrowDecision:
    """Decide whether every proper edge-coloring of K_{m,n} has a rainbow K_{a,b}.

    Returns an :class:`ArrowDecision`; a negative answer carries a verified
    blocker certificate.  Raises :class:`BudgetExhausted` when the node budget
    runs out first.
    """
    config = config or SearchConfig()
    if not (1 <= a <= b and 1 <= m <= n):
        raise PreconditionViolated(f"need 1 <= a <= b and 1 <= m <= n, got m={m} n={n} a={a} b={b}")
    t0 = time.perf_counter()
    shapes = rainbow_shapes(m, n, a, b)
    if not shapes:
        cert = cyclic_rectangle(m, n)
        return ArrowDecision(m, n, a, b, False, cert, 0, time.perf_counter() - t0, config, infeasible=True)
    if m * n > config.size_cap:
        warnings.warn(f"K_{{{m},{n}}} exceeds the feasibility cap m*n <= {config.size_cap}; search may be slow",
                      RuntimeWarning, stacklevel=2)
    tasks = _tasks(m, n, config)
    log.debug("decide K_{%d,%d} -> K_{%d,%d}: %d tasks", m, n, a, b, len(tasks))
    if config.workers == 1 or len(tasks) == 1:
        status, nodes, grid = _run_sequential(m, n, shapes, config, tasks)
    else:
        status, nodes, grid = _run_parallel(m, n, shapes, config, tasks)
    elapsed = time.perf_counter() - t0
    if status == "budget":
        raise BudgetExhausted(nodes, config.max_nodes)
    if status == "blocker":
        cert = LatinRectangle(grid)
        verdict = verify_certificate(cert, m, n, a, b)
        if not verdict:
            raise InvariantFailed(f"search produced an invalid certificate: {verdict.reason}")
        return ArrowDecision(m, n, a, b, False, cert, nodes, elapsed, config)
    return ArrowDecision(m, n, a, b, True, None, nodes, elapsed, config)


def _run_sequential(m, n, shapes, config, tasks):
    nodes = 0
    for prefix in tasks:
        remaining = config.max_nodes - nodes
        status, used, grid = _run_task((m, n, shapes, config.incremental_rainbow_check, remaining, prefix))
        nodes += used
        if status in ("blocker", "budget"):
            return status, nodes, grid
    return "exhausted", nodes, None


def _run_parallel(m, n, shapes, config, tasks):
    ctx = mp.get_context("fork") if "fork" in mp.get_all_start_methods() else mp.get_context()
    stop = ctx.Event()
    nodes = 0
    budget_hit = False
    found = None
    with ProcessPoolExecutor(max_workers=config.workers, mp_context=ctx,
                             initializer=_init_worker, initargs=(stop,)) as pool:
        pending = {
            pool.submit(_run_task, (m, n, shapes, config.incremental_rainbow_check, config.max_nodes, prefix))
            for prefix in tasks
        }
        while pending:
            done, pending = wait(pending, return_when=FIRST_COMPLETED)
            for fut in done:
                status, used, grid = fut.result()
                nodes += used
                if status == "blocker" and found is None:
                    found = grid
                    stop.set()
                    for p in pending:
                        p.cancel()
                elif status == "budget":
                    budget_hit = True
                    stop.set()
                    for p in pending:
                        p.cancel()
            pending = {p for p in pending if not p.cancelled()}
    if found is not None:
        return "blocker", nodes, found
    if budget_hit or nodes > config.max_nodes:
        return "budget", nodes, None
    return "exhausted", nodes, None
