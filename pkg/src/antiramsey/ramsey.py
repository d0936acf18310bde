"""Vertex and edge anti-Ramsey numbers for complete bipartite targets.

AR_V(K_{a,b}) is the least m + n, and AR_E(K_{a,b}) the least m * n, over
hosts K_{m,n} (m <= n) with K_{m,n} ->_R K_{a,b}.  Both are computed by
sweeping hosts in increasing size and deciding each one.  Most small hosts
fall to cheap certificates before any search runs:

* the target does not fit in the host at all;
* n < a*b, so an n-color cyclic rectangle cannot hold a*b distinct colors;
* a - 1 is a prime power, m < b and n <= (a^2-a+1)(b-1), so a slice of the
  block construction blocks it (used only when it re-verifies).
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import Iterator, Optional

from .algebra import is_prime_power
from .constructions import block_blocker, cyclic_rectangle
from .decide import SearchConfig, decide_arrow, verify_certificate
from .errors import BudgetExhausted, DomainViolation, PreconditionViolated
from .latin import LatinRectangle, greedy_bound

log = logging.getLogger(__name__)


@dataclass(frozen=True)
class RefutedHost:
    m: int
    n: int
    certificate: LatinRectangle
    reason: str  # infeasible | few_colors | block | search


@dataclass(frozen=True)
class AntiRamseyResult:
    kind: str
    a: int
    b: int
    value: Optional[int]
    witness_host: Optional[tuple[int, int]]
    refuted_hosts: tuple[RefutedHost, ...] = ()
    unknown_hosts: tuple[tuple[int, int], ...] = ()
    complete: bool = True
    nodes: int = 0
    searches: int = 0
    upper_bound: int = 0


def vertex_upper_bound(a: int, b: int) -> int:
    return a + greedy_bound(a, b) + 1


def edge_upper_bound(a: int, b: int) -> int:
    return a * (greedy_bound(a, b) + 1)


def shortcut_certificate(m: int, n: int, a: int, b: int) -> Optional[tuple[LatinRectangle, str]]:
    """A verified blocker for K_{m,n} vs K_{a,b} that needs no search, if one applies."""
    if a > m or b > n:
        return cyclic_rectangle(m, n), "infeasible"
    if n < a * b:
        return cyclic_rectangle(m, n), "few_colors"
    if a >= 2 and is_prime_power(a - 1) and m < b and n <= greedy_bound(a, b):
        full = block_blocker(a, b)
        cert = full.restrict(range(m), range(n))
        if verify_certificate(cert, m, n, a, b):
            return cert, "block"
        log.info("block shortcut for K_{%d,%d} vs K_{%d,%d} does not verify; searching", m, n, a, b)
    return None


def _vertex_hosts(a: int, b: int) -> Iterator[tuple[int, int]]:
    for s in range(2, vertex_upper_bound(a, b) + 1):
        for m in range(1, s // 2 + 1):
            yield m, s - m


def _edge_hosts(a: int, b: int) -> Iterator[tuple[int, int]]:
    for p in range(1, edge_upper_bound(a, b) + 1):
        hosts = [(m, p // m) for m in range(1, p + 1) if p % m == 0 and m <= p // m]
        yield from sorted(hosts, key=lambda h: (h[0] + h[1], h[0]))


def _sweep(kind: str, a: int, b: int, config: Optional[SearchConfig]) -> AntiRamseyResult:
    if not 1 <= a <= b:
        raise PreconditionViolated(f"need 1 <= a <= b, got a={a}, b={b}")
    config = config or SearchConfig()
    hosts = _vertex_hosts(a, b) if kind == "vertex" else _edge_hosts(a, b)
    size = (lambda m, n: m + n) if kind == "vertex" else (lambda m, n: m * n)
    bound = vertex_upper_bound(a, b) if kind == "vertex" else edge_upper_bound(a, b)
    refuted: list[RefutedHost] = []
    unknown: list[tuple[int, int]] = []
    nodes = searches = 0
    for m, n in hosts:
        short = shortcut_certificate(m, n, a, b)
        if short is not None:
            refuted.append(RefutedHost(m, n, short[0], short[1]))
            continue
        try:
            dec = decide_arrow(m, n, a, b, config)
        except BudgetExhausted as exc:
            log.warning("K_{%d,%d} vs K_{%d,%d}: %s", m, n, a, b, exc)
            nodes += exc.nodes
            searches += 1
            unknown.append((m, n))
            continue
        nodes += dec.nodes_explored
        searches += 1
        if dec.arrows:
            return AntiRamseyResult(kind, a, b, size(m, n), (m, n), tuple(refuted), tuple(unknown),
                                    not unknown, nodes, searches, bound)
        refuted.append(RefutedHost(m, n, dec.certificate, "search"))
    return AntiRamseyResult(kind, a, b, None, None, tuple(refuted), tuple(unknown), False, nodes, searches, bound)


def ar_vertex(a: int, b: int, config: Optional[SearchConfig] = None) -> AntiRamseyResult:
    """Least m + n with K_{m,n} ->_R K_{a,b}; ties go to the least m."""
    return _sweep("vertex", a, b, config)


def ar_edge(a: int, b: int, config: Optional[SearchConfig] = None) -> AntiRamseyResult:
    """Least m * n with K_{m,n} ->_R K_{a,b}; ties go to the least m + n, then m."""
    return _sweep("edge", a, b, config)


def ar_vertex_formula(b: int) -> int:
    """Closed form AR_V(K_{2,b}) = 3b, valid for b >= 2."""
    if b < 2:
        raise DomainViolation(f"AR_V(K_2,b) = 3b needs b >= 2, got {b}")
    return 3 * b


def ar_edge_formula(a: int, b: int) -> int:
    """Closed form a^2(a-1)(b-1) + ab, valid when a - 1 is a prime power and b >= a(a-1)."""
    if a < 2 or not is_prime_power(a - 1):
        raise DomainViolation(f"a - 1 = {a - 1} is not a prime power")
    if b < a * (a - 1):
        raise DomainViolation(f"formula needs b >= a(a-1) = {a * (a - 1)}, got {b}")
    return a * a * (a - 1) * (b - 1) + a * b
