"""End-to-end verification battery.

Each criterion is a function returning ``(passed, detail)``; :func:`run_suite`
times it against its wall-clock budget and records a :class:`CriterionResult`.
The same battery backs ``antiramsey verify-suite`` and the pytest acceptance
module.
"""

from __future__ import annotations

import random
import time
from dataclasses import dataclass, replace
from itertools import combinations
from typing import Callable, Optional

from .algebra import (
    equivalent_difference_sets,
    extension_field,
    field_create,
    is_planar_difference_set,
    plane_from_blocker,
    plane_from_difference_set,
    singer_difference_set,
    verify_plane_axioms,
)
from .constructions import (
    block_blocker,
    extend_rows,
    kron_blocker,
    random_latin_rectangle,
    singer_blocker,
)
from .decide import SearchConfig, decide_arrow, verify_certificate
from .errors import AntiRamseyError, BudgetExhausted
from .latin import (
    LatinRectangle,
    canonical_relabel,
    find_rainbow,
    find_rainbow_either,
    find_rainbow_shape,
    greedy_bound,
    greedy_rainbow,
    is_rainbow,
)
from .oracles import brute_force_arrows, first_difference_set, has_rainbow
from .ramsey import ar_edge, ar_vertex

SINGER_RANGE = (2, 3, 4, 5, 6, 8, 9, 10)  # a with a - 1 in {1, 2, 3, 4, 5, 7, 8, 9}

EXAMPLE_3x7 = LatinRectangle([
    [0, 2, 4, 6, 1, 3, 5],
    [1, 3, 5, 0, 2, 4, 6],
    [3, 5, 0, 2, 4, 6, 1],
])


@dataclass(frozen=True)
class CriterionResult:
    number: int
    name: str
    passed: bool
    detail: str
    seconds: float
    budget: float

    def line(self) -> str:
        tag = "PASS" if self.passed else "FAIL"
        return f"[{tag}] {self.number:2d} {self.name}: {self.detail} ({self.seconds:.2f}s / {self.budget:g}s)"


@dataclass(frozen=True)
class SuiteContext:
    config: SearchConfig = SearchConfig()
    seed: int = 20240101
    parallel_workers: int = 2


Check = Callable[[SuiteContext], "tuple[bool, str]"]


def _crit_k24(ctx: SuiteContext):
    d = decide_arrow(2, 4, 2, 2, ctx.config)
    return d.arrows, f"K_2,4 -> K_2,2 arrows={d.arrows} nodes={d.nodes_explored}"


def _crit_k36(ctx: SuiteContext):
    seq = decide_arrow(3, 6, 2, 3, replace(ctx.config, workers=1))
    par = decide_arrow(3, 6, 2, 3, replace(ctx.config, workers=max(2, ctx.parallel_workers)))
    ok = seq.arrows and par.arrows == seq.arrows
    return ok, (f"K_3,6 -> K_2,3 arrows={seq.arrows} nodes={seq.nodes_explored} "
                f"({seq.elapsed:.2f}s); parallel arrows={par.arrows}")


def _crit_k26(ctx: SuiteContext):
    d = decide_arrow(2, 6, 2, 3, ctx.config)
    cert_ok = bool(verify_certificate(block_blocker(2, 3), 2, 6, 2, 3))
    search_cert_ok = d.certificate is not None and bool(verify_certificate(d.certificate, 2, 6, 2, 3))
    ok = (not d.arrows) and cert_ok and search_cert_ok
    return ok, f"arrows={d.arrows}, search certificate ok={search_cert_ok}, block_blocker(2,3) ok={cert_ok}"


def _columns_pairwise_meet(R: LatinRectangle) -> bool:
    cols = [set(R.cells[:, j].tolist()) for j in range(R.cols)]
    return all(cols[i] & cols[j] for i, j in combinations(range(R.cols), 2))


def _crit_singer_forward(ctx: SuiteContext):
    bad = []
    for a in SINGER_RANGE:
        R = singer_blocker(a)
        ok = R.shape == (a, a * a - a + 1) and find_rainbow_shape(R, a, 2) is None and _columns_pairwise_meet(R)
        if not ok:
            bad.append(a)
    return not bad, f"a in {list(SINGER_RANGE)}; failures={bad}"


def _crit_singer_converse(ctx: SuiteContext):
    bad = []
    for a in SINGER_RANGE:
        P = plane_from_blocker(singer_blocker(a))
        if not verify_plane_axioms(P) or P.order != a - 1:
            bad.append(a)
    P3 = plane_from_blocker(singer_blocker(3))
    Pex = plane_from_blocker(EXAMPLE_3x7)
    params = lambda P: (P.points, len(P.lines), {len(ln) for ln in P.lines})
    ok3 = params(P3) == params(Pex) == (7, 7, {3})
    return not bad and ok3, f"failures={bad}; a=3 plane {params(P3)} vs example {params(Pex)}"


def _crit_difference_sets(ctx: SuiteContext):
    details = []
    ok = True
    for q in (2, 3, 4, 5):
        D = singer_difference_set(q)
        good = len(D.residues) == q + 1 and is_planar_difference_set(D.residues, D.modulus)
        if q in (2, 3):
            ref = first_difference_set(D.modulus, q + 1)
            good = good and ref is not None and equivalent_difference_sets(D.residues, ref, D.modulus)
            details.append(f"q={q} {list(D.residues)}~{list(ref) if ref else None}")
        else:
            details.append(f"q={q} {list(D.residues)}")
        ok = ok and good
    return ok, "; ".join(details)


def _crit_ar_vertex(ctx: SuiteContext):
    r2 = ar_vertex(2, 2, ctx.config)
    r3 = ar_vertex(2, 3, ctx.config)
    ok = r2.value == 6 and r2.complete and r3.value == 9 and r3.complete
    return ok, (f"AR_V(K_2,2)={r2.value} via {r2.witness_host} complete={r2.complete}; "
                f"AR_V(K_2,3)={r3.value} via {r3.witness_host} complete={r3.complete}")


def _crit_ar_edge(ctx: SuiteContext):
    r = ar_edge(2, 2, ctx.config)
    return r.value == 8 and r.complete, f"AR_E(K_2,2)={r.value} via {r.witness_host} complete={r.complete}"


def _crit_kron(ctx: SuiteContext):
    A = singer_blocker(2)
    B = LatinRectangle([[0, 1], [1, 0]])
    K = kron_blocker(A, B, 3)
    grid = K.tolist()
    ok = K.shape == (4, 6) and find_rainbow(K, (3, 3)) is None and not has_rainbow(grid, 3, 3)
    return ok, f"shape={K.shape}, rainbow 3x3 present={has_rainbow(grid, 3, 3)}"


def oracle_hosts(limit: int = 12) -> list[tuple[int, int]]:
    return [(m, n) for m in range(1, limit + 1) for n in range(m, limit + 1) if m * n <= limit]


def _crit_oracle(ctx: SuiteContext):
    mismatches = []
    count = 0
    for m, n in oracle_hosts():
        queries = [(a, b) for b in range(1, n + 1) for a in range(1, b + 1)]
        ref = brute_force_arrows(m, n, queries)
        for a, b in queries:
            count += 1
            if decide_arrow(m, n, a, b, ctx.config).arrows != ref[(a, b)][0]:
                mismatches.append((m, n, a, b))
    return not mismatches, f"{count} instances compared; mismatches={mismatches}"


def property_checks(seed: int, greedy_instances: int = 200, field_triples: int = 1000) -> list[str]:
    """Seeded property battery; returns the list of failure messages."""
    rng = random.Random(seed)
    failures: list[str] = []

    # latinness of every construction output
    outputs = [singer_blocker(a) for a in (2, 3, 4, 5)]
    outputs += [block_blocker(a, b) for a, b in ((2, 2), (2, 3), (2, 4), (3, 3), (3, 4), (4, 4))]
    outputs.append(kron_blocker(singer_blocker(3), singer_blocker(2)))
    outputs.append(extend_rows(singer_blocker(3), 12))
    for R in outputs:
        try:
            LatinRectangle(R.cells)
        except AntiRamseyError as exc:
            failures.append(f"construction output not latin: {exc}")

    # relabeling and transposition
    for _ in range(40):
        m = rng.randint(1, 4)
        n = rng.randint(m, 6)
        R = random_latin_rectangle(m, n, rng)
        C = canonical_relabel(R)
        if canonical_relabel(C) != C:
            failures.append(f"canonical_relabel not idempotent on {R.tolist()}")
        for h in range(1, m + 1):
            for w in range(1, n + 1):
                for rows in combinations(range(m), h):
                    for cols in list(combinations(range(n), w))[:6]:
                        if is_rainbow(R, rows, cols) != is_rainbow(C, rows, cols):
                            failures.append(f"relabel changed rainbow status on {R.tolist()}")
        a = rng.randint(1, m)
        b = rng.randint(a, n)
        T = R.transpose()
        for x, y in ((a, b), (b, a)):
            if x > y:
                continue
            direct = find_rainbow(R, (x, y)) if x <= m and y <= n else None
            swapped = find_rainbow_shape(T, y, x) if y <= T.rows and x <= T.cols else None
            if (direct is None) != (swapped is None):
                failures.append(f"transpose duality broken on {R.tolist()} for {(x, y)}")

    # greedy construction under the column bound
    for _ in range(greedy_instances):
        a = rng.randint(1, 3)
        b = rng.randint(a, 4)
        n = greedy_bound(a, b) + 1 + rng.randint(0, 3)
        m = rng.randint(a, min(n, a + 3))
        R = random_latin_rectangle(m, n, rng)
        try:
            w = greedy_rainbow(R, (a, b))
        except AntiRamseyError as exc:
            failures.append(f"greedy failed on {m}x{n} for {(a, b)}: {exc}")
            continue
        if not w.is_rainbow(R) or len(w.rows) != a or len(w.cols) != b:
            failures.append(f"greedy witness not rainbow on {m}x{n}")

    # field axioms
    fields = [field_create(p, k) for p, k in ((2, 1), (3, 1), (2, 2), (5, 1), (7, 1), (2, 3), (3, 2), (2, 4), (3, 3))]
    fields.append(extension_field(field_create(2, 2), 3))
    for F in fields:
        for _ in range(field_triples):
            x, y, z = (F(rng.randrange(F.order)) for _ in range(3))
            if (x + y) + z != x + (y + z) or (x * y) * z != x * (y * z):
                failures.append(f"associativity fails in {F}")
                break
            if x * (y + z) != x * y + x * z:
                failures.append(f"distributivity fails in {F}")
                break
            if x and x * x.inverse() != F.one:
                failures.append(f"inverse fails in {F}")
                break
        g = F.generator
        if len({(g ** i).code for i in range(F.order - 1)}) != F.order - 1:
            failures.append(f"generator of {F} does not enumerate the multiplicative group")
    return failures


def _crit_properties(ctx: SuiteContext):
    failures = property_checks(ctx.seed)
    return not failures, f"{len(failures)} failures" + (f": {failures[:3]}" if failures else "")


CRITERIA: list[tuple[int, str, float, Check]] = [
    (1, "K_2,4 arrows K_2,2", 1.0, _crit_k24),
    (2, "K_3,6 arrows K_2,3", 600.0, _crit_k36),
    (3, "K_2,6 does not arrow K_2,3", 1.0, _crit_k26),
    (4, "Singer blockers have no rainbow a x 2", 10.0, _crit_singer_forward),
    (5, "blocker columns form a projective plane", 10.0, _crit_singer_converse),
    (6, "difference sets match the exhaustive oracle", 30.0, _crit_difference_sets),
    (7, "AR_V(K_2,b) = 3b for b = 2, 3", 900.0, _crit_ar_vertex),
    (8, "AR_E(K_2,2) = 8", 60.0, _crit_ar_edge),
    (9, "product construction blocks rainbow 3x3", 1.0, _crit_kron),
    (10, "search agrees with brute force for m*n <= 12", 300.0, _crit_oracle),
    (11, "property suites", 120.0, _crit_properties),
]


def run_criterion(number: int, ctx: Optional[SuiteContext] = None) -> CriterionResult:
    ctx = ctx or SuiteContext()
    num, name, budget, check = next(c for c in CRITERIA if c[0] == number)
    t0 = time.perf_counter()
    try:
        passed, detail = check(ctx)
    except BudgetExhausted as exc:
        passed, detail = False, f"budget exhausted: {exc}"
    except AntiRamseyError as exc:
        passed, detail = False, f"error: {type(exc).__name__}: {exc}"
    seconds = time.perf_counter() - t0
    if passed and seconds > budget:
        passed, detail = False, detail + f"; exceeded the {budget:g}s budget"
    return CriterionResult(num, name, bool(passed), detail, seconds, budget)


def run_suite(ctx: Optional[SuiteContext] = None) -> list[CriterionResult]:
    return [run_criterion(num, ctx) for num, *_ in CRITERIA]
