"""Finite fields, Singer difference sets and projective planes.

The Singer cycle of PG(2, q) is realized concretely: build GF(q^3) as a cubic
extension of GF(q), pick a multiplicative generator g, and index the points
of the plane by the cosets g^i GF(q)^*, i in Z_n with n = q^2 + q + 1.
Multiplying by g shifts every index by one, so the cycle acts on points as
``i -> i + 1 (mod n)``.  The exponents i whose coset lies in a fixed
2-dimensional GF(q)-subspace form a line D, and the n translates of D are
all the lines.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from math import gcd
from typing import Iterable, Optional, Sequence

from .errors import (
    AxiomFailure,
    CapExceeded,
    InvariantFailed,
    NoGeneratorFound,
    NotPrime,
    NotPrimePower,
    RainbowPairExists,
    WrongShape,
)

FIELD_CAP = 1024
EXTENSION_CAP = 2_000_000
EXHAUSTIVE_MODULUS_CAP = 31


# --- integers ---------------------------------------------------------------

def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


def factorize(n: int) -> dict[int, int]:
    """Prime factorization by trial division."""
    if n < 1:
        raise ValueError("factorize expects a positive integer")
    out: dict[int, int] = {}
    d = 2
    while d * d <= n:
        while n % d == 0:
            out[d] = out.get(d, 0) + 1
            n //= d
        d += 1 if d == 2 else 2
    if n > 1:
        out[n] = out.get(n, 0) + 1
    return out


@dataclass(frozen=True)
class PrimePower:
    """q = p**k.  ``q == 1`` is admitted as a degenerate prime power (p = 1, k = 0)."""

    p: int
    k: int
    q: int

    @classmethod
    def of(cls, q: "int | PrimePower") -> "PrimePower":
        if isinstance(q, PrimePower):
            return q
        q = int(q)
        if q == 1:
            return cls(1, 0, 1)
        if q < 1:
            raise NotPrimePower(f"{q} is not a prime power")
        fac = factorize(q)
        if len(fac) != 1:
            raise NotPrimePower(f"{q} is not a prime power")
        (p, k), = fac.items()
        return cls(p, k, q)


def is_prime_power(q: int) -> bool:
    try:
        PrimePower.of(q)
    except NotPrimePower:
        return False
    return True


# --- finite fields ----------------------------------------------------------

class FiniteField:
    """GF(s^d) as polynomials of degree < d over a coefficient field of size s.

    The coefficient field is Z_p when ``base`` is None, otherwise ``base``.
    Elements are encoded as integers ``sum(c_i * s**i)``; :class:`FieldElement`
    wraps a code for operator syntax.  Multiplication goes through exp/log
    tables built from the least generator.
    """

    def __init__(self, p: int, degree: int, modulus: Sequence[int], base: "FiniteField | None" = None):
        if len(modulus) != degree + 1 or modulus[-1] != 1:
            raise ValueError("modulus must be monic of the field degree")
        self.p = p
        self.degree = degree
        self.base = base
        self.modulus = tuple(int(c) for c in modulus)
        self.sub = p if base is None else base.order
        self.order = self.sub ** degree
        self._exp: list[int] = []
        self._log: list[int] = []
        self.generator_code = self._find_generator()
        self._build_tables()

    # coefficient arithmetic
    def _cadd(self, x: int, y: int) -> int:
        return (x + y) % self.p if self.base is None else self.base.add(x, y)

    def _csub(self, x: int, y: int) -> int:
        return (x - y) % self.p if self.base is None else self.base.sub_(x, y)

    def _cmul(self, x: int, y: int) -> int:
        return (x * y) % self.p if self.base is None else self.base.mul(x, y)

    @property
    def k(self) -> int:
        """Degree over the prime field."""
        return self.degree * (1 if self.base is None else self.base.k)

    def coeffs(self, code: int) -> list[int]:
        out = []
        for _ in range(self.degree):
            code, c = divmod(code, self.sub)
            out.append(c)
        return out

    def encode(self, coeffs: Sequence[int]) -> int:
        code = 0
        for c in reversed(list(coeffs)):
            code = code * self.sub + c
        return code

    def _polymul(self, x: int, y: int) -> int:
        a, b = self.coeffs(x), self.coeffs(y)
        d = self.degree
        prod = [0] * (2 * d - 1)
        for i, ai in enumerate(a):
            if ai == 0:
                continue
            for j, bj in enumerate(b):
                if bj:
                    prod[i + j] = self._cadd(prod[i + j], self._cmul(ai, bj))
        for top in range(2 * d - 2, d - 1, -1):
            c = prod[top]
            if c == 0:
                continue
            # x^d == -(modulus without its leading term)
            prod[top] = 0
            for i in range(d):
                prod[top - d + i] = self._csub(prod[top - d + i], self._cmul(c, self.modulus[i]))
        return self.encode(prod[:d])

    def _slowpow(self, x: int, e: int) -> int:
        result = 1
        while e:
            if e & 1:
                result = self._polymul(result, x)
            x = self._polymul(x, x)
            e >>= 1
        return result

    def _find_generator(self) -> int:
        n = self.order - 1
        if n == 1:
            return 1
        primes = list(factorize(n))
        for g in range(2, self.order):
            if all(self._slowpow(g, n // r) != 1 for r in primes):
                return g
        raise NoGeneratorFound(f"no generator for GF({self.order}) with modulus {self.modulus}")

    def _build_tables(self) -> None:
        n = self.order - 1
        exp = [0] * n
        log = [0] * self.order
        x = 1
        for i in range(n):
            exp[i] = x
            log[x] = i
            x = self._polymul(x, self.generator_code)
        if x != 1 or len(set(exp)) != n:
            raise NoGeneratorFound("generator powers do not cover the multiplicative group")
        self._exp, self._log = exp, log

    # element arithmetic on codes
    def add(self, x: int, y: int) -> int:
        if self.degree == 1:
            return self._cadd(x, y)
        return self.encode([self._cadd(a, b) for a, b in zip(self.coeffs(x), self.coeffs(y))])

    def neg(self, x: int) -> int:
        if self.degree == 1:
            return self._csub(0, x)
        return self.encode([self._csub(0, a) for a in self.coeffs(x)])

    def sub_(self, x: int, y: int) -> int:
        return self.add(x, self.neg(y))

    def mul(self, x: int, y: int) -> int:
        if x == 0 or y == 0:
            return 0
        return self._exp[(self._log[x] + self._log[y]) % (self.order - 1)]

    def inv(self, x: int) -> int:
        if x == 0:
            raise ZeroDivisionError("zero has no inverse")
        return self._exp[(-self._log[x]) % (self.order - 1)]

    def pow(self, x: int, e: int) -> int:
        if x == 0:
            if e < 0:
                raise ZeroDivisionError("zero has no inverse")
            return 1 if e == 0 else 0
        return self._exp[(self._log[x] * e) % (self.order - 1)]

    def log(self, x: int) -> int:
        if x == 0:
            raise ValueError("log of zero")
        return self._log[x]

    def exp(self, i: int) -> int:
        return self._exp[i % (self.order - 1)]

    # wrapped elements
    def __call__(self, value: "int | Sequence[int]") -> "FieldElement":
        if isinstance(value, int):
            code = value
        else:
            code = self.encode(value)
        if not 0 <= code < self.order:
            raise ValueError(f"code {code} outside GF({self.order})")
        return FieldElement(self, code)

    @property
    def zero(self) -> "FieldElement":
        return FieldElement(self, 0)

    @property
    def one(self) -> "FieldElement":
        return FieldElement(self, 1)

    @property
    def generator(self) -> "FieldElement":
        return FieldElement(self, self.generator_code)

    def elements(self) -> list["FieldElement"]:
        return [FieldElement(self, c) for c in range(self.order)]

    def __repr__(self) -> str:
        over = f"GF({self.p})" if self.base is None else f"GF({self.base.order})"
        return f"FiniteField(order={self.order}, over={over}, modulus={list(self.modulus)})"


@dataclass(frozen=True, eq=False)
class FieldElement:
    field: FiniteField
    code: int

    @property
    def coeffs(self) -> list[int]:
        return self.field.coeffs(self.code)

    def _other(self, other) -> int:
        if isinstance(other, FieldElement):
            if other.field is not self.field:
                raise ValueError("elements belong to different fields")
            return other.code
        return self.field(other).code

    def __add__(self, other):
        return FieldElement(self.field, self.field.add(self.code, self._other(other)))

    __radd__ = __add__

    def __sub__(self, other):
        return FieldElement(self.field, self.field.sub_(self.code, self._other(other)))

    def __neg__(self):
        return FieldElement(self.field, self.field.neg(self.code))

    def __mul__(self, other):
        return FieldElement(self.field, self.field.mul(self.code, self._other(other)))

    __rmul__ = __mul__

    def __truediv__(self, other):
        return FieldElement(self.field, self.field.mul(self.code, self.field.inv(self._other(other))))

    def __pow__(self, e: int):
        return FieldElement(self.field, self.field.pow(self.code, e))

    def inverse(self) -> "FieldElement":
        return FieldElement(self.field, self.field.inv(self.code))

    def __eq__(self, other) -> bool:
        if isinstance(other, FieldElement):
            return self.field is other.field and self.code == other.code
        return NotImplemented

    def __hash__(self) -> int:
        return hash((id(self.field), self.code))

    def __bool__(self) -> bool:
        return self.code != 0

    def __int__(self) -> int:
        return self.code

    def __repr__(self) -> str:
        return f"GF{self.field.order}({self.coeffs})"


# polynomials over a coefficient field, as low-degree-first lists of codes

def _poly_rem(num: list[int], den: list[int], ring: "_CoeffRing") -> list[int]:
    num = list(num)
    inv_lead = ring.inv(den[-1])
    while len(num) >= len(den):
        c = ring.mul(num[-1], inv_lead)
        shift = len(num) - len(den)
        if c:
            for i, dc in enumerate(den):
                num[shift + i] = ring.sub(num[shift + i], ring.mul(c, dc))
        num.pop()
        while num and num[-1] == 0:
            num.pop()
    return num


class _CoeffRing:
    """Arithmetic on coefficient codes: Z_p or an existing FiniteField."""

    def __init__(self, p: int, base: Optional[FiniteField]):
        self.p = p
        self.base = base
        self.size = p if base is None else base.order

    def add(self, x, y):
        return (x + y) % self.p if self.base is None else self.base.add(x, y)

    def sub(self, x, y):
        return (x - y) % self.p if self.base is None else self.base.sub_(x, y)

    def mul(self, x, y):
        return (x * y) % self.p if self.base is None else self.base.mul(x, y)

    def inv(self, x):
        return pow(x, self.p - 2, self.p) if self.base is None else self.base.inv(x)


def _monic_polys(ring: _CoeffRing, degree: int) -> Iterable[list[int]]:
    """Monic polynomials of ``degree`` in increasing code order."""
    s = ring.size
    for code in range(s ** degree):
        low = []
        for _ in range(degree):
            code, c = divmod(code, s)
            low.append(c)
        yield low + [1]


def is_irreducible(poly: Sequence[int], p: int, base: Optional[FiniteField] = None) -> bool:
    """Irreducibility by trial division over all monic polynomials of degree <= deg/2."""
    ring = _CoeffRing(p, base)
    poly = list(poly)
    deg = len(poly) - 1
    if deg < 1:
        return False
    for d in range(1, deg // 2 + 1):
        for f in _monic_polys(ring, d):
            if not _poly_rem(poly, f, ring):
                return False
    return True


def least_irreducible(p: int, degree: int, base: Optional[FiniteField] = None) -> tuple[int, ...]:
    """Least monic irreducible of ``degree``; order is by integer code, leading coefficient most significant."""
    ring = _CoeffRing(p, base)
    for f in _monic_polys(ring, degree):
        if is_irreducible(f, p, base):
            return tuple(f)
    raise InvariantFailed(f"no irreducible polynomial of degree {degree}")  # pragma: no cover


def field_create(p: int, k: int) -> FiniteField:
    """GF(p^k) modulo the least monic irreducible of degree k over GF(p)."""
    if not is_prime(p):
        raise NotPrime(f"{p} is not prime")
    if k < 1:
        raise ValueError("degree must be at least 1")
    if p ** k > FIELD_CAP:
        raise CapExceeded(f"GF({p}^{k}) exceeds the table cap {FIELD_CAP}")
    return FiniteField(p, k, least_irreducible(p, k), None)


def extension_field(base: FiniteField, degree: int) -> FiniteField:
    """Degree-``degree`` extension of ``base`` modulo its least irreducible."""
    if base.order ** degree > EXTENSION_CAP:
        raise CapExceeded(f"GF({base.order}^{degree}) exceeds the table cap {EXTENSION_CAP}")
    modulus = least_irreducible(base.p, degree, base)
    return FiniteField(base.p, degree, modulus, base)


# --- difference sets --------------------------------------------------------

def is_planar_difference_set(residues: Iterable[int], n: int) -> bool:
    """Every nonzero residue mod n is d_i - d_j for exactly one ordered pair."""
    res = sorted({r % n for r in residues})
    counts = [0] * n
    for x in res:
        for y in res:
            if x != y:
                counts[(x - y) % n] += 1
    return all(c == 1 for c in counts[1:])


@dataclass(frozen=True)
class DifferenceSet:
    modulus: int
    residues: tuple[int, ...]
    q: int = 0
    base_modulus: tuple[int, ...] = ()
    cubic_modulus: tuple[int, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "residues", tuple(sorted(int(r) % self.modulus for r in self.residues)))

    def is_valid(self) -> bool:
        return is_planar_difference_set(self.residues, self.modulus)


def equivalent_difference_sets(d1: Iterable[int], d2: Iterable[int], n: int) -> bool:
    """True when ``u*d1 + t == d2 (mod n)`` for some unit u and shift t."""
    s1 = sorted({x % n for x in d1})
    s2 = {x % n for x in d2}
    if len(s1) != len(s2):
        return False
    for u in range(1, n):
        if gcd(u, n) != 1:
            continue
        for t in range(n):
            if all((u * x + t) % n in s2 for x in s1):
                return True
    return False


def exhaustive_difference_set(q: int, cap: int = EXHAUSTIVE_MODULUS_CAP) -> DifferenceSet:
    """Lexicographically first planar difference set containing 0, by backtracking."""
    n = q * q + q + 1
    if n > cap:
        raise CapExceeded(f"exhaustive difference-set search capped at n <= {cap}, got {n}")
    size = q + 1
    used = [False] * n
    chosen = [0]

    def dfs(start: int) -> bool:
        if len(chosen) == size:
            return True
        for x in range(start, n):
            diffs = []
            ok = True
            for y in chosen:
                for d in ((x - y) % n, (y - x) % n):
                    if used[d] or d in diffs:
                        ok = False
                        break
                    diffs.append(d)
                if not ok:
                    break
            if not ok:
                continue
            for d in diffs:
                used[d] = True
            chosen.append(x)
            if dfs(x + 1):
                return True
            chosen.pop()
            for d in diffs:
                used[d] = False
        return False

    if not dfs(1):
        raise InvariantFailed(f"no planar difference set modulo {n}")
    return DifferenceSet(n, tuple(chosen), q)


def singer_difference_set(q: "int | PrimePower", method: str = "singer") -> DifferenceSet:
    """Planar difference set modulo q^2 + q + 1.

    ``method="singer"`` runs the field construction; ``"exhaustive"`` falls
    back to subset search (an independent route, small n only).
    """
    pp = PrimePower.of(q)
    if method == "exhaustive":
        return exhaustive_difference_set(pp.q)
    if method != "singer":
        raise ValueError(f"unknown method {method!r}")
    if pp.q == 1:
        return DifferenceSet(3, (0, 1), 1)
    qq = pp.q
    n = qq * qq + qq + 1
    base = field_create(pp.p, pp.k)
    ext = extension_field(base, 3)
    g = ext.generator_code
    residues = []
    x = 1
    for i in range(n):
        if ext.coeffs(x)[2] == 0:
            residues.append(i)
        x = ext.mul(x, g)
    ds = DifferenceSet(n, tuple(residues), qq, base.modulus, ext.modulus)
    if len(ds.residues) != qq + 1 or not ds.is_valid():
        raise InvariantFailed(f"Singer construction for q={qq} is not a planar difference set: {ds.residues}")
    return ds


# --- projective planes ------------------------------------------------------

@dataclass(frozen=True)
class ProjectivePlane:
    order: int
    points: int
    lines: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        object.__setattr__(self, "lines", tuple(tuple(sorted(int(x) for x in ln)) for ln in self.lines))


@dataclass(frozen=True)
class PlaneReport:
    ok: bool
    axiom: str = ""
    witness: tuple = ()
    message: str = ""

    def __bool__(self) -> bool:
        return self.ok


def plane_from_difference_set(D: DifferenceSet) -> ProjectivePlane:
    n = D.modulus
    lines = [tuple(sorted((d + j) % n for d in D.residues)) for j in range(n)]
    return ProjectivePlane(len(D.residues) - 1, n, tuple(lines))


def verify_plane_axioms(P: ProjectivePlane) -> PlaneReport:
    """Check the projective-plane axioms exhaustively; report the first failure."""
    q, n = P.order, P.points
    on: list[set[int]] = [set() for _ in range(n)]
    for li, ln in enumerate(P.lines):
        for x in ln:
            if not 0 <= x < n:
                return PlaneReport(False, "point_range", (li, x), f"line {li} has point {x} outside 0..{n - 1}")
            on[x].add(li)
    for x, y in combinations(range(n), 2):
        k = len(on[x] & on[y])
        if k != 1:
            return PlaneReport(False, "two_points_one_line", (x, y), f"points {x},{y} lie on {k} common lines")
    line_sets = [set(ln) for ln in P.lines]
    for i, j in combinations(range(len(line_sets)), 2):
        k = len(line_sets[i] & line_sets[j])
        if k != 1:
            return PlaneReport(False, "two_lines_one_point", (i, j), f"lines {i},{j} meet in {k} points")
    for x in range(n):
        if len(on[x]) != q + 1:
            return PlaneReport(False, "point_degree", (x,), f"point {x} lies on {len(on[x])} lines, expected {q + 1}")
    if n != q * q + q + 1 or len(P.lines) != n or any(len(s) != q + 1 for s in line_sets):
        return PlaneReport(False, "counts", (n, len(P.lines)), "point/line counts do not match the order")
    return PlaneReport(True)


def plane_from_blocker(R) -> ProjectivePlane:
    """Read a projective plane of order a-1 off an a x (a^2-a+1) blocker.

    Points are the symbols of ``R`` (renumbered in increasing order), lines
    the column symbol sets.
    """
    from .latin import find_rainbow_shape

    a, n = R.rows, R.cols
    if n != a * a - a + 1:
        raise WrongShape(f"expected {a}x{a * a - a + 1}, got {a}x{n}")
    if n >= 2:
        w = find_rainbow_shape(R, a, 2)
        if w is not None:
            raise RainbowPairExists(f"columns {w.cols} form a rainbow {a}x2 subrectangle")
    symbols = R.symbols()
    if len(symbols) != n:
        raise AxiomFailure(f"blocker uses {len(symbols)} symbols, expected {n}")
    index = {s: i for i, s in enumerate(symbols)}
    lines = [tuple(index[int(s)] for s in R.cells[:, j]) for j in range(n)]
    P = ProjectivePlane(a - 1, n, tuple(lines))
    report = verify_plane_axioms(P)
    if not report:
        raise AxiomFailure(report.message)
    return P
