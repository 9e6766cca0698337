"""Seifert matrices and Alexander polynomials for torus knots and twist knots."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from math import gcd, isqrt
from typing import Iterable, Sequence

import numpy as np

from ltsig import _poly


class DomainError(ValueError):
    """Input outside the domain of an operation (e.g. non-coprime torus parameters)."""


@dataclass(frozen=True)
class TorusKnotParams:
    """Parameters of the torus knot T(p, q); p == 1 or q == 1 is the unknot."""

    p: int
    q: int

    def __post_init__(self) -> None:
        if self.p < 1 or self.q < 1:
            raise DomainError(f"torus parameters must be positive, got ({self.p}, {self.q})")
        if gcd(self.p, self.q) != 1:
            raise DomainError(f"({self.p}, {self.q}) not coprime: T(p,q) is a link")

    @property
    def pq(self) -> int:
        return self.p * self.q

    @property
    def genus(self) -> int:
        return (self.p - 1) * (self.q - 1) // 2


def as_params(p, q=None) -> TorusKnotParams:
    if isinstance(p, TorusKnotParams):
        return p
    if q is None:
        p, q = p
    return TorusKnotParams(int(p), int(q))


@dataclass(frozen=True)
class AlexanderPolynomial:
    """Integer polynomial in t, coefficients listed from degree 0 upward."""

    coefficients: tuple[int, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "coefficients", _poly.trim(tuple(int(c) for c in self.coefficients)))

    @property
    def degree(self) -> int:
        return len(self.coefficients) - 1

    def __call__(self, t):
        return _poly.evaluate(self.coefficients, t)

    def normalized(self) -> AlexanderPolynomial:
        """Representative with the t^k factor removed and positive constant term."""
        return AlexanderPolynomial(_poly.strip_unit(self.coefficients))

    def equivalent(self, other: AlexanderPolynomial) -> bool:
        """Equality up to multiplication by ±t^k."""
        return self.normalized().coefficients == other.normalized().coefficients

    def __str__(self) -> str:
        terms = []
        for k, c in enumerate(self.coefficients):
            if c == 0:
                continue
            mono = "" if k == 0 else ("t" if k == 1 else f"t^{k}")
            if mono and abs(c) == 1:
                body = mono
            else:
                body = f"{abs(c)}{mono}"
            terms.append(("-" if c < 0 else "+", body))
        if not terms:
            return "0"
        head_sign, head = terms[0]
        out = ("-" if head_sign == "-" else "") + head
        for sign, body in terms[1:]:
            out += f" {sign} {body}"
        return out


@dataclass(frozen=True, eq=False)
class SeifertMatrix:
    """Square integer matrix V of even size 2g with det(V - V^T) = ±1.

    A 0x0 matrix stands for the unknot.
    """

    entries: tuple[tuple[int, ...], ...]
    check: bool = field(default=True, repr=False)

    def __post_init__(self) -> None:
        rows = tuple(tuple(int(v) for v in row) for row in self.entries)
        object.__setattr__(self, "entries", rows)
        if not self.check:
            return
        n = len(rows)
        if any(len(r) != n for r in rows):
            raise DomainError("Seifert matrix must be square")
        if n % 2:
            raise DomainError(f"Seifert matrix must have even size, got {n}")
        d = _poly.int_det(
            [[rows[i][j] - rows[j][i] for j in range(n)] for i in range(n)]
        )
        if d not in (1, -1):
            raise DomainError(f"det(V - V^T) = {d}, expected ±1")

    @classmethod
    def from_array(cls, array: Sequence[Sequence[int]] | np.ndarray) -> SeifertMatrix:
        return cls(tuple(tuple(int(v) for v in row) for row in np.asarray(array, dtype=object).tolist()))

    @property
    def size(self) -> int:
        return len(self.entries)

    @property
    def genus(self) -> int:
        return self.size // 2

    def as_array(self) -> np.ndarray:
        return np.array(self.entries, dtype=np.int64).reshape(self.size, self.size)

    def transpose(self) -> SeifertMatrix:
        n = self.size
        return SeifertMatrix(tuple(tuple(self.entries[j][i] for j in range(n)) for i in range(n)), check=False)

    @cached_property
    def alexander(self) -> AlexanderPolynomial:
        return alexander_polynomial(self)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, SeifertMatrix):
            return NotImplemented
        return self.entries == other.entries

    def __hash__(self) -> int:
        return hash(self.entries)


def positive_braid_seifert_matrix(word: Sequence[int], strands: int) -> SeifertMatrix:
    """Seifert matrix of the closure of a positive braid word.

    ``word`` lists generator indices 1..strands-1.  Seifert's algorithm on
    the closed braid gives one disk per strand and one half-twisted band per
    crossing; the cycles run through consecutive bands of the same generator.
    """
    positions: dict[int, list[int]] = {i: [] for i in range(1, strands)}
    for t, g in enumerate(word):
        if not 1 <= g < strands:
            raise DomainError(f"generator {g} out of range for {strands} strands")
        positions[g].append(t)
    cycles = [(i, r) for i in range(1, strands) for r in range(len(positions[i]) - 1)]
    index = {c: k for k, c in enumerate(cycles)}
    n = len(cycles)
    v = [[0] * n for _ in range(n)]
    for (i, r), k in index.items():
        v[k][k] = -1
        nxt = index.get((i, r + 1))
        if nxt is not None:
            v[k][nxt] = 1
        t0, t1 = positions[i][r], positions[i][r + 1]
        nbr = positions.get(i + 1, [])
        for s in range(len(nbr) - 1):
            l = index[(i + 1, s)]
            u0, u1 = nbr[s], nbr[s + 1]
            if t0 < u0 < t1 < u1:
                v[k][l] = 1
            elif u0 < t0 < u1 < t1:
                v[l][k] = -1
    return SeifertMatrix(tuple(tuple(row) for row in v))


def torus_seifert_matrix(p, q=None) -> SeifertMatrix:
    """Seifert matrix of T(p,q) from the braid closure of (s_1 ... s_{p-1})^q."""
    params = as_params(p, q)
    word = [i for _ in range(params.q) for i in range(1, params.p)]
    return positive_braid_seifert_matrix(word, params.p)


def twist_seifert_matrix(n: int) -> SeifertMatrix:
    """Seifert matrix [[-1, 1], [0, n]] of the twist knot K_n."""
    return SeifertMatrix(((-1, 1), (0, int(n))))


def alexander_polynomial(v: SeifertMatrix) -> AlexanderPolynomial:
    """det(V - tV^T), exactly, by evaluation at t = 0..2g and interpolation."""
    n = v.size
    if n == 0:
        return AlexanderPolynomial((1,))
    e = v.entries
    values = []
    for t in range(n + 1):
        values.append(_poly.int_det([[e[i][j] - t * e[j][i] for j in range(n)] for i in range(n)]))
    return AlexanderPolynomial(_poly.interpolate(values))


def torus_alexander_closed(p, q=None) -> AlexanderPolynomial:
    """(1 - t^pq)(1 - t) / ((1 - t^p)(1 - t^q)) by exact long division."""
    params = as_params(p, q)

    def one_minus_power(k: int) -> tuple[int, ...]:
        return _poly.trim([1] + [0] * (k - 1) + [-1])

    num = _poly.mul(one_minus_power(params.pq), one_minus_power(1))
    den = _poly.mul(one_minus_power(params.p), one_minus_power(params.q))
    quot, rem = _poly.divmod_exact(num, den)
    if rem:
        raise ArithmeticError("torus Alexander quotient is not exact")
    return AlexanderPolynomial(quot)


def circle_breakpoints(p, q=None) -> list[Fraction]:
    """Points n/pq, 0 < n < pq, with n divisible by neither p nor q."""
    params = as_params(p, q)
    pq = params.pq
    return [Fraction(n, pq) for n in range(1, pq) if n % params.p and n % params.q]


def unimodularity(v: SeifertMatrix) -> int:
    """det(V - V^T)."""
    e, n = v.entries, v.size
    return _poly.int_det([[e[i][j] - e[j][i] for j in range(n)] for i in range(n)])


def connected_sum(a: SeifertMatrix, b: SeifertMatrix) -> SeifertMatrix:
    """Block-diagonal Seifert matrix of the connected sum."""
    n, m = a.size, b.size
    rows = [list(r) + [0] * m for r in a.entries] + [[0] * n + list(r) for r in b.entries]
    return SeifertMatrix(tuple(tuple(r) for r in rows), check=False)


def is_perfect_square(n: int) -> bool:
    return n >= 0 and isqrt(n) ** 2 == n


def coprime_pairs(max_q: int, min_p: int = 2) -> Iterable[TorusKnotParams]:
    """All coprime (p, q) with min_p <= p < q <= max_q, ordered by (q, p)."""
    for q in range(min_p + 1, max_q + 1):
        for p in range(min_p, q):
            if gcd(p, q) == 1:
                yield TorusKnotParams(p, q)
