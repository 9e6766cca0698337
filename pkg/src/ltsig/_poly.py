"""Exact integer polynomial and integer matrix helpers.

Polynomials are tuples of ints indexed by degree (lowest first) with no
trailing zeros; the zero polynomial is ``()``.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from typing import Sequence

Poly = tuple[int, ...]


def trim(coeffs: Sequence[int]) -> Poly:
    out = list(coeffs)
    while out and out[-1] == 0:
        out.pop()
    return tuple(out)


def mul(a: Poly, b: Poly) -> Poly:
    if not a or not b:
        return ()
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return trim(out)


def divmod_exact(num: Poly, den: Poly) -> tuple[Poly, Poly]:
    """Long division over Z; the divisor's leading coefficient must be ±1."""
    if not den:
        raise ZeroDivisionError("polynomial division by zero")
    lead = den[-1]
    if lead not in (1, -1):
        raise ValueError("divisor must have unit leading coefficient")
    rem = list(num)
    if len(rem) < len(den):
        return (), trim(rem)
    quot = [0] * (len(rem) - len(den) + 1)
    for k in range(len(quot) - 1, -1, -1):
        c = rem[k + len(den) - 1] * lead
        quot[k] = c
        if c:
            for j, d in enumerate(den):
                rem[k + j] -= c * d
    return trim(quot), trim(rem)


def evaluate(coeffs: Poly, t):
    acc = 0
    for c in reversed(coeffs):
        acc = acc * t + c
    return acc


def strip_unit(coeffs: Poly) -> Poly:
    """Remove the t^k factor and fix the sign so the lowest coefficient is positive."""
    c = list(trim(coeffs))
    k = 0
    while k < len(c) and c[k] == 0:
        k += 1
    c = c[k:]
    if c and c[0] < 0:
        c = [-x for x in c]
    return tuple(c)


def int_det(rows: Sequence[Sequence[int]]) -> int:
    """Determinant of an integer matrix by Bareiss fraction-free elimination."""
    a = [list(r) for r in rows]
    n = len(a)
    if n == 0:
        return 1
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            for r in range(k + 1, n):
                if a[r][k] != 0:
                    a[k], a[r] = a[r], a[k]
                    sign = -sign
                    break
            else:
                return 0
        akk = a[k][k]
        rowk = a[k]
        for i in range(k + 1, n):
            rowi = a[i]
            aik = rowi[k]
            for j in range(k + 1, n):
                rowi[j] = (akk * rowi[j] - aik * rowk[j]) // prev
            rowi[k] = 0
        prev = akk
    return sign * a[n - 1][n - 1]


def interpolate(values: Sequence[int]) -> Poly:
    """Integer-valued polynomial through (0, values[0]), (1, values[1]), ...

    Newton forward differences; the result must have integer coefficients.
    """
    n = len(values)
    diffs = [Fraction(v) for v in values]
    newton = []
    for k in range(n):
        newton.append(diffs[0])
        diffs = [(diffs[i + 1] - diffs[i]) / (k + 1) for i in range(len(diffs) - 1)]
    # sum_k newton[k] * t(t-1)...(t-k+1)
    coeffs = [Fraction(0)] * n
    basis = [Fraction(1)]
    for k in range(n):
        for i, b in enumerate(basis):
            coeffs[i] += newton[k] * b
        nxt = [Fraction(0)] * (len(basis) + 1)
        for i, b in enumerate(basis):
            nxt[i + 1] += b
            nxt[i] -= k * b
        basis = nxt
    out = []
    for c in coeffs:
        if c.denominator != 1:
            raise ArithmeticError("interpolated polynomial is not integral")
        out.append(int(c))
    return trim(out)


@lru_cache(maxsize=256)
def cyclotomic(n: int) -> Poly:
    """The n-th cyclotomic polynomial."""
    num: Poly = trim([-1] + [0] * (n - 1) + [1])
    for d in range(1, n):
        if n % d == 0:
            num, rem = divmod_exact(num, cyclotomic(d))
            assert not rem
    return num


def totient(n: int) -> int:
    result, m, f = n, n, 2
    while f * f <= m:
        if m % f == 0:
            while m % f == 0:
                m //= f
            result -= result // f
        f += 1
    if m > 1:
        result -= result // m
    return result


def vanishes_at_root_of_unity(coeffs: Poly, x: Fraction) -> bool:
    """True when the polynomial is zero at exp(2 pi i x), decided exactly."""
    coeffs = trim(coeffs)
    if not coeffs:
        return True
    order = Fraction(x).denominator
    if totient(order) > len(coeffs) - 1:
        return False
    _, rem = divmod_exact(coeffs, cyclotomic(order))
    return not rem

