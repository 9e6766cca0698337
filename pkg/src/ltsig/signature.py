"""Levine-Tristram signatures of Seifert matrices at rational points of the circle.

A point of the unit circle is a :class:`fractions.Fraction` ``x`` in [0, 1)
standing for omega = exp(2 pi i x).

Signatures are certified.  For 0 < x < 1 the form
``P = (1 - w) V + (1 - conj(w)) V^T`` is a positive multiple of
``S - i cot(pi x) K`` with ``S = V + V^T`` and ``K = V - V^T``; its real
embedding ``[[S, tau K], [-tau K, S]]`` has every eigenvalue of the
hermitian form twice.

The inertia of the embedding M is certified in two stages.  First a double
precision symmetric elimination P M P^T = L D L^T (1x1 / 2x2 pivots) gives a
congruence X = Q L^-1 P that nearly diagonalizes M; X M X^T is then enclosed
with rigorous floating-point error bounds and, if every Gershgorin disc
avoids zero, Sylvester's law of inertia gives the counts.  Otherwise the
elimination is redone in mpmath interval arithmetic at doubling precision up
to a ceiling.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

import mpmath
import numpy as np

from ltsig import _fallback, _poly
from ltsig.kernels import bk_factor
from ltsig.knots import AlexanderPolynomial, SeifertMatrix

log = logging.getLogger(__name__)

DEFAULT_PRECISION_BITS = 4096
_FIRST_INTERVAL_BITS = 128


class DegeneratePoint(ArithmeticError):
    """The hermitian form is singular at the requested point (a root of the Alexander polynomial)."""


class PrecisionExhausted(ArithmeticError):
    """Inertia could not be certified within the precision ceiling."""


class InconsistentProfile(ArithmeticError):
    """Sampled signatures are incompatible with the supplied breakpoints."""


def circle_point(x) -> Fraction:
    """Validate and convert to an exact point of [0, 1)."""
    if isinstance(x, float):
        raise TypeError("circle points must be exact rationals, not floats")
    x = Fraction(x)
    if not 0 <= x < 1:
        raise ValueError(f"circle point {x} outside [0, 1)")
    return x


@dataclass(frozen=True, eq=False)
class HermitianForm:
    """P = (1 - w) V + (1 - conj(w)) V^T evaluated at working precision."""

    matrix: mpmath.matrix
    seifert: SeifertMatrix
    x: Fraction
    precision: int

    @property
    def size(self) -> int:
        return self.seifert.size

    def to_numpy(self) -> np.ndarray:
        n = self.size
        return np.array(
            [[complex(self.matrix[i, j]) for j in range(n)] for i in range(n)],
            dtype=np.complex128,
        ).reshape(n, n)

    def hermitian_defect(self) -> float:
        """max |P - P^H| over entries."""
        n = self.size
        with mpmath.workprec(self.precision):
            worst = mpmath.mpf(0)
            for i in range(n):
                for j in range(n):
                    worst = max(worst, abs(self.matrix[i, j] - mpmath.conj(self.matrix[j, i])))
        return float(worst)

    def det(self) -> complex:
        if self.size == 0:
            return 1.0 + 0.0j
        with mpmath.workprec(self.precision):
            return complex(mpmath.det(self.matrix))


def assemble_form(v: SeifertMatrix, x, precision: int = 53) -> HermitianForm:
    """Hermitian matrix of the omega-signature at omega = exp(2 pi i x)."""
    x = circle_point(x)
    n = v.size
    with mpmath.workprec(precision):
        if x == 0:
            w = mpmath.mpc(1)
        elif x == Fraction(1, 2):
            w = mpmath.mpc(-1)
        else:
            w = mpmath.expjpi(2 * mpmath.mpf(x.numerator) / x.denominator)
        a, b = 1 - w, 1 - mpmath.conj(w)
        e = v.entries
        m = mpmath.matrix(n, n)
        for i in range(n):
            for j in range(n):
                m[i, j] = a * e[i][j] + b * e[j][i]
    return HermitianForm(m, v, x, precision)


def _split(v: SeifertMatrix) -> tuple[np.ndarray, np.ndarray]:
    arr = v.as_array()
    return arr + arr.T, arr - arr.T


_U = 2.0**-53


def _gamma(n: int) -> float:
    return n * _U / (1 - n * _U)


def _ball_embedding(v: SeifertMatrix, x: Fraction) -> tuple[np.ndarray, np.ndarray]:
    """Real embedding as (midpoint, radius) arrays enclosing the exact matrix."""
    s, k = _split(v)
    kf = k.astype(np.float64)
    if x == Fraction(1, 2):
        km, kr = np.zeros_like(kf), np.zeros_like(kf)
    else:
        with mpmath.workprec(113):
            tau = mpmath.cot(mpmath.pi * x.numerator / x.denominator)
        tm = float(tau)
        tr = abs(tm) * 2.0**-52 + 2.0**-1000
        km = tm * kf
        kr = (tr * np.abs(kf) + np.abs(km) * 2.0**-52) * (1 + 2.0**-50)
    sf = s.astype(np.float64)
    zeros = np.zeros_like(kf)
    mid = np.block([[sf, km], [-km, sf]])
    rad = np.block([[zeros, kr], [kr, zeros]])
    return mid, rad


def verified_inertia(mid: np.ndarray, rad: np.ndarray) -> tuple[int, int] | None:
    """(positive, negative) counts valid for every symmetric matrix within rad of mid, or None."""
    n = mid.shape[0]
    if n == 0:
        return 0, 0
    perm, lower, diag, offdiag = bk_factor(mid)
    with np.errstate(all="ignore"):
        try:
            linv = np.linalg.inv(lower)
        except np.linalg.LinAlgError:
            return None
        x = np.empty_like(linv)
        x[:, perm] = linv
        k = 0
        while k < n:
            if k + 1 < n and offdiag[k] != 0.0:
                block = np.array([[diag[k], offdiag[k]], [offdiag[k], diag[k + 1]]])
                if not np.all(np.isfinite(block)):
                    return None
                _, q = np.linalg.eigh(block)
                x[k:k + 2] = q.T @ x[k:k + 2]
                k += 2
            else:
                k += 1
        g = 2 * _gamma(n + 2)
        ax = np.abs(x)
        a1 = x @ mid
        e1 = g * (ax @ np.abs(mid)) + (ax @ rad) * (1 + g)
        gram = a1 @ x.T
        err = (g * (np.abs(a1) @ ax.T) + (e1 @ ax.T) * (1 + g)) * (1 + g)
        if not (np.all(np.isfinite(gram)) and np.all(np.isfinite(err))):
            return None
        off = np.abs(gram) + err
        np.fill_diagonal(off, 0.0)
        radius = (off.sum(axis=1) + np.diag(err)) * (1 + g) + 2.0**-900
        centre = np.diag(gram)
    if np.any(np.abs(centre) <= radius):
        return None
    return int(np.count_nonzero(centre > 0)), int(np.count_nonzero(centre < 0))


def _interval_inertia(v: SeifertMatrix, x: Fraction, bits: int) -> tuple[int, int] | None:
    iv = mpmath.iv
    old = iv.prec
    iv.prec = bits
    try:
        s, k = _split(v)
        if x == Fraction(1, 2):
            tau = iv.mpf(0)
        else:
            angle = iv.pi * iv.mpf(x.numerator) / x.denominator
            tau = iv.cos(angle) / iv.sin(angle)
        g = v.size
        n = 2 * g
        a = [[iv.mpf(0)] * n for _ in range(n)]
        for i in range(g):
            for j in range(g):
                a[i][j] = a[i + g][j + g] = iv.mpf(int(s[i, j]))
                a[i][j + g] = tau * int(k[i, j])
                a[i + g][j] = -tau * int(k[i, j])
        return _interval_eliminate(a)
    finally:
        iv.prec = old


def _interval_eliminate(a: list[list]) -> tuple[int, int] | None:
    pos = neg = 0
    idx = list(range(len(a)))
    while idx:
        mags = {i: abs(float(a[i][i].mid)) for i in idx}
        bi = max(idx, key=lambda i: mags[i])
        alpha = mags[bi]
        beta, rr, ss = 0.0, None, None
        for ii, i in enumerate(idx):
            for j in idx[ii + 1:]:
                m = abs(float(a[i][j].mid))
                if m > beta:
                    beta, rr, ss = m, i, j
        if alpha == 0.0 and beta == 0.0:
            return None
        if alpha >= _fallback.PIVOT_ALPHA * beta:
            piv = a[bi][bi]
            if 0 in piv:
                return None
            if piv.a > 0:
                pos += 1
            else:
                neg += 1
            idx.remove(bi)
            for i in idx:
                l = a[i][bi] / piv
                for j in idx:
                    a[i][j] = a[i][j] - l * a[bi][j]
            continue
        am, bm, cm = a[rr][rr], a[rr][ss], a[ss][ss]
        d = am * cm - bm * bm
        if 0 in d:
            return None
        if d.b < 0:
            pos += 1
            neg += 1
        else:
            tr = am + cm
            if 0 in tr:
                return None
            if tr.a > 0:
                pos += 2
            else:
                neg += 2
        e00, e01, e11 = cm / d, -bm / d, am / d
        idx.remove(rr)
        idx.remove(ss)
        for i in idx:
            x0 = a[i][rr] * e00 + a[i][ss] * e01
            x1 = a[i][rr] * e01 + a[i][ss] * e11
            for j in idx:
                a[i][j] = a[i][j] - x0 * a[rr][j] - x1 * a[ss][j]
    return pos, neg


def certified_inertia(
    v: SeifertMatrix, x, precision_bits: int = DEFAULT_PRECISION_BITS
) -> tuple[int, int] | None:
    """(positive, negative) eigenvalue counts of the form at x (0 < x < 1), or None.

    None means no certificate was found up to ``precision_bits``.
    """
    x = circle_point(x)
    if v.size == 0:
        return 0, 0
    mid, rad = _ball_embedding(v, x)
    got = verified_inertia(mid, rad)
    bits = _FIRST_INTERVAL_BITS
    while got is None and bits <= precision_bits:
        log.debug("escalating inertia at x=%s to %d bits", x, bits)
        got = _interval_inertia(v, x, bits)
        bits *= 2
    if got is None:
        return None
    pos, neg = got
    if pos % 2 or neg % 2:
        raise ArithmeticError("real embedding inertia must be even")
    return pos // 2, neg // 2


def _is_root(v: SeifertMatrix, x: Fraction, breakpoints: Iterable[Fraction] | None) -> bool:
    if breakpoints is not None:
        return x in set(breakpoints)
    return _poly.vanishes_at_root_of_unity(v.alexander.coefficients, x)


def signature_at(
    v: SeifertMatrix,
    x,
    *,
    breakpoints: Sequence[Fraction] | None = None,
    precision_bits: int = DEFAULT_PRECISION_BITS,
) -> int:
    """Signature of the form at omega = exp(2 pi i x), x not a root of Delta.

    With ``breakpoints`` (the exact circle roots of the Alexander
    polynomial) a listed point is rejected immediately; otherwise the root
    test is the exact cyclotomic divisibility of det(V - tV^T).
    """
    x = circle_point(x)
    if v.size == 0 or x == 0:
        return 0
    if breakpoints is not None and x in set(breakpoints):
        raise DegeneratePoint(f"x = {x} is a root of the Alexander polynomial")
    got = certified_inertia(v, x, precision_bits)
    if got is None:
        if _is_root(v, x, None):
            raise DegeneratePoint(f"x = {x} is a root of the Alexander polynomial")
        raise PrecisionExhausted(f"inertia at x = {x} not certified within {precision_bits} bits")
    pos, neg = got
    if pos + neg != v.size:
        raise DegeneratePoint(f"form is singular at x = {x}")
    return pos - neg


def signature_at_root_averaged(
    v: SeifertMatrix,
    x,
    gap,
    *,
    precision_bits: int = DEFAULT_PRECISION_BITS,
) -> Fraction:
    """Average of the one-sided signatures at x, sampled at x ± gap/2.

    ``gap`` must be positive with no other breakpoint in (x - gap, x + gap).
    """
    x = circle_point(x)
    gap = Fraction(gap)
    if gap <= 0:
        raise ValueError("gap must be positive")
    if v.size == 0:
        return Fraction(0)
    delta = gap / 2
    left = signature_at(v, (x - delta) % 1, precision_bits=precision_bits)
    right = signature_at(v, (x + delta) % 1, precision_bits=precision_bits)
    return Fraction(left + right, 2)


@dataclass(frozen=True)
class SignatureProfile:
    """Step function on the circle as sorted (point, jump) pairs; sigma = 0 at x = 0."""

    breakpoints: tuple[tuple[Fraction, int], ...] = ()

    def __post_init__(self) -> None:
        pts = tuple((Fraction(x), int(j)) for x, j in self.breakpoints)
        xs = [x for x, _ in pts]
        if xs != sorted(xs) or len(set(xs)) != len(xs):
            raise ValueError("profile breakpoints must be strictly increasing")
        if any(not 0 < x < 1 for x in xs):
            raise ValueError("profile breakpoints must lie in (0, 1)")
        object.__setattr__(self, "breakpoints", pts)

    @classmethod
    def from_jumps(cls, points: Sequence[Fraction], jumps: Sequence[int]) -> SignatureProfile:
        return cls(tuple(zip(points, jumps)))

    @property
    def points(self) -> list[Fraction]:
        return [x for x, _ in self.breakpoints]

    @property
    def jumps(self) -> list[int]:
        return [j for _, j in self.breakpoints]

    def __len__(self) -> int:
        return len(self.breakpoints)

    def total_jump(self) -> int:
        return sum(self.jumps)

    def sector_values(self) -> list[int]:
        """Signature on (0, x_1), (x_1, x_2), ..., (x_n, 1)."""
        out = [0]
        for _, j in self.breakpoints:
            out.append(out[-1] + 2 * j)
        return out

    def value_at(self, x) -> int:
        """2 * (sum of jumps at breakpoints < x); x must not be a breakpoint."""
        x = Fraction(x)
        total = 0
        for pt, j in self.breakpoints:
            if pt == x:
                raise DegeneratePoint(f"{x} is a breakpoint")
            if pt < x:
                total += j
        return 2 * total

    def negated(self) -> SignatureProfile:
        return SignatureProfile(tuple((x, -j) for x, j in self.breakpoints))

    def merge(self, other: SignatureProfile) -> SignatureProfile:
        """Profile of the connected sum: jumps add pointwise."""
        acc: dict[Fraction, int] = {}
        for x, j in self.breakpoints + other.breakpoints:
            acc[x] = acc.get(x, 0) + j
        return SignatureProfile(tuple(sorted(acc.items())))

    def without_zero_jumps(self) -> SignatureProfile:
        return SignatureProfile(tuple((x, j) for x, j in self.breakpoints if j))


def sample_points(breakpoints: Sequence[Fraction]) -> list[Fraction]:
    """Exact midpoints of the sectors cut out by the breakpoints (and 0, 1)."""
    cuts = [Fraction(0)] + list(breakpoints) + [Fraction(1)]
    return [(a + b) / 2 for a, b in zip(cuts, cuts[1:])]


def signature_profile(
    v: SeifertMatrix,
    breakpoints: Sequence[Fraction],
    *,
    precision_bits: int = DEFAULT_PRECISION_BITS,
) -> SignatureProfile:
    """Signature step profile from the matrix, sampled at sector midpoints."""
    pts = sorted(circle_point(b) for b in breakpoints)
    if v.size == 0:
        if pts:
            raise InconsistentProfile("unknot has no breakpoints")
        return SignatureProfile()
    values = [
        signature_at(v, m, breakpoints=pts, precision_bits=precision_bits)
        for m in sample_points(pts)
    ]
    if values[0] != 0:
        raise InconsistentProfile(f"signature {values[0]} next to x = 0, expected 0")
    jumps = []
    for left, right in zip(values, values[1:]):
        diff = right - left
        if diff % 2:
            raise InconsistentProfile(f"odd signature difference {diff}")
        jumps.append(diff // 2)
    if sum(jumps) != 0 or values[-1] != 0:
        raise InconsistentProfile(f"jumps sum to {sum(jumps)}, expected 0")
    return SignatureProfile(tuple(zip(pts, jumps)))


def determinant_identity_gap(v: SeifertMatrix, x, precision: int = 53) -> float:
    """| |det P| - |1 - w|^(2g) |Delta(w)| | at x, in working precision."""
    x = circle_point(x)
    form = assemble_form(v, x, precision)
    delta: AlexanderPolynomial = v.alexander
    with mpmath.workprec(precision):
        w = mpmath.expjpi(2 * mpmath.mpf(x.numerator) / x.denominator)
        rhs = abs(1 - w) ** v.size * abs(delta(w))
        lhs = abs(mpmath.det(form.matrix)) if v.size else mpmath.mpf(1)
        return float(abs(lhs - rhs))
