"""Lattice counting and closed forms for torus knot signatures.

Everything here is exact integer / Fraction arithmetic.  Jumps are indexed by
the integer n with the circle point n/pq.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from ltsig import kernels
from ltsig.knots import DomainError, TorusKnotParams, as_params
from ltsig.signature import SignatureProfile


@dataclass(frozen=True)
class IntroDecomposition:
    """n = a p + b q with 0 < a < q; ``sign`` is the sign of b."""

    n: int
    a: int
    b: int
    sign: int


def _is_multiple(params: TorusKnotParams, n: int) -> bool:
    return n % params.p == 0 or n % params.q == 0


def lattice_count(params, n: int) -> int:
    """|L(n)|: pairs (i, j) with i q + j p = n, 0 <= i <= p, 0 <= j <= q."""
    params = as_params(params)
    p, q = params.p, params.q
    if not 0 < n < 2 * p * q:
        raise DomainError(f"n = {n} outside (0, 2pq)")
    count = 0
    for i in range(p + 1):
        rest = n - i * q
        if rest >= 0 and rest % p == 0 and rest // p <= q:
            count += 1
    return count


def jump_by_cases(params, n: int) -> int:
    """Jump at n/pq by the case split: 0 on multiples, else +1 iff |L(n)| = 1."""
    params = as_params(params)
    if not 0 < n < params.pq:
        raise DomainError(f"n = {n} outside (0, pq)")
    if _is_multiple(params, n):
        return 0
    return 1 if lattice_count(params, n) == 1 else -1


def jump_litherland(params, n: int) -> int:
    """Jump at n/pq as |L(n)| - |L(pq + n)|."""
    params = as_params(params)
    if not 0 < n < params.pq:
        raise DomainError(f"n = {n} outside (0, pq)")
    return lattice_count(params, n) - lattice_count(params, params.pq + n)


def jump_torus(params, n: int) -> int:
    """j_{p,q}(n/pq) in {-1, 0, 1}; both lattice routes must agree."""
    by_cases = jump_by_cases(params, n)
    litherland = jump_litherland(params, n)
    if by_cases != litherland:
        raise ArithmeticError(
            f"jump routes disagree at n={n}: cases {by_cases}, Litherland {litherland}"
        )
    return by_cases


def jump_table(params) -> list[int]:
    """All jumps j(n/pq) for n = 0..pq-1 (entry 0 is 0), from the fast kernel."""
    params = as_params(params)
    return list(kernels.jump_table(params.p, params.q))


def jump_profile(params) -> SignatureProfile:
    """Signature profile of T(p,q) from the kernel jump table."""
    params = as_params(params)
    table = jump_table(params)
    pq = params.pq
    ns = [n for n in range(1, pq) if not _is_multiple(params, n)]
    return SignatureProfile.from_jumps([Fraction(n, pq) for n in ns], [table[n] for n in ns])


def intro_decompose(params, n: int) -> IntroDecomposition:
    """The unique n = a p + b q with 0 < a < q."""
    params = as_params(params)
    p, q = params.p, params.q
    if not 0 < n < params.pq:
        raise DomainError(f"n = {n} outside (0, pq)")
    if _is_multiple(params, n):
        raise DomainError(f"n = {n} is a multiple of p or q")
    a = (n * pow(p, -1, q)) % q
    b = (n - a * p) // q
    return IntroDecomposition(n, a, b, 1 if b > 0 else -1)


def intro_sign(params, n: int) -> int:
    """Sign of b in n = a p + b q with 0 < a < q; 0 on multiples of p or q."""
    params = as_params(params)
    if _is_multiple(params, n):
        return 0
    return intro_decompose(params, n).sign


def partial_sum_series(params) -> list[int]:
    """[s(1), ..., s(pq - 1)] with s(n) = j(1) + ... + j(n)."""
    params = as_params(params)
    out, acc = [], 0
    for n in range(1, params.pq):
        acc += intro_sign(params, n)
        out.append(acc)
    return out


def doubled_partial_sums(params) -> list[int]:
    """The series 2 s(n) plotted against n."""
    return [2 * s for s in partial_sum_series(params)]


def set_S_members(params) -> list[int]:
    """Sorted members of {q x + p y : 0 < x < p, 0 < y < q} inside [1, pq - 1]."""
    params = as_params(params)
    p, q = params.p, params.q
    pq = params.pq
    found = set()
    for x in range(1, p):
        for y in range(1, q):
            n = q * x + p * y
            if n < pq:
                found.add(n)
    return sorted(found)


def mordell_sum(params) -> Fraction:
    """Closed form of the sum of S: pq(p-1)(q-1)/3 + (p-1)(q-1)(p+q+1)/12."""
    params = as_params(params)
    p, q = params.p, params.q
    return Fraction(p * q * (p - 1) * (q - 1), 3) + Fraction((p - 1) * (q - 1) * (p + q + 1), 12)


def representable(params, n: int) -> bool:
    """Whether n = i q + j p with i, j > 0."""
    params = as_params(params)
    p, q = params.p, params.q
    for i in range(1, p):
        rest = n - i * q
        if rest > 0 and rest % p == 0:
            return True
    return False


def oneof_check(params, n: int) -> tuple[bool, bool]:
    """(n representable, pq - n representable) for 1 <= n < pq off multiples."""
    params = as_params(params)
    if not 1 <= n <= params.pq - 1:
        raise DomainError(f"n = {n} outside [1, pq - 1]")
    if _is_multiple(params, n):
        raise DomainError(f"n = {n} is a multiple of p or q")
    return representable(params, n), representable(params, params.pq - n)


def l2_closed_form(params) -> Fraction:
    """-(p-1)(p+1)(q-1)(q+1) / (3pq)."""
    params = as_params(params)
    p, q = params.p, params.q
    return Fraction(-(p - 1) * (p + 1) * (q - 1) * (q + 1), 3 * p * q)


def l2_weighted_jump_form(params) -> Fraction:
    """(2/pq) * sum_{n=1}^{pq-1} (pq - n) j(n/pq), jumps from lattice enumeration."""
    params = as_params(params)
    pq = params.pq
    total = sum((pq - n) * jump_torus(params, n) for n in range(1, pq))
    return Fraction(2 * total, pq)


def _require_odd(params: TorusKnotParams) -> None:
    if params.p % 2 == 0 or params.q % 2 == 0:
        raise DomainError(f"({params.p}, {params.q}): p and q must both be odd")


def lattice_count_N(params) -> int:
    """#{(x, y): 1 <= x <= (p-1)/2, 1 <= y <= (q-1)/2, -p/2 < qx - py < 0}."""
    params = as_params(params)
    _require_odd(params)
    p, q = params.p, params.q
    count = 0
    for x in range(1, (p - 1) // 2 + 1):
        for y in range(1, (q - 1) // 2 + 1):
            d = q * x - p * y
            if -p < 2 * d and d < 0:
                count += 1
    return count


def hirzebruch_sigma_minus1(params) -> int:
    """sigma_{-1}(T(p,q)) = -((p-1)(q-1)/2 + 2(N_{p,q} + N_{q,p})) for odd p, q."""
    params = as_params(params)
    _require_odd(params)
    swapped = TorusKnotParams(params.q, params.p)
    return -((params.p - 1) * (params.q - 1) // 2 + 2 * (lattice_count_N(params) + lattice_count_N(swapped)))
