"""Slice obstructions for twist knots K_n and twisted doubles D_n(K).

A verdict is an obstruction or the absence of one; ``NoObstruction`` never
asserts that a knot is slice.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from fractions import Fraction
from math import isqrt

from ltsig.knots import TorusKnotParams, is_perfect_square, twist_seifert_matrix
from ltsig.signature import signature_at
from ltsig.torus import l2_closed_form


class Verdict(str, enum.Enum):
    OBSTRUCTED_SIGNATURE = "ObstructedSignature"
    OBSTRUCTED_FOX_MILNOR = "ObstructedFoxMilnor"
    OBSTRUCTED_L2 = "ObstructedLTwo"
    NO_OBSTRUCTION = "NoObstruction"


@dataclass(frozen=True)
class SliceVerdict:
    verdict: Verdict
    witness: dict = field(default_factory=dict)
    reason: str = ""

    @property
    def obstructed(self) -> bool:
        return self.verdict is not Verdict.NO_OBSTRUCTION


def _m_from_n(n: int) -> int | None:
    """m >= 0 with n = m(m+1), if any."""
    if n < 0 or not is_perfect_square(4 * n + 1):
        return None
    return (isqrt(4 * n + 1) - 1) // 2


def twist_verdict(n: int) -> SliceVerdict:
    """Slice obstruction for the twist knot K_n."""
    n = int(n)
    if n == 0:
        return SliceVerdict(
            Verdict.NO_OBSTRUCTION,
            {"n": 0},
            "K_0 is the unknot",
        )
    if n < 0:
        # both roots of Delta lie on the circle, symmetric about x = 1/2,
        # so x = 1/2 is the midpoint of the sector between them
        x = Fraction(1, 2)
        sigma = signature_at(twist_seifert_matrix(n), x)
        if sigma == 0:
            raise ArithmeticError(f"sigma_(-1)(K_{n}) vanished; expected a nonzero signature")
        return SliceVerdict(
            Verdict.OBSTRUCTED_SIGNATURE,
            {"n": n, "x": x, "signature": sigma},
            "nonzero omega-signature at omega = -1",
        )
    disc = 4 * n + 1
    if not is_perfect_square(disc):
        return SliceVerdict(
            Verdict.OBSTRUCTED_FOX_MILNOR,
            {"n": n, "discriminant": disc},
            "4n+1 is not a square, so Delta does not factor as f(t)f(1/t)",
        )
    m = _m_from_n(n)
    if m == 1:
        return SliceVerdict(
            Verdict.NO_OBSTRUCTION,
            {"n": n, "m": m},
            "zero-framed curve is T(1,2), the unknot; K_2 is slice",
        )
    value = l2_closed_form(TorusKnotParams(m, m + 1))
    return SliceVerdict(
        Verdict.OBSTRUCTED_L2,
        {"n": n, "m": m, "torus": (m, m + 1), "l2": value},
        f"L2 signature of the self-linking-zero curve T({m},{m + 1}) is nonzero",
    )


def double_candidates(s_k) -> list[int]:
    """Twisting numbers n = m(m+1) > 0 with 3 s_K = (m - 1)(m + 2).

    These are the only n for which D_n(K) can be slice, given the L2
    signature s_K of the companion K.
    """
    s_k = Fraction(s_k)
    c = 2 + 3 * s_k
    if c.denominator != 1:
        return []
    disc = 1 + 4 * int(c)
    if not is_perfect_square(disc):
        return []
    root = isqrt(disc)
    out = set()
    for m in ((-1 + root) // 2, (-1 - root) // 2):
        if (m - 1) * (m + 2) == 3 * s_k and m * (m + 1) > 0:
            out.add(m * (m + 1))
    return sorted(out)


def connected_sum_l2(a, b) -> Fraction:
    """L2 signature is additive under connected sum."""
    return Fraction(a) + Fraction(b)
