"""L2 signature: the integral of the omega-signature over the circle, total measure 1."""

from __future__ import annotations

from fractions import Fraction
from typing import Sequence

from ltsig import torus
from ltsig.knots import SeifertMatrix, as_params, circle_breakpoints, torus_seifert_matrix
from ltsig.signature import (
    DEFAULT_PRECISION_BITS,
    InconsistentProfile,
    SignatureProfile,
    signature_profile,
)

ROUTES = ("closed", "weighted", "profile", "matrix")


def l2_from_profile(profile: SignatureProfile) -> Fraction:
    """2 * sum_{i<n} (x_{i+1} - x_i) * sum_{k<=i} j(x_k)."""
    pts = profile.breakpoints
    total = Fraction(0)
    cumulative = 0
    for (x0, j), (x1, _) in zip(pts, pts[1:]):
        cumulative += j
        total += (x1 - x0) * cumulative
    if pts and cumulative + pts[-1][1] != 0:
        raise InconsistentProfile("cumulative jump does not return to zero before x = 1")
    return 2 * total


def l2_torus(params, route: str = "closed", *, precision_bits: int = DEFAULT_PRECISION_BITS) -> Fraction:
    """L2 signature of T(p,q) by the chosen route.

    ``closed``: the rational closed form; ``weighted``: the weighted jump sum
    over lattice-enumerated jumps; ``profile``: the step-profile integral of
    the kernel jump table; ``matrix``: the step-profile integral of signatures
    of the braid Seifert matrix.
    """
    params = as_params(params)
    if route == "closed":
        return torus.l2_closed_form(params)
    if route == "weighted":
        return torus.l2_weighted_jump_form(params)
    if route == "profile":
        return l2_from_profile(torus.jump_profile(params))
    if route == "matrix":
        v = torus_seifert_matrix(params)
        return l2_generic(v, circle_breakpoints(params), precision_bits=precision_bits)
    raise ValueError(f"unknown route {route!r}; expected one of {ROUTES}")


def l2_generic(
    v: SeifertMatrix,
    breakpoints: Sequence[Fraction],
    *,
    precision_bits: int = DEFAULT_PRECISION_BITS,
) -> Fraction:
    """Integrate the matrix signature profile; zero when Delta has no circle roots."""
    if not breakpoints:
        return Fraction(0)
    return l2_from_profile(signature_profile(v, breakpoints, precision_bits=precision_bits))


def sector_integral(profile: SignatureProfile) -> Fraction:
    """sum over sectors of (width * signature); equals l2_from_profile."""
    cuts = [Fraction(0)] + profile.points + [Fraction(1)]
    return sum(
        ((b - a) * s for a, b, s in zip(cuts, cuts[1:], profile.sector_values())),
        Fraction(0),
    )
