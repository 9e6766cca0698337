"""Levine-Tristram signatures, jump functions and L2 signatures of knots."""

from ltsig.knots import (
    AlexanderPolynomial,
    DomainError,
    SeifertMatrix,
    TorusKnotParams,
    alexander_polynomial,
    circle_breakpoints,
    torus_alexander_closed,
    torus_seifert_matrix,
    twist_seifert_matrix,
)
from ltsig.signature import (
    DegeneratePoint,
    HermitianForm,
    InconsistentProfile,
    PrecisionExhausted,
    SignatureProfile,
    assemble_form,
    signature_at,
    signature_at_root_averaged,
    signature_profile,
)
from ltsig.l2 import l2_from_profile, l2_generic, l2_torus
from ltsig.slice import SliceVerdict, connected_sum_l2, double_candidates, twist_verdict

__version__ = "0.1.0"

__all__ = [
    "AlexanderPolynomial",
    "DegeneratePoint",
    "DomainError",
    "HermitianForm",
    "InconsistentProfile",
    "PrecisionExhausted",
    "SeifertMatrix",
    "SignatureProfile",
    "SliceVerdict",
    "TorusKnotParams",
    "alexander_polynomial",
    "assemble_form",
    "circle_breakpoints",
    "connected_sum_l2",
    "double_candidates",
    "l2_from_profile",
    "l2_generic",
    "l2_torus",
    "signature_at",
    "signature_at_root_averaged",
    "signature_profile",
    "torus_alexander_closed",
    "torus_seifert_matrix",
    "twist_seifert_matrix",
    "twist_verdict",
]
