"""Screening genus-2 curves for mod-p Galois images induced from real quadratic fields.

The pipeline: enumerate candidate real quadratic discriminants from a curve's
model discriminant, test the trace condition a_q = 0 (mod p) at inert primes,
classify the mod-p image among the admissible subgroups of GSp4(F_p) by
Frobenius characteristic-polynomial statistics, and emit certificates that
separate what was proved from what the statistics merely support.
"""

__version__ = "0.1.0"

from .curve import (  # noqa: F401
    CurveError,
    GenusTwoCurve,
    discriminant,
    parse_curve,
    parse_curve_line,
    reduce_mod,
    render_curve,
    twist,
)
